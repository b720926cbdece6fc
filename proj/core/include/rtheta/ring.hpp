#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rtheta/errors.hpp"

namespace rtheta {

// Element a + w*b of Z4 + w*Z4. Addition is independent of the ring parameter;
// multiplication needs w^2 = theta and normally goes through Ring.
struct Elem {
    std::uint8_t a = 0;
    std::uint8_t b = 0;

    friend constexpr bool operator==(Elem x, Elem y) { return x.a == y.a && x.b == y.b; }
    friend constexpr bool operator!=(Elem x, Elem y) { return !(x == y); }
    // canonical order: lexicographic on (a, b)
    friend constexpr bool operator<(Elem x, Elem y) { return x.a != y.a ? x.a < y.a : x.b < y.b; }

    // 0..15, consistent with the canonical order
    constexpr int index() const { return a * 4 + b; }
    static constexpr Elem from_index(int i) {
        return {static_cast<std::uint8_t>((i >> 2) & 3), static_cast<std::uint8_t>(i & 3)};
    }
};

constexpr Elem elem(int a, int b) {
    return {static_cast<std::uint8_t>(((a % 4) + 4) % 4),
            static_cast<std::uint8_t>(((b % 4) + 4) % 4)};
}

constexpr Elem add(Elem x, Elem y) {
    return {static_cast<std::uint8_t>((x.a + y.a) & 3), static_cast<std::uint8_t>((x.b + y.b) & 3)};
}
constexpr Elem neg(Elem x) {
    return {static_cast<std::uint8_t>((4 - x.a) & 3), static_cast<std::uint8_t>((4 - x.b) & 3)};
}
constexpr Elem sub(Elem x, Elem y) { return add(x, neg(y)); }
constexpr Elem twice(Elem x) { return add(x, x); }
constexpr Elem triple(Elem x) { return add(twice(x), x); }

// (a + wb)(c + wd) = (ac + bd*theta_a) + w(ad + bc + bd*theta_b), componentwise mod 4
constexpr Elem mul(Elem theta, Elem x, Elem y) {
    const int bd = x.b * y.b;
    return {static_cast<std::uint8_t>((x.a * y.a + bd * theta.a) & 3),
            static_cast<std::uint8_t>((x.a * y.b + x.b * y.a + bd * theta.b) & 3)};
}

inline constexpr Elem kZero = elem(0, 0);
inline constexpr Elem kOne = elem(1, 0);
inline constexpr Elem kTwo = elem(2, 0);
inline constexpr Elem kW = elem(0, 1);
inline constexpr Elem kTwoW = elem(0, 2);
inline constexpr Elem kTwoPlusTwoW = elem(2, 2);

// the three admissible complement shifts
inline constexpr std::array<Elem, 3> kLambdas = {kTwo, kTwoW, kTwoPlusTwoW};
// {x : 2x = 0}, canonical order
inline constexpr std::array<Elem, 4> kTwoTorsion = {kZero, kTwoW, kTwo, kTwoPlusTwoW};

constexpr std::array<Elem, 16> all_elements() {
    std::array<Elem, 16> xs{};
    for (int i = 0; i < 16; ++i) xs[i] = Elem::from_index(i);
    return xs;
}
inline constexpr std::array<Elem, 16> kAllElements = all_elements();

std::string to_string(Elem x);
// accepts "a+bw" and the compact spellings "0", "2", "w", "2w", "1+w", ...
Elem parse_elem(std::string_view s);

enum class Classification { Chain, NonChain };

// One of the sixteen rings Z4 + wZ4, w^2 = theta, with its structure tables.
class Ring {
public:
    explicit Ring(Elem theta);

    // cached instance per theta
    static const Ring& of(Elem theta);

    Elem theta() const { return theta_; }
    Classification classification() const {
        return chain_ ? Classification::Chain : Classification::NonChain;
    }
    bool is_chain() const { return chain_; }

    Elem mul(Elem x, Elem y) const { return table_[x.index()][y.index()]; }
    bool is_unit(Elem x) const { return inverse_[x.index()] >= 0; }
    std::optional<Elem> inverse(Elem x) const {
        const int i = inverse_[x.index()];
        if (i < 0) return std::nullopt;
        return Elem::from_index(i);
    }

    const std::vector<Elem>& units() const { return units_; }
    const std::vector<Elem>& zero_divisors() const { return zero_divisors_; }

    // distinct principal ideals <g> = R*g, sorted by size then lexicographically
    const std::vector<std::vector<Elem>>& principal_ideals() const { return principal_ideals_; }
    // chain rings only: the full ideal lattice ordered by inclusion
    std::vector<std::vector<Elem>> ideal_chain() const;

    Elem inner_product(std::span<const Elem> x, std::span<const Elem> y) const;

private:
    Elem theta_;
    std::array<std::array<Elem, 16>, 16> table_{};
    std::array<std::int8_t, 16> inverse_{};
    std::vector<Elem> units_;
    std::vector<Elem> zero_divisors_;
    std::vector<std::vector<Elem>> principal_ideals_;
    bool chain_ = false;
};

using Word = std::vector<Elem>;

Word reversed(std::span<const Elem> x);
Word scalar_mul(const Ring& ring, Elem c, std::span<const Elem> x);
Word add(std::span<const Elem> x, std::span<const Elem> y);
Word constant_word(Elem x, std::size_t n);

std::string to_string(std::span<const Elem> word);   // comma separated
Word parse_word(std::string_view line);

}  // namespace rtheta
