#include "rtheta/ring.hpp"

#include <algorithm>
#include <cctype>

namespace rtheta {

std::string to_string(Elem x) {
    if (x.a == 0 && x.b == 0) return "0";
    std::string s;
    if (x.a != 0) s += static_cast<char>('0' + x.a);
    if (x.b != 0) {
        if (!s.empty()) s += '+';
        if (x.b != 1) s += static_cast<char>('0' + x.b);
        s += 'w';
    }
    return s;
}

namespace {

int digit_or_minus_one(char c) { return (c >= '0' && c <= '3') ? c - '0' : -1; }

// one term: "d", "w", "dw"; returns (coefficient, is_w_term)
std::pair<int, bool> parse_term(std::string_view t, std::string_view whole) {
    if (t.empty()) throw ParseError("empty term in ring element '" + std::string(whole) + "'");
    bool has_w = t.back() == 'w';
    if (has_w) t.remove_suffix(1);
    if (t.empty()) {
        if (!has_w) throw ParseError("empty term in ring element '" + std::string(whole) + "'");
        return {1, true};
    }
    if (t.size() != 1 || digit_or_minus_one(t[0]) < 0)
        throw ParseError("bad coefficient in ring element '" + std::string(whole) + "'");
    return {digit_or_minus_one(t[0]), has_w};
}

}  // namespace

Elem parse_elem(std::string_view s) {
    std::string cleaned;
    cleaned.reserve(s.size());
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    if (cleaned.empty()) throw ParseError("empty ring element");

    int a = 0, b = 0;
    bool seen_a = false, seen_b = false;
    std::size_t pos = 0;
    while (pos <= cleaned.size()) {
        std::size_t plus = cleaned.find('+', pos);
        std::string_view term = std::string_view(cleaned).substr(
            pos, (plus == std::string::npos ? cleaned.size() : plus) - pos);
        auto [coeff, is_w] = parse_term(term, s);
        if (is_w) {
            if (seen_b) throw ParseError("repeated w term in '" + std::string(s) + "'");
            b = coeff;
            seen_b = true;
        } else {
            if (seen_a) throw ParseError("repeated constant term in '" + std::string(s) + "'");
            a = coeff;
            seen_a = true;
        }
        if (plus == std::string::npos) break;
        pos = plus + 1;
        if (pos == cleaned.size()) throw ParseError("trailing '+' in '" + std::string(s) + "'");
    }
    return elem(a, b);
}

Ring::Ring(Elem theta) : theta_(theta) {
    for (Elem x : kAllElements)
        for (Elem y : kAllElements) table_[x.index()][y.index()] = rtheta::mul(theta, x, y);

    inverse_.fill(-1);
    for (Elem x : kAllElements) {
        for (Elem y : kAllElements) {
            if (mul(x, y) == kOne) {
                inverse_[x.index()] = static_cast<std::int8_t>(y.index());
                break;
            }
        }
        if (inverse_[x.index()] >= 0)
            units_.push_back(x);
        else
            zero_divisors_.push_back(x);
    }

    // distinct principal ideals <g> = R*g
    for (Elem g : kAllElements) {
        std::vector<Elem> ideal;
        ideal.reserve(16);
        for (Elem r : kAllElements) ideal.push_back(mul(r, g));
        std::sort(ideal.begin(), ideal.end());
        ideal.erase(std::unique(ideal.begin(), ideal.end()), ideal.end());
        if (std::find(principal_ideals_.begin(), principal_ideals_.end(), ideal) ==
            principal_ideals_.end())
            principal_ideals_.push_back(ideal);
    }
    std::sort(principal_ideals_.begin(), principal_ideals_.end(),
              [](const auto& p, const auto& q) {
                  return p.size() != q.size() ? p.size() < q.size() : p < q;
              });

    // chain <=> principal ideals totally ordered by inclusion (every ideal is a
    // finite sum of principal ones, hence equals the largest of them)
    chain_ = true;
    for (std::size_t i = 0; i + 1 < principal_ideals_.size() && chain_; ++i) {
        const auto& small = principal_ideals_[i];
        const auto& big = principal_ideals_[i + 1];
        chain_ = std::includes(big.begin(), big.end(), small.begin(), small.end());
    }
}

const Ring& Ring::of(Elem theta) {
    static const std::array<Ring, 16> rings = [] {
        return std::array<Ring, 16>{
            Ring(Elem::from_index(0)),  Ring(Elem::from_index(1)),  Ring(Elem::from_index(2)),
            Ring(Elem::from_index(3)),  Ring(Elem::from_index(4)),  Ring(Elem::from_index(5)),
            Ring(Elem::from_index(6)),  Ring(Elem::from_index(7)),  Ring(Elem::from_index(8)),
            Ring(Elem::from_index(9)),  Ring(Elem::from_index(10)), Ring(Elem::from_index(11)),
            Ring(Elem::from_index(12)), Ring(Elem::from_index(13)), Ring(Elem::from_index(14)),
            Ring(Elem::from_index(15))};
    }();
    return rings[theta.index()];
}

std::vector<std::vector<Elem>> Ring::ideal_chain() const {
    if (!chain_)
        throw NonChainRing("theta = " + to_string(theta_) +
                           " is not a chain ring; it has no ideal chain");
    return principal_ideals_;
}

Elem Ring::inner_product(std::span<const Elem> x, std::span<const Elem> y) const {
    if (x.size() != y.size())
        throw LengthMismatch("inner product of words of length " + std::to_string(x.size()) +
                             " and " + std::to_string(y.size()));
    Elem acc = kZero;
    for (std::size_t i = 0; i < x.size(); ++i) acc = rtheta::add(acc, mul(x[i], y[i]));
    return acc;
}

Word reversed(std::span<const Elem> x) { return Word(x.rbegin(), x.rend()); }

Word scalar_mul(const Ring& ring, Elem c, std::span<const Elem> x) {
    Word out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = ring.mul(c, x[i]);
    return out;
}

Word add(std::span<const Elem> x, std::span<const Elem> y) {
    if (x.size() != y.size())
        throw LengthMismatch("adding words of length " + std::to_string(x.size()) + " and " +
                             std::to_string(y.size()));
    Word out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = add(x[i], y[i]);
    return out;
}

Word constant_word(Elem x, std::size_t n) { return Word(n, x); }

std::string to_string(std::span<const Elem> word) {
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += ',';
        s += to_string(word[i]);
    }
    return s;
}

Word parse_word(std::string_view line) {
    Word out;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        std::string_view tok =
            line.substr(pos, (comma == std::string_view::npos ? line.size() : comma) - pos);
        out.push_back(parse_elem(tok));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace rtheta
