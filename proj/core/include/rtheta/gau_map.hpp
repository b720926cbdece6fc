#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtheta/dna.hpp"
#include "rtheta/ring.hpp"

namespace rtheta {

struct Dinucleotide {
    Nucleotide first = Nucleotide::A;
    Nucleotide second = Nucleotide::A;

    constexpr int code() const { return static_cast<int>(first) * 4 + static_cast<int>(second); }
    static constexpr Dinucleotide from_code(int c) {
        return {static_cast<Nucleotide>((c >> 2) & 3), static_cast<Nucleotide>(c & 3)};
    }
    std::string str() const { return {to_char(first), to_char(second)}; }

    friend constexpr bool operator==(Dinucleotide x, Dinucleotide y) {
        return x.first == y.first && x.second == y.second;
    }
};

constexpr Dinucleotide reverse(Dinucleotide d) { return {d.second, d.first}; }
constexpr Dinucleotide complement(Dinucleotide d) {
    return {complement(d.first), complement(d.second)};
}

// the six free entries of the 4x4 layout
struct GauParams {
    Elem a11, a22, a14, a23, a12, a13;
    friend bool operator==(const GauParams&, const GauParams&) = default;
};

using DinucleotideTable = std::array<Dinucleotide, 16>;  // indexed by Elem::index()

// outcome of validating an arbitrary element -> dinucleotide table
struct TableCheck {
    bool bijective = false;
    std::optional<Elem> lambda;            // inferred from the image of 0; unset if invalid
    std::vector<Elem> reverse_failures;    // x with phi^-1(phi(x)^r) != 3x
    std::vector<Elem> complement_failures; // x with phi^-1(phi(x)^c) != x + lambda
    // cells disagreeing with the layout equations anchored at row A; this
    // localizes which table entries are corrupted
    std::vector<Dinucleotide> fill_mismatches;

    bool ok() const {
        return bijective && lambda.has_value() && reverse_failures.empty() &&
               complement_failures.empty() && fill_mismatches.empty();
    }
};

TableCheck check_table(const DinucleotideTable& table);

// Bijection between the sixteen ring elements and dinucleotides satisfying
// phi(3x) = phi(x)^r and phi(x + lambda) = phi(x)^c. Independent of theta:
// both identities only use the additive structure.
class GauMap {
public:
    // validates the layout conditions, fills the 4x4 matrix, then asserts
    // bijectivity and both identities
    static GauMap build(Elem lambda, const GauParams& params);
    static GauMap from_table(const DinucleotideTable& table);

    // lambda = 2+2w, parameters (2+2w, 2w, 1+w, 3+w, 1, w)
    static const GauMap& canonical();
    // canonical for lambda = 2+2w, first enumerated map otherwise
    static GauMap default_for(Elem lambda);

    Elem lambda() const { return lambda_; }
    const std::optional<GauParams>& params() const { return params_; }

    Dinucleotide image(Elem x) const { return to_dna_[x.index()]; }
    Elem preimage(Dinucleotide d) const { return from_dna_[d.code()]; }
    Elem at(int row, int col) const { return preimage(Dinucleotide::from_code(row * 4 + col)); }
    int row_of(Elem x) const { return static_cast<int>(image(x).first); }
    int col_of(Elem x) const { return static_cast<int>(image(x).second); }

    const DinucleotideTable& table() const { return to_dna_; }

    // 16 lines "element<TAB>dinucleotide" in canonical element order
    std::string to_table_text() const;

    friend bool operator==(const GauMap& x, const GauMap& y) { return x.to_dna_ == y.to_dna_; }

private:
    GauMap() = default;
    Elem lambda_;
    std::optional<GauParams> params_;
    DinucleotideTable to_dna_{};
    std::array<Elem, 16> from_dna_{};
};

// all valid maps for one lambda, deduplicated by table, deterministic order
std::vector<GauMap> enumerate_gau_maps(Elem lambda);

// 0 iff same cell; 1 iff same row xor same column; 2 otherwise
int gau_distance(const GauMap& map, Elem x, Elem y);
// the same value through the index formula min{1, i+3i'} + min{1, j+3j'} over Z4
int gau_distance_by_indices(const GauMap& map, Elem x, Elem y);

long gau_distance(const GauMap& map, std::span<const Elem> x, std::span<const Elem> y);

DnaWord encode(const GauMap& map, std::span<const Elem> x);
std::vector<Elem> decode(const GauMap& map, const DnaWord& w);  // throws OddLength

// ring word u with phi(u) = phi(x)^r, namely 3 * reverse(x)
Word reverse_preimage(std::span<const Elem> x);
// ring word u with phi(u) = phi(x)^c, namely x + lambda at every coordinate
Word complement_preimage(Elem lambda, std::span<const Elem> x);

DinucleotideTable parse_table_text(std::string_view text);  // throws ParseError

}  // namespace rtheta
