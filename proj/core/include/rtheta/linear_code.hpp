#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtheta/gau_map.hpp"
#include "rtheta/ring.hpp"

namespace rtheta {

// 4 bits per coordinate (Elem::index), coordinate 0 in the low nibble; n <= 16
std::uint64_t pack_word(std::span<const Elem> w);
Word unpack_word(std::uint64_t key, std::size_t n);
// componentwise mod-4 addition on packed words
std::uint64_t add_packed(std::uint64_t x, std::uint64_t y);
// number of nonzero coordinates
int packed_weight(std::uint64_t x);

using Mat = std::vector<Word>;

// {k0,k1} for the 2-block standard form, {k0,k1,k2,k3} for the 4-block one
struct Profile {
    std::vector<int> ks;
    friend bool operator==(const Profile&, const Profile&) = default;
};

struct GeneratorMatrix {
    Elem theta;
    std::size_t n = 0;
    Mat rows;
    std::optional<Profile> profile;
};

// theta in {1+w, 3+w, 1+3w, 3+3w}: rows (I A01 A02 / 0 2I 2A12)
GeneratorMatrix standard_form_generator(Elem theta, int k0, int k1, int n, const Mat& a01,
                                        const Mat& a02, const Mat& a12);

struct StdBlocks {
    Mat a01, a02, a03, a04, a12, a13, a14, a23, a24, a34;
};
// theta in {2, 2+2w}: diagonal scales (1, w, 2, 2w);
// theta in {3, 1+2w}: diagonal scales (1, 1+w, 2, 2+2w)
GeneratorMatrix standard_form_generator(Elem theta, std::array<int, 4> ks, int n,
                                        const StdBlocks& blocks);

// Materialized set of codewords, sorted by packed value.
class CodewordSet {
public:
    CodewordSet(Elem theta, std::size_t n, std::vector<std::uint64_t> words);
    static CodewordSet from_words(Elem theta, std::size_t n, const std::vector<Word>& words);

    Elem theta() const { return theta_; }
    std::size_t length() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::uint64_t>& packed() const { return words_; }

    bool contains_packed(std::uint64_t key) const;
    bool contains(std::span<const Elem> w) const;
    Word word(std::size_t i) const { return unpack_word(words_[i], n_); }

    friend bool operator==(const CodewordSet& x, const CodewordSet& y) {
        return x.theta_ == y.theta_ && x.n_ == y.n_ && x.words_ == y.words_;
    }

private:
    Elem theta_;
    std::size_t n_;
    std::vector<std::uint64_t> words_;
};

inline constexpr std::uint64_t kDefaultSpanGuard = 1ull << 30;

// Row span. Coefficients per row are reduced to the distinct scalar multiples
// of that row; the enumerated sums are deduplicated afterwards.
CodewordSet span(const GeneratorMatrix& g, std::uint64_t guard = kDefaultSpanGuard);

struct LinearCode {
    GeneratorMatrix generator;
    CodewordSet words;
};
LinearCode make_code(GeneratorMatrix g, std::uint64_t guard = kDefaultSpanGuard);

// Exact minimum over all unordered pairs. The Gau distance is not translation
// invariant, so there is no weight shortcut; above the pairwise guard the
// minimum is taken over difference words c, evaluated against the projection
// of the code onto supp(c), walking weight levels upward. Both tiers are exact.
int min_gau_distance(const LinearCode& code, const GauMap& map,
                     std::size_t pairwise_guard = 8192);
// pairwise-only variant for plain sets
int min_gau_distance(const CodewordSet& code, const GauMap& map,
                     std::size_t pairwise_guard = 8192);

// closed-form parity matrix for a profiled standard-form generator over a
// chain ring; the dual carries the transposed profile
GeneratorMatrix dual_generator(const GeneratorMatrix& g);

// {x in R^n : [x, row] = 0 for every generator row}; scans 16^n vectors
CodewordSet dual_brute_force(const GeneratorMatrix& g, int max_n = 6);
// annihilators of an arbitrary word set
CodewordSet annihilator_set(const CodewordSet& code, int max_n = 6);

bool is_self_dual(const LinearCode& code, int max_n = 6);

struct TrivialSelfDualReport {
    CodewordSet code;            // the constant-word code over the alphabet
    std::vector<Elem> alphabet;  // R, Z_theta, or {0,2,2w,2+2w} by n mod 4
    bool self_orthogonal = false;
    bool cardinality_matches = false;  // |code|^2 == 16^n
    std::optional<bool> self_dual;     // oracle verdict when n within guard
};
TrivialSelfDualReport trivial_self_dual_candidate(Elem theta, int n, int oracle_max_n = 6);

// which of the constant words 2, 2w, 2+2w designated for theta's class lies in
// the code (all three checked for the 3-ideal class and for non-chain rings)
std::optional<Elem> torsion_word_presence(const CodewordSet& code);

struct CirculantVerdicts {
    bool all_units = false;
    std::optional<bool> self_dual;  // oracle, small n only
    bool reverse_closed = false;
    bool rc_closed = false;
};
struct CirculantCode {
    LinearCode code;
    CirculantVerdicts verdicts;
};
// G = (u*I_n | circulant(a)), k = n rows, 2n columns
CirculantCode circulant_selfdual_generator(Elem theta, Elem u, const Word& a,
                                           std::uint64_t span_guard = kDefaultSpanGuard,
                                           int dual_max_n = 6);

// true iff 3*reverse(row) lies in the span for every generator row; by the
// reverse-transfer identity this is the reversibility of the DNA image under
// any valid map
bool check_reverse_constraint(const LinearCode& code);
// true iff the all-lambda word lies in the span
bool check_complement_constraint(const LinearCode& code, Elem lambda);

std::string generator_to_json(const GeneratorMatrix& g);
GeneratorMatrix generator_from_json(const std::string& text);

std::string codewords_to_csv(const CodewordSet& code);
CodewordSet codewords_from_csv(Elem theta, const std::string& text);

DnaCode dna_image(const CodewordSet& code, const GauMap& map,
                  std::size_t word_guard = 1u << 20);

}  // namespace rtheta
