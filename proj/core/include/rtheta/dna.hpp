#pragma once

#include <cstdint>
#include <iosfwd>
#include <numeric>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "rtheta/errors.hpp"

namespace rtheta {

// row/column order of the dinucleotide layout
enum class Nucleotide : std::uint8_t { A = 0, G = 1, C = 2, T = 3 };

constexpr char to_char(Nucleotide n) { return "AGCT"[static_cast<int>(n)]; }
Nucleotide nucleotide_from_char(char c);

// Watson-Crick: A<->T, G<->C
constexpr Nucleotide complement(Nucleotide n) {
    return static_cast<Nucleotide>(3 - static_cast<int>(n));
}

// String over {A, C, G, T}; validated on construction.
class DnaWord {
public:
    DnaWord() = default;
    explicit DnaWord(std::string seq);
    static DnaWord from_nucleotides(const std::vector<Nucleotide>& nts);

    const std::string& str() const { return seq_; }
    std::size_t size() const { return seq_.size(); }
    Nucleotide at(std::size_t i) const { return nucleotide_from_char(seq_[i]); }

    friend bool operator==(const DnaWord& x, const DnaWord& y) { return x.seq_ == y.seq_; }
    friend bool operator<(const DnaWord& x, const DnaWord& y) { return x.seq_ < y.seq_; }

private:
    std::string seq_;
};

DnaWord reverse(const DnaWord& w);
DnaWord complement(const DnaWord& w);
DnaWord reverse_complement(const DnaWord& w);

int hamming(const DnaWord& x, const DnaWord& y);  // throws LengthMismatch

// exact fraction num/den in lowest terms
struct Ratio {
    long long num = 0;
    long long den = 1;
    friend bool operator==(const Ratio&, const Ratio&) = default;
};
Ratio gc_content(const DnaWord& w);

struct ClosureReport {
    bool reversible = false;
    bool complement_closed = false;
    bool rc_closed = false;
};

// Set of equal-length DNA words, keyed by their packed 2-bit encoding.
class DnaCode {
public:
    DnaCode() = default;

    void insert(const DnaWord& w);  // throws LengthMismatch on ragged lengths
    bool contains(const DnaWord& w) const;
    std::size_t size() const { return keys_.size(); }
    std::size_t word_length() const { return length_; }

    std::vector<DnaWord> sorted_words() const;

    ClosureReport closure_checks() const;

    // exact pairwise minimum Hamming distance; throws SingletonCode / TooLarge
    int min_hamming_distance(std::size_t pair_guard = 1u << 14) const;

    // for codes whose distance was established exactly by the builder
    void set_known_min_distance(int d) { known_distance_ = d; }
    int known_min_distance() const { return known_distance_; }  // -1 when unset

private:
    static std::string pack(const DnaWord& w);
    static DnaWord unpack(const std::string& key, std::size_t length);

    std::size_t length_ = 0;
    std::unordered_set<std::string> keys_;
    int known_distance_ = -1;
};

void export_fasta(const DnaCode& code, std::ostream& out);  // 80-column wrapped
void export_csv(const DnaCode& code, std::ostream& out);
// {n, M, d_H, reversible, rc_closed, gc_histogram}
std::string summary_json(const DnaCode& code);

}  // namespace rtheta
