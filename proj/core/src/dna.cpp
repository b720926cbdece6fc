#include "rtheta/dna.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>

namespace rtheta {

Nucleotide nucleotide_from_char(char c) {
    switch (c) {
        case 'A': return Nucleotide::A;
        case 'G': return Nucleotide::G;
        case 'C': return Nucleotide::C;
        case 'T': return Nucleotide::T;
        default: throw ParseError(std::string("not a nucleotide: '") + c + "'");
    }
}

DnaWord::DnaWord(std::string seq) : seq_(std::move(seq)) {
    for (char c : seq_) nucleotide_from_char(c);
}

DnaWord DnaWord::from_nucleotides(const std::vector<Nucleotide>& nts) {
    std::string s;
    s.reserve(nts.size());
    for (Nucleotide n : nts) s += to_char(n);
    return DnaWord(std::move(s));
}

DnaWord reverse(const DnaWord& w) {
    std::string s(w.str().rbegin(), w.str().rend());
    return DnaWord(std::move(s));
}

DnaWord complement(const DnaWord& w) {
    std::string s;
    s.reserve(w.size());
    for (char c : w.str()) s += to_char(complement(nucleotide_from_char(c)));
    return DnaWord(std::move(s));
}

DnaWord reverse_complement(const DnaWord& w) { return reverse(complement(w)); }

int hamming(const DnaWord& x, const DnaWord& y) {
    if (x.size() != y.size())
        throw LengthMismatch("hamming distance of words of length " + std::to_string(x.size()) +
                             " and " + std::to_string(y.size()));
    int d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += x.str()[i] != y.str()[i];
    return d;
}

Ratio gc_content(const DnaWord& w) {
    if (w.size() == 0) return {0, 1};
    long long gc = 0;
    for (char c : w.str()) gc += (c == 'G' || c == 'C');
    const long long g = std::gcd(gc, static_cast<long long>(w.size()));
    return {gc / g, static_cast<long long>(w.size()) / g};
}

std::string DnaCode::pack(const DnaWord& w) {
    std::string key((w.size() + 3) / 4, '\0');
    for (std::size_t i = 0; i < w.size(); ++i) {
        const auto bits = static_cast<unsigned char>(w.at(i));
        key[i / 4] = static_cast<char>(key[i / 4] | (bits << (2 * (i % 4))));
    }
    return key;
}

DnaWord DnaCode::unpack(const std::string& key, std::size_t length) {
    std::vector<Nucleotide> nts(length);
    for (std::size_t i = 0; i < length; ++i)
        nts[i] = static_cast<Nucleotide>((static_cast<unsigned char>(key[i / 4]) >> (2 * (i % 4))) & 3);
    return DnaWord::from_nucleotides(nts);
}

void DnaCode::insert(const DnaWord& w) {
    if (keys_.empty())
        length_ = w.size();
    else if (w.size() != length_)
        throw LengthMismatch("code words have length " + std::to_string(length_) +
                             ", got " + std::to_string(w.size()));
    keys_.insert(pack(w));
}

bool DnaCode::contains(const DnaWord& w) const {
    return w.size() == length_ && keys_.count(pack(w)) > 0;
}

std::vector<DnaWord> DnaCode::sorted_words() const {
    std::vector<DnaWord> words;
    words.reserve(keys_.size());
    for (const auto& k : keys_) words.push_back(unpack(k, length_));
    std::sort(words.begin(), words.end());
    return words;
}

ClosureReport DnaCode::closure_checks() const {
    ClosureReport rep{true, true, true};
    for (const auto& k : keys_) {
        const DnaWord w = unpack(k, length_);
        if (!contains(reverse(w))) rep.reversible = false;
        if (!contains(complement(w))) rep.complement_closed = false;
        if (!contains(reverse_complement(w))) rep.rc_closed = false;
    }
    // x^rc = (x^r)^c, so joint closure under r and c forces closure under rc
    if (rep.reversible && rep.complement_closed && !rep.rc_closed)
        throw Error("closure invariant violated: reverse and complement closed but not rc");
    return rep;
}

int DnaCode::min_hamming_distance(std::size_t pair_guard) const {
    if (size() < 2) throw SingletonCode("minimum distance needs at least two words");
    if (size() > pair_guard)
        throw TooLarge("pairwise distance scan over " + std::to_string(size()) + " words",
                       size() * (size() - 1) / 2);
    const auto words = sorted_words();
    int best = static_cast<int>(length_) + 1;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j)
            best = std::min(best, hamming(words[i], words[j]));
    return best;
}

void export_fasta(const DnaCode& code, std::ostream& out) {
    const auto words = code.sorted_words();
    for (std::size_t i = 0; i < words.size(); ++i) {
        out << '>' << "word_" << i << '\n';
        const std::string& s = words[i].str();
        for (std::size_t off = 0; off < s.size(); off += 80)
            out << s.substr(off, 80) << '\n';
    }
}

void export_csv(const DnaCode& code, std::ostream& out) {
    for (const auto& w : code.sorted_words()) out << w.str() << '\n';
}

std::string summary_json(const DnaCode& code) {
    const ClosureReport rep = code.closure_checks();
    std::map<std::string, std::size_t> gc_histogram;
    for (const auto& w : code.sorted_words()) {
        const Ratio r = gc_content(w);
        gc_histogram[std::to_string(r.num) + "/" + std::to_string(r.den)]++;
    }
    std::ostringstream out;
    out << "{\"n\":" << code.word_length() << ",\"M\":" << code.size();
    out << ",\"d_H\":";
    if (code.known_min_distance() >= 0)
        out << code.known_min_distance();
    else if (code.size() >= 2 && code.size() <= (1u << 14))
        out << code.min_hamming_distance();
    else
        out << "null";
    out << ",\"reversible\":" << (rep.reversible ? "true" : "false");
    out << ",\"rc_closed\":" << (rep.rc_closed ? "true" : "false");
    out << ",\"gc_histogram\":{";
    bool first = true;
    for (const auto& [key, count] : gc_histogram) {
        if (!first) out << ',';
        first = false;
        out << '"' << key << "\":" << count;
    }
    out << "}}";
    return out.str();
}

}  // namespace rtheta
