#include "rtheta/linear_code.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <map>
#include <sstream>

#include "json.hpp"

namespace rtheta {

namespace {

constexpr std::uint64_t kLaneMask = 0x3333333333333333ull;
constexpr std::uint64_t kNibbleLsb = 0x1111111111111111ull;

}  // namespace

std::uint64_t pack_word(std::span<const Elem> w) {
    if (w.size() > 16)
        throw TooLarge("packed words support up to 16 coordinates", w.size());
    std::uint64_t key = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        key |= static_cast<std::uint64_t>(w[i].index()) << (4 * i);
    return key;
}

Word unpack_word(std::uint64_t key, std::size_t n) {
    Word w(n);
    for (std::size_t i = 0; i < n; ++i) w[i] = Elem::from_index(static_cast<int>((key >> (4 * i)) & 15));
    return w;
}

std::uint64_t add_packed(std::uint64_t x, std::uint64_t y) {
    const std::uint64_t lo = ((x & kLaneMask) + (y & kLaneMask)) & kLaneMask;
    const std::uint64_t hi = ((((x >> 2) & kLaneMask) + ((y >> 2) & kLaneMask)) & kLaneMask) << 2;
    return lo | hi;
}

int packed_weight(std::uint64_t x) {
    std::uint64_t t = x | (x >> 2);
    t |= t >> 1;
    return std::popcount(t & kNibbleLsb);
}

namespace {

std::uint32_t support_mask(std::uint64_t x, std::size_t n) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i)
        if ((x >> (4 * i)) & 15) mask |= 1u << i;
    return mask;
}

std::uint64_t project_packed(std::uint64_t x, const std::vector<int>& coords) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < coords.size(); ++i)
        out |= ((x >> (4 * coords[i])) & 15) << (4 * i);
    return out;
}

// distinct scalar multiples {c * row : c in R}, deterministic order
std::vector<std::uint64_t> distinct_multiples(const Ring& ring, std::span<const Elem> row) {
    std::vector<std::uint64_t> out;
    for (Elem c : kAllElements) {
        const std::uint64_t key = pack_word(scalar_mul(ring, c, row));
        if (std::find(out.begin(), out.end(), key) == out.end()) out.push_back(key);
    }
    return out;
}

void sort_unique(std::vector<std::uint64_t>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GeneratorMatrix standard_form_generator(Elem theta, int k0, int k1, int n, const Mat& a01,
                                        const Mat& a02, const Mat& a12) {
    const Ring& ring = Ring::of(theta);
    static const std::vector<Elem> class_a = {elem(1, 1), elem(3, 1), elem(1, 3), elem(3, 3)};
    if (std::find(class_a.begin(), class_a.end(), theta) == class_a.end())
        throw NotStandardForm("the 2-block standard form applies to theta in {1+w, 3+w, 1+3w, 3+3w}");
    const int g = n - k0 - k1;
    if (k0 < 0 || k1 < 0 || g < 0) throw NotStandardForm("block sizes exceed n");
    auto check_shape = [](const Mat& m, int r, int c, const char* name) {
        if (static_cast<int>(m.size()) != r)
            throw NotStandardForm(std::string(name) + ": wrong row count");
        for (const auto& row : m)
            if (static_cast<int>(row.size()) != c)
                throw NotStandardForm(std::string(name) + ": wrong column count");
    };
    check_shape(a01, k0, k1, "A01");
    check_shape(a02, k0, g, "A02");
    check_shape(a12, k1, g, "A12");

    GeneratorMatrix gen{theta, static_cast<std::size_t>(n), {}, Profile{{k0, k1}}};
    for (int i = 0; i < k0; ++i) {
        Word row(n, kZero);
        row[i] = kOne;
        for (int j = 0; j < k1; ++j) row[k0 + j] = a01[i][j];
        for (int j = 0; j < g; ++j) row[k0 + k1 + j] = a02[i][j];
        gen.rows.push_back(std::move(row));
    }
    for (int i = 0; i < k1; ++i) {
        Word row(n, kZero);
        row[k0 + i] = kTwo;
        for (int j = 0; j < g; ++j) row[k0 + k1 + j] = ring.mul(kTwo, a12[i][j]);
        gen.rows.push_back(std::move(row));
    }
    return gen;
}

namespace {

std::array<Elem, 4> diagonal_scales(Elem theta) {
    if (theta == kTwo || theta == kTwoPlusTwoW) return {kOne, kW, kTwo, kTwoW};
    if (theta == elem(3, 0) || theta == elem(1, 2)) return {kOne, elem(1, 1), kTwo, kTwoPlusTwoW};
    throw NotStandardForm("the 4-block standard form applies to theta in {2, 2+2w, 3, 1+2w}");
}

}  // namespace

GeneratorMatrix standard_form_generator(Elem theta, std::array<int, 4> ks, int n,
                                        const StdBlocks& blocks) {
    const Ring& ring = Ring::of(theta);
    const auto scales = diagonal_scales(theta);
    const int g = n - ks[0] - ks[1] - ks[2] - ks[3];
    if (g < 0 || std::any_of(ks.begin(), ks.end(), [](int k) { return k < 0; }))
        throw NotStandardForm("block sizes exceed n");

    const Mat* a[5][5] = {};
    a[0][1] = &blocks.a01; a[0][2] = &blocks.a02; a[0][3] = &blocks.a03; a[0][4] = &blocks.a04;
    a[1][2] = &blocks.a12; a[1][3] = &blocks.a13; a[1][4] = &blocks.a14;
    a[2][3] = &blocks.a23; a[2][4] = &blocks.a24;
    a[3][4] = &blocks.a34;
    const int widths[5] = {ks[0], ks[1], ks[2], ks[3], g};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 5; ++j) {
            if (static_cast<int>(a[i][j]->size()) != widths[i])
                throw NotStandardForm("block A" + std::to_string(i) + std::to_string(j) +
                                      ": wrong row count");
            for (const auto& row : *a[i][j])
                if (static_cast<int>(row.size()) != widths[j])
                    throw NotStandardForm("block A" + std::to_string(i) + std::to_string(j) +
                                          ": wrong column count");
        }

    const int offsets[5] = {0, ks[0], ks[0] + ks[1], ks[0] + ks[1] + ks[2],
                            ks[0] + ks[1] + ks[2] + ks[3]};
    GeneratorMatrix gen{theta, static_cast<std::size_t>(n), {},
                        Profile{{ks[0], ks[1], ks[2], ks[3]}}};
    for (int bi = 0; bi < 4; ++bi) {
        for (int i = 0; i < widths[bi]; ++i) {
            Word row(n, kZero);
            row[offsets[bi] + i] = scales[bi];
            for (int bj = bi + 1; bj < 5; ++bj)
                for (int j = 0; j < widths[bj]; ++j)
                    row[offsets[bj] + j] = ring.mul(scales[bi], (*a[bi][bj])[i][j]);
            gen.rows.push_back(std::move(row));
        }
    }
    return gen;
}

CodewordSet::CodewordSet(Elem theta, std::size_t n, std::vector<std::uint64_t> words)
    : theta_(theta), n_(n), words_(std::move(words)) {
    sort_unique(words_);
}

CodewordSet CodewordSet::from_words(Elem theta, std::size_t n, const std::vector<Word>& words) {
    std::vector<std::uint64_t> packed;
    packed.reserve(words.size());
    for (const auto& w : words) {
        if (w.size() != n) throw LengthMismatch("ragged codeword lengths");
        packed.push_back(pack_word(w));
    }
    return CodewordSet(theta, n, std::move(packed));
}

bool CodewordSet::contains_packed(std::uint64_t key) const {
    return std::binary_search(words_.begin(), words_.end(), key);
}

bool CodewordSet::contains(std::span<const Elem> w) const {
    return w.size() == n_ && contains_packed(pack_word(w));
}

CodewordSet span(const GeneratorMatrix& g, std::uint64_t guard) {
    const Ring& ring = Ring::of(g.theta);
    if (g.n > 16) throw TooLarge("span enumeration supports up to 16 coordinates", g.n);

    std::vector<std::vector<std::uint64_t>> multiples;
    std::uint64_t product = 1;
    for (const auto& row : g.rows) {
        if (row.size() != g.n) throw LengthMismatch("generator row length differs from n");
        auto m = distinct_multiples(ring, row);
        if (m.size() <= 1) continue;  // zero row contributes nothing
        if (product > guard / m.size())
            throw TooLarge("span enumeration exceeds the guard", product * m.size());
        product *= m.size();
        multiples.push_back(std::move(m));
    }

    std::vector<std::uint64_t> words;
    words.reserve(product);
    words.push_back(0);
    // odometer over the reduced coefficient choices, one row at a time
    for (const auto& m : multiples) {
        const std::size_t base = words.size();
        words.resize(base * m.size());
        for (std::size_t j = 1; j < m.size(); ++j)
            for (std::size_t i = 0; i < base; ++i)
                words[j * base + i] = add_packed(words[i], m[j]);
    }
    return CodewordSet(g.theta, g.n, std::move(words));
}

LinearCode make_code(GeneratorMatrix g, std::uint64_t guard) {
    CodewordSet words = span(g, guard);
    return LinearCode{std::move(g), std::move(words)};
}

namespace {

using DistTable = std::array<std::array<std::int8_t, 16>, 16>;

DistTable distance_table(const GauMap& map) {
    DistTable t{};
    for (Elem x : kAllElements)
        for (Elem y : kAllElements)
            t[x.index()][y.index()] = static_cast<std::int8_t>(gau_distance(map, x, y));
    return t;
}

int packed_distance(const DistTable& t, std::uint64_t x, std::uint64_t y, std::size_t n) {
    int d = 0;
    for (std::size_t i = 0; i < n; ++i)
        d += t[(x >> (4 * i)) & 15][(y >> (4 * i)) & 15];
    return d;
}

int pairwise_min_distance(const CodewordSet& code, const DistTable& t) {
    const auto& words = code.packed();
    const std::size_t n = code.length();
    int best = INT_MAX;
    for (std::size_t i = 0; i < words.size() && best > 1; ++i)
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const int d = packed_distance(t, words[i], words[j], n);
            if (d < best) {
                best = d;
                if (best == 1) break;
            }
        }
    return best;
}

// span of the generator rows restricted to the given coordinates, via
// closure with deduplication after every row (bounded by 16^|coords|)
std::vector<std::uint64_t> projected_span(const Ring& ring, const Mat& rows,
                                          const std::vector<int>& coords) {
    std::vector<std::uint64_t> acc{0};
    for (const auto& row : rows) {
        Word proj(coords.size());
        for (std::size_t i = 0; i < coords.size(); ++i) proj[i] = row[coords[i]];
        const auto mult = distinct_multiples(ring, proj);
        if (mult.size() <= 1) continue;
        std::vector<std::uint64_t> next;
        next.reserve(acc.size() * mult.size());
        for (const std::uint64_t m : mult)
            for (const std::uint64_t x : acc) next.push_back(add_packed(x, m));
        sort_unique(next);
        acc = std::move(next);
    }
    return acc;
}

// least distance between any pair differing by c, minimized over the
// projection of the code onto supp(c)
int difference_distance(const std::vector<std::uint64_t>& proj, std::uint64_t c_proj,
                        std::size_t s, const DistTable& t) {
    int best = INT_MAX;
    for (const std::uint64_t p : proj) {
        const int d = packed_distance(t, p, add_packed(p, c_proj), s);
        if (d < best) {
            best = d;
            if (best == static_cast<int>(s)) break;  // every differing coordinate costs >= 1
        }
    }
    return best;
}

}  // namespace

int min_gau_distance(const CodewordSet& code, const GauMap& map, std::size_t pairwise_guard) {
    if (code.size() < 2) throw SingletonCode("minimum distance needs at least two codewords");
    if (code.size() > pairwise_guard)
        throw TooLarge("pairwise distance scan", code.size() * (code.size() - 1) / 2);
    return pairwise_min_distance(code, distance_table(map));
}

int min_gau_distance(const LinearCode& code, const GauMap& map, std::size_t pairwise_guard) {
    const CodewordSet& words = code.words;
    if (words.size() < 2) throw SingletonCode("minimum distance needs at least two codewords");
    const DistTable t = distance_table(map);
    if (words.size() <= pairwise_guard) return pairwise_min_distance(words, t);

    // d(x, x+c) >= weight(c), and the minimum over the code equals the minimum
    // over low-weight differences c evaluated against the projection of the
    // code onto supp(c); walking weight levels upward keeps this exact
    const Ring& ring = Ring::of(words.theta());
    const std::size_t n = words.length();
    int min_weight = INT_MAX;
    for (const std::uint64_t w : words.packed())
        if (w != 0) min_weight = std::min(min_weight, packed_weight(w));

    int best = INT_MAX;
    for (int level = min_weight; level <= static_cast<int>(n); ++level) {
        if (level >= best) break;
        std::map<std::uint32_t, std::vector<std::uint64_t>> by_support;
        for (const std::uint64_t w : words.packed())
            if (w != 0 && packed_weight(w) == level)
                by_support[support_mask(w, n)].push_back(w);
        for (const auto& [mask, candidates] : by_support) {
            std::vector<int> coords;
            for (std::size_t i = 0; i < n; ++i)
                if (mask & (1u << i)) coords.push_back(static_cast<int>(i));
            const auto proj = projected_span(ring, code.generator.rows, coords);
            for (const std::uint64_t c : candidates) {
                const int d =
                    difference_distance(proj, project_packed(c, coords), coords.size(), t);
                best = std::min(best, d);
                if (best == level) break;
            }
            if (best == level) break;
        }
        if (best == level) break;
    }
    return best;
}

namespace {

// odometer over all of R^n keeping the unpacked digits at hand
template <typename Visit>
void for_each_vector(std::size_t n, Visit&& visit) {
    std::vector<std::uint8_t> digits(n, 0);
    while (true) {
        visit(digits);
        std::size_t i = 0;
        while (i < n && digits[i] == 15) digits[i++] = 0;
        if (i == n) break;
        ++digits[i];
    }
}

}  // namespace

CodewordSet dual_brute_force(const GeneratorMatrix& g, int max_n) {
    if (static_cast<int>(g.n) > max_n)
        throw TooLarge("annihilator scan over 16^n vectors", g.n);
    const Ring& ring = Ring::of(g.theta);
    std::vector<std::uint64_t> out;
    for_each_vector(g.n, [&](const std::vector<std::uint8_t>& digits) {
        for (const auto& row : g.rows) {
            Elem acc = kZero;
            for (std::size_t i = 0; i < g.n; ++i)
                acc = add(acc, ring.mul(Elem::from_index(digits[i]), row[i]));
            if (acc != kZero) return;
        }
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < g.n; ++i) key |= static_cast<std::uint64_t>(digits[i]) << (4 * i);
        out.push_back(key);
    });
    return CodewordSet(g.theta, g.n, std::move(out));
}

CodewordSet annihilator_set(const CodewordSet& code, int max_n) {
    if (static_cast<int>(code.length()) > max_n)
        throw TooLarge("annihilator scan over 16^n vectors", code.length());
    const Ring& ring = Ring::of(code.theta());
    const std::size_t n = code.length();
    std::vector<std::uint64_t> out;
    for_each_vector(n, [&](const std::vector<std::uint8_t>& digits) {
        for (const std::uint64_t w : code.packed()) {
            Elem acc = kZero;
            for (std::size_t i = 0; i < n; ++i)
                acc = add(acc, ring.mul(Elem::from_index(digits[i]),
                                        Elem::from_index(static_cast<int>((w >> (4 * i)) & 15))));
            if (acc != kZero) return;
        }
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n; ++i) key |= static_cast<std::uint64_t>(digits[i]) << (4 * i);
        out.push_back(key);
    });
    return CodewordSet(code.theta(), n, std::move(out));
}

bool is_self_dual(const LinearCode& code, int max_n) {
    return dual_brute_force(code.generator, max_n) == code.words;
}

TrivialSelfDualReport trivial_self_dual_candidate(Elem theta, int n, int oracle_max_n) {
    if (n < 1) throw InvalidOrder("length must be positive");
    const Ring& ring = Ring::of(theta);

    std::vector<Elem> alphabet;
    if (n % 4 == 0)
        alphabet.assign(kAllElements.begin(), kAllElements.end());
    else if (n % 2 == 0)
        alphabet = ring.zero_divisors();
    else
        alphabet.assign(kTwoTorsion.begin(), kTwoTorsion.end());
    std::sort(alphabet.begin(), alphabet.end());

    std::vector<Word> words;
    words.reserve(alphabet.size());
    for (Elem x : alphabet) words.push_back(constant_word(x, n));

    TrivialSelfDualReport rep{CodewordSet::from_words(theta, n, words), alphabet, true, false,
                              std::nullopt};
    for (const auto& x : words)
        for (const auto& y : words)
            if (ring.inner_product(x, y) != kZero) rep.self_orthogonal = false;
    if (n <= 15) {
        const std::uint64_t sq = rep.code.size() * rep.code.size();
        rep.cardinality_matches = sq == (1ull << (4 * n));
    }
    if (n <= oracle_max_n) rep.self_dual = annihilator_set(rep.code, oracle_max_n) == rep.code;
    return rep;
}

std::optional<Elem> torsion_word_presence(const CodewordSet& code) {
    const Elem theta = code.theta();
    std::vector<Elem> designated;
    if (theta == kTwo || theta == kTwoPlusTwoW)
        designated = {kTwoW};
    else if (theta == elem(3, 0) || theta == elem(1, 2))
        designated = {kTwoPlusTwoW};
    else  // 3-ideal chain class; for non-chain rings check all three as well
        designated = {kTwoW, kTwo, kTwoPlusTwoW};
    for (Elem x : designated) {
        const Word w = constant_word(x, code.length());
        if (code.contains(w)) return x;
    }
    return std::nullopt;
}

CirculantCode circulant_selfdual_generator(Elem theta, Elem u, const Word& a,
                                           std::uint64_t span_guard, int dual_max_n) {
    const Ring& ring = Ring::of(theta);
    if (!ring.is_unit(u)) throw NotAUnit("u = " + to_string(u) + " is not a unit");
    const int n = static_cast<int>(a.size());
    if (n < 1) throw InvalidOrder("circulant order must be positive");

    GeneratorMatrix g{theta, static_cast<std::size_t>(2 * n), {}, std::nullopt};
    for (int i = 0; i < n; ++i) {
        Word row(2 * n, kZero);
        row[i] = u;
        for (int j = 0; j < n; ++j) row[n + j] = a[(j - i + n) % n];
        g.rows.push_back(std::move(row));
    }

    LinearCode code = make_code(std::move(g), span_guard);
    CirculantVerdicts verdicts;
    verdicts.all_units =
        std::all_of(a.begin(), a.end(), [&](Elem x) { return ring.is_unit(x); });
    if (2 * n <= dual_max_n) verdicts.self_dual = is_self_dual(code, dual_max_n);
    verdicts.reverse_closed = check_reverse_constraint(code);
    verdicts.rc_closed =
        verdicts.reverse_closed && check_complement_constraint(code, kTwoPlusTwoW);
    return CirculantCode{std::move(code), verdicts};
}

bool check_reverse_constraint(const LinearCode& code) {
    for (const auto& row : code.generator.rows)
        if (!code.words.contains(reverse_preimage(row))) return false;
    return true;
}

bool check_complement_constraint(const LinearCode& code, Elem lambda) {
    return code.words.contains(constant_word(lambda, code.words.length()));
}

std::string generator_to_json(const GeneratorMatrix& g) {
    nlohmann::json j;
    j["theta"] = to_string(g.theta);
    j["n"] = g.n;
    auto rows = nlohmann::json::array();
    for (const auto& row : g.rows) {
        auto jr = nlohmann::json::array();
        for (Elem e : row) jr.push_back(to_string(e));
        rows.push_back(std::move(jr));
    }
    j["rows"] = std::move(rows);
    if (g.profile) j["profile"] = g.profile->ks;
    return j.dump();
}

GeneratorMatrix generator_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad generator json: ") + e.what());
    }
    GeneratorMatrix g;
    try {
        g.theta = parse_elem(j.at("theta").get<std::string>());
        g.n = j.at("n").get<std::size_t>();
        for (const auto& jr : j.at("rows")) {
            Word row;
            for (const auto& je : jr) row.push_back(parse_elem(je.get<std::string>()));
            if (row.size() != g.n) throw ParseError("generator row length differs from n");
            g.rows.push_back(std::move(row));
        }
        if (j.contains("profile")) g.profile = Profile{j["profile"].get<std::vector<int>>()};
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("bad generator json: ") + e.what());
    }
    return g;
}

std::string codewords_to_csv(const CodewordSet& code) {
    std::vector<Word> words;
    words.reserve(code.size());
    for (std::size_t i = 0; i < code.size(); ++i) words.push_back(code.word(i));
    std::sort(words.begin(), words.end(), [](const Word& x, const Word& y) {
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    });
    std::string out;
    for (const auto& w : words) {
        out += to_string(std::span<const Elem>(w));
        out += '\n';
    }
    return out;
}

CodewordSet codewords_from_csv(Elem theta, const std::string& text) {
    std::vector<Word> words;
    std::istringstream in(text);
    std::string line;
    std::size_t n = 0;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        words.push_back(parse_word(line));
        if (words.size() == 1)
            n = words.back().size();
        else if (words.back().size() != n)
            throw LengthMismatch("ragged codeword lengths in csv");
    }
    if (words.empty()) throw ParseError("empty codeword csv");
    return CodewordSet::from_words(theta, n, words);
}

DnaCode dna_image(const CodewordSet& code, const GauMap& map, std::size_t word_guard) {
    if (code.size() > word_guard)
        throw TooLarge("materializing the DNA image", code.size());
    DnaCode dna;
    for (std::size_t i = 0; i < code.size(); ++i) {
        const Word w = code.word(i);
        dna.insert(encode(map, w));
    }
    return dna;
}

// keep the helper visible to the dual construction below
namespace {

struct Matrix {
    int rows = 0, cols = 0;
    std::vector<Elem> data;

    Matrix() = default;
    Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, kZero) {}
    Elem& at(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    Elem at(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }
};

Matrix matmul(const Ring& ring, const Matrix& x, const Matrix& y) {
    Matrix out(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int k = 0; k < x.cols; ++k)
            for (int j = 0; j < y.cols; ++j)
                out.at(i, j) = add(out.at(i, j), ring.mul(x.at(i, k), y.at(k, j)));
    return out;
}

Matrix matneg(const Matrix& x) {
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.data.size(); ++i) out.data[i] = neg(x.data[i]);
    return out;
}

Matrix matsub(const Matrix& x, const Matrix& y) {
    Matrix out(x.rows, x.cols);
    for (std::size_t i = 0; i < x.data.size(); ++i) out.data[i] = sub(x.data[i], y.data[i]);
    return out;
}

Matrix transpose(const Matrix& x) {
    Matrix out(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) out.at(j, i) = x.at(i, j);
    return out;
}

Matrix slice(const GeneratorMatrix& g, int r0, int r1, int c0, int c1) {
    Matrix out(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j) out.at(i - r0, j - c0) = g.rows[i][j];
    return out;
}

// representative X with scale * X = scaled, entrywise; smallest canonical
// representative, used consistently across all C blocks
Matrix unscale(const Ring& ring, const Matrix& scaled, Elem scale) {
    Matrix out(scaled.rows, scaled.cols);
    for (std::size_t i = 0; i < scaled.data.size(); ++i) {
        bool found = false;
        for (Elem x : kAllElements)
            if (ring.mul(scale, x) == scaled.data[i]) {
                out.data[i] = x;
                found = true;
                break;
            }
        if (!found)
            throw NotStandardForm("entry " + to_string(scaled.data[i]) +
                                  " is not a multiple of " + to_string(scale));
    }
    return out;
}

void require_block(bool ok, const char* what) {
    if (!ok) throw NotStandardForm(what);
}

void check_layout(const Ring& ring, const GeneratorMatrix& g, const std::vector<int>& ks,
                  const std::vector<Elem>& scales) {
    const int nblocks = static_cast<int>(ks.size());
    int total = 0;
    for (int k : ks) total += k;
    require_block(static_cast<int>(g.rows.size()) == total, "row count differs from the profile");
    require_block(total <= static_cast<int>(g.n), "profile exceeds n");
    std::vector<int> offset(nblocks + 1, 0);
    for (int i = 0; i < nblocks; ++i) offset[i + 1] = offset[i] + ks[i];
    for (int bi = 0; bi < nblocks; ++bi)
        for (int i = 0; i < ks[bi]; ++i) {
            const Word& row = g.rows[offset[bi] + i];
            for (int j = 0; j < offset[bi]; ++j)
                require_block(row[j] == kZero, "nonzero entry left of the diagonal block");
            for (int j = 0; j < ks[bi]; ++j)
                require_block(row[offset[bi] + j] == (j == i ? scales[bi] : kZero),
                              "diagonal block is not a scaled identity");
            for (int j = offset[bi + 1]; j < static_cast<int>(g.n); ++j) {
                bool multiple = false;
                for (Elem x : kAllElements)
                    if (ring.mul(scales[bi], x) == row[j]) {
                        multiple = true;
                        break;
                    }
                require_block(multiple, "row entry is not a multiple of the block scale");
            }
        }
}

}  // namespace

GeneratorMatrix dual_generator(const GeneratorMatrix& g) {
    const Ring& ring = Ring::of(g.theta);
    if (!ring.is_chain()) throw NonChainRing("closed-form duals cover the chain rings only");
    if (!g.profile) throw NotStandardForm("dual_generator needs a profiled standard form");
    const auto& ks = g.profile->ks;
    const int n = static_cast<int>(g.n);

    if (ks.size() == 2) {
        const int k0 = ks[0], k1 = ks[1], free = n - k0 - k1;
        require_block(free >= 0, "profile exceeds n");
        check_layout(ring, g, {k0, k1}, {kOne, kTwo});

        const Matrix a01 = slice(g, 0, k0, k0, k0 + k1);
        const Matrix a02 = slice(g, 0, k0, k0 + k1, n);
        const Matrix a12 = unscale(ring, slice(g, k0, k0 + k1, k0 + k1, n), kTwo);

        const Matrix c01 = matsub(matmul(ring, a01, a12), a02);
        const Matrix c02 = matneg(a12);
        const Matrix& c11 = a01;

        GeneratorMatrix dual{g.theta, static_cast<std::size_t>(n), {},
                             Profile{{free, k1}}};
        const Matrix c01t = transpose(c01), c02t = transpose(c02), c11t = transpose(c11);
        for (int i = 0; i < free; ++i) {
            Word row(n, kZero);
            for (int j = 0; j < k0; ++j) row[j] = c01t.at(i, j);
            for (int j = 0; j < k1; ++j) row[k0 + j] = c02t.at(i, j);
            row[k0 + k1 + i] = kOne;
            dual.rows.push_back(std::move(row));
        }
        for (int i = 0; i < k1; ++i) {
            Word row(n, kZero);
            for (int j = 0; j < k0; ++j) row[j] = ring.mul(kTwo, neg(c11t.at(i, j)));
            row[k0 + i] = kTwo;
            dual.rows.push_back(std::move(row));
        }
        return dual;
    }

    if (ks.size() != 4) throw NotStandardForm("profile must have 2 or 4 block sizes");
    const auto scales = diagonal_scales(g.theta);
    const Elem sigma = scales[1], two = scales[2], tau = scales[3];
    const int k0 = ks[0], k1 = ks[1], k2 = ks[2], k3 = ks[3];
    const int free = n - k0 - k1 - k2 - k3;
    require_block(free >= 0, "profile exceeds n");
    check_layout(ring, g, {k0, k1, k2, k3}, {kOne, sigma, two, tau});

    const int o1 = k0, o2 = k0 + k1, o3 = k0 + k1 + k2, o4 = k0 + k1 + k2 + k3;
    const Matrix a01 = slice(g, 0, k0, o1, o2);
    const Matrix a02 = slice(g, 0, k0, o2, o3);
    const Matrix a03 = slice(g, 0, k0, o3, o4);
    const Matrix a04 = slice(g, 0, k0, o4, n);
    const Matrix a12 = unscale(ring, slice(g, o1, o2, o2, o3), sigma);
    const Matrix a13 = unscale(ring, slice(g, o1, o2, o3, o4), sigma);
    const Matrix a14 = unscale(ring, slice(g, o1, o2, o4, n), sigma);
    const Matrix a23 = unscale(ring, slice(g, o2, o3, o3, o4), two);
    const Matrix a24 = unscale(ring, slice(g, o2, o3, o4, n), two);
    const Matrix a34 = unscale(ring, slice(g, o3, o4, o4, n), tau);

    const Matrix c04 = matneg(a34);
    const Matrix c03 = matsub(matmul(ring, a23, a34), a24);
    const Matrix c02 = matsub(matsub(matmul(ring, a13, a34), matmul(ring, a12, c03)), a14);
    const Matrix c01 = matsub(matsub(matmul(ring, a01, matneg(c02)), matmul(ring, a02, c03)),
                              matsub(a04, matmul(ring, a03, a34)));
    const Matrix c12 = matsub(matmul(ring, a12, a23), a13);
    const Matrix c13 = a23;
    // signs fixed by orthogonality against the first row block
    const Matrix c11 = matsub(matmul(ring, a01, c12), matsub(matmul(ring, a02, c13), a03));
    const Matrix c21 = matsub(matmul(ring, a01, a12), a02);
    const Matrix& c22 = a12;
    const Matrix& c31 = a01;

    GeneratorMatrix dual{g.theta, static_cast<std::size_t>(n), {},
                         Profile{{free, k3, k2, k1}}};
    const Matrix c01t = transpose(c01), c02t = transpose(c02), c03t = transpose(c03),
                 c04t = transpose(c04), c11t = transpose(c11), c12t = transpose(c12),
                 c13t = transpose(c13), c21t = transpose(c21), c22t = transpose(c22),
                 c31t = transpose(c31);
    for (int i = 0; i < free; ++i) {
        Word row(n, kZero);
        for (int j = 0; j < k0; ++j) row[j] = c01t.at(i, j);
        for (int j = 0; j < k1; ++j) row[o1 + j] = c02t.at(i, j);
        for (int j = 0; j < k2; ++j) row[o2 + j] = c03t.at(i, j);
        for (int j = 0; j < k3; ++j) row[o3 + j] = c04t.at(i, j);
        row[o4 + i] = kOne;
        dual.rows.push_back(std::move(row));
    }
    for (int i = 0; i < k3; ++i) {
        Word row(n, kZero);
        for (int j = 0; j < k0; ++j) row[j] = ring.mul(sigma, neg(c11t.at(i, j)));
        for (int j = 0; j < k1; ++j) row[o1 + j] = ring.mul(sigma, c12t.at(i, j));
        for (int j = 0; j < k2; ++j) row[o2 + j] = ring.mul(sigma, neg(c13t.at(i, j)));
        row[o3 + i] = sigma;
        dual.rows.push_back(std::move(row));
    }
    for (int i = 0; i < k2; ++i) {
        Word row(n, kZero);
        for (int j = 0; j < k0; ++j) row[j] = ring.mul(two, c21t.at(i, j));
        for (int j = 0; j < k1; ++j) row[o1 + j] = ring.mul(two, neg(c22t.at(i, j)));
        row[o2 + i] = two;
        dual.rows.push_back(std::move(row));
    }
    for (int i = 0; i < k1; ++i) {
        Word row(n, kZero);
        for (int j = 0; j < k0; ++j) row[j] = ring.mul(tau, neg(c31t.at(i, j)));
        row[o1 + i] = tau;
        dual.rows.push_back(std::move(row));
    }
    return dual;
}

}  // namespace rtheta
