#include "rtheta/gau_map.hpp"

#include <algorithm>
#include <sstream>

namespace rtheta {

namespace {

bool is_lambda(Elem x) {
    return std::find(kLambdas.begin(), kLambdas.end(), x) != kLambdas.end();
}

void require(bool cond, const std::string& what) {
    if (!cond) throw ConstraintViolation(what);
}

}  // namespace

TableCheck check_table(const DinucleotideTable& table) {
    TableCheck check;

    std::array<int, 16> hits{};
    for (Elem x : kAllElements) hits[table[x.index()].code()]++;
    check.bijective = std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
    if (!check.bijective) return check;

    std::array<Elem, 16> from{};
    for (Elem x : kAllElements) from[table[x.index()].code()] = x;

    // the complement identity at x = 0 pins lambda
    const Elem lambda = from[complement(table[kZero.index()]).code()];
    if (is_lambda(lambda)) check.lambda = lambda;

    for (Elem x : kAllElements) {
        const Dinucleotide img = table[x.index()];
        if (from[reverse(img).code()] != triple(x)) check.reverse_failures.push_back(x);
        if (check.lambda && from[complement(img).code()] != add(x, *check.lambda))
            check.complement_failures.push_back(x);
    }

    if (check.lambda) {
        // row A fixes the six parameters; the remaining twelve cells follow
        // from the fill equations, so any disagreement names a corrupted cell
        auto cell = [&](int row, int col) { return from[row * 4 + col]; };
        const Elem a11 = cell(0, 0), a12 = cell(0, 1), a13 = cell(0, 2), a14 = cell(0, 3);
        const Elem a22 = cell(1, 1), a23 = cell(1, 2);
        const Elem expected[4][4] = {
            {a11, a12, a13, a14},
            {triple(a12), a22, a23, add(triple(a13), lambda)},
            {triple(a13), triple(a23), add(a22, lambda), add(triple(a12), lambda)},
            {triple(a14), add(a13, lambda), add(a12, lambda), add(a11, lambda)}};
        for (int row = 0; row < 4; ++row)
            for (int col = 0; col < 4; ++col)
                if (cell(row, col) != expected[row][col])
                    check.fill_mismatches.push_back(Dinucleotide::from_code(row * 4 + col));
    }
    return check;
}

GauMap GauMap::build(Elem lambda, const GauParams& p) {
    require(is_lambda(lambda), "lambda must be one of 2, 2w, 2+2w");

    auto in_two_torsion = [](Elem x) { return twice(x) == kZero; };
    auto doubles_to_lambda = [&](Elem x) { return twice(x) == lambda; };
    // 2x outside {0, lambda}: with 2*a13 = lambda the (G,T) entry 3*a13+lambda
    // would collapse onto a13 at (A,C) and the fill could not be bijective
    auto free_slot = [&](Elem x) { return twice(x) != kZero && twice(x) != lambda; };

    require(in_two_torsion(p.a11) && in_two_torsion(p.a22), "condition 1: 2*a11 = 2*a22 = 0");
    require(p.a11 != p.a22 && p.a11 != add(p.a22, lambda),
            "condition 1: a11 distinct from a22 and a22+lambda");
    require(doubles_to_lambda(p.a14) && doubles_to_lambda(p.a23),
            "condition 2: 2*a14 = 2*a23 = lambda");
    require(p.a14 != p.a23 && p.a14 != add(p.a23, lambda),
            "condition 2: a14 distinct from a23 and a23+lambda");
    require(free_slot(p.a12) && free_slot(p.a13),
            "condition 3: 2*a12 and 2*a13 outside {0, lambda}");
    require(p.a12 != p.a13 && p.a12 != add(p.a13, lambda) && p.a12 != triple(p.a13) &&
                p.a12 != add(triple(p.a13), lambda),
            "condition 3: a12 outside {a13, a13+lambda, 3*a13, 3*a13+lambda}");

    std::array<std::array<Elem, 4>, 4> m;
    m[0] = {p.a11, p.a12, p.a13, p.a14};
    m[1] = {triple(p.a12), p.a22, p.a23, add(triple(p.a13), lambda)};
    m[2] = {triple(p.a13), triple(p.a23), add(p.a22, lambda), add(triple(p.a12), lambda)};
    m[3] = {triple(p.a14), add(p.a13, lambda), add(p.a12, lambda), add(p.a11, lambda)};

    GauMap map;
    map.lambda_ = lambda;
    map.params_ = p;
    std::array<int, 16> hits{};
    for (int row = 0; row < 4; ++row)
        for (int col = 0; col < 4; ++col) {
            const Elem x = m[row][col];
            map.to_dna_[x.index()] =
                Dinucleotide{static_cast<Nucleotide>(row), static_cast<Nucleotide>(col)};
            hits[x.index()]++;
        }
    for (Elem x : kAllElements)
        if (hits[x.index()] != 1)
            throw NotBijective("filled layout repeats element " + to_string(x));
    for (Elem x : kAllElements) map.from_dna_[map.to_dna_[x.index()].code()] = x;

    const TableCheck check = check_table(map.to_dna_);
    if (!check.ok() || *check.lambda != lambda)
        throw NotBijective("filled layout violates the reverse/complement identities");
    return map;
}

GauMap GauMap::from_table(const DinucleotideTable& table) {
    const TableCheck check = check_table(table);
    if (!check.bijective) throw NotBijective("table is not a bijection");
    if (!check.ok())
        throw ConstraintViolation("table violates the reverse/complement identities at " +
                                  std::to_string(check.reverse_failures.size() +
                                                 check.complement_failures.size()) +
                                  " elements");
    GauMap map;
    map.lambda_ = *check.lambda;
    map.to_dna_ = table;
    for (Elem x : kAllElements) map.from_dna_[table[x.index()].code()] = x;
    return map;
}

const GauMap& GauMap::canonical() {
    static const GauMap map = build(
        kTwoPlusTwoW,
        GauParams{kTwoPlusTwoW, kTwoW, elem(1, 1), elem(3, 1), kOne, kW});
    return map;
}

GauMap GauMap::default_for(Elem lambda) {
    if (lambda == kTwoPlusTwoW) return canonical();
    const auto maps = enumerate_gau_maps(lambda);
    if (maps.empty()) throw ConstraintViolation("no map exists for this lambda");
    return maps.front();
}

std::string GauMap::to_table_text() const {
    std::string out;
    for (Elem x : kAllElements) {
        out += to_string(x);
        out += '\t';
        out += image(x).str();
        out += '\n';
    }
    return out;
}

std::vector<GauMap> enumerate_gau_maps(Elem lambda) {
    if (!is_lambda(lambda)) throw ConstraintViolation("lambda must be one of 2, 2w, 2+2w");

    std::vector<Elem> torsion, to_lambda, free_slot;
    for (Elem x : kAllElements) {
        const Elem d = twice(x);
        if (d == kZero)
            torsion.push_back(x);
        else if (d == lambda)
            to_lambda.push_back(x);
        else
            free_slot.push_back(x);
    }

    std::vector<GauMap> maps;
    for (Elem a11 : torsion)
        for (Elem a22 : torsion) {
            if (a11 == a22 || a11 == add(a22, lambda)) continue;
            for (Elem a14 : to_lambda)
                for (Elem a23 : to_lambda) {
                    if (a14 == a23 || a14 == add(a23, lambda)) continue;
                    for (Elem a12 : free_slot)
                        for (Elem a13 : free_slot) {
                            if (a12 == a13 || a12 == add(a13, lambda) || a12 == triple(a13) ||
                                a12 == add(triple(a13), lambda))
                                continue;
                            maps.push_back(
                                GauMap::build(lambda, {a11, a22, a14, a23, a12, a13}));
                        }
                }
        }

    // deduplicate by table (parameter tuples are expected to give distinct tables)
    std::vector<GauMap> unique;
    for (auto& map : maps)
        if (std::find(unique.begin(), unique.end(), map) == unique.end())
            unique.push_back(std::move(map));
    return unique;
}

int gau_distance(const GauMap& map, Elem x, Elem y) {
    return (map.row_of(x) != map.row_of(y)) + (map.col_of(x) != map.col_of(y));
}

int gau_distance_by_indices(const GauMap& map, Elem x, Elem y) {
    const int i = map.row_of(x), ip = map.row_of(y);
    const int j = map.col_of(x), jp = map.col_of(y);
    return std::min(1, (i + 3 * ip) % 4) + std::min(1, (j + 3 * jp) % 4);
}

long gau_distance(const GauMap& map, std::span<const Elem> x, std::span<const Elem> y) {
    if (x.size() != y.size())
        throw LengthMismatch("gau distance of words of length " + std::to_string(x.size()) +
                             " and " + std::to_string(y.size()));
    long d = 0;
    for (std::size_t i = 0; i < x.size(); ++i) d += gau_distance(map, x[i], y[i]);
    return d;
}

DnaWord encode(const GauMap& map, std::span<const Elem> x) {
    std::string s;
    s.reserve(2 * x.size());
    for (Elem e : x) {
        const Dinucleotide d = map.image(e);
        s += to_char(d.first);
        s += to_char(d.second);
    }
    return DnaWord(std::move(s));
}

std::vector<Elem> decode(const GauMap& map, const DnaWord& w) {
    if (w.size() % 2 != 0)
        throw OddLength("cannot decode a DNA word of odd length " + std::to_string(w.size()));
    std::vector<Elem> out(w.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = map.preimage(Dinucleotide{w.at(2 * i), w.at(2 * i + 1)});
    return out;
}

Word reverse_preimage(std::span<const Elem> x) {
    Word out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = triple(x[x.size() - 1 - i]);
    return out;
}

Word complement_preimage(Elem lambda, std::span<const Elem> x) {
    Word out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = add(x[i], lambda);
    return out;
}

DinucleotideTable parse_table_text(std::string_view text) {
    DinucleotideTable table{};
    std::array<bool, 16> seen{};
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const std::size_t tab = line.find_first_of("\t ");
        if (tab == std::string::npos) throw ParseError("map line without separator: " + line);
        const Elem x = parse_elem(line.substr(0, tab));
        const std::size_t rest = line.find_first_not_of("\t ", tab);
        if (rest == std::string::npos || line.size() - rest < 2)
            throw ParseError("map line without dinucleotide: " + line);
        const Dinucleotide d{nucleotide_from_char(line[rest]),
                             nucleotide_from_char(line[rest + 1])};
        if (seen[x.index()]) throw ParseError("duplicate element in map: " + to_string(x));
        seen[x.index()] = true;
        table[x.index()] = d;
    }
    for (Elem x : kAllElements)
        if (!seen[x.index()]) throw ParseError("map is missing element " + to_string(x));
    return table;
}

}  // namespace rtheta
