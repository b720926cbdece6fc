#include "rtheta/reed_muller.hpp"

#include <algorithm>

namespace rtheta {

namespace {

void validate(const RMSpec& spec) {
    if (spec.r < 0 || spec.r > spec.m)
        throw InvalidOrder("need 0 <= r <= m, got r = " + std::to_string(spec.r) +
                           ", m = " + std::to_string(spec.m));
    const Ring& ring = Ring::of(spec.theta);
    if (spec.z == kZero || ring.is_unit(spec.z))
        throw NotZeroDivisor("z = " + to_string(spec.z) +
                             " is not a nonzero zero divisor of this ring");
}

Mat build_rows(int r, int m, Elem z) {
    if (r == 0) return {Word(static_cast<std::size_t>(1) << m, kOne)};
    if (r == m) {
        Mat rows = build_rows(m - 1, m, z);
        Word cap(static_cast<std::size_t>(1) << m, kZero);
        cap.back() = z;
        rows.push_back(std::move(cap));
        return rows;
    }
    Mat rows;
    for (const Word& top : build_rows(r, m - 1, z)) {
        Word row = top;
        row.insert(row.end(), top.begin(), top.end());
        rows.push_back(std::move(row));
    }
    const std::size_t half = static_cast<std::size_t>(1) << (m - 1);
    for (const Word& bottom : build_rows(r - 1, m - 1, z)) {
        Word row(half, kZero);
        row.insert(row.end(), bottom.begin(), bottom.end());
        rows.push_back(std::move(row));
    }
    return rows;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long c = 1;
    for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
    return c;
}

}  // namespace

long long rm_row_count(int r, int m) {
    long long s = 0;
    for (int i = 0; i <= r; ++i) s += binomial(m, i);
    return s;
}

long long rm_z_row_count(int r, int m) {
    long long s = 0;
    for (int i = 0; i <= r - 1; ++i) s += binomial(m - 1, i);
    return s;
}

GeneratorMatrix rm_generator(const RMSpec& spec) {
    validate(spec);
    GeneratorMatrix g{spec.theta, static_cast<std::size_t>(1) << spec.m,
                      build_rows(spec.r, spec.m, spec.z), std::nullopt};
    return g;
}

RMParams rm_dna_params(const RMSpec& spec) {
    validate(spec);
    const Ring& ring = Ring::of(spec.theta);
    if (!ring.is_chain())
        throw UnsupportedTheta("closed-form parameters cover the chain rings only");

    const long long a = rm_z_row_count(spec.r, spec.m);
    const long long b = rm_row_count(spec.r, spec.m);
    const Elem theta = spec.theta, z = spec.z;

    RMParams params;
    params.n = 2ll << spec.m;

    auto in = [&](std::initializer_list<Elem> xs) {
        return std::find(xs.begin(), xs.end(), z) != xs.end();
    };

    if (theta == kTwo || theta == kTwoPlusTwoW) {
        if (in({kTwoW}))
            params.M = pow2(4 * b - 3 * a);
        else if (in({kTwo, kTwoPlusTwoW}))
            params.M = pow2(4 * b - 2 * a);
        else if (in({kW, elem(2, 1), elem(0, 3), elem(2, 3)}))
            params.M = pow2(4 * b - a);
        else
            throw UnsupportedZ("z = " + to_string(z) + " has no case for this ring");
        params.d = in({kW, elem(2, 1), elem(0, 3), elem(2, 3)}) ? 1ll << (spec.m - spec.r)
                                                                : 2ll << (spec.m - spec.r);
        return params;
    }
    if (theta == elem(3, 0) || theta == elem(1, 2)) {
        if (in({kTwoPlusTwoW}))
            params.M = pow2(4 * b - 3 * a);
        else if (in({kTwo, kTwoW}))
            params.M = pow2(4 * b - 2 * a);
        else if (in({elem(1, 1), elem(3, 1), elem(1, 3), elem(3, 3)}))
            params.M = pow2(4 * b - a);
        else
            throw UnsupportedZ("z = " + to_string(z) + " has no case for this ring");
        params.d = in({elem(1, 1), elem(3, 1), elem(1, 3), elem(3, 3)})
                       ? 1ll << (spec.m - spec.r)
                       : 2ll << (spec.m - spec.r);
        return params;
    }
    // 3-ideal class: every nonzero zero divisor is accepted and M does not
    // depend on the choice
    if (!in({kTwo, kTwoW, kTwoPlusTwoW}))
        throw UnsupportedZ("z = " + to_string(z) + " has no case for this ring");
    params.M = BigInt(1) << (2 * (2 * b - a));  // 4^{2b-a}
    params.d = 2ll << (spec.m - spec.r);
    return params;
}

DnaCode rm_dna_code(const RMSpec& spec, const GauMap& map, std::uint64_t span_guard,
                    std::size_t word_guard) {
    const CodewordSet words = span(rm_generator(spec), span_guard);
    DnaCode dna = dna_image(words, map, word_guard);
    const ClosureReport closure = dna.closure_checks();
    if (!closure.reversible || !closure.rc_closed)
        throw Error("reed-muller DNA image is not reverse/rc closed (theta " +
                    to_string(spec.theta) + ", z " + to_string(spec.z) + ")");
    return dna;
}

RMVerification rm_verify(const RMSpec& spec, const GauMap& map, std::uint64_t span_guard) {
    RMVerification v;
    v.spec = spec;
    v.formula = rm_dna_params(spec);

    LinearCode code = make_code(rm_generator(spec), span_guard);
    v.span_size = code.words.size();
    v.min_distance = min_gau_distance(code, map);

    // closure of the DNA image, evaluated through the ring preimages; both
    // transforms are bijections, so closure is set equality of the mapped
    // word list with the original, checked by sorting
    std::array<std::uint8_t, 16> tripled{}, shifted{};
    for (Elem x : kAllElements) {
        tripled[x.index()] = static_cast<std::uint8_t>(triple(x).index());
        shifted[x.index()] = static_cast<std::uint8_t>(add(x, map.lambda()).index());
    }
    const std::size_t n = code.words.length();
    const auto& packed = code.words.packed();
    int min_weight = 1 << 30;
    std::vector<std::uint64_t> mapped(packed.size());
    for (std::size_t j = 0; j < packed.size(); ++j) {
        const std::uint64_t key = packed[j];
        std::uint64_t rev = 0;
        for (std::size_t i = 0; i < n; ++i)
            rev |= static_cast<std::uint64_t>(tripled[(key >> (4 * (n - 1 - i))) & 15])
                   << (4 * i);
        mapped[j] = rev;
        if (key != 0) min_weight = std::min(min_weight, packed_weight(key));
    }
    v.min_support_weight = code.words.size() > 1 ? min_weight : 0;
    std::sort(mapped.begin(), mapped.end());
    v.reverse_closed = mapped == packed;
    for (std::uint64_t& key : mapped) {
        std::uint64_t rc = 0;
        for (std::size_t i = 0; i < n; ++i)
            rc |= static_cast<std::uint64_t>(shifted[(key >> (4 * i)) & 15]) << (4 * i);
        key = rc;
    }
    std::sort(mapped.begin(), mapped.end());
    v.rc_closed = mapped == packed;

    v.size_matches = BigInt(v.span_size) == v.formula.M;
    v.distance_matches = v.min_distance == v.formula.d;
    return v;
}

}  // namespace rtheta
