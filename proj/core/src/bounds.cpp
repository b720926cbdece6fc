#include "rtheta/bounds.hpp"

namespace rtheta {

namespace {

BigInt factorial(long long n) {
    BigInt f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt ipow(long long base, long long e) {
    BigInt p = 1;
    for (long long i = 0; i < e; ++i) p *= base;
    return p;
}

Verdict compare(const BigInt& lhs, const BigInt& rhs) {
    if (lhs < rhs) return Verdict::Satisfied;
    if (lhs == rhs) return Verdict::MetWithEquality;
    return Verdict::Violated;
}

}  // namespace

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::SpherePacking: return "sphere-packing";
        case BoundKind::GilbertVarshamov: return "gilbert-varshamov";
        case BoundKind::Singleton: return "singleton";
        case BoundKind::Plotkin: return "plotkin";
    }
    return "?";
}

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::Satisfied: return "satisfied";
        case Verdict::MetWithEquality: return "met-with-equality";
        case Verdict::Violated: return "violated";
        case Verdict::Inapplicable: return "inapplicable";
    }
    return "?";
}

BigInt circle_count(long long n, long long r) {
    if (n < 0 || r < 0 || r > 2 * n)
        throw RadiusOutOfRange("radius " + std::to_string(r) + " outside [0, 2n] for n = " +
                               std::to_string(n));
    BigInt total = 0;
    const BigInt nfact = factorial(n);
    for (long long i = std::max<long long>(0, r - n); 2 * i <= r; ++i) {
        const BigInt ways = nfact / (factorial(i) * factorial(r - 2 * i) * factorial(n - r + i));
        total += ways * ipow(9, i) * ipow(6, r - 2 * i);
    }
    return total;
}

BigInt sphere_size(long long n, long long r) {
    if (n < 0 || r < 0 || r > 2 * n)
        throw RadiusOutOfRange("radius " + std::to_string(r) + " outside [0, 2n] for n = " +
                               std::to_string(n));
    BigInt total = 0;
    for (long long i = 0; i <= r; ++i) total += circle_count(n, i);
    return total;
}

BoundReport sphere_packing(long long n, const BigInt& M, long long d) {
    const long long t = (d - 1) / 2;
    BoundReport rep{BoundKind::SpherePacking, n, M, d, M * sphere_size(n, t), pow16(n),
                    Verdict::Inapplicable};
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

BigInt gv_lower_bound(long long n, long long d) {
    const BigInt ball = sphere_size(n, d - 1);
    return (pow16(n) + ball - 1) / ball;
}

BoundReport singleton(long long n, const BigInt& M, long long d) {
    if (d < 1) throw RadiusOutOfRange("minimum distance must be at least 1");
    const long long t = (d - 1) / 2;
    if (t > n) throw RadiusOutOfRange("d exceeds 2n + 1");
    BoundReport rep{BoundKind::Singleton, n, M, d, M, pow16(n - t), Verdict::Inapplicable};
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

bool is_mgds(long long n, const BigInt& M, long long d) {
    return singleton(n, M, d).verdict == Verdict::MetWithEquality;
}

BoundReport plotkin(long long n, const BigInt& M, long long d) {
    BoundReport rep{BoundKind::Plotkin, n, M, d, M, 0, Verdict::Inapplicable};
    if (2 * d <= 3 * n) return rep;
    rep.rhs = BigInt(2 * d) / (2 * d - 3 * n);
    rep.verdict = compare(rep.lhs, rep.rhs);
    return rep;
}

std::vector<TypeCorollary> type_corollaries(const std::vector<int>& profile, long long n,
                                            long long d) {
    if (profile.size() != 2 && profile.size() != 4)
        throw NotStandardForm("profile must have 2 or 4 block sizes");
    // e4 = 4 * log16(M): 16^{k0} 4^{k1} or 16^{k0} 8^{k1} 4^{k2} 2^{k3}
    long long e4 = 0;
    if (profile.size() == 2)
        e4 = 4ll * profile[0] + 2ll * profile[1];
    else
        e4 = 4ll * profile[0] + 3ll * profile[1] + 2ll * profile[2] + profile[3];

    std::vector<TypeCorollary> out;
    const long long t = (d - 1) / 2;

    // sphere_size(n, t) <= 16^{n - e4/4}
    TypeCorollary sp{BoundKind::SpherePacking, sphere_size(n, t) * pow2(e4), pow2(4 * n),
                     Verdict::Inapplicable};
    sp.verdict = sp.lhs < sp.rhs    ? Verdict::Satisfied
                 : sp.lhs == sp.rhs ? Verdict::MetWithEquality
                                    : Verdict::Violated;
    out.push_back(sp);

    // floor((d-1)/2) <= n - e4/4
    TypeCorollary si{BoundKind::Singleton, BigInt(4 * t + e4), BigInt(4 * n),
                     Verdict::Inapplicable};
    si.verdict = si.lhs < si.rhs    ? Verdict::Satisfied
                 : si.lhs == si.rhs ? Verdict::MetWithEquality
                                    : Verdict::Violated;
    out.push_back(si);

    // e4/4 <= log16(2d / (2d - 3n)), i.e. 2^{e4} (2d - 3n) <= 2d
    TypeCorollary pl{BoundKind::Plotkin, 0, 0, Verdict::Inapplicable};
    if (2 * d > 3 * n) {
        pl.lhs = pow2(e4) * (2 * d - 3 * n);
        pl.rhs = BigInt(2 * d);
        pl.verdict = pl.lhs < pl.rhs    ? Verdict::Satisfied
                     : pl.lhs == pl.rhs ? Verdict::MetWithEquality
                                        : Verdict::Violated;
    }
    out.push_back(pl);
    return out;
}

}  // namespace rtheta
