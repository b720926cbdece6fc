#pragma once

#include <string>
#include <vector>

#include "rtheta/bigint.hpp"
#include "rtheta/errors.hpp"

namespace rtheta {

// number of words at Gau distance exactly r from a fixed center in R^n:
// sum over i of n!/(i!(r-2i)!(n-r+i)!) * 9^i * 6^{r-2i}
BigInt circle_count(long long n, long long r);  // RadiusOutOfRange unless 0 <= r <= 2n
// number of words at distance at most r
BigInt sphere_size(long long n, long long r);

enum class BoundKind { SpherePacking, GilbertVarshamov, Singleton, Plotkin };
enum class Verdict { Satisfied, MetWithEquality, Violated, Inapplicable };

std::string to_string(BoundKind kind);
std::string to_string(Verdict verdict);

struct BoundReport {
    BoundKind kind;
    long long n = 0;
    BigInt M;
    long long d = 0;
    BigInt lhs, rhs;
    Verdict verdict = Verdict::Inapplicable;
};

// M * sphere_size(n, floor((d-1)/2)) <= 16^n
BoundReport sphere_packing(long long n, const BigInt& M, long long d);
// guaranteed lower bound on A16(n, d): ceil(16^n / sphere_size(n, d-1))
BigInt gv_lower_bound(long long n, long long d);
// M <= 16^{n - floor((d-1)/2)}
BoundReport singleton(long long n, const BigInt& M, long long d);
bool is_mgds(long long n, const BigInt& M, long long d);
// M <= floor(2d / (2d - 3n)) when 2d > 3n, Inapplicable otherwise
BoundReport plotkin(long long n, const BigInt& M, long long d);

// the three bounds in k-space for a profiled linear code; exponents are
// quarter integers, so every comparison is cross-multiplied into exact
// integer form (lhs <= rhs)
struct TypeCorollary {
    BoundKind kind;
    BigInt lhs, rhs;
    Verdict verdict = Verdict::Inapplicable;
};
std::vector<TypeCorollary> type_corollaries(const std::vector<int>& profile, long long n,
                                            long long d);

}  // namespace rtheta
