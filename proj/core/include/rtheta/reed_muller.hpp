#pragma once

#include "rtheta/bigint.hpp"
#include "rtheta/linear_code.hpp"

namespace rtheta {

struct RMSpec {
    Elem theta;
    Elem z;  // nonzero zero divisor of R_theta
    int r = 0;
    int m = 0;
};

// Recursive generator of the r-th order Reed-Muller-type code of length 2^m:
// base r = 0 is the all-ones row, r = m stacks the (r, m-1)-free recursion on
// the row (0 ... 0 z), and 1 <= r <= m-1 doubles G(r, m-1) over G(r-1, m-1).
GeneratorMatrix rm_generator(const RMSpec& spec);  // InvalidOrder, NotZeroDivisor

long long rm_row_count(int r, int m);    // sum_{i<=r} C(m, i)
long long rm_z_row_count(int r, int m);  // sum_{i<=r-1} C(m-1, i)

struct RMParams {
    long long n = 0;  // DNA length 2^{m+1}
    BigInt M;
    long long d = 0;  // DNA Hamming distance
};
// closed-form (n, M, d_H) of the encoded code; the case split depends on the
// class of theta and on z
RMParams rm_dna_params(const RMSpec& spec);  // UnsupportedTheta, UnsupportedZ

// phi(span); closure under reverse and reverse-complement is asserted
DnaCode rm_dna_code(const RMSpec& spec, const GauMap& map,
                    std::uint64_t span_guard = kDefaultSpanGuard,
                    std::size_t word_guard = 1u << 20);

struct RMVerification {
    RMSpec spec;
    RMParams formula;
    std::uint64_t span_size = 0;  // enumerated |span|
    int min_distance = 0;         // exact min distance of the encoded code
    int min_support_weight = 0;   // least number of nonzero coordinates
    bool reverse_closed = false;
    bool rc_closed = false;
    bool size_matches = false;
    bool distance_matches = false;

    bool clean() const { return size_matches && distance_matches && reverse_closed && rc_closed; }
};
// enumeration oracle against the closed form; closure is checked through the
// ring preimages of word reversal and complement, which encode the DNA-side
// constraints exactly
RMVerification rm_verify(const RMSpec& spec, const GauMap& map,
                         std::uint64_t span_guard = kDefaultSpanGuard);

}  // namespace rtheta
