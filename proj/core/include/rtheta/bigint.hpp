#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace rtheta {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(long long e) { return BigInt(1) << e; }
inline BigInt pow16(long long e) { return BigInt(1) << (4 * e); }

}  // namespace rtheta
