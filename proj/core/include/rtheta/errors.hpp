#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rtheta {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error { using Error::Error; };
struct LengthMismatch : Error { using Error::Error; };
struct NonChainRing : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };
struct NotBijective : Error { using Error::Error; };
struct OddLength : Error { using Error::Error; };
struct SingletonCode : Error { using Error::Error; };
struct NotStandardForm : Error { using Error::Error; };
struct NotAUnit : Error { using Error::Error; };
struct InvalidOrder : Error { using Error::Error; };
struct NotZeroDivisor : Error { using Error::Error; };
struct UnsupportedTheta : Error { using Error::Error; };
struct UnsupportedZ : Error { using Error::Error; };
struct RadiusOutOfRange : Error { using Error::Error; };

// Enumeration would exceed the configured guard; carries the estimate.
struct TooLarge : Error {
    TooLarge(const std::string& what, std::uint64_t estimated_size)
        : Error(what + " (estimated size " + std::to_string(estimated_size) + ")"),
          estimated(estimated_size) {}
    std::uint64_t estimated;
};

}  // namespace rtheta
