#ifndef WQAP_ARITH_HPP
#define WQAP_ARITH_HPP

#include <cstdint>
#include <string>

#include "wqap/errors.hpp"

namespace wqap {

// Exact objective values. Instances are gated so that every intermediate
// fits a signed 128-bit accumulator (see WienerQapInstance::objective_bound).
using Wide = __int128;
using UWide = unsigned __int128;

inline Wide checked_add(Wide a, Wide b) {
    Wide out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorCode::Overflow, "128-bit addition overflow");
    return out;
}

inline Wide checked_mul(Wide a, Wide b) {
    Wide out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorCode::Overflow, "128-bit multiplication overflow");
    return out;
}

std::string wide_to_string(Wide v);

/// Parses a decimal integer (optional leading '-'). Throws Malformed.
Wide wide_from_string(const std::string& s);

/// Floor square root of a non-negative 64-bit value.
std::int64_t isqrt64(std::int64_t v);

}  // namespace wqap

#endif
