#pragma once

#include <cstdint>
#include <string>

namespace tracemin {

#ifndef __SIZEOF_INT128__
#error "tracemin requires a compiler with 128-bit integer support"
#endif

// Exact integer keys (the inner radicands of closed forms) can exceed 64 bits
// for very wide shapes, so they are carried as 128-bit values end to end and
// only converted to double at the last step.
using uint128 = unsigned __int128;
using int128 = __int128;

std::string u128_to_string(uint128 v);
double u128_to_double(uint128 v);

// Overflow-checked products; throw std::overflow_error instead of wrapping.
std::int64_t checked_mul(std::int64_t a, std::int64_t b);
std::int64_t checked_add(std::int64_t a, std::int64_t b);

}  // namespace tracemin
