#include "tracemin/intx.hpp"

#include <stdexcept>

namespace tracemin {

std::string u128_to_string(uint128 v) {
    if (v == 0) return "0";
    std::string out;
    while (v != 0) {
        out.push_back(char('0' + int(v % 10)));
        v /= 10;
    }
    return {out.rbegin(), out.rend()};
}

double u128_to_double(uint128 v) {
    // high and low halves; exact for v < 2^53, best-effort rounding above
    const auto hi = std::uint64_t(v >> 64);
    const auto lo = std::uint64_t(v);
    return double(hi) * 18446744073709551616.0 + double(lo);
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("integer product overflows 64 bits");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("integer sum overflows 64 bits");
    return out;
}

}  // namespace tracemin
