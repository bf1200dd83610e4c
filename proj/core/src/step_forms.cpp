#include "tracemin/step_forms.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "tracemin/errors.hpp"

namespace tracemin {

std::int64_t TwoStepShape::ones() const { return checked_add(checked_mul(p, q), checked_mul(r, s)); }

uint128 TwoStepShape::inner_key() const { return uint128(p) * uint128(r) * uint128(s) * uint128(q - s); }

void validate(const TwoStepShape& t) {
    if (t.s < 1 || t.p < 1 || t.r < 1) throw std::invalid_argument("two-step shape needs s, p, r >= 1");
    if (t.q <= t.s) throw std::invalid_argument("two-step shape needs q > s");
    (void)t.ones();  // throws std::overflow_error if out of 64-bit range
}

double two_step_trace_norm(const TwoStepShape& t) {
    validate(t);
    return std::sqrt(double(t.ones()) + 2.0 * std::sqrt(u128_to_double(t.inner_key())));
}

Spectrum two_step_spectrum(const TwoStepShape& t) {
    validate(t);
    const std::int64_t m = t.ones();
    const uint128 inner = t.inner_key();
    const uint128 d128 = uint128(m) * uint128(m) - 4 * inner;  // discriminant, >= 0 for real shapes
    const double sqrt_d = std::sqrt(u128_to_double(d128));
    const double s1_sq = (double(m) + sqrt_d) / 2.0;
    const double s2_sq = 2.0 * u128_to_double(inner) / (double(m) + sqrt_d);  // stable small root

    Spectrum out;
    const std::int64_t count = std::min(t.q, t.p + t.r);
    out.singular_values.assign(std::size_t(count), 0.0);
    out.singular_values[0] = std::sqrt(s1_sq);
    if (count > 1) out.singular_values[1] = std::sqrt(s2_sq);
    out.trace_norm = std::sqrt(double(m) + 2.0 * std::sqrt(u128_to_double(inner)));
    out.frobenius = std::sqrt(double(m));
    return out;
}

BinaryMatrix materialize(const TwoStepShape& t) {
    validate(t);
    const std::int64_t entries = checked_mul(t.q, checked_add(t.p, t.r));
    if (entries > 10000)
        throw guard_error("materialize cap exceeded: shape has " + std::to_string(entries) + " entries, cap is 10000");
    const int rows = int(t.q), cols = int(t.p + t.r);
    std::vector<std::uint8_t> bits(std::size_t(rows) * cols, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) bits[std::size_t(i) * cols + j] = (i < t.s || j < t.p) ? 1 : 0;
    return {rows, cols, std::move(bits)};
}

void check_board(std::int64_t n, std::int64_t m) {
    if (n < 2) throw std::invalid_argument("board size n must be at least 2");
    if (m < 1 || uint128(m) > uint128(n) * uint128(n)) throw std::invalid_argument("need 1 <= m <= n^2");
}

namespace {

// Calls fn(shape) for each family member; q fixes the shape uniquely because
// pq + s = m with 1 <= s <= q-1 forces p = floor(m/q), s = m mod q.
template <typename Fn>
void for_each_family_shape(std::int64_t n, std::int64_t m, Fn&& fn) {
    for (std::int64_t q = 2; q <= std::min(n, m); ++q) {
        const std::int64_t s = m % q;
        if (s == 0) continue;
        const std::int64_t p = m / q;
        if (p < 1 || p + 1 > n) continue;
        fn(TwoStepShape{s, p, 1, q});
    }
}

bool key_less(const TwoStepShape& a, const TwoStepShape& b) {
    const uint128 ka = a.inner_key(), kb = b.inner_key();
    if (ka != kb) return ka < kb;
    return std::tie(a.s, a.p, a.r, a.q) < std::tie(b.s, b.p, b.r, b.q);
}

}  // namespace

std::vector<TwoStepShape> enumerate_shapes(std::int64_t n, std::int64_t m) {
    check_board(n, m);
    std::vector<TwoStepShape> out;
    for_each_family_shape(n, m, [&](const TwoStepShape& t) { out.push_back(t); });
    std::sort(out.begin(), out.end(), key_less);
    return out;
}

std::optional<TwoStepShape> best_family_shape(std::int64_t n, std::int64_t m) {
    check_board(n, m);
    std::optional<TwoStepShape> best;
    for_each_family_shape(n, m, [&](const TwoStepShape& t) {
        if (!best || key_less(t, *best)) best = t;
    });
    return best;
}

TwoStepShape parse_shape(const std::string& text) {
    std::array<std::int64_t, 4> vals{};
    std::size_t pos = 0;
    for (int i = 0; i < 4; ++i) {
        if (pos >= text.size()) throw std::invalid_argument("shape text must be \"s,p,r,q\"");
        std::size_t used = 0;
        vals[i] = std::stoll(text.substr(pos), &used);
        pos += used;
        if (i < 3) {
            if (pos >= text.size() || text[pos] != ',') throw std::invalid_argument("shape text must be \"s,p,r,q\"");
            ++pos;
        }
    }
    if (pos != text.size()) throw std::invalid_argument("trailing characters in shape text");
    TwoStepShape t{vals[0], vals[1], vals[2], vals[3]};
    validate(t);
    return t;
}

std::string shape_to_string(const TwoStepShape& t) {
    return std::to_string(t.s) + "," + std::to_string(t.p) + "," + std::to_string(t.r) + "," + std::to_string(t.q);
}

}  // namespace tracemin
