#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tracemin/binary_matrix.hpp"
#include "tracemin/intx.hpp"
#include "tracemin/spectral.hpp"

namespace tracemin {

/// Two-step block form  [[J_{s,p}  J_{s,r}]
///                       [J_{q-s,p}  0    ]]
/// with q total rows, s of them full. Invariants: s, p, r >= 1 and q > s.
struct TwoStepShape {
    std::int64_t s = 0, p = 0, r = 0, q = 0;

    std::int64_t ones() const;       // p*q + r*s, overflow-checked
    uint128 inner_key() const;       // p*r*s*(q-s), the inner radicand
    bool operator==(const TwoStepShape&) const = default;
};

/// Rejects shapes violating the invariants (or whose ones() overflows).
void validate(const TwoStepShape& t);

/// Closed-form spectrum: exactly two nonzero singular values with
///   sigma1^2 = (pq+rs + sqrt(D))/2,  sigma2^2 = (pq+rs - sqrt(D))/2,
///   D = (pq+rs)^2 - 4(q-s)prs,
/// remaining values zero; trace norm sqrt(pq+rs + 2 sqrt(prs(q-s))).
Spectrum two_step_spectrum(const TwoStepShape& t);

/// Trace norm only — no allocation, usable at any admissible size.
double two_step_trace_norm(const TwoStepShape& t);

/// Builds the dense block matrix. Guarded: q*(p+r) <= 10^4 entries.
BinaryMatrix materialize(const TwoStepShape& t);

/// Rejects (n, m) pairs outside 2 <= n, 1 <= m <= n^2 (n^2 computed wide,
/// so huge n never overflows the comparison).
void check_board(std::int64_t n, std::int64_t m);

/// Every two-step shape with pq + rs = m fitting an n x n board (q <= n,
/// p + r <= n) whose right block has width 1, i.e. the family
/// [[J_{s,p} J_{s,1}],[J_{q-s,p} 0]]; the mirrored family with bottom-block
/// height 1 consists exactly of their transposes ((s,p,1,q) maps to
/// (p,s,q-s,p+1)), so each equivalence class appears once, in this
/// orientation. Sorted ascending by trace norm via the exact integer key
/// (m, prs(q-s)), ties broken lexicographically on (s,p,r,q).
std::vector<TwoStepShape> enumerate_shapes(std::int64_t n, std::int64_t m);

/// First element of enumerate_shapes(n, m) without building the list.
std::optional<TwoStepShape> best_family_shape(std::int64_t n, std::int64_t m);

/// Text form "s,p,r,q".
TwoStepShape parse_shape(const std::string& text);
std::string shape_to_string(const TwoStepShape& t);

}  // namespace tracemin
