#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "tracemin/intx.hpp"
#include "tracemin/step_forms.hpp"

namespace tracemin {

enum class PsiClass {
    Rank1,                   // an all-ones block (or single row) attains sqrt(m)
    PrimeTwoRow,             // n < m <= 2n, m prime: two-row closed form
    PrimeOrDoubleThreeRow,   // 2n < m <= 3n, n >= 4, m prime or twice a prime
    TripleFourRow,           // 3n < m <= 4n, n >= 6, m = 12k+-2 with prime triple
    BoundOnly,               // certified bounds, exact value open
};

const char* to_string(PsiClass c);

/// Minimum trace norm over n x n (0,1)-matrices with exactly m ones.
/// status Exact carries the value; Bounds carries sqrt(m) <= psi <= upper.
/// Every value of the form sqrt(m + 2 sqrt(inner)) carries its exact integer
/// key (m, inner) so downstream comparisons never parse decimals.
struct PsiResult {
    std::int64_t n = 0, m = 0;
    enum class Status { Exact, Bounds } status = Status::Bounds;
    double lower = 0;       // Exact: == upper
    double upper = 0;
    uint128 upper_inner = 0;  // upper == sqrt(m + 2 sqrt(upper_inner)); lower key is (m, 0)
    std::optional<TwoStepShape> shape_witness;                     // attains upper when present
    std::optional<std::pair<std::int64_t, std::int64_t>> rank1_witness;  // (a, b) block, a*b = m
    PsiClass classification = PsiClass::BoundOnly;

    bool exact() const { return status == Status::Exact; }
    double value() const { return upper; }  // exact value, or the best upper bound
};

PsiResult psi(std::int64_t n, std::int64_t m);

/// General-purpose cap sqrt(m) + sqrt(ceil(m/n))/2, with the constructive
/// witness (s, p, 1, k), k = ceil(m/n), p = floor(m/k), s = m - kp, when
/// s > 0 (s = 0 means a rank-one block attains sqrt(m) instead).
struct GeneralBound {
    double value = 0;
    std::optional<TwoStepShape> witness;
};
GeneralBound gb_bound(std::int64_t n, std::int64_t m);

/// Four-row upper bound for m <= 4n by residue of m mod 4; rejects m < 5 and
/// m divisible by 4 (the caller handles those through a rank-one block).
double pro4_bound(std::int64_t m);

/// True iff the best constructive value for (n, m) is strictly below
/// sqrt(m-1) + 1. Needs 2 <= m <= min(4n, n^2).
bool cor1_check(std::int64_t n, std::int64_t m);

}  // namespace tracemin
