#pragma once

#include <vector>

#include "tracemin/binary_matrix.hpp"

namespace tracemin {

struct Spectrum {
    std::vector<double> singular_values;  // descending, length min(rows, cols)
    double trace_norm = 0;                // sum of singular values
    double frobenius = 0;                 // sqrt(sum of squares) = sqrt(ones) for a (0,1)-matrix
};

/// Singular values via a cyclic Jacobi eigensolve of the smaller Gram matrix.
/// Deterministic row-major sweep order; converges when the off-diagonal norm
/// drops below 1e-13 x trace(Gram); hard cap of 64 sweeps, reported as a
/// failure rather than returning silently. Eigenvalues below that same
/// resolution are reported as exact zeros — otherwise rounding residue of
/// order eps x trace on a singular Gram would surface as sqrt(eps)-sized
/// phantom singular values. Guarded: min(rows, cols) <= 64.
Spectrum singular_spectrum(const BinaryMatrix& a);

/// Lower bound sqrt(frobenius_sq - a_cap^2) + a_cap, valid whenever
/// sigma_1 <= a_cap <= sqrt(frobenius_sq). Rejects a_cap outside that range.
double pro1_lower_bound(double frobenius_sq, double a_cap);

/// Checks sigma_i(a) >= sigma_i(b) - 1e-9 for all i, where b must equal the
/// submatrix of a given by the selections (rejected otherwise).
bool interlacing_check(const BinaryMatrix& a, const BinaryMatrix& b,
                       const std::vector<int>& row_sel, const std::vector<int>& col_sel);

namespace detail {

/// In-place cyclic Jacobi on a symmetric matrix stored row-major; the
/// diagonal holds the eigenvalues on return (unsorted). Throws on
/// non-convergence after 64 sweeps.
void jacobi_eigenvalues(double* g, int dim);

/// Eigensolve + sum of clamped square roots; shared with the brute-force
/// enumerator, which cannot afford per-candidate allocation.
double trace_norm_from_gram(double* g, int dim);

}  // namespace detail

}  // namespace tracemin
