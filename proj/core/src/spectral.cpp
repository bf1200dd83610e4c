#include "tracemin/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tracemin/errors.hpp"

namespace tracemin {

namespace detail {

// Convergence threshold and zero cutoff share this scale: an eigenvalue the
// sweep cannot resolve from zero must not reach sqrt(), which would blow
// rounding noise of order eps*trace up to ~1e-8 on exactly singular Grams.
constexpr double kResolutionRel = 1e-13;

namespace {

double off_diagonal_norm(const double* g, int dim) {
    double sum = 0;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (i != j) sum += g[i * dim + j] * g[i * dim + j];
    return std::sqrt(sum);
}

}  // namespace

void jacobi_eigenvalues(double* g, int dim) {
    double trace = 0;
    for (int i = 0; i < dim; ++i) trace += g[i * dim + i];
    const double thresh = kResolutionRel * trace;

    for (int sweep = 0; sweep <= 64; ++sweep) {
        if (off_diagonal_norm(g, dim) <= thresh) return;
        if (sweep == 64) break;
        for (int p = 0; p < dim - 1; ++p) {
            for (int q = p + 1; q < dim; ++q) {
                const double apq = g[p * dim + q];
                if (apq == 0.0) continue;
                const double tau = (g[q * dim + q] - g[p * dim + p]) / (2.0 * apq);
                const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                          : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                for (int i = 0; i < dim; ++i) {  // columns p, q
                    const double gip = g[i * dim + p], giq = g[i * dim + q];
                    g[i * dim + p] = c * gip - s * giq;
                    g[i * dim + q] = s * gip + c * giq;
                }
                for (int j = 0; j < dim; ++j) {  // rows p, q
                    const double gpj = g[p * dim + j], gqj = g[q * dim + j];
                    g[p * dim + j] = c * gpj - s * gqj;
                    g[q * dim + j] = s * gpj + c * gqj;
                }
                g[p * dim + q] = g[q * dim + p] = 0.0;
            }
        }
    }
    throw std::runtime_error("jacobi eigensolver did not converge within 64 sweeps");
}

double trace_norm_from_gram(double* g, int dim) {
    double trace = 0;
    for (int i = 0; i < dim; ++i) trace += g[i * dim + i];
    jacobi_eigenvalues(g, dim);
    const double zero = kResolutionRel * trace;
    double sum = 0;
    for (int i = 0; i < dim; ++i) {
        const double lambda = g[i * dim + i];
        if (lambda > zero) sum += std::sqrt(lambda);
    }
    return sum;
}

}  // namespace detail

Spectrum singular_spectrum(const BinaryMatrix& a) {
    const bool wide = a.rows() > a.cols();  // Gram taken on the smaller side
    const int dim = wide ? a.cols() : a.rows();
    const int other = wide ? a.rows() : a.cols();
    if (dim > 64)
        throw guard_error("spectral cap exceeded: min(rows, cols) = " + std::to_string(dim) + " > 64");

    std::vector<double> g(std::size_t(dim) * dim, 0.0);
    for (int i = 0; i < dim; ++i) {
        for (int j = i; j < dim; ++j) {
            std::int64_t dot = 0;
            for (int k = 0; k < other; ++k) {
                const auto x = wide ? a.at(k, i) : a.at(i, k);
                const auto y = wide ? a.at(k, j) : a.at(j, k);
                dot += x & y;
            }
            g[std::size_t(i) * dim + j] = g[std::size_t(j) * dim + i] = double(dot);
        }
    }

    double trace = 0;  // = ones count, exactly
    for (int i = 0; i < dim; ++i) trace += g[std::size_t(i) * dim + i];

    detail::jacobi_eigenvalues(g.data(), dim);

    const double zero = detail::kResolutionRel * trace;
    std::vector<double> eigs(dim);
    for (int i = 0; i < dim; ++i) {
        const double lambda = g[std::size_t(i) * dim + i];
        eigs[i] = lambda > zero ? lambda : 0.0;
    }
    std::sort(eigs.begin(), eigs.end(), std::greater<>());

    Spectrum out;
    out.singular_values.resize(dim);
    double sum = 0;
    for (int i = 0; i < dim; ++i) {
        out.singular_values[i] = std::sqrt(eigs[i]);
        sum += out.singular_values[i];
    }
    out.trace_norm = sum;
    out.frobenius = std::sqrt(trace);
    return out;
}

double pro1_lower_bound(double frobenius_sq, double a_cap) {
    if (!(frobenius_sq >= 0)) throw std::invalid_argument("frobenius_sq must be nonnegative");
    if (!(a_cap >= 0) || a_cap * a_cap > frobenius_sq * (1 + 1e-12))
        throw std::invalid_argument("a_cap must lie in [0, sqrt(frobenius_sq)]");
    return std::sqrt(std::max(0.0, frobenius_sq - a_cap * a_cap)) + a_cap;
}

bool interlacing_check(const BinaryMatrix& a, const BinaryMatrix& b,
                       const std::vector<int>& row_sel, const std::vector<int>& col_sel) {
    if (!(a.submatrix(row_sel, col_sel) == b))
        throw std::invalid_argument("b is not the selected submatrix of a");
    const Spectrum sa = singular_spectrum(a);
    const Spectrum sb = singular_spectrum(b);
    for (std::size_t i = 0; i < sb.singular_values.size(); ++i) {
        if (sa.singular_values[i] < sb.singular_values[i] - 1e-9) return false;
    }
    return true;
}

}  // namespace tracemin
