#include "tracemin/psi.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "tracemin/primes.hpp"

namespace tracemin {

const char* to_string(PsiClass c) {
    switch (c) {
        case PsiClass::Rank1: return "rank1";
        case PsiClass::PrimeTwoRow: return "prime-two-row";
        case PsiClass::PrimeOrDoubleThreeRow: return "prime-or-double-three-row";
        case PsiClass::TripleFourRow: return "triple-four-row";
        case PsiClass::BoundOnly: return "bound-only";
    }
    return "?";
}

namespace {

// m = 12k+2 with 4k+1, 6k+1, 12k+1 prime, or m = 12k-2 with 4k-1, 6k-1,
// 12k-1 prime. Only these m support the four-row closed form.
bool triple_prime(std::int64_t m) {
    std::int64_t k, sgn;
    if (m % 12 == 2) {
        k = (m - 2) / 12;
        sgn = 1;
    } else if (m % 12 == 10) {
        k = (m + 2) / 12;
        sgn = -1;
    } else {
        return false;
    }
    if (k < 1) return false;
    return is_prime(4 * k + sgn) && is_prime(6 * k + sgn) && is_prime(12 * k + sgn);
}

PsiResult exact_rank1(std::int64_t n, std::int64_t m, std::int64_t a, std::int64_t b) {
    PsiResult r;
    r.n = n;
    r.m = m;
    r.status = PsiResult::Status::Exact;
    r.lower = r.upper = std::sqrt(static_cast<double>(m));
    r.upper_inner = 0;
    r.rank1_witness = {a, b};
    r.classification = PsiClass::Rank1;
    return r;
}

PsiResult exact_shape(std::int64_t n, std::int64_t m, TwoStepShape w, PsiClass cls) {
    PsiResult r;
    r.n = n;
    r.m = m;
    r.status = PsiResult::Status::Exact;
    r.lower = r.upper = two_step_trace_norm(w);
    r.upper_inner = w.inner_key();
    r.shape_witness = w;
    r.classification = cls;
    return r;
}

}  // namespace

PsiResult psi(std::int64_t n, std::int64_t m) {
    check_board(n, m);

    if (m <= n) return exact_rank1(n, m, 1, m);
    if (auto f = factor_fit(n, m)) return exact_rank1(n, m, f->first, f->second);

    // From here on m > n and m has no two-factor fit inside the board, so
    // every minimizer misses sqrt(m) and the two-step family takes over.
    if (m <= 2 * n && is_prime(m)) {
        return exact_shape(n, m, TwoStepShape{1, (m - 1) / 2, 1, 2}, PsiClass::PrimeTwoRow);
    }
    if (m <= 3 * n && n >= 4 && (is_prime(m) || (m % 2 == 0 && is_prime(m / 2)))) {
        return exact_shape(n, m, TwoStepShape{m % 3, m / 3, 1, 3},
                           PsiClass::PrimeOrDoubleThreeRow);
    }
    if (m <= 4 * n && n >= 6 && m % 4 == 2 && triple_prime(m)) {
        return exact_shape(n, m, TwoStepShape{2, (m - 2) / 4, 1, 4}, PsiClass::TripleFourRow);
    }

    PsiResult r;
    r.n = n;
    r.m = m;
    r.status = PsiResult::Status::Bounds;
    r.lower = std::sqrt(static_cast<double>(m));
    // Family is nonempty here: m > n rules out k = 1 in the ceil(m/n)-column
    // witness, and a divisible split would have been a rank-one fit above.
    auto best = best_family_shape(n, m);
    if (!best) throw std::logic_error("no two-step shape fits a board that has no rank-one fit");
    r.upper = two_step_trace_norm(*best);
    r.upper_inner = best->inner_key();
    r.shape_witness = *best;
    r.classification = PsiClass::BoundOnly;
    return r;
}

GeneralBound gb_bound(std::int64_t n, std::int64_t m) {
    check_board(n, m);
    std::int64_t k = (m + n - 1) / n;
    GeneralBound out;
    out.value = std::sqrt(static_cast<double>(m)) + std::sqrt(static_cast<double>(k)) / 2.0;
    std::int64_t p = m / k, s = m - k * p;
    if (s > 0) out.witness = TwoStepShape{s, p, 1, k};  // p <= n-1 whenever s > 0
    return out;
}

double pro4_bound(std::int64_t m) {
    if (m < 5) throw std::invalid_argument("pro4_bound: need m >= 5, got " + std::to_string(m));
    std::int64_t inner;
    switch (m % 4) {
        case 1: inner = 3 * ((m - 1) / 4); break;
        case 2: inner = m - 2; break;
        case 3: inner = 3 * ((m - 3) / 4); break;
        default:
            throw std::invalid_argument("pro4_bound: m divisible by 4 has a rank-one fit");
    }
    return std::sqrt(static_cast<double>(m) + 2.0 * std::sqrt(static_cast<double>(inner)));
}

bool cor1_check(std::int64_t n, std::int64_t m) {
    check_board(n, m);
    if (m < 2 || m > 4 * n) {
        throw std::invalid_argument("cor1_check: need 2 <= m <= 4n");
    }
    double v = psi(n, m).value();
    return v < std::sqrt(static_cast<double>(m - 1)) + 1.0;
}

}  // namespace tracemin
