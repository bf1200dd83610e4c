#include "suites.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "tracemin/errors.hpp"
#include "tracemin/oracle.hpp"
#include "tracemin/primes.hpp"
#include "tracemin/psi.hpp"
#include "tracemin/spectral.hpp"
#include "tracemin/step_forms.hpp"

namespace tracemin::suites {
namespace {

constexpr double kTol = 1e-9;  // closed form vs numeric SVD

template <class... A>
void fail(Outcome& out, const char* fmt, A... args) {
    ++out.failures;
    if (out.failing_cases.size() >= 20) return;
    char buf[256];
    std::snprintf(buf, sizeof buf, fmt, args...);
    out.failing_cases.emplace_back(buf);
}

bool near(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

// ---- exa: every small shape's closed spectrum against the numeric SVD ----

Outcome suite_exa(std::int64_t m_max) {
    Outcome out;
    out.suite = "exa";
    for (std::int64_t q = 2; q <= 14; ++q)
        for (std::int64_t s = 1; s < q && s <= 8; ++s)
            for (std::int64_t p = 1; p <= 8; ++p)
                for (std::int64_t r = 1; r <= 8; ++r) {
                    const TwoStepShape t{s, p, r, q};
                    if (t.ones() > m_max) continue;
                    ++out.checked;
                    const Spectrum closed = two_step_spectrum(t);
                    const Spectrum num = singular_spectrum(materialize(t));
                    double dev = std::fabs(closed.trace_norm - num.trace_norm);
                    dev = std::max(dev, std::fabs(closed.frobenius - num.frobenius));
                    if (closed.singular_values.size() != num.singular_values.size()) {
                        fail(out, "shape %lld,%lld,%lld,%lld: spectrum length %zu vs %zu",
                             (long long)s, (long long)p, (long long)r, (long long)q,
                             closed.singular_values.size(), num.singular_values.size());
                        continue;
                    }
                    for (std::size_t i = 0; i < num.singular_values.size(); ++i)
                        dev = std::max(dev, std::fabs(closed.singular_values[i] - num.singular_values[i]));
                    if (dev > kTol)
                        fail(out, "shape %lld,%lld,%lld,%lld: closed vs numeric deviation %.3e",
                             (long long)s, (long long)p, (long long)r, (long long)q, dev);
                }
    return out;
}

// ---- theorem1 / theorem2: exhaustive minimum against the closed forms ----

Outcome oracle_vs_formula(const char* name, std::int64_t n_lo, std::int64_t n_max,
                          std::int64_t band_lo_mult, std::int64_t band_hi_mult,
                          int threads, double (*expected)(std::int64_t)) {
    Outcome out;
    out.suite = name;
    for (std::int64_t n = n_lo; n <= n_max; ++n)
        for (std::int64_t m = band_lo_mult * n + 1; m <= band_hi_mult * n; ++m) {
            if (m > n * n) break;
            double want = expected(m);
            OracleResult o;
            try {
                o = brute_force_psi(n, m, threads);
            } catch (const guard_error&) {
                ++out.skips;
                continue;
            }
            ++out.checked;
            if (!near(o.psi, want, kTol))
                fail(out, "n=%lld m=%lld: oracle %.12f vs formula %.12f",
                     (long long)n, (long long)m, o.psi, want);
        }
    return out;
}

double two_row_value(std::int64_t m) {
    if (is_prime(std::uint64_t(m))) return std::sqrt(double(m) + std::sqrt(2.0 * double(m - 1)));
    return std::sqrt(double(m));
}

double three_row_value(std::int64_t m) {
    const bool hard = is_prime(std::uint64_t(m)) || (m % 2 == 0 && is_prime(std::uint64_t(m / 2)));
    if (hard) return std::sqrt(double(m) + 2.0 * std::sqrt(2.0 * double(m / 3)));
    return std::sqrt(double(m));
}

// ---- theorem3: the four-row trichotomy, engine values only ----

bool triple_holds(std::int64_t m) {
    std::int64_t k = 0;
    int sg = 0;
    if (m % 12 == 2) { k = (m - 2) / 12; sg = 1; }
    else if (m % 12 == 10) { k = (m + 2) / 12; sg = -1; }
    else return false;
    if (k < 1) return false;
    return is_prime(std::uint64_t(4 * k + sg)) && is_prime(std::uint64_t(6 * k + sg)) &&
           is_prime(std::uint64_t(12 * k + sg));
}

Outcome suite_theorem3(std::int64_t n_max) {
    Outcome out;
    out.suite = "theorem3";
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::int64_t hi = std::min(4 * n, n * n);
        for (std::int64_t m = 3 * n + 1; m <= hi; ++m) {
            if (m % 12 != 2 && m % 12 != 10) continue;
            ++out.checked;
            const double bound = std::sqrt(double(m) + 2.0 * std::sqrt(double(m - 2)));
            const PsiResult r = psi(n, m);
            if (triple_holds(m)) {
                if (!near(r.value(), bound, 1e-12 * bound))
                    fail(out, "n=%lld m=%lld: value %.15g != bound %.15g on a prime triple",
                         (long long)n, (long long)m, r.value(), bound);
                if (n >= 6 && !(r.exact() && r.classification == PsiClass::TripleFourRow))
                    fail(out, "n=%lld m=%lld: prime triple not classified exact", (long long)n,
                         (long long)m);
            } else {
                if (!(r.value() < bound - 1e-6))
                    fail(out, "n=%lld m=%lld: value %.15g not below bound %.15g by 1e-6",
                         (long long)n, (long long)m, r.value(), bound);
            }
        }
    }
    return out;
}

// ---- tsm: in-window exhaustive minimizers are two-step classes ----

Outcome suite_tsm(std::int64_t n_max, int threads) {
    Outcome out;
    out.suite = "tsm";
    for (std::int64_t n = 2; n <= n_max; ++n)
        for (std::int64_t m = 1; m <= n * n; ++m) {
            TsmVerdict v;
            try {
                v = verify_tsm(n, m, threads);
            } catch (const guard_error&) {
                ++out.skips;
                continue;
            }
            ++out.checked;
            if (v == TsmVerdict::Violated) {
                fail(out, "n=%lld m=%lld: in-window minimizer outside the two-step family",
                     (long long)n, (long long)m);
                continue;
            }
            if (v == TsmVerdict::Confirmed && !verify_forbidden_submatrices(n, m, threads))
                fail(out, "n=%lld m=%lld: in-window minimizer contains a forbidden pattern",
                     (long long)n, (long long)m);
        }
    return out;
}

// ---- gb: engine never exceeds the general cap, witness is sound ----

Outcome suite_gb(std::int64_t n_max) {
    Outcome out;
    out.suite = "gb";
    for (std::int64_t n = 2; n <= n_max; ++n)
        for (std::int64_t m = 1; m <= n * n; ++m) {
            ++out.checked;
            const GeneralBound g = gb_bound(n, m);
            const PsiResult r = psi(n, m);
            const double tol = 1e-12 * std::max(1.0, g.value);
            if (r.value() > g.value + tol) {
                fail(out, "n=%lld m=%lld: engine %.15g above cap %.15g", (long long)n,
                     (long long)m, r.value(), g.value);
                continue;
            }
            if (!g.witness) continue;
            const TwoStepShape& w = *g.witness;
            if (w.ones() != m || w.q > n || w.p + w.r > n) {
                fail(out, "n=%lld m=%lld: cap witness does not fit the board", (long long)n,
                     (long long)m);
                continue;
            }
            const double wv = two_step_trace_norm(w);
            if (wv > g.value + tol)
                fail(out, "n=%lld m=%lld: witness %.15g above its own cap %.15g", (long long)n,
                     (long long)m, wv, g.value);
            if (r.value() > wv + tol)
                fail(out, "n=%lld m=%lld: engine %.15g above witness %.15g", (long long)n,
                     (long long)m, r.value(), wv);
        }
    return out;
}

// ---- pro4: four-row bound identities ----

Outcome suite_pro4(std::int64_t m_max) {
    Outcome out;
    out.suite = "pro4";
    for (std::int64_t m = 5; m <= m_max; ++m) {
        if (m % 4 == 0) continue;
        ++out.checked;
        const double v = pro4_bound(m);
        const TwoStepShape w{m % 4, m / 4, 1, 4};
        const double wv = two_step_trace_norm(w);
        if (!near(v, wv, 1e-12 * v))
            fail(out, "m=%lld: bound %.15g vs its shape %.15g", (long long)m, v, wv);
        if (!(v < std::sqrt(double(m - 1)) + 1.0))
            fail(out, "m=%lld: bound %.15g not below sqrt(m-1)+1", (long long)m, v);
        if (!(v > std::sqrt(double(m))))
            fail(out, "m=%lld: bound %.15g not above sqrt(m)", (long long)m, v);
    }
    return out;
}

// ---- cor1: strict window cap for m <= 4n ----

Outcome suite_cor1(std::int64_t n_max) {
    Outcome out;
    out.suite = "cor1";
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const std::int64_t hi = std::min(4 * n, n * n);
        for (std::int64_t m = 2; m <= hi; ++m) {
            ++out.checked;
            if (!cor1_check(n, m))
                fail(out, "n=%lld m=%lld: value not strictly below sqrt(m-1)+1", (long long)n,
                     (long long)m);
        }
    }
    return out;
}

// ---- claimA: m = ab + c with a >= b >= 5, |c| <= 1, iff the triple fails ----

Outcome suite_claim_a(std::int64_t m_max) {
    Outcome out;
    out.suite = "claimA";
    for (int sg : {+1, -1})
        for (std::int64_t k = 1; 12 * k + 2 * sg <= m_max; ++k) {
            const std::int64_t m = 12 * k + 2 * sg;
            ++out.checked;
            const bool triple = is_prime(std::uint64_t(4 * k + sg)) &&
                                is_prime(std::uint64_t(6 * k + sg)) &&
                                is_prime(std::uint64_t(12 * k + sg));
            const auto sol = claim_a_solver(m);
            if (sol.has_value() == triple) {
                fail(out, "m=%lld: solver %s but triple %s", (long long)m,
                     sol ? "solved" : "empty", triple ? "holds" : "fails");
                continue;
            }
            if (sol && (sol->a * sol->b + sol->c != m || sol->a < sol->b || sol->b < 5 ||
                        sol->c < -1 || sol->c > 1))
                fail(out, "m=%lld: solver returned inconsistent %lld*%lld%+lld", (long long)m,
                     (long long)sol->a, (long long)sol->b, (long long)sol->c);
        }
    return out;
}

void cap(const char* name, std::int64_t got, std::int64_t limit) {
    if (got > limit)
        throw guard_error(std::string(name) + " range capped at " + std::to_string(limit) +
                          ", got " + std::to_string(got));
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"exa",  "theorem1", "theorem2",
                                                   "theorem3", "tsm",  "gb",
                                                   "pro4", "cor1",     "claimA"};
    return names;
}

Outcome run_suite(const std::string& name, std::int64_t n_max, std::int64_t m_max, int threads) {
    if (name == "exa") {
        if (m_max <= 0) m_max = 200;
        return suite_exa(m_max);  // interior caps bound the sweep on their own
    }
    if (name == "theorem1") {
        if (n_max <= 0) n_max = 4;
        cap("theorem1 n_max", n_max, 5);
        return oracle_vs_formula("theorem1", 2, n_max, 1, 2, threads, two_row_value);
    }
    if (name == "theorem2") {
        if (n_max <= 0) n_max = 4;
        cap("theorem2 n_max", n_max, 5);
        return oracle_vs_formula("theorem2", 4, n_max, 2, 3, threads, three_row_value);
    }
    if (name == "theorem3") {
        if (n_max <= 0) n_max = 200;
        cap("theorem3 n_max", n_max, 2000);
        return suite_theorem3(n_max);
    }
    if (name == "tsm") {
        if (n_max <= 0) n_max = 4;
        cap("tsm n_max", n_max, 5);
        return suite_tsm(n_max, threads);
    }
    if (name == "gb") {
        if (n_max <= 0) n_max = 50;
        cap("gb n_max", n_max, 100);
        return suite_gb(n_max);
    }
    if (name == "pro4") {
        if (m_max <= 0) m_max = 10000;
        cap("pro4 m_max", m_max, 10000000);
        return suite_pro4(m_max);
    }
    if (name == "cor1") {
        if (n_max <= 0) n_max = 500;
        cap("cor1 n_max", n_max, 1000);
        return suite_cor1(n_max);
    }
    if (name == "claimA") {
        if (m_max <= 0) m_max = 1000000;
        cap("claimA m_max", m_max, 10000000);
        return suite_claim_a(m_max);
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace tracemin::suites
