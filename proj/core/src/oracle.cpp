#include "tracemin/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>
#include <thread>

#include "tracemin/errors.hpp"
#include "tracemin/spectral.hpp"
#include "tracemin/step_forms.hpp"

namespace tracemin {

uint128 enumeration_count(int cells, int picks) {
    if (picks < 0 || picks > cells) return 0;
    picks = std::min(picks, cells - picks);
    constexpr uint128 kMax = ~uint128(0);
    uint128 c = 1;
    for (int i = 1; i <= picks; ++i) {
        const uint128 f = uint128(cells - picks + i);
        if (c > kMax / f) return kMax;
        c = c * f / uint128(i);  // running value is C(cells-picks+i, i), so the division is exact
    }
    return c;
}

namespace {

constexpr double kTieWindow = 1e-9;

struct Candidate {
    double value;
    std::uint32_t mask;
};

struct StratumOut {
    double min = std::numeric_limits<double>::infinity();
    std::vector<Candidate> cands;
    std::uint64_t scanned = 0;
};

// All placements whose lowest occupied cell is `first`, in ascending mask
// order. One thread owns a stratum end to end, so the float comparisons
// happen in the same order no matter how many threads run.
StratumOut scan_stratum(int n, int m, int first, bool row_sorted_pruning) {
    StratumOut out;
    const int cells = n * n;
    const int w = cells - 1 - first;  // free positions above `first`
    const int k = m - 1;
    if (k > w) return out;

    const std::uint32_t row_mask = (1u << n) - 1;
    double gram[25];

    auto visit = [&](std::uint32_t mask) {
        if (row_sorted_pruning) {
            std::uint32_t prev = row_mask + 1;  // above any row pattern
            for (int i = 0; i < n; ++i) {
                const std::uint32_t row = (mask >> (i * n)) & row_mask;
                if (row > prev) return;
                prev = row;
            }
        }
        for (int i = 0; i < n; ++i) {
            const std::uint32_t ri = (mask >> (i * n)) & row_mask;
            for (int j = i; j < n; ++j) {
                const std::uint32_t rj = (mask >> (j * n)) & row_mask;
                gram[i * n + j] = gram[j * n + i] = double(__builtin_popcount(ri & rj));
            }
        }
        const double v = detail::trace_norm_from_gram(gram, n);
        ++out.scanned;
        if (v < out.min) out.min = v;
        if (v <= out.min + kTieWindow) {
            out.cands.push_back({v, mask});
            if (out.cands.size() > 4096) {
                std::erase_if(out.cands, [&](const Candidate& c) { return c.value > out.min + kTieWindow; });
            }
        }
    };

    if (k == 0) {
        visit(1u << first);
        return out;
    }
    // Gosper's hack over the w free bits, result shifted above the fixed bit.
    const std::uint32_t limit = 1u << w;
    std::uint32_t x = (1u << k) - 1;
    while (x < limit) {
        visit((x << (first + 1)) | (1u << first));
        const std::uint32_t u = x & (0u - x);
        const std::uint32_t v = x + u;
        x = v | (((x ^ v) >> 2) / u);
    }
    return out;
}

BinaryMatrix mask_to_matrix(std::uint32_t mask, int n) {
    std::vector<std::uint8_t> bits(std::size_t(n) * std::size_t(n), 0);
    for (int i = 0; i < n * n; ++i) bits[std::size_t(i)] = (mask >> i) & 1u;
    return {n, n, std::move(bits)};
}

// Rows and columns reordered by decreasing sums. A matrix free of the 2x2
// patterns has totally ordered rows and columns, and this ordering then makes
// it a step matrix — the arrangement the 3-row patterns are stated for.
BinaryMatrix sum_sorted(const BinaryMatrix& a) {
    std::vector<std::int64_t> rsum(std::size_t(a.rows()), 0), csum(std::size_t(a.cols()), 0);
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j)
            if (a.at(i, j)) {
                ++rsum[std::size_t(i)];
                ++csum[std::size_t(j)];
            }
    std::vector<int> rp(std::size_t(a.rows())), cp(std::size_t(a.cols()));
    std::iota(rp.begin(), rp.end(), 0);
    std::iota(cp.begin(), cp.end(), 0);
    std::stable_sort(rp.begin(), rp.end(), [&](int x, int y) { return rsum[std::size_t(x)] > rsum[std::size_t(y)]; });
    std::stable_sort(cp.begin(), cp.end(), [&](int x, int y) { return csum[std::size_t(x)] > csum[std::size_t(y)]; });
    return a.permuted(rp, cp);
}

}  // namespace

OracleResult brute_force_psi(std::int64_t n, std::int64_t m, int threads, bool row_sorted_pruning) {
    check_board(n, m);
    if (n > 5) throw guard_error("exhaustive scan capped at n <= 5, got n = " + std::to_string(n));
    const int cells = int(n) * int(n);
    const uint128 total = enumeration_count(cells, int(m));
    if (total > uint128(5000000))
        throw guard_error("exhaustive scan over C(" + std::to_string(cells) + "," + std::to_string(m) + ") = " +
                          u128_to_string(total) + " placements exceeds the 5000000 cap");

    const int nstrata = cells - int(m) + 1;
    const int tcount = std::min(std::clamp(threads, 1, 16), nstrata);
    std::vector<StratumOut> outs(static_cast<std::size_t>(nstrata));
    if (tcount == 1) {
        for (int i = 0; i < nstrata; ++i) outs[std::size_t(i)] = scan_stratum(int(n), int(m), i, row_sorted_pruning);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(std::size_t(tcount));
        for (int t = 0; t < tcount; ++t) {
            pool.emplace_back([&, t] {
                for (int i = t; i < nstrata; i += tcount)
                    outs[std::size_t(i)] = scan_stratum(int(n), int(m), i, row_sorted_pruning);
            });
        }
        for (auto& th : pool) th.join();
    }

    OracleResult res;
    res.n = n;
    res.m = m;
    res.count_scanned = 0;
    double global_min = std::numeric_limits<double>::infinity();
    for (const auto& st : outs) {
        res.count_scanned += st.scanned;
        global_min = std::min(global_min, st.min);
    }
    res.psi = global_min;

    std::set<std::string> tags;
    for (const auto& st : outs)
        for (const auto& c : st.cands)
            if (c.value <= global_min + kTieWindow) tags.insert(canonicalize(mask_to_matrix(c.mask, int(n))).tag);
    res.minimizer_tags.assign(tags.begin(), tags.end());
    return res;
}

const char* to_string(TsmVerdict v) {
    switch (v) {
        case TsmVerdict::Confirmed: return "confirmed";
        case TsmVerdict::Violated: return "violated";
        case TsmVerdict::NotApplicable: return "not-applicable";
    }
    return "?";
}

TsmVerdict verify_tsm(std::int64_t n, std::int64_t m, int threads) {
    const OracleResult res = brute_force_psi(n, m, threads);
    const double lo = std::sqrt(double(m)) + kTieWindow;
    const double hi = std::sqrt(double(m - 1)) + 1.0 - kTieWindow;
    if (!(res.psi > lo && res.psi < hi)) return TsmVerdict::NotApplicable;

    std::set<std::string> family;
    for (const auto& sh : enumerate_shapes(n, m)) family.insert(canonicalize(materialize(sh)).tag);
    for (const auto& tag : res.minimizer_tags)
        if (!family.count(tag)) return TsmVerdict::Violated;
    return TsmVerdict::Confirmed;
}

const std::array<BinaryMatrix, 5>& forbidden_patterns() {
    static const std::array<BinaryMatrix, 5> pats = {
        BinaryMatrix::from_strings({"10", "01"}),
        BinaryMatrix::from_strings({"01", "10"}),
        BinaryMatrix::from_strings({"111", "100", "100"}),
        BinaryMatrix::from_strings({"1111", "1110", "1100"}),
        BinaryMatrix::from_strings({"1111", "1110", "1000"}),
    };
    return pats;
}

bool contains_pattern(const BinaryMatrix& a, const BinaryMatrix& pattern) {
    const int pr = pattern.rows(), pc = pattern.cols();
    if (pr > a.rows() || pc > a.cols()) return false;

    auto next_combination = [](std::vector<int>& idx, int limit) {
        const int k = int(idx.size());
        for (int i = k - 1; i >= 0; --i) {
            if (idx[std::size_t(i)] < limit - (k - i)) {
                ++idx[std::size_t(i)];
                for (int j = i + 1; j < k; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
                return true;
            }
        }
        return false;
    };

    std::vector<int> rs(static_cast<std::size_t>(pr));
    std::iota(rs.begin(), rs.end(), 0);
    do {
        std::vector<int> cs(static_cast<std::size_t>(pc));
        std::iota(cs.begin(), cs.end(), 0);
        do {
            bool ok = true;
            for (int i = 0; ok && i < pr; ++i)
                for (int j = 0; ok && j < pc; ++j)
                    if (a.at(rs[std::size_t(i)], cs[std::size_t(j)]) != pattern.at(i, j)) ok = false;
            if (ok) return true;
        } while (next_combination(cs, a.cols()));
    } while (next_combination(rs, a.rows()));
    return false;
}

bool verify_forbidden_submatrices(std::int64_t n, std::int64_t m, int threads) {
    const OracleResult res = brute_force_psi(n, m, threads);
    for (const auto& tag : res.minimizer_tags) {
        const BinaryMatrix a = sum_sorted(matrix_from_tag(tag));
        for (const auto& p : forbidden_patterns())
            if (contains_pattern(a, p)) return false;
    }
    return true;
}

}  // namespace tracemin
