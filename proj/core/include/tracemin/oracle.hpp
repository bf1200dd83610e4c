#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tracemin/binary_matrix.hpp"
#include "tracemin/intx.hpp"

namespace tracemin {

struct OracleResult {
    std::int64_t n = 0, m = 0;
    double psi = 0;                           // exhaustive minimum trace norm
    std::vector<std::string> minimizer_tags;  // classes attaining psi within 1e-9, sorted
    std::uint64_t count_scanned = 0;
};

/// C(cells, picks), saturating instead of wrapping if it leaves 128 bits.
uint128 enumeration_count(int cells, int picks);

/// Exhaustive minimum over every placement of m ones in an n x n grid.
/// Guarded: n <= 5 and C(n^2, m) <= 5e6 (the guard message carries the
/// count). Deterministic for any thread count: the grid cells are strided
/// into strata by the first occupied cell, each stratum is scanned by one
/// thread in a fixed order, and stratum results merge by index.
/// row_sorted_pruning skips matrices whose rows are not in non-increasing
/// bit-pattern order — every class keeps a sorted representative, so psi and
/// the tags are unchanged while count_scanned shrinks; the minimum may move
/// by an ulp since it is taken over fewer floating-point evaluations.
OracleResult brute_force_psi(std::int64_t n, std::int64_t m, int threads = 1,
                             bool row_sorted_pruning = false);

enum class TsmVerdict {
    Confirmed,      // window held and every minimizer is a two-step class
    Violated,       // window held but some minimizer is not in the family
    NotApplicable,  // exhaustive minimum outside (sqrt(m), sqrt(m-1)+1)
};
const char* to_string(TsmVerdict v);

/// Structure check: when the exhaustive minimum lies strictly inside the
/// window (sqrt(m), sqrt(m-1)+1) — margin 1e-9 on both ends — every
/// minimizer class must equal the class of some two-step family shape with
/// right-block width 1. Runs brute_force_psi internally (same guards).
TsmVerdict verify_tsm(std::int64_t n, std::int64_t m, int threads = 1);

/// The five row/column-selected patterns whose presence forces a matrix out
/// of the (sqrt(m), sqrt(m-1)+1) window: the two 2x2 permutation matrices
/// (second singular value 1) and three step patterns with too much spectral
/// weight below the top.
const std::array<BinaryMatrix, 5>& forbidden_patterns();

/// True iff some strictly increasing row and column selection of `a` equals
/// `pattern` entry for entry.
bool contains_pattern(const BinaryMatrix& a, const BinaryMatrix& pattern);

/// True iff no exhaustive minimizer of (n, m) contains any forbidden
/// pattern. Inside the tsm window this must hold; outside it the scan is
/// still well-defined and simply reports what it finds.
bool verify_forbidden_submatrices(std::int64_t n, std::int64_t m, int threads = 1);

}  // namespace tracemin
