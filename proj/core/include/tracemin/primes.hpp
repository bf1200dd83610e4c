#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace tracemin {

/// Deterministic primality: trial division below 10^6, otherwise
/// Miller-Rabin with a fixed witness set that is exact below 2^64.
bool is_prime(std::uint64_t x);

/// Smallest a with 2 <= a <= b <= n and a*b = m, if any. A hit certifies a
/// rank-one all-ones block J_{a,b} on an n x n board. Needs 1 <= m <= n^2.
std::optional<std::pair<std::int64_t, std::int64_t>> factor_fit(std::int64_t n, std::int64_t m);

struct TripleWitness {
    std::int64_t k = 0;
    int sign = 0;                          // +1 or -1
    std::array<std::int64_t, 3> primes{};  // 4k+sign, 6k+sign, 12k+sign
    std::int64_t m = 0;                    // 12k + 2*sign
};

/// All k in [k_min, k_max] with 4k+sign, 6k+sign, 12k+sign simultaneously
/// prime, ascending. Residues modulo a fixed wheel of small primes eliminate
/// most k before any full primality test runs (a member equal to the wheel
/// prime itself is kept). Deterministic for any thread count.
std::vector<TripleWitness> search_triples(std::int64_t k_min, std::int64_t k_max, int sign, int threads = 1);

struct ClaimASolution {
    std::int64_t a = 0, b = 0, c = 0;  // m = a*b + c, a >= b >= 5, c in {-1,0,1}
};

/// First solution of m = ab + c with a >= b >= 5 and |c| <= 1, scanning b
/// ascending and c in order -1, 0, +1; nullopt when none exists.
std::optional<ClaimASolution> claim_a_solver(std::int64_t m);

}  // namespace tracemin
