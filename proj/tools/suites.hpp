#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tracemin::suites {

struct Outcome {
    std::string suite;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::uint64_t skips = 0;  // cases whose oracle run was refused by a guard
    std::vector<std::string> failing_cases;  // first 20, human-readable

    bool passed() const { return failures == 0; }
};

// Each sweep verifies one proved statement over a parameter range. The
// defaults are sized so the full set runs in well under five minutes on one
// core; explicit ranges are capped (guard_error) to keep runs desk-scale.
//
//   exa       closed two-step spectrum vs numeric SVD; m_max caps ones (default 200)
//   theorem1  oracle vs two-row closed form, n <= n_max (default 4, cap 5)
//   theorem2  oracle vs three-row closed form, n in [4, n_max] (default 4, cap 5)
//   theorem3  engine-value trichotomy on m = 12k+-2 in (3n, 4n], n <= n_max (default 200)
//   tsm       oracle minimizers inside the window are two-step classes, n <= n_max (default 4, cap 5)
//   gb        engine upper <= sqrt(m) + sqrt(ceil(m/n))/2 and witness fits, n <= n_max (default 50)
//   pro4      four-row bound identities and < sqrt(m-1)+1, m <= m_max (default 10^4)
//   cor1      engine upper < sqrt(m-1) + 1 for m <= min(4n, n^2), n <= n_max (default 500)
//   claimA    m = ab + c solvable with a >= b >= 5, |c| <= 1 iff the prime
//             triple for m = 12k+-2 fails; m <= m_max (default 10^6)
Outcome run_suite(const std::string& name, std::int64_t n_max, std::int64_t m_max, int threads);

// Suite names in canonical order (for --help and "all").
const std::vector<std::string>& suite_names();

}  // namespace tracemin::suites
