#include <cmath>
#include <vector>

#include "doctest.h"
#include "tracemin/binary_matrix.hpp"
#include "tracemin/errors.hpp"
#include "tracemin/spectral.hpp"
#include "tracemin/step_forms.hpp"

using tracemin::BinaryMatrix;
using tracemin::singular_spectrum;

namespace {
double sq(double x) { return x * x; }
}  // namespace

TEST_CASE("closed 2x2 spectra") {
    // [[1,1],[1,0]]: Gram eigenvalues (3 +- sqrt 5)/2, trace norm sqrt 5
    const auto s = singular_spectrum(BinaryMatrix::from_strings({"11", "10"}));
    REQUIRE(s.singular_values.size() == 2);
    CHECK(sq(s.singular_values[0]) == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(sq(s.singular_values[1]) == doctest::Approx((3 - std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(s.trace_norm == doctest::Approx(std::sqrt(5.0)).epsilon(1e-12));
    CHECK(s.frobenius == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));

    // a one-row matrix is exactly rank one
    const auto r = singular_spectrum(BinaryMatrix::from_strings({"1111"}));
    REQUIRE(r.singular_values.size() == 1);
    CHECK(r.singular_values[0] == 2.0);
    CHECK(r.trace_norm == 2.0);
}

TEST_CASE("second singular value of the flat two-row hook is sqrt(2 - sqrt 2)") {
    // [[1,1,1],[1,0,0]]: Gram [[3,1],[1,1]], eigenvalues 2 +- sqrt 2
    const auto s = singular_spectrum(BinaryMatrix::from_strings({"111", "100"}));
    CHECK(sq(s.singular_values[1]) == doctest::Approx(2 - std::sqrt(2.0)).epsilon(1e-12));
    CHECK(sq(s.singular_values[0]) == doctest::Approx(2 + std::sqrt(2.0)).epsilon(1e-12));
}

TEST_CASE("three-row patterns that spill outside the window") {
    // [[111],[100],[100]]: second singular value exactly 1
    const auto x3 = singular_spectrum(BinaryMatrix::from_strings({"111", "100", "100"}));
    CHECK(x3.singular_values[1] == doctest::Approx(1.0).epsilon(1e-12));

    // three-step staircase on 6 ones: trace norm beats sqrt(5) + 1
    const auto b3 = singular_spectrum(BinaryMatrix::from_strings({"111", "110", "100"}));
    CHECK(b3.trace_norm > std::sqrt(5.0) + 1.0);

    // [[1111],[1110],[1100]]: top weight below 8, residual above 1
    const auto x4 = singular_spectrum(BinaryMatrix::from_strings({"1111", "1110", "1100"}));
    CHECK(sq(x4.singular_values[0]) < 8.0);
    CHECK(sq(x4.singular_values[1]) + sq(x4.singular_values[2]) > 1.0);
    // Gram characteristic polynomial x^3 - 9x^2 + 9x - 2 vanishes on each eigenvalue
    for (double sv : x4.singular_values) {
        const double L = sq(sv);
        CHECK(((L - 9) * L + 9) * L - 2 == doctest::Approx(0.0).epsilon(1e-9));
    }

    // [[1111],[1110],[1000]]: top weight below 7
    const auto x5 = singular_spectrum(BinaryMatrix::from_strings({"1111", "1110", "1000"}));
    CHECK(sq(x5.singular_values[0]) < 7.0);
    CHECK(sq(x5.singular_values[1]) + sq(x5.singular_values[2]) > 1.0);
    for (double sv : x5.singular_values) {
        const double L = sq(sv);
        CHECK(((L - 8) * L + 8) * L - 2 == doctest::Approx(0.0).epsilon(1e-9));
    }
}

TEST_CASE("exact zeros below the solver resolution") {
    // rank-2 block with three exactly-zero singular values: rounding residue
    // on the Gram must not surface as sqrt(eps)-sized phantoms
    const tracemin::TwoStepShape t{1, 5, 1, 5};
    const auto s = singular_spectrum(tracemin::materialize(t));
    REQUIRE(s.singular_values.size() == 5);
    CHECK(s.singular_values[2] == 0.0);
    CHECK(s.singular_values[3] == 0.0);
    CHECK(s.singular_values[4] == 0.0);
    CHECK(std::fabs(s.trace_norm - tracemin::two_step_trace_norm(t)) <= 1e-9);
}

TEST_CASE("spectrum agrees under transposition and padding") {
    const BinaryMatrix a = BinaryMatrix::from_strings({"1101", "0111", "1000"});
    const auto s = singular_spectrum(a);
    const auto st = singular_spectrum(a.transposed());
    const auto sp = singular_spectrum(a.padded(5, 5));
    CHECK(s.trace_norm == doctest::Approx(st.trace_norm).epsilon(1e-12));
    CHECK(s.trace_norm == doctest::Approx(sp.trace_norm).epsilon(1e-12));
    for (std::size_t i = 0; i < s.singular_values.size(); ++i) {
        CHECK(s.singular_values[i] == doctest::Approx(st.singular_values[i]).epsilon(1e-12));
        CHECK(s.singular_values[i] == doctest::Approx(sp.singular_values[i]).epsilon(1e-12));
    }
}

TEST_CASE("solver guard") {
    std::vector<std::uint8_t> bits(65 * 65, 1);
    CHECK_THROWS_AS(singular_spectrum(BinaryMatrix(65, 65, bits)), tracemin::guard_error);
    // 65 rows but only 2 columns stays under the cap
    CHECK(singular_spectrum(BinaryMatrix(65, 2, std::vector<std::uint8_t>(130, 1))).trace_norm ==
          doctest::Approx(std::sqrt(130.0)).epsilon(1e-12));
}

TEST_CASE("lower bound from a cap on the top singular value") {
    // at a cap of sqrt(fsq) the bound collapses to sqrt(fsq) -- up to the
    // sqrt(eps)-sized residue of fsq - cap^2, which is real, not noise:
    // fl(sqrt(26))^2 sits ~4e-15 under 26, and the bound at that cap is
    // genuinely cap + sqrt(4e-15)
    const double cap26 = std::sqrt(26.0);
    const double at_cap = tracemin::pro1_lower_bound(26.0, cap26);
    CHECK(at_cap >= cap26);
    CHECK(at_cap <= cap26 + 1e-6);
    // equality case: rank-2 matrix, cap at sigma1 exactly
    const auto s = singular_spectrum(BinaryMatrix::from_strings({"111", "100"}));
    CHECK(tracemin::pro1_lower_bound(4.0, s.singular_values[0]) ==
          doctest::Approx(s.trace_norm).epsilon(1e-12));
    // a weaker cap still bounds from below
    CHECK(tracemin::pro1_lower_bound(4.0, 1.9) <= s.trace_norm);
    CHECK_THROWS_AS(tracemin::pro1_lower_bound(4.0, 2.1), std::invalid_argument);
    CHECK_THROWS_AS(tracemin::pro1_lower_bound(-1.0, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(tracemin::pro1_lower_bound(4.0, -0.5), std::invalid_argument);
}

TEST_CASE("interlacing against a selected submatrix") {
    const BinaryMatrix a = tracemin::materialize(tracemin::TwoStepShape{1, 2, 2, 3});
    const BinaryMatrix x3 = BinaryMatrix::from_strings({"111", "100", "100"});
    CHECK(a.submatrix({0, 1, 2}, {0, 2, 3}) == x3);
    CHECK(tracemin::interlacing_check(a, x3, {0, 1, 2}, {0, 2, 3}));
    CHECK_THROWS_AS(tracemin::interlacing_check(a, x3, {0, 1, 2}, {0, 1, 2}),
                    std::invalid_argument);
}
