#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "tracemin/binary_matrix.hpp"
#include "tracemin/errors.hpp"

using tracemin::BinaryMatrix;

TEST_CASE("parse and to_text round-trip") {
    const std::string text = "110\n011\n000\n";
    const BinaryMatrix a = BinaryMatrix::parse(text);
    CHECK(a.rows() == 3);
    CHECK(a.cols() == 3);
    CHECK(a.ones() == 4);
    CHECK(a.at(0, 0) == 1);
    CHECK(a.at(0, 2) == 0);
    CHECK(a.to_text() == text);
    CHECK(BinaryMatrix::parse(a.to_text()) == a);

    // trailing newline optional, CR tolerated nowhere
    CHECK(BinaryMatrix::parse("10\n01") == BinaryMatrix::from_strings({"10", "01"}));
}

TEST_CASE("parse rejections") {
    CHECK_THROWS_AS(BinaryMatrix::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix::parse("10\n0"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix::parse("1x\n00"), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(0, 2, {}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(1, 2, {1}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix(1, 2, {1, 2}), std::invalid_argument);
}

TEST_CASE("transpose, pad, submatrix, permute") {
    const BinaryMatrix a = BinaryMatrix::from_strings({"110", "001"});
    const BinaryMatrix t = a.transposed();
    CHECK(t.rows() == 3);
    CHECK(t.cols() == 2);
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 3; ++j) CHECK(a.at(i, j) == t.at(j, i));

    const BinaryMatrix p = a.padded(3, 4);
    CHECK(p.rows() == 3);
    CHECK(p.cols() == 4);
    CHECK(p.ones() == a.ones());
    CHECK(p.at(2, 3) == 0);
    CHECK_THROWS_AS(a.padded(1, 3), std::invalid_argument);

    const BinaryMatrix s = a.submatrix({0, 1}, {0, 2});
    CHECK(s == BinaryMatrix::from_strings({"10", "01"}));
    CHECK_THROWS_AS(a.submatrix({1, 0}, {0}), std::invalid_argument);
    CHECK_THROWS_AS(a.submatrix({0}, {0, 3}), std::invalid_argument);
    CHECK_THROWS_AS(a.submatrix({}, {0}), std::invalid_argument);

    // out(i, j) = in(row_perm[i], col_perm[j])
    const BinaryMatrix q = a.permuted({1, 0}, {2, 0, 1});
    CHECK(q == BinaryMatrix::from_strings({"100", "011"}));
    CHECK_THROWS_AS(a.permuted({0, 0}, {0, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(a.permuted({0, 1}, {0, 1}), std::invalid_argument);
}

TEST_CASE("strip_zeros") {
    const BinaryMatrix a = BinaryMatrix::from_strings({"0000", "0110", "0000", "0100"});
    const BinaryMatrix s = tracemin::strip_zeros(a);
    CHECK(s == BinaryMatrix::from_strings({"11", "10"}));
    CHECK_THROWS_AS(tracemin::strip_zeros(BinaryMatrix::from_strings({"00", "00"})),
                    std::invalid_argument);
}

TEST_CASE("canonical tags of known classes") {
    // the two 2x2 permutation matrices are one class
    const auto x1 = tracemin::canonicalize(BinaryMatrix::from_strings({"10", "01"}));
    const auto x2 = tracemin::canonicalize(BinaryMatrix::from_strings({"01", "10"}));
    CHECK(x1.tag == x2.tag);
    CHECK(x1.tag == "2x2:10/01");

    CHECK(tracemin::canonicalize(BinaryMatrix::from_strings({"111", "111"})).tag ==
          "3x2:11/11/11");
    CHECK(tracemin::canonicalize(BinaryMatrix::from_strings({"11", "01"})).tag == "2x2:11/01");
    CHECK(tracemin::canonicalize(BinaryMatrix::from_strings({"1"})).tag == "1x1:1");
}

TEST_CASE("canonicalize is invariant under the moves it quotients out") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + int(rng() % 5), cols = 1 + int(rng() % 5);
        std::vector<std::uint8_t> bits(std::size_t(rows) * std::size_t(cols));
        bool any = false;
        for (auto& b : bits) {
            b = std::uint8_t(rng() % 2);
            any = any || b;
        }
        if (!any) bits[rng() % bits.size()] = 1;
        const BinaryMatrix a(rows, cols, bits);
        const auto base = tracemin::canonicalize(a);

        CHECK(tracemin::canonicalize(a.transposed()).tag == base.tag);
        CHECK(tracemin::canonicalize(a.padded(rows + 2, cols + 1)).tag == base.tag);

        std::vector<int> rp(rows), cp(cols);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        std::shuffle(rp.begin(), rp.end(), rng);
        std::shuffle(cp.begin(), cp.end(), rng);
        CHECK(tracemin::canonicalize(a.permuted(rp, cp)).tag == base.tag);

        // representative has no zero rows/columns and reproduces the tag
        CHECK(tracemin::matrix_from_tag(base.tag) == base.matrix);
        CHECK(tracemin::canonicalize(base.matrix).tag == base.tag);
    }
}

TEST_CASE("canonicalize guard and tag parsing") {
    std::vector<std::uint8_t> eye(81, 0);
    for (int i = 0; i < 9; ++i) eye[std::size_t(i) * 10] = 1;
    CHECK_THROWS_AS(tracemin::canonicalize(BinaryMatrix(9, 9, eye)), tracemin::guard_error);

    CHECK_THROWS_AS(tracemin::matrix_from_tag("no-colon"), std::invalid_argument);
    CHECK_THROWS_AS(tracemin::matrix_from_tag("2x2:11/1"), std::invalid_argument);
    CHECK_THROWS_AS(tracemin::matrix_from_tag("3x2:11/11"), std::invalid_argument);
}

TEST_CASE("step detection") {
    const auto step = tracemin::is_step_matrix(
        BinaryMatrix::from_strings({"111", "110", "100"}));
    CHECK(step.is_step);
    CHECK(step.steps == 3);

    CHECK(tracemin::is_step_matrix(BinaryMatrix::from_strings({"11", "11"})).is_step);
    CHECK(tracemin::is_step_matrix(BinaryMatrix::from_strings({"11", "11"})).steps == 1);
    CHECK_FALSE(tracemin::is_step_matrix(BinaryMatrix::from_strings({"10", "01"})).is_step);
    CHECK_FALSE(tracemin::is_step_matrix(BinaryMatrix::from_strings({"011", "110"})).is_step);
}
