#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tracemin {

/// Dense (0,1)-matrix, row-major, immutable after construction.
///
/// The text form used by parse()/to_text() is one row per line made of '0'
/// and '1' characters; all rows must have equal length.
class BinaryMatrix {
public:
    BinaryMatrix(int rows, int cols, std::vector<std::uint8_t> bits);

    static BinaryMatrix from_strings(const std::vector<std::string>& rows);
    static BinaryMatrix parse(const std::string& text);

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }
    std::int64_t ones() const noexcept { return ones_; }
    std::uint8_t at(int r, int c) const { return bits_[std::size_t(r) * std::size_t(cols_) + std::size_t(c)]; }

    BinaryMatrix transposed() const;
    /// out(i, j) = in(row_perm[i], col_perm[j]); both must be permutations.
    BinaryMatrix permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const;
    /// Zero-pads to the given size (must not shrink).
    BinaryMatrix padded(int rows, int cols) const;
    /// Selection indices must be strictly increasing and in range.
    BinaryMatrix submatrix(const std::vector<int>& row_sel, const std::vector<int>& col_sel) const;

    std::string to_text() const;

    bool operator==(const BinaryMatrix& other) const noexcept {
        return rows_ == other.rows_ && cols_ == other.cols_ && bits_ == other.bits_;
    }

private:
    int rows_;
    int cols_;
    std::int64_t ones_;
    std::vector<std::uint8_t> bits_;
};

/// Deletes every all-zero row and column. Rejects the all-zero matrix.
BinaryMatrix strip_zeros(const BinaryMatrix& a);

struct CanonicalForm {
    BinaryMatrix matrix;  // chosen representative, no zero rows/columns
    std::string tag;      // equal tags <=> equivalent matrices
};

/// Canonical representative of the equivalence class of `a` under row/column
/// permutations, transposition and zero-row/column padding. Exact: after
/// stripping, both orientations with cols <= rows are scanned over every
/// column permutation, rows are sorted descending as bit-strings, and the
/// lexicographically least encoding wins. Guarded: the stripped matrix must
/// have min(rows, cols) <= 8.
CanonicalForm canonicalize(const BinaryMatrix& a);

/// Inverse of CanonicalForm::tag ("RxC:row/row/...").
BinaryMatrix matrix_from_tag(const std::string& tag);

struct StepInfo {
    bool is_step = false;
    int steps = 0;  // distinct nonzero rows; meaningful only when is_step
};

/// A step matrix is non-increasing along every row and column, i.e. each row
/// is a prefix of ones and the prefix lengths are non-increasing downwards.
StepInfo is_step_matrix(const BinaryMatrix& a);

}  // namespace tracemin
