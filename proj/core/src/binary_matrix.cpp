#include "tracemin/binary_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "tracemin/errors.hpp"

namespace tracemin {

BinaryMatrix::BinaryMatrix(int rows, int cols, std::vector<std::uint8_t> bits)
    : rows_(rows), cols_(cols), ones_(0), bits_(std::move(bits)) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix dimensions must be positive");
    if (bits_.size() != std::size_t(rows) * std::size_t(cols))
        throw std::invalid_argument("matrix bit count does not match dimensions");
    for (auto b : bits_) {
        if (b > 1) throw std::invalid_argument("matrix entries must be 0 or 1");
        ones_ += b;
    }
}

BinaryMatrix BinaryMatrix::from_strings(const std::vector<std::string>& rows) {
    if (rows.empty()) throw std::invalid_argument("matrix needs at least one row");
    const std::size_t cols = rows.front().size();
    std::vector<std::uint8_t> bits;
    bits.reserve(rows.size() * cols);
    for (const auto& row : rows) {
        if (row.size() != cols || cols == 0) throw std::invalid_argument("matrix rows must be nonempty and equal length");
        for (char ch : row) {
            if (ch != '0' && ch != '1') throw std::invalid_argument("matrix rows may contain only '0' and '1'");
            bits.push_back(ch == '1');
        }
    }
    return {int(rows.size()), int(cols), std::move(bits)};
}

BinaryMatrix BinaryMatrix::parse(const std::string& text) {
    std::vector<std::string> rows;
    std::string line;
    for (char ch : text) {
        if (ch == '\n') {
            if (!line.empty()) rows.push_back(line);
            line.clear();
        } else if (ch != '\r') {
            line.push_back(ch);
        }
    }
    if (!line.empty()) rows.push_back(line);
    return from_strings(rows);
}

BinaryMatrix BinaryMatrix::transposed() const {
    std::vector<std::uint8_t> bits(bits_.size());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) bits[std::size_t(c) * rows_ + r] = at(r, c);
    return {cols_, rows_, std::move(bits)};
}

namespace {

void check_permutation(const std::vector<int>& perm, int n, const char* what) {
    if (int(perm.size()) != n) throw std::invalid_argument(std::string(what) + " permutation has wrong size");
    std::vector<char> seen(n, 0);
    for (int v : perm) {
        if (v < 0 || v >= n || seen[v]) throw std::invalid_argument(std::string(what) + " is not a permutation");
        seen[v] = 1;
    }
}

}  // namespace

BinaryMatrix BinaryMatrix::permuted(const std::vector<int>& row_perm, const std::vector<int>& col_perm) const {
    check_permutation(row_perm, rows_, "row");
    check_permutation(col_perm, cols_, "column");
    std::vector<std::uint8_t> bits(bits_.size());
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) bits[std::size_t(r) * cols_ + c] = at(row_perm[r], col_perm[c]);
    return {rows_, cols_, std::move(bits)};
}

BinaryMatrix BinaryMatrix::padded(int rows, int cols) const {
    if (rows < rows_ || cols < cols_) throw std::invalid_argument("padding must not shrink the matrix");
    std::vector<std::uint8_t> bits(std::size_t(rows) * std::size_t(cols), 0);
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c) bits[std::size_t(r) * cols + c] = at(r, c);
    return {rows, cols, std::move(bits)};
}

BinaryMatrix BinaryMatrix::submatrix(const std::vector<int>& row_sel, const std::vector<int>& col_sel) const {
    auto check_selection = [](const std::vector<int>& sel, int limit, const char* what) {
        if (sel.empty()) throw std::invalid_argument(std::string(what) + " selection is empty");
        int prev = -1;
        for (int v : sel) {
            if (v <= prev || v >= limit) throw std::invalid_argument(std::string(what) + " selection must be strictly increasing and in range");
            prev = v;
        }
    };
    check_selection(row_sel, rows_, "row");
    check_selection(col_sel, cols_, "column");
    std::vector<std::uint8_t> bits;
    bits.reserve(row_sel.size() * col_sel.size());
    for (int r : row_sel)
        for (int c : col_sel) bits.push_back(at(r, c));
    return {int(row_sel.size()), int(col_sel.size()), std::move(bits)};
}

std::string BinaryMatrix::to_text() const {
    std::string out;
    out.reserve(bits_.size() + rows_);
    for (int r = 0; r < rows_; ++r) {
        for (int c = 0; c < cols_; ++c) out.push_back(at(r, c) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

BinaryMatrix strip_zeros(const BinaryMatrix& a) {
    if (a.ones() == 0) throw std::invalid_argument("cannot strip the all-zero matrix");
    std::vector<int> keep_rows, keep_cols;
    for (int r = 0; r < a.rows(); ++r) {
        for (int c = 0; c < a.cols(); ++c)
            if (a.at(r, c)) {
                keep_rows.push_back(r);
                break;
            }
    }
    for (int c = 0; c < a.cols(); ++c) {
        for (int r = 0; r < a.rows(); ++r)
            if (a.at(r, c)) {
                keep_cols.push_back(c);
                break;
            }
    }
    if (int(keep_rows.size()) == a.rows() && int(keep_cols.size()) == a.cols()) return a;
    return a.submatrix(keep_rows, keep_cols);
}

namespace {

// Rows of `m` as '0'/'1' strings with columns reordered by `col_order`.
std::vector<std::string> rows_under(const BinaryMatrix& m, const std::vector<int>& col_order) {
    std::vector<std::string> rows(m.rows());
    for (int r = 0; r < m.rows(); ++r) {
        std::string& row = rows[r];
        row.resize(col_order.size());
        for (std::size_t j = 0; j < col_order.size(); ++j) row[j] = m.at(r, col_order[j]) ? '1' : '0';
    }
    return rows;
}

void scan_orientation(const BinaryMatrix& m, std::string* best_tag, std::vector<std::string>* best_rows) {
    std::vector<int> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    const std::string header = std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ":";
    do {
        auto rows = rows_under(m, order);
        std::sort(rows.begin(), rows.end(), std::greater<>());
        std::string tag = header;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) tag.push_back('/');
            tag += rows[i];
        }
        if (best_tag->empty() || tag < *best_tag) {
            *best_tag = std::move(tag);
            *best_rows = std::move(rows);
        }
    } while (std::next_permutation(order.begin(), order.end()));
}

}  // namespace

CanonicalForm canonicalize(const BinaryMatrix& a) {
    const BinaryMatrix s = strip_zeros(a);
    if (std::min(s.rows(), s.cols()) > 8)
        throw guard_error("canonicalization cap exceeded: stripped matrix is " + std::to_string(s.rows()) + "x" +
                          std::to_string(s.cols()) + ", min dimension must be <= 8");
    std::string best_tag;
    std::vector<std::string> best_rows;
    if (s.cols() <= s.rows()) scan_orientation(s, &best_tag, &best_rows);
    if (s.rows() <= s.cols()) scan_orientation(s.transposed(), &best_tag, &best_rows);
    return {BinaryMatrix::from_strings(best_rows), best_tag};
}

BinaryMatrix matrix_from_tag(const std::string& tag) {
    const auto colon = tag.find(':');
    if (colon == std::string::npos) throw std::invalid_argument("malformed tag: missing ':'");
    std::vector<std::string> rows;
    std::string row;
    for (std::size_t i = colon + 1; i < tag.size(); ++i) {
        if (tag[i] == '/') {
            rows.push_back(row);
            row.clear();
        } else {
            row.push_back(tag[i]);
        }
    }
    rows.push_back(row);
    auto m = BinaryMatrix::from_strings(rows);
    const std::string dims = std::to_string(m.rows()) + "x" + std::to_string(m.cols());
    if (tag.compare(0, colon, dims) != 0) throw std::invalid_argument("malformed tag: dimension header mismatch");
    return m;
}

StepInfo is_step_matrix(const BinaryMatrix& a) {
    std::vector<int> lengths(a.rows());
    for (int r = 0; r < a.rows(); ++r) {
        int len = 0;
        while (len < a.cols() && a.at(r, len)) ++len;
        for (int c = len; c < a.cols(); ++c)
            if (a.at(r, c)) return {false, 0};  // a one after the prefix ended
        lengths[r] = len;
    }
    int steps = 0;
    for (int r = 0; r < a.rows(); ++r) {
        if (r > 0 && lengths[r] > lengths[r - 1]) return {false, 0};
        if (lengths[r] > 0 && (r == 0 || lengths[r] != lengths[r - 1])) ++steps;
    }
    return {true, steps};
}

}  // namespace tracemin
