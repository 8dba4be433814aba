#include "sse/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

namespace sse {

entry_t checked_add(entry_t a, entry_t b) {
    entry_t out;
    if (__builtin_add_overflow(a, b, &out)) throw overflow_error("integer overflow in addition");
    return out;
}

entry_t checked_mul(entry_t a, entry_t b) {
    entry_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw overflow_error("integer overflow in multiplication");
    return out;
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : Matrix(rows, cols, std::vector<entry_t>(rows * cols, 0)) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<entry_t> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (rows == 0 || cols == 0) throw dimension_error("matrix dimensions must be positive");
    if (data_.size() != rows * cols) throw dimension_error("entry count does not match rows*cols");
    for (entry_t v : data_)
        if (v < 0) throw std::invalid_argument("matrix entries must be non-negative");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<entry_t>> rows) : rows_(rows.size()), cols_(0) {
    if (rows_ == 0) throw dimension_error("matrix dimensions must be positive");
    cols_ = rows.begin()->size();
    for (const auto& r : rows) {
        if (r.size() != cols_) throw dimension_error("ragged row list");
        for (entry_t v : r) {
            if (v < 0) throw std::invalid_argument("matrix entries must be non-negative");
            data_.push_back(v);
        }
    }
    if (cols_ == 0) throw dimension_error("matrix dimensions must be positive");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<entry_t>>& rows) {
    if (rows.empty()) throw dimension_error("matrix dimensions must be positive");
    std::vector<entry_t> flat;
    const std::size_t cols = rows.front().size();
    for (const auto& r : rows) {
        if (r.size() != cols) throw dimension_error("ragged row list");
        flat.insert(flat.end(), r.begin(), r.end());
    }
    return Matrix(rows.size(), cols, std::move(flat));
}

void Matrix::set(std::size_t i, std::size_t j, entry_t value) {
    if (value < 0) throw std::invalid_argument("matrix entries must be non-negative");
    data_.at(i * cols_ + j) = value;
}

entry_t Matrix::max_entry() const { return *std::max_element(data_.begin(), data_.end()); }

entry_t Matrix::sum() const {
    entry_t s = 0;
    for (entry_t v : data_) s = checked_add(s, v);
    return s;
}

std::vector<std::vector<entry_t>> Matrix::to_rows() const {
    std::vector<std::vector<entry_t>> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out[i].assign(row(i).begin(), row(i).end());
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
    return t;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (i) os << ',';
        os << '[';
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) os << ',';
            os << m(i, j);
        }
        os << ']';
    }
    return os << ']';
}

std::string to_string(const Matrix& m) {
    std::ostringstream ss;
    ss << m;
    return ss.str();
}

Matrix multiply(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows())
        throw dimension_error("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    std::vector<entry_t> out(a.rows() * b.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const entry_t aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) {
                entry_t& o = out[i * b.cols() + j];
                o = checked_add(o, checked_mul(aik, b(k, j)));
            }
        }
    return Matrix(a.rows(), b.cols(), std::move(out));
}

Matrix power(const Matrix& a, unsigned k) {
    if (!a.is_square()) throw dimension_error("power of a non-square matrix");
    Matrix result = Matrix::identity(a.rows());
    for (unsigned i = 0; i < k; ++i) result = multiply(result, a);
    return result;
}

bool is_regular(const Matrix& a) {
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto r = a.row(i);
        if (std::none_of(r.begin(), r.end(), [](entry_t v) { return v > 0; })) return false;
    }
    return true;
}

entry_t trace_power(const Matrix& a, unsigned k) {
    if (!a.is_square()) throw dimension_error("trace of a non-square matrix");
    if (k == 0) throw std::invalid_argument("trace_power requires k >= 1");
    const Matrix p = power(a, k);
    entry_t t = 0;
    for (std::size_t i = 0; i < p.rows(); ++i) t = checked_add(t, p(i, i));
    return t;
}

Matrix permute(const Matrix& a, std::span<const std::size_t> perm) {
    const std::size_t n = a.rows();
    if (!a.is_square() || perm.size() != n) throw dimension_error("permutation size mismatch");
    std::vector<entry_t> out(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i * n + j] = a(perm[i], perm[j]);
    return Matrix(n, n, std::move(out));
}

Matrix permutation_matrix(std::span<const std::size_t> perm) {
    const std::size_t n = perm.size();
    Matrix p(n, n);
    for (std::size_t i = 0; i < n; ++i) p.set(i, perm[i], 1);
    return p;
}

Matrix canonical_form(const Matrix& a, std::size_t cap) {
    if (!a.is_square()) throw dimension_error("canonical_form requires a square matrix");
    const std::size_t n = a.rows();
    if (n > cap)
        throw dimension_error("canonical_form: dimension " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Matrix best = a;
    do {
        // compare lazily so most permutations bail out on the first entries
        bool smaller = false;
        for (std::size_t i = 0; i < n && !smaller; ++i) {
            bool decided = false;
            for (std::size_t j = 0; j < n; ++j) {
                const entry_t v = a(perm[i], perm[j]);
                if (v != best(i, j)) {
                    smaller = v < best(i, j);
                    decided = true;
                    break;
                }
            }
            if (decided && !smaller) break;
        }
        if (smaller) best = permute(a, perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace sse
