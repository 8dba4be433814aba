#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sse {

/// Thrown when checked integer arithmetic would leave the int64 range.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// Thrown on shape errors (non-square where square is required, mismatched
/// products, empty matrices).
class dimension_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

using entry_t = std::int64_t;

entry_t checked_add(entry_t a, entry_t b);
entry_t checked_mul(entry_t a, entry_t b);

/// Dense row-major matrix of non-negative 64-bit integers.
///
/// Every entry is >= 0 and both dimensions are >= 1. All arithmetic is
/// checked; exceeding int64 throws sse::overflow_error.
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<entry_t> entries);
    Matrix(std::initializer_list<std::initializer_list<entry_t>> rows);

    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<std::vector<entry_t>>& rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    entry_t operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
    void set(std::size_t i, std::size_t j, entry_t value);

    std::span<const entry_t> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    const std::vector<entry_t>& entries() const { return data_; }

    entry_t max_entry() const;
    entry_t sum() const;
    std::vector<std::vector<entry_t>> to_rows() const;
    Matrix transpose() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
    friend auto operator<=>(const Matrix& a, const Matrix& b) {
        if (auto c = a.rows_ <=> b.rows_; c != 0) return c;
        if (auto c = a.cols_ <=> b.cols_; c != 0) return c;
        return a.data_ <=> b.data_;
    }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<entry_t> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);
std::string to_string(const Matrix& m);

Matrix multiply(const Matrix& a, const Matrix& b);
Matrix power(const Matrix& a, unsigned k);

/// True iff every row has a positive entry.
bool is_regular(const Matrix& a);

/// Trace of a^k. k >= 1, a square.
entry_t trace_power(const Matrix& a, unsigned k);

inline constexpr std::size_t default_canonical_cap = 8;

/// Lexicographically smallest row-major flattening of P a P^T over all
/// permutations P. Exhaustive; throws dimension_error above `cap`.
Matrix canonical_form(const Matrix& a, std::size_t cap = default_canonical_cap);

/// P a P^T where perm[i] is the source index placed at position i.
Matrix permute(const Matrix& a, std::span<const std::size_t> perm);

/// Permutation matrix with P(i, perm[i]) = 1, so that
/// multiply(multiply(P, a), transpose(P)) == permute(a, perm).
Matrix permutation_matrix(std::span<const std::size_t> perm);

}  // namespace sse
