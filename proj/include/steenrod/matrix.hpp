#pragma once

#include "steenrod/integer.hpp"

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace steenrod {

// Dense integer matrix, row-major. 0 x n and n x 0 matrices are legal and
// stand for zero maps out of / into the trivial group.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix identity(std::size_t n);
    static IntMatrix diagonal(std::span<const Integer> entries);
    static IntMatrix column(std::span<const Integer> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::vector<Integer> col(std::size_t c) const;
    std::vector<Integer> row(std::size_t r) const;
    void set_col(std::size_t c, std::span<const Integer> values);

    // Columns [first, first + count).
    IntMatrix col_range(std::size_t first, std::size_t count) const;
    // Rows [first, first + count).
    IntMatrix row_range(std::size_t first, std::size_t count) const;
    IntMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const IntMatrix& b);
    IntMatrix select_rows(std::span<const std::size_t> idx) const;
    IntMatrix select_cols(std::span<const std::size_t> idx) const;

    IntMatrix transpose() const;
    bool is_zero() const;

    // Elementary operations, used by the reductions.
    void swap_rows(std::size_t a, std::size_t b);
    void swap_cols(std::size_t a, std::size_t b);
    void negate_row(std::size_t r);
    void negate_col(std::size_t c);
    // row[dst] -= q * row[src]
    void row_submul(std::size_t dst, std::size_t src, const Integer& q);
    // col[dst] -= q * col[src]
    void col_submul(std::size_t dst, std::size_t src, const Integer& q);

    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b);
    friend IntMatrix operator-(const IntMatrix& a);
    friend IntMatrix operator*(const Integer& s, const IntMatrix& a);
    std::vector<Integer> apply(std::span<const Integer> v) const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

// [a | b]
IntMatrix hstack(const IntMatrix& a, const IntMatrix& b);
// [a ; b]
IntMatrix vstack(const IntMatrix& a, const IntMatrix& b);
// diag(a, b)
IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b);

Integer determinant(const IntMatrix& m);

}  // namespace steenrod
