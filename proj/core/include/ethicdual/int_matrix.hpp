#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ethicdual {

using Int = mpz_class;
using IntVec = std::vector<Int>;

/// Dense matrix over the integers, row-major, arbitrary precision.
/// All arithmetic in this library is exact; there is no floating point
/// anywhere on a computational path.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> init);

    static IntMatrix identity(std::size_t n);
    static IntMatrix zero(std::size_t rows, std::size_t cols) { return IntMatrix(rows, cols); }
    static IntMatrix from_column(const IntVec& v);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Int& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Int& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    IntMatrix transpose() const;
    IntMatrix operator*(const IntMatrix& rhs) const;
    IntVec operator*(const IntVec& v) const;
    IntMatrix operator-(const IntMatrix& rhs) const;
    bool operator==(const IntMatrix& rhs) const = default;

    bool is_zero() const;
    bool is_square() const { return rows_ == cols_; }

    // elementary row/column operations (unimodular building blocks)
    void swap_rows(std::size_t i, std::size_t j);
    void swap_cols(std::size_t i, std::size_t j);
    void negate_row(std::size_t i);
    void negate_col(std::size_t j);
    void add_row_multiple(std::size_t dst, std::size_t src, const Int& q);  // row dst += q * row src
    void add_col_multiple(std::size_t dst, std::size_t src, const Int& q);

    IntVec row(std::size_t i) const;
    IntVec col(std::size_t j) const;
    /// Submatrix picking the given rows and columns, in order.
    IntMatrix submatrix(const std::vector<std::size_t>& row_idx,
                        const std::vector<std::size_t>& col_idx) const;

    /// Exact determinant (Bareiss fraction-free elimination). Requires square.
    Int determinant() const;

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

IntVec operator*(const IntVec& row_vec, const IntMatrix& m);  // v^T * M
IntVec sub(const IntVec& a, const IntVec& b);
IntVec negate(const IntVec& v);
bool is_zero(const IntVec& v);

}  // namespace ethicdual
