#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "ethicdual/int_matrix.hpp"

namespace ethicdual {

using Rat = mpq_class;
using RatVec = std::vector<Rat>;

/// Dense rational matrix, row-major. Entries always canonical
/// (lowest terms, positive denominator) — gmp keeps them that way.
class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}
    RatMatrix(std::initializer_list<std::initializer_list<long>> init);

    static RatMatrix from_int(const IntMatrix& m);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool empty() const { return rows_ == 0 || cols_ == 0; }

    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    RatMatrix transpose() const;
    RatVec operator*(const RatVec& v) const;
    bool operator==(const RatMatrix& rhs) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

RatVec operator*(const RatVec& v, const RatMatrix& m);  // v^T * M
Rat dot(const RatVec& a, const RatVec& b);
RatVec to_rat(const IntVec& v);

/// One solution of A x = b over the rationals, if any (Gaussian elimination).
std::optional<RatVec> solve_rational(const RatMatrix& a, const RatVec& b);

/// "p/q" (or just "p" for integers), exact.
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

}  // namespace ethicdual
