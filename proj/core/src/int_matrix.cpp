#include "ethicdual/int_matrix.hpp"

#include <sstream>

namespace ethicdual {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_column(const IntVec& v) {
    IntMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
    IntMatrix out(rows_, rhs.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Int& a = (*this)(i, k);
            if (a == 0) continue;
            for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
        }
    return out;
}

IntVec IntMatrix::operator*(const IntVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    IntVec out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
    if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
        throw std::invalid_argument("matrix difference: dimension mismatch");
    IntMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - rhs.data_[i];
    return out;
}

bool IntMatrix::is_zero() const {
    for (const Int& v : data_)
        if (v != 0) return false;
    return true;
}

void IntMatrix::swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap((*this)(i, k), (*this)(j, k));
}

void IntMatrix::swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap((*this)(k, i), (*this)(k, j));
}

void IntMatrix::negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) (*this)(i, k) = -(*this)(i, k);
}

void IntMatrix::negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, j) = -(*this)(k, j);
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < cols_; ++k) (*this)(dst, k) += q * (*this)(src, k);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, const Int& q) {
    if (q == 0) return;
    for (std::size_t k = 0; k < rows_; ++k) (*this)(k, dst) += q * (*this)(k, src);
}

IntVec IntMatrix::row(std::size_t i) const {
    IntVec out(cols_);
    for (std::size_t k = 0; k < cols_; ++k) out[k] = (*this)(i, k);
    return out;
}

IntVec IntMatrix::col(std::size_t j) const {
    IntVec out(rows_);
    for (std::size_t k = 0; k < rows_; ++k) out[k] = (*this)(k, j);
    return out;
}

IntMatrix IntMatrix::submatrix(const std::vector<std::size_t>& row_idx,
                               const std::vector<std::size_t>& col_idx) const {
    IntMatrix out(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i)
        for (std::size_t j = 0; j < col_idx.size(); ++j)
            out(i, j) = (*this)(row_idx[i], col_idx[j]);
    return out;
}

Int IntMatrix::determinant() const {
    if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    // Bareiss: all divisions exact.
    IntMatrix a = *this;
    Int prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swap_rows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = a(k, k);
    }
    return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) os << ' ';
            os << (*this)(i, j).get_str();
        }
        os << '\n';
    }
    return os.str();
}

IntVec operator*(const IntVec& v, const IntMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: dimension mismatch");
    IntVec out(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

IntVec sub(const IntVec& a, const IntVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("vector difference: dimension mismatch");
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
    return out;
}

IntVec negate(const IntVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
    return out;
}

bool is_zero(const IntVec& v) {
    for (const Int& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace ethicdual
