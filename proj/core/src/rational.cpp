#include "ethicdual/rational.hpp"

namespace ethicdual {

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<long>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : init) {
        if (r.size() != cols_) throw std::invalid_argument("ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
    RatMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

RatVec RatMatrix::operator*(const RatVec& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: dimension mismatch");
    RatVec out(rows_, Rat(0));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            if ((*this)(i, j) != 0 && v[j] != 0) out[i] += (*this)(i, j) * v[j];
    return out;
}

RatVec operator*(const RatVec& v, const RatMatrix& m) {
    if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: dimension mismatch");
    RatVec out(m.cols(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < m.cols(); ++j) out[j] += v[i] * m(i, j);
    }
    return out;
}

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
    return out;
}

std::optional<RatVec> solve_rational(const RatMatrix& a, const RatVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    RatMatrix w(m, n);
    RatVec rhs = b;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) w(i, j) = a(i, j);

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        std::size_t p = r;
        while (p < m && w(p, j) == 0) ++p;
        if (p == m) continue;
        if (p != r) {
            for (std::size_t k = 0; k < n; ++k) std::swap(w(r, k), w(p, k));
            std::swap(rhs[r], rhs[p]);
        }
        Rat inv = 1 / w(r, j);
        for (std::size_t k = 0; k < n; ++k) w(r, k) *= inv;
        rhs[r] *= inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == r || w(i, j) == 0) continue;
            Rat f = w(i, j);
            for (std::size_t k = 0; k < n; ++k) w(i, k) -= f * w(r, k);
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(j);
        ++r;
    }
    for (std::size_t i = r; i < m; ++i)
        if (rhs[i] != 0) return std::nullopt;
    RatVec x(n, Rat(0));
    for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

std::string rat_to_string(const Rat& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    Rat r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

}  // namespace ethicdual
