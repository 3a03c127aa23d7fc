#include "ethicdual/normal_form.hpp"

#include <algorithm>
#include <cstdlib>

namespace ethicdual {

namespace {

// position of the nonzero entry of minimal |value| in S[t.., t..], if any
std::optional<std::pair<std::size_t, std::size_t>> min_abs_pivot(const IntMatrix& s, std::size_t t) {
    std::optional<std::pair<std::size_t, std::size_t>> best;
    Int best_abs;
    for (std::size_t i = t; i < s.rows(); ++i)
        for (std::size_t j = t; j < s.cols(); ++j) {
            if (s(i, j) == 0) continue;
            Int a = abs(s(i, j));
            if (!best || a < best_abs) {
                best = {i, j};
                best_abs = a;
                if (best_abs == 1) return best;
            }
        }
    return best;
}

}  // namespace

bool SmithDecomposition::verify(const IntMatrix& a) const {
    if (U * a * V != S) return false;
    if (abs(U.determinant()) != 1) return false;
    if (abs(V.determinant()) != 1) return false;
    // diagonal, positive, divisibility chain
    for (std::size_t i = 0; i < S.rows(); ++i)
        for (std::size_t j = 0; j < S.cols(); ++j)
            if (i != j && S(i, j) != 0) return false;
    const std::size_t mn = std::min(S.rows(), S.cols());
    for (std::size_t k = 0; k < mn; ++k) {
        if (S(k, k) < 0) return false;
        if (k + 1 < mn && S(k + 1, k + 1) != 0 && S(k, k) != 0 &&
            S(k + 1, k + 1) % S(k, k) != 0)
            return false;
        if (S(k, k) == 0 && k + 1 < mn && S(k + 1, k + 1) != 0) return false;
    }
    return true;
}

SmithDecomposition smith_normal_form(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("smith_normal_form: empty matrix");
    const std::size_t m = a.rows(), n = a.cols(), mn = std::min(m, n);
    SmithDecomposition d;
    d.S = a;
    d.U = IntMatrix::identity(m);
    d.V = IntMatrix::identity(n);
    IntMatrix& S = d.S;

    for (std::size_t t = 0; t < mn; ++t) {
        if (!min_abs_pivot(S, t)) break;  // remaining submatrix zero
        for (;;) {
            auto piv = *min_abs_pivot(S, t);
            if (piv.first != t) {
                S.swap_rows(t, piv.first);
                d.U.swap_rows(t, piv.first);
            }
            if (piv.second != t) {
                S.swap_cols(t, piv.second);
                d.V.swap_cols(t, piv.second);
            }
            // reduce column t below and row t to the right
            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (S(i, t) == 0) continue;
                Int q = S(i, t) / S(t, t);  // truncated: remainder |r| < |pivot|
                S.add_row_multiple(i, t, -q);
                d.U.add_row_multiple(i, t, -q);
                if (S(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (S(t, j) == 0) continue;
                Int q = S(t, j) / S(t, t);
                S.add_col_multiple(j, t, -q);
                d.V.add_col_multiple(j, t, -q);
                if (S(t, j) != 0) clean = false;
            }
            if (!clean) continue;  // min |entry| strictly decreased, repick pivot
            // enforce d_t | every deeper entry
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (S(i, j) % S(t, t) != 0) {
                        S.add_row_multiple(t, i, 1);
                        d.U.add_row_multiple(t, i, 1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
    }
    for (std::size_t k = 0; k < mn; ++k)
        if (S(k, k) < 0) {
            S.negate_row(k);
            d.U.negate_row(k);
        }
    for (std::size_t k = 0; k < mn && S(k, k) != 0; ++k)
        d.invariant_factors.push_back(S(k, k));
    return d;
}

IntVec determinantal_divisors(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("determinantal_divisors: empty matrix");
    const std::size_t m = a.rows(), n = a.cols(), mn = std::min(m, n);
    if (mn > 8) throw std::invalid_argument("determinantal_divisors: oracle limited to 8x8");
    IntVec out(mn, 0);
    for (std::size_t k = 1; k <= mn; ++k) {
        Int g = 0;
        std::vector<std::size_t> ri(k), ci(k);
        // iterate k-subsets of rows and columns
        for (std::size_t i = 0; i < k; ++i) ri[i] = i;
        bool rows_done = false;
        while (!rows_done) {
            for (std::size_t i = 0; i < k; ++i) ci[i] = i;
            bool cols_done = false;
            while (!cols_done) {
                Int det = a.submatrix(ri, ci).determinant();
                g = gcd(g, det);
                // next column subset
                std::size_t p = k;
                while (p > 0 && ci[p - 1] == n - k + p - 1) --p;
                if (p == 0) cols_done = true;
                else {
                    ++ci[p - 1];
                    for (std::size_t i = p; i < k; ++i) ci[i] = ci[i - 1] + 1;
                }
            }
            std::size_t p = k;
            while (p > 0 && ri[p - 1] == m - k + p - 1) --p;
            if (p == 0) rows_done = true;
            else {
                ++ri[p - 1];
                for (std::size_t i = p; i < k; ++i) ri[i] = ri[i - 1] + 1;
            }
        }
        out[k - 1] = abs(g);
        if (out[k - 1] == 0) break;  // all deeper minors vanish too
    }
    return out;
}

HermiteForm hermite_normal_form(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("hermite_normal_form: empty matrix");
    const std::size_t m = a.rows(), n = a.cols();
    HermiteForm h;
    h.H = a;
    h.U = IntMatrix::identity(m);
    IntMatrix& H = h.H;
    std::size_t r = 0;
    for (std::size_t j = 0; j < n && r < m; ++j) {
        // Euclidean elimination in column j, rows r..m-1
        for (;;) {
            std::size_t best = m;
            Int best_abs;
            for (std::size_t i = r; i < m; ++i) {
                if (H(i, j) == 0) continue;
                Int v = abs(H(i, j));
                if (best == m || v < best_abs) {
                    best = i;
                    best_abs = v;
                }
            }
            if (best == m) break;  // column clear below r
            if (best != r) {
                H.swap_rows(r, best);
                h.U.swap_rows(r, best);
            }
            bool clean = true;
            for (std::size_t i = r + 1; i < m; ++i) {
                if (H(i, j) == 0) continue;
                Int q = H(i, j) / H(r, j);
                H.add_row_multiple(i, r, -q);
                h.U.add_row_multiple(i, r, -q);
                if (H(i, j) != 0) clean = false;
            }
            if (clean) break;
        }
        if (H(r, j) == 0) continue;  // no pivot in this column
        if (H(r, j) < 0) {
            H.negate_row(r);
            h.U.negate_row(r);
        }
        // reduce entries above the pivot into [0, pivot)
        for (std::size_t i = 0; i < r; ++i) {
            Int q;
            mpz_fdiv_q(q.get_mpz_t(), H(i, j).get_mpz_t(), H(r, j).get_mpz_t());
            H.add_row_multiple(i, r, -q);
            h.U.add_row_multiple(i, r, -q);
        }
        ++r;
    }
    h.rank = r;
    return h;
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVec& b) {
    if (a.empty()) throw std::invalid_argument("solve_integer: empty matrix");
    if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: dimension mismatch");
    SmithDecomposition d = smith_normal_form(a);
    const std::size_t m = a.rows(), n = a.cols(), mn = std::min(m, n);
    const std::size_t r = d.rank();
    IntVec y = d.U * b;
    IntVec z(n, 0);
    for (std::size_t i = 0; i < m; ++i) {
        if (i < mn && d.S(i, i) != 0) {
            if (y[i] % d.S(i, i) != 0) return std::nullopt;
            z[i] = y[i] / d.S(i, i);
        } else if (y[i] != 0) {
            return std::nullopt;
        }
    }
    IntegerSolution sol;
    sol.particular = d.V * z;
    std::vector<std::size_t> all_rows(n), ker_cols;
    for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
    for (std::size_t j = r; j < n; ++j) ker_cols.push_back(j);
    sol.kernel = d.V.submatrix(all_rows, ker_cols);
    return sol;
}

IntMatrix kernel_basis(const IntMatrix& a) {
    if (a.empty()) throw std::invalid_argument("kernel_basis: empty matrix");
    SmithDecomposition d = smith_normal_form(a);
    const std::size_t n = a.cols();
    std::vector<std::size_t> all_rows(n), ker_cols;
    for (std::size_t i = 0; i < n; ++i) all_rows[i] = i;
    for (std::size_t j = d.rank(); j < n; ++j) ker_cols.push_back(j);
    return d.V.submatrix(all_rows, ker_cols);
}

}  // namespace ethicdual
