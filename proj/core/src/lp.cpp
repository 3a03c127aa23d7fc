#include "ethicdual/lp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ethicdual {

LinearProgram LinearProgram::standard(RatVec c, RatMatrix a, RatVec b) {
    LinearProgram p;
    p.objective = std::move(c);
    p.eq_matrix = std::move(a);
    p.eq_rhs = std::move(b);
    for (std::size_t j = 0; j < p.objective.size(); ++j) p.nonneg_vars.insert(j);
    return p;
}

namespace {

// Dense tableau simplex over exact rationals.
//
// Columns: [structural std-form columns | one artificial per row].
// The artificial block doubles as a running copy of B^{-1}, which is
// where the dual vector is read off at the end.
class Simplex {
public:
    Simplex(const RatMatrix& a, const RatVec& b)
        : m_(a.rows()), nstruct_(a.cols()), ncols_(a.cols() + a.rows()) {
        tab_.assign(m_, RatVec(ncols_, Rat(0)));
        rhs_.resize(m_);
        basis_.resize(m_);
        row_live_.assign(m_, true);
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < nstruct_; ++j) tab_[i][j] = a(i, j);
            rhs_[i] = b[i];
            if (rhs_[i] < 0) {
                for (std::size_t j = 0; j < nstruct_; ++j) tab_[i][j] = -tab_[i][j];
                rhs_[i] = -rhs_[i];
                row_flipped_.insert(i);
            }
            tab_[i][nstruct_ + i] = 1;
            basis_[i] = nstruct_ + i;
        }
    }

    bool flipped(std::size_t row) const { return row_flipped_.count(row) > 0; }

    // returns true when phase 1 reaches a feasible basis
    bool phase1() {
        cost_.assign(ncols_, Rat(0));
        // phase-1 cost: 1 on artificials; reduced against the artificial basis
        for (std::size_t j = 0; j < nstruct_; ++j) {
            Rat s(0);
            for (std::size_t i = 0; i < m_; ++i) s += tab_[i][j];
            cost_[j] = -s;
        }
        obj_ = Rat(0);
        for (std::size_t i = 0; i < m_; ++i) obj_ += rhs_[i];
        artificials_enterable_ = false;
        iterate();
        if (obj_ != 0) return false;
        purge_artificials();
        return true;
    }

    // phase-1 dual at infeasibility: y with y^T A <= 0, y^T b > 0
    RatVec phase1_dual() const {
        RatVec y(m_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i) y[i] = 1 - cost_[nstruct_ + i];
        return y;
    }

    enum class Phase2 { optimal, unbounded };

    Phase2 phase2(const RatVec& c) {
        cost_.assign(ncols_, Rat(0));
        for (std::size_t j = 0; j < nstruct_; ++j) cost_[j] = c[j];
        obj_ = Rat(0);
        // reduce against the current basis
        for (std::size_t i = 0; i < m_; ++i) {
            if (!row_live_[i] || basis_[i] >= nstruct_) continue;
            Rat cb = c[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < ncols_; ++j) cost_[j] -= cb * tab_[i][j];
            obj_ += cb * rhs_[i];
        }
        return iterate() ? Phase2::optimal : Phase2::unbounded;
    }

    RatVec primal() const {
        RatVec x(nstruct_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (row_live_[i] && basis_[i] < nstruct_) x[basis_[i]] = rhs_[i];
        return x;
    }

    // y = c_B B^{-1}, read from the artificial block of the cost row
    RatVec dual() const {
        RatVec y(m_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (row_live_[i]) y[i] = -cost_[nstruct_ + i];
        return y;
    }

    RatVec ray() const { return ray_; }
    const Rat& objective() const { return obj_; }

private:
    // returns false when unbounded (ray_ filled in)
    bool iterate() {
        std::size_t degenerate_streak = 0;
        bool bland = false;
        for (;;) {
            std::size_t enter = ncols_;
            if (bland) {
                for (std::size_t j = 0; j < ncols_; ++j)
                    if (enterable(j) && cost_[j] < 0) {
                        enter = j;
                        break;
                    }
            } else {
                for (std::size_t j = 0; j < ncols_; ++j)
                    if (enterable(j) && cost_[j] < 0 &&
                        (enter == ncols_ || cost_[j] < cost_[enter]))
                        enter = j;
            }
            if (enter == ncols_) return true;  // optimal

            std::size_t leave = m_;
            Rat best_ratio;
            for (std::size_t i = 0; i < m_; ++i) {
                if (!row_live_[i] || tab_[i][enter] <= 0) continue;
                Rat ratio = rhs_[i] / tab_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) {
                ray_.assign(nstruct_, Rat(0));
                if (enter < nstruct_) ray_[enter] = 1;
                for (std::size_t i = 0; i < m_; ++i)
                    if (row_live_[i] && basis_[i] < nstruct_)
                        ray_[basis_[i]] = -tab_[i][enter];
                return false;
            }
            if (best_ratio == 0) {
                if (++degenerate_streak > m_ + ncols_) bland = true;
            } else {
                degenerate_streak = 0;
            }
            pivot(leave, enter);
        }
    }

    bool enterable(std::size_t j) const {
        if (j >= nstruct_ && !artificials_enterable_) return false;
        return true;
    }

    void pivot(std::size_t row, std::size_t col) {
        Rat inv = 1 / tab_[row][col];
        if (inv != 1)
            for (std::size_t j = 0; j < ncols_; ++j) tab_[row][j] *= inv;
        rhs_[row] *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || !row_live_[i] || tab_[i][col] == 0) continue;
            Rat f = tab_[i][col];
            for (std::size_t j = 0; j < ncols_; ++j)
                if (tab_[row][j] != 0) tab_[i][j] -= f * tab_[row][j];
            rhs_[i] -= f * rhs_[row];
        }
        if (cost_[col] != 0) {
            Rat f = cost_[col];
            for (std::size_t j = 0; j < ncols_; ++j)
                if (tab_[row][j] != 0) cost_[j] -= f * tab_[row][j];
            obj_ += f * rhs_[row];
        }
        basis_[row] = col;
    }

    // after a feasible phase 1: pivot remaining artificials out of the
    // basis; rows where that is impossible are redundant and go dead
    void purge_artificials() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!row_live_[i] || basis_[i] < nstruct_) continue;
            std::size_t col = nstruct_;
            for (std::size_t j = 0; j < nstruct_; ++j)
                if (tab_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col < nstruct_) pivot(i, col);  // rhs is 0 here, pivot is degenerate
            else row_live_[i] = false;
        }
    }

    std::size_t m_, nstruct_, ncols_;
    std::vector<RatVec> tab_;
    RatVec rhs_;
    RatVec cost_;
    Rat obj_;
    std::vector<std::size_t> basis_;
    std::vector<bool> row_live_;
    std::set<std::size_t> row_flipped_;
    RatVec ray_;
    bool artificials_enterable_ = true;
};

struct StdForm {
    RatMatrix a;
    RatVec c;
    // column j of the std form maps to original variable var[j] with sign[j]
    std::vector<std::size_t> var;
    std::vector<int> sign;
};

StdForm to_standard_form(const LinearProgram& p) {
    const std::size_t n = p.objective.size();
    StdForm s;
    for (std::size_t j = 0; j < n; ++j) {
        s.var.push_back(j);
        s.sign.push_back(1);
        if (!p.nonneg_vars.count(j)) {  // free: split x = x+ - x-
            s.var.push_back(j);
            s.sign.push_back(-1);
        }
    }
    const std::size_t ns = s.var.size();
    s.a = RatMatrix(p.eq_matrix.rows(), ns);
    s.c.resize(ns);
    for (std::size_t k = 0; k < ns; ++k) {
        s.c[k] = s.sign[k] * p.objective[s.var[k]];
        for (std::size_t i = 0; i < p.eq_matrix.rows(); ++i)
            s.a(i, k) = s.sign[k] * p.eq_matrix(i, s.var[k]);
    }
    return s;
}

}  // namespace

LpOutcome lp_solve(const LinearProgram& p) {
    const std::size_t m = p.eq_matrix.rows();
    const std::size_t n = p.objective.size();
    if (p.eq_matrix.cols() != n && !(m == 0 && p.eq_matrix.cols() == 0))
        throw std::invalid_argument("lp_solve: objective/matrix dimension mismatch");
    if (p.eq_rhs.size() != m) throw std::invalid_argument("lp_solve: rhs dimension mismatch");
    for (std::size_t j : p.nonneg_vars)
        if (j >= n) throw std::invalid_argument("lp_solve: nonneg index out of range");

    StdForm sf = to_standard_form(p);
    Simplex sx(sf.a, p.eq_rhs);
    LpOutcome out;

    if (!sx.phase1()) {
        out.status = LpStatus::infeasible;
        RatVec y1 = sx.phase1_dual();  // y^T A_std <= 0, y^T |b| > 0
        RatVec cert(m);
        for (std::size_t i = 0; i < m; ++i) cert[i] = sx.flipped(i) ? y1[i] : Rat(-y1[i]);
        out.infeasibility_certificate = std::move(cert);
        return out;
    }

    if (sx.phase2(sf.c) == Simplex::Phase2::unbounded) {
        out.status = LpStatus::unbounded;
        RatVec rstd = sx.ray();
        RatVec ray(n, Rat(0));
        for (std::size_t k = 0; k < rstd.size(); ++k) ray[sf.var[k]] += sf.sign[k] * rstd[k];
        out.ray = std::move(ray);
        return out;
    }

    out.status = LpStatus::optimal;
    RatVec xstd = sx.primal();
    RatVec x(n, Rat(0));
    for (std::size_t k = 0; k < xstd.size(); ++k) x[sf.var[k]] += sf.sign[k] * xstd[k];
    out.primal = std::move(x);
    out.objective_value = sx.objective();

    RatVec ystd = sx.dual();
    RatVec y(m);
    for (std::size_t i = 0; i < m; ++i) y[i] = sx.flipped(i) ? Rat(-ystd[i]) : ystd[i];
    out.dual = std::move(y);
    return out;
}

std::set<std::size_t> forced_zero_coordinates(const RatMatrix& eq_matrix, const RatVec& eq_rhs) {
    const std::size_t m = eq_matrix.rows(), n = eq_matrix.cols();
    {
        LinearProgram feas = LinearProgram::standard(RatVec(n, Rat(0)), eq_matrix, eq_rhs);
        if (lp_solve(feas).status == LpStatus::infeasible)
            throw std::invalid_argument("forced_zero_coordinates: region is empty");
    }
    std::set<std::size_t> forced;
    for (std::size_t i = 0; i < n; ++i) {
        // maximize x_i under the auxiliary box x_i <= 1 so the LP is bounded
        RatMatrix a(m + 1, n + 1);
        RatVec b(m + 1);
        for (std::size_t r = 0; r < m; ++r) {
            for (std::size_t cidx = 0; cidx < n; ++cidx) a(r, cidx) = eq_matrix(r, cidx);
            b[r] = eq_rhs[r];
        }
        a(m, i) = 1;
        a(m, n) = 1;  // slack of the box
        b[m] = 1;
        RatVec c(n + 1, Rat(0));
        c[i] = -1;
        LpOutcome r = lp_solve(LinearProgram::standard(std::move(c), std::move(a), std::move(b)));
        // infeasible box means every feasible point has x_i > 1: not forced
        if (r.status == LpStatus::infeasible) continue;
        if (r.status != LpStatus::optimal)
            throw std::logic_error("forced_zero_coordinates: boxed LP must be bounded");
        if (r.objective_value == 0) forced.insert(i);
    }
    return forced;
}

RatVec farkas_certificate(const RatMatrix& eq_matrix, const RatVec& eq_rhs) {
    LinearProgram feas =
        LinearProgram::standard(RatVec(eq_matrix.cols(), Rat(0)), eq_matrix, eq_rhs);
    LpOutcome r = lp_solve(feas);
    if (r.status != LpStatus::infeasible)
        throw std::invalid_argument("farkas_certificate: region is feasible");
    const RatVec& y = *r.infeasibility_certificate;
    // verify before returning
    RatVec ya = y * eq_matrix;
    for (const Rat& v : ya)
        if (v < 0) throw std::logic_error("farkas_certificate: certificate fails y^T A >= 0");
    if (dot(y, eq_rhs) >= 0)
        throw std::logic_error("farkas_certificate: certificate fails y^T b < 0");
    return y;
}

}  // namespace ethicdual
