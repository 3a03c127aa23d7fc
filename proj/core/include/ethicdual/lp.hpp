#pragma once

#include <optional>
#include <set>

#include "ethicdual/rational.hpp"

namespace ethicdual {

/// minimize objective . x   subject to   eq_matrix x = eq_rhs,
/// x_i >= 0 for i in nonneg_vars, remaining variables free.
struct LinearProgram {
    RatVec objective;
    RatMatrix eq_matrix;
    RatVec eq_rhs;
    std::set<std::size_t> nonneg_vars;

    static LinearProgram standard(RatVec c, RatMatrix a, RatVec b);  // all vars >= 0
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpOutcome {
    LpStatus status = LpStatus::infeasible;
    std::optional<RatVec> primal;
    std::optional<RatVec> dual;  // y with (A^T y)_i <= c_i on nonneg vars, = c_i on free vars
    Rat objective_value;
    /// y with y^T A >= 0 on nonneg vars, = 0 on free vars, y^T b < 0.
    std::optional<RatVec> infeasibility_certificate;
    std::optional<RatVec> ray;  // improving direction when unbounded
};

/// Exact rational simplex. No tolerances exist anywhere. Termination is
/// certified by an anti-cycling rule (Bland) that engages after a
/// degeneracy streak.
LpOutcome lp_solve(const LinearProgram& p);

/// Indices i with x_i = 0 for every x in {x >= 0 : A x = b}.
/// Throws if the region is empty.
std::set<std::size_t> forced_zero_coordinates(const RatMatrix& eq_matrix, const RatVec& eq_rhs);

/// Farkas certificate for an infeasible region {x >= 0 : A x = b}:
/// y with y^T A >= 0 and y^T b < 0, verified by substitution.
/// Throws if the region is actually feasible.
RatVec farkas_certificate(const RatMatrix& eq_matrix, const RatVec& eq_rhs);

}  // namespace ethicdual
