#pragma once

#include <map>
#include <optional>

#include "ethicdual/lp.hpp"
#include "ethicdual/normal_form.hpp"

namespace ethicdual {

/// Torsion certificate for coker(A). torsion_free means
/// Ext^1(coker A, Z) = 0: no integer duality gap on this component.
struct IntegerCertificate {
    SmithDecomposition snf;
    bool torsion_free = false;
    IntVec offending_factors;  // invariant factors > 1
    std::optional<IntVec> adjoint_multiplier;
};

IntegerCertificate torsion_certificate(const IntMatrix& a);

/// lambda with A^T lambda = -c over Z, when solvable.
std::optional<IntVec> adjoint_solve(const IntMatrix& a, const IntVec& c);

/// Exponent vectors of monomials, componentwise.
using Exponent = IntVec;

struct FarkasOutcome {
    bool feasible = false;
    std::optional<IntVec> witness;  // nonnegative, A witness = b
    /// Separating functional on the truncated monomial space: nonnegative
    /// on every shifted relation z^alpha (z^{A_j} - 1), negative on z^b - 1.
    std::optional<std::map<Exponent, Rat>> separator;
};

/// All shifts alpha in N^m with alpha <= b componentwise.
/// Throws when the box size exceeds the cap.
std::vector<Exponent> farkas_shift_lattice(const IntMatrix& a, const IntVec& b,
                                           unsigned long cap = 1000000);

/// Decide existence of x in N^n with A x = b (A, b nonnegative) by exact
/// rational LP over the truncated positive binomial cone; feasibility
/// comes with an integer witness read off a telescoping path, and
/// infeasibility with a verified separating functional.
FarkasOutcome discrete_farkas(const IntMatrix& a, const IntVec& b,
                              unsigned long cap = 1000000);

/// Exhaustive-search oracle over the bounded box
/// x_j <= max_i ceil(b_i / min positive A_ij); lexicographically least
/// witness. Independent of the LP path.
std::optional<IntVec> brute_force_feasibility(const IntMatrix& a, const IntVec& b,
                                              unsigned long cap = 1000000);

}  // namespace ethicdual
