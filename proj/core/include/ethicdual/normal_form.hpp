#pragma once

#include <optional>

#include "ethicdual/int_matrix.hpp"

namespace ethicdual {

/// U * A * V = S with U, V unimodular and S diagonal, d_i | d_{i+1}.
/// The invariant factors classify coker(A) and are the universal
/// certificate object for every duality check in this library.
struct SmithDecomposition {
    IntMatrix U;  // rows x rows
    IntMatrix S;  // rows x cols, diagonal
    IntMatrix V;  // cols x cols
    IntVec invariant_factors;  // positive diagonal entries of S, in order

    std::size_t rank() const { return invariant_factors.size(); }
    /// Exact check of U*A*V == S and |det U| == |det V| == 1.
    bool verify(const IntMatrix& a) const;
};

/// Smith normal form with transformation matrices.
/// Pivoting picks the nonzero entry of minimal absolute value in the
/// working submatrix; invariant factors are normalized positive.
SmithDecomposition smith_normal_form(const IntMatrix& a);

/// k-th entry = gcd of all k x k minors (0 when all vanish).
/// Exponential minor enumeration; this is a validation oracle, refused
/// above 8x8.
IntVec determinantal_divisors(const IntMatrix& a);

struct HermiteForm {
    IntMatrix H;  // row-style HNF: echelon, positive pivots, reduced above
    IntMatrix U;  // unimodular, U * A = H
    std::size_t rank = 0;
};

HermiteForm hermite_normal_form(const IntMatrix& a);

struct IntegerSolution {
    IntVec particular;  // A * particular = b
    IntMatrix kernel;   // columns form a saturated basis of {x : A x = 0}
};

/// Solve A x = b over the integers. Empty optional iff no integer
/// solution exists (a rational-only solution does not count).
std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVec& b);

/// Saturated basis of the integer kernel lattice, as matrix columns.
IntMatrix kernel_basis(const IntMatrix& a);

}  // namespace ethicdual
