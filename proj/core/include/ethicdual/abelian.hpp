#pragma once

#include <string>

#include "ethicdual/normal_form.hpp"

namespace ethicdual {

/// Finitely generated abelian group in invariant-factor canonical form:
/// Z^free_rank + Z/d_1 + ... + Z/d_k with 2 <= d_1 | d_2 | ... | d_k.
struct FgAbelianGroup {
    std::size_t free_rank = 0;
    IntVec torsion_factors;  // each >= 2, divisibility chain

    bool operator==(const FgAbelianGroup& rhs) const = default;
    bool is_trivial() const { return free_rank == 0 && torsion_factors.empty(); }
    bool is_torsion_free() const { return torsion_factors.empty(); }
    Int torsion_order() const;
    std::string to_string() const;  // e.g. "Z^2 + Z/2 + Z/4"
};

/// coker(A : Z^cols -> Z^rows) in canonical form.
FgAbelianGroup cokernel(const IntMatrix& a);

/// Ext^1(G, Z): the torsion part of G. This is the duality obstruction.
FgAbelianGroup ext1_to_Z(const FgAbelianGroup& g);

/// Hom(G, Z): the free part of G (torsion admits no nonzero map to Z).
FgAbelianGroup hom_to_Z(const FgAbelianGroup& g);

/// A single differential d : C_1 -> C_0 (degree-1 to degree-0),
/// presented as a (dim C_0) x (dim C_1) integer matrix.
struct TwoTermComplex {
    IntMatrix d;
    std::string degree1_label = "C1";
    std::string degree0_label = "C0";
};

/// Cohomology of the derived dual of a two-term complex, read through
/// the presentation [im(d) -> Z^rows]: H^0 is the lattice of integer
/// functionals vanishing on im(d), H^1 is pure torsion.
struct DerivedDualReport {
    std::size_t h0_rank = 0;
    FgAbelianGroup h1;        // free_rank always 0
    Int euler_characteristic; // h0_rank minus the (zero) free rank of H^1
};

DerivedDualReport derived_dual(const TwoTermComplex& cx);

/// Basis of H^0: integer functionals on Z^rows vanishing on im(d),
/// as columns. Computed through the HNF of d^T.
IntMatrix h0_dual_basis(const TwoTermComplex& cx);

}  // namespace ethicdual
