#include "ethicdual/abelian.hpp"

#include <sstream>

namespace ethicdual {

Int FgAbelianGroup::torsion_order() const {
    Int p = 1;
    for (const Int& d : torsion_factors) p *= d;
    return p;
}

std::string FgAbelianGroup::to_string() const {
    if (is_trivial()) return "0";
    std::ostringstream os;
    bool first = true;
    if (free_rank > 0) {
        os << (free_rank == 1 ? "Z" : "Z^" + std::to_string(free_rank));
        first = false;
    }
    for (const Int& d : torsion_factors) {
        if (!first) os << " + ";
        os << "Z/" << d.get_str();
        first = false;
    }
    return os.str();
}

FgAbelianGroup cokernel(const IntMatrix& a) {
    SmithDecomposition d = smith_normal_form(a);
    FgAbelianGroup g;
    g.free_rank = a.rows() - d.rank();
    for (const Int& f : d.invariant_factors)
        if (f > 1) g.torsion_factors.push_back(f);
    return g;
}

FgAbelianGroup ext1_to_Z(const FgAbelianGroup& g) {
    return FgAbelianGroup{0, g.torsion_factors};
}

FgAbelianGroup hom_to_Z(const FgAbelianGroup& g) {
    return FgAbelianGroup{g.free_rank, {}};
}

DerivedDualReport derived_dual(const TwoTermComplex& cx) {
    SmithDecomposition snf = smith_normal_form(cx.d);
    DerivedDualReport r;
    r.h0_rank = cx.d.rows() - snf.rank();
    for (const Int& f : snf.invariant_factors)
        if (f > 1) r.h1.torsion_factors.push_back(f);
    // H^1 carries torsion only in this presentation, so chi is the H^0 rank.
    r.euler_characteristic = Int(static_cast<long>(r.h0_rank)) - Int(static_cast<long>(r.h1.free_rank));
    return r;
}

IntMatrix h0_dual_basis(const TwoTermComplex& cx) {
    // Functionals y on Z^rows with y^T d = 0, i.e. the integer kernel of d^T.
    return kernel_basis(cx.d.transpose());
}

}  // namespace ethicdual
