#pragma once

#include "ethicdual/abelian.hpp"

namespace ethicdual {

/// Ordered morphism steps f_1, f_2, ...: step t+1 composes after step t,
/// so cols(steps[t+1]) == rows(steps[t]).
struct MorphismChain {
    std::vector<IntMatrix> steps;

    explicit MorphismChain(std::vector<IntMatrix> s);
    std::size_t length() const { return steps.size(); }
    /// Exact product of the first t steps (step t applied last).
    IntMatrix compose_prefix(std::size_t t) const;
};

struct MemoryEntry {
    std::size_t t = 0;
    FgAbelianGroup memory;     // tors coker(F_t)
    Int torsion_order;
    double entropy = 0.0;      // ln(torsion_order), display only
};

struct MemoryReport {
    std::vector<MemoryEntry> per_time;
};

/// Memory retained after t steps: torsion part of coker of the composed
/// presentation matrix.
FgAbelianGroup ethic_memory(const MorphismChain& chain, std::size_t t);

/// Entropy S(t) = sum of ln d_i over invariant factors d_i > 1, at every
/// prefix. The exact torsion order is the source of truth; the decimal is
/// for display.
MemoryReport ethic_entropy_profile(const MorphismChain& chain);

struct ReversibilityReport {
    bool reversible = false;  // no hysteresis: torsion of coker(F) trivial
    FgAbelianGroup memory;
};

ReversibilityReport reversibility_check(const IntMatrix& f);  // square only

struct SubadditivityReport {
    Int order1, order2, order_concat;  // exact torsion orders
    double s1 = 0, s2 = 0, s_concat = 0;
    bool subadditive = false;  // order_concat <= order1 * order2, exact
};

SubadditivityReport subadditivity_report(const MorphismChain& g1, const MorphismChain& g2);

struct DecayEntry {
    std::size_t t = 0;
    Int torsion_order;
    double entropy = 0.0;
    bool nonincreasing_from_previous = true;
};

/// Entropy profile annotated with the predicted monotonicity. Violations
/// are data, not errors: whether a step is exact in degree 0 cannot be
/// read off the matrices.
std::vector<DecayEntry> decay_report(const MorphismChain& chain);

double entropy_of_order(const Int& order);  // ln, display helper

}  // namespace ethicdual
