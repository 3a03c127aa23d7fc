#include "ethicdual/ethic.hpp"

#include <cmath>
#include <stdexcept>

namespace ethicdual {

MorphismChain::MorphismChain(std::vector<IntMatrix> s) : steps(std::move(s)) {
    for (std::size_t t = 0; t + 1 < steps.size(); ++t)
        if (steps[t + 1].cols() != steps[t].rows())
            throw std::invalid_argument("morphism chain: steps are not composable");
    for (const IntMatrix& m : steps)
        if (m.empty()) throw std::invalid_argument("morphism chain: empty step");
}

IntMatrix MorphismChain::compose_prefix(std::size_t t) const {
    if (t < 1 || t > steps.size())
        throw std::out_of_range("morphism chain: prefix index out of range");
    IntMatrix f = steps[0];
    for (std::size_t i = 1; i < t; ++i) f = steps[i] * f;
    return f;
}

double entropy_of_order(const Int& order) {
    // ln of an arbitrary-precision positive integer via mantissa/exponent
    signed long exp2;
    double mant = mpz_get_d_2exp(&exp2, order.get_mpz_t());
    return std::log(mant) + static_cast<double>(exp2) * std::log(2.0);
}

FgAbelianGroup ethic_memory(const MorphismChain& chain, std::size_t t) {
    return ext1_to_Z(cokernel(chain.compose_prefix(t)));
}

MemoryReport ethic_entropy_profile(const MorphismChain& chain) {
    if (chain.length() == 0) throw std::invalid_argument("ethic_entropy_profile: empty chain");
    MemoryReport report;
    IntMatrix f = chain.steps[0];
    for (std::size_t t = 1; t <= chain.length(); ++t) {
        if (t > 1) f = chain.steps[t - 1] * f;
        MemoryEntry e;
        e.t = t;
        e.memory = ext1_to_Z(cokernel(f));
        e.torsion_order = e.memory.torsion_order();
        e.entropy = entropy_of_order(e.torsion_order);
        report.per_time.push_back(std::move(e));
    }
    return report;
}

ReversibilityReport reversibility_check(const IntMatrix& f) {
    if (!f.is_square()) throw std::invalid_argument("reversibility_check: matrix must be square");
    ReversibilityReport r;
    r.memory = ext1_to_Z(cokernel(f));
    r.reversible = r.memory.is_trivial();
    return r;
}

SubadditivityReport subadditivity_report(const MorphismChain& g1, const MorphismChain& g2) {
    IntMatrix f1 = g1.compose_prefix(g1.length());
    IntMatrix f2 = g2.compose_prefix(g2.length());
    if (f2.cols() != f1.rows())
        throw std::invalid_argument("subadditivity_report: chains are not composable");
    SubadditivityReport r;
    r.order1 = ethic_memory(g1, g1.length()).torsion_order();
    r.order2 = ethic_memory(g2, g2.length()).torsion_order();
    r.order_concat = ext1_to_Z(cokernel(f2 * f1)).torsion_order();
    r.s1 = entropy_of_order(r.order1);
    r.s2 = entropy_of_order(r.order2);
    r.s_concat = entropy_of_order(r.order_concat);
    r.subadditive = r.order_concat <= r.order1 * r.order2;  // compared on exact orders
    return r;
}

std::vector<DecayEntry> decay_report(const MorphismChain& chain) {
    MemoryReport profile = ethic_entropy_profile(chain);
    std::vector<DecayEntry> out;
    for (const MemoryEntry& e : profile.per_time) {
        DecayEntry d;
        d.t = e.t;
        d.torsion_order = e.torsion_order;
        d.entropy = e.entropy;
        d.nonincreasing_from_previous =
            out.empty() ? true : e.torsion_order <= out.back().torsion_order;
        out.push_back(std::move(d));
    }
    return out;
}

}  // namespace ethicdual
