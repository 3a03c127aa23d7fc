#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "ethicdual/abelian.hpp"

namespace ethicdual {

/// Oriented multigraph without loops. Edge (u, v) fixes the sign
/// convention of the boundary matrix: -1 at u, +1 at v.
class Graph {
public:
    Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

    std::size_t vertex_count() const { return n_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }

    std::size_t degree(std::size_t v) const { return degree_[v]; }
    /// Edge multiplicity between u and v (orientation ignored).
    std::size_t multiplicity(std::size_t u, std::size_t v) const { return adj_[u][v]; }
    bool connected() const;
    /// Genus (cyclomatic number) g = |E| - |V| + 1; meaningful when connected.
    long genus() const { return static_cast<long>(edges_.size()) - static_cast<long>(n_) + 1; }

private:
    std::size_t n_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
    std::vector<std::size_t> degree_;
    std::vector<std::vector<std::size_t>> adj_;  // multiplicity matrix
};

struct Divisor {
    IntVec values;  // indexed by vertex

    Int degree() const;
    bool effective() const;
    bool operator==(const Divisor& rhs) const = default;
};

IntMatrix boundary_matrix(const Graph& g);
IntMatrix laplacian(const Graph& g);

/// Sandpile / critical group: torsion of coker(L). Requires connectivity.
FgAbelianGroup jacobian(const Graph& g);

/// tau(G) = |tors coker L|, cross-checked internally against a reduced
/// Laplacian cofactor determinant.
Int spanning_tree_count(const Graph& g);

/// K(v) = deg(v) - 2; deg K = 2g - 2.
Divisor canonical_divisor(const Graph& g);

/// The unique q-reduced divisor linearly equivalent to d (equivalence
/// modulo im(L)), certified by the burning test.
Divisor dhar_reduce(const Graph& g, const Divisor& d, std::size_t q);

/// True iff no nonempty subset of V \ {q} can fire without going negative
/// and all non-q entries are nonnegative.
bool is_q_reduced(const Graph& g, const Divisor& d, std::size_t q);

/// Baker-Norine rank; -1 when d has no effective representative.
/// Enumeration over effective divisors of growing degree, capped.
long baker_norine_rank(const Graph& g, const Divisor& d, long degree_cap = 32);

struct RiemannRochReport {
    long lhs = 0;  // r(D) - r(K - D)
    long rhs = 0;  // deg D + 1 - g
    bool holds = false;
};

RiemannRochReport riemann_roch_check(const Graph& g, const Divisor& d, long degree_cap = 32);

/// The divisor complex of the graph: two-term presentation with d = L.
TwoTermComplex divisor_complex(const Graph& g);

}  // namespace ethicdual
