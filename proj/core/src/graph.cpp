#include "ethicdual/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace ethicdual {

Graph::Graph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ == 0) throw std::invalid_argument("graph needs at least one vertex");
    degree_.assign(n_, 0);
    adj_.assign(n_, std::vector<std::size_t>(n_, 0));
    for (const auto& [u, v] : edges_) {
        if (u >= n_ || v >= n_) throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("loops are rejected");
        ++degree_[u];
        ++degree_[v];
        ++adj_[u][v];
        ++adj_[v][u];
    }
}

bool Graph::connected() const {
    std::vector<char> seen(n_, 0);
    std::queue<std::size_t> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        std::size_t v = q.front();
        q.pop();
        for (std::size_t u = 0; u < n_; ++u)
            if (adj_[v][u] > 0 && !seen[u]) {
                seen[u] = 1;
                ++count;
                q.push(u);
            }
    }
    return count == n_;
}

Int Divisor::degree() const {
    Int s = 0;
    for (const Int& v : values) s += v;
    return s;
}

bool Divisor::effective() const {
    for (const Int& v : values)
        if (v < 0) return false;
    return true;
}

IntMatrix boundary_matrix(const Graph& g) {
    IntMatrix b(g.vertex_count(), g.edge_count());
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
        const auto& [u, v] = g.edges()[e];
        b(u, e) = -1;
        b(v, e) = 1;
    }
    return b;
}

IntMatrix laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    IntMatrix l(n, n);
    for (std::size_t v = 0; v < n; ++v) {
        l(v, v) = static_cast<long>(g.degree(v));
        for (std::size_t u = 0; u < n; ++u)
            if (u != v) l(v, u) = -static_cast<long>(g.multiplicity(v, u));
    }
    return l;
}

namespace {

void require_connected(const Graph& g, const char* op) {
    if (!g.connected()) throw std::invalid_argument(std::string(op) + ": graph must be connected");
}

std::vector<std::size_t> bfs_distances(const Graph& g, std::size_t q) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> dist(n, n);  // n = unreachable sentinel
    std::queue<std::size_t> bfs;
    dist[q] = 0;
    bfs.push(q);
    while (!bfs.empty()) {
        std::size_t v = bfs.front();
        bfs.pop();
        for (std::size_t u = 0; u < n; ++u)
            if (g.multiplicity(v, u) > 0 && dist[u] == n) {
                dist[u] = dist[v] + 1;
                bfs.push(u);
            }
    }
    return dist;
}

}  // namespace

FgAbelianGroup jacobian(const Graph& g) {
    require_connected(g, "jacobian");
    FgAbelianGroup jac = cokernel(laplacian(g));
    return ext1_to_Z(jac);  // tors coker(L); the free Z of degree is stripped
}

Int spanning_tree_count(const Graph& g) {
    require_connected(g, "spanning_tree_count");
    Int order = jacobian(g).torsion_order();
    // cross-check against a reduced-Laplacian cofactor
    const std::size_t n = g.vertex_count();
    if (n > 1) {
        std::vector<std::size_t> keep;
        for (std::size_t i = 1; i < n; ++i) keep.push_back(i);
        Int cofactor = laplacian(g).submatrix(keep, keep).determinant();
        if (cofactor != order)
            throw std::logic_error("spanning_tree_count: SNF and cofactor disagree");
    }
    return order;
}

Divisor canonical_divisor(const Graph& g) {
    Divisor k;
    k.values.resize(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        k.values[v] = static_cast<long>(g.degree(v)) - 2;
    return k;
}

bool is_q_reduced(const Graph& g, const Divisor& d, std::size_t q) {
    const std::size_t n = g.vertex_count();
    for (std::size_t v = 0; v < n; ++v)
        if (v != q && d.values[v] < 0) return false;
    // burning test: the fire from q must consume every vertex
    std::vector<char> burned(n, 0);
    burned[q] = 1;
    std::size_t nburned = 1;
    bool progress = true;
    while (progress) {
        progress = false;
        for (std::size_t v = 0; v < n; ++v) {
            if (burned[v]) continue;
            std::size_t threat = 0;
            for (std::size_t u = 0; u < n; ++u)
                if (burned[u]) threat += g.multiplicity(v, u);
            if (d.values[v] < static_cast<long>(threat)) {
                burned[v] = 1;
                ++nburned;
                progress = true;
            }
        }
    }
    return nburned == n;
}

Divisor dhar_reduce(const Graph& g, const Divisor& d, std::size_t q) {
    require_connected(g, "dhar_reduce");
    const std::size_t n = g.vertex_count();
    if (q >= n) throw std::invalid_argument("dhar_reduce: base vertex out of range");
    if (d.values.size() != n) throw std::invalid_argument("dhar_reduce: divisor size mismatch");
    IntVec D = d.values;

    // Phase 1: lift every non-q vertex to a nonnegative value by unfiring
    // distance shells, outermost first. Unfiring T_k = {dist >= k} feeds
    // shell k from shell k-1 and leaves deeper shells untouched.
    std::vector<std::size_t> dist = bfs_distances(g, q);
    std::size_t maxdist = *std::max_element(dist.begin(), dist.end());
    for (std::size_t k = maxdist; k >= 1; --k) {
        Int rounds = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (dist[v] != k || D[v] >= 0) continue;
            Int inflow = 0;  // edges from v to shells < k
            for (std::size_t u = 0; u < n; ++u)
                if (dist[u] < k) inflow += static_cast<long>(g.multiplicity(v, u));
            Int need;  // ceil(-D[v] / inflow)
            mpz_cdiv_q(need.get_mpz_t(), Int(-D[v]).get_mpz_t(), inflow.get_mpz_t());
            rounds = std::max(rounds, need);
        }
        if (rounds == 0) continue;
        for (std::size_t v = 0; v < n; ++v) {
            Int cross = 0;
            for (std::size_t u = 0; u < n; ++u)
                if ((dist[v] >= k) != (dist[u] >= k)) cross += static_cast<long>(g.multiplicity(v, u));
            D[v] += (dist[v] >= k ? rounds : -rounds) * cross;
        }
    }

    // Phase 2: Dhar burning. Fire the maximal unburnable set until the
    // fire from q consumes the whole graph.
    for (;;) {
        std::vector<char> burned(n, 0);
        burned[q] = 1;
        std::size_t nburned = 1;
        bool progress = true;
        while (progress) {
            progress = false;
            for (std::size_t v = 0; v < n; ++v) {
                if (burned[v]) continue;
                std::size_t threat = 0;
                for (std::size_t u = 0; u < n; ++u)
                    if (burned[u]) threat += g.multiplicity(v, u);
                if (D[v] < static_cast<long>(threat)) {
                    burned[v] = 1;
                    ++nburned;
                    progress = true;
                }
            }
        }
        if (nburned == n) break;
        for (std::size_t v = 0; v < n; ++v) {
            Int cross = 0;
            for (std::size_t u = 0; u < n; ++u)
                if (burned[v] != burned[u]) cross += static_cast<long>(g.multiplicity(v, u));
            D[v] += burned[v] ? cross : -cross;
        }
    }
    return Divisor{std::move(D)};
}

namespace {

// enumerate effective divisors of the given degree; stop early when the
// visitor returns false
bool for_each_effective(std::size_t n, long degree,
                        const std::function<bool(const IntVec&)>& visit) {
    IntVec e(n, 0);
    std::function<bool(std::size_t, long)> rec = [&](std::size_t v, long left) -> bool {
        if (v + 1 == n) {
            e[v] = left;
            bool keep = visit(e);
            e[v] = 0;
            return keep;
        }
        for (long c = 0; c <= left; ++c) {
            e[v] = c;
            if (!rec(v + 1, left - c)) {
                e[v] = 0;
                return false;
            }
        }
        e[v] = 0;
        return true;
    };
    return rec(0, degree);
}

}  // namespace

long baker_norine_rank(const Graph& g, const Divisor& d, long degree_cap) {
    require_connected(g, "baker_norine_rank");
    const std::size_t q = 0;  // base vertex; rank is q-independent
    Divisor base = dhar_reduce(g, d, q);
    if (base.values[q] < 0) return -1;
    long deg = static_cast<long>(base.degree().get_si());
    long kmax = std::min(deg, degree_cap);
    for (long k = 1; k <= kmax + 1; ++k) {
        if (k > degree_cap)
            throw std::runtime_error("baker_norine_rank: degree cap exceeded");
        bool all_effective = for_each_effective(g.vertex_count(), k, [&](const IntVec& e) {
            Divisor trial{sub(base.values, e)};
            return dhar_reduce(g, trial, q).values[q] >= 0;
        });
        if (!all_effective) return k - 1;
    }
    return kmax;  // r(D) <= deg(D), so the loop always exits above
}

RiemannRochReport riemann_roch_check(const Graph& g, const Divisor& d, long degree_cap) {
    require_connected(g, "riemann_roch_check");
    Divisor k = canonical_divisor(g);
    Divisor k_minus_d{sub(k.values, d.values)};
    RiemannRochReport r;
    r.lhs = baker_norine_rank(g, d, degree_cap) - baker_norine_rank(g, k_minus_d, degree_cap);
    r.rhs = static_cast<long>(d.degree().get_si()) + 1 - g.genus();
    r.holds = (r.lhs == r.rhs);
    return r;
}

TwoTermComplex divisor_complex(const Graph& g) {
    return TwoTermComplex{laplacian(g), "Prin", "Div"};
}

}  // namespace ethicdual
