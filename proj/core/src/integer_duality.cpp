#include "ethicdual/integer_duality.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace ethicdual {

IntegerCertificate torsion_certificate(const IntMatrix& a) {
    IntegerCertificate cert;
    cert.snf = smith_normal_form(a);
    for (const Int& d : cert.snf.invariant_factors)
        if (d > 1) cert.offending_factors.push_back(d);
    cert.torsion_free = cert.offending_factors.empty();
    return cert;
}

std::optional<IntVec> adjoint_solve(const IntMatrix& a, const IntVec& c) {
    if (c.size() != a.cols()) throw std::invalid_argument("adjoint_solve: dimension mismatch");
    auto sol = solve_integer(a.transpose(), negate(c));
    if (!sol) return std::nullopt;
    return sol->particular;
}

namespace {

void require_nonneg(const IntMatrix& a, const IntVec& b, const char* op) {
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            if (a(i, j) < 0) throw std::invalid_argument(std::string(op) + ": matrix must be nonnegative");
    for (const Int& v : b)
        if (v < 0) throw std::invalid_argument(std::string(op) + ": rhs must be nonnegative");
}

bool leq(const IntVec& a, const IntVec& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

IntVec add(const IntVec& a, const IntVec& b) {
    IntVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
    return out;
}

}  // namespace

std::vector<Exponent> farkas_shift_lattice(const IntMatrix& a, const IntVec& b,
                                           unsigned long cap) {
    require_nonneg(a, b, "farkas_shift_lattice");
    Int size = 1;
    for (const Int& v : b) size *= v + 1;
    if (size > cap) throw std::runtime_error("farkas_shift_lattice: cap exceeded");
    std::vector<Exponent> shifts;
    shifts.reserve(size.get_ui());
    Exponent cur(b.size(), 0);
    for (;;) {
        shifts.push_back(cur);
        std::size_t k = 0;
        while (k < b.size() && cur[k] == b[k]) {
            cur[k] = 0;
            ++k;
        }
        if (k == b.size()) break;
        ++cur[k];
    }
    return shifts;
}

std::optional<IntVec> brute_force_feasibility(const IntMatrix& a, const IntVec& b,
                                              unsigned long cap) {
    require_nonneg(a, b, "brute_force_feasibility");
    if (b.size() != a.rows()) throw std::invalid_argument("brute_force_feasibility: dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols();
    IntVec bound(n, 0);
    Int box = 1;
    for (std::size_t j = 0; j < n; ++j) {
        bool has_positive = false;
        for (std::size_t i = 0; i < m; ++i) {
            if (a(i, j) <= 0) continue;
            Int cand = b[i] / a(i, j);
            if (!has_positive || cand < bound[j]) bound[j] = cand;
            has_positive = true;
        }
        if (!has_positive) bound[j] = 0;  // zero column never helps
        box *= bound[j] + 1;
    }
    if (box > cap) throw std::runtime_error("brute_force_feasibility: box cap exceeded");

    IntVec x(n, 0);
    std::function<std::optional<IntVec>(std::size_t, IntVec)> rec =
        [&](std::size_t j, IntVec residual) -> std::optional<IntVec> {
        if (j == n) return is_zero(residual) ? std::optional<IntVec>(x) : std::nullopt;
        for (Int v = 0; v <= bound[j]; ++v) {
            IntVec r = residual;
            bool ok = true;
            for (std::size_t i = 0; i < m; ++i) {
                r[i] -= v * a(i, j);
                if (r[i] < 0) ok = false;
            }
            x[j] = v;
            if (ok)
                if (auto hit = rec(j + 1, r)) return hit;
        }
        x[j] = 0;
        return std::nullopt;
    };
    return rec(0, b);
}

FarkasOutcome discrete_farkas(const IntMatrix& a, const IntVec& b, unsigned long cap) {
    require_nonneg(a, b, "discrete_farkas");
    if (b.size() != a.rows()) throw std::invalid_argument("discrete_farkas: dimension mismatch");
    const std::size_t m = a.rows(), n = a.cols();

    std::vector<Exponent> monomials = farkas_shift_lattice(a, b, cap);  // box <= b
    std::map<Exponent, std::size_t> index;
    for (std::size_t k = 0; k < monomials.size(); ++k) index[monomials[k]] = k;

    // shifted relations z^alpha (z^{A_j} - 1) that stay inside the box;
    // telescoping paths for any witness live entirely in here
    struct Gen {
        std::size_t tail, head, col;
    };
    std::vector<Gen> gens;
    for (std::size_t k = 0; k < monomials.size(); ++k)
        for (std::size_t j = 0; j < n; ++j) {
            IntVec col = a.col(j);
            if (is_zero(col)) continue;
            IntVec head = add(monomials[k], col);
            if (!leq(head, b)) continue;
            gens.push_back({k, index.at(head), j});
        }

    // membership of z^b - 1 in the truncated cone, as an exact LP
    RatMatrix g(monomials.size(), gens.size());
    for (std::size_t c = 0; c < gens.size(); ++c) {
        g(gens[c].head, c) += 1;
        g(gens[c].tail, c) -= 1;
    }
    RatVec u(monomials.size(), Rat(0));
    u[index.at(IntVec(m, 0))] -= 1;
    u[index.at(b)] += 1;

    LpOutcome lp = lp_solve(LinearProgram::standard(RatVec(gens.size(), Rat(0)), g, u));

    FarkasOutcome out;
    if (lp.status == LpStatus::optimal) {
        out.feasible = true;
        // The representation is a unit flow from z^0 to z^b on the shift
        // lattice; any support path gives the witness by counting columns.
        const RatVec& mu = *lp.primal;
        std::vector<std::vector<std::size_t>> outgoing(monomials.size());
        for (std::size_t c = 0; c < gens.size(); ++c)
            if (mu[c] > 0) outgoing[gens[c].tail].push_back(c);
        const std::size_t target = index.at(b);
        std::vector<std::size_t> path;
        std::function<bool(std::size_t)> dfs = [&](std::size_t node) -> bool {
            if (node == target) return true;
            for (std::size_t c : outgoing[node]) {
                path.push_back(c);
                if (dfs(gens[c].head)) return true;
                path.pop_back();
            }
            return false;
        };
        IntVec x(n, 0);
        if (dfs(index.at(IntVec(m, 0)))) {
            for (std::size_t c : path) x[gens[c].col] += 1;
        }
        if (a * x == b) {
            out.witness = std::move(x);
        } else {
            // should be unreachable with exact arithmetic; the oracle is
            // the documented fallback
            auto oracle = brute_force_feasibility(a, b, cap);
            if (!oracle) throw std::logic_error("discrete_farkas: LP/oracle disagreement");
            out.witness = *oracle;
        }
    } else if (lp.status == LpStatus::infeasible) {
        out.feasible = false;
        const RatVec& y = *lp.infeasibility_certificate;
        Rat ymax = y.empty() ? Rat(0) : y[0];
        for (const Rat& v : y) ymax = std::max(ymax, v);
        std::map<Exponent, Rat> phi;
        for (std::size_t k = 0; k < monomials.size(); ++k) phi[monomials[k]] = y[k];
        // extend to heads above the box so the functional is nonnegative
        // on every shifted relation, not just the in-box ones
        for (std::size_t k = 0; k < monomials.size(); ++k)
            for (std::size_t j = 0; j < n; ++j) {
                IntVec head = add(monomials[k], a.col(j));
                if (!phi.count(head)) phi[head] = ymax;
            }
        // verify by direct evaluation before returning
        for (std::size_t k = 0; k < monomials.size(); ++k)
            for (std::size_t j = 0; j < n; ++j) {
                IntVec head = add(monomials[k], a.col(j));
                if (phi.at(head) - phi.at(monomials[k]) < 0)
                    throw std::logic_error("discrete_farkas: separator fails on a generator");
            }
        if (phi.at(b) - phi.at(IntVec(m, 0)) >= 0)
            throw std::logic_error("discrete_farkas: separator fails on the target");
        out.separator = std::move(phi);
    } else {
        throw std::logic_error("discrete_farkas: membership LP cannot be unbounded");
    }
    return out;
}

}  // namespace ethicdual
