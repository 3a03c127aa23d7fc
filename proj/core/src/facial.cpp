#include "ethicdual/facial.hpp"

#include <stdexcept>

namespace ethicdual {

namespace {

// restriction of A to the columns outside the zero set
RatMatrix restrict_cols(const RatMatrix& a, const std::set<std::size_t>& zero_set,
                        std::vector<std::size_t>& kept) {
    kept.clear();
    for (std::size_t j = 0; j < a.cols(); ++j)
        if (!zero_set.count(j)) kept.push_back(j);
    RatMatrix out(a.rows(), kept.size());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < kept.size(); ++k) out(i, k) = a(i, kept[k]);
    return out;
}

}  // namespace

MinimalFaceOutcome minimal_face(const RatMatrix& a, const RatVec& b) {
    const std::size_t n = a.cols();
    MinimalFaceOutcome out;
    FaceDescriptor face;

    {
        LinearProgram feas = LinearProgram::standard(RatVec(n, Rat(0)), a, b);
        LpOutcome r = lp_solve(feas);
        if (r.status == LpStatus::infeasible) {
            out.infeasibility = r.infeasibility_certificate;
            return out;
        }
    }

    // Each enlarging pass adds at least one coordinate to the zero set,
    // so at most n of them; iterations counts only those.
    for (std::size_t pass = 0; pass < n + 1; ++pass) {
        std::vector<std::size_t> kept;
        RatMatrix ar = restrict_cols(a, face.zero_set, kept);
        std::set<std::size_t> forced = forced_zero_coordinates(ar, b);
        if (forced.empty()) break;
        ++out.iterations;
        RatVec y(n, Rat(0));
        for (std::size_t k : forced) y[kept[k]] = 1;
        face.exposing_chain.push_back(std::move(y));
        for (std::size_t k : forced) face.zero_set.insert(kept[k]);
    }
    out.face = std::move(face);
    return out;
}

ReducedDualResult reduced_dual_solve(const RatMatrix& a, const RatVec& b, const RatVec& c,
                                     const FaceDescriptor& face) {
    std::vector<std::size_t> kept;
    RatMatrix ar = restrict_cols(a, face.zero_set, kept);
    RatVec cr(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) cr[k] = c[kept[k]];

    LpOutcome lp = lp_solve(LinearProgram::standard(cr, ar, b));
    ReducedDualResult r;
    if (lp.status == LpStatus::unbounded) {
        r.bounded = false;
        return r;
    }
    if (lp.status != LpStatus::optimal)
        throw std::invalid_argument("reduced_dual_solve: face does not meet the feasible set");
    r.bounded = true;
    r.primal.assign(a.cols(), Rat(0));
    for (std::size_t k = 0; k < kept.size(); ++k) r.primal[kept[k]] = (*lp.primal)[k];
    r.primal_value = lp.objective_value;
    // dual of min c.x, Ax=b, x>=0 is max b.y, A^T y <= c; the conic
    // convention maximizes -<b,lambda> with c + A^T lambda >= 0
    r.lambda.resize(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) r.lambda[i] = -(*lp.dual)[i];
    r.dual_value = -dot(b, r.lambda);
    return r;
}

std::string to_string(CertificateStatus s) {
    switch (s) {
        case CertificateStatus::complete: return "complete";
        case CertificateStatus::integer_obstruction: return "integer_obstruction";
        case CertificateStatus::integer_infeasible: return "integer_infeasible";
        case CertificateStatus::real_infeasible: return "real_infeasible";
        case CertificateStatus::conic_infeasible: return "conic_infeasible";
        case CertificateStatus::unbounded: return "unbounded";
    }
    return "unknown";
}

UnifiedCertificate unified_certificate(const UnifiedProblem& p) {
    UnifiedCertificate cert;
    cert.primal_value = 0;
    cert.dual_value = 0;

    if (p.integer) {
        const auto& ic = *p.integer;
        cert.integer_part = torsion_certificate(ic.a);
        if (!cert.integer_part->torsion_free) {
            cert.status = CertificateStatus::integer_obstruction;
            cert.failing_component = "integer";
            return cert;
        }
        auto lambda = adjoint_solve(ic.a, ic.c);
        if (!lambda) {  // c outside the row space: objective unbounded on the fiber
            cert.status = CertificateStatus::unbounded;
            cert.failing_component = "integer";
            return cert;
        }
        cert.integer_part->adjoint_multiplier = lambda;
        cert.lambda_Z = std::move(lambda);
        auto sol = solve_integer(ic.a, ic.b);
        if (!sol) {
            cert.status = CertificateStatus::integer_infeasible;
            cert.failing_component = "integer";
            return cert;
        }
        cert.primal_Z = sol->particular;
        Int pv = 0;
        for (std::size_t j = 0; j < ic.c.size(); ++j) pv += ic.c[j] * sol->particular[j];
        Int dv = 0;
        for (std::size_t i = 0; i < ic.b.size(); ++i) dv -= ic.b[i] * (*cert.lambda_Z)[i];
        cert.primal_value += pv;
        cert.dual_value += dv;
    }

    if (p.real) {
        const auto& rc = *p.real;
        RatVec neg_c(rc.c.size());
        for (std::size_t j = 0; j < rc.c.size(); ++j) neg_c[j] = -rc.c[j];
        auto lambda = solve_rational(rc.a.transpose(), neg_c);
        if (!lambda) {
            cert.status = CertificateStatus::unbounded;
            cert.failing_component = "real";
            return cert;
        }
        auto x = solve_rational(rc.a, rc.b);
        if (!x) {
            cert.status = CertificateStatus::real_infeasible;
            cert.failing_component = "real";
            return cert;
        }
        cert.lambda_R = *lambda;
        cert.primal_R = *x;
        cert.primal_value += dot(rc.c, *x);
        cert.dual_value += -dot(rc.b, *lambda);
    }

    if (p.conic) {
        const auto& kc = *p.conic;
        MinimalFaceOutcome mf = minimal_face(kc.a, kc.b);
        if (!mf.face) {
            cert.status = CertificateStatus::conic_infeasible;
            cert.failing_component = "conic";
            cert.conic_infeasibility = mf.infeasibility;
            return cert;
        }
        ReducedDualResult rd = reduced_dual_solve(kc.a, kc.b, kc.c, *mf.face);
        if (!rd.bounded) {
            cert.status = CertificateStatus::unbounded;
            cert.failing_component = "conic";
            cert.face = std::move(mf.face);
            return cert;
        }
        cert.face = std::move(mf.face);
        cert.slater_on_face = true;
        cert.lambda_K = rd.lambda;
        cert.primal_K = rd.primal;
        cert.primal_value += rd.primal_value;
        cert.dual_value += rd.dual_value;
    }

    cert.status = CertificateStatus::complete;
    if (cert.primal_value != cert.dual_value)
        throw std::logic_error("unified_certificate: primal/dual mismatch after aggregation");
    return cert;
}

bool UnifiedCertificate::verify(const UnifiedProblem& p) const {
    if (status != CertificateStatus::complete) {
        // negative certificates verify through their own evidence
        if (status == CertificateStatus::integer_obstruction)
            return integer_part && !integer_part->offending_factors.empty();
        if (status == CertificateStatus::conic_infeasible && p.conic && conic_infeasibility) {
            const RatVec& y = *conic_infeasibility;
            RatVec ya = y * p.conic->a;
            for (const Rat& v : ya)
                if (v < 0) return false;
            return dot(y, p.conic->b) < 0;
        }
        return true;  // infeasible/unbounded labels carry no multiplier to check
    }

    Rat pv(0), dv(0);
    if (p.integer) {
        const auto& ic = *p.integer;
        if (!lambda_Z || !primal_Z) return false;
        if (ic.a * *primal_Z != ic.b) return false;
        IntVec adj = ic.a.transpose() * *lambda_Z;
        for (std::size_t j = 0; j < ic.c.size(); ++j)
            if (adj[j] != -ic.c[j]) return false;
        for (std::size_t j = 0; j < ic.c.size(); ++j) pv += Rat(ic.c[j]) * Rat((*primal_Z)[j]);
        for (std::size_t i = 0; i < ic.b.size(); ++i) dv -= Rat(ic.b[i]) * Rat((*lambda_Z)[i]);
    }
    if (p.real) {
        const auto& rc = *p.real;
        if (!lambda_R || !primal_R) return false;
        RatVec ax = rc.a * *primal_R;
        for (std::size_t i = 0; i < rc.b.size(); ++i)
            if (ax[i] != rc.b[i]) return false;
        RatVec adj = rc.a.transpose() * *lambda_R;
        for (std::size_t j = 0; j < rc.c.size(); ++j)
            if (adj[j] != -rc.c[j]) return false;
        pv += dot(rc.c, *primal_R);
        dv += -dot(rc.b, *lambda_R);
    }
    if (p.conic) {
        const auto& kc = *p.conic;
        if (!lambda_K || !primal_K || !face) return false;
        const RatVec& x = *primal_K;
        RatVec ax = kc.a * x;
        for (std::size_t i = 0; i < kc.b.size(); ++i)
            if (ax[i] != kc.b[i]) return false;
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (x[j] < 0) return false;
            if (face->zero_set.count(j) && x[j] != 0) return false;
        }
        // dual slack in the polar of the face: >= 0 off the zero set
        RatVec slack = kc.a.transpose() * *lambda_K;
        for (std::size_t j = 0; j < kc.c.size(); ++j) {
            if (face->zero_set.count(j)) continue;
            if (kc.c[j] + slack[j] < 0) return false;
        }
        // exposing vectors vanish on the feasibility witness
        for (const RatVec& y : face->exposing_chain) {
            for (const Rat& v : y)
                if (v < 0) return false;
            if (dot(y, x) != 0) return false;
        }
        pv += dot(kc.c, x);
        dv += -dot(kc.b, *lambda_K);
    }
    return pv == dv && pv == primal_value && dv == dual_value;
}

}  // namespace ethicdual
