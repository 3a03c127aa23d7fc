#pragma once

#include <string>

#include "ethicdual/integer_duality.hpp"
#include "ethicdual/lp.hpp"

namespace ethicdual {

/// Face F = {x >= 0 : x_i = 0 for i in zero_set} of the nonnegative
/// orthant, together with the exposing vectors that carved it out.
struct FaceDescriptor {
    std::set<std::size_t> zero_set;
    std::vector<RatVec> exposing_chain;  // each nonnegative, vanishing on the feasible set
};

struct MinimalFaceOutcome {
    std::optional<FaceDescriptor> face;       // present when feasible
    std::optional<RatVec> infeasibility;      // Farkas certificate otherwise
    std::size_t iterations = 0;
};

/// Minimal face of the orthant containing {x >= 0 : A x = b}; Slater
/// holds on it. The infeasible branch carries the Farkas certificate.
MinimalFaceOutcome minimal_face(const RatMatrix& a, const RatVec& b);

struct ReducedDualResult {
    bool bounded = false;  // false signals primal unbounded (dual infeasible)
    RatVec lambda;         // c + A^T lambda >= 0 off the zero set, free on it
    Rat dual_value;        // -<b, lambda>
    RatVec primal;         // optimal point on the face
    Rat primal_value;
};

/// Solve the reduced conic dual on the face: maximize -<b, lambda>
/// subject to c + A^T lambda >= 0 on coordinates outside the zero set.
ReducedDualResult reduced_dual_solve(const RatMatrix& a, const RatVec& b, const RatVec& c,
                                     const FaceDescriptor& face);

struct IntegerComponent {
    IntMatrix a;
    IntVec b, c;
};
struct RationalComponent {
    RatMatrix a;
    RatVec b, c;
};

/// Mixed problem: any component may be absent.
struct UnifiedProblem {
    std::optional<IntegerComponent> integer;
    std::optional<RationalComponent> real;
    std::optional<RationalComponent> conic;  // x >= 0 on this block
};

enum class CertificateStatus {
    complete,
    integer_obstruction,  // torsion in coker f_Z
    integer_infeasible,
    real_infeasible,
    conic_infeasible,
    unbounded,
};

std::string to_string(CertificateStatus s);

/// Composite strong-duality certificate. When status == complete,
/// primal_value == dual_value exactly and every multiplier verifies by
/// substitution.
struct UnifiedCertificate {
    CertificateStatus status = CertificateStatus::complete;
    std::string failing_component;  // "", "integer", "real", "conic"

    std::optional<IntegerCertificate> integer_part;
    std::optional<FaceDescriptor> face;
    bool slater_on_face = false;

    std::optional<IntVec> lambda_Z;
    std::optional<RatVec> lambda_R;
    std::optional<RatVec> lambda_K;
    std::optional<IntVec> primal_Z;
    std::optional<RatVec> primal_R;
    std::optional<RatVec> primal_K;
    std::optional<RatVec> conic_infeasibility;

    Rat primal_value;
    Rat dual_value;

    /// Full substitution re-check against the problem data.
    bool verify(const UnifiedProblem& p) const;
};

UnifiedCertificate unified_certificate(const UnifiedProblem& p);

}  // namespace ethicdual
