#pragma once

// Formal deformations (mu_t, R_t, d_t) of a Reynolds LieDer pair truncated at
// order N, their order-by-order equations, the infinitesimal 2-cocycle, and
// transport along formal isomorphisms psi_t = Id + sum_i psi_i t^i.

#include "reylie/cochain.hpp"

#include <optional>
#include <vector>

namespace reylie {

struct DeformationTruncation {
    ReynoldsLieDerPair base;
    int order = 1;
    /// mu[i-1] = mu_i, a degree-2 cochain Lambda^2 L -> L.
    std::vector<Cochain> mu;
    std::vector<Matrix> rs;
    std::vector<Matrix> ds;

    /// mu_k, R_k, d_k with k = 0 the base structures and zero above the order.
    Cochain mu_at(int k) const;
    Matrix r_at(int k) const;
    Matrix d_at(int k) const;
};

/// Zero higher terms up to `order`.
DeformationTruncation trivial_truncation(const ReynoldsLieDerPair &base, int order);
void check_shapes(const DeformationTruncation &t);

struct EquivalenceSeries {
    int order = 1;
    /// psis[i-1] = psi_i; psi_0 = Id.
    std::vector<Matrix> psis;

    Matrix psi_at(int k, std::size_t n) const;
};

/// The order-N inverse of psi_t under composition.
EquivalenceSeries inverse_series(const EquivalenceSeries &e, std::size_t n);

/// Coefficient of t^m, 1 <= m <= N, in the four deformation equations, each
/// written as LHS - RHS:
///   "jacobi"       sum_{i+j=m} mu_i(mu_j(a,b),c) + cyclic
///   "reynolds"     sum mu_i(R_j a, R_k b)
///                    - sum R_i(mu_j(R_k a, b) + mu_j(a, R_k b))
///                    + sum_{i+j+k+p=m} R_i mu_j(R_k a, R_p b)
///   "derivation"   sum_{i+j=m} d_i mu_j(a,b) - mu_j(d_i a,b) - mu_j(a,d_i b)
///   "commutation"  sum_{i+j=m} R_i d_j - d_i R_j
/// Labels carry the order, e.g. "order 1: jacobi". Refuses an invalid base.
Verdict validate_truncation(const DeformationTruncation &t);

/// (mu_1, R_1, d_1) packed as ((mu_1, R_1), (d_1, 0)) in degree 2 of the
/// RLieDer complex with adjoint coefficients.
QuadCochain infinitesimal(const DeformationTruncation &t);

/// Order-1 truncation from a degree-2 element ((mu_1, R_1), (d_1, 0));
/// refuses a nonzero degree-0 slot.
DeformationTruncation order1_truncation(const ReynoldsLieDerPair &base, const QuadCochain &c);

/// D(mu_1, R_1, d_1) = 0 for the RLieDer differential D, per component:
///   "delta_CE(mu1)", "-delta_R(R1) - phi(mu1)", "delta_CE(d1) + Delta(mu1)",
///   "Delta(R1) - phi(d1)".
/// Refuses an invalid base.
Verdict infinitesimal_is_cocycle(const DeformationTruncation &t);

/// psi_1 as a degree-1 element (psi_1, 0) of the RLieDer complex.
QuadCochain psi_cochain(const Matrix &psi1, int dim_l);

/// The deformation mu'_t = psi_t^{-1} mu_t(psi_t, psi_t), R'_t = psi_t^{-1}
/// R_t psi_t, d'_t = psi_t^{-1} d_t psi_t, so that psi_t is a morphism from
/// the result to t. Post-checks that the order-1 change is D(psi_1, 0).
DeformationTruncation transport_equivalence(const DeformationTruncation &t, const EquivalenceSeries &e);

struct RigidityReport {
    CohomologyReport h2;
    bool rigid = false;
    /// Set when an infinitesimal was supplied.
    std::optional<bool> infinitesimal_is_cocycle;
    /// Whether the infinitesimal is a coboundary in the full complex.
    std::optional<bool> class_trivial;
    /// psi_1 with D(psi_1, 0) equal to the infinitesimal.
    std::optional<Matrix> witness;
    /// Transporting along Id - psi_1 t kills the order-1 terms.
    bool witness_verified = false;
    std::string note;
};

/// H^2 of the RLieDer complex with adjoint coefficients and, for a supplied
/// truncation, the psi_1 trivializing its infinitesimal when one exists.
RigidityReport rigidity_probe(const ReynoldsLieDerPair &p,
                              const std::optional<DeformationTruncation> &t = std::nullopt);

} // namespace reylie
