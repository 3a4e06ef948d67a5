#pragma once

// Semidirect products and matched pairs (bicrossed products) of Reynolds
// Lie algebras. Basis order of every product: first factor, then second.

#include "reylie/rep.hpp"

#include <optional>

namespace reylie {

/// L (+) V with [x+u, y+v] = [x,y] + rho(x)v - rho(y)u. No checks.
LieAlgebra semidirect_algebra(const Representation &rep);

/// (L (+) V, R (+) R_V). Refuses when check_reynolds_rep fails; post-checks
/// is_reynolds on the product.
ReynoldsLieAlgebra semidirect_product(const ReynoldsRep &rep);

/// rho_L: L acting on G, rho_G: G acting on L.
struct MatchedPairData {
    LieAlgebra l;
    LieAlgebra g;
    Representation rho_l; // algebra l, dim_v = g.dim()
    Representation rho_g; // algebra g, dim_v = l.dim()
};

/// Both compatibility identities, identities "matched-pair-L" (on x, a<b)
/// and "matched-pair-G" (on a, x<y). Throws PreconditionFailure when either
/// action is not a representation.
Verdict check_matched_pair(const MatchedPairData &m);

/// L (+) G with [x+a, y+b] = [x,y] + rho_G(a)y - rho_G(b)x + [a,b] + rho_L(x)b - rho_L(y)a.
LieAlgebra bowtie_algebra(const MatchedPairData &m);

struct BowtieResult {
    ReynoldsLieAlgebra product;
    /// d_L + d_G when both derivations are supplied.
    std::optional<LinearOp> d;
    /// is_reylieder on (product, d). This can fail even when every
    /// hypothesis holds: d_L + d_G need not be a derivation of L (+) G.
    Verdict lieder;
};

/// Refuses unless the data is a matched pair, both R's are Reynolds, and
/// (G; rho_L, R_G), (L; rho_G, R_L) are Reynolds representations.
BowtieResult bowtie(const MatchedPairData &m, const LinearOp &r_l, const LinearOp &r_g,
                    const std::optional<LinearOp> &d_l = std::nullopt,
                    const std::optional<LinearOp> &d_g = std::nullopt);

} // namespace reylie
