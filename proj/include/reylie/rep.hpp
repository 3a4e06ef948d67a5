#pragma once

#include "reylie/lie.hpp"

#include <string>
#include <vector>

namespace reylie {

/// (V, rho): one dimV x dimV matrix rho(e_i) per basis vector of L.
struct Representation {
    LieAlgebra algebra;
    int dim_v = 0;
    std::vector<Matrix> action;

    /// rho(x) for an arbitrary x in L.
    Matrix rho(const Vector &x) const;
    Vector act(const Vector &x, const Vector &u) const { return rho(x).apply(u); }
};

struct ReynoldsRep {
    Representation base;
    LinearOp r;   // on L
    LinearOp r_v; // on V
};

struct RLDRep {
    ReynoldsRep base;
    LinearOp d;   // on L
    LinearOp d_v; // on V

    const Representation &rep() const { return base.base; }
    const LieAlgebra &algebra() const { return base.base.algebra; }
    ReynoldsLieDerPair pair() const { return {algebra(), base.r, d}; }
};

/// How the derivation-compatibility axiom of an RLD representation is read.
enum class DerivationCompat {
    /// d_V rho(x) u = rho(dx) u + rho(x) d_V u
    Consistent,
    /// d_V rho(x) u = rho(dx) u + rho(x) R_V u - rho(Rx) R_V u (literal reading)
    Literal,
};

Representation trivial_rep(const LieAlgebra &l, int dim_v);
Representation adjoint_action(const LieAlgebra &l);

/// Throws ContractViolation when the matrices do not fit (L, V).
void check_shapes(const Representation &r);
void check_shapes(const ReynoldsRep &r);
void check_shapes(const RLDRep &r);

/// Residual rho([ei,ej]) - [rho(ei), rho(ej)], one violation per pair i<j and
/// V-basis column; identity "representation".
Verdict check_rep(const Representation &r);

/// Residual of rho(Rx)R_V u - R_V(rho(Rx)u + rho(x)R_V u - rho(Rx)R_V u) on
/// (e_i, v_j); identity "reynolds-representation". Throws
/// PreconditionFailure if rho is not a representation or R not Reynolds.
Verdict check_reynolds_rep(const ReynoldsRep &r);

/// The identity above without the precondition checks.
Verdict reynolds_rep_identity(const ReynoldsRep &r);

/// Derivation compatibility ("derivation-representation") and R_V d_V = d_V R_V
/// ("representation-commutation"). Throws PreconditionFailure if the
/// underlying Reynolds rep or the pair (L, R, d) is invalid.
Verdict check_rld_rep(const RLDRep &r, DerivationCompat mode = DerivationCompat::Consistent);

/// Candidate formulas for the induced action of L_R on V.
enum class InducedVariant {
    /// rho(Rx)u + R_V(rho(Rx)u - rho(x)u)
    Outer,
    /// rho(Rx)u + rho(x)R_V u - rho(Rx)R_V u
    Inner,
};

const char *to_string(InducedVariant v);

/// rho_R(e_i) for every i under the given variant.
std::vector<Matrix> induced_action(const ReynoldsRep &r, InducedVariant variant);

struct InducedRepAudit {
    InducedVariant chosen = InducedVariant::Outer;
    /// check_rep against L_R for each candidate, tried in order Outer, Inner.
    Verdict outer;
    Verdict inner;
    bool inner_evaluated = false;
};

struct InducedRep {
    Representation rep; // algebra is L_R
    InducedRepAudit audit;
};

/// Selects the first candidate (Outer, then Inner) whose action is a
/// representation of L_R. Throws PreconditionFailure when the input is not a
/// Reynolds representation and PostconditionFailure when neither candidate passes.
InducedRep induced_rep(const ReynoldsRep &r);

/// (L; ad, R, d). Requires is_reylieder; post-checks check_rld_rep.
RLDRep adjoint_rep(const ReynoldsLieDerPair &p);

/// Blockwise sum; all summands must share (L, R).
ReynoldsRep direct_sum_rep(const std::vector<ReynoldsRep> &summands);
/// Blockwise sum of RLD representations sharing (L, R, d).
RLDRep direct_sum_rep(const std::vector<RLDRep> &summands);

} // namespace reylie
