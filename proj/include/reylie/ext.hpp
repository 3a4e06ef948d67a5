#pragma once

// Abelian extensions L (+) V assembled from data (Theta, xi, chi), the data
// read back from an extension with a section, central extensions of
// Reynolds Lie algebras, and the obstruction to extending a pair (d_V, d) of
// derivations to the middle term.

#include "reylie/cochain.hpp"

#include <optional>
#include <string>

namespace reylie {

struct ExtensionDatum {
    Cochain theta; // Lambda^2 L -> V
    Cochain xi;    // L -> V
    Cochain chi;   // L -> V
};

ExtensionDatum zero_datum(int dim_l, int dim_v);
/// ((Theta, xi), (chi, 0)) in degree 2 of the RLieDer complex.
QuadCochain pack(const ExtensionDatum &d);
/// Inverse of pack; refuses a nonzero degree-0 slot.
ExtensionDatum unpack(const QuadCochain &c);

/// Abelian: rho arbitrary. Central: rho must vanish.
enum class ExtensionMode { Abelian, Central };

struct ExtensionTotal {
    /// L (+) V with basis e_0..e_{m-1} of L then V, bracket
    /// [a+u, b+v] = [a,b] + Theta(a,b) + rho(a)v - rho(b)u,
    /// R(a+u) = Ra + R_V u + xi(a), d(a+u) = da + d_V u + chi(a).
    ReynoldsLieDerPair total;
    /// is_reylieder on the assembled structure.
    Verdict direct;
    /// D(Theta, xi, chi) = 0, per component:
    ///   "delta_CE(Theta)", "-delta_R(xi) - phi(Theta)",
    ///   "delta_CE(chi) + Delta(Theta)", "Delta(xi) - phi(chi)".
    Verdict cocycle;
};

/// Requires check_rld_rep. Post-checks that the two verdicts agree.
ExtensionTotal build_extension(const RLDRep &rep, const ExtensionDatum &datum,
                               ExtensionMode mode = ExtensionMode::Abelian);

/// A short exact sequence 0 -> V -i-> hat -p-> L -> 0 of Reynolds LieDer
/// pairs with a linear section s of p.
struct ExtensionSequence {
    ReynoldsLieDerPair base;
    ReynoldsLieDerPair hat;
    Matrix i; // hat x V
    Matrix p; // L x hat
    Matrix s; // hat x L
};

/// Canonical sequence of a built extension, s(a) = (a, 0).
ExtensionSequence canonical_sequence(const ReynoldsLieDerPair &base, int dim_v, const ReynoldsLieDerPair &total);

/// Exactness, homomorphism and section conditions; identities "p i",
/// "rank i", "rank p", "dimension", "p s", "p bracket", "p R", "p d",
/// "i bracket", "R preserves V", "d preserves V".
Verdict check_sequence(const ExtensionSequence &e);

struct ExtractedExtension {
    RLDRep rep;
    ExtensionDatum datum;
};

/// rho(a)u = [s a, i u], Theta(a,b) = [s a, s b] - s[a,b],
/// xi(a) = R s a - s R a, chi(a) = d s a - s d a, all pulled back along i.
/// Refuses a sequence failing check_sequence; post-checks check_rld_rep and
/// the cocycle condition.
ExtractedExtension extract_from_extension(const ExtensionSequence &e);

/// Central extension of (L, R) by (V, R_V).
struct CentralExtension {
    ReynoldsLieAlgebra base;
    int dim_v = 0;
    Matrix r_v;
    ReynoldsLieAlgebra hat;
    Matrix i, p, s;
};

/// L (+) V with [a+u, b+v] = [a,b] + theta(a,b) and R(a+u) = Ra + R_V u +
/// xi(a); canonical i, p, s. Refuses when the result is not a Reynolds Lie
/// algebra.
CentralExtension central_extension(const ReynoldsLieAlgebra &base, const Matrix &r_v, const Cochain &theta,
                                   const Cochain &xi);
/// Same extension with the section s + i gamma.
CentralExtension with_section(const CentralExtension &e, const Matrix &gamma);

/// Exactness and section conditions plus [V, hat] = 0 on basis pairs
/// (identity "central", indices {V index, hat index}).
Verdict check_central(const CentralExtension &e);

/// Reading of the first obstruction component.
enum class Ob2Mode {
    /// d_V(psi(a,b)) - psi(da,b) - psi(a,db)
    Split,
    /// d_V applied to the whole sum d_V(psi(a,b) - psi(da,b) - psi(a,db))
    Literal,
};

struct ObstructionReport {
    Cochain ob2; // Lambda^2 L -> V
    Cochain ob1; // L -> V
    /// D_R(ob2, ob1) = 0 in the complex with trivial coefficients.
    Verdict cocycle;
    Ob2Mode mode = Ob2Mode::Split;

    PairCochain pair() const { return {ob2, ob1}; }
};

/// Requires check_central, d a derivation of L, R d = d R and
/// R_V d_V = d_V R_V.
ObstructionReport obstruction(const CentralExtension &e, const Matrix &d_v, const Matrix &d,
                              Ob2Mode mode = Ob2Mode::Split);

struct ExtensibilityReport {
    ObstructionReport obstruction;
    bool extensible = false;
    /// gamma with D_R(gamma, 0) equal to the obstruction.
    std::optional<Matrix> gamma;
    /// d_hat(s a + i u) = s d a + i gamma a + i d_V u.
    std::optional<Matrix> d_hat;
    std::string note;
};

/// Post-checks the witness: d_hat is a derivation commuting with R_hat,
/// p d_hat = d p and d_hat i = i d_V.
ExtensibilityReport extensibility(const CentralExtension &e, const Matrix &d_v, const Matrix &d);

/// The complex (L; V trivial, R, R_V, d, d_V) the obstruction lives in.
RLDRep trivial_coefficients(const CentralExtension &e, const Matrix &d_v, const Matrix &d);

} // namespace reylie
