#pragma once

#include "reylie/errors.hpp"
#include "reylie/exactlin.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace reylie {

/// Linear map between coordinate spaces; column j is the image of e_j.
using LinearOp = Matrix;

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Only brackets [e_i, e_j] with i < j are stored; the bracket is extended
/// by antisymmetry and bilinearity, so an inconsistent table cannot be
/// represented. The Jacobi identity is not enforced here (see jacobi_check).
class LieAlgebra {
  public:
    LieAlgebra() = default;
    explicit LieAlgebra(int dim);

    static LieAlgebra abelian(int dim);
    /// [e0,e1] = e2
    static LieAlgebra heisenberg();
    /// [e0,e1] = e0
    static LieAlgebra affine_plane();
    /// L1 (+) L2 with L1 on the first basis indices.
    static LieAlgebra direct_sum(const LieAlgebra &a, const LieAlgebra &b);

    int dim() const { return dim_; }

    /// Sets [e_i, e_j] = value; for i > j stores -value at (j, i).
    void set_bracket(int i, int j, Vector value);
    /// [e_i, e_j] for any i, j.
    Vector basis_bracket(int i, int j) const;
    Vector bracket(const Vector &x, const Vector &y) const;
    bool is_abelian() const;

    /// ad(e_i) as a dim x dim matrix.
    Matrix ad(int i) const;

    friend bool operator==(const LieAlgebra &, const LieAlgebra &) = default;

  private:
    std::size_t pair_index(int i, int j) const;
    void check_index(int i) const;

    int dim_ = 0;
    std::vector<Vector> table_; // pairs i<j in lexicographic order
};

struct ReynoldsLieAlgebra {
    LieAlgebra algebra;
    LinearOp r;
};

struct ReynoldsLieDerPair {
    LieAlgebra algebra;
    LinearOp r;
    LinearOp d;
};

/// How the Reynolds identity is evaluated.
enum class ReynoldsForm {
    /// [Rx,Ry] = R([Rx,y] + [x,Ry] - [Rx,Ry]); the form under which the
    /// induced bracket [x,y]_R = [Rx,y] + [x,Ry] - [Rx,Ry] is a Lie bracket.
    Standard,
    /// [Rx,Ry] = R([x,Ry] + [x,Ry] - [Rx,Ry]), the literal reading;
    /// kept for auditing only.
    Literal,
};

void check_endomorphism(const LieAlgebra &l, const LinearOp &op, const char *what);

/// Residual [[ei,ej],ek] + [[ej,ek],ei] + [[ek,ei],ej] on i<j<k; identity "jacobi".
Verdict jacobi_check(const LieAlgebra &l);
/// Residual d[ei,ej] - [d ei, ej] - [ei, d ej] on i<j; identity "derivation".
Verdict is_derivation(const LieAlgebra &l, const LinearOp &d);
/// Residual [Rx,Ry] - R(...) on basis pairs i<j; identity "reynolds".
Verdict is_reynolds(const LieAlgebra &l, const LinearOp &r, ReynoldsForm form = ReynoldsForm::Standard);
/// Residual R d - d R, one violation per nonzero column; identity "commutation".
Verdict commutation_check(const LinearOp &r, const LinearOp &d, const std::string &identity = "commutation");
/// jacobi + reynolds + derivation + commutation.
Verdict is_reylieder(const ReynoldsLieDerPair &p, ReynoldsForm form = ReynoldsForm::Standard);

/// [x,y]_R = [Rx,y] + [x,Ry] - [Rx,Ry].
Vector induced_bracket_value(const LieAlgebra &l, const LinearOp &r, const Vector &x, const Vector &y);
/// The algebra L_R. Refuses non-Reynolds R; post-checks Jacobi of L_R and
/// R([x,y]_R) = [Rx,Ry].
LieAlgebra induced_bracket(const LieAlgebra &l, const LinearOp &r);

/// f[x,y] = [fx,fy], R' f = f R, d' f = f d on bases.
Verdict is_homomorphism(const ReynoldsLieDerPair &src, const ReynoldsLieDerPair &dst, const LinearOp &f);

} // namespace reylie
