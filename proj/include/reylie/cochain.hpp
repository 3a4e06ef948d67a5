#pragma once

// Cochains Hom(wedge^k L, V) on the increasing-tuple basis, the differentials
// delta_CE, delta_R, D_R, the RLieDer differential, the maps phi and Delta,
// and cohomology by exact rank computations.

#include "reylie/rep.hpp"

#include <optional>
#include <string>
#include <vector>

namespace reylie {

/// Strictly increasing k-subsets of {0..n-1} in lexicographic order.
const std::vector<std::vector<int>> &increasing_tuples(int n, int k);
/// Position of an increasing tuple in increasing_tuples(n, k).
std::size_t tuple_rank(int n, const std::vector<int> &tuple);
std::size_t binomial(int n, int k);

/// Element of Hom(wedge^k L, V): one V-vector per increasing k-tuple.
class Cochain {
  public:
    Cochain() = default;
    /// Zero cochain.
    Cochain(int degree, int dim_l, int dim_v);
    static Cochain from_flat(int degree, int dim_l, int dim_v, const Vector &flat);

    int degree() const { return degree_; }
    int dim_l() const { return dim_l_; }
    int dim_v() const { return dim_v_; }
    /// Number of increasing tuples.
    std::size_t size() const { return values_.size(); }
    static std::size_t space_dim(int degree, int dim_l, int dim_v);

    const Vector &value(std::size_t rank) const { return values_[rank]; }
    void set_value(std::size_t rank, Vector v);
    /// Value on an increasing tuple.
    const Vector &at(const std::vector<int> &tuple) const;
    void set(const std::vector<int> &tuple, Vector v);

    /// Alternating extension to any index tuple: sign of the sorting
    /// permutation, zero on repeated indices.
    Vector eval_basis(std::vector<int> indices) const;
    /// Multilinear evaluation on arbitrary vectors of L.
    Vector eval(const std::vector<Vector> &args) const;

    /// Concatenation of the tuple values in rank order.
    Vector flat() const;
    bool is_zero() const;

    friend bool operator==(const Cochain &, const Cochain &) = default;
    Cochain &operator+=(const Cochain &o);
    Cochain &operator-=(const Cochain &o);

  private:
    void check_compatible(const Cochain &o) const;

    int degree_ = 0;
    int dim_l_ = 0;
    int dim_v_ = 0;
    std::vector<Vector> values_;
};

Cochain operator+(Cochain a, const Cochain &b);
Cochain operator-(Cochain a, const Cochain &b);
Cochain operator-(Cochain a);
Cochain operator*(const Scalar &c, Cochain a);

/// Element of C^n_R = C^n (+) C^{n-1}; `second` absent when n = 0.
struct PairCochain {
    Cochain first;
    std::optional<Cochain> second;

    int degree() const { return first.degree(); }
    Vector flat() const;
    friend bool operator==(const PairCochain &, const PairCochain &) = default;
};

/// Element of the RLieDer complex: main in C^n_R, tail in C^{n-1}_R (absent
/// when n <= 1).
struct QuadCochain {
    PairCochain main;
    std::optional<PairCochain> tail;

    int degree() const { return main.degree(); }
    Vector flat() const;
    friend bool operator==(const QuadCochain &, const QuadCochain &) = default;
};

PairCochain zero_pair(int degree, int dim_l, int dim_v);
QuadCochain zero_quad(int degree, int dim_l, int dim_v);
std::size_t pair_space_dim(int degree, int dim_l, int dim_v);
std::size_t quad_space_dim(int degree, int dim_l, int dim_v);
PairCochain pair_from_flat(int degree, int dim_l, int dim_v, const Vector &flat);
QuadCochain quad_from_flat(int degree, int dim_l, int dim_v, const Vector &flat);
PairCochain operator+(const PairCochain &a, const PairCochain &b);
PairCochain operator-(const PairCochain &a, const PairCochain &b);
PairCochain operator*(const Scalar &c, const PairCochain &a);

/// Degree-1 cochain x -> m x (column j is the value on e_j), and back.
Cochain linear_cochain(const Matrix &m, int dim_l);
Matrix linear_map(const Cochain &f);
/// The bracket of l as a degree-2 cochain with values in l.
Cochain bracket_cochain(const LieAlgebra &l);
/// Structure constants read off a degree-2 cochain Lambda^2 L -> L.
LieAlgebra algebra_from_cochain(const Cochain &mu);

/// Value of phi on degree-0 cochains.
enum class PhiZeroMode {
    /// v - R_V v: the general formula evaluated at n = 0. With it phi is a
    /// chain map in every degree, degree 0 included.
    IdMinusRV,
    /// phi = Id_V, the literal reading; breaks delta_R phi = phi delta_CE at degree 0
    /// whenever the image of R_V meets the L-invariants nontrivially.
    Identity,
};

struct Conventions {
    PhiZeroMode phi_zero = PhiZeroMode::IdMinusRV;
    DerivationCompat compat = DerivationCompat::Consistent;
};

/// Coboundary of the Lie algebra `l` with coefficients in the action
/// `action` (one matrix per basis vector of l):
///   sum_i (-1)^{i+n} rho(x_i) f(..., x_i^, ...)
///   + sum_{i<j} (-1)^{i+j+n+1} f([x_i,x_j], ..., x_i^, ..., x_j^, ...)
/// with 1-based positions i, j.
Cochain coboundary(const LieAlgebra &l, const std::vector<Matrix> &action, const Cochain &f);

Cochain delta_ce(const Representation &rep, const Cochain &f);
/// The same formula on (L_R, rho_R). Refuses invalid Reynolds reps.
Cochain delta_r(const ReynoldsRep &rep, const Cochain &f);
Cochain phi(const ReynoldsRep &rep, const Cochain &f, PhiZeroMode mode = PhiZeroMode::IdMinusRV);
/// sum_i f(..., d x_i, ...) - d_V f(...); on degree 0, -d_V v.
Cochain big_delta(const RLDRep &rep, const Cochain &f);
PairCochain big_delta(const RLDRep &rep, const PairCochain &f);

/// The four complexes.
enum class ComplexKind {
    CE,       // (C(L;V), delta_CE)
    Reynolds, // (C(L_R;V), delta_R)
    R,        // (C_R(L;V), D_R)
    RLieDer,  // RLieDer complex
};

const char *to_string(ComplexKind k);
std::optional<ComplexKind> parse_complex_kind(const std::string &s);

/// All differentials and maps for one RLD representation, with the induced
/// structures (L_R, rho_R) computed once. The induced structures exist only
/// when the Reynolds rep is valid; methods needing them throw otherwise.
class Complexes {
  public:
    explicit Complexes(RLDRep rld, Conventions conv = {});

    const RLDRep &rld() const { return rld_; }
    const Conventions &conventions() const { return conv_; }
    int dim_l() const { return rld_.algebra().dim(); }
    int dim_v() const { return rld_.rep().dim_v; }
    bool has_induced() const { return induced_.has_value(); }
    const InducedRep &induced() const;

    /// Validators the given complex needs: check_rep for CE, Reynolds rep
    /// validity for Reynolds/R, check_rld_rep for RLieDer.
    Verdict validate(ComplexKind kind) const;

    Cochain delta_ce(const Cochain &f) const;
    Cochain delta_r(const Cochain &f) const;
    Cochain phi(const Cochain &f) const;
    Cochain big_delta(const Cochain &f) const;
    PairCochain big_delta(const PairCochain &f) const;
    /// D_R(f, g) = (delta_CE f, -delta_R g - phi f).
    PairCochain d_r(const PairCochain &f) const;
    /// Degree 1: f -> (D_R f, -Delta f). Degree n >= 2:
    /// ((f,g),(f~,g~)) -> (D_R(f,g), D_R(f~,g~) + (-1)^n Delta(f,g)).
    /// Degree 0 (the group C^0_R placed below the complex): zero map.
    QuadCochain d_rlieder(const QuadCochain &f) const;

    /// Dimension of the degree-n space of the complex (0 outside its range).
    std::size_t space_dim(ComplexKind kind, int n) const;
    /// Highest degree with a nonzero space.
    int top_degree(ComplexKind kind) const;
    /// The degree-n differential as a matrix on flat coordinates.
    Matrix differential(ComplexKind kind, int n) const;
    /// Degree-n phi or Delta as matrices on C^n (kind CE) or on C^n_R
    /// (kind R, Delta only).
    Matrix phi_matrix(int n) const;
    Matrix big_delta_matrix(int n) const;
    Matrix big_delta_pair_matrix(int n) const;

  private:
    RLDRep rld_;
    Conventions conv_;
    std::optional<InducedRep> induced_;
};

struct CohomologyReport {
    ComplexKind kind = ComplexKind::CE;
    int degree = 0;
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    std::size_t dim_h = 0;
    /// Kernel basis, flat coordinates of the degree-n space.
    std::vector<Vector> cocycle_basis;
    std::string note;
};

/// Refuses (PreconditionFailure) when validate(kind) fails.
CohomologyReport cohomology(const Complexes &cx, ComplexKind kind, int n);
CohomologyReport cohomology(ComplexKind kind, const RLDRep &rld, int n, Conventions conv = {});

/// A flat degree-(n-1) preimage of the flat degree-n element `c`, or nullopt.
/// At degree 0 the witness is the empty vector when c = 0.
std::optional<Vector> is_coboundary(const Complexes &cx, ComplexKind kind, int n, const Vector &c);

/// Matrix of a linear map given by its action on unit vectors of Q^in_dim.
template <class F> Matrix matrix_of(std::size_t in_dim, std::size_t out_dim, F &&f) {
    Matrix m(out_dim, in_dim);
    for (std::size_t j = 0; j < in_dim; ++j)
        m.set_column(j, f(unit_vector(in_dim, j)));
    return m;
}

} // namespace reylie
