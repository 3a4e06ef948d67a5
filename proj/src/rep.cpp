#include "reylie/rep.hpp"

namespace reylie {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

void check_square(const Matrix &m, std::size_t n, const char *what) {
    if (m.rows() != n || m.cols() != n)
        throw ContractViolation(std::string(what) + ": expected " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix");
}

bool same_base(const ReynoldsRep &a, const ReynoldsRep &b) {
    return a.base.algebra == b.base.algebra && a.r == b.r;
}

} // namespace

Matrix Representation::rho(const Vector &x) const {
    if (x.size() != sz(algebra.dim()))
        throw ContractViolation("rho: argument dimension mismatch");
    Matrix m(sz(dim_v), sz(dim_v));
    for (std::size_t i = 0; i < x.size(); ++i)
        if (sgn(x[i]) != 0)
            m = m + x[i] * action[i];
    return m;
}

Representation trivial_rep(const LieAlgebra &l, int dim_v) {
    return {l, dim_v, std::vector<Matrix>(sz(l.dim()), Matrix(sz(dim_v), sz(dim_v)))};
}

Representation adjoint_action(const LieAlgebra &l) {
    Representation r{l, l.dim(), {}};
    for (int i = 0; i < l.dim(); ++i)
        r.action.push_back(l.ad(i));
    return r;
}

void check_shapes(const Representation &r) {
    if (r.dim_v < 0)
        throw ContractViolation("representation: negative dimension");
    if (r.action.size() != sz(r.algebra.dim()))
        throw ContractViolation("representation: expected one action matrix per basis vector of L");
    for (const auto &m : r.action)
        check_square(m, sz(r.dim_v), "representation action");
}

void check_shapes(const ReynoldsRep &r) {
    check_shapes(r.base);
    check_endomorphism(r.base.algebra, r.r, "R");
    check_square(r.r_v, sz(r.base.dim_v), "R_V");
}

void check_shapes(const RLDRep &r) {
    check_shapes(r.base);
    check_endomorphism(r.algebra(), r.d, "d");
    check_square(r.d_v, sz(r.rep().dim_v), "d_V");
}

Verdict check_rep(const Representation &r) {
    check_shapes(r);
    Verdict v;
    const int n = r.algebra.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Matrix res = r.rho(r.algebra.basis_bracket(i, j)) - (r.action[i] * r.action[j] - r.action[j] * r.action[i]);
            for (int k = 0; k < r.dim_v; ++k)
                v.check("representation", {i, j, k}, res.column(sz(k)));
        }
    return v;
}

Verdict reynolds_rep_identity(const ReynoldsRep &r) {
    check_shapes(r);
    const auto &rep = r.base;
    Verdict v;
    for (int i = 0; i < rep.algebra.dim(); ++i) {
        Matrix a = rep.rho(r.r.column(sz(i))); // rho(Rx)
        const Matrix &b = rep.action[sz(i)];   // rho(x)
        Matrix res = a * r.r_v - r.r_v * (a + b * r.r_v - a * r.r_v);
        for (int k = 0; k < rep.dim_v; ++k)
            v.check("reynolds-representation", {i, k}, res.column(sz(k)));
    }
    return v;
}

Verdict check_reynolds_rep(const ReynoldsRep &r) {
    check_shapes(r);
    require(check_rep(r.base), "check_reynolds_rep: not a representation");
    require(is_reynolds(r.base.algebra, r.r), "check_reynolds_rep: R is not a Reynolds operator");
    return reynolds_rep_identity(r);
}

Verdict check_rld_rep(const RLDRep &r, DerivationCompat mode) {
    check_shapes(r);
    require(check_reynolds_rep(r.base), "check_rld_rep: not a Reynolds representation");
    require(is_reylieder(r.pair()), "check_rld_rep: (L, R, d) is not a Reynolds LieDer pair");
    const auto &rep = r.rep();
    Verdict v;
    for (int i = 0; i < rep.algebra.dim(); ++i) {
        const Matrix &rx = rep.action[sz(i)];
        Matrix res = r.d_v * rx - rep.rho(r.d.column(sz(i)));
        if (mode == DerivationCompat::Consistent)
            res = res - rx * r.d_v;
        else
            res = res - (rx * r.base.r_v - rep.rho(r.base.r.column(sz(i))) * r.base.r_v);
        for (int k = 0; k < rep.dim_v; ++k)
            v.check("derivation-representation", {i, k}, res.column(sz(k)));
    }
    v.merge(commutation_check(r.base.r_v, r.d_v, "representation-commutation"));
    return v;
}

const char *to_string(InducedVariant v) {
    return v == InducedVariant::Outer ? "outer" : "inner";
}

std::vector<Matrix> induced_action(const ReynoldsRep &r, InducedVariant variant) {
    check_shapes(r);
    const auto &rep = r.base;
    std::vector<Matrix> out;
    for (int i = 0; i < rep.algebra.dim(); ++i) {
        Matrix a = rep.rho(r.r.column(sz(i)));
        const Matrix &b = rep.action[sz(i)];
        if (variant == InducedVariant::Outer)
            out.push_back(a + r.r_v * (a - b));
        else
            out.push_back(a + b * r.r_v - a * r.r_v);
    }
    return out;
}

InducedRep induced_rep(const ReynoldsRep &r) {
    require(check_reynolds_rep(r), "induced_rep: not a Reynolds representation");
    LieAlgebra lr = induced_bracket(r.base.algebra, r.r);
    InducedRep out{{lr, r.base.dim_v, induced_action(r, InducedVariant::Outer)}, {}};
    out.audit.outer = check_rep(out.rep);
    if (out.audit.outer.ok())
        return out;
    Representation inner{lr, r.base.dim_v, induced_action(r, InducedVariant::Inner)};
    out.audit.inner = check_rep(inner);
    out.audit.inner_evaluated = true;
    if (out.audit.inner.ok()) {
        out.rep = std::move(inner);
        out.audit.chosen = InducedVariant::Inner;
        return out;
    }
    Verdict both = out.audit.outer.prefixed("outer/");
    both.merge(out.audit.inner.prefixed("inner/"));
    throw PostconditionFailure("induced_rep: no candidate action is a representation of L_R", both);
}

RLDRep adjoint_rep(const ReynoldsLieDerPair &p) {
    require(is_reylieder(p), "adjoint_rep: not a Reynolds LieDer pair");
    RLDRep out{{adjoint_action(p.algebra), p.r, p.r}, p.d, p.d};
    ensure(check_rld_rep(out), "adjoint_rep");
    return out;
}

ReynoldsRep direct_sum_rep(const std::vector<ReynoldsRep> &summands) {
    if (summands.empty())
        throw ContractViolation("direct_sum_rep: no summands");
    ReynoldsRep out = summands.front();
    check_shapes(out);
    for (std::size_t s = 1; s < summands.size(); ++s) {
        const auto &b = summands[s];
        check_shapes(b);
        if (!same_base(out, b))
            throw ContractViolation("direct_sum_rep: summands have different (L, R)");
        for (std::size_t i = 0; i < out.base.action.size(); ++i)
            out.base.action[i] = block_diagonal(out.base.action[i], b.base.action[i]);
        out.base.dim_v += b.base.dim_v;
        out.r_v = block_diagonal(out.r_v, b.r_v);
    }
    return out;
}

RLDRep direct_sum_rep(const std::vector<RLDRep> &summands) {
    if (summands.empty())
        throw ContractViolation("direct_sum_rep: no summands");
    std::vector<ReynoldsRep> bases;
    for (const auto &s : summands) {
        if (!(s.d == summands.front().d))
            throw ContractViolation("direct_sum_rep: summands have different d");
        bases.push_back(s.base);
    }
    RLDRep out{direct_sum_rep(bases), summands.front().d, summands.front().d_v};
    for (std::size_t s = 1; s < summands.size(); ++s)
        out.d_v = block_diagonal(out.d_v, summands[s].d_v);
    return out;
}

} // namespace reylie
