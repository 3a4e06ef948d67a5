#include "reylie/ext.hpp"

namespace reylie {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

Verdict cochain_residuals(const std::string &identity, const Cochain &c) {
    Verdict v;
    const auto &tuples = increasing_tuples(c.dim_l(), c.degree());
    for (std::size_t t = 0; t < c.size(); ++t)
        v.check(identity, tuples[t], c.value(t));
    return v;
}

void check_matrix(const Matrix &m, std::size_t rows, std::size_t cols, const std::string &what) {
    if (m.rows() != rows || m.cols() != cols)
        throw ContractViolation(what + ": expected a " + std::to_string(rows) + "x" + std::to_string(cols) +
                                " matrix, got " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void check_datum(const ExtensionDatum &d, int m, int v) {
    auto ok = [&](const Cochain &c, int deg) { return c.degree() == deg && c.dim_l() == m && c.dim_v() == v; };
    if (!ok(d.theta, 2) || !ok(d.xi, 1) || !ok(d.chi, 1))
        throw ContractViolation("extension datum: expected Theta: L^2 -> V, xi, chi: L -> V with dim L = " +
                                std::to_string(m) + ", dim V = " + std::to_string(v));
}

/// u with i u = x; x must lie in the image of i.
Vector pull(const Matrix &i, const Vector &x) {
    auto u = solve(i, x);
    if (!u)
        throw PostconditionFailure("vector outside the image of the inclusion", {});
    return *u;
}

/// Left inverse of i on the complement chosen by the section: x -> u with
/// x = s p x + i u.
Matrix splitting(const Matrix &i, const Matrix &p, const Matrix &s) {
    Matrix q = Matrix::identity(s.rows()) - s * p;
    Matrix u(i.cols(), q.cols());
    for (std::size_t k = 0; k < q.cols(); ++k)
        u.set_column(k, pull(i, q.column(k)));
    return u;
}

Verdict zero_matrix(const std::string &identity, const Matrix &m) {
    Verdict v;
    for (std::size_t j = 0; j < m.cols(); ++j)
        v.check(identity, {static_cast<int>(j)}, m.column(j));
    return v;
}

/// Exactness of 0 -> V -> hat -> L -> 0, p a homomorphism of brackets and of
/// the operator pair (R, R_hat), s a section.
Verdict sequence_core(const LieAlgebra &base, const Matrix &r, const LieAlgebra &hat, const Matrix &r_hat,
                      const Matrix &i, const Matrix &p, const Matrix &s, int dim_v) {
    const int m = base.dim(), n = hat.dim();
    check_matrix(r, sz(m), sz(m), "base R");
    check_matrix(r_hat, sz(n), sz(n), "extension R");
    check_matrix(i, sz(n), sz(dim_v), "inclusion i");
    check_matrix(p, sz(m), sz(n), "projection p");
    check_matrix(s, sz(n), sz(m), "section s");
    Verdict v;
    if (n != m + dim_v)
        v.add("dimension", {n, m, dim_v}, {});
    v.merge(zero_matrix("p i", p * i));
    if (rank(i) != sz(dim_v))
        v.add("rank i", {static_cast<int>(rank(i))}, {});
    if (rank(p) != sz(m))
        v.add("rank p", {static_cast<int>(rank(p))}, {});
    v.merge(zero_matrix("p s", p * s - Matrix::identity(sz(m))));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            v.check("p bracket", {a, b},
                    p.apply(hat.basis_bracket(a, b)) - base.bracket(p.column(sz(a)), p.column(sz(b))));
    v.merge(zero_matrix("p R", p * r_hat - r * p));
    return v;
}

RLDRep checked_rep(const RLDRep &rep, const std::string &what) {
    check_shapes(rep);
    require(check_rld_rep(rep), what + ": invalid representation");
    return rep;
}

} // namespace

ExtensionDatum zero_datum(int dim_l, int dim_v) {
    return {Cochain(2, dim_l, dim_v), Cochain(1, dim_l, dim_v), Cochain(1, dim_l, dim_v)};
}

QuadCochain pack(const ExtensionDatum &d) {
    return {PairCochain{d.theta, d.xi}, PairCochain{d.chi, Cochain(0, d.chi.dim_l(), d.chi.dim_v())}};
}

ExtensionDatum unpack(const QuadCochain &c) {
    if (c.degree() != 2 || !c.main.second || !c.tail || !c.tail->second)
        throw ContractViolation("unpack: degree-2 element expected");
    if (!c.tail->second->is_zero())
        throw ContractViolation("unpack: degree-0 slot must vanish");
    return {c.main.first, *c.main.second, c.tail->first};
}

ExtensionTotal build_extension(const RLDRep &rep, const ExtensionDatum &datum, ExtensionMode mode) {
    checked_rep(rep, "build_extension");
    const int m = rep.algebra().dim(), v = rep.rep().dim_v, n = m + v;
    check_datum(datum, m, v);
    if (mode == ExtensionMode::Central) {
        Verdict c;
        for (int a = 0; a < m; ++a)
            for (int u = 0; u < v; ++u)
                c.check("central", {a, u}, rep.rep().action[sz(a)].column(sz(u)));
        require(c, "build_extension: central mode needs a trivial action");
    }

    LieAlgebra l(n);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vector x = rep.algebra().basis_bracket(a, b);
            Vector t = datum.theta.eval_basis({a, b});
            x.insert(x.end(), t.begin(), t.end());
            l.set_bracket(a, b, x);
        }
    for (int a = 0; a < m; ++a)
        for (int u = 0; u < v; ++u) {
            Vector x(sz(m));
            Vector act = rep.rep().action[sz(a)].column(sz(u));
            x.insert(x.end(), act.begin(), act.end());
            l.set_bracket(a, m + u, x);
        }

    auto assemble = [&](const Matrix &op, const Matrix &op_v, const Cochain &tail) {
        Matrix out(sz(n), sz(n));
        for (int a = 0; a < m; ++a) {
            Vector col = op.column(sz(a));
            Vector t = tail.value(sz(a));
            col.insert(col.end(), t.begin(), t.end());
            out.set_column(sz(a), col);
        }
        for (int u = 0; u < v; ++u) {
            Vector col(sz(m));
            Vector t = op_v.column(sz(u));
            col.insert(col.end(), t.begin(), t.end());
            out.set_column(sz(m + u), col);
        }
        return out;
    };

    ExtensionTotal out;
    out.total = {l, assemble(rep.base.r, rep.base.r_v, datum.xi), assemble(rep.d, rep.d_v, datum.chi)};
    out.direct = is_reylieder(out.total);

    Complexes cx(rep);
    QuadCochain img = cx.d_rlieder(pack(datum));
    out.cocycle = cochain_residuals("delta_CE(Theta)", img.main.first);
    out.cocycle.merge(cochain_residuals("-delta_R(xi) - phi(Theta)", *img.main.second));
    out.cocycle.merge(cochain_residuals("delta_CE(chi) + Delta(Theta)", img.tail->first));
    out.cocycle.merge(cochain_residuals("Delta(xi) - phi(chi)", *img.tail->second));

    if (out.direct.ok() != out.cocycle.ok()) {
        Verdict dis = out.direct.ok() ? out.cocycle : out.direct;
        throw PostconditionFailure("build_extension: direct and cocycle verdicts disagree", dis);
    }
    return out;
}

ExtensionSequence canonical_sequence(const ReynoldsLieDerPair &base, int dim_v, const ReynoldsLieDerPair &total) {
    const std::size_t m = sz(base.algebra.dim()), v = sz(dim_v);
    Matrix i = vstack(Matrix::zero(m, v), Matrix::identity(v));
    Matrix p = hstack(Matrix::identity(m), Matrix::zero(m, v));
    Matrix s = vstack(Matrix::identity(m), Matrix::zero(v, m));
    return {base, total, i, p, s};
}

Verdict check_sequence(const ExtensionSequence &e) {
    const int n = e.hat.algebra.dim();
    const int v = static_cast<int>(e.i.cols());
    check_matrix(e.base.d, sz(e.base.algebra.dim()), sz(e.base.algebra.dim()), "base d");
    check_matrix(e.hat.d, sz(n), sz(n), "extension d");
    Verdict out = sequence_core(e.base.algebra, e.base.r, e.hat.algebra, e.hat.r, e.i, e.p, e.s, v);
    out.merge(zero_matrix("p d", e.p * e.hat.d - e.base.d * e.p));
    for (int u = 0; u < v; ++u)
        for (int w = u + 1; w < v; ++w)
            out.check("i bracket", {u, w}, e.hat.algebra.bracket(e.i.column(sz(u)), e.i.column(sz(w))));
    out.merge(zero_matrix("R preserves V", e.p * e.hat.r * e.i));
    out.merge(zero_matrix("d preserves V", e.p * e.hat.d * e.i));
    return out;
}

ExtractedExtension extract_from_extension(const ExtensionSequence &e) {
    require(check_sequence(e), "extract_from_extension: not an extension with a section");
    const LieAlgebra &hat = e.hat.algebra;
    const int m = e.base.algebra.dim(), v = static_cast<int>(e.i.cols());

    Matrix r_v(sz(v), sz(v)), d_v(sz(v), sz(v));
    for (int u = 0; u < v; ++u) {
        r_v.set_column(sz(u), pull(e.i, e.hat.r.apply(e.i.column(sz(u)))));
        d_v.set_column(sz(u), pull(e.i, e.hat.d.apply(e.i.column(sz(u)))));
    }
    Representation rho = trivial_rep(e.base.algebra, v);
    for (int a = 0; a < m; ++a)
        for (int u = 0; u < v; ++u)
            rho.action[sz(a)].set_column(sz(u), pull(e.i, hat.bracket(e.s.column(sz(a)), e.i.column(sz(u)))));

    ExtensionDatum datum = zero_datum(m, v);
    const auto &pairs = increasing_tuples(m, 2);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        int a = pairs[t][0], b = pairs[t][1];
        Vector x = hat.bracket(e.s.column(sz(a)), e.s.column(sz(b))) - e.s.apply(e.base.algebra.basis_bracket(a, b));
        datum.theta.set_value(t, pull(e.i, x));
    }
    for (int a = 0; a < m; ++a) {
        Vector sa = e.s.column(sz(a));
        datum.xi.set_value(sz(a), pull(e.i, e.hat.r.apply(sa) - e.s.apply(e.base.r.column(sz(a)))));
        datum.chi.set_value(sz(a), pull(e.i, e.hat.d.apply(sa) - e.s.apply(e.base.d.column(sz(a)))));
    }

    RLDRep rep{{rho, e.base.r, r_v}, e.base.d, d_v};
    Verdict rv;
    try {
        rv = check_rld_rep(rep);
    } catch (const PreconditionFailure &f) {
        rv = f.verdict();
    }
    ensure(rv, "extract_from_extension: extracted representation");
    Complexes cx(rep);
    QuadCochain img = cx.d_rlieder(pack(datum));
    Verdict cv;
    cv.check("D(Theta, xi, chi)", {}, img.flat());
    ensure(cv, "extract_from_extension: extracted datum");
    return {rep, datum};
}

CentralExtension central_extension(const ReynoldsLieAlgebra &base, const Matrix &r_v, const Cochain &theta,
                                   const Cochain &xi) {
    const int m = base.algebra.dim(), v = static_cast<int>(r_v.rows());
    check_matrix(r_v, sz(v), sz(v), "central_extension R_V");
    if (theta.degree() != 2 || xi.degree() != 1 || theta.dim_l() != m || xi.dim_l() != m || theta.dim_v() != v ||
        xi.dim_v() != v)
        throw ContractViolation("central_extension: expected theta: L^2 -> V and xi: L -> V");
    Verdict bv = jacobi_check(base.algebra);
    bv.merge(is_reynolds(base.algebra, base.r));
    require(bv, "central_extension: base is not a Reynolds Lie algebra");

    const int n = m + v;
    LieAlgebra hat(n);
    for (int a = 0; a < m; ++a)
        for (int b = a + 1; b < m; ++b) {
            Vector x = base.algebra.basis_bracket(a, b);
            Vector t = theta.eval_basis({a, b});
            x.insert(x.end(), t.begin(), t.end());
            hat.set_bracket(a, b, x);
        }
    Matrix r_hat(sz(n), sz(n));
    for (int a = 0; a < m; ++a) {
        Vector col = base.r.column(sz(a));
        Vector t = xi.value(sz(a));
        col.insert(col.end(), t.begin(), t.end());
        r_hat.set_column(sz(a), col);
    }
    for (int u = 0; u < v; ++u) {
        Vector col(sz(m));
        Vector t = r_v.column(sz(u));
        col.insert(col.end(), t.begin(), t.end());
        r_hat.set_column(sz(m + u), col);
    }
    Verdict hv = jacobi_check(hat);
    hv.merge(is_reynolds(hat, r_hat));
    require(hv, "central_extension: (theta, xi) does not define a Reynolds Lie algebra");

    const std::size_t um = sz(m), uv = sz(v);
    return {base,
            v,
            r_v,
            {hat, r_hat},
            vstack(Matrix::zero(um, uv), Matrix::identity(uv)),
            hstack(Matrix::identity(um), Matrix::zero(um, uv)),
            vstack(Matrix::identity(um), Matrix::zero(uv, um))};
}

CentralExtension with_section(const CentralExtension &e, const Matrix &gamma) {
    check_matrix(gamma, sz(e.dim_v), sz(e.base.algebra.dim()), "section shift");
    CentralExtension out = e;
    out.s = e.s + e.i * gamma;
    return out;
}

Verdict check_central(const CentralExtension &e) {
    check_matrix(e.r_v, sz(e.dim_v), sz(e.dim_v), "R_V");
    Verdict v = sequence_core(e.base.algebra, e.base.r, e.hat.algebra, e.hat.r, e.i, e.p, e.s, e.dim_v);
    v.merge(zero_matrix("R_V", e.hat.r * e.i - e.i * e.r_v));
    const int n = e.hat.algebra.dim();
    for (int u = 0; u < e.dim_v; ++u)
        for (int k = 0; k < n; ++k)
            v.check("central", {u, k}, e.hat.algebra.bracket(e.i.column(sz(u)), unit_vector(sz(n), sz(k))));
    return v;
}

RLDRep trivial_coefficients(const CentralExtension &e, const Matrix &d_v, const Matrix &d) {
    return {{trivial_rep(e.base.algebra, e.dim_v), e.base.r, e.r_v}, d, d_v};
}

ObstructionReport obstruction(const CentralExtension &e, const Matrix &d_v, const Matrix &d, Ob2Mode mode) {
    const int m = e.base.algebra.dim(), v = e.dim_v;
    check_matrix(d, sz(m), sz(m), "obstruction d");
    check_matrix(d_v, sz(v), sz(v), "obstruction d_V");
    Verdict pre = check_central(e);
    pre.merge(is_derivation(e.base.algebra, d));
    pre.merge(commutation_check(e.base.r, d, "R d = d R"));
    pre.merge(commutation_check(e.r_v, d_v, "R_V d_V = d_V R_V"));
    require(pre, "obstruction: preconditions");

    const LieAlgebra &hat = e.hat.algebra;
    Cochain psi(2, m, v), xi(1, m, v);
    const auto &pairs = increasing_tuples(m, 2);
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        int a = pairs[t][0], b = pairs[t][1];
        Vector x = hat.bracket(e.s.column(sz(a)), e.s.column(sz(b))) - e.s.apply(e.base.algebra.basis_bracket(a, b));
        psi.set_value(t, pull(e.i, x));
    }
    for (int a = 0; a < m; ++a)
        xi.set_value(sz(a), pull(e.i, e.hat.r.apply(e.s.column(sz(a))) - e.s.apply(e.base.r.column(sz(a)))));

    ObstructionReport rep{Cochain(2, m, v), Cochain(1, m, v), {}, mode};
    for (std::size_t t = 0; t < pairs.size(); ++t) {
        Vector ea = unit_vector(sz(m), sz(pairs[t][0])), eb = unit_vector(sz(m), sz(pairs[t][1]));
        Vector rest = psi.eval({d.apply(ea), eb}) + psi.eval({ea, d.apply(eb)});
        Vector val = mode == Ob2Mode::Split ? d_v.apply(psi.value(t)) - rest : d_v.apply(psi.value(t) - rest);
        rep.ob2.set_value(t, std::move(val));
    }
    for (int a = 0; a < m; ++a)
        rep.ob1.set_value(sz(a), d_v.apply(xi.value(sz(a))) - xi.eval({d.column(sz(a))}));

    Complexes cx(trivial_coefficients(e, d_v, d));
    PairCochain img = cx.d_r(rep.pair());
    rep.cocycle = cochain_residuals("delta_CE(ob2)", img.first);
    rep.cocycle.merge(cochain_residuals("-delta_R(ob1) - phi(ob2)", *img.second));
    return rep;
}

ExtensibilityReport extensibility(const CentralExtension &e, const Matrix &d_v, const Matrix &d) {
    ExtensibilityReport rep;
    rep.obstruction = obstruction(e, d_v, d);
    const int m = e.base.algebra.dim(), v = e.dim_v;
    Complexes cx(trivial_coefficients(e, d_v, d));

    // D_R(gamma, g) = (delta_CE gamma, -delta_R g - phi gamma) and delta_R
    // vanishes on degree 0 for trivial coefficients, so g plays no role
    Matrix d1 = cx.differential(ComplexKind::R, 1);
    const std::size_t ncols = Cochain::space_dim(1, m, v);
    auto x = solve(block(d1, 0, 0, d1.rows(), ncols), rep.obstruction.pair().flat());
    if (!x) {
        rep.note = rep.obstruction.cocycle.ok() ? "obstruction class is nontrivial"
                                                : "obstruction is not a cocycle";
        return rep;
    }
    Matrix gamma = linear_map(Cochain::from_flat(1, m, v, *x));
    Matrix u = splitting(e.i, e.p, e.s);
    Matrix d_hat = (e.s * d + e.i * gamma) * e.p + e.i * d_v * u;

    Verdict post = is_derivation(e.hat.algebra, d_hat);
    post.merge(commutation_check(e.hat.r, d_hat, "R_hat d_hat = d_hat R_hat"));
    post.merge(zero_matrix("p d_hat = d p", e.p * d_hat - d * e.p));
    post.merge(zero_matrix("d_hat i = i d_V", d_hat * e.i - e.i * d_v));
    ensure(post, "extensibility: assembled d_hat");

    rep.extensible = true;
    rep.gamma = gamma;
    rep.d_hat = d_hat;
    rep.note = "extensible";
    return rep;
}

} // namespace reylie
