#include "reylie/deform.hpp"

namespace reylie {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

std::string label(int m, const char *identity) { return "order " + std::to_string(m) + ": " + identity; }

Vector eval2(const Cochain &mu, const Vector &a, const Vector &b) { return mu.eval({a, b}); }

void check_square(const Matrix &m, std::size_t n, const char *what) {
    if (m.rows() != n || m.cols() != n)
        throw ContractViolation(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix");
}

void check_base(const ReynoldsLieDerPair &p, const std::string &what) {
    require(is_reylieder(p), what + ": base is not a Reynolds LieDer pair");
}

Verdict cochain_residuals(const std::string &identity, const Cochain &c) {
    Verdict v;
    const auto &tuples = increasing_tuples(c.dim_l(), c.degree());
    for (std::size_t t = 0; t < c.size(); ++t)
        v.check(identity, tuples[t], c.value(t));
    return v;
}

} // namespace

Cochain DeformationTruncation::mu_at(int k) const {
    if (k == 0)
        return bracket_cochain(base.algebra);
    if (k <= order && sz(k) <= mu.size())
        return mu[sz(k - 1)];
    return Cochain(2, base.algebra.dim(), base.algebra.dim());
}

Matrix DeformationTruncation::r_at(int k) const {
    if (k == 0)
        return base.r;
    if (k <= order && sz(k) <= rs.size())
        return rs[sz(k - 1)];
    return Matrix::zero(sz(base.algebra.dim()), sz(base.algebra.dim()));
}

Matrix DeformationTruncation::d_at(int k) const {
    if (k == 0)
        return base.d;
    if (k <= order && sz(k) <= ds.size())
        return ds[sz(k - 1)];
    return Matrix::zero(sz(base.algebra.dim()), sz(base.algebra.dim()));
}

DeformationTruncation trivial_truncation(const ReynoldsLieDerPair &base, int order) {
    const int n = base.algebra.dim();
    DeformationTruncation t{base, order, {}, {}, {}};
    for (int k = 0; k < order; ++k) {
        t.mu.emplace_back(2, n, n);
        t.rs.push_back(Matrix::zero(sz(n), sz(n)));
        t.ds.push_back(Matrix::zero(sz(n), sz(n)));
    }
    return t;
}

void check_shapes(const DeformationTruncation &t) {
    const int n = t.base.algebra.dim();
    if (t.order < 1)
        throw ContractViolation("deformation order must be at least 1");
    if (t.mu.size() != sz(t.order) || t.rs.size() != sz(t.order) || t.ds.size() != sz(t.order))
        throw ContractViolation("deformation: expected " + std::to_string(t.order) + " terms of each kind");
    check_square(t.base.r, sz(n), "deformation base R");
    check_square(t.base.d, sz(n), "deformation base d");
    for (int k = 0; k < t.order; ++k) {
        const auto &m = t.mu[sz(k)];
        if (m.degree() != 2 || m.dim_l() != n || m.dim_v() != n)
            throw ContractViolation("deformation: mu_" + std::to_string(k + 1) + " must be a cochain L x L -> L");
        check_square(t.rs[sz(k)], sz(n), "deformation R_i");
        check_square(t.ds[sz(k)], sz(n), "deformation d_i");
    }
}

Matrix EquivalenceSeries::psi_at(int k, std::size_t n) const {
    if (k == 0)
        return Matrix::identity(n);
    if (k <= order && sz(k) <= psis.size()) {
        check_square(psis[sz(k - 1)], n, "equivalence psi_i");
        return psis[sz(k - 1)];
    }
    return Matrix::zero(n, n);
}

EquivalenceSeries inverse_series(const EquivalenceSeries &e, std::size_t n) {
    // sum_{k=0}^m psi_k chi_{m-k} = 0 for m >= 1
    std::vector<Matrix> chi{Matrix::identity(n)};
    for (int m = 1; m <= e.order; ++m) {
        Matrix c = Matrix::zero(n, n);
        for (int k = 1; k <= m; ++k)
            c = c - e.psi_at(k, n) * chi[sz(m - k)];
        chi.push_back(c);
    }
    return {e.order, std::vector<Matrix>(chi.begin() + 1, chi.end())};
}

Verdict validate_truncation(const DeformationTruncation &t) {
    check_shapes(t);
    check_base(t.base, "validate_truncation");
    const int n = t.base.algebra.dim(), order = t.order;
    std::vector<Cochain> mu;
    std::vector<Matrix> r, d;
    for (int k = 0; k <= order; ++k) {
        mu.push_back(t.mu_at(k));
        r.push_back(t.r_at(k));
        d.push_back(t.d_at(k));
    }
    auto e = [&](int i) { return unit_vector(sz(n), sz(i)); };

    Verdict v;
    for (int m = 1; m <= order; ++m) {
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                for (int c = b + 1; c < n; ++c) {
                    Vector res(sz(n));
                    for (int i = 0; i <= m; ++i) {
                        const int j = m - i;
                        res += eval2(mu[sz(i)], eval2(mu[sz(j)], e(a), e(b)), e(c));
                        res += eval2(mu[sz(i)], eval2(mu[sz(j)], e(b), e(c)), e(a));
                        res += eval2(mu[sz(i)], eval2(mu[sz(j)], e(c), e(a)), e(b));
                    }
                    v.check(label(m, "jacobi"), {a, b, c}, res);
                }

        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Vector res(sz(n));
                for (int i = 0; i <= m; ++i)
                    for (int j = 0; i + j <= m; ++j) {
                        const int k = m - i - j;
                        // mu_i(R_j a, R_k b)
                        res += eval2(mu[sz(i)], r[sz(j)].column(sz(a)), r[sz(k)].column(sz(b)));
                        // R_i mu_j(R_k a, b) + R_i mu_j(a, R_k b)
                        Vector inner = eval2(mu[sz(j)], r[sz(k)].column(sz(a)), e(b)) +
                                       eval2(mu[sz(j)], e(a), r[sz(k)].column(sz(b)));
                        res -= r[sz(i)].apply(inner);
                        for (int k2 = 0; i + j + k2 <= m; ++k2) {
                            const int p = m - i - j - k2;
                            res += r[sz(i)].apply(eval2(mu[sz(j)], r[sz(k2)].column(sz(a)), r[sz(p)].column(sz(b))));
                        }
                    }
                v.check(label(m, "reynolds"), {a, b}, res);
            }

        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                Vector res(sz(n));
                for (int i = 0; i <= m; ++i) {
                    const int j = m - i;
                    res += d[sz(i)].apply(eval2(mu[sz(j)], e(a), e(b)));
                    res -= eval2(mu[sz(j)], d[sz(i)].column(sz(a)), e(b));
                    res -= eval2(mu[sz(j)], e(a), d[sz(i)].column(sz(b)));
                }
                v.check(label(m, "derivation"), {a, b}, res);
            }

        Matrix comm = Matrix::zero(sz(n), sz(n));
        for (int i = 0; i <= m; ++i)
            comm = comm + r[sz(i)] * d[sz(m - i)] - d[sz(i)] * r[sz(m - i)];
        for (int j = 0; j < n; ++j)
            v.check(label(m, "commutation"), {j}, comm.column(sz(j)));
    }
    return v;
}

QuadCochain infinitesimal(const DeformationTruncation &t) {
    check_shapes(t);
    const int n = t.base.algebra.dim();
    return {PairCochain{t.mu_at(1), linear_cochain(t.r_at(1), n)},
            PairCochain{linear_cochain(t.d_at(1), n), Cochain(0, n, n)}};
}

DeformationTruncation order1_truncation(const ReynoldsLieDerPair &base, const QuadCochain &c) {
    const int n = base.algebra.dim();
    if (c.degree() != 2 || !c.tail || !c.main.second || c.main.first.dim_l() != n || c.main.first.dim_v() != n)
        throw ContractViolation("order1_truncation: degree-2 element with adjoint coefficients expected");
    if (!c.tail->second->is_zero())
        throw ContractViolation("order1_truncation: degree-0 slot must vanish");
    return {base, 1, {c.main.first}, {linear_map(*c.main.second)}, {linear_map(c.tail->first)}};
}

Verdict infinitesimal_is_cocycle(const DeformationTruncation &t) {
    check_shapes(t);
    check_base(t.base, "infinitesimal_is_cocycle");
    Complexes cx(adjoint_rep(t.base));
    QuadCochain out = cx.d_rlieder(infinitesimal(t));
    Verdict v = cochain_residuals("delta_CE(mu1)", out.main.first);
    v.merge(cochain_residuals("-delta_R(R1) - phi(mu1)", *out.main.second));
    v.merge(cochain_residuals("delta_CE(d1) + Delta(mu1)", out.tail->first));
    v.merge(cochain_residuals("Delta(R1) - phi(d1)", *out.tail->second));
    return v;
}

QuadCochain psi_cochain(const Matrix &psi1, int dim_l) {
    check_square(psi1, sz(dim_l), "psi_1");
    return {PairCochain{linear_cochain(psi1, dim_l), Cochain(0, dim_l, dim_l)}, std::nullopt};
}

DeformationTruncation transport_equivalence(const DeformationTruncation &t, const EquivalenceSeries &e) {
    check_shapes(t);
    check_base(t.base, "transport_equivalence");
    const int n = t.base.algebra.dim(), order = t.order;
    const std::size_t un = sz(n);
    std::vector<Matrix> psi, chi{Matrix::identity(un)};
    for (int k = 0; k <= order; ++k)
        psi.push_back(e.psi_at(k, un));
    EquivalenceSeries full{order, std::vector<Matrix>(psi.begin() + 1, psi.end())};
    EquivalenceSeries inv = inverse_series(full, un);
    for (int k = 1; k <= order; ++k)
        chi.push_back(inv.psis[sz(k - 1)]);

    std::vector<Cochain> mu;
    std::vector<Matrix> r, d;
    for (int k = 0; k <= order; ++k) {
        mu.push_back(t.mu_at(k));
        r.push_back(t.r_at(k));
        d.push_back(t.d_at(k));
    }

    DeformationTruncation out{t.base, order, {}, {}, {}};
    const auto &pairs = increasing_tuples(n, 2);
    for (int m = 1; m <= order; ++m) {
        Cochain mm(2, n, n);
        for (std::size_t q = 0; q < pairs.size(); ++q) {
            Vector val(un);
            for (int i = 0; i <= m; ++i)
                for (int j = 0; i + j <= m; ++j)
                    for (int k = 0; i + j + k <= m; ++k) {
                        const int l = m - i - j - k;
                        Vector x = psi[sz(k)].column(sz(pairs[q][0])), y = psi[sz(l)].column(sz(pairs[q][1]));
                        val += chi[sz(i)].apply(eval2(mu[sz(j)], x, y));
                    }
            mm.set_value(q, std::move(val));
        }
        Matrix rm = Matrix::zero(un, un), dm = Matrix::zero(un, un);
        for (int i = 0; i <= m; ++i)
            for (int j = 0; i + j <= m; ++j) {
                const int k = m - i - j;
                rm = rm + chi[sz(i)] * r[sz(j)] * psi[sz(k)];
                dm = dm + chi[sz(i)] * d[sz(j)] * psi[sz(k)];
            }
        out.mu.push_back(std::move(mm));
        out.rs.push_back(std::move(rm));
        out.ds.push_back(std::move(dm));
    }

    Complexes cx(adjoint_rep(t.base));
    Vector expect = cx.d_rlieder(psi_cochain(psi[1], n)).flat();
    Vector change = infinitesimal(out).flat() - infinitesimal(t).flat();
    Verdict post;
    post.check("order-1 change - D(psi_1)", {}, change - expect);
    ensure(post, "transport_equivalence");
    return out;
}

RigidityReport rigidity_probe(const ReynoldsLieDerPair &p, const std::optional<DeformationTruncation> &t) {
    check_base(p, "rigidity_probe");
    const int n = p.algebra.dim();
    Complexes cx(adjoint_rep(p));
    RigidityReport rep;
    rep.h2 = cohomology(cx, ComplexKind::RLieDer, 2);
    rep.rigid = rep.h2.dim_h == 0;
    if (!t) {
        rep.note = rep.rigid ? "H^2 vanishes: every infinitesimal is a coboundary"
                             : "H^2 is nonzero";
        return rep;
    }
    if (!(t->base.algebra == p.algebra && t->base.r == p.r && t->base.d == p.d))
        throw ContractViolation("rigidity_probe: truncation is over a different pair");
    rep.infinitesimal_is_cocycle = infinitesimal_is_cocycle(*t).ok();
    Vector c = infinitesimal(*t).flat();
    rep.class_trivial = is_coboundary(cx, ComplexKind::RLieDer, 2, c).has_value();

    // preimages of the form (psi_1, 0): the degree-0 slot of a degree-1
    // element is not part of an equivalence
    Matrix d1 = cx.differential(ComplexKind::RLieDer, 1);
    const std::size_t ncols = Cochain::space_dim(1, n, n);
    auto x = solve(block(d1, 0, 0, d1.rows(), ncols), c);
    if (!x) {
        if (!*rep.infinitesimal_is_cocycle)
            rep.note = "infinitesimal is not a cocycle";
        else if (*rep.class_trivial)
            rep.note = "infinitesimal is a coboundary only through the degree-0 slot; no psi_1 witness";
        else
            rep.note = "infinitesimal is a cocycle outside the coboundaries; no witness";
        return rep;
    }
    Matrix psi1 = linear_map(Cochain::from_flat(1, n, n, *x));
    DeformationTruncation first{t->base, 1, {t->mu_at(1)}, {t->r_at(1)}, {t->d_at(1)}};
    DeformationTruncation moved = transport_equivalence(first, {1, {Scalar(-1) * psi1}});
    rep.witness = psi1;
    rep.witness_verified = is_zero(infinitesimal(moved).flat());
    rep.note = rep.witness_verified ? "psi_1 witness found and verified by transport"
                                    : "psi_1 witness found but transport check failed";
    return rep;
}

} // namespace reylie
