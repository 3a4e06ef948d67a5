#include "reylie/products.hpp"

namespace reylie {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

Vector slice(const Vector &v, std::size_t from, std::size_t n) {
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + n));
}

Vector concat(const Vector &a, const Vector &b) {
    Vector out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

} // namespace

LieAlgebra semidirect_algebra(const Representation &rep) {
    check_shapes(rep);
    const int n = rep.algebra.dim(), m = rep.dim_v, total = n + m;
    LieAlgebra out(total);
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j) {
            Vector val;
            if (j < n)
                val = concat(rep.algebra.basis_bracket(i, j), zero_vector(sz(m)));
            else if (i < n)
                val = concat(zero_vector(sz(n)), rep.action[sz(i)].column(sz(j - n)));
            else
                val = zero_vector(sz(total));
            out.set_bracket(i, j, std::move(val));
        }
    return out;
}

ReynoldsLieAlgebra semidirect_product(const ReynoldsRep &rep) {
    require(check_reynolds_rep(rep), "semidirect_product: not a Reynolds representation");
    ReynoldsLieAlgebra out{semidirect_algebra(rep.base), block_diagonal(rep.r, rep.r_v)};
    ensure(is_reynolds(out.algebra, out.r), "semidirect_product");
    return out;
}

static void check_matched_shapes(const MatchedPairData &m) {
    check_shapes(m.rho_l);
    check_shapes(m.rho_g);
    if (!(m.rho_l.algebra == m.l) || m.rho_l.dim_v != m.g.dim() || !(m.rho_g.algebra == m.g) ||
        m.rho_g.dim_v != m.l.dim())
        throw ContractViolation("matched pair: actions do not match the algebras");
}

Verdict check_matched_pair(const MatchedPairData &m) {
    check_matched_shapes(m);
    require(check_rep(m.rho_l), "check_matched_pair: rho_L is not a representation");
    require(check_rep(m.rho_g), "check_matched_pair: rho_G is not a representation");
    Verdict v;
    const int nl = m.l.dim(), ng = m.g.dim();
    for (int x = 0; x < nl; ++x)
        for (int a = 0; a < ng; ++a)
            for (int b = a + 1; b < ng; ++b) {
                const Matrix &rx = m.rho_l.action[sz(x)];
                Vector ea = unit_vector(sz(ng), sz(a)), eb = unit_vector(sz(ng), sz(b));
                Vector res = rx.apply(m.g.basis_bracket(a, b));
                res -= m.g.bracket(rx.column(sz(a)), eb);
                res -= m.g.bracket(ea, rx.column(sz(b)));
                res += m.rho_l.rho(m.rho_g.action[sz(a)].column(sz(x))).column(sz(b));
                res -= m.rho_l.rho(m.rho_g.action[sz(b)].column(sz(x))).column(sz(a));
                v.check("matched-pair-L", {x, a, b}, std::move(res));
            }
    for (int a = 0; a < ng; ++a)
        for (int x = 0; x < nl; ++x)
            for (int y = x + 1; y < nl; ++y) {
                const Matrix &ra = m.rho_g.action[sz(a)];
                Vector ex = unit_vector(sz(nl), sz(x)), ey = unit_vector(sz(nl), sz(y));
                Vector res = ra.apply(m.l.basis_bracket(x, y));
                res -= m.l.bracket(ra.column(sz(x)), ey);
                res -= m.l.bracket(ex, ra.column(sz(y)));
                res += m.rho_g.rho(m.rho_l.action[sz(x)].column(sz(a))).column(sz(y));
                res -= m.rho_g.rho(m.rho_l.action[sz(y)].column(sz(a))).column(sz(x));
                v.check("matched-pair-G", {a, x, y}, std::move(res));
            }
    return v;
}

LieAlgebra bowtie_algebra(const MatchedPairData &m) {
    check_matched_shapes(m);
    const int nl = m.l.dim(), ng = m.g.dim(), total = nl + ng;
    auto bracket = [&](const Vector &p, const Vector &q) {
        Vector x = slice(p, 0, sz(nl)), a = slice(p, sz(nl), sz(ng));
        Vector y = slice(q, 0, sz(nl)), b = slice(q, sz(nl), sz(ng));
        Vector lpart = m.l.bracket(x, y) + m.rho_g.act(a, y) - m.rho_g.act(b, x);
        Vector gpart = m.g.bracket(a, b) + m.rho_l.act(x, b) - m.rho_l.act(y, a);
        return concat(lpart, gpart);
    };
    LieAlgebra out(total);
    for (int i = 0; i < total; ++i)
        for (int j = i + 1; j < total; ++j)
            out.set_bracket(i, j, bracket(unit_vector(sz(total), sz(i)), unit_vector(sz(total), sz(j))));
    return out;
}

BowtieResult bowtie(const MatchedPairData &m, const LinearOp &r_l, const LinearOp &r_g,
                    const std::optional<LinearOp> &d_l, const std::optional<LinearOp> &d_g) {
    require(check_matched_pair(m), "bowtie: not a matched pair");
    require(is_reynolds(m.l, r_l), "bowtie: R_L is not a Reynolds operator");
    require(is_reynolds(m.g, r_g), "bowtie: R_G is not a Reynolds operator");
    require(check_reynolds_rep({m.rho_l, r_l, r_g}), "bowtie: (G; rho_L, R_G) is not a Reynolds representation");
    require(check_reynolds_rep({m.rho_g, r_g, r_l}), "bowtie: (L; rho_G, R_L) is not a Reynolds representation");
    BowtieResult out{{bowtie_algebra(m), block_diagonal(r_l, r_g)}, std::nullopt, {}};
    ensure(jacobi_check(out.product.algebra), "bowtie");
    ensure(is_reynolds(out.product.algebra, out.product.r), "bowtie");
    if (d_l.has_value() != d_g.has_value())
        throw ContractViolation("bowtie: supply both derivations or neither");
    if (d_l) {
        require(is_reylieder({m.l, r_l, *d_l}), "bowtie: (L, R_L, d_L) is not a Reynolds LieDer pair");
        require(is_reylieder({m.g, r_g, *d_g}), "bowtie: (G, R_G, d_G) is not a Reynolds LieDer pair");
        out.d = block_diagonal(*d_l, *d_g);
        out.lieder = is_reylieder({out.product.algebra, out.product.r, *out.d});
    }
    return out;
}

} // namespace reylie
