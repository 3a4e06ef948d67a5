#include "support/corpus.hpp"

#include <stdexcept>

using namespace reylie;

namespace corpus {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

oracle::IMat iblock(const oracle::IMat &a, const oracle::IMat &b) {
    oracle::IMat m{a.n + b.n, std::vector<oracle::i64>(sz((a.n + b.n) * (a.n + b.n)))};
    for (int r = 0; r < a.n; ++r)
        for (int c = 0; c < a.n; ++c)
            m.at(r, c) = a.at(r, c);
    for (int r = 0; r < b.n; ++r)
        for (int c = 0; c < b.n; ++c)
            m.at(a.n + r, a.n + c) = b.at(r, c);
    return m;
}

oracle::IMat irandom(std::mt19937 &rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    oracle::IMat m{n, std::vector<oracle::i64>(sz(n * n))};
    for (auto &e : m.a)
        e = dist(rng);
    return m;
}

std::vector<oracle::IMat> block_sums(std::mt19937 &rng, const std::vector<oracle::IMat> &a,
                                     const std::vector<oracle::IMat> &b, std::size_t count) {
    std::vector<oracle::IMat> out;
    for (std::size_t k = 0; k < count; ++k)
        out.push_back(iblock(a[rng() % a.size()], b[rng() % b.size()]));
    return out;
}

Matrix unflatten_square(const Vector &v, std::size_t offset, std::size_t n) {
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m(r, c) = v[offset + r * n + c];
    return m;
}

void append_columns(Vector &out, const Matrix &m) {
    for (auto &e : m.entries())
        out.push_back(e);
}

Representation affine_rep_on(const LieAlgebra &l) {
    // rho(e0) = E_01, rho(e1) = diag(0, 1); remaining basis vectors act by 0.
    Representation r = trivial_rep(l, 2);
    r.action[0] = Matrix::from_ints(2, 2, {0, 1, 0, 0});
    r.action[1] = Matrix::from_ints(2, 2, {0, 0, 0, 1});
    return r;
}

oracle::IRep affine_irep(int dim_l) {
    oracle::IRep r{2, std::vector<oracle::IMat>(sz(dim_l), oracle::IMat{2, {0, 0, 0, 0}})};
    r.rho[0] = {2, {0, 1, 0, 0}};
    r.rho[1] = {2, {0, 0, 0, 1}};
    return r;
}

} // namespace

LieAlgebra to_algebra(const oracle::IAlgebra &a) {
    LieAlgebra l(a.n);
    for (int i = 0; i < a.n; ++i)
        for (int j = i + 1; j < a.n; ++j) {
            Vector v;
            for (auto e : a.c[i][j])
                v.emplace_back(static_cast<long>(e));
            l.set_bracket(i, j, v);
        }
    return l;
}

Matrix to_matrix(const oracle::IMat &m) {
    Matrix out(sz(m.n), sz(m.n));
    for (int r = 0; r < m.n; ++r)
        for (int c = 0; c < m.n; ++c)
            out(sz(r), sz(c)) = static_cast<long>(m.at(r, c));
    return out;
}

Matrix random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols, int lo, int hi) {
    std::uniform_int_distribution<int> dist(lo, hi);
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = dist(rng);
    return m;
}

Matrix linear_system(std::size_t nvars, const std::function<Vector(const Vector &)> &f) {
    std::vector<Vector> cols;
    for (std::size_t k = 0; k < nvars; ++k)
        cols.push_back(f(unit_vector(nvars, k)));
    std::size_t rows = cols.empty() ? 0 : cols.front().size();
    return columns_matrix(rows, cols);
}

Vector random_combination(std::mt19937 &rng, const std::vector<Vector> &basis, std::size_t dim) {
    std::uniform_int_distribution<int> dist(-2, 2);
    Vector out(dim);
    for (const auto &b : basis)
        axpy(out, Scalar(dist(rng)), b);
    return out;
}

std::vector<Vector> derivation_pairs(const ReynoldsRep &rep) {
    const auto n = sz(rep.base.algebra.dim()), m = sz(rep.base.dim_v);
    const auto &l = rep.base.algebra;
    auto f = [&](const Vector &x) {
        Matrix d = unflatten_square(x, 0, n), dv = unflatten_square(x, n * n, m);
        Vector out;
        for (int i = 0; i < l.dim(); ++i)
            for (int j = i + 1; j < l.dim(); ++j) {
                Vector r = d.apply(l.basis_bracket(i, j)) - l.bracket(d.column(sz(i)), unit_vector(n, sz(j))) -
                           l.bracket(unit_vector(n, sz(i)), d.column(sz(j)));
                out.insert(out.end(), r.begin(), r.end());
            }
        append_columns(out, rep.r * d - d * rep.r);
        append_columns(out, rep.r_v * dv - dv * rep.r_v);
        for (int i = 0; i < l.dim(); ++i)
            append_columns(out, dv * rep.base.action[sz(i)] - rep.base.action[sz(i)] * dv - rep.base.rho(d.column(sz(i))));
        return out;
    };
    return kernel_basis(linear_system(n * n + m * m, f));
}

RLDRep with_random_derivations(std::mt19937 &rng, const ReynoldsRep &rep) {
    const auto n = sz(rep.base.algebra.dim()), m = sz(rep.base.dim_v);
    Vector x = random_combination(rng, derivation_pairs(rep), n * n + m * m);
    return {rep, unflatten_square(x, 0, n), unflatten_square(x, n * n, m)};
}

const std::vector<AlgebraFamily> &families() {
    static const std::vector<AlgebraFamily> all = [] {
        std::mt19937 rng(7);
        std::vector<AlgebraFamily> f;
        auto add = [&](std::string name, oracle::IAlgebra a, std::vector<oracle::IMat> rs) {
            for (const auto &r : rs)
                if (!oracle::reynolds(a, r))
                    throw std::logic_error("corpus: non-Reynolds operator in family " + name);
            f.push_back({std::move(name), std::move(a), std::move(rs)});
        };
        add("abelian1", oracle::abelian(1), oracle::reynolds_operators(oracle::abelian(1), -2, 2));
        add("abelian2", oracle::abelian(2), oracle::reynolds_operators(oracle::abelian(2), -1, 1));
        {
            std::vector<oracle::IMat> rs;
            for (int k = 0; k < 20; ++k)
                rs.push_back(irandom(rng, 3, -1, 1));
            add("abelian3", oracle::abelian(3), rs);
            rs.clear();
            for (int k = 0; k < 20; ++k)
                rs.push_back(irandom(rng, 4, -1, 1));
            add("abelian4", oracle::abelian(4), rs);
        }
        auto aff = oracle::affine_plane();
        auto heis = oracle::heisenberg();
        auto aff_ops = oracle::reynolds_operators(aff, -2, 2);
        auto heis_ops = oracle::reynolds_operators(heis, -1, 1);
        auto one_ops = oracle::reynolds_operators(oracle::abelian(1), -1, 1);
        add("aff2", aff, aff_ops);
        add("heis", heis, heis_ops);
        auto aff1 = oracle::direct_sum(aff, oracle::abelian(1));
        auto aff1_ops = oracle::reynolds_operators(aff1, -1, 1);
        add("aff2+1", aff1, aff1_ops);
        add("heis+1", oracle::direct_sum(heis, oracle::abelian(1)), block_sums(rng, heis_ops, one_ops, 30));
        add("aff2+aff2", oracle::direct_sum(aff, aff), block_sums(rng, aff_ops, aff_ops, 30));
        add("aff2+1+1", oracle::direct_sum(aff1, oracle::abelian(1)), block_sums(rng, aff1_ops, one_ops, 30));
        return f;
    }();
    return all;
}

std::vector<Instance> build(unsigned seed, std::size_t min_size) {
    std::mt19937 rng(seed);
    std::vector<Instance> out;
    auto push = [&](std::string name, const ReynoldsRep &rep) {
        RLDRep rld = with_random_derivations(rng, rep);
        Verdict v = check_rld_rep(rld);
        if (!v.ok())
            throw std::logic_error("corpus: invalid instance " + name + ": " + v.summary());
        out.push_back({std::move(name), std::move(rld)});
    };
    for (int round = 0; out.size() < min_size || round == 0; ++round) {
        for (const auto &fam : families()) {
            LieAlgebra l = to_algebra(fam.algebra);
            const int n = l.dim();
            for (int pick = 0; pick < 2; ++pick) {
                std::size_t idx = rng() % fam.reynolds.size();
                Matrix r = to_matrix(fam.reynolds[idx]);
                std::string base = fam.name + "/R" + std::to_string(idx);
                if (n <= 3)
                    push(base + "/adjoint", {adjoint_action(l), r, r});
                push(base + "/trivial1", {trivial_rep(l, 1), r, random_matrix(rng, 1, 1, -1, 2)});
                push(base + "/trivial2", {trivial_rep(l, 2), r, random_matrix(rng, 2, 2, -1, 1)});
                if (fam.name.rfind("aff2", 0) == 0) {
                    auto irep = affine_irep(n);
                    auto rvs = oracle::grid_search(2, -1, 1, [&](const oracle::IMat &m) {
                        return oracle::reynolds_rep(fam.algebra, fam.reynolds[idx], irep, m);
                    });
                    if (!rvs.empty())
                        push(base + "/affine", {affine_rep_on(l), r, to_matrix(rvs[rng() % rvs.size()])});
                }
                if (n <= 2) {
                    ReynoldsRep adj{adjoint_action(l), r, r};
                    ReynoldsRep triv{trivial_rep(l, 1), r, random_matrix(rng, 1, 1, -1, 1)};
                    push(base + "/adjoint+trivial1", direct_sum_rep({adj, triv}));
                }
            }
        }
    }
    return out;
}

std::vector<ReynoldsLieDerPair> pairs(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    std::vector<ReynoldsLieDerPair> out;
    std::vector<const AlgebraFamily *> small;
    for (const auto &f : families())
        if (f.algebra.n <= 3)
            small.push_back(&f);
    while (out.size() < count) {
        const auto &fam = *small[rng() % small.size()];
        LieAlgebra l = to_algebra(fam.algebra);
        Matrix r = to_matrix(fam.reynolds[rng() % fam.reynolds.size()]);
        const auto n = sz(l.dim());
        auto f = [&](const Vector &x) {
            Matrix d = unflatten_square(x, 0, n);
            Vector res;
            append_columns(res, r * d - d * r);
            for (int i = 0; i < l.dim(); ++i)
                for (int j = i + 1; j < l.dim(); ++j) {
                    Vector e = d.apply(l.basis_bracket(i, j)) - l.bracket(d.column(sz(i)), unit_vector(n, sz(j))) -
                               l.bracket(unit_vector(n, sz(i)), d.column(sz(j)));
                    res.insert(res.end(), e.begin(), e.end());
                }
            return res;
        };
        Vector x = random_combination(rng, kernel_basis(linear_system(n * n, f)), n * n);
        out.push_back({l, r, unflatten_square(x, 0, n)});
    }
    return out;
}

std::vector<Vector> slot_free_cocycles(const Complexes &cx) {
    Matrix d2 = cx.differential(ComplexKind::RLieDer, 2);
    std::size_t slot = sz(cx.dim_v());
    auto k = kernel_basis(block(d2, 0, 0, d2.rows(), d2.cols() - slot));
    for (auto &v : k)
        v.resize(d2.cols());
    return k;
}

std::vector<ExtensionCase> extension_cases(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    auto instances = build(seed, 60);
    std::vector<ExtensionCase> out;
    std::uniform_int_distribution<int> coin(0, 3);
    for (std::size_t k = 0; out.size() < count; ++k) {
        const auto &inst = instances[k % instances.size()];
        Complexes cx(inst.rld);
        const int m = cx.dim_l(), v = cx.dim_v();
        const std::size_t dim = quad_space_dim(2, m, v);
        Vector flat(dim);
        bool sampled = out.size() % 2 == 0;
        if (sampled) {
            flat = random_combination(rng, slot_free_cocycles(cx), dim);
        } else {
            // sparse random entries, so that some unconstrained data are valid
            for (std::size_t j = 0; j + sz(v) < dim; ++j)
                if (coin(rng) == 0)
                    flat[j] = static_cast<int>(rng() % 3) - 1;
        }
        out.push_back({inst.name, inst.rld, unpack(quad_from_flat(2, m, v, flat)), sampled});
    }
    return out;
}

std::vector<CentralCase> central_cases(unsigned seed, std::size_t count) {
    std::mt19937 rng(seed);
    auto bases = pairs(seed, count);
    std::vector<CentralCase> out;
    for (std::size_t k = 0; k < bases.size(); ++k) {
        const auto &b = bases[k];
        const int m = b.algebra.dim();
        const int v = 1 + static_cast<int>(rng() % 2);
        const std::size_t uv = sz(v);
        Matrix r_v = random_matrix(rng, uv, uv, -1, 1);

        auto commutant = [&](const Vector &x) {
            Matrix dv = unflatten_square(x, 0, uv);
            Vector res;
            append_columns(res, r_v * dv - dv * r_v);
            return res;
        };
        Matrix d_v = unflatten_square(random_combination(rng, kernel_basis(linear_system(uv * uv, commutant)), uv * uv),
                                      0, uv);
        RLDRep triv{{trivial_rep(b.algebra, v), b.r, r_v}, b.d, d_v};
        Complexes cx(triv);
        Vector tx = k % 5 == 0 ? Vector(pair_space_dim(2, m, v))
                               : random_combination(rng, kernel_basis(cx.differential(ComplexKind::R, 2)),
                                                    pair_space_dim(2, m, v));
        PairCochain theta_xi = pair_from_flat(2, m, v, tx);
        CentralExtension e = central_extension({b.algebra, b.r}, r_v, theta_xi.first, *theta_xi.second);
        if (k % 3 == 1)
            e = with_section(e, random_matrix(rng, uv, sz(m), -1, 1));
        out.push_back({"central" + std::to_string(k) + "/dimV" + std::to_string(v), e, d_v, b.d});
    }
    return out;
}

} // namespace corpus
