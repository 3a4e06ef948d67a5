#include "reylie/cochain.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace reylie {

namespace {

std::size_t sz(int n) { return static_cast<std::size_t>(n); }

std::vector<int> without(const std::vector<int> &t, std::size_t i) {
    std::vector<int> out;
    out.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != i)
            out.push_back(t[k]);
    return out;
}

std::vector<int> without(const std::vector<int> &t, std::size_t i, std::size_t j) {
    std::vector<int> out;
    out.reserve(t.size());
    for (std::size_t k = 0; k < t.size(); ++k)
        if (k != i && k != j)
            out.push_back(t[k]);
    return out;
}

int sign_power(std::size_t e) { return e % 2 == 0 ? 1 : -1; }

void gen_tuples(int n, int k, int start, std::vector<int> &cur, std::vector<std::vector<int>> &out) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = start; i < n; ++i) {
        cur.push_back(i);
        gen_tuples(n, k, i + 1, cur, out);
        cur.pop_back();
    }
}

} // namespace

const std::vector<std::vector<int>> &increasing_tuples(int n, int k) {
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::vector<std::vector<int>>> cache;
    if (n < 0 || k < 0)
        throw ContractViolation("increasing_tuples: negative argument");
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, k});
    if (it == cache.end()) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        if (k <= n)
            gen_tuples(n, k, 0, cur, out);
        it = cache.emplace(std::make_pair(n, k), std::move(out)).first;
    }
    return it->second;
}

std::size_t tuple_rank(int n, const std::vector<int> &tuple) {
    const auto &all = increasing_tuples(n, static_cast<int>(tuple.size()));
    auto it = std::lower_bound(all.begin(), all.end(), tuple);
    if (it == all.end() || *it != tuple)
        throw ContractViolation("tuple_rank: not an increasing tuple of indices below " + std::to_string(n));
    return static_cast<std::size_t>(it - all.begin());
}

std::size_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    std::size_t r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * sz(n - k + i) / sz(i);
    return r;
}

// ---------------------------------------------------------------- Cochain

Cochain::Cochain(int degree, int dim_l, int dim_v) : degree_(degree), dim_l_(dim_l), dim_v_(dim_v) {
    if (degree < 0 || dim_l < 0 || dim_v < 0)
        throw ContractViolation("Cochain: negative degree or dimension");
    values_.assign(binomial(dim_l, degree), Vector(sz(dim_v)));
}

Cochain Cochain::from_flat(int degree, int dim_l, int dim_v, const Vector &flat) {
    Cochain c(degree, dim_l, dim_v);
    if (flat.size() != c.size() * sz(dim_v))
        throw ContractViolation("Cochain::from_flat: expected " + std::to_string(c.size() * sz(dim_v)) +
                                " coordinates, got " + std::to_string(flat.size()));
    for (std::size_t t = 0; t < c.size(); ++t)
        for (std::size_t k = 0; k < sz(dim_v); ++k)
            c.values_[t][k] = flat[t * sz(dim_v) + k];
    return c;
}

std::size_t Cochain::space_dim(int degree, int dim_l, int dim_v) {
    return degree < 0 ? 0 : binomial(dim_l, degree) * sz(dim_v);
}

void Cochain::set_value(std::size_t rank, Vector v) {
    if (v.size() != sz(dim_v_))
        throw ContractViolation("Cochain: value has wrong length");
    values_.at(rank) = std::move(v);
}

const Vector &Cochain::at(const std::vector<int> &tuple) const {
    if (static_cast<int>(tuple.size()) != degree_)
        throw ContractViolation("Cochain::at: tuple length differs from degree");
    return values_[tuple_rank(dim_l_, tuple)];
}

void Cochain::set(const std::vector<int> &tuple, Vector v) {
    if (static_cast<int>(tuple.size()) != degree_)
        throw ContractViolation("Cochain::set: tuple length differs from degree");
    set_value(tuple_rank(dim_l_, tuple), std::move(v));
}

Vector Cochain::eval_basis(std::vector<int> idx) const {
    if (static_cast<int>(idx.size()) != degree_)
        throw ContractViolation("Cochain::eval_basis: wrong number of arguments");
    int sign = 1;
    for (std::size_t i = 1; i < idx.size(); ++i)
        for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j])
                return Vector(sz(dim_v_));
            std::swap(idx[j - 1], idx[j]);
            sign = -sign;
        }
    for (auto i : idx)
        if (i < 0 || i >= dim_l_)
            throw ContractViolation("Cochain::eval_basis: index out of range");
    const Vector &v = values_[tuple_rank(dim_l_, idx)];
    return sign > 0 ? v : -v;
}

Vector Cochain::eval(const std::vector<Vector> &args) const {
    if (static_cast<int>(args.size()) != degree_)
        throw ContractViolation("Cochain::eval: wrong number of arguments");
    for (const auto &a : args)
        if (a.size() != sz(dim_l_))
            throw ContractViolation("Cochain::eval: argument dimension mismatch");
    Vector acc(sz(dim_v_));
    std::vector<int> idx(args.size());
    auto rec = [&](auto &self, std::size_t pos, const Scalar &coeff) -> void {
        if (pos == args.size()) {
            axpy(acc, coeff, eval_basis(idx));
            return;
        }
        for (int i = 0; i < dim_l_; ++i) {
            if (sgn(args[pos][sz(i)]) == 0)
                continue;
            if (std::find(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(pos), i) !=
                idx.begin() + static_cast<std::ptrdiff_t>(pos))
                continue;
            idx[pos] = i;
            self(self, pos + 1, Scalar(coeff * args[pos][sz(i)]));
        }
    };
    rec(rec, 0, Scalar(1));
    return acc;
}

Vector Cochain::flat() const {
    Vector out;
    out.reserve(values_.size() * sz(dim_v_));
    for (const auto &v : values_)
        out.insert(out.end(), v.begin(), v.end());
    return out;
}

bool Cochain::is_zero() const {
    for (const auto &v : values_)
        if (!reylie::is_zero(v))
            return false;
    return true;
}

void Cochain::check_compatible(const Cochain &o) const {
    if (degree_ != o.degree_ || dim_l_ != o.dim_l_ || dim_v_ != o.dim_v_)
        throw ContractViolation("Cochain: incompatible operands");
}

Cochain &Cochain::operator+=(const Cochain &o) {
    check_compatible(o);
    for (std::size_t t = 0; t < values_.size(); ++t)
        values_[t] += o.values_[t];
    return *this;
}

Cochain &Cochain::operator-=(const Cochain &o) {
    check_compatible(o);
    for (std::size_t t = 0; t < values_.size(); ++t)
        values_[t] -= o.values_[t];
    return *this;
}

Cochain operator+(Cochain a, const Cochain &b) { return a += b; }
Cochain operator-(Cochain a, const Cochain &b) { return a -= b; }
Cochain operator-(Cochain a) { return Scalar(-1) * std::move(a); }

Cochain operator*(const Scalar &c, Cochain a) {
    for (std::size_t t = 0; t < a.size(); ++t)
        a.set_value(t, c * a.value(t));
    return a;
}

// ------------------------------------------------------ composite cochains

Vector PairCochain::flat() const {
    Vector out = first.flat();
    if (second) {
        Vector s = second->flat();
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

Vector QuadCochain::flat() const {
    Vector out = main.flat();
    if (tail) {
        Vector s = tail->flat();
        out.insert(out.end(), s.begin(), s.end());
    }
    return out;
}

PairCochain zero_pair(int degree, int dim_l, int dim_v) {
    PairCochain p{Cochain(degree, dim_l, dim_v), std::nullopt};
    if (degree >= 1)
        p.second = Cochain(degree - 1, dim_l, dim_v);
    return p;
}

QuadCochain zero_quad(int degree, int dim_l, int dim_v) {
    QuadCochain q{zero_pair(degree, dim_l, dim_v), std::nullopt};
    if (degree >= 2)
        q.tail = zero_pair(degree - 1, dim_l, dim_v);
    return q;
}

std::size_t pair_space_dim(int degree, int dim_l, int dim_v) {
    if (degree < 0)
        return 0;
    return Cochain::space_dim(degree, dim_l, dim_v) + Cochain::space_dim(degree - 1, dim_l, dim_v);
}

std::size_t quad_space_dim(int degree, int dim_l, int dim_v) {
    if (degree < 0)
        return 0;
    return pair_space_dim(degree, dim_l, dim_v) + (degree >= 2 ? pair_space_dim(degree - 1, dim_l, dim_v) : 0);
}

static Vector take(const Vector &v, std::size_t from, std::size_t n) {
    if (from + n > v.size())
        throw ContractViolation("flat cochain vector too short");
    return Vector(v.begin() + static_cast<std::ptrdiff_t>(from), v.begin() + static_cast<std::ptrdiff_t>(from + n));
}

PairCochain pair_from_flat(int degree, int dim_l, int dim_v, const Vector &flat) {
    if (flat.size() != pair_space_dim(degree, dim_l, dim_v))
        throw ContractViolation("pair_from_flat: wrong number of coordinates");
    std::size_t n0 = Cochain::space_dim(degree, dim_l, dim_v);
    PairCochain p{Cochain::from_flat(degree, dim_l, dim_v, take(flat, 0, n0)), std::nullopt};
    if (degree >= 1)
        p.second = Cochain::from_flat(degree - 1, dim_l, dim_v, take(flat, n0, flat.size() - n0));
    return p;
}

QuadCochain quad_from_flat(int degree, int dim_l, int dim_v, const Vector &flat) {
    if (flat.size() != quad_space_dim(degree, dim_l, dim_v))
        throw ContractViolation("quad_from_flat: wrong number of coordinates");
    std::size_t n0 = pair_space_dim(degree, dim_l, dim_v);
    QuadCochain q{pair_from_flat(degree, dim_l, dim_v, take(flat, 0, n0)), std::nullopt};
    if (degree >= 2)
        q.tail = pair_from_flat(degree - 1, dim_l, dim_v, take(flat, n0, flat.size() - n0));
    return q;
}

PairCochain operator+(const PairCochain &a, const PairCochain &b) {
    if (a.second.has_value() != b.second.has_value())
        throw ContractViolation("PairCochain: incompatible operands");
    PairCochain out{a.first + b.first, std::nullopt};
    if (a.second)
        out.second = *a.second + *b.second;
    return out;
}

PairCochain operator*(const Scalar &c, const PairCochain &a) {
    PairCochain out{c * a.first, std::nullopt};
    if (a.second)
        out.second = c * *a.second;
    return out;
}

PairCochain operator-(const PairCochain &a, const PairCochain &b) { return a + Scalar(-1) * b; }

Cochain linear_cochain(const Matrix &m, int dim_l) {
    if (m.cols() != sz(dim_l))
        throw ContractViolation("linear_cochain: matrix has the wrong number of columns");
    Cochain c(1, dim_l, static_cast<int>(m.rows()));
    for (int j = 0; j < dim_l; ++j)
        c.set_value(sz(j), m.column(sz(j)));
    return c;
}

Matrix linear_map(const Cochain &f) {
    if (f.degree() != 1)
        throw ContractViolation("linear_map: degree-1 cochain expected");
    Matrix m(sz(f.dim_v()), sz(f.dim_l()));
    for (int j = 0; j < f.dim_l(); ++j)
        m.set_column(sz(j), f.value(sz(j)));
    return m;
}

Cochain bracket_cochain(const LieAlgebra &l) {
    Cochain c(2, l.dim(), l.dim());
    const auto &tuples = increasing_tuples(l.dim(), 2);
    for (std::size_t t = 0; t < tuples.size(); ++t)
        c.set_value(t, l.basis_bracket(tuples[t][0], tuples[t][1]));
    return c;
}

LieAlgebra algebra_from_cochain(const Cochain &mu) {
    if (mu.degree() != 2 || mu.dim_l() != mu.dim_v())
        throw ContractViolation("algebra_from_cochain: degree-2 cochain L x L -> L expected");
    LieAlgebra l(mu.dim_l());
    const auto &tuples = increasing_tuples(mu.dim_l(), 2);
    for (std::size_t t = 0; t < tuples.size(); ++t)
        l.set_bracket(tuples[t][0], tuples[t][1], mu.value(t));
    return l;
}

// ------------------------------------------------------------ operators

Cochain coboundary(const LieAlgebra &l, const std::vector<Matrix> &action, const Cochain &f) {
    if (f.dim_l() != l.dim() || action.size() != sz(l.dim()))
        throw ContractViolation("coboundary: cochain does not match the algebra");
    for (const auto &m : action)
        if (m.rows() != sz(f.dim_v()) || m.cols() != sz(f.dim_v()))
            throw ContractViolation("coboundary: action does not match the coefficient space");
    const int n = f.degree();
    Cochain out(n + 1, l.dim(), f.dim_v());
    const auto &tuples = increasing_tuples(l.dim(), n + 1);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto &x = tuples[t];
        Vector val(sz(f.dim_v()));
        for (std::size_t i = 0; i < x.size(); ++i) {
            // 1-based position i+1
            Vector term = action[sz(x[i])].apply(f.at(without(x, i)));
            axpy(val, Scalar(sign_power(i + 1 + sz(n))), term);
        }
        for (std::size_t i = 0; i < x.size(); ++i)
            for (std::size_t j = i + 1; j < x.size(); ++j) {
                Vector br = l.basis_bracket(x[i], x[j]);
                if (is_zero(br))
                    continue;
                std::vector<int> rest = without(x, i, j);
                std::vector<int> idx(rest.size() + 1);
                std::copy(rest.begin(), rest.end(), idx.begin() + 1);
                Vector term(sz(f.dim_v()));
                for (int k = 0; k < l.dim(); ++k) {
                    if (sgn(br[sz(k)]) == 0)
                        continue;
                    idx[0] = k;
                    axpy(term, br[sz(k)], f.eval_basis(idx));
                }
                axpy(val, Scalar(sign_power(i + 1 + j + 1 + sz(n) + 1)), term);
            }
        out.set_value(t, std::move(val));
    }
    return out;
}

Cochain delta_ce(const Representation &rep, const Cochain &f) {
    check_shapes(rep);
    return coboundary(rep.algebra, rep.action, f);
}

Cochain delta_r(const ReynoldsRep &rep, const Cochain &f) {
    InducedRep ind = induced_rep(rep);
    return coboundary(ind.rep.algebra, ind.rep.action, f);
}

Cochain phi(const ReynoldsRep &rep, const Cochain &f, PhiZeroMode mode) {
    check_shapes(rep);
    if (f.dim_l() != rep.base.algebra.dim() || f.dim_v() != rep.base.dim_v)
        throw ContractViolation("phi: cochain does not match the representation");
    const int n = f.degree();
    if (n == 0) {
        Cochain out = f;
        if (mode == PhiZeroMode::IdMinusRV)
            out.set_value(0, f.value(0) - rep.r_v.apply(f.value(0)));
        return out;
    }
    Cochain out(n, f.dim_l(), f.dim_v());
    const auto &tuples = increasing_tuples(f.dim_l(), n);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto &x = tuples[t];
        std::vector<Vector> rx;
        for (int i : x)
            rx.push_back(rep.r.column(sz(i)));
        Vector all_r = f.eval(rx);
        Vector sum(sz(f.dim_v()));
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::vector<Vector> args = rx;
            args[i] = unit_vector(sz(f.dim_l()), sz(x[i]));
            sum += f.eval(args);
        }
        Vector val = all_r - rep.r_v.apply(sum);
        axpy(val, Scalar(n - 1), rep.r_v.apply(all_r));
        out.set_value(t, std::move(val));
    }
    return out;
}

Cochain big_delta(const RLDRep &rep, const Cochain &f) {
    check_shapes(rep);
    if (f.dim_l() != rep.algebra().dim() || f.dim_v() != rep.rep().dim_v)
        throw ContractViolation("Delta: cochain does not match the representation");
    const int n = f.degree();
    Cochain out(n, f.dim_l(), f.dim_v());
    const auto &tuples = increasing_tuples(f.dim_l(), n);
    for (std::size_t t = 0; t < tuples.size(); ++t) {
        const auto &x = tuples[t];
        std::vector<Vector> args;
        for (int i : x)
            args.push_back(unit_vector(sz(f.dim_l()), sz(i)));
        Vector val = -rep.d_v.apply(f.value(t));
        for (std::size_t i = 0; i < x.size(); ++i) {
            std::vector<Vector> a = args;
            a[i] = rep.d.column(sz(x[i]));
            val += f.eval(a);
        }
        out.set_value(t, std::move(val));
    }
    return out;
}

PairCochain big_delta(const RLDRep &rep, const PairCochain &f) {
    PairCochain out{big_delta(rep, f.first), std::nullopt};
    if (f.second)
        out.second = big_delta(rep, *f.second);
    return out;
}

const char *to_string(ComplexKind k) {
    switch (k) {
    case ComplexKind::CE:
        return "ce";
    case ComplexKind::Reynolds:
        return "reynolds";
    case ComplexKind::R:
        return "r";
    case ComplexKind::RLieDer:
        return "rlieder";
    }
    return "?";
}

std::optional<ComplexKind> parse_complex_kind(const std::string &s) {
    for (auto k : {ComplexKind::CE, ComplexKind::Reynolds, ComplexKind::R, ComplexKind::RLieDer})
        if (s == to_string(k))
            return k;
    return std::nullopt;
}

// ------------------------------------------------------------ Complexes

Complexes::Complexes(RLDRep rld, Conventions conv) : rld_(std::move(rld)), conv_(conv) {
    check_shapes(rld_);
    if (validate(ComplexKind::Reynolds).ok())
        induced_ = induced_rep(rld_.base);
}

const InducedRep &Complexes::induced() const {
    if (!induced_)
        throw PreconditionFailure("induced structures unavailable", validate(ComplexKind::Reynolds));
    return *induced_;
}

Verdict Complexes::validate(ComplexKind kind) const {
    Verdict v = check_rep(rld_.rep());
    if (!v.ok() || kind == ComplexKind::CE)
        return v;
    v = is_reynolds(rld_.algebra(), rld_.base.r);
    if (!v.ok())
        return v;
    v = reynolds_rep_identity(rld_.base);
    if (!v.ok() || kind != ComplexKind::RLieDer)
        return v;
    v = is_reylieder(rld_.pair());
    if (!v.ok())
        return v;
    return check_rld_rep(rld_, conv_.compat);
}

Cochain Complexes::delta_ce(const Cochain &f) const { return coboundary(rld_.algebra(), rld_.rep().action, f); }

Cochain Complexes::delta_r(const Cochain &f) const {
    const auto &ind = induced();
    return coboundary(ind.rep.algebra, ind.rep.action, f);
}

Cochain Complexes::phi(const Cochain &f) const { return reylie::phi(rld_.base, f, conv_.phi_zero); }

Cochain Complexes::big_delta(const Cochain &f) const { return reylie::big_delta(rld_, f); }

PairCochain Complexes::big_delta(const PairCochain &f) const { return reylie::big_delta(rld_, f); }

PairCochain Complexes::d_r(const PairCochain &f) const {
    if (f.degree() >= 1 && !f.second)
        throw ContractViolation("D_R: pair cochain of positive degree needs a second component");
    Cochain second = -phi(f.first);
    if (f.second)
        second -= delta_r(*f.second);
    return {delta_ce(f.first), std::move(second)};
}

QuadCochain Complexes::d_rlieder(const QuadCochain &f) const {
    const int n = f.degree();
    if (n == 0)
        return zero_quad(1, dim_l(), dim_v());
    if (n >= 2 && !f.tail)
        throw ContractViolation("RLieDer differential: degree >= 2 needs a tail component");
    QuadCochain out{d_r(f.main), std::nullopt};
    PairCochain delta = big_delta(f.main);
    if (n == 1)
        out.tail = Scalar(-1) * delta;
    else
        out.tail = d_r(*f.tail) + Scalar(sign_power(sz(n))) * delta;
    return out;
}

std::size_t Complexes::space_dim(ComplexKind kind, int n) const {
    switch (kind) {
    case ComplexKind::CE:
    case ComplexKind::Reynolds:
        return Cochain::space_dim(n, dim_l(), dim_v());
    case ComplexKind::R:
        return pair_space_dim(n, dim_l(), dim_v());
    case ComplexKind::RLieDer:
        return quad_space_dim(n, dim_l(), dim_v());
    }
    return 0;
}

int Complexes::top_degree(ComplexKind kind) const {
    switch (kind) {
    case ComplexKind::CE:
    case ComplexKind::Reynolds:
        return dim_l();
    case ComplexKind::R:
        return dim_l() + 1;
    case ComplexKind::RLieDer:
        return dim_l() + 2;
    }
    return 0;
}

Matrix Complexes::differential(ComplexKind kind, int n) const {
    const std::size_t in = space_dim(kind, n), out = space_dim(kind, n + 1);
    if (n < 0 || in == 0 || out == 0)
        return Matrix(out, in);
    const int dl = dim_l(), dv = dim_v();
    switch (kind) {
    case ComplexKind::CE:
        return matrix_of(in, out, [&](const Vector &x) { return delta_ce(Cochain::from_flat(n, dl, dv, x)).flat(); });
    case ComplexKind::Reynolds:
        return matrix_of(in, out, [&](const Vector &x) { return delta_r(Cochain::from_flat(n, dl, dv, x)).flat(); });
    case ComplexKind::R:
        return matrix_of(in, out, [&](const Vector &x) { return d_r(pair_from_flat(n, dl, dv, x)).flat(); });
    case ComplexKind::RLieDer:
        return matrix_of(in, out, [&](const Vector &x) { return d_rlieder(quad_from_flat(n, dl, dv, x)).flat(); });
    }
    return Matrix(out, in);
}

Matrix Complexes::phi_matrix(int n) const {
    const std::size_t d = Cochain::space_dim(n, dim_l(), dim_v());
    return matrix_of(d, d, [&](const Vector &x) { return phi(Cochain::from_flat(n, dim_l(), dim_v(), x)).flat(); });
}

Matrix Complexes::big_delta_matrix(int n) const {
    const std::size_t d = Cochain::space_dim(n, dim_l(), dim_v());
    return matrix_of(d, d,
                     [&](const Vector &x) { return big_delta(Cochain::from_flat(n, dim_l(), dim_v(), x)).flat(); });
}

Matrix Complexes::big_delta_pair_matrix(int n) const {
    const std::size_t d = pair_space_dim(n, dim_l(), dim_v());
    return matrix_of(d, d,
                     [&](const Vector &x) { return big_delta(pair_from_flat(n, dim_l(), dim_v(), x)).flat(); });
}

// ------------------------------------------------------------ cohomology

CohomologyReport cohomology(const Complexes &cx, ComplexKind kind, int n) {
    require(cx.validate(kind), std::string("cohomology: structures invalid for the ") + to_string(kind) + " complex");
    if (n < 0)
        throw ContractViolation("cohomology: negative degree");
    CohomologyReport rep;
    rep.kind = kind;
    rep.degree = n;
    rep.dim_cochains = cx.space_dim(kind, n);
    rep.cocycle_basis = kernel_basis(cx.differential(kind, n));
    rep.dim_cocycles = rep.cocycle_basis.size();
    rep.dim_coboundaries = rank(cx.differential(kind, n - 1));
    rep.dim_h = rep.dim_cocycles - rep.dim_coboundaries;
    if (kind == ComplexKind::RLieDer && n == 0)
        rep.note = "degree-0 space taken as C^0_R with zero outgoing differential";
    else if (kind == ComplexKind::RLieDer && n == 1)
        rep.note = "no coboundaries: the degree-0 differential is zero";
    else if (kind == ComplexKind::R && n <= 1 && cx.conventions().phi_zero == PhiZeroMode::IdMinusRV)
        rep.note = "degree-0 phi taken as Id - R_V";
    return rep;
}

CohomologyReport cohomology(ComplexKind kind, const RLDRep &rld, int n, Conventions conv) {
    return cohomology(Complexes(rld, conv), kind, n);
}

std::optional<Vector> is_coboundary(const Complexes &cx, ComplexKind kind, int n, const Vector &c) {
    if (c.size() != cx.space_dim(kind, n))
        throw ContractViolation("is_coboundary: element has " + std::to_string(c.size()) + " coordinates, expected " +
                                std::to_string(cx.space_dim(kind, n)));
    if (n < 0)
        throw ContractViolation("is_coboundary: negative degree");
    return solve(cx.differential(kind, n - 1), c);
}

} // namespace reylie
