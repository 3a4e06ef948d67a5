#include "reylie/lie.hpp"

#include <string>

namespace reylie {

LieAlgebra::LieAlgebra(int dim) : dim_(dim) {
    if (dim < 0)
        throw ContractViolation("negative dimension");
    table_.assign(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim > 0 ? dim - 1 : 0) / 2,
                  Vector(static_cast<std::size_t>(dim)));
}

LieAlgebra LieAlgebra::abelian(int dim) { return LieAlgebra(dim); }

LieAlgebra LieAlgebra::heisenberg() {
    LieAlgebra l(3);
    l.set_bracket(0, 1, unit_vector(3, 2));
    return l;
}

LieAlgebra LieAlgebra::affine_plane() {
    LieAlgebra l(2);
    l.set_bracket(0, 1, unit_vector(2, 0));
    return l;
}

LieAlgebra LieAlgebra::direct_sum(const LieAlgebra &a, const LieAlgebra &b) {
    const int n = a.dim() + b.dim();
    LieAlgebra s(n);
    for (int i = 0; i < a.dim(); ++i)
        for (int j = i + 1; j < a.dim(); ++j) {
            Vector v(n);
            auto ab = a.basis_bracket(i, j);
            for (int k = 0; k < a.dim(); ++k)
                v[k] = ab[k];
            s.set_bracket(i, j, v);
        }
    for (int i = 0; i < b.dim(); ++i)
        for (int j = i + 1; j < b.dim(); ++j) {
            Vector v(n);
            auto bb = b.basis_bracket(i, j);
            for (int k = 0; k < b.dim(); ++k)
                v[a.dim() + k] = bb[k];
            s.set_bracket(a.dim() + i, a.dim() + j, v);
        }
    return s;
}

void LieAlgebra::check_index(int i) const {
    if (i < 0 || i >= dim_)
        throw ContractViolation("basis index " + std::to_string(i) + " out of range for dimension " +
                                std::to_string(dim_));
}

std::size_t LieAlgebra::pair_index(int i, int j) const {
    // rank of (i,j), i<j, among lexicographically ordered pairs
    return static_cast<std::size_t>(i * dim_ - i * (i + 1) / 2 + (j - i - 1));
}

void LieAlgebra::set_bracket(int i, int j, Vector value) {
    check_index(i);
    check_index(j);
    if (value.size() != static_cast<std::size_t>(dim_))
        throw ContractViolation("bracket value has wrong length");
    if (i == j) {
        if (!is_zero(value))
            throw ContractViolation("[e_i, e_i] must vanish");
        return;
    }
    if (i > j) {
        std::swap(i, j);
        value = -value;
    }
    table_[pair_index(i, j)] = std::move(value);
}

Vector LieAlgebra::basis_bracket(int i, int j) const {
    check_index(i);
    check_index(j);
    if (i == j)
        return Vector(static_cast<std::size_t>(dim_));
    if (i < j)
        return table_[pair_index(i, j)];
    return -table_[pair_index(j, i)];
}

Vector LieAlgebra::bracket(const Vector &x, const Vector &y) const {
    if (x.size() != static_cast<std::size_t>(dim_) || y.size() != static_cast<std::size_t>(dim_))
        throw ContractViolation("bracket: argument dimension mismatch");
    Vector out(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (int j = 0; j < dim_; ++j) {
            if (i == j || sgn(y[j]) == 0)
                continue;
            const Vector &c = table_[i < j ? pair_index(i, j) : pair_index(j, i)];
            Scalar coeff = x[i] * y[j];
            if (i > j)
                coeff = -coeff;
            axpy(out, coeff, c);
        }
    }
    return out;
}

bool LieAlgebra::is_abelian() const {
    for (const auto &v : table_)
        if (!is_zero(v))
            return false;
    return true;
}

Matrix LieAlgebra::ad(int i) const {
    Matrix m(static_cast<std::size_t>(dim_), static_cast<std::size_t>(dim_));
    for (int j = 0; j < dim_; ++j)
        m.set_column(static_cast<std::size_t>(j), basis_bracket(i, j));
    return m;
}

void check_endomorphism(const LieAlgebra &l, const LinearOp &op, const char *what) {
    auto n = static_cast<std::size_t>(l.dim());
    if (op.rows() != n || op.cols() != n)
        throw ContractViolation(std::string(what) + ": expected a " + std::to_string(n) + "x" + std::to_string(n) +
                                " matrix, got " + std::to_string(op.rows()) + "x" + std::to_string(op.cols()));
}

Verdict jacobi_check(const LieAlgebra &l) {
    Verdict v;
    const int n = l.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                auto ei = unit_vector(n, i), ej = unit_vector(n, j), ek = unit_vector(n, k);
                Vector r = l.bracket(l.basis_bracket(i, j), ek);
                r += l.bracket(l.basis_bracket(j, k), ei);
                r += l.bracket(l.basis_bracket(k, i), ej);
                v.check("jacobi", {i, j, k}, std::move(r));
            }
    return v;
}

Verdict is_derivation(const LieAlgebra &l, const LinearOp &d) {
    check_endomorphism(l, d, "is_derivation");
    Verdict v;
    const int n = l.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vector r = d.apply(l.basis_bracket(i, j));
            r -= l.bracket(d.column(i), unit_vector(n, j));
            r -= l.bracket(unit_vector(n, i), d.column(j));
            v.check("derivation", {i, j}, std::move(r));
        }
    return v;
}

Verdict is_reynolds(const LieAlgebra &l, const LinearOp &r, ReynoldsForm form) {
    check_endomorphism(l, r, "is_reynolds");
    Verdict v;
    const int n = l.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            auto x = unit_vector(n, i), y = unit_vector(n, j);
            auto rx = r.column(i), ry = r.column(j);
            Vector lhs = l.bracket(rx, ry);
            Vector inner = form == ReynoldsForm::Standard ? l.bracket(rx, y) + l.bracket(x, ry)
                                                          : l.bracket(x, ry) + l.bracket(x, ry);
            inner -= lhs;
            v.check("reynolds", {i, j}, lhs - r.apply(inner));
        }
    return v;
}

Verdict commutation_check(const LinearOp &r, const LinearOp &d, const std::string &identity) {
    if (!r.square() || !d.square() || r.rows() != d.rows())
        throw ContractViolation("commutation_check: shape mismatch");
    Verdict v;
    Matrix c = r * d - d * r;
    for (std::size_t j = 0; j < c.cols(); ++j)
        v.check(identity, {static_cast<int>(j)}, c.column(j));
    return v;
}

Verdict is_reylieder(const ReynoldsLieDerPair &p, ReynoldsForm form) {
    Verdict v = jacobi_check(p.algebra);
    v.merge(is_reynolds(p.algebra, p.r, form));
    v.merge(is_derivation(p.algebra, p.d));
    v.merge(commutation_check(p.r, p.d));
    return v;
}

Vector induced_bracket_value(const LieAlgebra &l, const LinearOp &r, const Vector &x, const Vector &y) {
    Vector rx = r.apply(x), ry = r.apply(y);
    Vector out = l.bracket(rx, y);
    out += l.bracket(x, ry);
    out -= l.bracket(rx, ry);
    return out;
}

LieAlgebra induced_bracket(const LieAlgebra &l, const LinearOp &r) {
    require(is_reynolds(l, r), "induced_bracket: R is not a Reynolds operator");
    const int n = l.dim();
    LieAlgebra lr(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            lr.set_bracket(i, j, induced_bracket_value(l, r, unit_vector(n, i), unit_vector(n, j)));
    Verdict post = jacobi_check(lr);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            post.check("R([x,y]_R) = [Rx,Ry]", {i, j},
                       r.apply(lr.basis_bracket(i, j)) - l.bracket(r.column(i), r.column(j)));
    ensure(post, "induced_bracket");
    return lr;
}

Verdict is_homomorphism(const ReynoldsLieDerPair &src, const ReynoldsLieDerPair &dst, const LinearOp &f) {
    const auto n = static_cast<std::size_t>(src.algebra.dim());
    const auto m = static_cast<std::size_t>(dst.algebra.dim());
    if (f.cols() != n || f.rows() != m)
        throw ContractViolation("is_homomorphism: map has wrong shape");
    Verdict v;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            Vector lhs = f.apply(src.algebra.basis_bracket(static_cast<int>(i), static_cast<int>(j)));
            v.check("bracket", {static_cast<int>(i), static_cast<int>(j)},
                    lhs - dst.algebra.bracket(f.column(i), f.column(j)));
        }
    Matrix rr = dst.r * f - f * src.r;
    Matrix dd = dst.d * f - f * src.d;
    for (std::size_t j = 0; j < n; ++j) {
        v.check("reynolds-compatibility", {static_cast<int>(j)}, rr.column(j));
        v.check("derivation-compatibility", {static_cast<int>(j)}, dd.column(j));
    }
    return v;
}

} // namespace reylie
