#include "reylie/exactlin.hpp"

#include "reylie/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace reylie {

namespace {

bool is_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

std::string_view strip_sign(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    return s;
}

void check_same_size(std::size_t a, std::size_t b, const char *what) {
    if (a != b)
        throw ContractViolation(std::string(what) + ": size mismatch " + std::to_string(a) + " vs " +
                                std::to_string(b));
}

std::size_t entry_size(const Scalar &s) {
    return mpz_sizeinbase(s.get_num_mpz_t(), 2) + mpz_sizeinbase(s.get_den_mpz_t(), 2);
}

} // namespace

Scalar parse_scalar(std::string_view text) {
    auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
    if (!is_digits(strip_sign(num)) || (slash != std::string_view::npos && !is_digits(den)))
        throw ContractViolation("malformed rational \"" + std::string(text) + "\"");
    std::string n(num.front() == '+' ? num.substr(1) : num);
    mpz_class p(n, 10);
    mpz_class q = den.empty() ? mpz_class(1) : mpz_class(std::string(den), 10);
    if (q == 0)
        throw ContractViolation("zero denominator in \"" + std::string(text) + "\"");
    Scalar s(p, q);
    s.canonicalize();
    return s;
}

std::string format_scalar(const Scalar &s) { return s.get_str(10); }

Vector zero_vector(std::size_t n) { return Vector(n); }

Vector unit_vector(std::size_t n, std::size_t i) {
    Vector v(n);
    v.at(i) = 1;
    return v;
}

bool is_zero(std::span<const Scalar> v) {
    return std::all_of(v.begin(), v.end(), [](const Scalar &x) { return sgn(x) == 0; });
}

Vector operator+(const Vector &a, const Vector &b) {
    Vector r = a;
    r += b;
    return r;
}

Vector operator-(const Vector &a, const Vector &b) {
    Vector r = a;
    r -= b;
    return r;
}

Vector operator-(const Vector &a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = -a[i];
    return r;
}

Vector operator*(const Scalar &c, const Vector &a) {
    Vector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = c * a[i];
    return r;
}

Vector &operator+=(Vector &a, const Vector &b) {
    check_same_size(a.size(), b.size(), "vector add");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] += b[i];
    return a;
}

Vector &operator-=(Vector &a, const Vector &b) {
    check_same_size(a.size(), b.size(), "vector sub");
    for (std::size_t i = 0; i < a.size(); ++i)
        a[i] -= b[i];
    return a;
}

void axpy(Vector &a, const Scalar &c, const Vector &b) {
    check_same_size(a.size(), b.size(), "axpy");
    if (sgn(c) == 0)
        return;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (sgn(b[i]) != 0)
            a[i] += c * b[i];
}

Matrix::Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_same_size(entries_.size(), rows * cols, "matrix entries");
}

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector> &rows) {
    std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        check_same_size(rows[r].size(), cols, "matrix row");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<Vector> &cols) { return columns_matrix(rows, cols); }

Matrix Matrix::from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long> entries) {
    check_same_size(entries.size(), rows * cols, "matrix entries");
    std::vector<Scalar> e;
    e.reserve(entries.size());
    for (long x : entries)
        e.emplace_back(x);
    return {rows, cols, std::move(e)};
}

Vector Matrix::row(std::size_t r) const {
    return {entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Vector Matrix::column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

void Matrix::set_column(std::size_t c, std::span<const Scalar> v) {
    check_same_size(v.size(), rows_, "set_column");
    for (std::size_t r = 0; r < rows_; ++r)
        (*this)(r, c) = v[r];
}

Vector Matrix::apply(std::span<const Scalar> v) const {
    check_same_size(v.size(), cols_, "matrix-vector product");
    Vector out(rows_);
    for (std::size_t c = 0; c < cols_; ++c) {
        if (sgn(v[c]) == 0)
            continue;
        for (std::size_t r = 0; r < rows_; ++r) {
            const Scalar &m = (*this)(r, c);
            if (sgn(m) != 0)
                out[r] += m * v[c];
        }
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const { return reylie::is_zero(entries_); }

Matrix operator*(const Matrix &a, const Matrix &b) {
    check_same_size(a.cols(), b.rows(), "matrix product");
    Matrix out(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Scalar &x = a(i, k);
            if (sgn(x) == 0)
                continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                if (sgn(b(k, j)) != 0)
                    out(i, j) += x * b(k, j);
        }
    return out;
}

Matrix operator+(const Matrix &a, const Matrix &b) {
    check_same_size(a.rows(), b.rows(), "matrix add rows");
    check_same_size(a.cols(), b.cols(), "matrix add cols");
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) += b(r, c);
    return out;
}

Matrix operator-(const Matrix &a, const Matrix &b) { return a + (-b); }

Matrix operator-(const Matrix &a) { return Scalar(-1) * a; }

Matrix operator*(const Scalar &c, const Matrix &a) {
    Matrix out = a;
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t col = 0; col < a.cols(); ++col)
            out(r, col) *= c;
    return out;
}

Matrix hstack(const Matrix &a, const Matrix &b) {
    check_same_size(a.rows(), b.rows(), "hstack");
    Matrix out(a.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(r, a.cols() + c) = b(r, c);
    }
    return out;
}

Matrix vstack(const Matrix &a, const Matrix &b) {
    check_same_size(a.cols(), b.cols(), "vstack");
    Matrix out(a.rows() + b.rows(), a.cols());
    for (std::size_t c = 0; c < a.cols(); ++c) {
        for (std::size_t r = 0; r < a.rows(); ++r)
            out(r, c) = a(r, c);
        for (std::size_t r = 0; r < b.rows(); ++r)
            out(a.rows() + r, c) = b(r, c);
    }
    return out;
}

Matrix block_diagonal(const Matrix &a, const Matrix &b) {
    Matrix out(a.rows() + b.rows(), a.cols() + b.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            out(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t c = 0; c < b.cols(); ++c)
            out(a.rows() + r, a.cols() + c) = b(r, c);
    return out;
}

Matrix block(const Matrix &m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) {
    if (r0 + nr > m.rows() || c0 + nc > m.cols())
        throw ContractViolation("block out of range");
    Matrix out(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
        for (std::size_t c = 0; c < nc; ++c)
            out(r, c) = m(r0 + r, c0 + c);
    return out;
}

Echelon rref(Matrix m, EliminationOptions opts) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols && lead < rows; ++c) {
        std::size_t best = rows;
        for (std::size_t r = lead; r < rows; ++r) {
            if (sgn(m(r, c)) == 0)
                continue;
            if (best == rows) {
                best = r;
                if (opts.pivot == PivotRule::FirstNonzero)
                    break;
            } else if (entry_size(m(r, c)) < entry_size(m(best, c))) {
                best = r;
            }
        }
        if (best == rows)
            continue;
        if (best != lead)
            for (std::size_t k = 0; k < cols; ++k)
                swap(m(best, k), m(lead, k));
        Scalar inv = 1 / m(lead, c);
        for (std::size_t k = c; k < cols; ++k)
            m(lead, k) *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == lead || sgn(m(r, c)) == 0)
                continue;
            Scalar f = m(r, c);
            for (std::size_t k = c; k < cols; ++k)
                if (sgn(m(lead, k)) != 0)
                    m(r, k) -= f * m(lead, k);
        }
        pivots.push_back(c);
        ++lead;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix &m, EliminationOptions opts) { return rref(m, opts).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix &m, EliminationOptions opts) {
    auto [red, pivots] = rref(m, opts);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i)
            v[pivots[i]] = -red(i, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix &m, std::span<const Scalar> b, EliminationOptions opts) {
    if (b.size() != m.rows())
        throw ContractViolation("solve: right-hand side has length " + std::to_string(b.size()) + ", matrix has " +
                                std::to_string(m.rows()) + " rows");
    Matrix aug = hstack(m, Matrix::from_columns(m.rows(), {Vector(b.begin(), b.end())}));
    auto [red, pivots] = rref(std::move(aug), opts);
    if (!pivots.empty() && pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t i = 0; i < pivots.size(); ++i)
        x[pivots[i]] = red(i, m.cols());
    return x;
}

Matrix columns_matrix(std::size_t rows, const std::vector<Vector> &vectors) {
    Matrix m(rows, vectors.size());
    for (std::size_t c = 0; c < vectors.size(); ++c)
        m.set_column(c, vectors[c]);
    return m;
}

bool span_contains(std::size_t dim, const std::vector<Vector> &b, const std::vector<Vector> &a) {
    Matrix mb = columns_matrix(dim, b);
    std::size_t base = rank(mb);
    std::vector<Vector> both = b;
    both.insert(both.end(), a.begin(), a.end());
    return rank(columns_matrix(dim, both)) == base;
}

std::string to_string(const Matrix &m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << (r ? ", [" : "[");
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? ", " : "") << format_scalar(m(r, c));
        os << ']';
    }
    os << ']';
    return os.str();
}

} // namespace reylie
