#pragma once

// Exact rational scalars and dense matrices with elimination-based
// rank, kernel and solve.

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace reylie {

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;
using Vector = std::vector<Scalar>;

/// Parses "p/q" or "p": optional sign on p, decimal digits only, q positive.
Scalar parse_scalar(std::string_view text);
/// "p/q", or "p" when the denominator is 1.
std::string format_scalar(const Scalar &s);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

Vector operator+(const Vector &a, const Vector &b);
Vector operator-(const Vector &a, const Vector &b);
Vector operator-(const Vector &a);
Vector operator*(const Scalar &c, const Vector &a);
Vector &operator+=(Vector &a, const Vector &b);
Vector &operator-=(Vector &a, const Vector &b);
/// a += c * b
void axpy(Vector &a, const Scalar &c, const Vector &b);

/// Dense row-major matrix. As a linear map, column j is the image of the
/// j-th source basis vector.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols);
    Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

    static Matrix identity(std::size_t n);
    static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
    /// Build from a list of rows; all rows must have the same length.
    static Matrix from_rows(const std::vector<Vector> &rows);
    static Matrix from_columns(std::size_t rows, const std::vector<Vector> &cols);
    /// Convenience for tests and fixtures.
    static Matrix from_ints(std::size_t rows, std::size_t cols, std::initializer_list<long> entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool square() const { return rows_ == cols_; }

    Scalar &operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const Scalar &operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }
    std::span<const Scalar> entries() const { return entries_; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    void set_column(std::size_t c, std::span<const Scalar> v);

    Vector apply(std::span<const Scalar> v) const;
    Matrix transpose() const;
    bool is_zero() const;

    friend bool operator==(const Matrix &a, const Matrix &b) = default;

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> entries_;
};

Matrix operator*(const Matrix &a, const Matrix &b);
Matrix operator+(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a, const Matrix &b);
Matrix operator-(const Matrix &a);
Matrix operator*(const Scalar &c, const Matrix &a);

/// [a | b], same row count.
Matrix hstack(const Matrix &a, const Matrix &b);
/// [a ; b], same column count.
Matrix vstack(const Matrix &a, const Matrix &b);
/// diag(a, b)
Matrix block_diagonal(const Matrix &a, const Matrix &b);
/// Sub-block of rows [r0, r0+nr) and columns [c0, c0+nc).
Matrix block(const Matrix &m, std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc);

enum class PivotRule {
    /// First nonzero entry in the column.
    FirstNonzero,
    /// Nonzero entry with the smallest numerator+denominator bit size.
    SmallestSize,
};

struct EliminationOptions {
    PivotRule pivot = PivotRule::FirstNonzero;
};

/// Reduced row echelon form with the list of pivot columns.
struct Echelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m, EliminationOptions opts = {});
std::size_t rank(const Matrix &m, EliminationOptions opts = {});
/// Basis of {v : m v = 0}; one vector per free column, with that free
/// coordinate set to 1.
std::vector<Vector> kernel_basis(const Matrix &m, EliminationOptions opts = {});
/// Some x with m x = b, or nullopt when b is outside the column space.
/// Throws ContractViolation when b.size() != m.rows().
std::optional<Vector> solve(const Matrix &m, std::span<const Scalar> b, EliminationOptions opts = {});

/// Matrix whose columns are the given vectors (all of length `rows`).
Matrix columns_matrix(std::size_t rows, const std::vector<Vector> &vectors);
/// True when every vector of `a` lies in span(b) (vectors of length `dim`).
bool span_contains(std::size_t dim, const std::vector<Vector> &b, const std::vector<Vector> &a);

std::string to_string(const Matrix &m);

} // namespace reylie
