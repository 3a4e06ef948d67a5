#pragma once

// Integer brute-force oracles used to generate and cross-check test data.
// Deliberately independent of the library: plain int64 arithmetic on
// structure-constant tables and nested vectors.

#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using IVec = std::vector<i64>;
/// Row-major square matrix; column j is the image of e_j.
struct IMat {
    int n = 0;
    std::vector<i64> a;
    i64 at(int r, int c) const { return a[static_cast<std::size_t>(r * n + c)]; }
    i64 &at(int r, int c) { return a[static_cast<std::size_t>(r * n + c)]; }
};

/// c[i][j][k]: coefficient of e_k in [e_i, e_j], full antisymmetric table.
struct IAlgebra {
    int n = 0;
    std::vector<std::vector<IVec>> c;

    explicit IAlgebra(int dim = 0);
    void set(int i, int j, IVec v);
    IVec bracket(const IVec &x, const IVec &y) const;
};

IAlgebra abelian(int n);
IAlgebra heisenberg();   // [e0,e1]=e2
IAlgebra affine_plane(); // [e0,e1]=e0
IAlgebra direct_sum(const IAlgebra &a, const IAlgebra &b);

IVec image(const IMat &m, const IVec &v);
IMat mul(const IMat &a, const IMat &b);
IVec unit(int n, int i);
bool zero(const IVec &v);

bool jacobi(const IAlgebra &l);
bool reynolds(const IAlgebra &l, const IMat &r);
bool derivation(const IAlgebra &l, const IMat &d);

/// rho(e_i) matrices on V.
struct IRep {
    int dim_v = 0;
    std::vector<IMat> rho;
};

bool representation(const IAlgebra &l, const IRep &rep);
/// rho(Rx)R_V u = R_V(rho(Rx)u + rho(x)R_V u - rho(Rx)R_V u) on bases.
bool reynolds_rep(const IAlgebra &l, const IMat &r, const IRep &rep, const IMat &rv);

/// Every n x n integer matrix with entries in [lo, hi] passing `accept`.
std::vector<IMat> grid_search(int n, int lo, int hi, const std::function<bool(const IMat &)> &accept);

/// All Reynolds operators on l with entries in [lo, hi].
std::vector<IMat> reynolds_operators(const IAlgebra &l, int lo, int hi);

/// Binomial coefficient.
i64 binom(int n, int k);

} // namespace oracle
