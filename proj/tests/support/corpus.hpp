#pragma once

// Seeded corpus of valid Reynolds LieDer pairs with representations
// (dim L <= 4, dim V <= 3) assembled from brute-force searches.

#include "reylie/cochain.hpp"
#include "reylie/ext.hpp"
#include "reylie/rep.hpp"
#include "support/oracle.hpp"

#include <functional>
#include <random>
#include <string>
#include <vector>

namespace corpus {

struct Instance {
    std::string name;
    reylie::RLDRep rld;
};

reylie::LieAlgebra to_algebra(const oracle::IAlgebra &a);
reylie::Matrix to_matrix(const oracle::IMat &m);

/// Matrix of the linear map f: Q^nvars -> Q^k, by evaluating on unit vectors.
reylie::Matrix linear_system(std::size_t nvars, const std::function<reylie::Vector(const reylie::Vector &)> &f);

/// Random element of span(basis) with small integer coefficients.
reylie::Vector random_combination(std::mt19937 &rng, const std::vector<reylie::Vector> &basis, std::size_t dim);

/// Kernel of the joint linear system for (d, d_V): derivation, R d = d R,
/// R_V d_V = d_V R_V, d_V rho(x) = rho(dx) + rho(x) d_V. Vectors are d
/// entries (row-major) followed by d_V entries.
std::vector<reylie::Vector> derivation_pairs(const reylie::ReynoldsRep &rep);

/// Picks a random (d, d_V) from derivation_pairs.
reylie::RLDRep with_random_derivations(std::mt19937 &rng, const reylie::ReynoldsRep &rep);

/// Reynolds operators on the given corpus algebra (by name) from the grid
/// searches; dim-4 algebras use block sums of lower-dimensional searches.
struct AlgebraFamily {
    std::string name;
    oracle::IAlgebra algebra;
    std::vector<oracle::IMat> reynolds;
};
const std::vector<AlgebraFamily> &families();

/// At least `min_size` instances; all pass check_rld_rep.
std::vector<Instance> build(unsigned seed = 20240601u, std::size_t min_size = 60);

/// Pairs (L, R, d) only, used where the coefficients are the adjoint rep.
std::vector<reylie::ReynoldsLieDerPair> pairs(unsigned seed, std::size_t count);

/// Degree-2 cocycles of the RLieDer complex whose degree-0 slot vanishes:
/// the (mu_1, R_1, d_1) or (Theta, xi, chi) solving D = 0.
std::vector<reylie::Vector> slot_free_cocycles(const reylie::Complexes &cx);

/// Extension data over corpus instances; even positions are sampled from the
/// cocycles above, odd ones are unconstrained small random cochains.
struct ExtensionCase {
    std::string name;
    reylie::RLDRep rep;
    reylie::ExtensionDatum datum;
    bool from_cocycles = false;
};
std::vector<ExtensionCase> extension_cases(unsigned seed, std::size_t count);

/// Central extensions of corpus pairs (dim of the middle term <= 5) by
/// D_R-cocycles (theta, xi), with candidate pairs (d_V, d), d a derivation
/// commuting with R and d_V commuting with R_V. Some use a shifted section.
struct CentralCase {
    std::string name;
    reylie::CentralExtension ext;
    reylie::Matrix d_v;
    reylie::Matrix d;
};
std::vector<CentralCase> central_cases(unsigned seed, std::size_t count);

reylie::Matrix random_matrix(std::mt19937 &rng, std::size_t rows, std::size_t cols, int lo, int hi);

} // namespace corpus
