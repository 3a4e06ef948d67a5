#pragma once

// Direct linear-system oracles: each space is written out as the kernel of
// an explicitly assembled system, without going through the cochain engine.

#include "reylie/ext.hpp"
#include "reylie/rep.hpp"

#include <optional>

#include <vector>

namespace direct {

/// Pairs (f, g), f: L -> V linear and g in V, with
///   rho(x) f(y) - rho(y) f(x) - f([x,y]) = 0,
///   f(Rx) - R_V f(x) - rho_R(x) g = 0,
///   f(dx) = d_V f(x),  d_V g = 0,
/// where rho_R(x) = rho(Rx) + R_V(rho(Rx) - rho(x)). Coordinates: f(e_0),
/// ..., f(e_{m-1}) then g.
std::vector<reylie::Vector> h1_rlieder(const reylie::RLDRep &rld);

/// Some d_hat on the middle term of a central extension with: d_hat a
/// derivation, d_hat R_hat = R_hat d_hat, p d_hat = d p, d_hat i = i d_V;
/// solved as one inhomogeneous system in the n^2 entries of d_hat.
std::optional<reylie::Matrix> extension_derivation(const reylie::CentralExtension &e, const reylie::Matrix &d_v,
                                                   const reylie::Matrix &d);

} // namespace direct
