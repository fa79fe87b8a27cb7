#pragma once

#include <optional>
#include <vector>

#include "symred/kirwan_kernel.hpp"
#include "symred/polytope.hpp"

namespace symred {

/// Restriction to a subtorus followed by a level shift: mu' = P mu + shift,
/// and u_k maps to sum_k' P[k'][k] u'_k'.
struct Projection {
  RatMatrix matrix;  // r' x r
  RatVector shift;   // length r'
};

struct BridgeResult {
  FixedPointModel model;
  std::vector<ModelIssue> warnings;  // W-CRITICAL-LEVEL, W-NONISOLATED
};

/// Fixed-point data of the toric variety of a smooth setup, for the residual
/// torus T = T^N / G of rank r = N - d.
///
/// u_1..u_r is the basis of t* given by the linear relations alpha^(k)
/// (linear_ideal_basis). Points are the vertices; mu_v is the coordinate
/// vector c of xi_v in that basis, c = Gram(alpha)^{-1} (alpha . xi_v).
/// The facet class x_i restricts to 0 at v when i is in the basis of v;
/// the remaining restrictions solve sum_{i not in B} alpha^(k)_i x_i|_v = u_k,
/// so every linear relation holds pointwise.
BridgeResult bridge_from_toric(const MomentPolytope& polytope,
                               const std::optional<Projection>& projection = std::nullopt);

/// Projection realizing the circle with weights a in Z^N at level lambda:
/// P_k = a . alpha^(k), shift chosen so that mu'_v = a . xi_v - lambda.
Projection circle_projection(const MomentPolytope& polytope, const RatVector& weights,
                             const Rational& level);

/// The setup for the same reduction done in one step: weights [A | a] and
/// level (eta, lambda).
QuotientSetup augment_with_circle(const QuotientSetup& s, const RatVector& weights,
                                  const Rational& level);

}  // namespace symred
