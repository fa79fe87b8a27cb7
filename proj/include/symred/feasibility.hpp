#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "symred/rational.hpp"

namespace symred {

enum class Relation { GreaterEq, Greater, LessEq, Less };

struct EqualityConstraint {
  RatVector coeffs;
  Rational rhs;
};

struct InequalityConstraint {
  RatVector coeffs;
  Rational rhs;
  Relation kind = Relation::GreaterEq;
};

/// A system of linear equalities and inequalities over free rational
/// variables.
///
/// Strict constraints are homogenized: `<c,x> > b` is solved as
/// `<c,x> >= b + 1` (and `<` likewise with `- 1`). This is exact only for
/// systems that are invariant under positive scaling of a solution, which
/// holds for every strict system this library builds (cone separation
/// queries with b = 0). Callers with inhomogeneous strict constraints must
/// not rely on this encoding.
class FeasibilitySystem {
 public:
  explicit FeasibilitySystem(std::size_t dimension) : dim_(dimension) {}

  std::size_t dimension() const { return dim_; }

  void add_equality(RatVector coeffs, Rational rhs);
  void add_inequality(RatVector coeffs, Relation kind, Rational rhs);

  const std::vector<EqualityConstraint>& equalities() const { return eqs_; }
  const std::vector<InequalityConstraint>& inequalities() const { return ineqs_; }

 private:
  std::size_t dim_;
  std::vector<EqualityConstraint> eqs_;
  std::vector<InequalityConstraint> ineqs_;
};

struct FeasibleWitness {
  RatVector point;
};

/// Multipliers proving infeasibility. Normalize every inequality to
/// `s*<c,x> >= s*b + delta` (s = +1 for >=,>; -1 for <=,<; delta = 1 for strict).
/// Then sum_e y_e*c_e + sum_i z_i*s_i*c_i = 0 while
/// sum_e y_e*b_e + sum_i z_i*(s_i*b_i + delta_i) > 0, with every z_i >= 0.
struct FarkasCertificate {
  RatVector equality_multipliers;
  RatVector inequality_multipliers;
};

using FeasibilityResult = std::variant<FeasibleWitness, FarkasCertificate>;

/// Decides feasibility with a phase-one simplex over exact rationals using
/// Bland's anti-cycling rule.
FeasibilityResult lp_feasible(const FeasibilitySystem& sys);

/// Exact substitution check of a witness against every constraint
/// (strict constraints checked in their homogenized form).
bool verify_witness(const FeasibilitySystem& sys, const RatVector& x);

/// Exact check that the certificate yields 0 >= (positive number).
bool verify_certificate(const FeasibilitySystem& sys, const FarkasCertificate& cert);

inline bool is_feasible(const FeasibilityResult& r) {
  return std::holds_alternative<FeasibleWitness>(r);
}

}  // namespace symred
