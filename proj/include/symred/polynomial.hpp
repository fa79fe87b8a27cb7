#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "symred/rational.hpp"

namespace symred {

/// Exponent vector; all monomials of one polynomial share a length.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Graded-lexicographic order with x1 > x2 > ... > xN. Returns true when a
/// comes strictly before b, i.e. a is the larger monomial.
struct GradedLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials of the given degree in n variables, largest first under
/// graded-lex (x1^k first, xN^k last).
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree);

/// Number of monomials of the given degree in n variables: C(n+k-1, k).
std::size_t count_monomials(std::size_t n, unsigned degree);

/// Sparse multivariate polynomial with rational coefficients.
class Polynomial {
 public:
  using Terms = std::map<Monomial, Rational, GradedLexGreater>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}
  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t index);
  static Polynomial monomial(const Monomial& m, const Rational& c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Coefficient of a monomial (zero when absent).
  Rational coefficient(const Monomial& m) const;
  void add_term(const Monomial& m, const Rational& c);

  /// Highest total degree; -1 for the zero polynomial.
  int degree() const;
  /// True for the zero polynomial and for polynomials whose terms all have
  /// total degree d.
  bool is_homogeneous_of_degree(unsigned d) const;
  /// The part of total degree d.
  Polynomial homogeneous_part(unsigned d) const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator-() const;
  bool operator==(const Polynomial& o) const;

  /// Ring homomorphism sending variable i to images[i]; all images must
  /// share one variable count.
  Polynomial substitute(const std::vector<Polynomial>& images, std::size_t target_nvars) const;

  /// Canonical text: terms in graded-lex order, e.g. "-1/2*u1^2*u2 + 3".
  /// Variables are named prefix1..prefixN. The zero polynomial is "0".
  std::string to_string(const std::string& prefix) const;

 private:
  std::size_t nvars_;
  Terms terms_;
};

/// Coordinates of a homogeneous polynomial of degree k in the basis
/// monomials_of_degree(nvars, k).
RatVector to_coordinates(const Polynomial& p, unsigned degree);
Polynomial from_coordinates(const RatVector& coords, std::size_t nvars, unsigned degree);

}  // namespace symred
