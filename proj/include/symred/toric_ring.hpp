#pragma once

#include <cstddef>
#include <vector>

#include "symred/index_set.hpp"
#include "symred/matrix.hpp"
#include "symred/poincare.hpp"
#include "symred/polynomial.hpp"
#include "symred/polytope.hpp"

namespace symred {

/// Q[x_1..x_N] / (I + J) with every x_i in cohomological degree 2.
struct RingPresentation {
  std::size_t num_vars = 0;
  /// Canonical (rref) basis of the degree-2 part of J: vectors alpha with
  /// sum_i alpha_i beta_i = 0.
  std::vector<RatVector> linear_relations;
  /// Minimal non-faces; each stands for the squarefree monomial prod x_i.
  std::vector<IndexSet> monomial_generators;
  /// Complex dimension n = N - d; the quotient vanishes above half-degree n.
  std::size_t degree_cap = 0;
  /// Maximal faces of the facet-intersection complex, one per vertex.
  std::vector<IndexSet> top_faces;
  bool smooth = false;

  bool is_unit_ideal() const;
  Polynomial relation_polynomial(std::size_t i) const;
  Polynomial generator_polynomial(std::size_t i) const;
};

/// Basis of {alpha in Q^N : sum_i alpha_i beta_i = 0}, i.e. the kernel basis
/// of the transposed weight matrix. Has N - d elements.
std::vector<RatVector> linear_ideal_basis(const QuotientSetup& s);

/// prod_{i in I} x_i for each minimal non-face I. A minimal non-face equal
/// to the empty set produces the constant 1 (unit ideal: empty quotient).
std::vector<Polynomial> stanley_reisner_generators(const FaceComplex& c);

RingPresentation build_presentation(const MomentPolytope& polytope, const FaceComplex& complex);

/// Residue of a polynomial: the unique combination of graded basis
/// monomials congruent to it, degree by degree.
struct ResidueClass {
  Polynomial representative;
  /// Set when a part above the degree cap was dropped.
  bool truncated = false;
};

/// Degreewise linear algebra on the quotient ring.
///
/// The linear relations are eliminated first: each rref pivot variable is
/// rewritten in terms of the free variables, which identifies Q[x]/J with a
/// polynomial ring in d variables while preserving graded-lex leading terms.
/// In each degree the images of the monomial generators span the ideal; its
/// rref under graded-lex order picks the canonical basis (non-pivot
/// monomials, which involve only free variables).
class GradedRing {
 public:
  explicit GradedRing(RingPresentation p);

  const RingPresentation& presentation() const { return pres_; }

  /// Dimension of the quotient in cohomological degree 2k.
  std::size_t graded_component_dim(unsigned k) const;

  /// Basis monomials (in x_1..x_N) of half-degree k, graded-lex order.
  std::vector<Monomial> basis(unsigned k) const;

  /// b_{2k} for 0 <= k <= cap. Throws InternalError if the component just
  /// above the cap does not vanish.
  PoincareTable poincare_table() const;

  ResidueClass normal_form(const Polynomial& p) const;

  /// Residues of the elementary symmetric polynomials e_1..e_n of the x_i.
  std::vector<ResidueClass> chern_classes() const;

  /// Integral over the fundamental class of a top-degree residue, using the
  /// normalization that the product of the facet classes meeting at a vertex
  /// integrates to 1. Requires a smooth presentation.
  Rational integrate(const ResidueClass& top) const;

  /// Image of x_i in the eliminated ring (a linear form in the free variables).
  const std::vector<Polynomial>& variable_images() const { return images_; }

 private:
  struct DegreeData {
    std::vector<Monomial> monomials;  // free-variable monomials, graded-lex
    RrefResult reduction;             // rref of the ideal span
    std::vector<std::size_t> basis_columns;
  };
  DegreeData compute_degree(unsigned k) const;
  /// Precomputed for k <= cap + 2, computed on demand beyond.
  DegreeData degree_data(unsigned k) const;
  RatVector reduce(const Polynomial& eliminated, unsigned k, const DegreeData& data) const;

  RingPresentation pres_;
  std::vector<std::size_t> free_vars_;
  std::vector<Polynomial> images_;
  std::vector<Polynomial> generator_images_;
  std::vector<DegreeData> degrees_;
};

}  // namespace symred
