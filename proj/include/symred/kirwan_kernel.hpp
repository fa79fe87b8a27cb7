#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "symred/index_set.hpp"
#include "symred/matrix.hpp"
#include "symred/poincare.hpp"
#include "symred/polynomial.hpp"

namespace symred {

/// An equivariant class given by its restrictions to the fixed points:
/// one homogeneous polynomial in u_1..u_r per point, of polynomial degree
/// `degree / 2` (each u_j has cohomological degree 2).
struct ModelGenerator {
  std::string name;
  int degree = 2;
  std::vector<Polynomial> restrictions;

  bool operator==(const ModelGenerator&) const = default;
};

/// Isolated fixed points of a Hamiltonian torus action, their moment
/// images, and generators of the image of equivariant cohomology under
/// restriction to the fixed points. The constant class 1 and the classes
/// u_j (same restriction u_j at every point) are implicit.
///
/// The engine computes the subalgebra the generators span; it is the
/// caller's contract that this is the whole image up to `degree_cap`.
struct FixedPointModel {
  std::size_t torus_rank = 0;
  std::vector<std::string> points;
  std::vector<RatVector> moment_images;
  std::vector<ModelGenerator> generators;
  unsigned degree_cap = 0;  // top cohomological degree of interest

  std::size_t num_points() const { return points.size(); }
  bool operator==(const FixedPointModel&) const = default;
};

struct ModelIssue {
  std::string code;  // e.g. E-HOMOGENEITY, W-CRITICAL-LEVEL
  std::string message;
};

/// Advisory checks: homogeneity, even positive degrees, and for rank one the
/// divisibility of degree-2 restriction differences by u1. Throws
/// InputError only for structurally malformed models (counts, variable
/// numbers, moment dimensions).
std::vector<ModelIssue> validate_model(const FixedPointModel& md);

struct Chamber {
  IndexSet points;    // fixed points with <mu_i, xi> <= 0
  RatVector witness;  // xi
};

/// Every subset S of fixed points cut out by a closed half-space
/// <mu, xi> <= 0, with a witness xi. Ordered by size, then members.
std::vector<Chamber> enumerate_half_sets(const FixedPointModel& md);

/// Subspace of sum_i Q[u]_{m/2} in point-major coordinates
/// (point, monomial in graded-lex order), held as an rref basis.
struct GradedSubspace {
  unsigned degree = 0;
  std::vector<RatVector> basis;
  std::vector<std::size_t> pivots;

  std::size_t dim() const { return basis.size(); }
  /// Residual of v after eliminating the pivot columns; zero iff v lies in
  /// the subspace.
  RatVector reduce(RatVector v) const;
  bool contains(const RatVector& v) const;
};

struct DegreeRow {
  unsigned degree;
  std::size_t ambient_dim;
  std::size_t kernel_dim;
  std::size_t betti;
};

struct ReductionResult {
  std::vector<DegreeRow> rows;  // degrees 0..cap
  std::vector<ModelIssue> warnings;

  PoincareTable even_table() const;
};

/// c(a,b) = sum_k coeffs[k] * basis_k of degree a+b, for coset basis
/// elements `left` of degree left_degree and `right` of right_degree.
struct StructureConstant {
  unsigned left_degree;
  std::size_t left;
  unsigned right_degree;
  std::size_t right;
  RatVector coeffs;
};

struct QuotientRing {
  /// Coset representatives per degree 0..cap, chosen greedily from the
  /// canonical ambient basis.
  std::vector<std::vector<RatVector>> coset_basis;
  std::vector<StructureConstant> constants;
};

struct S1DegreeCheck {
  unsigned degree;
  std::size_t plus_dim;   // classes vanishing on points with mu > 0
  std::size_t minus_dim;  // classes vanishing on points with mu < 0
  std::size_t total_dim;  // K
  std::size_t intersection_dim;
  bool sum_equals_total;
};

struct S1Report {
  std::vector<S1DegreeCheck> degrees;
  bool holds() const;
};

struct IdealViolation {
  unsigned kernel_degree;
  std::size_t kernel_index;
  unsigned ambient_degree;
  std::size_t ambient_index;
};

/// Kernel of the Kirwan map from fixed-point data.
///
/// K is the sum over realizable closed half-sets S of the classes whose
/// restrictions vanish on S; the reduced space has Betti numbers
/// dim A^m - dim K^m. All degrees up to the cap are computed at construction
/// and the object is immutable afterwards.
class KernelEngine {
 public:
  explicit KernelEngine(FixedPointModel md);

  const FixedPointModel& model() const { return model_; }
  const std::vector<Chamber>& chambers() const { return chambers_; }

  /// A^m: span of restriction tuples of all degree-m products of
  /// generators and u-monomials.
  const GradedSubspace& degree_span(unsigned m) const;

  /// Classes in A^m vanishing at every point of S. S must be realizable.
  GradedSubspace k_half_basis(IndexSet s, unsigned m) const;

  /// K^m, the span of k_half_basis over all realizable half-sets.
  const GradedSubspace& kernel_total(unsigned m) const;

  ReductionResult reduced_poincare() const;

  /// Throws InternalError if some product fails to reduce into the coset
  /// basis or K fails the ideal property.
  QuotientRing quotient_ring_constants() const;

  /// Requires rank one and no point with mu = 0.
  S1Report s1_decomposition_check() const;

  std::vector<IdealViolation> ideal_violations() const;

  /// Pointwise product of restriction tuples.
  RatVector multiply(const RatVector& a, unsigned deg_a, const RatVector& b, unsigned deg_b) const;

  /// Coordinate length of sum_i Q[u]_{m/2}.
  std::size_t coordinate_dim(unsigned m) const;

  /// Renders a tuple as "(p_1, ..., p_k)" with variables u1..ur.
  std::string format_tuple(const RatVector& v, unsigned m) const;

  std::vector<Polynomial> to_polynomials(const RatVector& v, unsigned m) const;
  RatVector from_polynomials(const std::vector<Polynomial>& polys, unsigned m) const;

 private:
  GradedSubspace vanishing_on(IndexSet s, unsigned m) const;
  bool realizable(IndexSet s) const;

  FixedPointModel model_;
  std::vector<Chamber> chambers_;
  std::vector<RatVector> generator_tuples_;  // indexed like model_.generators
  std::vector<GradedSubspace> ambient_;
  std::vector<GradedSubspace> kernel_;
};

/// Rank of a free module over Q[u_1..u_r] with generators counted by
/// `betti` (b_{2k} generators in degree 2k), in cohomological degree m.
std::size_t free_module_dimension(const PoincareTable& betti, std::size_t r, unsigned m);

}  // namespace symred
