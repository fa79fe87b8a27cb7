#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "symred/feasibility.hpp"
#include "symred/index_set.hpp"
#include "symred/matrix.hpp"
#include "symred/poincare.hpp"
#include "symred/rational.hpp"

namespace symred {

/// Data of the quotient of C^N by a rank-d subtorus G of (S^1)^N.
///
/// Row i of `weights` is beta_i, the G-weight of the i-th coordinate,
/// i.e. the image of the i-th standard basis vector under the restriction
/// R^N* -> g*. (A literal reading of beta_i as a pullback from t* would pair
/// it against the wrong space; the G-weight is the only type-consistent
/// choice.) `level` is eta in g*, and the moment polytope is
///   { xi in R^N : xi >= 0, sum_i xi_i beta_i = eta }.
struct QuotientSetup {
  RatMatrix weights;  // N x d, integer entries
  RatVector level;    // length d

  std::size_t num_coords() const { return weights.rows(); }
  std::size_t group_rank() const { return weights.cols(); }
  /// Complex dimension N - d of the quotient.
  std::size_t complex_dim() const { return num_coords() - group_rank(); }
  RatVector beta(std::size_t i) const { return weights.row_vector(i); }

  bool operator==(const QuotientSetup&) const = default;
};

/// Throws InputError unless: N > d >= 1, N <= 32, level has length d,
/// weights are integers, and rank(weights) = d.
void check_setup_shape(const QuotientSetup& s);

/// Basic feasible solution of the moment polytope.
struct Vertex {
  IndexSet basis;     // d coordinates allowed to be nonzero
  RatVector coords;   // length N, zero outside the basis
  Rational abs_det;   // |det(beta_i : i in basis)|
};

struct DiagnosticsReport {
  bool nonempty = false;
  bool proper = false;
  std::optional<RatVector> properness_witness;  // zeta with <beta_i, zeta> >= 1
  std::optional<FarkasCertificate> properness_certificate;
  bool regular = false;
  std::optional<Vertex> degenerate_vertex;  // first degenerate basic solution
  std::vector<Vertex> vertices;             // feasible bases, lexicographic
  bool smooth = false;

  /// Proper, regular and with nonempty polytope: the conditions every
  /// later stage insists on.
  bool usable() const { return nonempty && proper && regular; }
};

/// Properness, regularity and smoothness of the setup. Throws InputError on
/// malformed shape (including rank-deficient weights); never throws for an
/// improper or singular level.
DiagnosticsReport validate_setup(const QuotientSetup& s);

/// True iff eta lies in the closed cone spanned by {beta_j : j in S}.
bool cone_member(const QuotientSetup& s, IndexSet support);

struct FaceComplex {
  std::size_t ground_size = 0;
  std::vector<IndexSet> faces;             // size-then-lex order
  std::vector<IndexSet> minimal_nonfaces;  // size-then-lex order

  bool is_face(IndexSet s) const;
  /// Faces of maximal size; for a simple polytope these are the complements
  /// of vertex bases.
  std::vector<IndexSet> facets() const;
};

/// A validated moment polytope. Construction throws PreconditionError when
/// the setup is empty, improper, or singular at its level.
class MomentPolytope {
 public:
  explicit MomentPolytope(QuotientSetup s);

  const QuotientSetup& setup() const { return setup_; }
  const DiagnosticsReport& diagnostics() const { return report_; }
  std::size_t complex_dim() const { return setup_.complex_dim(); }

  /// Vertices, one per feasible basis, ordered by basis.
  const std::vector<Vertex>& vertices() const { return report_.vertices; }

  /// True iff the facets {xi_i = 0 : i in I} have a common point in the
  /// polytope.
  bool face_test(IndexSet facets) const;

  FaceComplex build_face_complex() const;

  /// Vertex pairs (indices into vertices()) joined by an edge.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  /// Morse count: b_{2k} is the number of vertices with exactly k incident
  /// edges along which a generic linear functional decreases. The functional
  /// is drawn from a deterministic generator started at `seed`; failing
  /// genericity after the retry budget throws InternalError naming the seed.
  PoincareTable betti_oracle(std::uint64_t seed = 1) const;

 private:
  QuotientSetup setup_;
  DiagnosticsReport report_;
};

}  // namespace symred
