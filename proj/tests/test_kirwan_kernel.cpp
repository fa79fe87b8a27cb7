#include <algorithm>

#include "corpus.hpp"
#include "doctest.h"
#include "symred/bridge.hpp"
#include "symred/errors.hpp"
#include "symred/kirwan_kernel.hpp"
#include "symred/toric_ring.hpp"

using namespace symred;
using namespace symred::testing;

namespace {

Polynomial u(std::size_t r, std::size_t j, long c = 1, unsigned power = 1) {
  Monomial m(r, 0);
  m[j] = power;
  return Polynomial::monomial(m, Rational(c));
}

Polynomial zero(std::size_t r) { return Polynomial(r); }

FixedPointModel s2_model(unsigned cap) {
  FixedPointModel md;
  md.torus_rank = 1;
  md.points = {"south", "north"};
  md.moment_images = {{Rational(-1)}, {Rational(1)}};
  md.generators = {{"x", 2, {zero(1), u(1, 0)}}};
  md.degree_cap = cap;
  return md;
}

bool has_code(const std::vector<ModelIssue>& issues, const std::string& code) {
  return std::any_of(issues.begin(), issues.end(), [&](const ModelIssue& i) { return i.code == code; });
}

std::size_t span_dim(const std::vector<RatVector>& vs, std::size_t dim) {
  return rank(RatMatrix::from_rows(vs, dim));
}

bool subspace_of(const GradedSubspace& a, const GradedSubspace& b) {
  return std::all_of(a.basis.begin(), a.basis.end(), [&](const RatVector& v) { return b.contains(v); });
}

}  // namespace

TEST_CASE("validate_model examples") {
  CHECK(validate_model(s2_model(2)).empty());

  FixedPointModel bad = s2_model(2);
  bad.generators[0].restrictions = {zero(1), Polynomial::constant(1, 1)};
  const auto issues = validate_model(bad);
  CHECK(has_code(issues, "E-HOMOGENEITY"));
  CHECK(has_code(issues, "E-DIVISIBILITY"));

  FixedPointModel point;
  point.torus_rank = 0;
  point.points = {"p"};
  point.moment_images = {RatVector{}};
  CHECK(validate_model(point).empty());

  FixedPointModel deg0 = s2_model(2);
  deg0.generators.push_back({"one", 0, {Polynomial::constant(1, 1), Polynomial::constant(1, 1)}});
  CHECK(has_code(validate_model(deg0), "W-DEGREE0"));

  FixedPointModel critical = s2_model(2);
  critical.moment_images[0] = {Rational(0)};
  CHECK(has_code(validate_model(critical), "W-CRITICAL-LEVEL"));
}

TEST_CASE("validate_model rejects malformed models") {
  FixedPointModel m = s2_model(2);
  m.moment_images.pop_back();
  CHECK_THROWS_AS(validate_model(m), InputError);
  m = s2_model(2);
  m.moment_images[0] = {Rational(0), Rational(1)};
  CHECK_THROWS_AS(validate_model(m), InputError);
  m = s2_model(2);
  m.generators[0].restrictions.pop_back();
  CHECK_THROWS_AS(validate_model(m), InputError);
  m = s2_model(2);
  m.generators[0].restrictions[1] = Polynomial::variable(2, 1);
  CHECK_THROWS_AS(validate_model(m), InputError);
}

TEST_CASE("degree span of the S2 model") {
  const KernelEngine eng(s2_model(4));
  CHECK(eng.degree_span(0).dim() == 1);
  CHECK(eng.format_tuple(eng.degree_span(0).basis[0], 0) == "(1, 1)");
  CHECK(eng.degree_span(1).dim() == 0);
  // Hand enumeration: u*1 = (u, u), x = (0, u).
  const auto& a2 = eng.degree_span(2);
  CHECK(a2.dim() == 2);
  CHECK(a2.contains(eng.from_polynomials({u(1, 0), u(1, 0)}, 2)));
  CHECK(a2.contains(eng.from_polynomials({zero(1), u(1, 0)}, 2)));
  // u^2, u*x, x^2 give (u^2, u^2), (0, u^2), (0, u^2).
  const auto& a4 = eng.degree_span(4);
  CHECK(a4.dim() == span_dim({eng.from_polynomials({u(1, 0, 1, 2), u(1, 0, 1, 2)}, 4),
                              eng.from_polynomials({zero(1), u(1, 0, 1, 2)}, 4),
                              eng.from_polynomials({zero(1), u(1, 0, 1, 2)}, 4)},
                             2));
  CHECK(a4.dim() == 2);
  CHECK_THROWS_AS(eng.degree_span(6), PreconditionError);
}

TEST_CASE("half-set enumeration") {
  const auto s2 = enumerate_half_sets(s2_model(2));
  REQUIRE(s2.size() == 3);
  CHECK(s2[0].points == IndexSet{0});
  CHECK(s2[1].points == IndexSet{1});
  CHECK(s2[2].points == IndexSet{0, 1});

  FixedPointModel line;
  line.torus_rank = 1;
  line.points = {"p1", "p2", "p3"};
  line.moment_images = {{Rational(-1)}, {Rational(1, 2)}, {Rational(1, 2)}};
  const auto ch = enumerate_half_sets(line);
  REQUIRE(ch.size() == 3);
  CHECK(ch[0].points == IndexSet{0});
  CHECK(ch[1].points == IndexSet{1, 2});
  CHECK(ch[2].points == IndexSet{0, 1, 2});

  FixedPointModel plane;
  plane.torus_rank = 2;
  plane.points = {"o", "a", "b"};
  plane.moment_images = {{Rational(0), Rational(0)}, {Rational(1), Rational(0)}, {Rational(0), Rational(1)}};
  const auto pc = enumerate_half_sets(plane);
  for (const auto& c : pc) CHECK(c.points.contains(0));
  CHECK(pc.size() == 4);

  // Every witness reproduces its half-set.
  for (const auto* md : {&line, &plane}) {
    for (const auto& c : enumerate_half_sets(*md))
      for (std::size_t i = 0; i < md->num_points(); ++i) {
        const bool inside = dot(md->moment_images[i], c.witness) <= 0;
        CHECK(inside == c.points.contains(i));
      }
  }
}

TEST_CASE("kernel pieces of the S2 model") {
  const KernelEngine eng(s2_model(4));
  const auto south = eng.k_half_basis(IndexSet{0}, 2);
  REQUIRE(south.dim() == 1);
  CHECK(eng.format_tuple(south.basis[0], 2) == "(0, u1)");
  const auto north = eng.k_half_basis(IndexSet{1}, 2);
  REQUIRE(north.dim() == 1);
  CHECK(eng.format_tuple(north.basis[0], 2) == "(u1, 0)");
  CHECK(eng.k_half_basis(IndexSet{0, 1}, 2).dim() == 0);
  CHECK_THROWS_AS(eng.k_half_basis(IndexSet{}, 2), PreconditionError);

  CHECK(eng.kernel_total(2).dim() == 2);
  CHECK(eng.kernel_total(0).dim() == 0);

  const auto red = eng.reduced_poincare();
  CHECK(red.even_table().betti == std::vector<std::size_t>{1, 0, 0});
  CHECK(red.warnings.empty());
  CHECK(KernelEngine(s2_model(0)).reduced_poincare().even_table().betti == std::vector<std::size_t>{1});
}

TEST_CASE("single fixed point") {
  FixedPointModel point;
  point.torus_rank = 1;
  point.points = {"p"};
  point.moment_images = {{Rational(0)}};
  point.degree_cap = 4;
  const KernelEngine eng(point);
  for (unsigned m = 0; m <= 4; ++m) CHECK(eng.kernel_total(m).dim() == 0);
  const auto red = eng.reduced_poincare();
  CHECK(red.rows[0].betti == 1);
  CHECK(has_code(red.warnings, "W-CRITICAL-LEVEL"));

  point.degree_cap = 0;
  CHECK(KernelEngine(point).reduced_poincare().even_table().betti == std::vector<std::size_t>{1});
}

TEST_CASE("S2 circle decomposition") {
  const KernelEngine eng(s2_model(4));
  const auto rep = eng.s1_decomposition_check();
  CHECK(rep.holds());
  const auto& d2 = rep.degrees[2];
  CHECK(d2.plus_dim == 1);
  CHECK(d2.minus_dim == 1);
  CHECK(d2.total_dim == 2);
  CHECK(d2.intersection_dim == 0);

  FixedPointModel one_side = s2_model(2);
  one_side.moment_images = {{Rational(-1)}, {Rational(-2)}};
  const auto r = KernelEngine(one_side).s1_decomposition_check();
  CHECK(r.holds());
  CHECK(r.degrees[2].plus_dim == 2);
  CHECK(r.degrees[2].minus_dim == 0);

  FixedPointModel critical = s2_model(2);
  critical.moment_images[0] = {Rational(0)};
  CHECK_THROWS_AS(KernelEngine(critical).s1_decomposition_check(), PreconditionError);
}

TEST_CASE("quotient ring constants") {
  const auto point = KernelEngine(s2_model(4)).quotient_ring_constants();
  CHECK(point.coset_basis[0].size() == 1);
  CHECK(point.coset_basis[2].empty());
  CHECK(point.coset_basis[4].empty());

  // CP2 reduced by a generic circle: a CP1 with y^2 = 0.
  const MomentPolytope cp2(projective_space(2));
  BridgeResult br = bridge_from_toric(cp2, circle_projection(cp2, {0, 1, 2}, Rational(1, 2)));
  br.model.degree_cap = 4;
  const KernelEngine eng(br.model);
  const auto q = eng.quotient_ring_constants();
  REQUIRE(q.coset_basis[2].size() == 1);
  CHECK(q.coset_basis[4].empty());
  bool found_square = false;
  for (const auto& c : q.constants) {
    if (c.left_degree == 0) {
      // 1 * v = v
      RatVector unit(q.coset_basis[c.right_degree].size());
      unit[c.right] = 1;
      CHECK(c.coeffs == unit);
    }
    if (c.left_degree == 2 && c.right_degree == 2) {
      found_square = true;
      CHECK(c.coeffs.empty());
      const RatVector sq = eng.multiply(q.coset_basis[2][0], 2, q.coset_basis[2][0], 2);
      CHECK(eng.kernel_total(4).contains(sq));
    }
  }
  CHECK(found_square);
}

TEST_CASE("monotone dominance and injectivity floor") {
  const MomentPolytope sq(cp1_cp1());
  const KernelEngine eng(bridge_from_toric(sq, circle_projection(sq, {1, 0, 2, 0}, Rational(3, 2))).model);
  const auto& ch = eng.chambers();
  const IndexSet all = IndexSet::full(eng.model().num_points());
  for (unsigned m = 0; m <= eng.model().degree_cap; ++m) {
    CHECK(eng.k_half_basis(all, m).dim() == 0);
    for (const auto& a : ch)
      for (const auto& b : ch)
        if (a.points.is_subset_of(b.points)) CHECK(subspace_of(eng.k_half_basis(b.points, m), eng.k_half_basis(a.points, m)));
  }
}

TEST_CASE("bridge: CP1") {
  const MomentPolytope cp1(projective_space(1));
  const auto br = bridge_from_toric(cp1);
  const auto& md = br.model;
  CHECK(md.num_points() == 2);
  CHECK(md.torus_rank == 1);
  CHECK(md.degree_cap == 2);
  CHECK(md.moment_images == std::vector<RatVector>{{Rational(-1, 2)}, {Rational(1, 2)}});
  REQUIRE(md.generators.size() == 2);
  CHECK(md.generators[0].restrictions == std::vector<Polynomial>{zero(1), u(1, 0, -1)});
  CHECK(md.generators[1].restrictions == std::vector<Polynomial>{u(1, 0), zero(1)});
  CHECK(validate_model(md).empty());
  CHECK(br.warnings.empty());
}

TEST_CASE("bridge: linear relations hold at every vertex") {
  for (const auto& ns : smooth_corpus()) {
    CAPTURE(ns.name);
    const MomentPolytope p(ns.setup);
    const auto md = bridge_from_toric(p).model;
    const auto alphas = linear_ideal_basis(ns.setup);
    const std::size_t r = alphas.size();
    for (std::size_t v = 0; v < md.num_points(); ++v)
      for (std::size_t k = 0; k < r; ++k) {
        Polynomial sum(r);
        for (std::size_t i = 0; i < md.generators.size(); ++i)
          sum = sum + md.generators[i].restrictions[v] * alphas[k][i];
        CHECK(sum == u(r, k));
      }
    CHECK(validate_model(md).empty());
  }
}

TEST_CASE("bridge: formality dimension count and ideal property") {
  for (const auto& ns : smooth_corpus()) {
    CAPTURE(ns.name);
    const MomentPolytope p(ns.setup);
    const GradedRing ring(build_presentation(p, p.build_face_complex()));
    const auto betti = ring.poincare_table();
    const KernelEngine eng(bridge_from_toric(p).model);
    for (unsigned m = 0; m <= eng.model().degree_cap; ++m)
      CHECK(eng.degree_span(m).dim() == free_module_dimension(betti, eng.model().torus_rank, m));
    CHECK(eng.ideal_violations().empty());
  }
}

TEST_CASE("bridge: circle reductions match the toric pipeline") {
  struct Case {
    QuotientSetup setup;
    std::vector<long> weights;
    Rational level;
  };
  const std::vector<Case> cases{
      {projective_space(2), {0, 1, 2}, Rational(1, 2)},
      {cp1_cp1(), {1, 0, 1, 0}, Rational(1, 2)},
      {projective_space(3), {0, 1, 2, 3}, Rational(3, 2)},
      {hirzebruch(1), {0, 0, 1, 2}, Rational(3, 2)},
  };
  for (const auto& c : cases) {
    RatVector a;
    for (auto w : c.weights) a.emplace_back(w);
    const MomentPolytope p(c.setup);
    const auto br = bridge_from_toric(p, circle_projection(p, a, c.level));
    CHECK(br.warnings.empty());
    const KernelEngine eng(br.model);
    const MomentPolytope q(augment_with_circle(c.setup, a, c.level));
    const GradedRing ring(build_presentation(q, q.build_face_complex()));
    CHECK(eng.reduced_poincare().even_table().betti == ring.poincare_table().betti);
    CHECK(eng.s1_decomposition_check().holds());
    CHECK(eng.ideal_violations().empty());
  }
}

TEST_CASE("bridge: diagonal circle on CP2 is flagged as non-isolated") {
  const MomentPolytope cp2(projective_space(2));
  const auto br = bridge_from_toric(cp2, circle_projection(cp2, {1, 1, 0}, Rational(1, 2)));
  CHECK(has_code(br.warnings, "W-NONISOLATED"));
  CHECK(br.model.moment_images == std::vector<RatVector>{{Rational(1, 2)}, {Rational(1, 2)}, {Rational(-1, 2)}});
}

TEST_CASE("bridge: projection checks") {
  const MomentPolytope cp2(projective_space(2));
  CHECK_THROWS_AS(bridge_from_toric(cp2, Projection{RatMatrix(1, 3), RatVector(1)}), InputError);
  CHECK_THROWS_AS(bridge_from_toric(cp2, Projection{RatMatrix(1, 2), RatVector(2)}), InputError);
  const MomentPolytope orbifold(make_setup({{1}, {1}, {2}}, {Rational(1)}));
  CHECK_THROWS_AS(bridge_from_toric(orbifold), PreconditionError);

  const auto crit = bridge_from_toric(cp2, circle_projection(cp2, {0, 1, 2}, Rational(1)));
  CHECK(has_code(crit.warnings, "W-CRITICAL-LEVEL"));
}

TEST_CASE("free module dimension") {
  const PoincareTable b{{1, 2, 1}, Provenance::RingPipeline};
  CHECK(free_module_dimension(b, 2, 0) == 1);
  CHECK(free_module_dimension(b, 2, 1) == 0);
  CHECK(free_module_dimension(b, 2, 2) == 2 + 2);
  CHECK(free_module_dimension(b, 2, 4) == 3 + 4 + 1);
}
