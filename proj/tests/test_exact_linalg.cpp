#include "doctest.h"
#include "generators.hpp"
#include "symred/errors.hpp"
#include "symred/feasibility.hpp"
#include "symred/matrix.hpp"

using namespace symred;
using symred::testing::Gen;

namespace {

RatMatrix mat(std::vector<std::vector<long>> rows) {
  std::vector<RatVector> r;
  for (auto& row : rows) {
    RatVector v;
    for (auto x : row) v.emplace_back(x);
    r.push_back(v);
  }
  return RatMatrix(r);
}

RatVector vec(std::vector<long> xs) {
  RatVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

// Independent evaluation of a constraint, written out by hand.
bool holds(const RatVector& c, Relation kind, const Rational& rhs, const RatVector& x) {
  Rational lhs = 0;
  for (std::size_t i = 0; i < c.size(); ++i) lhs += c[i] * x[i];
  switch (kind) {
    case Relation::GreaterEq: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::LessEq: return lhs <= rhs;
    case Relation::Less: return lhs < rhs;
  }
  return false;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("+7") == 7);
  CHECK(to_string(parse_rational("6/3")) == "2");
  CHECK(to_string(Rational(0)) == "0");
  CHECK(parse_rational("0/5").get_den() == 1);
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("1.5"), InputError);
  CHECK_THROWS_AS(parse_rational(""), InputError);
  CHECK(to_string(RatVector{Rational(1, 2), Rational(-3)}) == "[1/2, -3]");
}

TEST_CASE("rref examples") {
  auto a = rref(mat({{2, 4}, {1, 2}}));
  CHECK(a.matrix == mat({{1, 2}, {0, 0}}));
  CHECK(a.pivots == std::vector<std::size_t>{0});

  auto b = rref(RatMatrix::identity(3));
  CHECK(b.matrix == RatMatrix::identity(3));
  CHECK(b.pivots == std::vector<std::size_t>{0, 1, 2});

  auto c = rref(mat({{0, 0}}));
  CHECK(c.matrix == mat({{0, 0}}));
  CHECK(c.pivots.empty());
}

TEST_CASE("kernel basis examples") {
  CHECK(kernel_basis(mat({{1, 1}})) == std::vector<RatVector>{vec({-1, 1})});
  CHECK(kernel_basis(RatMatrix::identity(2)).empty());
  const auto k = kernel_basis(mat({{1, 1, 1}}));
  CHECK(k == std::vector<RatVector>{vec({-1, 1, 0}), vec({-1, 0, 1})});
}

TEST_CASE("solve_linear examples") {
  CHECK(solve_linear(RatMatrix::identity(2), vec({3, 5})) == vec({3, 5}));
  CHECK(solve_linear(mat({{1, 1}}), vec({2})) == vec({2, 0}));
  CHECK_FALSE(solve_linear(mat({{1}, {1}}), vec({1, 2})).has_value());
  CHECK_THROWS_AS(solve_linear(mat({{1, 1}}), vec({1, 2})), InputError);
}

TEST_CASE("determinant") {
  CHECK(determinant(mat({{1, 2}, {3, 4}})) == -2);
  CHECK(determinant(mat({{1, 2}, {2, 4}})) == 0);
  CHECK(determinant(RatMatrix::identity(4)) == 1);
}

TEST_CASE("ragged rows are rejected") {
  CHECK_THROWS_AS(RatMatrix(std::vector<RatVector>{vec({1, 2}), vec({1})}), InputError);
}

TEST_CASE("property: kernel, rank-nullity, rref idempotence, solve") {
  Gen gen(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = static_cast<std::size_t>(gen.integer(1, 5));
    const std::size_t cols = static_cast<std::size_t>(gen.integer(1, 6));
    const RatMatrix m = gen.matrix(rows, cols);

    const auto ker = kernel_basis(m);
    for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
    CHECK(rank(m) + ker.size() == cols);
    CHECK(rank(RatMatrix::from_rows(ker, cols)) == ker.size());

    const auto once = rref(m);
    CHECK(rref(once.matrix).matrix == once.matrix);
    for (std::size_t i = 1; i < once.pivots.size(); ++i) CHECK(once.pivots[i - 1] < once.pivots[i]);

    const RatVector x0 = gen.vector(cols);
    const RatVector b = m.apply(x0);
    const auto s = solve_linear(m, b);
    REQUIRE(s.has_value());
    CHECK(m.apply(*s) == b);
  }
}

TEST_CASE("lp examples") {
  SUBCASE("x >= 1 and -x >= 0 is infeasible") {
    FeasibilitySystem sys(1);
    sys.add_inequality(vec({1}), Relation::GreaterEq, 1);
    sys.add_inequality(vec({-1}), Relation::GreaterEq, 0);
    const auto res = lp_feasible(sys);
    REQUIRE(std::holds_alternative<FarkasCertificate>(res));
    const auto& cert = std::get<FarkasCertificate>(res);
    CHECK(cert.inequality_multipliers[0] > 0);
    CHECK(cert.inequality_multipliers[0] == cert.inequality_multipliers[1]);
    CHECK(verify_certificate(sys, cert));
  }
  SUBCASE("simplex edge is feasible") {
    FeasibilitySystem sys(2);
    sys.add_equality(vec({1, 1}), 1);
    sys.add_inequality(vec({1, 0}), Relation::GreaterEq, 0);
    sys.add_inequality(vec({0, 1}), Relation::GreaterEq, 0);
    const auto res = lp_feasible(sys);
    REQUIRE(is_feasible(res));
    const auto& x = std::get<FeasibleWitness>(res).point;
    CHECK(x[0] + x[1] == 1);
    CHECK(x[0] >= 0);
    CHECK(x[1] >= 0);
  }
  SUBCASE("half-plane system with a witness checked by substitution") {
    FeasibilitySystem sys(2);
    sys.add_inequality(vec({1, 1}), Relation::LessEq, 0);
    sys.add_inequality(vec({1, 0}), Relation::GreaterEq, 1);
    const auto res = lp_feasible(sys);
    REQUIRE(is_feasible(res));
    const auto& x = std::get<FeasibleWitness>(res).point;
    CHECK(holds(vec({1, 1}), Relation::LessEq, 0, x));
    CHECK(holds(vec({1, 0}), Relation::GreaterEq, 1, x));
    // The example witness (1, -2) satisfies it too.
    CHECK(holds(vec({1, 1}), Relation::LessEq, 0, vec({1, -2})));
    CHECK(holds(vec({1, 0}), Relation::GreaterEq, 1, vec({1, -2})));
  }
  SUBCASE("empty system") {
    const auto res = lp_feasible(FeasibilitySystem(3));
    REQUIRE(is_feasible(res));
    CHECK(std::get<FeasibleWitness>(res).point == RatVector(3));
  }
  SUBCASE("strict inequalities") {
    FeasibilitySystem sys(1);
    sys.add_inequality(vec({1}), Relation::Greater, 0);
    sys.add_inequality(vec({1}), Relation::Less, 0);
    CHECK_FALSE(is_feasible(lp_feasible(sys)));
  }
}

TEST_CASE("property: lp results verify by substitution") {
  Gen gen(7);
  int feasible = 0;
  int infeasible = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(gen.integer(1, 4));
    FeasibilitySystem sys(dim);
    const long eqs = gen.integer(0, 2);
    const long ineqs = gen.integer(1, 5);
    for (long e = 0; e < eqs; ++e) sys.add_equality(gen.vector(dim, 3), gen.rational());
    for (long i = 0; i < ineqs; ++i)
      sys.add_inequality(gen.vector(dim, 3), static_cast<Relation>(gen.integer(0, 3)), gen.rational());
    const auto res = lp_feasible(sys);
    if (auto* w = std::get_if<FeasibleWitness>(&res)) {
      ++feasible;
      REQUIRE(w->point.size() == dim);
      for (const auto& e : sys.equalities()) {
        Rational lhs = 0;
        for (std::size_t j = 0; j < dim; ++j) lhs += e.coeffs[j] * w->point[j];
        CHECK(lhs == e.rhs);
      }
      for (const auto& c : sys.inequalities()) {
        // Strict constraints are solved with margin one.
        if (c.kind == Relation::Greater)
          CHECK(holds(c.coeffs, Relation::GreaterEq, c.rhs + 1, w->point));
        else if (c.kind == Relation::Less)
          CHECK(holds(c.coeffs, Relation::LessEq, c.rhs - 1, w->point));
        else
          CHECK(holds(c.coeffs, c.kind, c.rhs, w->point));
      }
    } else {
      ++infeasible;
      const auto& cert = std::get<FarkasCertificate>(res);
      // Combine by hand: sum of multiplied rows must vanish with a positive rhs.
      RatVector combo(dim);
      Rational rhs = 0;
      for (std::size_t e = 0; e < sys.equalities().size(); ++e) {
        for (std::size_t j = 0; j < dim; ++j) combo[j] += cert.equality_multipliers[e] * sys.equalities()[e].coeffs[j];
        rhs += cert.equality_multipliers[e] * sys.equalities()[e].rhs;
      }
      for (std::size_t i = 0; i < sys.inequalities().size(); ++i) {
        const auto& c = sys.inequalities()[i];
        const Rational z = cert.inequality_multipliers[i];
        CHECK(z >= 0);
        const int s = (c.kind == Relation::GreaterEq || c.kind == Relation::Greater) ? 1 : -1;
        const int delta = (c.kind == Relation::Greater || c.kind == Relation::Less) ? 1 : 0;
        for (std::size_t j = 0; j < dim; ++j) combo[j] += z * s * c.coeffs[j];
        rhs += z * (s * c.rhs + delta);
      }
      CHECK(is_zero(combo));
      CHECK(rhs > 0);
    }
  }
  CHECK(feasible > 20);
  CHECK(infeasible > 20);
}
