#include "symred/bridge.hpp"

#include "symred/errors.hpp"
#include "symred/toric_ring.hpp"

namespace symred {

namespace {

struct Chart {
  std::vector<RatVector> alphas;
  RatMatrix gram;
};

Chart make_chart(const QuotientSetup& s) {
  Chart c;
  c.alphas = linear_ideal_basis(s);
  const std::size_t r = c.alphas.size();
  c.gram = RatMatrix(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) c.gram(i, j) = dot(c.alphas[i], c.alphas[j]);
  return c;
}

RatVector chart_coords(const Chart& c, const RatVector& xi) {
  RatVector rhs;
  for (const auto& a : c.alphas) rhs.push_back(dot(a, xi));
  auto sol = solve_linear(c.gram, rhs);
  if (!sol) throw InternalError("Gram matrix of the linear relations is singular");
  return *sol;
}

}  // namespace

BridgeResult bridge_from_toric(const MomentPolytope& polytope, const std::optional<Projection>& projection) {
  const auto& s = polytope.setup();
  if (!polytope.diagnostics().smooth) throw PreconditionError("bridge needs a smooth setup");
  const std::size_t n = s.num_coords();
  const Chart chart = make_chart(s);
  const std::size_t r = chart.alphas.size();

  std::size_t target = r;
  std::vector<Polynomial> u_images;
  if (projection) {
    const auto& p = projection->matrix;
    if (p.cols() != r)
      throw InputError("projection: expected " + std::to_string(r) + " columns, got " + std::to_string(p.cols()));
    if (projection->shift.size() != p.rows())
      throw InputError("shift: expected " + std::to_string(p.rows()) + " entries, got " +
                       std::to_string(projection->shift.size()));
    if (p.rows() > r) throw InputError("projection: target rank exceeds torus rank");
    target = p.rows();
    for (std::size_t k = 0; k < r; ++k) {
      Polynomial img(target);
      for (std::size_t kk = 0; kk < target; ++kk) img = img + Polynomial::variable(target, kk) * p(kk, k);
      u_images.push_back(std::move(img));
    }
  }

  BridgeResult out;
  FixedPointModel& md = out.model;
  md.torus_rank = target;
  md.degree_cap = static_cast<unsigned>(2 * (r - (projection ? target : 0)));
  for (std::size_t i = 0; i < n; ++i) md.generators.push_back({"x" + std::to_string(i + 1), 2, {}});

  const auto& vs = polytope.vertices();
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const auto& vx = vs[v];
    md.points.push_back("v" + std::to_string(v + 1));
    RatVector mu = chart_coords(chart, vx.coords);
    if (projection) {
      mu = projection->matrix.apply(mu);
      for (std::size_t k = 0; k < target; ++k) mu[k] += projection->shift[k];
    }
    md.moment_images.push_back(mu);

    const auto off = vx.basis.complement(n).members();
    RatMatrix mv(r, r);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t col = 0; col < r; ++col) mv(k, col) = chart.alphas[k][off[col]];
    std::vector<Polynomial> restr(n, Polynomial(r));
    for (std::size_t k = 0; k < r; ++k) {
      RatVector e(r);
      e[k] = 1;
      const auto y = solve_linear(mv, e);
      if (!y) throw InternalError("vertex " + vx.basis.to_string() + " has a singular tangent system");
      for (std::size_t col = 0; col < r; ++col)
        restr[off[col]] = restr[off[col]] + Polynomial::variable(r, k) * (*y)[col];
    }
    for (std::size_t i = 0; i < n; ++i) {
      Polynomial p = projection ? restr[i].substitute(u_images, target) : restr[i];
      if (projection && !vx.basis.contains(i) && p.is_zero())
        out.warnings.push_back({"W-NONISOLATED", "tangent weight of x" + std::to_string(i + 1) +
                                                     " at " + md.points.back() +
                                                     " vanishes; fixed points of the subtorus are not isolated"});
      md.generators[i].restrictions.push_back(std::move(p));
    }
    if (is_zero(mu))
      out.warnings.push_back({"W-CRITICAL-LEVEL", "point " + md.points.back() + " has moment image 0"});
  }
  return out;
}

Projection circle_projection(const MomentPolytope& polytope, const RatVector& weights, const Rational& level) {
  const auto& s = polytope.setup();
  if (weights.size() != s.num_coords())
    throw InputError("circle weights: expected " + std::to_string(s.num_coords()) + " entries");
  const Chart chart = make_chart(s);
  const std::size_t r = chart.alphas.size();
  Projection p{RatMatrix(1, r), RatVector(1)};
  for (std::size_t k = 0; k < r; ++k) p.matrix(0, k) = dot(weights, chart.alphas[k]);
  const auto& v = polytope.vertices().front();
  const RatVector mu = chart_coords(chart, v.coords);
  p.shift[0] = dot(weights, v.coords) - level - p.matrix.apply(mu)[0];
  return p;
}

QuotientSetup augment_with_circle(const QuotientSetup& s, const RatVector& weights, const Rational& level) {
  const std::size_t n = s.num_coords();
  const std::size_t d = s.group_rank();
  if (weights.size() != n) throw InputError("circle weights: expected " + std::to_string(n) + " entries");
  QuotientSetup out{RatMatrix(n, d + 1), s.level};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) out.weights(i, j) = s.weights(i, j);
    out.weights(i, d) = weights[i];
  }
  out.level.push_back(level);
  return out;
}

}  // namespace symred
