#include "symred/kirwan_kernel.hpp"

#include <algorithm>

#include "symred/errors.hpp"
#include "symred/feasibility.hpp"

namespace symred {

namespace {

GradedSubspace make_subspace(unsigned degree, const std::vector<RatVector>& vectors, std::size_t dim) {
  GradedSubspace s;
  s.degree = degree;
  const auto red = rref(RatMatrix::from_rows(vectors, dim));
  s.pivots = red.pivots;
  for (std::size_t i = 0; i < red.pivots.size(); ++i) s.basis.push_back(red.matrix.row_vector(i));
  return s;
}

bool is_zero_vector(const RatVector& v) { return is_zero(v); }

}  // namespace

RatVector GradedSubspace::reduce(RatVector v) const {
  for (std::size_t r = 0; r < basis.size(); ++r) {
    const Rational f = v[pivots[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (basis[r][c] != 0) v[c] -= f * basis[r][c];
  }
  return v;
}

bool GradedSubspace::contains(const RatVector& v) const { return is_zero_vector(reduce(v)); }

PoincareTable ReductionResult::even_table() const {
  PoincareTable t{{}, Provenance::KernelEngine};
  for (const auto& row : rows)
    if (row.degree % 2 == 0) t.betti.push_back(row.betti);
  return t;
}

bool S1Report::holds() const {
  return std::all_of(degrees.begin(), degrees.end(), [](const S1DegreeCheck& d) {
    return d.sum_equals_total && d.intersection_dim == 0;
  });
}

std::vector<ModelIssue> validate_model(const FixedPointModel& md) {
  const std::size_t np = md.num_points();
  if (np == 0) throw InputError("points: model needs at least one fixed point");
  if (np > IndexSet::kMaxSize) throw InputError("points: at most 32 fixed points supported");
  if (md.moment_images.size() != np)
    throw InputError("mu: expected " + std::to_string(np) + " moment images, got " +
                     std::to_string(md.moment_images.size()));
  for (const auto& mu : md.moment_images)
    if (mu.size() != md.torus_rank)
      throw InputError("mu: each moment image needs " + std::to_string(md.torus_rank) + " entries");
  for (const auto& g : md.generators) {
    if (g.restrictions.size() != np)
      throw InputError("generator " + g.name + ": expected " + std::to_string(np) +
                       " restrictions, got " + std::to_string(g.restrictions.size()));
    for (const auto& p : g.restrictions)
      if (p.nvars() != md.torus_rank)
        throw InputError("generator " + g.name + ": restriction uses wrong variable count");
  }

  std::vector<ModelIssue> issues;
  for (std::size_t i = 0; i < np; ++i)
    if (md.torus_rank > 0 && is_zero(md.moment_images[i]))
      issues.push_back({"W-CRITICAL-LEVEL", "point " + md.points[i] +
                                                " has moment image 0; 0 may be a critical value"});
  for (const auto& g : md.generators) {
    if (g.degree < 0) {
      issues.push_back({"E-DEGREE", "generator " + g.name + " has negative degree"});
      continue;
    }
    if (g.degree == 0) {
      issues.push_back({"W-DEGREE0", "generator " + g.name +
                                         " has degree 0 and is ignored (the unit is implicit)"});
      continue;
    }
    for (std::size_t i = 0; i < np; ++i) {
      const auto& p = g.restrictions[i];
      const bool ok = g.degree % 2 == 0 ? p.is_homogeneous_of_degree(static_cast<unsigned>(g.degree / 2))
                                        : p.is_zero();
      if (!ok)
        issues.push_back({"E-HOMOGENEITY", "generator " + g.name + " at point " + md.points[i] +
                                               ": restriction " + p.to_string("u") +
                                               " is not homogeneous of degree " +
                                               std::to_string(g.degree)});
    }
    if (md.torus_rank == 1 && g.degree == 2) {
      for (std::size_t i = 0; i < np; ++i)
        for (std::size_t j = i + 1; j < np; ++j) {
          const Polynomial diff = g.restrictions[i] - g.restrictions[j];
          const bool divisible = std::all_of(diff.terms().begin(), diff.terms().end(),
                                             [](const auto& t) { return t.first[0] >= 1; });
          if (!divisible)
            issues.push_back({"E-DIVISIBILITY", "generator " + g.name + ": restrictions at " +
                                                    md.points[i] + " and " + md.points[j] +
                                                    " differ by a non-multiple of u1"});
        }
    }
  }
  return issues;
}

std::vector<Chamber> enumerate_half_sets(const FixedPointModel& md) {
  const std::size_t np = md.num_points();
  const std::size_t r = md.torus_rank;
  const IndexSet all = IndexSet::full(np);
  std::vector<Chamber> out;
  const std::uint64_t count = std::uint64_t{1} << np;
  for (std::uint64_t bits = 0; bits < count; ++bits) {
    const IndexSet s(static_cast<std::uint32_t>(bits));
    if (s == all) {
      out.push_back({s, RatVector(r)});
      continue;
    }
    FeasibilitySystem sys(r);
    for (std::size_t i = 0; i < np; ++i) {
      if (s.contains(i))
        sys.add_inequality(md.moment_images[i], Relation::LessEq, 0);
      else
        sys.add_inequality(md.moment_images[i], Relation::GreaterEq, 1);
    }
    auto res = lp_feasible(sys);
    if (auto* w = std::get_if<FeasibleWitness>(&res)) out.push_back({s, w->point});
  }
  std::sort(out.begin(), out.end(), [](const Chamber& a, const Chamber& b) { return a.points < b.points; });
  return out;
}

KernelEngine::KernelEngine(FixedPointModel md) : model_(std::move(md)) {
  validate_model(model_);
  chambers_ = enumerate_half_sets(model_);

  for (const auto& g : model_.generators) {
    if (g.degree <= 0 || g.degree % 2 != 0) {
      generator_tuples_.emplace_back();
      continue;
    }
    const unsigned half = static_cast<unsigned>(g.degree / 2);
    std::vector<Polynomial> parts;
    for (const auto& p : g.restrictions) parts.push_back(p.homogeneous_part(half));
    generator_tuples_.push_back(from_polynomials(parts, static_cast<unsigned>(g.degree)));
  }

  const std::size_t r = model_.torus_rank;
  for (unsigned m = 0; m <= model_.degree_cap; ++m) {
    const std::size_t dim = coordinate_dim(m);
    std::vector<RatVector> span;
    if (m == 0) {
      span.push_back(RatVector(dim, 1));
    } else if (m % 2 == 0) {
      for (std::size_t j = 0; j < r; ++j) {
        const RatVector uj = from_polynomials(
            std::vector<Polynomial>(model_.num_points(), Polynomial::variable(r, j)), 2);
        for (const auto& w : ambient_[m - 2].basis) span.push_back(multiply(uj, 2, w, m - 2));
      }
      for (std::size_t g = 0; g < model_.generators.size(); ++g) {
        const int deg = model_.generators[g].degree;
        if (deg <= 0 || deg % 2 != 0 || static_cast<unsigned>(deg) > m) continue;
        const unsigned rest = m - static_cast<unsigned>(deg);
        for (const auto& w : ambient_[rest].basis)
          span.push_back(multiply(generator_tuples_[g], static_cast<unsigned>(deg), w, rest));
      }
    }
    ambient_.push_back(make_subspace(m, span, dim));
  }

  for (unsigned m = 0; m <= model_.degree_cap; ++m) {
    std::vector<RatVector> span;
    for (const auto& ch : chambers_)
      for (auto& v : vanishing_on(ch.points, m).basis) span.push_back(std::move(v));
    kernel_.push_back(make_subspace(m, span, coordinate_dim(m)));
  }
}

std::size_t KernelEngine::coordinate_dim(unsigned m) const {
  if (m % 2 != 0) return 0;
  return model_.num_points() * count_monomials(model_.torus_rank, m / 2);
}

std::vector<Polynomial> KernelEngine::to_polynomials(const RatVector& v, unsigned m) const {
  const std::size_t r = model_.torus_rank;
  std::vector<Polynomial> out;
  if (m % 2 != 0) return std::vector<Polynomial>(model_.num_points(), Polynomial(r));
  const std::size_t block = count_monomials(r, m / 2);
  for (std::size_t i = 0; i < model_.num_points(); ++i) {
    RatVector part(v.begin() + static_cast<long>(i * block), v.begin() + static_cast<long>((i + 1) * block));
    out.push_back(from_coordinates(part, r, m / 2));
  }
  return out;
}

RatVector KernelEngine::from_polynomials(const std::vector<Polynomial>& polys, unsigned m) const {
  RatVector v;
  if (m % 2 != 0) return v;
  v.reserve(coordinate_dim(m));
  for (const auto& p : polys) {
    const auto c = to_coordinates(p, m / 2);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

RatVector KernelEngine::multiply(const RatVector& a, unsigned deg_a, const RatVector& b, unsigned deg_b) const {
  const auto pa = to_polynomials(a, deg_a);
  const auto pb = to_polynomials(b, deg_b);
  std::vector<Polynomial> prod;
  prod.reserve(pa.size());
  for (std::size_t i = 0; i < pa.size(); ++i) prod.push_back(pa[i] * pb[i]);
  return from_polynomials(prod, deg_a + deg_b);
}

std::string KernelEngine::format_tuple(const RatVector& v, unsigned m) const {
  std::string s = "(";
  const auto polys = to_polynomials(v, m);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (i) s += ", ";
    s += polys[i].to_string("u");
  }
  return s + ")";
}

const GradedSubspace& KernelEngine::degree_span(unsigned m) const {
  if (m > model_.degree_cap)
    throw PreconditionError("degree " + std::to_string(m) + " exceeds the model's cap");
  return ambient_[m];
}

const GradedSubspace& KernelEngine::kernel_total(unsigned m) const {
  if (m > model_.degree_cap)
    throw PreconditionError("degree " + std::to_string(m) + " exceeds the model's cap");
  return kernel_[m];
}

bool KernelEngine::realizable(IndexSet s) const {
  return std::any_of(chambers_.begin(), chambers_.end(), [s](const Chamber& c) { return c.points == s; });
}

GradedSubspace KernelEngine::vanishing_on(IndexSet s, unsigned m) const {
  const auto& amb = ambient_[m];
  const std::size_t dim = coordinate_dim(m);
  if (amb.dim() == 0) return make_subspace(m, {}, dim);
  const std::size_t block = count_monomials(model_.torus_rank, m / 2);
  std::vector<std::size_t> cols;
  for (auto p : s.members())
    for (std::size_t k = 0; k < block; ++k) cols.push_back(p * block + k);
  // c in ker(M) where M[col][j] = (ambient basis j)[col].
  RatMatrix constraint(cols.size(), amb.dim());
  for (std::size_t i = 0; i < cols.size(); ++i)
    for (std::size_t j = 0; j < amb.dim(); ++j) constraint(i, j) = amb.basis[j][cols[i]];
  std::vector<RatVector> members;
  for (const auto& c : kernel_basis(constraint)) {
    RatVector v(dim);
    for (std::size_t j = 0; j < amb.dim(); ++j)
      if (c[j] != 0)
        for (std::size_t k = 0; k < dim; ++k) v[k] += c[j] * amb.basis[j][k];
    members.push_back(std::move(v));
  }
  return make_subspace(m, members, dim);
}

GradedSubspace KernelEngine::k_half_basis(IndexSet s, unsigned m) const {
  if (m > model_.degree_cap)
    throw PreconditionError("degree " + std::to_string(m) + " exceeds the model's cap");
  if (!realizable(s)) throw PreconditionError("half-set " + s.to_string() + " is not realizable");
  return vanishing_on(s, m);
}

ReductionResult KernelEngine::reduced_poincare() const {
  ReductionResult res;
  for (unsigned m = 0; m <= model_.degree_cap; ++m) {
    const std::size_t a = ambient_[m].dim();
    const std::size_t k = kernel_[m].dim();
    res.rows.push_back({m, a, k, a - k});
  }
  for (auto& issue : validate_model(model_))
    if (issue.code == "W-CRITICAL-LEVEL") res.warnings.push_back(std::move(issue));
  return res;
}

std::vector<IdealViolation> KernelEngine::ideal_violations() const {
  std::vector<IdealViolation> out;
  const unsigned cap = model_.degree_cap;
  for (unsigned m = 0; m <= cap; ++m)
    for (std::size_t i = 0; i < kernel_[m].dim(); ++i)
      for (unsigned m2 = 0; m + m2 <= cap; ++m2)
        for (std::size_t j = 0; j < ambient_[m2].dim(); ++j) {
          const RatVector prod = multiply(kernel_[m].basis[i], m, ambient_[m2].basis[j], m2);
          if (!kernel_[m + m2].contains(prod)) out.push_back({m, i, m2, j});
        }
  return out;
}

QuotientRing KernelEngine::quotient_ring_constants() const {
  if (!ideal_violations().empty())
    throw InternalError("kernel is not closed under multiplication; the model is inconsistent");
  const unsigned cap = model_.degree_cap;
  QuotientRing q;
  for (unsigned m = 0; m <= cap; ++m) {
    std::vector<RatVector> chosen;
    std::vector<RatVector> accumulated = kernel_[m].basis;
    GradedSubspace current = kernel_[m];
    for (const auto& w : ambient_[m].basis) {
      if (current.contains(w)) continue;
      chosen.push_back(w);
      accumulated.push_back(w);
      current = make_subspace(m, accumulated, coordinate_dim(m));
    }
    q.coset_basis.push_back(std::move(chosen));
  }
  for (unsigned a = 0; a <= cap; ++a)
    for (unsigned b = a; a + b <= cap; ++b) {
      const unsigned c = a + b;
      const auto& target = q.coset_basis[c];
      const std::size_t dim = coordinate_dim(c);
      RatMatrix system(dim, target.size() + kernel_[c].dim());
      for (std::size_t col = 0; col < target.size(); ++col)
        for (std::size_t row = 0; row < dim; ++row) system(row, col) = target[col][row];
      for (std::size_t col = 0; col < kernel_[c].dim(); ++col)
        for (std::size_t row = 0; row < dim; ++row)
          system(row, target.size() + col) = kernel_[c].basis[col][row];
      for (std::size_t i = 0; i < q.coset_basis[a].size(); ++i)
        for (std::size_t j = (a == b ? i : 0); j < q.coset_basis[b].size(); ++j) {
          const RatVector prod = multiply(q.coset_basis[a][i], a, q.coset_basis[b][j], b);
          const auto sol = solve_linear(system, prod);
          if (!sol)
            throw InternalError("product of degree " + std::to_string(a) + " and " +
                                std::to_string(b) + " classes leaves the ambient span");
          q.constants.push_back({a, i, b, j, RatVector(sol->begin(), sol->begin() + static_cast<long>(target.size()))});
        }
    }
  return q;
}

S1Report KernelEngine::s1_decomposition_check() const {
  if (model_.torus_rank != 1) throw PreconditionError("circle decomposition needs torus rank 1");
  IndexSet plus;
  IndexSet minus;
  for (std::size_t i = 0; i < model_.num_points(); ++i) {
    const Rational& mu = model_.moment_images[i][0];
    if (mu == 0) throw PreconditionError("point " + model_.points[i] + " lies on the reduction level");
    if (mu > 0)
      plus.insert(i);
    else
      minus.insert(i);
  }
  S1Report rep;
  for (unsigned m = 0; m <= model_.degree_cap; ++m) {
    const auto kp = vanishing_on(plus, m);
    const auto km = vanishing_on(minus, m);
    std::vector<RatVector> both = kp.basis;
    both.insert(both.end(), km.basis.begin(), km.basis.end());
    const auto sum = make_subspace(m, both, coordinate_dim(m));
    bool equal = sum.dim() == kernel_[m].dim();
    for (const auto& v : sum.basis) equal = equal && kernel_[m].contains(v);
    rep.degrees.push_back({m, kp.dim(), km.dim(), kernel_[m].dim(), kp.dim() + km.dim() - sum.dim(), equal});
  }
  return rep;
}

std::size_t free_module_dimension(const PoincareTable& betti, std::size_t r, unsigned m) {
  if (m % 2 != 0) return 0;
  std::size_t total = 0;
  for (std::size_t k = 0; k < betti.betti.size() && 2 * k <= m; ++k)
    total += betti.betti[k] * count_monomials(r, static_cast<unsigned>(m / 2 - k));
  return total;
}

}  // namespace symred
