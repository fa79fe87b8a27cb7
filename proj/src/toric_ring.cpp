#include "symred/toric_ring.hpp"

#include <algorithm>

#include "symred/errors.hpp"

namespace symred {

bool RingPresentation::is_unit_ideal() const {
  return std::any_of(monomial_generators.begin(), monomial_generators.end(),
                     [](IndexSet s) { return s.empty(); });
}

Polynomial RingPresentation::relation_polynomial(std::size_t i) const {
  Polynomial p(num_vars);
  for (std::size_t j = 0; j < num_vars; ++j) {
    Monomial m(num_vars, 0);
    m[j] = 1;
    p.add_term(m, linear_relations.at(i)[j]);
  }
  return p;
}

Polynomial RingPresentation::generator_polynomial(std::size_t i) const {
  Monomial m(num_vars, 0);
  for (auto j : monomial_generators.at(i).members()) m[j] = 1;
  return Polynomial::monomial(m);
}

std::vector<RatVector> linear_ideal_basis(const QuotientSetup& s) {
  return kernel_basis(s.weights.transpose());
}

std::vector<Polynomial> stanley_reisner_generators(const FaceComplex& c) {
  std::vector<Polynomial> out;
  for (auto nonface : c.minimal_nonfaces) {
    Monomial m(c.ground_size, 0);
    for (auto i : nonface.members()) m[i] = 1;
    out.push_back(Polynomial::monomial(m));
  }
  return out;
}

RingPresentation build_presentation(const MomentPolytope& polytope, const FaceComplex& complex) {
  const auto& s = polytope.setup();
  RingPresentation p;
  p.num_vars = s.num_coords();
  p.linear_relations = span_basis(linear_ideal_basis(s), s.num_coords());
  p.monomial_generators = complex.minimal_nonfaces;
  p.degree_cap = s.complex_dim();
  p.top_faces = complex.facets();
  p.smooth = polytope.diagnostics().smooth;
  return p;
}

GradedRing::GradedRing(RingPresentation p) : pres_(std::move(p)) {
  const std::size_t n = pres_.num_vars;
  const RrefResult rel = rref(RatMatrix::from_rows(pres_.linear_relations, n));
  std::vector<bool> pivot(n, false);
  for (auto c : rel.pivots) pivot[c] = true;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) free_vars_.push_back(j);

  const std::size_t nf = free_vars_.size();
  images_.assign(n, Polynomial(nf));
  for (std::size_t f = 0; f < nf; ++f) images_[free_vars_[f]] = Polynomial::variable(nf, f);
  for (std::size_t r = 0; r < rel.pivots.size(); ++r) {
    // x_p + sum_f a_f x_f = 0  =>  x_p = -sum_f a_f x_f
    Polynomial img(nf);
    for (std::size_t f = 0; f < nf; ++f)
      img = img + Polynomial::variable(nf, f) * Rational(-rel.matrix(r, free_vars_[f]));
    images_[rel.pivots[r]] = img;
  }
  for (std::size_t g = 0; g < pres_.monomial_generators.size(); ++g)
    generator_images_.push_back(pres_.generator_polynomial(g).substitute(images_, nf));

  for (unsigned k = 0; k <= pres_.degree_cap + 2; ++k) degrees_.push_back(compute_degree(k));
}

GradedRing::DegreeData GradedRing::compute_degree(unsigned k) const {
  const std::size_t nf = free_vars_.size();
  DegreeData data;
  data.monomials = monomials_of_degree(nf, k);
  std::vector<RatVector> span;
  for (std::size_t g = 0; g < generator_images_.size(); ++g) {
    const unsigned gdeg = static_cast<unsigned>(pres_.monomial_generators[g].size());
    if (gdeg > k) continue;
    for (const auto& m : monomials_of_degree(nf, k - gdeg))
      span.push_back(to_coordinates(generator_images_[g] * Polynomial::monomial(m), k));
  }
  data.reduction = rref(RatMatrix::from_rows(span, data.monomials.size()));
  std::vector<bool> pivot(data.monomials.size(), false);
  for (auto c : data.reduction.pivots) pivot[c] = true;
  for (std::size_t c = 0; c < data.monomials.size(); ++c)
    if (!pivot[c]) data.basis_columns.push_back(c);
  return data;
}

GradedRing::DegreeData GradedRing::degree_data(unsigned k) const {
  if (k < degrees_.size()) return degrees_[k];
  return compute_degree(k);
}

std::size_t GradedRing::graded_component_dim(unsigned k) const {
  if (pres_.is_unit_ideal()) return 0;
  return degree_data(k).basis_columns.size();
}

std::vector<Monomial> GradedRing::basis(unsigned k) const {
  std::vector<Monomial> out;
  if (pres_.is_unit_ideal()) return out;
  const auto data = degree_data(k);
  for (auto c : data.basis_columns) {
    Monomial m(pres_.num_vars, 0);
    for (std::size_t f = 0; f < free_vars_.size(); ++f) m[free_vars_[f]] = data.monomials[c][f];
    out.push_back(std::move(m));
  }
  return out;
}

PoincareTable GradedRing::poincare_table() const {
  PoincareTable t{{}, Provenance::RingPipeline};
  for (unsigned k = 0; k <= pres_.degree_cap; ++k) t.betti.push_back(graded_component_dim(k));
  const auto above = graded_component_dim(static_cast<unsigned>(pres_.degree_cap + 1));
  if (above != 0)
    throw InternalError("quotient does not vanish above degree " +
                        std::to_string(2 * pres_.degree_cap) + " (dimension " +
                        std::to_string(above) + "): polytope not compact and simple");
  return t;
}

RatVector GradedRing::reduce(const Polynomial& eliminated, unsigned k, const DegreeData& data) const {
  RatVector v = to_coordinates(eliminated, k);
  const auto& red = data.reduction;
  for (std::size_t r = 0; r < red.pivots.size(); ++r) {
    const Rational f = v[red.pivots[r]];
    if (f == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (red.matrix(r, c) != 0) v[c] -= f * red.matrix(r, c);
  }
  return v;
}

ResidueClass GradedRing::normal_form(const Polynomial& p) const {
  if (p.nvars() != pres_.num_vars) throw InputError("normal_form: wrong number of variables");
  ResidueClass out{Polynomial(pres_.num_vars), false};
  if (pres_.is_unit_ideal()) return out;
  const std::size_t nf = free_vars_.size();
  const int top = p.degree();
  for (int k = 0; k <= top; ++k) {
    const Polynomial part = p.homogeneous_part(static_cast<unsigned>(k));
    if (part.is_zero()) continue;
    if (static_cast<std::size_t>(k) > pres_.degree_cap) {
      out.truncated = true;
      continue;
    }
    const auto data = degree_data(static_cast<unsigned>(k));
    const RatVector v = reduce(part.substitute(images_, nf), static_cast<unsigned>(k), data);
    for (auto c : data.basis_columns) {
      if (v[c] == 0) continue;
      Monomial m(pres_.num_vars, 0);
      for (std::size_t f = 0; f < nf; ++f) m[free_vars_[f]] = data.monomials[c][f];
      out.representative.add_term(m, v[c]);
    }
  }
  return out;
}

std::vector<ResidueClass> GradedRing::chern_classes() const {
  const std::size_t n = pres_.num_vars;
  std::vector<ResidueClass> out;
  for (std::size_t k = 1; k <= pres_.degree_cap; ++k) {
    Polynomial ek(n);
    for (auto subset : subsets_of_size(n, k)) {
      Monomial m(n, 0);
      for (auto i : subset.members()) m[i] = 1;
      ek.add_term(m, 1);
    }
    out.push_back(normal_form(ek));
  }
  return out;
}

Rational GradedRing::integrate(const ResidueClass& top) const {
  if (!pres_.smooth) throw PreconditionError("integration normalization needs a smooth presentation");
  if (pres_.top_faces.empty()) throw PreconditionError("presentation has no vertices");
  const unsigned cap = static_cast<unsigned>(pres_.degree_cap);
  if (graded_component_dim(cap) != 1) throw InternalError("top-degree component is not one-dimensional");
  const Monomial top_monomial = basis(cap).front();

  Monomial corner(pres_.num_vars, 0);
  for (auto i : pres_.top_faces.front().members()) corner[i] = 1;
  const Rational unit = normal_form(Polynomial::monomial(corner)).representative.coefficient(top_monomial);
  if (unit == 0) throw InternalError("vertex class reduces to zero in top degree");
  return top.representative.homogeneous_part(cap).coefficient(top_monomial) / unit;
}

}  // namespace symred
