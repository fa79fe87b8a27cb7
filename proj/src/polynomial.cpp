#include "symred/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "symred/errors.hpp"

namespace symred {

unsigned total_degree(const Monomial& m) {
  return std::accumulate(m.begin(), m.end(), 0u);
}

bool GradedLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

namespace {

void enumerate(std::size_t var, unsigned remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (var + 1 == cur.size()) {
    cur[var] = remaining;
    out.push_back(cur);
    return;
  }
  for (unsigned e = remaining + 1; e-- > 0;) {
    cur[var] = e;
    enumerate(var + 1, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned degree) {
  std::vector<Monomial> out;
  if (n == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Monomial cur(n, 0);
  enumerate(0, degree, cur, out);
  return out;
}

std::size_t count_monomials(std::size_t n, unsigned degree) {
  if (n == 0) return degree == 0 ? 1 : 0;
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n + degree - 1, degree);
  return c.get_ui();
}

Polynomial Polynomial::constant(std::size_t nvars, const Rational& c) {
  Polynomial p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t nvars, std::size_t index) {
  Monomial m(nvars, 0);
  m.at(index) = 1;
  return monomial(m);
}

Polynomial Polynomial::monomial(const Monomial& m, const Rational& c) {
  Polynomial p(m.size());
  p.add_term(m, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != nvars_) throw InputError("monomial has wrong number of variables");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
  return d;
}

bool Polynomial::is_homogeneous_of_degree(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return total_degree(t.first) == d; });
}

Polynomial Polynomial::homogeneous_part(unsigned d) const {
  Polynomial p(nvars_);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) == d) p.terms_.emplace(m, c);
  return p;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial p = *this;
  for (const auto& [m, c] : o.terms_) p.add_term(m, c);
  return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator-() const {
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c = -c;
  return p;
}

Polynomial Polynomial::operator*(const Rational& s) const {
  if (s == 0) return Polynomial(nvars_);
  Polynomial p = *this;
  for (auto& [m, c] : p.terms_) c *= s;
  return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (nvars_ != o.nvars_) throw InputError("polynomial variable count mismatch");
  Polynomial p(nvars_);
  Monomial prod(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) prod[i] = ma[i] + mb[i];
      p.add_term(prod, ca * cb);
    }
  return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images,
                                  std::size_t target_nvars) const {
  if (images.size() != nvars_) throw InputError("substitution needs one image per variable");
  Polynomial result(target_nvars);
  for (const auto& [m, c] : terms_) {
    Polynomial term = constant(target_nvars, c);
    for (std::size_t i = 0; i < nvars_; ++i)
      for (unsigned e = 0; e < m[i]; ++e) term = term * images[i];
    result = result + term;
  }
  return result;
}

std::string Polynomial::to_string(const std::string& prefix) const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;
    std::string factors;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (!factors.empty()) factors += "*";
      factors += prefix + std::to_string(i + 1);
      if (m[i] > 1) factors += "^" + std::to_string(m[i]);
    }
    if (factors.empty())
      out += symred::to_string(mag);
    else if (mag == 1)
      out += factors;
    else
      out += symred::to_string(mag) + "*" + factors;
  }
  return out;
}

RatVector to_coordinates(const Polynomial& p, unsigned degree) {
  const auto basis = monomials_of_degree(p.nvars(), degree);
  RatVector v(basis.size());
  for (const auto& [m, c] : p.terms()) {
    if (total_degree(m) != degree) throw InputError("polynomial is not homogeneous of the requested degree");
    auto it = std::lower_bound(basis.begin(), basis.end(), m, GradedLexGreater{});
    v[static_cast<std::size_t>(it - basis.begin())] = c;
  }
  return v;
}

Polynomial from_coordinates(const RatVector& coords, std::size_t nvars, unsigned degree) {
  const auto basis = monomials_of_degree(nvars, degree);
  if (basis.size() != coords.size()) throw InputError("coordinate vector has wrong length");
  Polynomial p(nvars);
  for (std::size_t i = 0; i < basis.size(); ++i) p.add_term(basis[i], coords[i]);
  return p;
}

}  // namespace symred
