#include "symred/feasibility.hpp"

#include <utility>

#include "symred/errors.hpp"

namespace symred {

namespace {

int orientation(Relation k) {
  return (k == Relation::GreaterEq || k == Relation::Greater) ? 1 : -1;
}

int strict_offset(Relation k) {
  return (k == Relation::Greater || k == Relation::Less) ? 1 : 0;
}

// Right-hand side of the normalized form s*<c,x> >= s*b + delta.
Rational normalized_rhs(const InequalityConstraint& c) {
  return orientation(c.kind) * c.rhs + strict_offset(c.kind);
}

// Dense phase-one tableau. Columns: structural variables, then one
// artificial per row. The last entry of each row is the right-hand side.
class PhaseOne {
 public:
  PhaseOne(std::vector<RatVector> rows, RatVector rhs, std::size_t structural)
      : m_(rows.size()), n_(structural), basis_(m_), flip_(m_, 1) {
    const std::size_t width = n_ + m_ + 1;
    tab_.assign(m_, RatVector(width));
    for (std::size_t r = 0; r < m_; ++r) {
      if (rhs[r] < 0) flip_[r] = -1;
      for (std::size_t j = 0; j < n_; ++j) tab_[r][j] = flip_[r] * rows[r][j];
      tab_[r][n_ + r] = 1;
      tab_[r][width - 1] = flip_[r] * rhs[r];
      basis_[r] = n_ + r;
    }
    cost_.assign(width, 0);
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t r = 0; r < m_; ++r) cost_[j] -= tab_[r][j];
    for (std::size_t r = 0; r < m_; ++r) cost_[width - 1] -= tab_[r][width - 1];
  }

  void solve() {
    const std::size_t width = n_ + m_ + 1;
    for (;;) {
      std::size_t enter = width;
      for (std::size_t j = 0; j + 1 < width; ++j)
        if (cost_[j] < 0) {
          enter = j;
          break;
        }
      if (enter == width) return;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (tab_[r][enter] <= 0) continue;
        Rational ratio = tab_[r][width - 1] / tab_[r][enter];
        if (leave == m_ || ratio < best ||
            (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = std::move(ratio);
        }
      }
      // Phase one is bounded below by zero, so an improving column always
      // has a positive entry.
      if (leave == m_) throw InternalError("phase-one simplex reported unbounded");
      pivot(leave, enter);
    }
  }

  Rational objective() const { return -cost_.back(); }

  RatVector primal() const {
    RatVector x(n_);
    for (std::size_t r = 0; r < m_; ++r)
      if (basis_[r] < n_) x[basis_[r]] = tab_[r].back();
    return x;
  }

  // Simplex multipliers for the original (unflipped) rows.
  RatVector duals() const {
    RatVector y(m_);
    for (std::size_t r = 0; r < m_; ++r) y[r] = flip_[r] * (1 - cost_[n_ + r]);
    return y;
  }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const std::size_t width = tab_[row].size();
    const Rational inv = 1 / tab_[row][col];
    for (auto& v : tab_[row]) v *= inv;
    auto eliminate = [&](RatVector& target) {
      if (target[col] == 0) return;
      const Rational f = target[col];
      for (std::size_t j = 0; j < width; ++j)
        if (tab_[row][j] != 0) target[j] -= f * tab_[row][j];
    };
    for (std::size_t r = 0; r < m_; ++r)
      if (r != row) eliminate(tab_[r]);
    eliminate(cost_);
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  std::vector<RatVector> tab_;
  RatVector cost_;
  std::vector<std::size_t> basis_;
  std::vector<int> flip_;
};

}  // namespace

void FeasibilitySystem::add_equality(RatVector coeffs, Rational rhs) {
  if (coeffs.size() != dim_) throw InputError("equality constraint dimension mismatch");
  eqs_.push_back({std::move(coeffs), std::move(rhs)});
}

void FeasibilitySystem::add_inequality(RatVector coeffs, Relation kind, Rational rhs) {
  if (coeffs.size() != dim_) throw InputError("inequality constraint dimension mismatch");
  ineqs_.push_back({std::move(coeffs), std::move(rhs), kind});
}

FeasibilityResult lp_feasible(const FeasibilitySystem& sys) {
  const std::size_t n = sys.dimension();
  const std::size_t n_eq = sys.equalities().size();
  const std::size_t n_in = sys.inequalities().size();
  if (n_eq + n_in == 0) return FeasibleWitness{RatVector(n)};

  // Standard form: x = x_plus - x_minus, one surplus variable per inequality.
  const std::size_t structural = 2 * n + n_in;
  std::vector<RatVector> rows;
  RatVector rhs;
  rows.reserve(n_eq + n_in);
  for (const auto& e : sys.equalities()) {
    RatVector row(structural);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = e.coeffs[j];
      row[n + j] = -e.coeffs[j];
    }
    rows.push_back(std::move(row));
    rhs.push_back(e.rhs);
  }
  for (std::size_t i = 0; i < n_in; ++i) {
    const auto& c = sys.inequalities()[i];
    const int s = orientation(c.kind);
    RatVector row(structural);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = s * c.coeffs[j];
      row[n + j] = -s * c.coeffs[j];
    }
    row[2 * n + i] = -1;
    rows.push_back(std::move(row));
    rhs.push_back(normalized_rhs(c));
  }

  PhaseOne lp(std::move(rows), std::move(rhs), structural);
  lp.solve();
  if (lp.objective() == 0) {
    const RatVector y = lp.primal();
    RatVector x(n);
    for (std::size_t j = 0; j < n; ++j) x[j] = y[j] - y[n + j];
    if (!verify_witness(sys, x)) throw InternalError("simplex witness failed verification");
    return FeasibleWitness{std::move(x)};
  }
  const RatVector pi = lp.duals();
  FarkasCertificate cert;
  cert.equality_multipliers.assign(pi.begin(), pi.begin() + static_cast<long>(n_eq));
  cert.inequality_multipliers.assign(pi.begin() + static_cast<long>(n_eq), pi.end());
  if (!verify_certificate(sys, cert))
    throw InternalError("simplex Farkas certificate failed verification");
  return cert;
}

bool verify_witness(const FeasibilitySystem& sys, const RatVector& x) {
  if (x.size() != sys.dimension()) return false;
  for (const auto& e : sys.equalities())
    if (dot(e.coeffs, x) != e.rhs) return false;
  for (const auto& c : sys.inequalities())
    if (orientation(c.kind) * dot(c.coeffs, x) < normalized_rhs(c)) return false;
  return true;
}

bool verify_certificate(const FeasibilitySystem& sys, const FarkasCertificate& cert) {
  if (cert.equality_multipliers.size() != sys.equalities().size() ||
      cert.inequality_multipliers.size() != sys.inequalities().size())
    return false;
  RatVector combo(sys.dimension());
  Rational bound = 0;
  for (std::size_t e = 0; e < sys.equalities().size(); ++e) {
    const auto& y = cert.equality_multipliers[e];
    const auto& c = sys.equalities()[e];
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += y * c.coeffs[j];
    bound += y * c.rhs;
  }
  for (std::size_t i = 0; i < sys.inequalities().size(); ++i) {
    const auto& z = cert.inequality_multipliers[i];
    if (z < 0) return false;
    const auto& c = sys.inequalities()[i];
    const int s = orientation(c.kind);
    for (std::size_t j = 0; j < combo.size(); ++j) combo[j] += z * s * c.coeffs[j];
    bound += z * normalized_rhs(c);
  }
  return is_zero(combo) && bound > 0;
}

}  // namespace symred
