#pragma once

#include <string>
#include <vector>

#include "symred/polytope.hpp"

namespace symred::testing {

struct NamedSetup {
  std::string name;
  QuotientSetup setup;
};

inline QuotientSetup make_setup(const std::vector<std::vector<long>>& rows, const std::vector<Rational>& level) {
  std::vector<RatVector> r;
  for (const auto& row : rows) {
    RatVector v;
    for (auto x : row) v.emplace_back(x);
    r.push_back(std::move(v));
  }
  return {RatMatrix(r), level};
}

inline QuotientSetup projective_space(std::size_t n) {
  return make_setup(std::vector<std::vector<long>>(n + 1, {1}), {Rational(1)});
}

/// Quotient data of a complete fan whose first n rays are e_1..e_n: the
/// weights are the integer relations among the rays and the level is
/// A^T b for support numbers b (polytope { m : <m, v_i> >= -b_i }).
inline QuotientSetup from_fan(const std::vector<std::vector<long>>& rays, const std::vector<long>& support) {
  const std::size_t n = rays.front().size();
  const std::size_t total = rays.size();
  const std::size_t d = total - n;
  std::vector<std::vector<long>> a(total, std::vector<long>(d, 0));
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < n; ++i) a[i][j] = -rays[n + j][i];
    a[n + j][j] = 1;
  }
  std::vector<Rational> eta(d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < total; ++i) eta[j] += Rational(a[i][j] * support[i]);
  return make_setup(a, eta);
}

inline QuotientSetup cp1_cp1() { return make_setup({{1, 0}, {1, 0}, {0, 1}, {0, 1}}, {Rational(1), Rational(1)}); }

inline QuotientSetup hirzebruch(long a) {
  return from_fan({{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {0, 0, 1, 1});
}

/// CP^2 blown up at k = 1..3 torus-fixed points.
inline QuotientSetup del_pezzo(int k) {
  std::vector<std::vector<long>> rays{{1, 0}, {0, 1}, {-1, -1}, {1, 1}};
  std::vector<long> support{0, 0, 3, -1};
  if (k >= 2) {
    rays.push_back({-1, 0});
    support.push_back(2);
  }
  if (k >= 3) {
    rays.push_back({0, -1});
    support.push_back(2);
  }
  return from_fan(rays, support);
}

/// Smooth setups used by the oracle comparisons.
inline std::vector<NamedSetup> smooth_corpus() {
  std::vector<NamedSetup> c;
  c.push_back({"CP1", projective_space(1)});
  c.push_back({"CP2", projective_space(2)});
  c.push_back({"CP3", projective_space(3)});
  c.push_back({"CP1xCP1", cp1_cp1()});
  c.push_back({"CP1xCP2", from_fan({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, -1}}, {0, 0, 0, 1, 1})});
  c.push_back({"CP1xCP1xCP1", make_setup({{1, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 1, 0}, {0, 0, 1}, {0, 0, 1}},
                                         {Rational(1), Rational(1), Rational(1)})});
  for (long a = 0; a <= 3; ++a) c.push_back({"F" + std::to_string(a), hirzebruch(a)});
  for (int k = 1; k <= 3; ++k) c.push_back({"dP-blowup" + std::to_string(k), del_pezzo(k)});
  return c;
}

}  // namespace symred::testing
