#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symred/kirwan_kernel.hpp"
#include "symred/polytope.hpp"

namespace symred {

/// Contents of a setup file. Grammar (line oriented, `#` starts a comment):
///
///   [setup]
///   n = 3
///   d = 1
///   A = [[1], [1], [1]]
///   eta = [1]
///
///   [options]          # optional
///   max_degree = 1     # half-degree truncation
///   oracle = true
///
/// Numbers are integers or p/q. A bracketed value may continue over several
/// lines. Unknown sections or keys are errors.
struct SetupFile {
  QuotientSetup setup;
  std::optional<unsigned> max_degree;
  bool oracle = false;

  bool operator==(const SetupFile&) const = default;
};

/// Contents of a model file:
///
///   [model]
///   r = 1
///   points = [p1, p2]
///   mu = [[-1], [1]]
///   cap = 2
///
///   [generator x]
///   degree = 2
///   restrict = ["0", "u1"]
///
/// Restrictions are sums of terms c*u1^a*u2^b with rational c.
struct ModelFile {
  FixedPointModel model;

  bool operator==(const ModelFile&) const = default;
};

/// Syntax errors carry "line L, column C"; semantic errors name the key.
/// Both are thrown as InputError.
SetupFile parse_setup_file(std::string_view text);
std::string emit_setup_file(const SetupFile& f);

ModelFile parse_model_file(std::string_view text);
/// `comments` are written first, one "# ..." line each.
std::string emit_model_file(const ModelFile& f, const std::vector<std::string>& comments = {});

/// Polynomial in u1..u_nvars, e.g. "-1/2*u1^2*u2 + 3". Throws InputError.
Polynomial parse_polynomial(std::string_view text, std::size_t nvars);

}  // namespace symred
