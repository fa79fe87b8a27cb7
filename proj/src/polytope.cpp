#include "symred/polytope.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

#include "symred/errors.hpp"

namespace symred {

std::vector<IndexSet> subsets_of_size(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    IndexSet s;
    for (auto i : idx) s.insert(i);
    out.push_back(s);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::RingPipeline: return "ring-pipeline";
    case Provenance::MorseOracle: return "morse-oracle";
    case Provenance::KernelEngine: return "kernel-engine";
  }
  return "unknown";
}

std::size_t PoincareTable::total() const {
  std::size_t t = 0;
  for (auto b : betti) t += b;
  return t;
}

std::string PoincareTable::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < betti.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(betti[i]);
  }
  return s;
}

void check_setup_shape(const QuotientSetup& s) {
  const std::size_t n = s.num_coords();
  const std::size_t d = s.group_rank();
  if (d == 0) throw InputError("A: group rank d must be at least 1");
  if (n <= d) throw InputError("A: need N > d (got N=" + std::to_string(n) +
                               ", d=" + std::to_string(d) + ")");
  if (n > IndexSet::kMaxSize) throw InputError("A: at most 32 coordinates supported");
  if (s.level.size() != d)
    throw InputError("eta: expected " + std::to_string(d) + " entries, got " +
                     std::to_string(s.level.size()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!is_integer(s.weights(i, j))) throw InputError("A: weights must be integers");
  if (rank(s.weights) != d) throw InputError("A: weight matrix is rank-deficient");
}

namespace {

// Columns beta_i for i in the basis, as a d x d matrix.
RatMatrix basis_matrix(const QuotientSetup& s, IndexSet basis) {
  const std::size_t d = s.group_rank();
  RatMatrix m(d, d);
  std::size_t col = 0;
  for (auto i : basis.members()) {
    for (std::size_t r = 0; r < d; ++r) m(r, col) = s.weights(i, r);
    ++col;
  }
  return m;
}

}  // namespace

DiagnosticsReport validate_setup(const QuotientSetup& s) {
  check_setup_shape(s);
  const std::size_t n = s.num_coords();
  const std::size_t d = s.group_rank();
  DiagnosticsReport rep;

  FeasibilitySystem props(d);
  for (std::size_t i = 0; i < n; ++i) props.add_inequality(s.beta(i), Relation::GreaterEq, 1);
  auto pr = lp_feasible(props);
  if (auto* w = std::get_if<FeasibleWitness>(&pr)) {
    rep.proper = true;
    rep.properness_witness = w->point;
  } else {
    rep.properness_certificate = std::get<FarkasCertificate>(pr);
  }

  rep.regular = true;
  for (IndexSet basis : subsets_of_size(n, d)) {
    const RatMatrix m = basis_matrix(s, basis);
    const Rational det = determinant(m);
    if (det == 0) continue;
    const auto sol = solve_linear(m, s.level);
    const auto members = basis.members();
    bool feasible = true;
    bool degenerate = false;
    for (std::size_t k = 0; k < d; ++k) {
      if ((*sol)[k] < 0) feasible = false;
      if ((*sol)[k] == 0) degenerate = true;
    }
    if (!feasible) continue;
    Vertex v{basis, RatVector(n), abs(det)};
    for (std::size_t k = 0; k < d; ++k) v.coords[members[k]] = (*sol)[k];
    if (degenerate && rep.regular) {
      rep.regular = false;
      rep.degenerate_vertex = v;
    }
    rep.vertices.push_back(std::move(v));
  }
  rep.nonempty = !rep.vertices.empty();
  rep.smooth = rep.regular && rep.nonempty &&
               std::all_of(rep.vertices.begin(), rep.vertices.end(),
                           [](const Vertex& v) { return v.abs_det == 1; });
  return rep;
}

bool cone_member(const QuotientSetup& s, IndexSet support) {
  const auto members = support.members();
  const std::size_t d = s.group_rank();
  FeasibilitySystem sys(members.size());
  for (std::size_t r = 0; r < d; ++r) {
    RatVector row(members.size());
    for (std::size_t k = 0; k < members.size(); ++k) row[k] = s.weights(members[k], r);
    sys.add_equality(std::move(row), s.level[r]);
  }
  for (std::size_t k = 0; k < members.size(); ++k) {
    RatVector e(members.size());
    e[k] = 1;
    sys.add_inequality(std::move(e), Relation::GreaterEq, 0);
  }
  return is_feasible(lp_feasible(sys));
}

bool FaceComplex::is_face(IndexSet s) const {
  return std::binary_search(faces.begin(), faces.end(), s);
}

std::vector<IndexSet> FaceComplex::facets() const {
  std::vector<IndexSet> out;
  if (faces.empty()) return out;
  const std::size_t top = faces.back().size();
  for (auto f : faces)
    if (f.size() == top) out.push_back(f);
  return out;
}

MomentPolytope::MomentPolytope(QuotientSetup s) : setup_(std::move(s)), report_(validate_setup(setup_)) {
  if (!report_.nonempty) throw PreconditionError("moment polytope is empty");
  if (!report_.proper) throw PreconditionError("moment map is not proper (polytope unbounded)");
  if (!report_.regular)
    throw PreconditionError("level is not a regular value (degenerate vertex at basis " +
                            report_.degenerate_vertex->basis.to_string() + ")");
}

bool MomentPolytope::face_test(IndexSet facets) const {
  const std::size_t n = setup_.num_coords();
  const std::size_t d = setup_.group_rank();
  FeasibilitySystem sys(n);
  for (std::size_t r = 0; r < d; ++r) sys.add_equality(setup_.weights.column_vector(r), setup_.level[r]);
  for (std::size_t i = 0; i < n; ++i) {
    RatVector e(n);
    e[i] = 1;
    if (facets.contains(i))
      sys.add_equality(std::move(e), 0);
    else
      sys.add_inequality(std::move(e), Relation::GreaterEq, 0);
  }
  return is_feasible(lp_feasible(sys));
}

FaceComplex MomentPolytope::build_face_complex() const {
  const std::size_t n = setup_.num_coords();
  FaceComplex fc;
  fc.ground_size = n;
  std::unordered_set<std::uint32_t> face_bits;
  std::vector<IndexSet> layer;
  if (face_test(IndexSet{})) {
    layer.push_back(IndexSet{});
  } else {
    fc.minimal_nonfaces.push_back(IndexSet{});
  }
  while (!layer.empty()) {
    for (auto f : layer) {
      fc.faces.push_back(f);
      face_bits.insert(f.bits());
    }
    std::vector<IndexSet> next;
    for (auto f : layer) {
      const auto members = f.members();
      const std::size_t start = members.empty() ? 0 : members.back() + 1;
      for (std::size_t j = start; j < n; ++j) {
        const IndexSet cand = f.with(j);
        bool boundary_ok = true;
        for (auto i : members)
          if (!face_bits.contains(cand.without(i).bits())) {
            boundary_ok = false;
            break;
          }
        if (!boundary_ok) continue;
        if (face_test(cand))
          next.push_back(cand);
        else
          fc.minimal_nonfaces.push_back(cand);
      }
    }
    std::sort(next.begin(), next.end());
    layer = std::move(next);
  }
  std::sort(fc.faces.begin(), fc.faces.end());
  std::sort(fc.minimal_nonfaces.begin(), fc.minimal_nonfaces.end());
  return fc;
}

std::vector<std::pair<std::size_t, std::size_t>> MomentPolytope::edges() const {
  const std::size_t n = setup_.num_coords();
  const std::size_t d = setup_.group_rank();
  const auto& vs = vertices();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t a = 0; a < vs.size(); ++a)
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      if ((vs[a].basis & vs[b].basis).size() + 1 != d) continue;
      if (face_test((vs[a].basis | vs[b].basis).complement(n))) out.emplace_back(a, b);
    }
  return out;
}

PoincareTable MomentPolytope::betti_oracle(std::uint64_t seed) const {
  constexpr int kAttempts = 64;
  const std::size_t n = setup_.num_coords();
  const std::size_t dim = complex_dim();
  const auto& vs = vertices();
  const auto edge_list = edges();

  std::vector<std::size_t> degree(vs.size(), 0);
  for (auto [a, b] : edge_list) {
    ++degree[a];
    ++degree[b];
  }
  for (auto deg : degree)
    if (deg != dim) throw InternalError("polytope is not simple: vertex of degree " + std::to_string(deg));

  std::mt19937_64 gen(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    RatVector functional(n);
    for (auto& w : functional) {
      const long num = static_cast<long>(gen() % 2001) - 1000;
      const long den = static_cast<long>(gen() % 97) + 1;
      w = Rational(num, den);
      w.canonicalize();
    }
    std::vector<Rational> height(vs.size());
    for (std::size_t v = 0; v < vs.size(); ++v) height[v] = dot(functional, vs[v].coords);
    std::vector<Rational> sorted = height;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;

    std::vector<std::size_t> index(vs.size(), 0);
    for (auto [a, b] : edge_list) ++index[height[a] > height[b] ? a : b];
    PoincareTable table{std::vector<std::size_t>(dim + 1, 0), Provenance::MorseOracle};
    for (auto k : index) ++table.betti[k];
    return table;
  }
  throw InternalError("no generic functional found from seed " + std::to_string(seed));
}

}  // namespace symred
