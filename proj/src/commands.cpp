#include "symred/commands.hpp"

#include <algorithm>
#include <sstream>

#include "symred/bridge.hpp"
#include "symred/errors.hpp"
#include "symred/toric_ring.hpp"

namespace symred {

namespace {

class Report {
 public:
  void line(const std::string& s) { text_ += s + "\n"; }
  void heading(const std::string& s) { text_ += (text_.empty() ? "" : "\n") + std::string("== ") + s + " ==\n"; }
  void kv(const std::string& key, const std::string& value) { machine_ += key + " = " + value + "\n"; }
  void kv(const std::string& key, bool value) { kv(key, std::string(value ? "true" : "false")); }
  void kv(const std::string& key, std::size_t value) { kv(key, std::to_string(value)); }

  CommandOutput finish(const std::string& status, int code, std::string err = {}) {
    kv("status", status);
    kv("exit", std::to_string(code));
    return {code, text_ + "\nREPORT-V1\n" + machine_, std::move(err)};
  }

 private:
  std::string text_;
  std::string machine_;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string betti_lines(Report& rep, const PoincareTable& t) {
  for (std::size_t k = 0; k < t.betti.size(); ++k)
    rep.line("  H^" + std::to_string(2 * k) + ": " + std::to_string(t.betti[k]));
  return t.to_string();
}

PoincareTable truncated(PoincareTable t, std::optional<unsigned> k) {
  if (k && t.betti.size() > *k + 1) t.betti.resize(*k + 1);
  return t;
}

void diagnostics_section(Report& rep, const DiagnosticsReport& d) {
  rep.heading("diagnostics");
  rep.line("nonempty: " + yes_no(d.nonempty));
  if (d.proper)
    rep.line("proper: yes (zeta = " + to_string(*d.properness_witness) + ")");
  else
    rep.line("proper: no (Farkas multipliers " + to_string(d.properness_certificate->inequality_multipliers) + ")");
  if (d.regular)
    rep.line("regular: yes");
  else
    rep.line("regular: no (degenerate vertex at basis " + d.degenerate_vertex->basis.to_string() + ", xi = " +
             to_string(d.degenerate_vertex->coords) + ")");
  rep.line("smooth: " + yes_no(d.smooth));
  rep.line("vertices: " + std::to_string(d.vertices.size()));
  rep.kv("diag.nonempty", d.nonempty);
  rep.kv("diag.proper", d.proper);
  rep.kv("diag.regular", d.regular);
  rep.kv("diag.smooth", d.smooth);
  rep.kv("diag.vertices", d.vertices.size());
  for (std::size_t v = 0; v < d.vertices.size(); ++v) {
    const auto& vx = d.vertices[v];
    rep.line("  v" + std::to_string(v + 1) + " basis " + vx.basis.to_string() + " xi = " + to_string(vx.coords) +
             " |det| = " + to_string(vx.abs_det));
    const std::string key = "diag.vertex." + std::to_string(v + 1);
    rep.kv(key + ".basis", vx.basis.to_string());
    rep.kv(key + ".xi", to_string(vx.coords));
    rep.kv(key + ".det", to_string(vx.abs_det));
  }
}

}  // namespace

RatVector parse_rational_list(const std::string& text) {
  RatVector out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    out.push_back(parse_rational(item));
  }
  if (out.empty()) throw InputError("empty number list");
  return out;
}

CommandOutput run_toric(const QuotientSetup& s, const ToricOptions& opt) {
  Report rep;
  rep.kv("command", std::string("toric"));
  DiagnosticsReport diag;
  try {
    diag = validate_setup(s);
  } catch (const InputError& e) {
    return rep.finish("input-error", kExitUsage, e.what());
  }
  diagnostics_section(rep, diag);
  if (!diag.usable()) {
    const std::string why = !diag.nonempty ? "empty" : !diag.proper ? "not-proper" : "not-regular";
    return rep.finish("invalid-setup:" + why, kExitInvalid, "setup rejected: " + why);
  }

  try {
    const MomentPolytope poly(s);
    const FaceComplex fc = poly.build_face_complex();
    const GradedRing ring(build_presentation(poly, fc));
    const auto& pres = ring.presentation();
    const std::size_t n = pres.degree_cap;

    rep.heading("presentation");
    rep.line("variables: x1..x" + std::to_string(pres.num_vars) + " (degree 2)");
    rep.line("linear relations:");
    for (std::size_t i = 0; i < pres.linear_relations.size(); ++i) {
      const std::string p = pres.relation_polynomial(i).to_string("x");
      rep.line("  " + p);
      rep.kv("ring.relation." + std::to_string(i + 1), p);
    }
    rep.line("monomial generators:");
    for (std::size_t i = 0; i < pres.monomial_generators.size(); ++i) {
      const std::string p = pres.generator_polynomial(i).to_string("x");
      rep.line("  " + p);
      rep.kv("ring.sr." + std::to_string(i + 1), p);
    }

    const PoincareTable full = ring.poincare_table();
    const PoincareTable shown = truncated(full, opt.max_degree);
    rep.heading("poincare table (" + to_string(full.provenance) + ")");
    rep.kv("betti.ring", betti_lines(rep, shown));
    if (shown.betti.size() < full.betti.size()) {
      rep.line("  (truncated at degree " + std::to_string(2 * *opt.max_degree) + ")");
      rep.kv("betti.truncated_at", std::to_string(2 * *opt.max_degree));
    }

    if (opt.oracle) {
      const PoincareTable morse = poly.betti_oracle();
      rep.heading("poincare table (" + to_string(morse.provenance) + ")");
      rep.kv("betti.morse", betti_lines(rep, truncated(morse, opt.max_degree)));
      const bool agree = morse.betti == full.betti;
      rep.line(agree ? "oracle agrees" : "ORACLE DISAGREES");
      rep.kv("oracle.agree", agree);
      if (!agree) return rep.finish("oracle-mismatch", kExitInternal, "ring pipeline and Morse count disagree");
    }

    rep.heading("chern classes");
    if (!pres.smooth) {
      rep.line("skipped: setup is not smooth");
      rep.kv("chern.skipped", std::string("not-smooth"));
    } else {
      const auto chern = ring.chern_classes();
      const std::size_t shown_k = opt.max_degree ? std::min<std::size_t>(*opt.max_degree, n) : n;
      for (std::size_t k = 1; k <= shown_k; ++k) {
        const std::string p = chern[k - 1].representative.to_string("x");
        rep.line("  c" + std::to_string(k) + " = " + p);
        rep.kv("chern." + std::to_string(k), p);
      }
      if (shown_k == n && n > 0) {
        const Rational euler = ring.integrate(chern.back());
        rep.line("  integral of c" + std::to_string(n) + " = " + to_string(euler) + " (vertices: " +
                 std::to_string(diag.vertices.size()) + ")");
        rep.kv("chern.top.integral", to_string(euler));
        if (euler != Rational(diag.vertices.size()))
          return rep.finish("euler-mismatch", kExitInternal, "top Chern number differs from the vertex count");
      }
    }
  } catch (const InternalError& e) {
    return rep.finish("internal-error", kExitInternal, e.what());
  }
  return rep.finish("ok", kExitOk);
}

CommandOutput run_kernel(const FixedPointModel& input, const KernelOptions& opt) {
  Report rep;
  rep.kv("command", std::string("kernel"));
  FixedPointModel md = input;
  if (opt.max_degree) md.degree_cap = std::min(md.degree_cap, 2 * *opt.max_degree);
  std::vector<ModelIssue> issues;
  try {
    issues = validate_model(md);
  } catch (const InputError& e) {
    return rep.finish("input-error", kExitUsage, e.what());
  }

  rep.heading("model");
  rep.line("torus rank: " + std::to_string(md.torus_rank));
  rep.line("points: " + std::to_string(md.num_points()));
  rep.line("generators: " + std::to_string(md.generators.size()));
  rep.line("degree cap: " + std::to_string(md.degree_cap));
  rep.kv("model.rank", md.torus_rank);
  rep.kv("model.points", md.num_points());
  rep.kv("model.generators", md.generators.size());
  rep.kv("model.cap", std::to_string(md.degree_cap));

  rep.heading("diagnostics");
  if (issues.empty()) rep.line("no issues");
  for (std::size_t i = 0; i < issues.size(); ++i) {
    rep.line(issues[i].code + ": " + issues[i].message);
    rep.kv("issue." + std::to_string(i + 1), issues[i].code);
  }

  try {
    const KernelEngine eng(md);
    rep.heading("half-sets");
    const auto& ch = eng.chambers();
    for (std::size_t i = 0; i < ch.size(); ++i) {
      std::string names = "{";
      bool first = true;
      for (auto p : ch[i].points.members()) {
        names += (first ? "" : ",") + md.points[p];
        first = false;
      }
      names += "}";
      rep.line("  S" + std::to_string(i + 1) + " = " + names + " xi = " + to_string(ch[i].witness));
      rep.kv("chamber." + std::to_string(i + 1), names + " xi=" + to_string(ch[i].witness));
    }

    const ReductionResult red = eng.reduced_poincare();
    rep.heading("degrees");
    rep.line("  m  dim A  dim K  b");
    for (const auto& row : red.rows) {
      rep.line("  " + std::to_string(row.degree) + "  " + std::to_string(row.ambient_dim) + "  " +
               std::to_string(row.kernel_dim) + "  " + std::to_string(row.betti));
      rep.kv("degree." + std::to_string(row.degree),
             std::to_string(row.ambient_dim) + "," + std::to_string(row.kernel_dim) + "," + std::to_string(row.betti));
    }
    rep.heading("kernel bases");
    for (unsigned m = 0; m <= md.degree_cap; ++m) {
      const auto& k = eng.kernel_total(m);
      for (std::size_t i = 0; i < k.dim(); ++i) {
        const std::string t = eng.format_tuple(k.basis[i], m);
        rep.line("  degree " + std::to_string(m) + ": " + t);
        rep.kv("kernel." + std::to_string(m) + "." + std::to_string(i + 1), t);
      }
    }
    const PoincareTable table = red.even_table();
    rep.heading("poincare table (" + to_string(table.provenance) + ")");
    rep.kv("betti.kernel", betti_lines(rep, table));

    const auto violations = eng.ideal_violations();
    rep.kv("ideal.violations", violations.size());
    if (!violations.empty()) {
      const auto& v = violations.front();
      rep.line("kernel is not an ideal: K element " + std::to_string(v.kernel_index + 1) + " of degree " +
               std::to_string(v.kernel_degree) + " times A element " + std::to_string(v.ambient_index + 1) +
               " of degree " + std::to_string(v.ambient_degree));
      return rep.finish("ideal-violation", kExitInternal, "kernel fails the ideal property");
    }

    const bool critical = std::any_of(md.moment_images.begin(), md.moment_images.end(),
                                      [](const RatVector& mu) { return is_zero(mu); });
    rep.heading("circle decomposition");
    if (md.torus_rank != 1 || critical) {
      rep.line("skipped: needs rank one and no point at the level");
      rep.kv("s1.skipped", std::string(md.torus_rank != 1 ? "rank" : "critical-level"));
    } else {
      const S1Report s1 = eng.s1_decomposition_check();
      for (const auto& d : s1.degrees) {
        rep.line("  degree " + std::to_string(d.degree) + ": K+ " + std::to_string(d.plus_dim) + ", K- " +
                 std::to_string(d.minus_dim) + ", K " + std::to_string(d.total_dim) + ", K+ & K- " +
                 std::to_string(d.intersection_dim) + (d.sum_equals_total ? "" : ", sum differs from K"));
        rep.kv("s1." + std::to_string(d.degree),
               std::to_string(d.plus_dim) + "," + std::to_string(d.minus_dim) + "," + std::to_string(d.total_dim) +
                   "," + std::to_string(d.intersection_dim));
      }
      rep.line(s1.holds() ? "K = K+ (+) K- holds" : "K = K+ (+) K- FAILS");
      rep.kv("s1.holds", s1.holds());
    }

    if (opt.ring) {
      const QuotientRing q = eng.quotient_ring_constants();
      rep.heading("quotient ring");
      for (unsigned m = 0; m < q.coset_basis.size(); ++m)
        for (std::size_t i = 0; i < q.coset_basis[m].size(); ++i) {
          const std::string t = eng.format_tuple(q.coset_basis[m][i], m);
          rep.line("  e" + std::to_string(m) + "." + std::to_string(i + 1) + " = " + t);
          rep.kv("ring.coset." + std::to_string(m) + "." + std::to_string(i + 1), t);
        }
      for (const auto& c : q.constants) {
        const std::string lhs = "e" + std::to_string(c.left_degree) + "." + std::to_string(c.left + 1) + " * e" +
                                std::to_string(c.right_degree) + "." + std::to_string(c.right + 1);
        rep.line("  " + lhs + " = " + to_string(c.coeffs));
        rep.kv("ring.mult." + std::to_string(c.left_degree) + "." + std::to_string(c.left + 1) + "." +
                   std::to_string(c.right_degree) + "." + std::to_string(c.right + 1),
               to_string(c.coeffs));
      }
    }
  } catch (const InternalError& e) {
    return rep.finish("internal-error", kExitInternal, e.what());
  }
  return rep.finish("ok", kExitOk);
}

CommandOutput run_bridge(const QuotientSetup& s, const BridgeOptions& opt) {
  DiagnosticsReport diag;
  try {
    diag = validate_setup(s);
  } catch (const InputError& e) {
    return {kExitUsage, "", e.what()};
  }
  if (!diag.usable() || !diag.smooth) {
    const std::string why = !diag.nonempty  ? "polytope is empty"
                            : !diag.proper  ? "moment map is not proper"
                            : !diag.regular ? "level is not regular"
                                            : "setup is not smooth";
    return {kExitInvalid, "", "bridge: " + why};
  }
  if (opt.circle.has_value() != opt.level.has_value())
    return {kExitUsage, "", "bridge: --circle and --level go together"};
  if (opt.circle && (!opt.project.empty() || opt.shift))
    return {kExitUsage, "", "bridge: --circle excludes --project and --shift"};

  try {
    const MomentPolytope poly(s);
    const std::size_t r = s.complex_dim();
    std::optional<Projection> proj;
    if (opt.circle) {
      proj = circle_projection(poly, *opt.circle, *opt.level);
    } else if (!opt.project.empty() || opt.shift) {
      RatMatrix p = opt.project.empty() ? RatMatrix::identity(r) : RatMatrix(opt.project);
      RatVector shift = opt.shift ? *opt.shift : RatVector(p.rows());
      proj = Projection{std::move(p), std::move(shift)};
    }
    const BridgeResult br = bridge_from_toric(poly, proj);

    std::vector<std::string> comments;
    comments.push_back("fixed-point model of the toric variety" +
                       (opt.source.empty() ? std::string() : " from " + opt.source));
    comments.push_back("setup: A = " + [&] {
      std::string t = "[";
      const auto rows = s.weights.row_list();
      for (std::size_t i = 0; i < rows.size(); ++i) t += (i ? ", " : "") + to_string(rows[i]);
      return t + "]";
    }() + ", eta = " + to_string(s.level));
    const auto alphas = linear_ideal_basis(s);
    for (std::size_t k = 0; k < alphas.size(); ++k)
      comments.push_back("u" + std::to_string(k + 1) + " <-> linear relation " + to_string(alphas[k]));
    if (opt.circle) comments.push_back("circle weights " + to_string(*opt.circle) + " at level " + to_string(*opt.level));
    if (proj) {
      std::string t = "[";
      for (std::size_t i = 0; i < proj->matrix.rows(); ++i) t += (i ? ", " : "") + to_string(proj->matrix.row_vector(i));
      comments.push_back("projection " + t + "], shift " + to_string(proj->shift));
    }
    for (const auto& w : br.warnings) comments.push_back(w.code + ": " + w.message);
    std::string err;
    for (const auto& w : br.warnings) err += "warning " + w.code + ": " + w.message + "\n";
    return {kExitOk, emit_model_file({br.model}, comments), err};
  } catch (const InputError& e) {
    return {kExitUsage, "", e.what()};
  } catch (const InternalError& e) {
    return {kExitInternal, "", e.what()};
  }
}

CommandOutput run_selftest() {
  CommandOutput res;
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    res.out += std::string(ok ? "PASS " : "FAIL ") + name + "\n";
    if (!ok) ++failures;
  };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      check(name, fn());
    } catch (const std::exception& e) {
      check(name + " (" + e.what() + ")", false);
    }
  };

  const SetupFile cp2 = parse_setup_file("[setup]\nn = 3\nd = 1\nA = [[1], [1], [1]]\neta = [1]\n");
  guarded("CP2 ring Betti numbers 1,1,1", [&] {
    const MomentPolytope p(cp2.setup);
    const GradedRing ring(build_presentation(p, p.build_face_complex()));
    return ring.poincare_table().betti == std::vector<std::size_t>{1, 1, 1};
  });
  guarded("CP2 Morse count 1,1,1", [&] {
    return MomentPolytope(cp2.setup).betti_oracle().betti == std::vector<std::size_t>{1, 1, 1};
  });
  guarded("S2 kernel reduces to a point", [&] {
    const ModelFile s2 = parse_model_file(
        "[model]\nr = 1\npoints = [south, north]\nmu = [[-1], [1]]\ncap = 4\n"
        "[generator x]\ndegree = 2\nrestrict = [\"0\", \"u1\"]\n");
    const KernelEngine eng(s2.model);
    const auto t = eng.reduced_poincare().even_table();
    return t.betti == std::vector<std::size_t>{1, 0, 0} && eng.s1_decomposition_check().holds();
  });
  guarded("CP2 bridge model is equivariantly formal", [&] {
    const MomentPolytope p(cp2.setup);
    const KernelEngine eng(bridge_from_toric(p).model);
    const PoincareTable b{{1, 1, 1}, Provenance::RingPipeline};
    for (unsigned m = 0; m <= eng.model().degree_cap; ++m)
      if (eng.degree_span(m).dim() != free_module_dimension(b, 2, m)) return false;
    return true;
  });
  guarded("setup file round trip", [&] { return parse_setup_file(emit_setup_file(cp2)) == cp2; });
  res.exit_code = failures == 0 ? kExitOk : kExitInternal;
  return res;
}

}  // namespace symred
