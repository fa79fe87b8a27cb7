#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "symred/commands.hpp"
#include "symred/errors.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw symred::InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int emit(const symred::CommandOutput& res) {
  std::cout << res.out;
  if (!res.err.empty()) std::cerr << res.err << (res.err.back() == '\n' ? "" : "\n");
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of abelian symplectic quotients"};
  app.require_subcommand(1);

  std::string file;
  int max_degree = -1;
  bool oracle = false;
  bool ring = false;
  std::vector<std::string> project;
  std::vector<std::string> shift;
  std::string circle;
  std::string level;
  std::string output;

  auto* toric = app.add_subcommand("toric", "Ring presentation and Betti numbers of a toric quotient");
  toric->add_option("file", file, "setup file")->required();
  toric->add_option("--max-degree", max_degree, "truncate at cohomological degree 2K")->check(CLI::NonNegativeNumber);
  toric->add_flag("--oracle", oracle, "cross-check against the Morse count");

  auto* kernel = app.add_subcommand("kernel", "Kirwan kernel from fixed-point data");
  kernel->add_option("file", file, "model file")->required();
  kernel->add_option("--max-degree", max_degree, "truncate at cohomological degree 2K")->check(CLI::NonNegativeNumber);
  kernel->add_flag("--ring", ring, "print structure constants of the quotient ring");

  auto* bridge = app.add_subcommand("bridge", "Fixed-point model of a smooth toric quotient");
  bridge->add_option("file", file, "setup file")->required();
  bridge->add_option("--project", project, "row of the projection matrix, e.g. 1,1 (repeatable)");
  bridge->add_option("--shift", shift, "shift of the projected moment map, e.g. 1/2");
  bridge->add_option("--circle", circle, "circle weights a_1,...,a_N (with --level)");
  bridge->add_option("--level", level, "reduction level of the circle");
  bridge->add_option("-o,--output", output, "output model file (default: stdout)");

  auto* selftest = app.add_subcommand("selftest", "Run built-in consistency checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : symred::kExitUsage;
  }

  try {
    using namespace symred;
    if (selftest->parsed()) return emit(run_selftest());

    const std::string text = read_file(file);
    if (toric->parsed()) {
      const SetupFile f = parse_setup_file(text);
      ToricOptions opt{f.max_degree, f.oracle || oracle};
      if (max_degree >= 0) opt.max_degree = static_cast<unsigned>(max_degree);
      return emit(run_toric(f.setup, opt));
    }
    if (kernel->parsed()) {
      const ModelFile f = parse_model_file(text);
      KernelOptions opt{std::nullopt, ring};
      if (max_degree >= 0) opt.max_degree = static_cast<unsigned>(max_degree);
      return emit(run_kernel(f.model, opt));
    }
    const SetupFile f = parse_setup_file(text);
    BridgeOptions opt;
    opt.source = file;
    for (const auto& row : project) opt.project.push_back(parse_rational_list(row));
    if (!shift.empty()) {
      RatVector s;
      for (const auto& part : shift)
        for (auto& q : parse_rational_list(part)) s.push_back(q);
      opt.shift = s;
    }
    if (!circle.empty()) opt.circle = parse_rational_list(circle);
    if (!level.empty()) opt.level = parse_rational(level);
    CommandOutput res = run_bridge(f.setup, opt);
    if (res.exit_code == kExitOk && !output.empty()) {
      std::ofstream out(output, std::ios::binary);
      if (!out) throw InputError("cannot write " + output);
      out << res.out;
      res.out.clear();
    }
    return emit(res);
  } catch (const symred::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return symred::kExitUsage;
  } catch (const symred::PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return symred::kExitInvalid;
  } catch (const symred::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return symred::kExitInternal;
  }
}
