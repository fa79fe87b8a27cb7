#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symred/io.hpp"

namespace symred {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;     // unreadable input, parse errors, bad flags
inline constexpr int kExitInvalid = 2;   // setup not proper/regular (bridge: also not smooth)
inline constexpr int kExitInternal = 3;  // a consistency check failed

struct CommandOutput {
  int exit_code = kExitOk;
  std::string out;  // report or emitted file
  std::string err;  // one-line error messages
};

/// Options from the file's [options] section, overridden by flags.
struct ToricOptions {
  std::optional<unsigned> max_degree;  // half-degree
  bool oracle = false;
};

struct KernelOptions {
  std::optional<unsigned> max_degree;  // half-degree; the cap becomes 2K
  bool ring = false;
};

struct BridgeOptions {
  std::vector<RatVector> project;  // rows of P; empty means no projection
  std::optional<RatVector> shift;
  std::optional<RatVector> circle;  // weights a, used with `level`
  std::optional<Rational> level;
  std::string source;  // recorded in the provenance comments
};

/// Reports are deterministic text followed by a REPORT-V1 section of
/// `key = value` lines.
CommandOutput run_toric(const QuotientSetup& s, const ToricOptions& opt);
CommandOutput run_kernel(const FixedPointModel& md, const KernelOptions& opt);
CommandOutput run_bridge(const QuotientSetup& s, const BridgeOptions& opt);
CommandOutput run_selftest();

/// "1,1/2,3" -> [1, 1/2, 3]. Throws InputError.
RatVector parse_rational_list(const std::string& text);

}  // namespace symred
