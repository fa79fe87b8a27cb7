#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace symred {

enum class Provenance { RingPipeline, MorseOracle, KernelEngine };

std::string to_string(Provenance p);

/// Betti numbers in even degrees: betti[k] = b_{2k}.
struct PoincareTable {
  std::vector<std::size_t> betti;
  Provenance provenance = Provenance::RingPipeline;

  std::size_t total() const;
  /// "1,2,1"
  std::string to_string() const;
  bool same_numbers(const PoincareTable& o) const { return betti == o.betti; }
};

}  // namespace symred
