#pragma once

#include <string>

#include "modlab/ints.hpp"

namespace modlab {

/// Test-only fault injection points (wired through the CLI, never defaulted).
enum class Fault { None, SummandAlwaysYes };

struct RunConfig {
  Int enum_cap = 100000;      // endomorphism enumeration cap
  Int submodule_cap = 10000;  // submodule enumeration cap
  long box = 10;              // bounded-search box bound
  std::size_t power_ceiling = 16;
  Int scan_budget = 5000;     // max candidates per bounded endomorphism scan
  Int pair_budget = 5000;     // max candidate pairs in two-variable scans
  Fault fault = Fault::None;

  void validate() const {
    if (enum_cap <= 0 || submodule_cap <= 0 || box <= 0 || power_ceiling == 0 ||
        scan_budget <= 0 || pair_budget <= 0)
      throw std::invalid_argument("all configuration bounds must be positive");
  }
};

inline Fault parse_fault(const std::string& name) {
  if (name.empty() || name == "none") return Fault::None;
  if (name == "summand-true") return Fault::SummandAlwaysYes;
  throw std::invalid_argument("unknown fault '" + name + "'");
}

}  // namespace modlab
