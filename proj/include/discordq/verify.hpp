#pragma once

#include <functional>
#include <string>
#include <vector>

#include "discordq/fock.hpp"
#include "discordq/q_marker.hpp"

namespace discordq::verify {

struct Config {
  double threshold = marker::kDefaultThreshold;
  int fock_dim = fock::kDefaultDim;
  unsigned threads = 0;
};

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

using Callback = std::function<void(const CheckResult&)>;

/// Cross-evaluator checks: closed form vs phase-space integral vs Fock basis,
/// the reference formulas of every state family, the surface scan, and the
/// property sweeps. Calls `on_result` after each check.
std::vector<CheckResult> run_all(const Config& cfg, const Callback& on_result = {});

}  // namespace discordq::verify
