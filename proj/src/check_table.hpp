#pragma once

#include "symcut/verifier.hpp"

#include <functional>
#include <span>
#include <vector>

namespace symcut::detail {

using Setting = nlohmann::json;

/// One registered check: the cases it runs, how a sample is drawn, and how a
/// drawn sample is scored. Scoring is a pure function of (setting, input) so
/// that any witness can be replayed bit for bit.
struct CheckImpl {
  CheckDescriptor desc;
  std::function<std::vector<Setting>(const std::vector<int>& dims,
                                     const std::vector<double>& radii)>
      settings;
  // Null for deterministic checks, which are scored once per setting.
  std::function<std::vector<double>(const Setting&, Rng&, const ToleranceProfile&)> draw;
  std::function<double(const Setting&, std::span<const double>, const ToleranceProfile&)>
      evaluate;
  // Existence thresholds and ratio bands are not tightened by the strict profile.
  bool scale_with_profile = true;
};

const std::vector<CheckImpl>& check_table();

}  // namespace symcut::detail
