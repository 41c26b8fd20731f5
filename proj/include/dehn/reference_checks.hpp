#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dehn/chain.hpp"

namespace dehn {

/// A named regression check against a published value.  `run` returns nullopt on
/// success or a description of the mismatch.
struct ReferenceCheck {
  std::string name;
  std::function<std::optional<std::string>(LensConvention)> run;
};

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;
};

const std::vector<ReferenceCheck>& reference_checks();

/// Runs every check; an exception inside a check counts as a failure.
std::vector<CheckOutcome> run_reference_checks(LensConvention convention = kLensConvention);

}  // namespace dehn
