#pragma once

// The verification registry: every published closed form and intermediate
// value checked against the engine, addressable by dotted ids.

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ulrichcalc/errors.hpp"

namespace ulrichcalc {

class UnknownCheck : public Error {
 public:
  using Error::Error;
};

struct CheckResult {
  std::string id;
  bool pass = false;
  // Canonical polynomial text.
  std::string expected;
  std::string actual;
  std::string detail;

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// Replacement golden texts keyed by golden id (see golden.hpp).
using GoldenOverrides = std::map<std::string, std::string, std::less<>>;

/// Documented top-level ids, in registry order.
const std::vector<std::string>& registry_ids();

/// Every leaf check id, in registry order.
std::vector<std::string> check_ids();

/// True iff `id` equals `selector` or extends it by a ".suffix". The
/// selector "all" matches everything.
bool selector_matches(std::string_view selector, std::string_view id);

/// Runs the checks matched by `selector` in registry order. Throws
/// UnknownCheck if nothing matches.
std::vector<CheckResult> run_checks(std::string_view selector, const GoldenOverrides& overrides = {});

}  // namespace ulrichcalc
