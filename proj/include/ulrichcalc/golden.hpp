#pragma once

// Published closed forms, stored as polynomial text in the parse_poly
// syntax. Ids follow the registry naming ("w7.9", "suz6.2", "case.8.6.kc2").

#include <span>
#include <string_view>

namespace ulrichcalc {

struct GoldenEntry {
  std::string_view id;
  std::string_view text;
};

std::span<const GoldenEntry> golden_entries();

/// Throws Error for an unknown id.
std::string_view golden_text(std::string_view id);

}  // namespace ulrichcalc
