#pragma once

// Per-case driver: chi(O_Z) from the resolution against chi(O_Z) from the
// intersection numbers, and the certificate that they never agree for an
// integer degree d >= 3.

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "ulrichcalc/degloc.hpp"

namespace ulrichcalc {

inline constexpr std::array<std::pair<int, int>, 4> kCases{{{6, 4}, {6, 5}, {8, 6}, {8, 7}}};

struct CaseReport {
  int n = 0;
  int r = 0;
  IntersectionTable table;
  MultiPoly chi_from_resolution;
  MultiPoly chi_from_invariants;
  /// Primitive integer form of chi_from_resolution - chi_from_invariants,
  /// with positive leading coefficient.
  MultiPoly difference;
  /// chi_from_resolution - chi_from_invariants = difference_scale * difference.
  Rational difference_scale;
  std::vector<MultiPoly> stated_factors;
  /// Every stated factor divides and the remaining cofactor is a constant.
  bool factorization_exact = false;
  /// difference = cofactor * prod(stated_factors); zero when not exact.
  Rational cofactor;
  std::vector<long> roots_ge_3;
  /// Integer roots anywhere in [-B, B], B the Cauchy bound.
  std::vector<long> integer_roots;
  bool verdict = false;

  friend bool operator==(const CaseReport&, const CaseReport&) = default;
};

/// Published factors of the difference for a supported case.
std::vector<MultiPoly> stated_factors(int n, int r);

/// Parses a ';'-separated factor list.
std::vector<MultiPoly> parse_factor_list(std::string_view text);

/// Throws UnsupportedCase outside kCases.
CaseReport run_case(int n, int r);

/// Same, with the Ulrich classes replaced by `solution` (n and r are taken
/// from it). Used for fault injection.
CaseReport run_case(const UlrichClassSolution& solution);

/// The four cases of kCases, computed concurrently, in kCases order.
std::vector<CaseReport> run_all();

/// C(d+n+1-r, n+1-r) >= r(n+2-r) + 1. Requires 1 <= r <= n+1 and d >= 1.
bool check_dgr(int n, int r, int d);

}  // namespace ulrichcalc
