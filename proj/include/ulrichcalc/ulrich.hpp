#pragma once

// Chern classes of Ulrich bundles on hypersurfaces, solved from the Ulrich
// Hilbert polynomial chi(E(m)) = r d C(m + n, n).

#include <vector>

#include "ulrichcalc/hygeo.hpp"

namespace ulrichcalc {

/// c_i(E) = e[i-1] H^i, i = 1..n, each a polynomial in d.
///
/// For i > r the entries are the values forced by the Hilbert polynomial on
/// the formal class; `bundle()` drops them and keeps the rank-r class.
struct UlrichClassSolution {
  int n = 0;
  int r = 0;
  std::vector<MultiPoly> e;

  const MultiPoly& e_at(int i) const { return e.at(static_cast<std::size_t>(i - 1)); }
  HypersurfaceModel model() const { return {n}; }
  /// Total class 1 + e_1 H + ... + e_n H^n, including the formal tail.
  GradedClass formal_total() const;
  /// The rank-r bundle class: c_i = 0 for i > r.
  BundleClass bundle() const;
};

/// Cached per (n, r); requires 3 <= n <= 8 and 1 <= r <= 7.
const UlrichClassSolution& solve_ulrich_chern(int n, int r);

/// Uncached solve, used by the cache and by tests.
UlrichClassSolution compute_ulrich_chern(int n, int r);

/// Value of d c_n(E) predicted by the closed c_n formula in dimension n
/// (3 <= n <= 7), using c_i(E) = e_i from the solution and the tangent
/// classes of the n-dimensional hypersurface.
MultiPoly top_chern_identity_rhs(int n, const UlrichClassSolution& solution);

/// True iff top_chern_identity_rhs equals d e_n exactly.
bool top_chern_identity_check(int n, const UlrichClassSolution& solution);

/// chi((Lambda^p E)(shift)). p = 1 uses the formal class, so it equals the
/// Ulrich Hilbert polynomial; p = 0 is chi(O_X(shift)).
MultiPoly chi_exterior_ulrich(const UlrichClassSolution& solution, int p, const MultiPoly& shift);
MultiPoly chi_exterior_ulrich(int n, int r, int p, const MultiPoly& shift);

}  // namespace ulrichcalc
