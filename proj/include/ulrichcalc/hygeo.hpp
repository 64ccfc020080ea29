#pragma once

// Tangent classes, Todd class and Euler characteristics on a smooth
// degree-d hypersurface X of dimension n.

#include <vector>

#include "ulrichcalc/charcls.hpp"

namespace ulrichcalc {

struct TangentData {
  HypersurfaceModel model;
  // chern[i] is the coefficient of H^i in c_i(X); chern[0] = 1.
  std::vector<MultiPoly> chern;

  GradedClass total() const { return GradedClass(model, chern); }
  /// K_X = (d - n - 2) H, as the coefficient of H.
  MultiPoly canonical() const { return -chern.at(1); }
};

/// c_i(X) = sum_k (-1)^(i-k) C(n+2, k) d^(i-k).
TangentData tangent_chern(HypersurfaceModel model);

/// Same classes from c_i(X) = C(n+2, i) - d c_(i-1)(X).
TangentData tangent_chern_recursive(HypersurfaceModel model);

/// Td(X), cached per dimension.
const GradedClass& hypersurface_todd(HypersurfaceModel model);

/// C(m + n + 1, n + 1) - C(m - d + n + 1, n + 1).
MultiPoly chi_structure_twist(HypersurfaceModel model, const MultiPoly& m_expr);

/// Coefficient of the top power of H in ch exp(twist H) Td, where `todd_class`
/// is the Todd class of the ambient variety.
MultiPoly riemann_roch_top(const GradedClass& ch, const MultiPoly& twist_expr, const GradedClass& todd_class);

/// chi(b(twist)) on X.
MultiPoly hrr_chi(const BundleClass& b, const MultiPoly& twist_expr);

/// chi of the twisted class with Chern character `ch` on X.
MultiPoly hrr_chi_character(const GradedClass& ch, const MultiPoly& twist_expr);

}  // namespace ulrichcalc
