#pragma once

// Invariants of the degeneracy locus Z of a general map O_X^2 -> E, with E
// a rank-r Ulrich bundle: [Z] = c_(r-1)(E), dim Z = n + 1 - r.

#include "ulrichcalc/ulrich.hpp"

namespace ulrichcalc {

struct DegeneracyModel {
  int n = 0;
  int r = 0;
  int dim_z = 0;
  // det E = O_X(delta H) with delta = r(d-1)/2.
  MultiPoly delta;
  // K_X = canonical_x H, canonical_x = d - n - 2.
  MultiPoly canonical_x;
  // (K_X + D)|_Z = a_coeff H_Z.
  MultiPoly a_coeff;

  /// Requires (n+1)/2 <= r <= n+1 and 3 <= n <= 8, r <= 7.
  static DegeneracyModel make(int n, int r);
};

/// lhs_scale * X = h2_coeff * H_Z^2 + kh_coeff * K_Z H_Z, as classes on Z.
struct LinearRelation {
  MultiPoly lhs_scale;
  MultiPoly h2_coeff;
  MultiPoly kh_coeff;

  /// Value of X . Y given the numbers H_Z^2 . Y and K_Z H_Z . Y.
  MultiPoly pair(const MultiPoly& h2_value, const MultiPoly& kh_value) const;
};

/// d e_(r-1), the degree of Z.
MultiPoly degree_of_Z(const DegeneracyModel& model, const UlrichClassSolution& solution);

/// K_Z^2 = 2a K_Z H_Z - a^2 H_Z^2, from (K_Z - (K_X + D)|_Z)^2 = 0.
LinearRelation canonical_square_relation(const DegeneracyModel& model);

/// (r-2) c_2(Z) from c_2 of the normal bundle sequence.
LinearRelation c2Z_relation(const DegeneracyModel& model, const UlrichClassSolution& solution);

/// chi(O_Z(m)) from the Eagon-Northcott resolution of the ideal of Z.
MultiPoly resolution_chi_OZ(const DegeneracyModel& model, const UlrichClassSolution& solution, const MultiPoly& m_expr);

/// Intersection numbers of Z, all polynomials in d. Entries that do not
/// apply to the dimension of Z are left zero.
struct IntersectionTable {
  int dim_z = 0;
  MultiPoly deg_z;
  MultiPoly chi0;
  MultiPoly chi1;
  MultiPoly chi2;
  // surfaces
  MultiPoly kz_hz;
  MultiPoly kz2;
  MultiPoly c2_z;
  // threefolds
  MultiPoly kz_hz2;
  MultiPoly kz2_hz_plus_hz_c2z;
  MultiPoly kz2_hz;
  MultiPoly hz_c2z;
  MultiPoly kz_c2z;
  // chi(O_Z) from the Noether-type formula of the dimension.
  MultiPoly chi_from_invariants;

  friend bool operator==(const IntersectionTable&, const IntersectionTable&) = default;
};

/// Surface or threefold Z only (UnsupportedCase otherwise).
IntersectionTable solve_intersections(const DegeneracyModel& model, const UlrichClassSolution& solution);

}  // namespace ulrichcalc
