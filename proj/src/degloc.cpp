#include "ulrichcalc/degloc.hpp"

#include <string>

namespace ulrichcalc {

namespace {

MultiPoly d() { return var(Symbol::d()); }

MultiPoly at_m(const MultiPoly& p, long value) { return substitute(p, {{Symbol::m(), MultiPoly(value)}}); }

}  // namespace

DegeneracyModel DegeneracyModel::make(int n, int r) {
  if (n < 3 || n > 8 || r > 7 || 2 * r < n + 1 || r > n + 1) {
    throw UnsupportedCase("no degeneracy locus model for n=" + std::to_string(n) + ", r=" + std::to_string(r));
  }
  DegeneracyModel m;
  m.n = n;
  m.r = r;
  m.dim_z = n + 1 - r;
  m.delta = (d() - MultiPoly(1)) * MultiPoly(Rational(r) / Rational(2));
  m.canonical_x = d() - MultiPoly(n + 2);
  m.a_coeff = m.canonical_x + m.delta;
  return m;
}

MultiPoly LinearRelation::pair(const MultiPoly& h2_value, const MultiPoly& kh_value) const {
  if (!lhs_scale.is_constant() || lhs_scale.is_zero()) throw DivisionByZero("relation has no usable left-hand scale");
  return (h2_coeff * h2_value + kh_coeff * kh_value) * MultiPoly(Rational(1) / lhs_scale.constant_term());
}

MultiPoly degree_of_Z(const DegeneracyModel& model, const UlrichClassSolution& solution) {
  return d() * solution.e_at(model.r - 1);
}

LinearRelation canonical_square_relation(const DegeneracyModel& model) {
  const MultiPoly& a = model.a_coeff;
  return {MultiPoly(1), -(a * a), a * MultiPoly(2)};
}

LinearRelation c2Z_relation(const DegeneracyModel& model, const UlrichClassSolution& solution) {
  // (r-2) c_2(Z) = (r-2)(c_2(X) - c_2(E)) + (K_Z - K_X)((r-2) K_X + (r-1) D) - D^2, restricted to Z.
  const MultiPoly r2(model.r - 2);
  const MultiPoly& k = model.canonical_x;
  const MultiPoly& delta = model.delta;
  const MultiPoly x2 = tangent_chern({model.n}).chern.at(2);
  const MultiPoly slope = r2 * k + MultiPoly(model.r - 1) * delta;
  return {r2, r2 * (x2 - solution.e_at(2)) - k * slope - delta * delta, slope};
}

MultiPoly resolution_chi_OZ(const DegeneracyModel& model, const UlrichClassSolution& solution, const MultiPoly& m_expr) {
  const int r = model.r;
  const MultiPoly shift = m_expr - model.delta;
  MultiPoly chi = chi_structure_twist({model.n}, m_expr);
  // The ideal sheaf has the resolution with F_i = (Lambda^(r-1-i) E (-D))^(+i), i = 1..r-1.
  for (int i = 1; i <= r - 1; ++i) {
    const MultiPoly term = chi_exterior_ulrich(solution, r - 1 - i, shift) * MultiPoly(i);
    if (i % 2 == 1) {
      chi -= term;
    } else {
      chi += term;
    }
  }
  return chi;
}

IntersectionTable solve_intersections(const DegeneracyModel& model, const UlrichClassSolution& solution) {
  if (model.dim_z != 2 && model.dim_z != 3) {
    throw UnsupportedCase("intersection numbers are extracted only for surfaces and threefolds");
  }
  IntersectionTable t;
  t.dim_z = model.dim_z;
  t.deg_z = degree_of_Z(model, solution);
  const MultiPoly chi_m = resolution_chi_OZ(model, solution, var(Symbol::m()));
  t.chi0 = at_m(chi_m, 0);
  t.chi1 = at_m(chi_m, 1);
  const LinearRelation k2 = canonical_square_relation(model);
  const LinearRelation c2 = c2Z_relation(model, solution);
  if (model.dim_z == 2) {
    t.kz_hz = MultiPoly(-2) * t.chi1 + MultiPoly(2) * t.chi0 + t.deg_z;
    t.kz2 = k2.pair(t.deg_z, t.kz_hz);
    t.c2_z = c2.pair(t.deg_z, t.kz_hz);
    t.chi_from_invariants = (t.kz2 + t.c2_z) * MultiPoly(Rational(1) / Rational(12));
    return t;
  }
  t.chi2 = at_m(chi_m, 2);
  t.kz_hz2 = MultiPoly(4) * t.chi1 - MultiPoly(2) * t.chi2 - MultiPoly(2) * t.chi0 + MultiPoly(2) * t.deg_z;
  t.kz2_hz_plus_hz_c2z =
      MultiPoly(12) * t.chi1 - MultiPoly(12) * t.chi0 - MultiPoly(2) * t.deg_z + MultiPoly(3) * t.kz_hz2;
  t.hz_c2z = c2.pair(t.deg_z, t.kz_hz2);
  t.kz2_hz = t.kz2_hz_plus_hz_c2z - t.hz_c2z;
  t.kz_c2z = c2.pair(t.kz_hz2, t.kz2_hz);
  t.chi_from_invariants = t.kz_c2z * MultiPoly(Rational(-1) / Rational(24));
  return t;
}

}  // namespace ulrichcalc
