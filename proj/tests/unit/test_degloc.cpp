#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ulrichcalc/degloc.hpp"

using namespace ulrichcalc;

namespace {

const MultiPoly kD = var(Symbol::d());
const MultiPoly kM = var(Symbol::m());

constexpr std::pair<int, int> kSurfaceCases[] = {{6, 5}, {8, 7}};
constexpr std::pair<int, int> kThreefoldCases[] = {{6, 4}, {8, 6}};

MultiPoly at_m(const MultiPoly& p, long value) { return substitute(p, {{Symbol::m(), MultiPoly(value)}}); }

MultiPoly chi_z(int n, int r, long m) {
  return resolution_chi_OZ(DegeneracyModel::make(n, r), solve_ulrich_chern(n, r), MultiPoly(m));
}

}  // namespace

TEST_CASE("model constants") {
  const DegeneracyModel m = DegeneracyModel::make(6, 4);
  CHECK(m.dim_z == 3);
  CHECK(m.delta == parse_poly("2d - 2"));
  CHECK(m.canonical_x == parse_poly("d - 8"));
  CHECK(m.a_coeff == parse_poly("3d - 10"));
  const DegeneracyModel s = DegeneracyModel::make(8, 7);
  CHECK(s.dim_z == 2);
  CHECK(s.delta == parse_poly("(7/2)(d - 1)"));
}

TEST_CASE("model rejects unsupported shapes") {
  CHECK_THROWS_AS(DegeneracyModel::make(6, 3), UnsupportedCase);
  CHECK_THROWS_AS(DegeneracyModel::make(8, 8), UnsupportedCase);
  CHECK_THROWS_AS(DegeneracyModel::make(2, 2), UnsupportedCase);
  const DegeneracyModel curve = DegeneracyModel::make(6, 6);
  CHECK(curve.dim_z == 1);
  CHECK_THROWS_AS(solve_intersections(curve, solve_ulrich_chern(6, 6)), UnsupportedCase);
}

TEST_CASE("degree of Z is d c_(r-1)") {
  const UlrichClassSolution& sol = solve_ulrich_chern(6, 4);
  CHECK(degree_of_Z(DegeneracyModel::make(6, 4), sol) == kD * sol.e_at(3));
  CHECK(degree_of_Z(DegeneracyModel::make(6, 4), sol) == parse_poly("(d/3)(d-1)^2(2d-1)"));
}

TEST_CASE("canonical square relation") {
  const LinearRelation rel = canonical_square_relation(DegeneracyModel::make(6, 5));
  CHECK(rel.lhs_scale == MultiPoly(1));
  CHECK(rel.kh_coeff == parse_poly("7d - 21"));
  CHECK(rel.h2_coeff == parse_poly("-(1/4)(7d-21)^2"));
  CHECK(rel.pair(MultiPoly(2), MultiPoly(3)) == parse_poly("3(7d-21) - (1/2)(7d-21)^2"));
  const LinearRelation broken{MultiPoly(0), MultiPoly(1), MultiPoly(1)};
  CHECK_THROWS_AS(broken.pair(MultiPoly(1), MultiPoly(1)), DivisionByZero);
}

TEST_CASE("chi(O_Z(m)) is a polynomial of degree dim Z with leading term deg Z / (dim Z)!") {
  for (const auto& [n, r] : {std::pair{6, 4}, std::pair{6, 5}, std::pair{8, 6}, std::pair{8, 7}}) {
    const DegeneracyModel model = DegeneracyModel::make(n, r);
    const UlrichClassSolution& sol = solve_ulrich_chern(n, r);
    const MultiPoly chi = resolution_chi_OZ(model, sol, kM);
    CHECK(chi.degree_in(Symbol::m().index()) == static_cast<unsigned>(model.dim_z));
    Integer fact = 1;
    for (int i = 2; i <= model.dim_z; ++i) fact *= i;
    CHECK(chi.coefficient(Symbol::m().index(), static_cast<unsigned>(model.dim_z)) ==
          degree_of_Z(model, sol) * MultiPoly(Rational(1) / Rational(fact)));
  }
}

TEST_CASE("surfaces: Riemann-Roch at m = 2 and Noether") {
  // chi(O_Z(m)) = chi(O_Z) + (m^2 H^2 - m K H) / 2.
  for (const auto& [n, r] : kSurfaceCases) {
    const IntersectionTable t = solve_intersections(DegeneracyModel::make(n, r), solve_ulrich_chern(n, r));
    CHECK(t.chi0 == chi_z(n, r, 0));
    CHECK(chi_z(n, r, 2) == t.chi0 + (MultiPoly(4) * t.deg_z - MultiPoly(2) * t.kz_hz) * MultiPoly(Rational(1) / Rational(2)));
    CHECK(t.chi_from_invariants == (t.kz2 + t.c2_z) * MultiPoly(Rational(1) / Rational(12)));
    const DegeneracyModel model = DegeneracyModel::make(n, r);
    CHECK(t.kz2 == canonical_square_relation(model).pair(t.deg_z, t.kz_hz));
  }
}

TEST_CASE("threefolds: Riemann-Roch at m = 3 and both K^2 H routes") {
  // chi(O_Z(m)) = m^3 H^3/6 - m^2 K H^2/4 + m (K^2 H + c_2 H)/12 + chi(O_Z).
  for (const auto& [n, r] : kThreefoldCases) {
    const DegeneracyModel model = DegeneracyModel::make(n, r);
    const IntersectionTable t = solve_intersections(model, solve_ulrich_chern(n, r));
    const MultiPoly predicted = t.deg_z * MultiPoly(Rational(27) / Rational(6)) - t.kz_hz2 * MultiPoly(Rational(9) / Rational(4)) +
                                t.kz2_hz_plus_hz_c2z * MultiPoly(Rational(3) / Rational(12)) + t.chi0;
    CHECK(chi_z(n, r, 3) == predicted);
    CHECK(t.kz2_hz + t.hz_c2z == t.kz2_hz_plus_hz_c2z);
    CHECK(t.kz2_hz == canonical_square_relation(model).pair(t.deg_z, t.kz_hz2));
    CHECK(t.chi_from_invariants == t.kz_c2z * MultiPoly(Rational(-1) / Rational(24)));
  }
}

TEST_CASE("chi(O_Z(m)) at m = 0 from the table") {
  const IntersectionTable t = solve_intersections(DegeneracyModel::make(6, 4), solve_ulrich_chern(6, 4));
  CHECK(t.chi0 == at_m(resolution_chi_OZ(DegeneracyModel::make(6, 4), solve_ulrich_chern(6, 4), kM), 0));
  CHECK(t.chi0 != t.chi_from_invariants);
}
