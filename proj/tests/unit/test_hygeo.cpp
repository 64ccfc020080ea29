#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ulrichcalc/hygeo.hpp"

using namespace ulrichcalc;

namespace {

const MultiPoly kD = var(Symbol::d());
const MultiPoly kM = var(Symbol::m());

// Coefficients of (x / (1 - e^-x))^(n+2) / (dx / (1 - e^-dx)) up to x^n.
std::vector<MultiPoly> todd_by_series(int n) {
  const std::vector<Rational> q = todd_series(n);
  std::vector<MultiPoly> num(static_cast<std::size_t>(n) + 1);
  num[0] = MultiPoly(1);
  for (int power = 0; power < n + 2; ++power) {
    std::vector<MultiPoly> next(num.size());
    for (int i = 0; i <= n; ++i) {
      for (int j = 0; i + j <= n; ++j) {
        next[static_cast<std::size_t>(i + j)] += num[static_cast<std::size_t>(i)] * MultiPoly(q[static_cast<std::size_t>(j)]);
      }
    }
    num = std::move(next);
  }
  // Inverse of Q(dx) = sum q_k d^k x^k, with q_0 = 1.
  std::vector<MultiPoly> inv(num.size());
  inv[0] = MultiPoly(1);
  for (int k = 1; k <= n; ++k) {
    MultiPoly acc;
    for (int j = 1; j <= k; ++j) {
      acc += MultiPoly(q[static_cast<std::size_t>(j)]) * kD.pow(static_cast<unsigned>(j)) * inv[static_cast<std::size_t>(k - j)];
    }
    inv[static_cast<std::size_t>(k)] = -acc;
  }
  std::vector<MultiPoly> out(num.size());
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; i + j <= n; ++j) out[static_cast<std::size_t>(i + j)] += num[static_cast<std::size_t>(i)] * inv[static_cast<std::size_t>(j)];
  }
  return out;
}

}  // namespace

TEST_CASE("tangent classes: closed form equals the recursion") {
  for (int n = 1; n <= 8; ++n) {
    const HypersurfaceModel model{n};
    CHECK(tangent_chern(model).chern == tangent_chern_recursive(model).chern);
  }
}

TEST_CASE("tangent classes: examples") {
  const TangentData x6 = tangent_chern(HypersurfaceModel{6});
  CHECK(x6.chern[1] == parse_poly("8 - d"));
  CHECK(x6.chern[2] == parse_poly("28 - 8d + d^2"));
  CHECK(x6.canonical() == parse_poly("d - 8"));
  // Euler numbers of the quintic threefold and the quartic surface.
  const TangentData x3 = tangent_chern(HypersurfaceModel{3});
  CHECK(evaluate(kD * x3.chern[3], {{Symbol::d(), 5}}) == -200);
  const TangentData x2 = tangent_chern(HypersurfaceModel{2});
  CHECK(evaluate(kD * x2.chern[2], {{Symbol::d(), 4}}) == 24);
}

TEST_CASE("Todd class against the ambient series") {
  for (int n : {3, 6, 8}) {
    const GradedClass& td = hypersurface_todd(HypersurfaceModel{n});
    const std::vector<MultiPoly> expected = todd_by_series(n);
    for (int k = 0; k <= n; ++k) CHECK(td[k] == expected[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("structure sheaf: Riemann-Roch equals the ambient count") {
  for (int n : {3, 6, 8}) {
    const HypersurfaceModel model{n};
    CHECK(hrr_chi(BundleClass::trivial(model, 1), kM) == chi_structure_twist(model, kM));
  }
}

TEST_CASE("structure sheaf: values") {
  const HypersurfaceModel x6{6};
  CHECK(evaluate(chi_structure_twist(x6, MultiPoly(3)), {{Symbol::d(), 3}}) == 119);
  CHECK(evaluate(chi_structure_twist(x6, MultiPoly(0)), {{Symbol::d(), 3}}) == 1);
  CHECK(chi_structure_twist(x6, MultiPoly(0)) == parse_poly("1 - (1/5040)*(7-d)(6-d)(5-d)(4-d)(3-d)(2-d)(1-d)"));
}

TEST_CASE("Serre duality for O_X(m)") {
  for (int n = 2; n <= 8; ++n) {
    const HypersurfaceModel model{n};
    const MultiPoly lhs = chi_structure_twist(model, kM);
    const MultiPoly rhs = chi_structure_twist(model, kD - MultiPoly(n + 2) - kM);
    CHECK(lhs == (n % 2 == 0 ? rhs : -rhs));
  }
}

TEST_CASE("line bundles shift the twist") {
  const HypersurfaceModel x5{5};
  for (int a = -3; a <= 3; ++a) {
    CHECK(hrr_chi(BundleClass::line(x5, a), kM) == chi_structure_twist(x5, kM + MultiPoly(a)));
  }
}

TEST_CASE("Euler characteristic is additive") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> deg(-3, 3);
  const HypersurfaceModel x6{6};
  CHECK(hrr_chi(BundleClass::zero(x6), kM).is_zero());
  for (int trial = 0; trial < 20; ++trial) {
    const BundleClass a = direct_sum(BundleClass::line(x6, deg(rng)), BundleClass::line(x6, deg(rng)));
    const BundleClass b = BundleClass::line(x6, deg(rng));
    CHECK(hrr_chi(direct_sum(a, b), kM) == hrr_chi(a, kM) + hrr_chi(b, kM));
  }
}

TEST_CASE("riemann_roch_top of a point class") {
  const HypersurfaceModel x4{4};
  const GradedClass point = GradedClass::h_power(x4, 4);
  CHECK(riemann_roch_top(point, kM, hypersurface_todd(x4)) == MultiPoly(1));
  CHECK(hrr_chi_character(point, kM) == kD);
}
