#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ulrichcalc/pipeline.hpp"

using namespace ulrichcalc;

namespace {

bool has_factor(const CaseReport& rep, std::string_view text) {
  const MultiPoly f = parse_poly(text);
  for (const MultiPoly& g : rep.stated_factors) {
    if (g == f) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("r = 4 on a sixfold") {
  const CaseReport rep = run_case(6, 4);
  CHECK(rep.verdict);
  CHECK(rep.factorization_exact);
  CHECK(rep.stated_factors.size() == 7);
  for (const char* f : {"d - 1", "d", "d + 1", "2d - 1", "2d + 1", "4d - 1", "4d + 1"}) CHECK(has_factor(rep, f));
  CHECK(rep.cofactor == 1);
  CHECK(rep.roots_ge_3.empty());
  CHECK(rep.integer_roots == std::vector<long>{-1, 0, 1});
  CHECK(rep.chi_from_resolution - rep.chi_from_invariants == rep.difference * MultiPoly(rep.difference_scale));
}

TEST_CASE("remaining cases pass with their distinctive factors") {
  const CaseReport r5 = run_case(6, 5);
  CHECK(r5.verdict);
  CHECK(has_factor(r5, "61d^2 - 13"));
  const CaseReport r6 = run_case(8, 6);
  CHECK(r6.verdict);
  CHECK(has_factor(r6, "6d - 1"));
  CHECK(has_factor(r6, "6d + 1"));
  const CaseReport r7 = run_case(8, 7);
  CHECK(r7.verdict);
  CHECK(has_factor(r7, "12569d^4 - 4210d^2 + 281"));
}

TEST_CASE("the two values differ at every degree 3..20") {
  for (const auto& rep : run_all()) {
    for (int d = 3; d <= 20; ++d) {
      const Assignment at{{Symbol::d(), d}};
      CHECK_MESSAGE(evaluate(rep.chi_from_resolution, at) != evaluate(rep.chi_from_invariants, at),
                    "n=" << rep.n << " r=" << rep.r << " d=" << d);
    }
  }
}

TEST_CASE("run_all is ordered, complete and deterministic") {
  const std::vector<CaseReport> first = run_all();
  const std::vector<CaseReport> second = run_all();
  REQUIRE(first.size() == kCases.size());
  for (std::size_t i = 0; i < kCases.size(); ++i) {
    CHECK(first[i].n == kCases[i].first);
    CHECK(first[i].r == kCases[i].second);
    CHECK(first[i].verdict);
  }
  CHECK(first == second);
}

TEST_CASE("a perturbed Ulrich class breaks only its own case") {
  UlrichClassSolution bad = solve_ulrich_chern(6, 4);
  bad.e[0] += MultiPoly(Rational(1) / Rational(3));
  const CaseReport rep = run_case(bad);
  CHECK_FALSE(rep.verdict);
  CHECK_FALSE(rep.factorization_exact);
  CHECK(run_case(6, 5).verdict);
}

TEST_CASE("the difference is carried by the classes above the rank") {
  // With c_5 = c_6 = 0 the two values agree, so there is nothing to refute.
  UlrichClassSolution truncated = solve_ulrich_chern(6, 4);
  truncated.e[4] = MultiPoly();
  truncated.e[5] = MultiPoly();
  const CaseReport rep = run_case(truncated);
  CHECK(rep.difference.is_zero());
  CHECK_FALSE(rep.verdict);
}

TEST_CASE("unsupported cases") {
  CHECK_THROWS_AS(run_case(7, 4), UnsupportedCase);
  CHECK_THROWS_AS(run_case(6, 6), UnsupportedCase);
  CHECK_THROWS_AS(stated_factors(8, 5), UnsupportedCase);
}

TEST_CASE("dgr inequality") {
  CHECK(check_dgr(8, 6, 4));
  CHECK(check_dgr(8, 7, 6));
  CHECK_FALSE(check_dgr(8, 6, 3));
  CHECK_FALSE(check_dgr(8, 7, 5));
  for (int d = 3; d <= 10; ++d) {
    CHECK(check_dgr(8, 6, d) == (d >= 4));
    CHECK(check_dgr(8, 7, d) == (d >= 6));
  }
  // r = n + 1: C(d, 0) = 1 >= n + 2 never holds.
  CHECK_FALSE(check_dgr(8, 9, 5));
  CHECK_THROWS_AS(check_dgr(8, 10, 5), Error);
  CHECK_THROWS_AS(check_dgr(8, 6, 0), Error);
}
