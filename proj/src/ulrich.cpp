#include "ulrichcalc/ulrich.hpp"

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <utility>

namespace ulrichcalc {

namespace {

// Closed formulas for c_n(E), n = 3..7, without the leading multiple of
// r (d - chi(O_X)). c_i stands for c_i(X), e_i for c_i(E), and K_X = -c_1.
struct TopChernFormula {
  int euler_multiple;
  const char* rest;
};

const std::array<TopChernFormula, 5> kTopChernFormulas = {{
    {2, "+e1e2-((1)/(3))e1^3+((1)/(2))(-c1)(e1^2-2e2)-((1)/(6))((-c1)^2+c2)e1"},
    {-6,
     "-((1)/(4))(-c1)c2e1+((1)/(4))((-c1)^2+c2)(e1^2-2e2) -((1)/(2))(-c1)(e1^3-3e1e2+3e3)"
     "+((1)/(4))(e1^4-4e1^2e2+4e1e3+2e2^2)"},
    {24,
     "-((1)/(5))e1^5+e1^3e2-e1^2e3-e1e2^2 +e1e4 +e2e3+((1)/(2))(e1^2-2e2)c2(-c1) "
     "+((1)/(30))e1((-c1)^4-4(-c1)^2c2+(-c1)c3-3c2^2+c4) "
     "+((1)/(2))(e1^4-4e1^2e2+4e1e3+2e2^2-4e4)(-c1) -((1)/(3))((-c1)^2+c2)(e1^3-3e1e2+3e3)"},
    {-120,
     "-((1)/(12))e1(-(-c1)^3c2+3(-c1)c2^2-(-c1)^2c3-(-c1)c4) "
     "-((1)/(12))((-c1)^4e1^2-4(-c1)^2c2e1^2-3c2^2e1^2+(-c1)c3e1^2+c4e1^2 "
     "-2(-c1)^4e2+8(-c1)^2c2e2+6c2^2e2-2(-c1)c3e2-2c4e2) -((5)/(6))(-c1)c2(e1^3-3e1e2+3e3) "
     "+((5)/(12))((-c1)^2+c2)(e1^4-4e1^2e2+2e2^2+4e1e3-4e4) "
     "-((1)/(2))(-c1)(e1^5-5e1^3e2+5e1e2^2+5e1^2e3-5e2e3-5e1e4+5e5) "
     "+((1)/(6))e1^6-e1^4e2+((3)/(2))e1^2e2^2-((1)/(3))e2^3+e1^3e3-2e1e2e3+((1)/(2))e3^2 "
     "-e1^2e4+e2e4+e1e5"},
    {720,
     "+((1)/(2))(-c1)(e1^6-6e1^4 e2+9e1^2 e2^2-2e2^3+6e1^3 e3-12e1e2e3 +3e3^2-6e1^2 e4+6e2e4+6e1e5-6e6) "
     "-((1)/(2))((-c1)^2+c2)(e1^5-5e1^3 e2+5e1e2^2+5e1^2 e3-5e2e3 -5e1e4+5e5) "
     "+((5)/(4))(-c1)c2(e1^4-4e1^2 e2+2e2^2+4e1e3-4e4) "
     "+((1)/(6))((-c1)^4 e1^3-4(-c1)^2 c2e1^3-3c2^2 e1^3+(-c1)c3e1^3+c4e1^3 "
     "-3(-c1)^4e1e2+12(-c1)^2 c2e1e2+9c2^2 e1e2-3(-c1)c3e1e2 "
     "-3c4e1e2+3(-c1)^4 e3-12(-c1)^2 c2e3-9c2^2 e3+3(-c1)c3e3 +3c4e3) "
     "-((1)/(4))(-c1)((-c1)^2 c2e1^2-3c2^2 e1^2+(-c1)c3e1^2+c4e1^2-2(-c1)^2 c2e2 "
     "+6c2^2 e2-2(-c1)c3e2-2c4e2) "
     "-((1)/(84))e1(2(-c1)^6-12(-c1)^4 c2+11(-c1)^2 c2^2+10c2^3-5(-c1)^3 c3-11(-c1)c2c3 "
     "-c3^2-5(-c1)^2 c4-9c2c4+2(-c1)c5+2c6) "
     "-((1)/(7))e1^7+e1^5 e2-2e1^3 e2^2+e1e2^3-e1^4 e3+3e1^2 e2e3 "
     "-e2^2 e3-e1e3^2+e1^3 e4-2e1e2e4+e3e4-e1^2 e5+e2e5 +e1e6"},
}};

void require_range(int n, int r) {
  if (n < 3 || n > 8 || r < 1 || r > 7) {
    throw UnsupportedCase("Ulrich classes are solved for 3 <= n <= 8 and 1 <= r <= 7, got n=" + std::to_string(n) +
                          ", r=" + std::to_string(r));
  }
}

Rational factorial(int k) {
  Integer f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return Rational(f);
}

}  // namespace

GradedClass UlrichClassSolution::formal_total() const {
  GradedClass total = GradedClass::one(model());
  for (int i = 1; i <= n; ++i) total[i] = e_at(i);
  return total;
}

BundleClass UlrichClassSolution::bundle() const {
  GradedClass total = GradedClass::one(model());
  for (int i = 1; i <= n && i <= r; ++i) total[i] = e_at(i);
  return BundleClass(r, std::move(total));
}

UlrichClassSolution compute_ulrich_chern(int n, int r) {
  require_range(n, r);
  const HypersurfaceModel model{n};
  const GradedClass& td = hypersurface_todd(model);
  UlrichClassSolution sol{n, r, {}};
  // Coefficient of m^(n-j) in chi(E(m)) / d is sum_{k<=j} ch_k td_(j-k) / (n-j)!,
  // and only ch_j involves e_j, linearly with coefficient (-1)^(j-1)/(j-1)!.
  // Matching it with r C(m+n, n) / 1 determines e_j.
  const MultiPoly m = var(Symbol::m());
  const MultiPoly target_poly = binomial_poly(m + MultiPoly(n), static_cast<unsigned>(n)) * MultiPoly(r);
  GradedClass total = GradedClass::one(model);
  for (int j = 1; j <= n; ++j) {
    total[j] = var(Symbol::e(j));
    const GradedClass ch = chern_character(r, total);
    MultiPoly lhs;
    for (int k = 0; k <= j; ++k) lhs += ch[k] * td[j - k];
    lhs *= Rational(1) / factorial(n - j);
    const MultiPoly target = target_poly.coefficient(Symbol::m().index(), static_cast<unsigned>(n - j));
    const MultiPoly slope = lhs.coefficient(Symbol::e(j).index(), 1);
    const MultiPoly offset = lhs.coefficient(Symbol::e(j).index(), 0);
    if (lhs.degree_in(Symbol::e(j).index()) != 1 || !slope.is_constant() || slope.is_zero()) {
      throw InconsistentSystem("unknown e" + std::to_string(j) + " does not enter linearly with a constant coefficient");
    }
    const MultiPoly value = (target - offset) * MultiPoly(Rational(1) / slope.constant_term());
    total[j] = value;
    sol.e.push_back(value);
  }
  const MultiPoly chi = hrr_chi_character(chern_character(r, total), m);
  if (chi != var(Symbol::d()) * target_poly) {
    throw InconsistentSystem("solved classes do not reproduce the Ulrich Hilbert polynomial for n=" +
                             std::to_string(n) + ", r=" + std::to_string(r));
  }
  return sol;
}

const UlrichClassSolution& solve_ulrich_chern(int n, int r) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, UlrichClassSolution> cache;
  const std::pair key{n, r};
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  UlrichClassSolution sol = compute_ulrich_chern(n, r);
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(sol)).first->second;
}

MultiPoly top_chern_identity_rhs(int n, const UlrichClassSolution& solution) {
  if (n < 3 || n > 7) throw UnsupportedCase("top Chern identities exist for 3 <= n <= 7, got " + std::to_string(n));
  if (solution.n < n) throw UnsupportedCase("solution has fewer than n classes");
  const TopChernFormula& f = kTopChernFormulas[static_cast<std::size_t>(n - 3)];
  const TangentData x = tangent_chern({n});
  std::map<Symbol, MultiPoly> values;
  for (int i = 1; i <= n; ++i) {
    values.emplace(Symbol::c(i), x.chern[static_cast<std::size_t>(i)]);
    values.emplace(Symbol::e(i), solution.e_at(i));
  }
  const MultiPoly d = var(Symbol::d());
  const MultiPoly chi0 = chi_structure_twist({n}, MultiPoly(0));
  return d * substitute(parse_poly(f.rest), values) +
         MultiPoly(Rational(f.euler_multiple * solution.r)) * (d - chi0);
}

bool top_chern_identity_check(int n, const UlrichClassSolution& solution) {
  return top_chern_identity_rhs(n, solution) == var(Symbol::d()) * solution.e_at(n);
}

MultiPoly chi_exterior_ulrich(const UlrichClassSolution& solution, int p, const MultiPoly& shift) {
  if (p < 0 || p > solution.r) {
    throw UnsupportedCase("exterior power " + std::to_string(p) + " of a rank " + std::to_string(solution.r) +
                          " bundle");
  }
  if (p == 0) return chi_structure_twist(solution.model(), shift);
  if (p == 1) return hrr_chi_character(chern_character(solution.r, solution.formal_total()), shift);
  return hrr_chi(exterior_power(solution.bundle(), p), shift);
}

MultiPoly chi_exterior_ulrich(int n, int r, int p, const MultiPoly& shift) {
  return chi_exterior_ulrich(solve_ulrich_chern(n, r), p, shift);
}

}  // namespace ulrichcalc
