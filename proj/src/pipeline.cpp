#include "ulrichcalc/pipeline.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "ulrichcalc/golden.hpp"

namespace ulrichcalc {

namespace {

void require_case(int n, int r) {
  const bool known = std::any_of(kCases.begin(), kCases.end(), [&](const auto& c) { return c.first == n && c.second == r; });
  if (!known) throw UnsupportedCase("no verification case for n=" + std::to_string(n) + ", r=" + std::to_string(r));
}

}  // namespace

std::vector<MultiPoly> stated_factors(int n, int r) {
  require_case(n, r);
  return parse_factor_list(golden_text("case." + std::to_string(n) + "." + std::to_string(r) + ".factors"));
}

std::vector<MultiPoly> parse_factor_list(std::string_view text) {
  std::vector<MultiPoly> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t stop = std::min(text.find(';', start), text.size());
    out.push_back(parse_poly(text.substr(start, stop - start)));
    start = stop + 1;
  }
  return out;
}

CaseReport run_case(int n, int r) {
  require_case(n, r);
  return run_case(solve_ulrich_chern(n, r));
}

CaseReport run_case(const UlrichClassSolution& solution) {
  const int n = solution.n;
  const int r = solution.r;
  require_case(n, r);
  const DegeneracyModel model = DegeneracyModel::make(n, r);

  CaseReport report;
  report.n = n;
  report.r = r;
  report.table = solve_intersections(model, solution);
  report.chi_from_resolution = report.table.chi0;
  report.chi_from_invariants = report.table.chi_from_invariants;

  const MultiPoly raw = report.chi_from_resolution - report.chi_from_invariants;
  report.stated_factors = stated_factors(n, r);
  if (!raw.is_zero()) {
    report.difference_scale = content(raw);
    report.difference = primitive_part(raw);
    const FactorDivision division = divide_by_stated_factors(report.difference, report.stated_factors);
    report.factorization_exact = division.exact && division.quotient.is_constant() && !division.quotient.is_zero();
    if (report.factorization_exact) report.cofactor = division.quotient.constant_term();
    report.roots_ge_3 = integer_roots_at_least(report.difference, 3);
    const Rational bound = cauchy_bound(report.difference);
    Integer lo;
    mpz_cdiv_q(lo.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
    report.integer_roots = integer_roots_at_least(report.difference, -lo.get_si());
  }
  report.verdict = !report.difference.is_zero() && report.factorization_exact && report.roots_ge_3.empty();
  return report;
}

std::vector<CaseReport> run_all() {
  std::vector<std::future<CaseReport>> jobs;
  jobs.reserve(kCases.size());
  for (const auto& [n, r] : kCases) {
    jobs.push_back(std::async(std::launch::async, [n = n, r = r] { return run_case(n, r); }));
  }
  std::vector<CaseReport> out;
  out.reserve(jobs.size());
  for (auto& job : jobs) out.push_back(job.get());
  return out;
}

bool check_dgr(int n, int r, int d) {
  if (r < 1 || r > n + 1 || d < 1) {
    throw Error("check_dgr needs 1 <= r <= n+1 and d >= 1, got n=" + std::to_string(n) + ", r=" + std::to_string(r) +
                ", d=" + std::to_string(d));
  }
  const Integer lhs = binomial(static_cast<unsigned long>(d + n + 1 - r), static_cast<unsigned long>(n + 1 - r));
  return lhs >= Integer(r) * (n + 2 - r) + 1;
}

}  // namespace ulrichcalc
