#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "ulrichcalc/charcls.hpp"
#include "ulrichcalc/pipeline.hpp"
#include "ulrichcalc/registry.hpp"
#include "ulrichcalc/symmetric.hpp"
#include "ulrichcalc/ulrich.hpp"

namespace py = pybind11;
using namespace ulrichcalc;

namespace {

std::vector<std::string> texts(const std::vector<MultiPoly>& polys) {
  std::vector<std::string> out;
  for (const MultiPoly& p : polys) out.push_back(to_text(p));
  return out;
}

std::vector<std::string> ulrich_classes(int n, int r) {
  const UlrichClassSolution& sol = solve_ulrich_chern(n, r);
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back(to_text(sol.e_at(i)));
  return out;
}

std::vector<std::string> lambda_classes(int rank, int power, int max_degree) {
  if (rank < 1 || rank > kMaxExteriorRank) throw UnsupportedRank("rank must lie in 1..7");
  if (power < 0) throw Error("power must be nonnegative");
  if (max_degree < 1 || max_degree > kMaxClassIndex) throw Error("max_degree must lie in 1..8");
  const BundleClass b = exterior_power(BundleClass::generic(HypersurfaceModel{max_degree}, rank, Symbol::c), power);
  std::vector<std::string> out;
  for (int k = 1; k <= max_degree; ++k) out.push_back(to_text(b.c(k)));
  return out;
}

std::vector<py::dict> checks(const std::string& selector, const std::map<std::string, std::string>& overrides) {
  std::vector<py::dict> out;
  for (const CheckResult& r : run_checks(selector, GoldenOverrides(overrides.begin(), overrides.end()))) {
    py::dict d;
    d["id"] = r.id;
    d["status"] = r.pass ? "pass" : "fail";
    d["expected"] = r.expected;
    d["actual"] = r.actual;
    d["detail"] = r.detail;
    out.push_back(std::move(d));
  }
  return out;
}

py::dict case_report(int n, int r) {
  const CaseReport rep = run_case(n, r);
  py::dict d;
  d["n"] = rep.n;
  d["r"] = rep.r;
  d["chi_from_resolution"] = to_text(rep.chi_from_resolution);
  d["chi_from_invariants"] = to_text(rep.chi_from_invariants);
  d["difference"] = to_text(rep.difference);
  d["difference_scale"] = rational_text(rep.difference_scale);
  d["stated_factors"] = texts(rep.stated_factors);
  d["factorization_exact"] = rep.factorization_exact;
  d["cofactor"] = rational_text(rep.cofactor);
  d["roots_ge_3"] = rep.roots_ge_3;
  d["integer_roots"] = rep.integer_roots;
  d["verdict"] = rep.verdict;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact Chern class and Euler characteristic computations for Ulrich bundles on hypersurfaces";
  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("canonical", [](const std::string& text) { return to_text(parse_poly(text)); }, py::arg("text"),
        "Canonical text of a polynomial.");
  m.def("ulrich_classes", &ulrich_classes, py::arg("n"), py::arg("r"),
        "Coefficients e_1..e_n of H^i in the Chern classes forced on a rank r Ulrich bundle.");
  m.def("lambda_classes", &lambda_classes, py::arg("rank"), py::arg("power"), py::arg("max_degree"),
        "c_1..c_max_degree of the exterior power of a bundle with classes c1..c_rank.");
  m.def(
      "chi_exterior_ulrich",
      [](int n, int r, int p, const std::string& shift) { return to_text(chi_exterior_ulrich(n, r, p, parse_poly(shift))); },
      py::arg("n"), py::arg("r"), py::arg("p"), py::arg("shift"),
      "chi of the p-th exterior power of the Ulrich class twisted by shift, in m and d.");
  m.def("registry_ids", &registry_ids, "Documented check ids.");
  m.def("check_ids", &check_ids, "Every leaf check id.");
  m.def("run_checks", &checks, py::arg("selector") = "all",
        py::arg("overrides") = std::map<std::string, std::string>{}, "Runs stored checks; returns report entries.");
  m.def("run_case", &case_report, py::arg("n"), py::arg("r"), "Compares the two values of chi(O_Z) for one case.");
  m.def("check_dgr", &check_dgr, py::arg("n"), py::arg("r"), py::arg("d"),
        "Whether the degree bound needed by the case argument holds.");
}
