#include "ulrichcalc/registry.hpp"

#include <algorithm>
#include <array>
#include <future>
#include <mutex>
#include <optional>
#include <string>

#include "ulrichcalc/golden.hpp"
#include "ulrichcalc/pipeline.hpp"

namespace ulrichcalc {

std::string_view golden_text(std::string_view id) {
  for (const GoldenEntry& e : golden_entries()) {
    if (e.id == id) return e.text;
  }
  throw Error("no golden entry " + std::string(id));
}

namespace {

using CaseKey = std::pair<int, int>;

class Context {
 public:
  explicit Context(const GoldenOverrides& overrides) : overrides_(overrides) {}

  std::string_view raw(std::string_view id) const {
    auto it = overrides_.find(id);
    return it == overrides_.end() ? golden_text(id) : std::string_view(it->second);
  }

  MultiPoly golden(std::string_view id, std::optional<int> rank = std::nullopt) const {
    std::string text(raw(id));
    if (rank) {
      // The rank appears as the letter r in the rank-generic formulas.
      std::string replaced;
      for (char ch : text) replaced += ch == 'r' ? "(" + std::to_string(*rank) + ")" : std::string(1, ch);
      text = std::move(replaced);
    }
    return parse_poly(text);
  }

  void prefetch(const std::vector<CaseKey>& keys) {
    std::vector<std::future<CaseReport>> jobs;
    for (const auto& [n, r] : keys) {
      jobs.push_back(std::async(std::launch::async, [n = n, r = r] { return run_case(n, r); }));
    }
    for (std::size_t i = 0; i < keys.size(); ++i) reports_.insert_or_assign(keys[i], jobs[i].get());
  }

  const CaseReport& report(int n, int r) {
    auto it = reports_.find({n, r});
    if (it == reports_.end()) it = reports_.emplace(CaseKey{n, r}, run_case(n, r)).first;
    return it->second;
  }

 private:
  const GoldenOverrides& overrides_;
  std::map<CaseKey, CaseReport> reports_;
};

struct Check {
  Check(std::string id_, std::function<CheckResult(Context&)> run_, std::optional<CaseKey> case_key_ = std::nullopt)
      : id(std::move(id_)), run(std::move(run_)), case_key(case_key_) {}

  std::string id;
  std::function<CheckResult(Context&)> run;
  // Set for checks that read a case report.
  std::optional<CaseKey> case_key;
};

CheckResult compare(const std::string& id, const MultiPoly& expected, const MultiPoly& actual, std::string detail) {
  return CheckResult{id, expected == actual, to_text(expected), to_text(actual), std::move(detail)};
}

MultiPoly weight_part(const MultiPoly& p, int weight) {
  MultiPoly out;
  for (const auto& [mono, c] : p.terms()) {
    int w = 0;
    for (std::size_t i = 0; i < kNumSymbols; ++i) w += mono.e[i] * Symbol::from_index(i).weight();
    if (w == weight) out += MultiPoly::monomial(mono, c);
  }
  return out;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string case_prefix(int n, int r) { return "case." + std::to_string(n) + "." + std::to_string(r); }

MultiPoly binom(const std::string& top, unsigned k) { return binomial_poly(parse_poly(top), k); }

const MultiPoly kM = var(Symbol::m());
const MultiPoly kD = var(Symbol::d());

// chi(O_Z(m)) in the explicit form obtained from each resolution, with the
// exterior power terms evaluated by the engine.
MultiPoly resolution_formula(int n, int r) {
  const UlrichClassSolution& sol = solve_ulrich_chern(n, r);
  const auto chi_l = [&](int p, const MultiPoly& shift) { return chi_exterior_ulrich(sol, p, shift); };
  if (n == 6 && r == 4) {
    const MultiPoly s = parse_poly("m-2d+2");
    return binom("m+7", 7) - binom("m-d+7", 7) - chi_l(2, s) + kD * binom("m-2d+8", 6) * MultiPoly(8) -
           binom("m-2d+9", 7) * MultiPoly(3) + binom("m-3d+9", 7) * MultiPoly(3);
  }
  if (n == 6 && r == 5) {
    const MultiPoly s = parse_poly("m-(5/2)*(d-1)");
    return binom("m+7", 7) - binom("m-d+7", 7) - chi_l(3, s) + chi_l(2, s) * MultiPoly(2) -
           kD * binom("m-(5/2)*(d-1)+6", 6) * MultiPoly(15) + binom("m-(5/2)*(d-1)+7", 7) * MultiPoly(4) -
           binom("m-(5/2)*(d-1)-d+7", 7) * MultiPoly(4);
  }
  if (n == 8 && r == 6) {
    const MultiPoly s = parse_poly("m-3d+3");
    return binom("m+9", 9) - binom("m-d+9", 9) - chi_l(4, s) + chi_l(3, s) * MultiPoly(2) -
           chi_l(2, s) * MultiPoly(3) + kD * binom("m-3d+11", 8) * MultiPoly(24) - binom("m-3d+12", 9) * MultiPoly(5) +
           binom("m-4d+12", 9) * MultiPoly(5);
  }
  const MultiPoly s = parse_poly("m-(7/2)*(d-1)");
  return binom("m+9", 9) - binom("m-d+9", 9) - chi_l(5, s) + chi_l(4, s) * MultiPoly(2) - chi_l(3, s) * MultiPoly(3) +
         chi_l(2, s) * MultiPoly(4) - kD * binom("m-(7/2)*(d-1)+8", 8) * MultiPoly(35) +
         binom("m-(7/2)*(d-1)+9", 9) * MultiPoly(6) - binom("m-(7/2)*(d-1)-d+9", 9) * MultiPoly(6);
}

void add_xn(std::vector<Check>& out) {
  for (int n = 3; n <= 8; ++n) {
    for (int i = 1; i <= n; ++i) {
      out.push_back({"xn." + std::to_string(n) + "." + std::to_string(i), [n, i](Context&) {
                       const HypersurfaceModel model{n};
                       return compare("xn." + std::to_string(n) + "." + std::to_string(i),
                                      tangent_chern_recursive(model).chern.at(static_cast<std::size_t>(i)),
                                      tangent_chern(model).chern.at(static_cast<std::size_t>(i)),
                                      "c_" + std::to_string(i) + "(X), closed form against the normal bundle recursion");
                     }});
    }
  }
}

void add_xne(std::vector<Check>& out) {
  // Chern index and the rank the item is stated for (0: every rank).
  constexpr std::array<std::pair<int, int>, 10> items{{{1, 0}, {2, 0}, {3, 0}, {4, 0}, {5, 5},
                                                       {5, 6}, {6, 6}, {5, 7}, {6, 7}, {7, 7}}};
  for (int k = 1; k <= 10; ++k) {
    const auto [index, rank] = items[static_cast<std::size_t>(k - 1)];
    for (int n : {6, 8}) {
      for (int r = 1; r <= kMaxExteriorRank; ++r) {
        if ((rank != 0 && r != rank) || index > n) continue;
        const std::string golden_id = "xne." + std::to_string(k);
        const std::string id = golden_id + ".n" + std::to_string(n) + ".r" + std::to_string(r);
        out.push_back({id, [=](Context& ctx) {
                         return compare(id, ctx.golden(golden_id, r), solve_ulrich_chern(n, r).e_at(index),
                                        "c_" + std::to_string(index) + "(E) of a rank " + std::to_string(r) +
                                            " Ulrich bundle, n = " + std::to_string(n));
                       }});
      }
    }
  }
}

void add_exterior(std::vector<Check>& out) {
  for (int rank = 4; rank <= 7; ++rank) {
    const int per_power = rank <= 5 ? 6 : 8;
    const int powers = rank <= 5 ? 1 : 2;
    for (int q = 0; q < powers; ++q) {
      for (int i = 1; i <= per_power; ++i) {
        const int p = 2 + q;
        const std::string id = "w" + std::to_string(rank) + "." + std::to_string(q * per_power + i);
        out.push_back({id, [=](Context& ctx) {
                         const BundleClass generic = BundleClass::generic(HypersurfaceModel{8}, rank, Symbol::c);
                         return compare(id, ctx.golden(id), exterior_power(generic, p).c(i),
                                        "c_" + std::to_string(i) + " of Lambda^" + std::to_string(p) + " of rank " +
                                            std::to_string(rank));
                       }});
      }
    }
  }
}

void add_todd_and_character(std::vector<Check>& out) {
  for (int k = 0; k <= 8; ++k) {
    const std::string id = "td." + std::to_string(k);
    out.push_back({id, [=](Context& ctx) {
                     const GradedClass generic = BundleClass::generic(HypersurfaceModel{8}, 8, Symbol::c).total_chern();
                     return compare(id, weight_part(ctx.golden("td"), k), todd(generic)[k],
                                    "degree " + std::to_string(k) + " part of the Todd class");
                   }});
  }
  for (int k = 0; k <= 8; ++k) {
    const std::string id = "ch." + std::to_string(k);
    out.push_back({id, [=](Context& ctx) {
                     const BundleClass generic = BundleClass::generic(HypersurfaceModel{8}, 8, Symbol::f);
                     return compare(id, weight_part(ctx.golden("ch", 8), k), chern_to_ch(generic)[k],
                                    "degree " + std::to_string(k) + " part of the Chern character, rank 8");
                   }});
  }
}

void add_riemann_roch(std::vector<Check>& out) {
  for (int rank : {6, 10}) {
    const std::string id = "rr" + std::to_string(rank);
    out.push_back({id, [=](Context& ctx) {
                     const HypersurfaceModel model{6};
                     const GradedClass td = todd(BundleClass::generic(model, 6, Symbol::c).total_chern());
                     const GradedClass ch = chern_to_ch(BundleClass::generic(model, rank, Symbol::f));
                     return compare(id, ctx.golden(id), riemann_roch_top(ch, MultiPoly(), td),
                                    "chi of a rank " + std::to_string(rank) + " bundle on a sixfold");
                   }});
  }
  for (int rank : {4, 5}) {
    const std::string id = "chiw2" + std::to_string(rank);
    out.push_back({id, [=](Context& ctx) {
                     const HypersurfaceModel model{6};
                     const GradedClass td = todd(BundleClass::generic(model, 6, Symbol::c).total_chern());
                     const BundleClass wedge = exterior_power(BundleClass::generic(model, rank, Symbol::f), 2);
                     return compare(id, ctx.golden(id), riemann_roch_top(chern_to_ch(wedge), var(Symbol::t()), td),
                                    "chi(Lambda^2 F(t)) for F of rank " + std::to_string(rank) + " on a sixfold");
                   }});
  }
}

void add_appendix_chi(std::vector<Check>& out) {
  struct Lemma {
    const char* label;
    int n;
    int r;
    const char* shift;
    int items;
  };
  constexpr std::array<Lemma, 4> lemmas{{{"suz4", 6, 4, "2d-2", 1},
                                         {"suz5", 6, 5, "(5/2)*(d-1)", 2},
                                         {"suz6", 8, 6, "3d-3", 3},
                                         {"suz7", 8, 7, "(7/2)*(d-1)", 4}}};
  for (const Lemma& lemma : lemmas) {
    for (int k = 1; k <= lemma.items; ++k) {
      const std::string id = std::string(lemma.label) + "." + std::to_string(k);
      const int p = k + 1;
      out.push_back({id, [=](Context& ctx) {
                       const MultiPoly shift = kM - parse_poly(lemma.shift);
                       return compare(id, ctx.golden(id), chi_exterior_ulrich(lemma.n, lemma.r, p, shift),
                                      "chi(Lambda^" + std::to_string(p) + " E(m - " + lemma.shift + ")), n = " +
                                          std::to_string(lemma.n) + ", r = " + std::to_string(lemma.r));
                     }});
    }
  }
}

void add_relation(std::vector<Check>& out, const std::string& base, int n, int r, bool canonical_square) {
  for (const char* part : {"lhs", "h2", "kh"}) {
    const std::string id = base + "." + part;
    const std::string which = part;
    out.push_back({id, [=](Context& ctx) {
                     const DegeneracyModel model = DegeneracyModel::make(n, r);
                     const LinearRelation rel = canonical_square ? canonical_square_relation(model)
                                                                 : c2Z_relation(model, solve_ulrich_chern(n, r));
                     const MultiPoly& actual = which == "lhs" ? rel.lhs_scale : which == "h2" ? rel.h2_coeff : rel.kh_coeff;
                     return compare(id, ctx.golden(id), actual,
                                    std::string(canonical_square ? "K_Z^2" : "c_2(Z)") + " relation, " + which +
                                        " coefficient");
                   }});
  }
}

void add_locus(std::vector<Check>& out) {
  struct Locus {
    const char* label;
    int n;
    int r_three;
    int r_two;
  };
  for (const Locus& l : {Locus{"x6z", 6, 4, 5}, Locus{"x8z", 8, 6, 7}}) {
    const std::string base = l.label;
    for (const auto& [item, r] : {std::pair{"ii", l.r_three}, std::pair{"v", l.r_two}}) {
      const std::string id = base + "." + item;
      const int n = l.n;
      const int rr = r;
      out.push_back({id, [=](Context& ctx) {
                       return compare(id, ctx.golden(id),
                                      degree_of_Z(DegeneracyModel::make(n, rr), solve_ulrich_chern(n, rr)),
                                      "deg Z for r = " + std::to_string(rr));
                     }});
    }
    add_relation(out, base + ".iii", l.n, l.r_three, false);
    add_relation(out, base + ".vi", l.n, l.r_two, true);
    add_relation(out, base + ".vii", l.n, l.r_two, false);
    for (int r : {l.r_three, l.r_two}) {
      const std::string id = base + ".res" + std::to_string(r);
      const int n = l.n;
      out.push_back({id, [=](Context&) {
                       const DegeneracyModel model = DegeneracyModel::make(n, r);
                       return compare(id, resolution_formula(n, r),
                                      resolution_chi_OZ(model, solve_ulrich_chern(n, r), kM),
                                      "chi(O_Z(m)) from the resolution of the ideal of Z, r = " + std::to_string(r));
                     }});
    }
  }
}

void add_cases(std::vector<Check>& out) {
  using Field = MultiPoly IntersectionTable::*;
  const std::vector<std::pair<const char*, Field>> threefold{
      {"chi0", &IntersectionTable::chi0},        {"chi1", &IntersectionTable::chi1},
      {"chi2", &IntersectionTable::chi2},        {"kh2", &IntersectionTable::kz_hz2},
      {"k2h_plus_hc2", &IntersectionTable::kz2_hz_plus_hz_c2z},
      {"hc2", &IntersectionTable::hz_c2z},       {"k2h", &IntersectionTable::kz2_hz},
      {"kc2", &IntersectionTable::kz_c2z}};
  const std::vector<std::pair<const char*, Field>> surface{{"chi0", &IntersectionTable::chi0},
                                                           {"chi1", &IntersectionTable::chi1},
                                                           {"kh", &IntersectionTable::kz_hz},
                                                           {"k2", &IntersectionTable::kz2},
                                                           {"c2", &IntersectionTable::c2_z}};
  for (const auto& [n, r] : kCases) {
    const std::string prefix = case_prefix(n, r);
    const CaseKey key{n, r};
    out.push_back({prefix, [=](Context& ctx) {
                     const CaseReport& rep = ctx.report(n, r);
                     const std::vector<MultiPoly> factors = parse_factor_list(ctx.raw(prefix + ".factors"));
                     MultiPoly product(1);
                     std::vector<std::string> factor_text;
                     for (const MultiPoly& f : factors) {
                       product = product * f;
                       factor_text.push_back(to_text(f));
                     }
                     // The published product fixes the difference up to a constant.
                     Rational cofactor = 0;
                     if (!rep.difference.is_zero()) {
                       const FactorDivision division = divide_by_stated_factors(rep.difference, factors);
                       if (division.exact && division.quotient.is_constant()) cofactor = division.quotient.constant_term();
                     }
                     if (cofactor != 0) product *= cofactor;
                     std::vector<std::string> roots;
                     for (long x : rep.integer_roots) roots.push_back(std::to_string(x));
                     std::string detail = "stated factors: " + join(factor_text, "; ") + "; cofactor " +
                                          (cofactor != 0 ? rational_text(cofactor) : "none (not exact)") +
                                          "; difference scale " + rational_text(rep.difference_scale) +
                                          "; integer roots " + (roots.empty() ? "none" : join(roots, ", "));
                     return compare(prefix, product, rep.difference, std::move(detail));
                   },
                   key});
    out.push_back({prefix + ".roots", [=](Context& ctx) {
                     const CaseReport& rep = ctx.report(n, r);
                     const std::string bound = rep.difference.is_zero() ? "-" : rational_text(cauchy_bound(rep.difference));
                     return compare(prefix + ".roots", MultiPoly(0),
                                    MultiPoly(static_cast<long>(rep.roots_ge_3.size())),
                                    "integer roots d >= 3 of the difference, searched up to the Cauchy bound " + bound);
                   },
                   key});
    for (const auto& [name, field] : (n + 1 - r == 3 ? threefold : surface)) {
      const std::string id = prefix + "." + name;
      const Field f = field;
      out.push_back({id, [=](Context& ctx) {
                       return compare(id, ctx.golden(id), ctx.report(n, r).table.*f, "intersection data of Z");
                     },
                     key});
    }
  }
}

void add_dgr(std::vector<Check>& out) {
  for (const auto& [r, threshold] : {std::pair{6, 4}, std::pair{7, 6}}) {
    for (int d = 3; d <= 10; ++d) {
      const std::string id = "dgr.8." + std::to_string(r) + "." + std::to_string(d);
      out.push_back({id, [=](Context&) {
                       return compare(id, MultiPoly(d >= threshold ? 1 : 0), MultiPoly(check_dgr(8, r, d) ? 1 : 0),
                                      "binomial inequality for n = 8, r = " + std::to_string(r) + ", d = " +
                                          std::to_string(d) + " (1 = holds)");
                     }});
    }
  }
}

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = [] {
    std::vector<Check> out;
    add_xn(out);
    add_xne(out);
    add_exterior(out);
    add_todd_and_character(out);
    add_riemann_roch(out);
    add_appendix_chi(out);
    add_locus(out);
    add_cases(out);
    add_dgr(out);
    return out;
  }();
  return checks;
}

}  // namespace

const std::vector<std::string>& registry_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out{"xn"};
    for (int k = 1; k <= 10; ++k) out.push_back("xne." + std::to_string(k));
    for (int rank = 4; rank <= 7; ++rank) {
      for (int k = 1; k <= (rank <= 5 ? 6 : 16); ++k) out.push_back("w" + std::to_string(rank) + "." + std::to_string(k));
    }
    for (const char* id : {"td", "ch", "rr6", "rr10", "chiw24", "chiw25", "suz4.1", "suz5.1", "suz5.2", "suz6.1",
                           "suz6.2", "suz6.3", "suz7.1", "suz7.2", "suz7.3", "suz7.4", "x6z", "x8z"}) {
      out.emplace_back(id);
    }
    for (const auto& [n, r] : kCases) out.push_back(case_prefix(n, r));
    out.emplace_back("dgr");
    return out;
  }();
  return ids;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> out;
  for (const Check& c : all_checks()) out.push_back(c.id);
  return out;
}

bool selector_matches(std::string_view selector, std::string_view id) {
  if (selector == "all") return true;
  if (!id.starts_with(selector)) return false;
  return id.size() == selector.size() || id[selector.size()] == '.';
}

std::vector<CheckResult> run_checks(std::string_view selector, const GoldenOverrides& overrides) {
  std::vector<const Check*> selected;
  for (const Check& c : all_checks()) {
    if (selector_matches(selector, c.id)) selected.push_back(&c);
  }
  if (selected.empty()) throw UnknownCheck("unknown check id '" + std::string(selector) + "'");

  Context ctx(overrides);
  std::vector<CaseKey> cases;
  for (const Check* c : selected) {
    if (c->case_key && std::find(cases.begin(), cases.end(), *c->case_key) == cases.end()) cases.push_back(*c->case_key);
  }
  ctx.prefetch(cases);

  std::vector<CheckResult> out;
  out.reserve(selected.size());
  for (const Check* c : selected) out.push_back(c->run(ctx));
  return out;
}

}  // namespace ulrichcalc
