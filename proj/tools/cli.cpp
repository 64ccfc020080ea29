#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <ctime>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ulrichcalc/charcls.hpp"
#include "ulrichcalc/golden.hpp"
#include "ulrichcalc/pipeline.hpp"
#include "ulrichcalc/registry.hpp"
#include "ulrichcalc/symmetric.hpp"
#include "ulrichcalc/ulrich.hpp"

#ifndef ULRICHCALC_VERSION
#define ULRICHCALC_VERSION "0.0.0"
#endif

namespace ulrichcalc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::vector<std::string> overrides;
  int n = 0;
  int r = 0;
  std::string lemma;
  int rank = 0;
  int power = 0;
  int max_degree = 0;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_json(std::ostream& out, const Json& doc) { out << doc.dump(2) << '\n'; }

GoldenOverrides parse_overrides(const std::vector<std::string>& items) {
  GoldenOverrides out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--golden-override expects ID=TEXT, got '" + item + "'");
    std::string id = item.substr(0, eq);
    try {
      golden_text(id);
    } catch (const Error&) {
      throw UsageError("--golden-override names no stored closed form: '" + id + "'");
    }
    out.insert_or_assign(std::move(id), item.substr(eq + 1));
  }
  return out;
}

std::string list_registry() {
  std::string out;
  for (const std::string& id : registry_ids()) out += "  " + id + '\n';
  return out;
}

int report(const std::vector<CheckResult>& results, const Options& opt, std::ostream& out) {
  int failed = 0;
  for (const CheckResult& r : results) failed += r.pass ? 0 : 1;
  if (opt.format == "json") {
    Json entries = Json::array();
    for (const CheckResult& r : results) {
      entries.push_back(Json{{"id", r.id},
                             {"status", r.pass ? "pass" : "fail"},
                             {"expected", r.expected},
                             {"actual", r.actual},
                             {"detail", r.detail}});
    }
    write_json(out, Json{{"tool_version", ULRICHCALC_VERSION}, {"timestamp", utc_timestamp()}, {"entries", entries}});
  } else {
    for (const CheckResult& r : results) {
      out << (r.pass ? "PASS " : "FAIL ") << r.id << '\n';
      out << "     expected " << r.expected << '\n';
      if (!r.pass) out << "     actual   " << r.actual << '\n';
      if (!r.detail.empty()) out << "     " << r.detail << '\n';
    }
    out << results.size() << " checks, " << results.size() - static_cast<std::size_t>(failed) << " passed, " << failed
        << " failed\n";
  }
  return failed == 0 ? 0 : 1;
}

int verify(const std::string& selector, const Options& opt, std::ostream& out, std::ostream& err) {
  const GoldenOverrides overrides = parse_overrides(opt.overrides);
  try {
    return report(run_checks(selector, overrides), opt, out);
  } catch (const UnknownCheck&) {
    err << "unknown check id '" << selector << "'; known ids:\n" << list_registry();
    return 2;
  }
}

int verify_case(const Options& opt, std::ostream& out, std::ostream& err) {
  for (const auto& [n, r] : kCases) {
    if (n == opt.n && r == opt.r) return verify("case." + std::to_string(n) + "." + std::to_string(r), opt, out, err);
  }
  err << "no case for n=" << opt.n << ", r=" << opt.r << "; supported:";
  for (const auto& [n, r] : kCases) err << " (" << n << "," << r << ")";
  err << '\n';
  return 2;
}

int chern_lambda(const Options& opt, std::ostream& out) {
  if (opt.rank < 1 || opt.rank > kMaxExteriorRank) {
    throw UsageError("--rank must lie in 1.." + std::to_string(kMaxExteriorRank));
  }
  if (opt.power < 0) throw UsageError("--power must be nonnegative");
  const long exterior_rank =
      opt.power > opt.rank ? 0 : binomial(static_cast<unsigned long>(opt.rank), static_cast<unsigned long>(opt.power)).get_si();
  const int max_degree = opt.max_degree > 0 ? opt.max_degree : static_cast<int>(std::min<long>(std::max(exterior_rank, 1L), kMaxClassIndex));
  if (max_degree < 1 || max_degree > kMaxClassIndex) {
    throw UsageError("--max-degree must lie in 1.." + std::to_string(kMaxClassIndex));
  }
  const std::vector<MultiPoly>& formula = exterior_power_formula(opt.rank, opt.power, max_degree);
  std::map<Symbol, MultiPoly> as_c;
  for (int i = 1; i <= opt.rank; ++i) as_c.emplace(Symbol::f(i), var(Symbol::c(i)));
  std::vector<std::string> classes;
  for (int k = 1; k <= max_degree; ++k) {
    const MultiPoly ck = opt.power > opt.rank ? MultiPoly() : substitute(formula[static_cast<std::size_t>(k)], as_c);
    classes.push_back(to_text(ck));
  }
  if (opt.format == "json") {
    Json cs = Json::object();
    for (std::size_t k = 0; k < classes.size(); ++k) cs["c" + std::to_string(k + 1)] = classes[k];
    write_json(out, Json{{"rank", opt.rank}, {"power", opt.power}, {"exterior_rank", exterior_rank}, {"classes", cs}});
  } else {
    out << "Lambda^" << opt.power << " of a rank " << opt.rank << " bundle with classes c1..c" << opt.rank << '\n';
    out << "rank = " << exterior_rank << '\n';
    for (std::size_t k = 0; k < classes.size(); ++k) out << "c" << k + 1 << " = " << classes[k] << '\n';
  }
  return 0;
}

// First d >= 3 where p(d) is not an integer, if any. A polynomial of degree k
// is integer-valued on all integers iff it is on k + 1 consecutive ones.
std::optional<int> first_fractional_value(const MultiPoly& p) {
  const int deg = static_cast<int>(p.degree_in(Symbol::d().index()));
  for (int d = 3; d <= 3 + deg; ++d) {
    if (evaluate(p, {{Symbol::d(), Rational(d)}}).get_den() != 1) return d;
  }
  return std::nullopt;
}

int chern_ulrich(const Options& opt, std::ostream& out, std::ostream& err) {
  const UlrichClassSolution& sol = solve_ulrich_chern(opt.n, opt.r);
  std::vector<std::string> classes;
  for (int i = 1; i <= opt.n; ++i) {
    const MultiPoly& e = sol.e_at(i);
    classes.push_back(to_factored_text(e));
    if (auto d = first_fractional_value(e)) {
      err << "warning: e" << i << " is not an integer at d = " << *d << '\n';
    }
  }
  if (opt.format == "json") {
    Json cs = Json::object();
    for (std::size_t i = 0; i < classes.size(); ++i) cs["e" + std::to_string(i + 1)] = classes[i];
    write_json(out, Json{{"n", opt.n}, {"r", opt.r}, {"classes", cs}});
  } else {
    out << "Chern classes of a rank " << opt.r << " Ulrich bundle on a degree d hypersurface of dimension " << opt.n
        << ", as multiples of H^i\n";
    for (std::size_t i = 0; i < classes.size(); ++i) out << "e" << i + 1 << " = " << classes[i] << '\n';
    if (opt.n > opt.r) out << "classes above the rank must vanish on an actual bundle\n";
  }
  return 0;
}

void add_format(CLI::App* app, Options& opt) {
  app->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
}

void add_verify_flags(CLI::App* app, Options& opt) {
  add_format(app, opt);
  app->add_option("--golden-override", opt.overrides, "Replace a stored closed form, as ID=TEXT (repeatable)");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact Chern class and Euler characteristic verification for Ulrich bundles on hypersurfaces",
               "ulrichcalc"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ULRICHCALC_VERSION);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Run stored checks against the engine");
  verify_cmd->require_subcommand(1);
  CLI::App* verify_all = verify_cmd->add_subcommand("all", "Every check");
  CLI::App* verify_case_cmd = verify_cmd->add_subcommand("case", "One nonexistence case");
  verify_case_cmd->add_option("--n", opt.n, "Dimension")->required();
  verify_case_cmd->add_option("--r", opt.r, "Rank")->required();
  CLI::App* verify_lemma = verify_cmd->add_subcommand("lemma", "Checks under one id");
  verify_lemma->add_option("id", opt.lemma, "Check id or prefix")->required();
  for (CLI::App* sub : {verify_all, verify_case_cmd, verify_lemma}) add_verify_flags(sub, opt);

  CLI::App* chern_cmd = app.add_subcommand("chern", "Print symbolic Chern classes");
  chern_cmd->require_subcommand(1);
  CLI::App* lambda_cmd = chern_cmd->add_subcommand("lambda", "Chern classes of an exterior power");
  lambda_cmd->add_option("--rank", opt.rank, "Rank of the bundle")->required();
  lambda_cmd->add_option("--power", opt.power, "Exterior power")->required();
  lambda_cmd->add_option("--max-degree", opt.max_degree, "Highest class printed");
  CLI::App* ulrich_cmd = chern_cmd->add_subcommand("ulrich", "Chern classes forced on an Ulrich bundle");
  ulrich_cmd->add_option("--n", opt.n, "Dimension")->required();
  ulrich_cmd->add_option("--r", opt.r, "Rank")->required();
  for (CLI::App* sub : {lambda_cmd, ulrich_cmd}) add_format(sub, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << ULRICHCALC_VERSION << '\n';
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*verify_all) return verify("all", opt, out, err);
    if (*verify_case_cmd) return verify_case(opt, out, err);
    if (*verify_lemma) return verify(opt.lemma, opt, out, err);
    if (*lambda_cmd) return chern_lambda(opt, out);
    if (*ulrich_cmd) return chern_ulrich(opt, out, err);
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const UnsupportedCase& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const UnsupportedRank& e) {
    err << e.what() << '\n';
    return 2;
  } catch (const UnknownSymbol& e) {
    err << "bad golden override: " << e.what() << '\n';
    return 2;
  } catch (const ParseError& e) {
    err << "bad golden override: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ulrichcalc::cli
