#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ulrichcalc");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = ulrichcalc::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("verify all as json: every entry passes and the document round-trips") {
  const Outcome o = run({"verify", "all", "--format", "json"});
  REQUIRE(o.code == 0);
  REQUIRE(!o.out.empty());
  CHECK(o.out.back() == '\n');
  const auto doc = nlohmann::ordered_json::parse(o.out);
  CHECK(doc.dump(2) + "\n" == o.out);
  CHECK(doc.at("tool_version").is_string());
  CHECK(doc.at("timestamp").get<std::string>().size() == 20);
  const auto& entries = doc.at("entries");
  CHECK(entries.size() >= 60);
  std::set<std::string> ids;
  for (const auto& e : entries) {
    CHECK(e.at("status") == "pass");
    CHECK(e.at("expected") == e.at("actual"));
    CHECK(e.at("detail").is_string());
    ids.insert(e.at("id").get<std::string>());
  }
  CHECK(ids.size() == entries.size());
}

TEST_CASE("verify lemma selects a single closed form") {
  const Outcome o = run({"verify", "lemma", "w7.9"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "PASS w7.9"));
  CHECK(contains(o.out, "expected 15*c1"));
  CHECK(contains(o.out, "1 checks, 1 passed, 0 failed"));
}

TEST_CASE("verify case prints the stated factors") {
  const Outcome o = run({"verify", "case", "--n", "6", "--r", "5"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "PASS case.6.5\n"));
  CHECK(contains(o.out, "61*d^2 - 13"));
  CHECK(contains(o.out, "cofactor 1"));
  CHECK_FALSE(contains(o.out, "case.6.4"));
}

TEST_CASE("usage errors exit with 2") {
  SUBCASE("unknown id lists the registry") {
    const Outcome o = run({"verify", "lemma", "w9.1"});
    CHECK(o.code == 2);
    CHECK(o.out.empty());
    CHECK(contains(o.err, "  xne.10\n"));
    CHECK(contains(o.err, "  case.8.7\n"));
    CHECK(contains(o.err, "  dgr\n"));
  }
  SUBCASE("unsupported case") { CHECK(run({"verify", "case", "--n", "7", "--r", "4"}).code == 2); }
  SUBCASE("bad format") { CHECK(run({"verify", "all", "--format", "xml"}).code == 2); }
  SUBCASE("missing subcommand") { CHECK(run({}).code == 2); }
  SUBCASE("missing option") { CHECK(run({"chern", "ulrich", "--n", "6"}).code == 2); }
  SUBCASE("rank too large") { CHECK(run({"chern", "lambda", "--rank", "8", "--power", "2"}).code == 2); }
  SUBCASE("negative power") { CHECK(run({"chern", "lambda", "--rank", "3", "--power", "-1"}).code == 2); }
  SUBCASE("degree too large") {
    CHECK(run({"chern", "lambda", "--rank", "3", "--power", "1", "--max-degree", "9"}).code == 2);
  }
  SUBCASE("dimension out of range") { CHECK(run({"chern", "ulrich", "--n", "9", "--r", "4"}).code == 2); }
  SUBCASE("rank out of range") { CHECK(run({"chern", "ulrich", "--n", "6", "--r", "8"}).code == 2); }
  SUBCASE("override of an unknown closed form") {
    CHECK(run({"verify", "all", "--golden-override", "w9.1=c1"}).code == 2);
  }
  SUBCASE("malformed override") { CHECK(run({"verify", "all", "--golden-override", "w4.3"}).code == 2); }
  SUBCASE("unparsable override text") {
    CHECK(run({"verify", "lemma", "w4.3", "--golden-override", "w4.3=c1+*"}).code == 2);
  }
}

TEST_CASE("help exits with 0") {
  const Outcome o = run({"--help"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "verify"));
  CHECK(contains(o.out, "chern"));
}

TEST_CASE("an overridden closed form fails exactly one entry with exit 1") {
  const Outcome o = run({"verify", "all", "--format", "json", "--golden-override", "w5.2=c1^2"});
  CHECK(o.code == 1);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  std::vector<std::string> failed;
  for (const auto& e : doc.at("entries")) {
    if (e.at("status") == "fail") failed.push_back(e.at("id").get<std::string>());
  }
  REQUIRE(failed.size() == 1);
  CHECK(failed[0] == "w5.2");
}

TEST_CASE("chern lambda prints exterior power classes") {
  const Outcome o = run({"chern", "lambda", "--rank", "4", "--power", "2", "--max-degree", "4"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "rank = 6\n"));
  CHECK(contains(o.out, "c1 = 3*c1\n"));
  CHECK(contains(o.out, "c4 = 2*c1^2*c2 + c2^2 + c1*c3 - 4*c4\n"));
}

TEST_CASE("chern lambda of power zero is the trivial line bundle") {
  const Outcome o = run({"chern", "lambda", "--rank", "4", "--power", "0", "--format", "json"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  CHECK(doc.at("exterior_rank") == 1);
  for (const auto& [name, value] : doc.at("classes").items()) CHECK(value == "0");
}

TEST_CASE("chern lambda above the rank is the zero bundle") {
  const Outcome o = run({"chern", "lambda", "--rank", "3", "--power", "4"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "rank = 0\n"));
}

TEST_CASE("chern ulrich prints factored classes and flags fractional values") {
  const Outcome o = run({"chern", "ulrich", "--n", "8", "--r", "6"});
  CHECK(o.code == 0);
  CHECK(contains(o.out, "e1 = 3*(d - 1)\n"));
  CHECK(contains(o.out, "e5 = (1/40)*(12*d^5 - 52*d^4 + 85*d^3 - 65*d^2 + 23*d - 3)\n"));
  CHECK(contains(o.out, "e7 = 0\n"));
  CHECK(contains(o.err, "warning: e2 is not an integer at d = 4"));
  CHECK_FALSE(contains(o.err, "warning: e1 "));
  CHECK_FALSE(contains(o.err, "warning: e3 "));
}

TEST_CASE("chern ulrich json round-trips") {
  const Outcome o = run({"chern", "ulrich", "--n", "6", "--r", "4", "--format", "json"});
  CHECK(o.code == 0);
  const auto doc = nlohmann::ordered_json::parse(o.out);
  CHECK(doc.dump(2) + "\n" == o.out);
  CHECK(doc.at("classes").size() == 6);
}

TEST_CASE("repeated runs give identical entries") {
  const auto strip = [](const std::string& json) {
    auto doc = nlohmann::ordered_json::parse(json);
    doc.erase("timestamp");
    return doc.dump();
  };
  CHECK(strip(run({"verify", "lemma", "suz6", "--format", "json"}).out) ==
        strip(run({"verify", "lemma", "suz6", "--format", "json"}).out));
}
