#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "splitbound/cli.hpp"
#include "splitbound/error.hpp"
#include "splitbound/record.hpp"

using namespace splitbound::cli;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string output(const OutputRecord& rec, const std::string& key) {
  for (const auto& [k, v] : rec.outputs) {
    if (k == key) return v;
  }
  FAIL("missing output " << key);
  return {};
}

OutputRecord structured(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  auto r = invoke(args);
  REQUIRE_MESSAGE(r.code == 0, r.err);
  return parse_structured(r.out);
}

}  // namespace

TEST_CASE("bound prime-power reports 90 = 9 * 10") {
  auto rec = structured({"bound", "prime-power", "--p", "3", "--k", "1", "--n", "1"});
  CHECK(rec.command == "bound prime-power");
  CHECK(output(rec, "total") == "90");
  CHECK(output(rec, "p_part") == "9");
  CHECK(output(rec, "cofactor_m") == "10");
}

TEST_CASE("segre-degree reports both routes") {
  auto rec = structured({"segre-degree", "--shape", "2,2"});
  CHECK(output(rec, "expansion") == "2");
  CHECK(output(rec, "closed_form") == "2");
  CHECK(output(rec, "agree") == "true");
}

TEST_CASE("every subcommand runs") {
  const std::vector<std::vector<std::string>> commands{
      {"vp", "--p", "3", "--n", "18"},
      {"vp-factorial", "--p", "3", "--n", "9"},
      {"vp-factorial", "--p", "3", "--n", "2", "--method", "prime-power"},
      {"vp-factorial", "--p", "3", "--n", "2", "--k", "2", "--method", "k-times-prime-power"},
      {"vp-factorial", "--p", "3", "--n", "1", "--k", "2", "--method", "misc"},
      {"multinomial", "--top", "6", "--parts", "2,2,2"},
      {"bound", "general", "--shape", "3,3,3", "--index", "3", "--period", "3"},
      {"bound", "baseline", "--points", "2:1,2:1"},
      {"bound", "improvement", "--p", "3", "--k", "2", "--n", "1"},
      {"cofactor-m", "--p", "3", "--k", "1", "--n", "2"},
      {"karpenko-bound", "--p", "3", "--n", "2", "--codim", "3"},
      {"corestriction-cert", "--p", "3", "--r", "1"},
      {"proof-inequalities", "--p", "5", "--r", "1"},
      {"auxiliary-inequalities", "--p", "2", "--r", "1"},
      {"index-reduction", "--p", "3", "--target", "1,1,2", "--fiber", "1,1,1", "--d", "2"},
      {"prop1", "--p", "3"},
      {"prop1-table", "--p", "3"},
      {"prop2", "--p", "5", "--d", "2", "--n", "3"},
      {"verify", "--suite", "paper-regressions"},
  };
  for (const auto& args : commands) {
    auto r = invoke(args);
    CAPTURE(args[0]);
    CHECK_MESSAGE(r.code == 0, r.err);
    CHECK(r.out.find("command: ") == 0);
  }
}

TEST_CASE("selected values through the CLI") {
  CHECK(output(structured({"multinomial", "--top", "6", "--parts", "2,2,2"}), "value") == "90");
  CHECK(output(structured({"multinomial", "--top", "0"}), "value") == "1");
  CHECK(output(structured({"bound", "baseline", "--points", "3:3"}), "total") == "27");
  CHECK(output(structured({"karpenko-bound", "--p", "3", "--n", "3", "--codim", "20"}), "lower_bound") == "3");
  CHECK(output(structured({"index-reduction", "--p", "5", "--target", "1,2,3", "--fiber", "1,1,1", "--d", "2"}),
               "index_after") == "125");
  CHECK(output(structured({"prop1", "--p", "5"}), "index_of_A'_over_F") == "3125");
  CHECK(output(structured({"vp-factorial", "--p", "5", "--n", "3", "--method", "prime-power"}), "oracle") == "31");
  auto big = structured({"cofactor-m", "--p", "5", "--k", "1", "--n", "1"});
  CHECK(output(big, "m") == "488864376");
}

TEST_CASE("big integers print in full decimal") {
  auto rec = structured({"bound", "improvement", "--p", "13", "--k", "3", "--n", "2"});
  const std::string baseline = output(rec, "baseline");
  CHECK(baseline.size() > 100);
  CHECK(baseline.find_first_not_of("0123456789") == std::string::npos);
}

TEST_CASE("--vp annotates numeric outputs") {
  auto rec = structured({"bound", "prime-power", "--p", "3", "--k", "1", "--n", "1", "--vp"});
  CHECK(output(rec, "v3(total)") == "2");
  CHECK(output(rec, "v3(cofactor_m)") == "0");
  auto other = structured({"segre-degree", "--shape", "3,3,3", "--vp", "5"});
  CHECK(output(other, "v5(expansion)") == "1");
  CHECK(invoke({"segre-degree", "--shape", "2,2", "--vp"}).code == kUsageError);
  CHECK(invoke({"segre-degree", "--shape", "2,2", "--vp", "4"}).code == kDomainError);
}

TEST_CASE("structured output round-trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"prop1-table", "--p", "3", "--format", "json"},
           {"bound", "general", "--shape", "6,4", "--index", "6", "--period", "3", "--format", "json-like-stable-schema"},
           {"corestriction-cert", "--p", "5", "--r", "1", "--format", "json"}}) {
    auto r = invoke(args);
    REQUIRE(r.code == 0);
    CHECK(render_structured(parse_structured(r.out)) == r.out);
    CHECK(r.out == invoke(args).out);
  }
}

TEST_CASE("structured record parser rejects malformed input") {
  CHECK_THROWS_AS(parse_structured("not json"), splitbound::DomainError);
  CHECK_THROWS_AS(parse_structured("{\"command\": \"x\"}"), splitbound::DomainError);
  CHECK_THROWS_AS(parse_structured(R"({"command":"x","inputs":{"a":1},"outputs":{},"provenance":[]})"),
                  splitbound::DomainError);
}

TEST_CASE("text rendering aligns keys") {
  OutputRecord rec{"demo", {{"p", "3"}}, {{"a", "1"}, {"longer", "2"}}, {"note"}};
  CHECK(render_text(rec) ==
        "command: demo\ninputs:\n  p  3\noutputs:\n  a       1\n  longer  2\nprovenance:\n  - note\n");
}

TEST_CASE("exit codes") {
  auto unknown = invoke({"frobnicate"});
  CHECK(unknown.code == kUsageError);
  CHECK(unknown.err.find("Usage") != std::string::npos);
  CHECK(invoke({}).code == kUsageError);
  CHECK(invoke({"vp", "--p", "3"}).code == kUsageError);
  CHECK(invoke({"vp", "--p", "3", "--n", "abc"}).code == kUsageError);
  CHECK(invoke({"vp", "--p", "3", "--n", "1", "--bogus"}).code == kUsageError);
  CHECK(invoke({"vp", "--p", "4", "--n", "8"}).code == kDomainError);
  CHECK(invoke({"vp", "--p", "3", "--n", "0"}).code == kDomainError);
  CHECK(invoke({"corestriction-cert", "--p", "2", "--r", "1"}).code == kDomainError);
  CHECK(invoke({"prop2", "--p", "5", "--d", "3", "--n", "3"}).code == kDomainError);
  CHECK(invoke({"bound", "general", "--shape", "2,2", "--index", "4", "--period", "3"}).code == kDomainError);
  CHECK(invoke({"verify"}).code == kUsageError);
  CHECK(invoke({"verify", "--suite", "nope"}).code == kDomainError);
  CHECK(invoke({"--help"}).code == kSuccess);
}

TEST_CASE("karpenko budget from the environment") {
  ::setenv(kBudgetVariable, "100", 1);
  CHECK(invoke({"corestriction-cert", "--p", "3", "--r", "2"}).code == kDomainError);
  auto failing = invoke({"verify", "--suite", "corestriction-certificates"});
  CHECK(failing.code == kConsistencyError);
  CHECK(failing.out.find("FAIL") != std::string::npos);
  ::setenv(kBudgetVariable, "junk", 1);
  CHECK(invoke({"vp", "--p", "3", "--n", "9"}).code == kUsageError);
  ::unsetenv(kBudgetVariable);
  CHECK(invoke({"corestriction-cert", "--p", "3", "--r", "2"}).code == kSuccess);
}
