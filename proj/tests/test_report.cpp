#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "supercong/cli.hpp"
#include "supercong/congruences.hpp"
#include "supercong/errors.hpp"
#include "supercong/report.hpp"
#include "supercong/runner.hpp"

using namespace supercong;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  args.insert(args.begin(), "supercong");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("report") {
  TEST_CASE("empty run") {
    RunReport r;
    r.subcommand = "identities";
    const auto j = nlohmann::json::parse(emit_report(r, Format::Json));
    CHECK(j["checks"].empty());
    CHECK(j["summary"]["pass"] == 0);
    CHECK(j["summary"]["fail"] == 0);
    CHECK(j["summary"]["skipped"] == 0);
    CHECK_FALSE(j.contains("timestamp"));
    CHECK(r.exit_code() == 0);
  }

  TEST_CASE("CSV round trip") {
    RunReport r;
    r.checks.push_back(corollary_check(3, 3));
    CheckReport odd = skipped("identity.X", "comma, \"quote\"\nnewline");
    odd.n = 4;
    odd.lambda = "1/2";
    r.checks.push_back(odd);
    const std::string text = emit_report(r, Format::Csv);
    CHECK(text.rfind("family,p,n,lambda,modulus,lhs,rhs,status,note\r\n", 0) == 0);
    const auto back = parse_csv(text);
    REQUIRE(back.size() == 2);
    CHECK(back[0].p == std::optional<std::uint64_t>(3));
    CHECK(back[0].lhs == "26");
    // informational is outside the tabular columns
    for (std::size_t i = 0; i < back.size(); ++i) {
      CheckReport expected = r.checks[i];
      expected.informational = false;
      CHECK(back[i] == expected);
    }
    CHECK_THROWS_AS(parse_csv("bad,header\r\n"), ConfigError);
  }

  TEST_CASE("summary counts and exit code") {
    RunReport r;
    CheckReport fail = corollary_check(3, 3);
    fail.status = Status::Fail;
    CheckReport info = fail;
    info.informational = true;
    r.checks = {corollary_check(5, 3), info, skipped("x", "y")};
    CHECK(r.exit_code() == 0);
    CHECK(r.summary().informational_fail == 1);
    r.checks.push_back(fail);
    CHECK(r.exit_code() == 1);
    CHECK(r.summary().fail == 1);
    CHECK(r.summary().pass == 1);
    CHECK(r.summary().skipped == 1);
  }

  TEST_CASE("run_tasks keeps task order") {
    std::vector<Task> tasks;
    for (int i = 0; i < 20; ++i) {
      tasks.push_back([i] { return std::vector<CheckReport>{skipped(std::to_string(i), "")}; });
    }
    const auto rows = run_tasks(tasks, 4);
    REQUIRE(rows.size() == 20);
    for (int i = 0; i < 20; ++i) CHECK(rows[static_cast<std::size_t>(i)].family == std::to_string(i));
    tasks.push_back([]() -> std::vector<CheckReport> { throw PreconditionError("boom"); });
    CHECK_THROWS_AS(run_tasks(tasks, 3), PreconditionError);
  }
}

TEST_SUITE("cli") {
  TEST_CASE("corollary at p = 3") {
    const auto r = cli({"corollary", "--max-prime", "3", "--mod-power", "3", "--no-timestamp"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["checks"].size() == 1);
    CHECK(j["checks"][0]["lhs"] == "26");
    CHECK(j["checks"][0]["rhs"] == "26");
    CHECK(j["checks"][0]["status"] == "PASS");
    CHECK(j["subcommand"] == "corollary");
  }

  TEST_CASE("theorem single point") {
    const auto r = cli({"theorem", "--max-prime", "3", "--n", "1", "--lambda", "1", "--format", "csv",
                        "--no-timestamp"});
    CHECK(r.code == 0);
    CHECK(r.out == "family,p,n,lambda,modulus,lhs,rhs,status,note\r\n"
                   "theorem,3,1,1,3^3,26,26,PASS,binomial forms with D\r\n");
  }

  TEST_CASE("configuration errors exit with 2") {
    CHECK(cli({"theorem", "--max-prime", "100"}).code == 2);
    CHECK(cli({"corollary", "--format", "xml"}).code == 2);
    CHECK(cli({"corollary", "--mod-power", "9"}).code == 2);
    CHECK(cli({"corollary", "--jobs", "0"}).code == 2);
    CHECK(cli({"theorem", "--lambda", "x"}).code == 2);
    CHECK(cli({"identities", "--ids", "NOPE"}).code == 2);
    CHECK(cli({"frobnicate"}).code == 2);
    CHECK(cli({}).code == 2);
  }

  TEST_CASE("timestamp flag") {
    const auto with = cli({"corollary", "--max-prime", "5"});
    const auto j = nlohmann::json::parse(with.out);
    CHECK(j.contains("timestamp"));
    CHECK(j.contains("wall_time_ms"));
    const auto a = cli({"corollary", "--max-prime", "50", "--no-timestamp"});
    const auto b = cli({"corollary", "--max-prime", "50", "--no-timestamp", "--jobs", "3"});
    CHECK(a.out == b.out);
  }

  TEST_CASE("informational rows do not affect the exit code") {
    const auto r = cli({"identities", "--ids", "REC_FINAL", "--max-n", "10", "--no-timestamp"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["summary"]["informational_fail"] == 1);
  }

  TEST_CASE("lemmas skip the harmonic lemma below 7") {
    const auto r = cli({"lemmas", "--max-prime", "5", "--n", "1", "--format", "csv", "--no-timestamp"});
    CHECK(r.code == 0);
    CHECK(r.out.find("lemma_har,3,1,,,,,SKIPPED") != std::string::npos);
  }

  TEST_CASE("output file") {
    const std::string path = "supercong_cli_test_out.json";
    const auto r = cli({"corollary", "--max-prime", "7", "--no-timestamp", "--out", path});
    CHECK(r.code == 0);
    CHECK(r.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(nlohmann::json::parse(ss.str())["checks"].size() == 6);
    std::remove(path.c_str());
  }
}
