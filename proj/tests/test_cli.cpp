#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(WINFTY_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return RunResult{WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("weights: measured and closed-form columns agree") {
  const auto r = run("weights --N 1 --lambda-alpha 0 --lambda-beta -1 --max-k 4");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  CHECK(j["config"]["N"] == 1);
  bool saw_hw0 = false;
  for (const auto& row : j["results"]) {
    CHECK(row["status"] == "pass");
    if (row["id"] == "hw.k0") {
      saw_hw0 = true;
      CHECK(row["detail"]["measured"] == "-1");
      CHECK(row["detail"]["closed_form"] == "-1");
    }
  }
  CHECK(saw_hw0);
}

TEST_CASE("weights: zero lambda gives an all-zero table") {
  const auto r = run("weights --N 2 --max-k 3");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  for (const auto& row : j["results"]) {
    const std::string id = row["id"];
    if (id.rfind("hw.k", 0) == 0) CHECK(row["detail"]["measured"] == "0");
  }
}

TEST_CASE("delta: both series paths and the decomposition") {
  const auto r = run("delta --N 1 --lambda-alpha 0 --lambda-beta -1 --order 6");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  for (const auto& row : j["results"]) {
    CHECK(row["status"] == "pass");
    if (row["id"] == "main.gener") {
      CHECK(row["detail"]["delta_by_eigenvalue_sum"] == row["detail"]["delta_closed_form"]);
      CHECK(row["detail"]["delta_closed_form"][0] == "-1");
    }
    if (row["id"] == "main.quasifinite") {
      CHECK(row["detail"]["multiplicity_sum_at_zero"] == "-1");
      CHECK(row["detail"]["terms"].size() == 1);
      CHECK(row["detail"]["terms"][0]["exponent"] == "1");
    }
  }
}

TEST_CASE("bracket-table: central row and self-brackets") {
  const auto r = run("bracket-table --N 1 --max-k 1 --trunc-degree 2");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.output);
  bool saw_central = false, saw_self = false;
  for (const auto& row : j["results"]) {
    CHECK(row["detail"]["realization_agrees"] == true);
    if (row["id"] == "bracket.a0.b0.mp1.nm1") {
      saw_central = true;
      CHECK(row["detail"]["central"] == "-1");
      CHECK(row["detail"]["terms"].empty());
    }
    if (row["id"] == "bracket.a0.b0.mp1.np2") {
      saw_self = true;
      CHECK(row["detail"]["central"] == "0");
      CHECK(row["detail"]["terms"].empty());
    }
  }
  CHECK(saw_central);
  CHECK(saw_self);
}

TEST_CASE("config errors exit with code 2") {
  CHECK(run("weights --N 2 --lambda-alpha 1 --lambda-beta 0,0").exit_code == 2);
  CHECK(run("delta --N 0").exit_code == 2);
  CHECK(run("nonsense").exit_code == 2);
  CHECK(run("weights --format yaml").exit_code == 2);
}

TEST_CASE("deterministic byte-identical output for a fixed seed") {
  const std::string args = "delta --N 2 --lambda-alpha 1/2,-1 --lambda-beta 0,2/3 --order 8 --seed 42";
  const auto r1 = run(args), r2 = run(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK_FALSE(r1.output.empty());
}

TEST_CASE("tsv format") {
  const auto r = run("delta --N 1 --lambda-alpha 1 --lambda-beta 0 --order 4 --format tsv");
  CHECK(r.exit_code == 0);
  CHECK(r.output.rfind("id\tstatus\tdetail", 0) == 0);
}
