#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cstdio>
#include <string>

#include "imprec/errors.hpp"

namespace {

using nlohmann::json;

struct CmdResult {
  int status = -1;
  std::string out;
};

CmdResult run_cli(const std::string& args) {
  const std::string cmd = std::string(IMPREC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CmdResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) result.out.append(buf, n);
  const int rc = pclose(pipe);
  result.status = WEXITSTATUS(rc);
  return result;
}

std::string program(const std::string& name) {
  return std::string(IMPREC_PROGRAMS_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("cli check reports type and grade") {
  const auto res = run_cli("check " + program("shared_urn.imp"));
  CHECK(res.status == 0);
  const json j = json::parse(res.out);
  CHECK(j["size"] == 3);
  CHECK(j["grade"] == json::array({{{"arity", 2}, {"name", "a1"}}}));
}

TEST_CASE("cli denote prints the graded matrix") {
  const auto res = run_cli("denote " + program("shared_urn.imp"));
  CHECK(res.status == 0);
  const json j = json::parse(res.out);
  CHECK(j["dom"] == 1);
  CHECK(j["cod"] == 3);
  CHECK(j["matrix"]["entries"] ==
        json::array({{"1", "0"}, {"0", "1/2"}, {"0", "1/2"}}));
}

TEST_CASE("cli credal prints the image and both powerset readings") {
  const auto one = run_cli("credal " + program("shared_urn.imp"));
  CHECK(one.status == 0);
  const json j1 = json::parse(one.out);
  CHECK(j1["phi"]["extremes"] ==
        json::array({{"0", "1/2", "1/2"}, {"1", "0", "0"}}));

  const auto two = run_cli("credal " + program("split_urns.imp"));
  const json j2 = json::parse(two.out);
  CHECK(j2["phi"]["extremes"].size() == 4);
  // the powerset reading conflates the two programs
  CHECK(j1["cp_left_first"] == j2["cp_left_first"]);
}

TEST_CASE("cli compare reports the strict inclusion for a shared urn") {
  const auto res =
      run_cli("compare " + program("coin.imp") + " " + program("branches_shared_urn.imp"));
  CHECK(res.status == 0);
  const json j = json::parse(res.out);
  CHECK(j["strict"] == true);
  CHECK(j["pointwise_subset"] == json::array({true}));
  CHECK(j["lhs"]["images"][0]["extremes"].size() == 2);
  CHECK(j["rhs"]["images"][0]["extremes"].size() == 4);

  // with decoupled urns nothing is lost and the inclusion is an equality
  const auto eq = run_cli("compare " + program("coin.imp") + " " + program("branch_urns.imp"));
  CHECK(eq.status == 0);
  const json je = json::parse(eq.out);
  CHECK(je["strict"] == false);
  CHECK(je["lhs"] == je["rhs"]);
}

TEST_CASE("cli laws and oracle suites pass") {
  const auto laws = run_cli("laws --seed 0 --count 20");
  CHECK(laws.status == 0);
  CHECK(json::parse(laws.out)["all_passed"] == true);

  const auto oplax = run_cli("oracle oplax --seed 1 --count 12");
  CHECK(oplax.status == 0);
  CHECK(json::parse(oplax.out)["all_passed"] == true);

  const auto kan = run_cli("oracle kan --seed 1 --count 10");
  CHECK(kan.status == 0);

  const auto faithful = run_cli("oracle faithful --seed 1 --count 10");
  CHECK(faithful.status == 0);
}

TEST_CASE("cli output is byte-stable") {
  const auto a = run_cli("credal " + program("split_urns.imp"));
  const auto b = run_cli("credal " + program("split_urns.imp"));
  CHECK(a.out == b.out);
  const auto l1 = run_cli("laws --seed 7 --count 5");
  const auto l2 = run_cli("laws --seed 7 --count 5");
  CHECK(l1.out == l2.out);
}

TEST_CASE("IMP_SEED overrides the flag") {
  const auto flagged = run_cli("laws --seed 3 --count 5");
  const auto env = run_cli("laws --seed 99 --count 5");
  CHECK(flagged.out != run_cli("laws --seed 4 --count 5").out);
  const auto forced = [&] {
    const std::string cmd =
        std::string("IMP_SEED=3 ") + IMPREC_CLI_PATH + " laws --seed 99 --count 5 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
  }();
  CHECK(forced == flagged.out);
}

TEST_CASE("cli plot writes an svg") {
  const std::string out_path = "/tmp/imprec_test_plot.svg";
  const auto res = run_cli("plot " + program("split_urns.imp") + " " + out_path);
  CHECK(res.status == 0);
  FILE* f = fopen(out_path.c_str(), "rb");
  REQUIRE(f != nullptr);
  std::string svg;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof(buf), f)) > 0) svg.append(buf, n);
  fclose(f);
  CHECK(svg.find("class=\"region\"") != std::string::npos);
  CHECK(svg.find("<polygon") != std::string::npos);
  std::remove(out_path.c_str());
}

TEST_CASE("cli reports structured errors") {
  const auto res = run_cli("denote " + program("branch_urns.imp"));
  CHECK(res.status == 1);
  CHECK(json::parse(res.out)["error"]["kind"] == "type");

  const auto missing = run_cli("denote /nonexistent.imp");
  CHECK(missing.status == 1);
  CHECK(json::parse(missing.out)["error"].contains("message"));
}
