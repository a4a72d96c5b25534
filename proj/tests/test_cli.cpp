#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>

#include "qgauss/errors.hpp"
#include "qgauss/scenario.hpp"

using nlohmann::json;
using namespace qgauss;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QGAUSS_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string scenario(const std::string& name) { return std::string(QGAUSS_SCENARIOS) + "/" + name; }

std::string write_temp(const std::string& name, const json& doc) {
  const auto path = std::filesystem::temp_directory_path() / ("qgauss_test_" + name);
  std::ofstream(path) << doc.dump();
  return path.string();
}

}  // namespace

TEST_CASE("moment on the pure scenario") {
  const Run r = run("moment --scenario " + scenario("pure_m4.json"));
  REQUIRE(r.code == 0);
  const json doc = json::parse(r.out);
  CHECK(doc["results"][0]["qpoly"] == json::array({"2", "1"}));
  CHECK(doc["results"][0]["evaluations"][0]["value"] == "5/2");
}

TEST_CASE("odd words have zero moment") {
  const json sc = {{"backend", {{"kind", "free_haar"}, {"window", 3}}},
                   {"fock", {{"dim", 1}}},
                   {"words", {{{{"vector", {"1"}}}, {{"vector", {"1"}}}, {{"vector", {"1"}}}}}}};
  const Run r = run("moment --scenario " + write_temp("odd.json", sc));
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["results"][0]["qpoly"] == json::array({"0"}));
}

TEST_CASE("window-deficient scenario exits 2 with the violated precondition") {
  const Run r = run("moment --scenario " + scenario("window_deficient.json"));
  CHECK(r.code == 2);
  CHECK(r.out.find("window < s+p") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  CHECK(run("moment --scenario /nonexistent/file.json").code == 2);
  CHECK(run("moment --scenario " + write_temp("bad.json", json{{"backend", {{"kind", "nope"}}}})).code == 2);
  CHECK(run("frobnicate").code == 2);
}

TEST_CASE("dims table carries the declared bounds") {
  const json sc = {{"backend", {{"kind", "free_haar"}, {"window", 5}}}, {"dims", {{"k_max", 2}, {"extra", 2}}}};
  const Run r = run("dims --format csv --scenario " + write_temp("dims_fh.json", sc));
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("k,dim,dim_over_b,bound,stabilized_at_m\n0,1,1,1,", 0) == 0);
  CHECK(r.out.find("\n1,3,3,4,") != std::string::npos);
  CHECK(r.out.find("\n2,9,9,16,") != std::string::npos);

  const json pc = {{"backend", {{"kind", "perm_group"}, {"d", 1}, {"window", 5}}}, {"dims", {{"k_max", 2}, {"extra", 2}}}};
  const Run p = run("dims --scenario " + write_temp("dims_perm.json", pc));
  REQUIRE(p.code == 0);
  const json doc = json::parse(p.out);
  for (const auto& row : doc["rows"]) {
    CHECK(row["bound"] == std::to_string(1 << row["k"].get<int>()));
    CHECK(row["within_bound"] == true);
  }
}

TEST_CASE("verify suites pass and output is deterministic") {
  const Run a = run("verify axioms");
  CHECK(a.code == 0);
  CHECK(a.out.find("\"summary\":\"pass\"") != std::string::npos);
  CHECK(run("verify oracle").code == 0);
  CHECK(run("verify nope").code == 2);
  const std::string args = "moment --q 1/2,-1/3 --scenario " + scenario("pure_m4.json");
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("scenario parsing") {
  const json sc = {{"backend", {{"kind", "perm_group"}, {"d", 1}, {"window", 3}, {"S", {"(0 1)"}}}},
                   {"fock", {{"dim", 2}, {"inner", json::array({json::array({"1", "1/2"}), json::array({"1/2", "1"})})}, {"max_degree", 3}}},
                   {"words", {{{{"coeff", "(0 1)"}, {"vector", {"1", "0"}}, {"color", 2}},
                               {{"coeff", {{{"coeff", "1/2"}, {"basis", "(-1 0)"}}}}, {"vector", {"0", "1"}}}}}},
                   {"partitions", {{{1}, {2}}}},
                   {"q", {"1/2"}},
                   {"n", {2, 4}}};
  const Scenario s = load_scenario(sc);
  CHECK(s.backend->kind() == "perm_group");
  CHECK(s.fock->inner()(0, 1) == Rational(1, 2));
  REQUIRE(s.words.size() == 1);
  CHECK(s.words[0][0].color == 1);
  CHECK(s.words[0][1].coeff.terms().front().second == Rational(1, 2));
  CHECK(s.partitions[0].num_singletons() == 2);
  CHECK(s.finite_n == std::vector<int>{2, 4});
  CHECK_THROWS_AS(load_scenario(json{{"backend", {{"kind", "free_haar"}}}, {"fock", {{"dim", 2}, {"inner", {{"1"}}}}}}),
                  InvalidArgument);
}
