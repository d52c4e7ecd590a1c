#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cysp/cli.hpp"
#include "cysp/sat.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cysp::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("cysp_test_" + name);
}

}  // namespace

TEST_CASE("exit codes") {
  struct Case {
    std::vector<std::string> args;
    int code;
  };
  const std::vector<Case> cases{
      {{"verify", "5_7", "--n", "5", "--A", "1,4"}, 0},
      {{"verify", "2_7", "--n", "4", "--A", "2"}, 1},
      {{"verify", "2_7", "--n", "6", "--A", "1"}, 1},
      {{"verify", "2_7", "--A", "1"}, 2},
      {{"verify", "9_7", "--n", "5", "--A", "1,4"}, 2},
      {{"verify", "5_7", "--n", "5", "--A", "1,x"}, 2},
      {{"construct", "3_7", "10"}, 0},
      {{"construct", "7_7", "20"}, 1},
      {{"construct", "2_7", "7"}, 1},
      {{"construct", "4_7", "--group", "3x3"}, 0},
      {{"construct", "4_7", "--group", "2x2x2"}, 1},
      {{"construct", "2_7", "--group", "3x3"}, 2},
      {{"search", "6_7", "--n", "8"}, 0},
      {{"search", "6_7", "--n", "10"}, 1},
      {{"search", "6_7", "--n", "50"}, 2},
      {{"search", "5_7", "--n", "5", "--all"}, 0},
      {{"spectrum", "5_7", "--lo", "3", "--hi", "20"}, 0},
      {{"random", "7_7", "--n", "36", "--seed", "1"}, 0},
      {{"random", "1_7", "--n", "5", "--seed", "1"}, 1},
      {{"random", "7_7", "--n", "36"}, 2},
      {{"solve", "6_7", "9"}, 1},
      {{"solve", "7_7", "12"}, 0},
      {{"cnf", "2_7", "2"}, 2},
      {{"bounds", "--max", "40"}, 0},
      {{"report", "--lo", "3", "--hi", "12"}, 0},
      {{"nonsense"}, 2},
      {{}, 2},
  };
  for (const Case& c : cases) {
    std::string joined;
    for (const auto& a : c.args) joined += a + " ";
    CAPTURE(joined);
    CHECK(run(c.args).code == c.code);
  }
}

TEST_CASE("verify output") {
  CHECK(run({"verify", "5_7", "--n", "5", "--A", "1,4"}).out == "valid\n");
  Result bad = run({"verify", "2_7", "--n", "4", "--A", "2"});
  CHECK(bad.out.rfind("invalid", 0) == 0);
  Result js = run({"--json", "verify", "2_7", "--n", "4", "--A", "2"});
  auto j = nlohmann::json::parse(js.out);
  CHECK(j["valid"] == false);
  CHECK_FALSE(j["violations"].empty());
}

TEST_CASE("construct output feeds verify --input") {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"construct", "6_7", "23"},
        std::vector<std::string>{"construct", "4_7", "--group", "3x6"},
        std::vector<std::string>{"construct", "3_7", "12"}}) {
    Result r = run(args);
    REQUIRE(r.code == 0);
    auto path = temp_path("coloring.json");
    std::ofstream(path) << r.out;
    Result v = run({"verify", args[1], "--input", path.string()});
    CHECK(v.code == 0);
    CHECK(v.out == "valid\n");
    std::filesystem::remove(path);
  }
  CHECK(run({"verify", "5_7", "--input", "/nonexistent/file.json"}).code == 2);
}

TEST_CASE("spectrum and report text") {
  CHECK(run({"spectrum", "6_7", "--lo", "3", "--hi", "20"}).out ==
        "CySp(6_7) on [3, 20] = {8, 11..14, 16..20}\n");
  Result rep = run({"report", "--lo", "3", "--hi", "20"});
  CHECK(rep.code == 1);
  CHECK(rep.out.find("methods used:") != std::string::npos);
  CHECK(rep.out.find("MISMATCH") != std::string::npos);
}

TEST_CASE("cnf writes parseable DIMACS") {
  auto path = temp_path("f.cnf");
  Result r = run({"cnf", "7_7", "12", "--dimacs", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  cysp::CnfFormula f = cysp::parse_dimacs(text.str());
  CHECK(f == cysp::encode(cysp::algebra_by_name("7_7"), 12).first);
  std::filesystem::remove(path);

  Result stdout_cnf = run({"cnf", "1_7", "4"});
  CHECK(stdout_cnf.out.find("p cnf ") != std::string::npos);
}

TEST_CASE("bounds text names the threshold") {
  Result r = run({"bounds", "--max", "36"});
  CHECK(r.out.find("representability threshold): 34") != std::string::npos);
  auto j = nlohmann::json::parse(run({"--json", "bounds", "--max", "36"}).out);
  CHECK(j["union_bound_threshold"] == 34);
  CHECK(j["rows"].size() == 34);
}
