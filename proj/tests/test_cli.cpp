#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "crepant/cli.hpp"
#include "crepant/config.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace crepant;

namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("crepant_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

int error_line(const std::string& text, ConfigFormat fmt) {
  try {
    parse_config(text, fmt);
  } catch (const ConfigError& e) {
    return e.line();
  }
  return -1;
}

const char* kFlop = R"({"lambdas": [{"j": 3, "k": 0, "value": "3"}]})";

}  // namespace

TEST_CASE("JSON config") {
  Config c = parse_config(R"({"lambdas":[{"j":2,"k":2,"value":"-1/2"},{"j":3,"k":0,"value":4}],
                              "limits":{"max_arity":5}})");
  CHECK(c.lambdas == LambdaTable{{{2, 2}, frac(-1, 2)}, {{3, 0}, 4}});
  CHECK(c.max_arity == 5);
  CHECK_FALSE(c.truncate.has_value());
  CHECK(parse_config(R"({"lambdas": []})").lambdas.empty());
}

TEST_CASE("TOML subset config") {
  Config c = parse_config(
      "# comment\n[[lambdas]]\nj = 2\nk = 2\nvalue = \"1\"  # trailing\n\n[[lambdas]]\nj = 0\nk = 3\nvalue = '-2/3'\n"
      "[limits]\ntruncate = 6\nmax_index = 4\n",
      ConfigFormat::Toml);
  CHECK(c.lambdas == LambdaTable{{{2, 2}, 1}, {{0, 3}, frac(-2, 3)}});
  CHECK(c.truncate == 6);
  CHECK(c.max_index == 4);
}

TEST_CASE("config errors carry the offending line") {
  const std::string dup = "{\n \"lambdas\": [\n  {\"j\":3,\"k\":0,\"value\":\"1\"},\n  {\"j\":3,\"k\":0,\"value\":\"2\"}\n ]\n}";
  CHECK(error_line(dup, ConfigFormat::Json) == 4);
  CHECK(error_line("{\n \"lambdas\": [\n  {\"j\":3,\"k\":0,\n   \"value\":\"0\"}]}", ConfigFormat::Json) == 4);
  CHECK(error_line("{\n \"lambdas\": [\n  {\"j\":3,\"k\":0,\"value\":1.5}]}", ConfigFormat::Json) == 3);
  CHECK(error_line("{\n \"lambdas\": [\n  {\"j\":3,\"k\":0 \"value\":\"1\"}]}", ConfigFormat::Json) == 3);
  CHECK(error_line("{\n \"lambdas\": [],\n \"limits\": {\"max_arity\": 99}}", ConfigFormat::Json) == 3);
  CHECK(error_line("{\n \"lambda\": []}", ConfigFormat::Json) == 2);
  CHECK(error_line("[[lambdas]]\nj = 3\nk = 0\nvalue = \"1/0\"\n", ConfigFormat::Toml) == 4);
  CHECK(error_line("[[lambdas]]\nj = 3\nj = 1\n", ConfigFormat::Toml) == 3);
  CHECK(error_line("[[lambdas]]\nj = 3\nk = 0\n", ConfigFormat::Toml) == 1);
  CHECK(error_line("[limits]\nmax_arity = \"8\"\n", ConfigFormat::Toml) == 2);
  CHECK(error_line("[other]\n", ConfigFormat::Toml) == 1);
}

TEST_CASE("limits precedence: defaults, environment, file") {
  Config none = parse_config(R"({"lambdas": []})");
  CHECK(effective_limits(none).max_arity == 8);
  setenv("CREPANT_MAX_ARITY", "5", 1);
  setenv("CREPANT_TRUNCATE", "3", 1);
  CHECK(effective_limits(none).max_arity == 5);
  Config some = parse_config(R"({"lambdas": [], "limits": {"truncate": 7}})");
  CHECK(effective_limits(some).truncate == 7);
  CHECK(effective_limits(some).max_arity == 5);
  setenv("CREPANT_MAX_ARITY", "x", 1);
  CHECK_THROWS_AS(effective_limits(none), ConfigError);
  unsetenv("CREPANT_MAX_ARITY");
  unsetenv("CREPANT_TRUNCATE");
}

TEST_CASE("classify and necklace output") {
  std::string flop = write_temp("flop.json", kFlop);
  Run r = run({"classify", "--config", flop});
  CHECK(r.code == 0);
  CHECK(r.out == "normal bundle: (-3,1)\n(t,r,s) = (3,0,3)\n");
  Run n = run({"necklace", "--j", "4", "--k", "2"});
  CHECK(n.out == "x^4*y^2 + x^3*y*x*y + 1/2*x^2*y*x^2*y\n");
  std::string nodal = write_temp("nodal.json", R"({"lambdas": [{"j": 1, "k": 1, "value": "1"}]})");
  CHECK(run({"classify", "--config", nodal}).out == "normal bundle: (-1,-1)\n");
}

TEST_CASE("exit codes") {
  std::string flop = write_temp("flop2.json", kFlop);
  std::string bad = write_temp("bad.json", "{\n \"lambdas\": [\n  {\"j\":3,\"k\":0,\"value\":\"x\"}]}");
  std::string nodal = write_temp("nodal2.json", R"({"lambdas": [{"j": 1, "k": 1, "value": "1"}]})");
  Run e = run({"potential", "--config", bad});
  CHECK(e.code == 2);
  CHECK(e.err.find(":3: ") != std::string::npos);
  CHECK(run({"verify-dg", "--config", nodal}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"necklace", "--j", "30", "--k", "1"}).code == 2);
  CHECK(run({"ainfty", "--config", flop, "--max-arity", "4", "--verify-stasheff"}).code == 0);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON reports re-parse and are deterministic") {
  std::string cfg = write_temp("mixed.json", R"({"lambdas": [{"j": 2, "k": 2, "value": "1"}, {"j": 3, "k": 0, "value": "1/2"}]})");
  const std::vector<std::vector<std::string>> cmds = {
      {"classify", "--json", "--config", cfg},
      {"necklace", "--json", "--j", "3", "--k", "2", "--abelian", "--orbits"},
      {"potential", "--json", "--config", cfg},
      {"jacobi-dim", "--json", "--config", cfg, "--truncate", "5"},
      {"probe", "--json", "--config", cfg, "--dmax", "6"},
      {"resolution", "--json", "--config", cfg, "--check"},
      {"verify-dg", "--json", "--config", cfg, "--max-index", "4"},
      {"ainfty", "--json", "--config", cfg, "--max-arity", "4", "--verify-closed-form"},
  };
  for (const auto& c : cmds) {
    Run a = run(c), b = run(c);
    INFO(c[0], " ", a.err);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(nlohmann::json::accept(a.out));
  }
  auto doc = nlohmann::json::parse(run(cmds.back()).out);
  CHECK(doc["products"]["xx"]["X"] == "1/2");
  CHECK(doc["products"]["xyy"]["X"] == "1");
  CHECK(doc["products"]["xX"]["s"] == "-1");
  auto jac = nlohmann::json::parse(run(cmds[3]).out);
  CHECK(jac["per_degree_dims"].size() == 6);
}

TEST_CASE("selftest passes on a valid table") {
  std::string cfg = write_temp("self.toml", "[[lambdas]]\nj = 0\nk = 3\nvalue = \"1\"\n[limits]\nmax_arity = 5\nmax_index = 5\n");
  Run r = run({"selftest", "--config", cfg});
  INFO(r.out);
  CHECK(r.code == 0);
  CHECK(r.out.find("FAIL") == std::string::npos);
}
