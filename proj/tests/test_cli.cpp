#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct RunResult {
  int rc = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  RunResult r;
  r.rc = symkdv::cli::run(std::move(args), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

}  // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("nodes golden output") {
  const RunResult r = run_cli({"nodes", "--n", "2"});
  CHECK(r.rc == 0);
  CHECK(r.out == "1,0,-1\n");
  CHECK(r.err.empty());
}

TEST_CASE("nodes json output") {
  const RunResult r = run_cli({"nodes", "--n", "2", "--format", "json"});
  CHECK(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j == nlohmann::json({1.0, 0.0, -1.0}));
}

TEST_CASE("diffmat golden output for the two-point grid") {
  const RunResult r = run_cli({"diffmat", "--n", "1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "0.5,-0.5\n0.5,-0.5\n");
}

TEST_CASE("diffmat higher order and json") {
  const RunResult r = run_cli({"diffmat", "--n", "6", "--order", "3", "--format", "json"});
  CHECK(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["order"] == 3);
  CHECK(j["n"] == 6);
  CHECK(j["entries"].size() == 7);
}

TEST_CASE("help exits cleanly") {
  CHECK(run_cli({"--help"}).rc == 0);
  CHECK(run_cli({"nodes", "--help"}).rc == 0);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run_cli({}).rc == 64);
  CHECK(run_cli({"nodes"}).rc == 64);                      // missing required --n
  CHECK(run_cli({"nodes", "--n", "two"}).rc == 64);        // conversion failure
  CHECK(run_cli({"nodes", "--n", "2", "--bogus"}).rc == 64);
  CHECK(run_cli({"frobnicate"}).rc == 64);
}

TEST_CASE("domain errors exit 1") {
  const RunResult bad_n = run_cli({"nodes", "--n", "0"});
  CHECK(bad_n.rc == 1);
  CHECK(bad_n.err.find("error:") == 0);

  CHECK(run_cli({"table", "--problem", "3"}).rc == 1);
  CHECK(run_cli({"table", "--problem", "2", "--t", "-1"}).rc == 1);
  CHECK(run_cli({"nodes", "--n", "2", "--format", "xml"}).rc == 1);
  CHECK(run_cli({"solve", "--problem", "1", "--format", "csv"}).rc == 1);
  CHECK(run_cli({"lie", "flow", "--i", "3", "--eps", "1", "--point", "0,-4,0"}).rc == 1);
  CHECK(run_cli({"lie", "flow", "--i", "2", "--eps", "1", "--point", "1;2;3"}).rc == 1);
  CHECK(run_cli({"lie", "reduce", "--coeffs", "0,0,0"}).rc == 1);
  CHECK(run_cli({"reconstruct", "--problem", "1", "--x-min", "0", "--samples", "3"}).rc == 1);
}

TEST_CASE("non-convergence exits 2") {
  // The even-degree Problem 1 grid stalls; the table is still written.
  const RunResult r = run_cli({"table", "--problem", "1", "--n", "12"});
  CHECK(r.rc == 2);
  CHECK_FALSE(r.out.empty());
}

TEST_CASE("table csv rows are indexed from 1") {
  const RunResult r = run_cli({"table", "--problem", "1", "--n", "11"});
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("1,", 0) == 0);
  int rows = 0;
  for (char c : r.out) rows += (c == '\n');
  CHECK(rows == 10);
}

TEST_CASE("solve emits json with values and rows") {
  const RunResult r = run_cli({"solve", "--problem", "2", "--n", "10", "--t", "1", "--t", "2"});
  CHECK(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["problem"] == 2);
  CHECK(j["solutions"].size() == 2);
  for (const auto& sol : j["solutions"]) {
    CHECK(sol["converged"] == true);
    CHECK(sol["values"].size() == 11);
    CHECK(sol["rows"].size() == 9);
  }
  CHECK(j["solutions"][0]["t"] == 1.0);
  CHECK(j["solutions"][1]["t"] == 2.0);
}

TEST_CASE("reconstruct emits csv plot data") {
  const RunResult r = run_cli({"reconstruct", "--problem", "2", "--n", "10", "--t", "1", "--t",
                               "2", "--samples", "3"});
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("x,t,u\n", 0) == 0);
  int rows = 0;
  for (char c : r.out) rows += (c == '\n');
  CHECK(rows == 7);  // header + 3 samples x 2 times
  CHECK(r.out.find("-1,1,") != std::string::npos);
}

TEST_CASE("reconstruct default ranges differ per problem") {
  const RunResult p1 = run_cli({"reconstruct", "--problem", "1", "--n", "13", "--samples", "2"});
  CHECK(p1.rc == 0);
  CHECK(p1.out.find("0.2,1,") != std::string::npos);
  const RunResult p2 = run_cli({"reconstruct", "--problem", "2", "--n", "10", "--samples", "2"});
  CHECK(p2.rc == 0);
  CHECK(p2.out.find("-1,1,") != std::string::npos);
}

TEST_CASE("output redirection with --out") {
  const std::string path = "/tmp/symkdv_cli_test_nodes.csv";
  std::remove(path.c_str());
  const RunResult r = run_cli({"nodes", "--n", "2", "--out", path});
  CHECK(r.rc == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::stringstream body;
  body << in.rdbuf();
  CHECK(body.str() == "1,0,-1\n");
  std::remove(path.c_str());

  CHECK(run_cli({"nodes", "--n", "2", "--out", "/nonexistent-dir/x.csv"}).rc == 1);
}

TEST_CASE("lie commutator output") {
  const RunResult r = run_cli({"lie", "commutator", "--a", "1,0,0", "--b", "0,1,1"});
  CHECK(r.rc == 0);
  CHECK(r.out == "0,-0.3333333333333333,-1.1666666666666667\n");
}

TEST_CASE("lie adjoint closed form and series agree") {
  const RunResult closed = run_cli({"lie", "adjoint", "--i", "2", "--eps", "3"});
  CHECK(closed.rc == 0);
  CHECK(closed.out == "1,0,0\n-1,1,0\n0,0,1\n");

  const RunResult series =
      run_cli({"lie", "adjoint", "--i", "2", "--eps", "3", "--j", "1", "--terms", "12"});
  CHECK(series.rc == 0);
  CHECK(series.out == "1,-1,0\n");  // X1 - 3 [X2, X1]: first column of the closed form

  CHECK(run_cli({"lie", "adjoint", "--i", "2", "--eps", "3", "--j", "1"}).rc == 1);  // --terms missing
}

TEST_CASE("lie reduce json fields") {
  const RunResult r = run_cli({"lie", "reduce", "--coeffs", "0,2,0"});
  CHECK(r.rc == 0);
  const nlohmann::json j = nlohmann::json::parse(r.out);
  CHECK(j["case"] == 1);
  CHECK(j["scale"] == 0.5);
  CHECK(j["chain"].empty());
  CHECK(j["input"] == nlohmann::json({0.0, 2.0, 0.0}));
  CHECK(j["representative"] == nlohmann::json({0.0, 1.0, 0.0}));

  const nlohmann::json generic =
      nlohmann::json::parse(run_cli({"lie", "reduce", "--coeffs", "1,1,0"}).out);
  CHECK(generic["case"] == 2);
  CHECK(generic["chain"] == nlohmann::json({{2, 3.0}}));
  CHECK(generic["representative"] == nlohmann::json({1.0, 0.0, 0.0}));
}

TEST_CASE("lie flow csv output") {
  const RunResult r = run_cli({"lie", "flow", "--i", "3", "--eps", "2", "--point", "0,4,0"});
  CHECK(r.rc == 0);
  CHECK(r.out == "16,4,1\n");
}

TEST_CASE("variant resolution: flag beats environment beats default") {
  unsetenv("SYMKDV_VARIANT");
  auto variant_of = [](const RunResult& r) {
    return nlohmann::json::parse(r.out)["variant"].get<std::string>();
  };
  const std::vector<std::string> base = {"table", "--problem", "1", "--n", "11",
                                         "--format", "json"};

  CHECK(variant_of(run_cli(base)) == "printed-discrete");

  setenv("SYMKDV_VARIANT", "derived", 1);
  CHECK(variant_of(run_cli(base)) == "derived");

  std::vector<std::string> flagged = base;
  flagged.push_back("--variant");
  flagged.push_back("printed-continuous");
  CHECK(variant_of(run_cli(flagged)) == "printed-continuous");

  setenv("SYMKDV_VARIANT", "garbage", 1);
  CHECK(run_cli(base).rc == 1);

  unsetenv("SYMKDV_VARIANT");
}

TEST_CASE("verify spectral suite runs clean") {
  const RunResult r = run_cli({"verify", "--suite", "spectral"});
  CHECK(r.rc == 0);
  CHECK(r.out.rfind("ok spectral", 0) == 0);
  CHECK(run_cli({"verify", "--suite", "bogus"}).rc == 1);
}

TEST_SUITE_END();
