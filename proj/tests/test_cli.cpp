#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <doctest.h>
#include <json.hpp>

#ifndef PODLES_CLI_PATH
#error "PODLES_CLI_PATH must point at the command line binary"
#endif

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path dir = fs::temp_directory_path();
  const fs::path out = dir / ("podles_cli_out_" + std::to_string(++counter));
  const fs::path err = dir / ("podles_cli_err_" + std::to_string(counter));
  const std::string cmd =
      std::string(PODLES_CLI_PATH) + " " + args + " >" + out.string() + " 2>" + err.string();
  const int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WEXITSTATUS(status);
  r.out = slurp(out);
  r.err = slurp(err);
  fs::remove(out);
  fs::remove(err);
  return r;
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char c : text) n += c == '\n' ? 1 : 0;
  return n;
}

}  // namespace

TEST_CASE("verify passes and reports every check") {
  const auto r = run_cli("verify --q 0.5 --shells 12");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["checks"].size() >= 30);
  for (const auto& c : parsed["checks"]) CHECK(c["passed"].get<bool>());
  CHECK(parsed["config"]["q"].get<double>() == 0.5);
  CHECK(parsed["config"]["p"].get<double>() == 0.5);  // defaulted to q
}

TEST_CASE("verify output is byte identical across runs") {
  const auto a = run_cli("verify --q 0.9 --shells 6");
  const auto b = run_cli("verify --q 0.9 --shells 6");
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(!a.out.empty());
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli("verify --q 0.5 --shells 2").exit_code == 2);   // empty interior
  CHECK(run_cli("verify --q 0.001 --shells 64").exit_code == 3);  // overflow guard
  CHECK(run_cli("verify --q 1.5 --shells 6").exit_code == 2);
  CHECK(run_cli("verify --q 0.5 --shells 8 --z-re 0 --z-im 0").exit_code == 2);
  CHECK(run_cli("verify --shells 8").exit_code == 2);           // missing q
  CHECK(run_cli("nonsense").exit_code == 2);

  // Breaking the equivariant choice p = q fails the suite, except at the
  // classical point where p = 1 coincides with q.
  CHECK(run_cli("verify --q 0.5 --shells 8 --p 1.0").exit_code == 1);
  CHECK(run_cli("verify --q 1.0 --shells 8 --p 1.0").exit_code == 0);
}

TEST_CASE("error lines are single and machine readable") {
  const auto r = run_cli("verify --q 0.001 --shells 64");
  CHECK(r.exit_code == 3);
  CHECK(count_lines(r.err) == 1);
  CHECK(r.err.rfind("error: overflow guard:", 0) == 0);
  CHECK(r.err.find("0.001") != std::string::npos);
  CHECK(r.err.find("64") != std::string::npos);
}

TEST_CASE("spectrum table for the classical sphere") {
  const auto r = run_cli("spectrum --q 1 --shells 3");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  CHECK(line.rfind("# spectrum", 0) == 0);
  std::getline(in, line);
  CHECK(line == "l,analytic,multiplicity,computed,deviation");
  int rows = 0;
  double analytic_sum = 0.0;
  while (std::getline(in, line)) {
    ++rows;
    std::istringstream fields(line);
    std::string l, analytic;
    std::getline(fields, l, ',');
    std::getline(fields, analytic, ',');
    analytic_sum += std::abs(std::stod(analytic));
  }
  CHECK(rows == 6);
  CHECK(analytic_sum == doctest::Approx(12.0));  // |±1| + |±2| + |±3|
}

TEST_CASE("export writes sparse triplets") {
  const auto r = run_cli("export --op D --q 1 --shells 1");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.out) == 4);

  const auto gamma = run_cli("export --op gamma --q 0.5 --shells 2");
  CHECK(gamma.exit_code == 0);
  CHECK(count_lines(gamma.out) == 12);

  CHECK(run_cli("export --op X --q 0.5 --shells 2").exit_code == 2);
  CHECK(run_cli("export --q 0.5 --shells 2").exit_code == 2);  // --op required
}

TEST_CASE("scan subcommands emit plot-ready tables") {
  const auto bound = run_cli("bound-scan --q 0.5 --shells 4,6");
  CHECK(bound.exit_code == 0);
  CHECK(bound.out.find("shells,alpha,norm") != std::string::npos);
  CHECK(count_lines(bound.out) == 2 + 14);

  const auto limit = run_cli("limit-scan --q 0.9,0.99 --shells 6");
  CHECK(limit.exit_code == 0);
  CHECK(limit.out.find("q,alpha,deviation") != std::string::npos);
  CHECK(count_lines(limit.out) == 2 + 4);

  CHECK(run_cli("bound-scan --q 0.5 --shells 6,4").exit_code == 2);  // must ascend
}

TEST_CASE("config file with flag precedence") {
  const fs::path cfg = fs::temp_directory_path() / "podles_cfg.txt";
  {
    std::ofstream os(cfg);
    os << "q=0.5\n";
    os << "shells=6\n";
  }
  CHECK(run_cli("verify --config " + cfg.string()).exit_code == 0);
  // A flag overrides the file: shells 2 has an empty interior.
  CHECK(run_cli("verify --config " + cfg.string() + " --shells 2").exit_code == 2);
  fs::remove(cfg);
}

TEST_CASE("output file writing") {
  const fs::path out = fs::temp_directory_path() / "podles_out.json";
  const auto r = run_cli("verify --q 0.5 --shells 6 --out " + out.string());
  CHECK(r.exit_code == 0);
  CHECK(r.out.empty());
  const auto content = slurp(out);
  CHECK(nlohmann::json::parse(content)["checks"].size() >= 30);
  fs::remove(out);

  const auto csv = run_cli("verify --q 0.5 --shells 6 --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(csv.out.find("check,q,shells,") != std::string::npos);
  CHECK(run_cli("verify --q 0.5 --shells 6 --format yaml").exit_code == 2);
}
