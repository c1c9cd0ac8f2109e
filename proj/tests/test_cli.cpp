// End-to-end checks of the command-line surface: formats, determinism, exit
// codes.  The binary path is injected at configure time.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  RunResult r;
  std::string cmd = std::string(MEXLET_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) out.push_back(f);
  return out;
}

}  // namespace

TEST_CASE("profile emits the documented CSV contract") {
  RunResult r =
      run("profile --B 2 --j 4 --s 1 --points 512 --theta-max 3.141592653589793");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 513);
  CHECK(ls[0] == "theta,psi,envelope,ratio");
  CHECK(fields(ls[1]).size() == 4);
  CHECK(fields(ls[512]).size() == 4);
  // first row is theta = 0 with a strictly positive profile
  auto first = fields(ls[1]);
  CHECK(std::stod(first[0]) == 0.0);
  CHECK(std::stod(first[1]) > 0.0);
}

TEST_CASE("profile output is byte-identical across runs") {
  std::string args = "profile --B 2 --j 3 --s 2 --points 128";
  RunResult a = run(args);
  RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("psf-check stays below the gate and reports it per row") {
  RunResult r = run("psf-check --eps 0.5 --s 1 --points 64");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  REQUIRE(ls.size() == 65);
  CHECK(ls[0] == "phi,direct,psf,rel_err");
  double worst = 0.0;
  for (std::size_t i = 1; i < ls.size(); ++i) {
    auto f = fields(ls[i]);
    REQUIRE(f.size() == 4);
    worst = std::max(worst, std::stod(f[3]));
  }
  CHECK(worst <= 1e-8);
}

TEST_CASE("partition emits one row per cell") {
  RunResult r = run("partition --B 2 --j 2");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  CHECK(ls[0] == "k,cx,cy,cz,area,diam");
  CHECK(ls.size() == 65);  // 64 cells at B=2, j=2
}

TEST_CASE("tail-check emits a passing schema-1 JSON report") {
  RunResult r = run("tail-check --B 2 --s 1 --j 2..4");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["schema"] == 1);
  CHECK(parsed["pass"] == true);
  CHECK(parsed["measurements"].size() == 3);
}

TEST_CASE("lp-norms emits slopes per row") {
  RunResult r = run("lp-norms --B 2 --s 1 --j 2..4 --p 2,inf --variant int");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  CHECK(ls[0] == "j,p,norm,fitted_slope");
  CHECK(ls.size() == 7);  // 3 levels x 2 p values
}

TEST_CASE("analyze emits one coefficient per cell") {
  RunResult r = run("analyze --B 2 --j 2 --s 1 --degrees 4 --coeffs 1.0");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  CHECK(ls[0] == "k,beta");
  CHECK(ls.size() == 65);
}

TEST_CASE("frame-check defaults produce a passing report") {
  RunResult r = run("frame-check --B 1.3 --s 1");
  CHECK(r.exit_code == 0);
  auto parsed = nlohmann::json::parse(r.out);
  CHECK(parsed["pass"] == true);
  CHECK(parsed["params"]["mixture"].size() == 2);
}

TEST_CASE("verify-all runs the whole suite and exits 0") {
  RunResult r = run("verify-all --B 2 --s 1,2,3 --j 2..6");
  CHECK(r.exit_code == 0);
  auto ls = lines(r.out);
  int pass_lines = 0;
  for (const auto& l : ls)
    if (l.find("PASS") != std::string::npos) ++pass_lines;
  CHECK(pass_lines >= 10);
  CHECK(ls.back() == "verify-all: ALL PASS");
}

TEST_CASE("error taxonomy maps to exit codes") {
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("profile --B 0.5 --j 2 --s 1").exit_code == 2);
  CHECK(run("tail-check --B 2 --s 1 --j 2..4 --max-scaled-angle 20").exit_code == 2);
  CHECK(run("partition --B 2 --j 14").exit_code == 3);
}
