#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "json.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // stdout and stderr merged
};

RunResult run_cli(const std::string& args) {
  const char* bin = std::getenv("CCC_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "CCC_CLI_BIN must point at the ccc_cli binary");
  const std::string cmd = std::string(bin) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
    out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

int count_lines(const std::string& s) {
  return static_cast<int>(std::count(s.begin(), s.end(), '\n'));
}

}  // namespace

TEST_CASE("cli spectra") {
  auto r = run_cli("spectra --family d2n --n 5 --matrix A");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1^1, 0^1, -1^1 | AGREE\n");

  r = run_cli("spectra --family q4m --m 2 --matrix L");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "0^3 | AGREE\n");

  r = run_cli("spectra --family sd8n --n 3");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 3);
  CHECK(r.output.find("DISAGREE") == std::string::npos);
}

TEST_CASE("cli rejects the abelian U(n,2)") {
  const auto r = run_cli("spectra --family u --n 2 --m 2");
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("abelian") != std::string::npos);
}

TEST_CASE("cli rejects bad input") {
  CHECK(run_cli("spectra --family dn --n 5").exit_code == 2);
  CHECK(run_cli("energies --family d2n --n 1").exit_code == 2);
  CHECK(run_cli("spectra --family d2n --n 5 --matrix X").exit_code == 2);
  CHECK(run_cli("energies --family v8n --n 2 --format yaml").exit_code == 2);
}

TEST_CASE("cli energies") {
  auto r = run_cli("energies --family sd8n --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("E = 4") != std::string::npos);
  CHECK(r.output.find("LE = 36/5") != std::string::npos);
  CHECK(r.output.find("LE+ = 28/5") != std::string::npos);

  r = run_cli("energies --family v8n --n 2");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("E = 6") != std::string::npos);
  CHECK(r.output.find("ordering: E=LE+=LE") != std::string::npos);

  r = run_cli("energies --family d2n --n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("E = 0") != std::string::npos);
  CHECK(r.output.find("LE = 0") != std::string::npos);
  CHECK(r.output.find("LE+ = 0") != std::string::npos);
}

TEST_CASE("cli energies json round-trips") {
  const auto r = run_cli("energies --family q4m --m 5 --format json");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed.dump(2) + "\n" == r.output);
  CHECK(parsed.at("LE") == "10");
  CHECK(parsed.at("LEplus") == "22/3");
  CHECK(parsed.at("classification") == "borderL");
}

TEST_CASE("cli verify") {
  auto r = run_cli("verify --families d2n --max-n 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("instances checked: 1") != std::string::npos);

  r = run_cli("verify --families all --max-n 8 --max-m 8");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("mismatches: 0") != std::string::npos);

  r = run_cli("verify --families u --max-n 4 --max-m 4 --include-u-m2");
  CHECK(r.exit_code != 0);
  CHECK(r.output.find("FormulaDiscrepancy") != std::string::npos);

  r = run_cli("verify --families u --max-n 4 --max-m 4");
  CHECK(r.exit_code == 0);
}

TEST_CASE("cli table") {
  auto r = run_cli("table --family d2n --n-from 3 --n-to 14 --format md");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 14);  // header + rule + 12 rows

  r = run_cli("table --family q4m --m-from 2 --m-to 8 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 8);  // header + 7 rows

  r = run_cli("table --family sd8n --n-from 2 --n-to 5");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("borderQ") != std::string::npos);

  r = run_cli("table --family u --m 5 --n-from 2 --n-to 4 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(count_lines(r.output) == 4);

  CHECK(run_cli("table --family d2n --n-from 5 --n-to 4").exit_code == 2);
  CHECK(run_cli("table --family u --n-from 2 --n-to 4").exit_code == 2);
}

TEST_CASE("cli graph export") {
  auto r = run_cli("graph --family d2n --n 5 --format edges");
  CHECK(r.exit_code == 0);
  CHECK(r.output == "1 2\n");

  r = run_cli("graph --family d2n --n 5 --format json");
  CHECK(r.exit_code == 0);
  const auto parsed = nlohmann::json::parse(r.output);
  CHECK(parsed.at("vertexCount") == 3);

  CHECK(run_cli("graph --family u --n 3 --m 2").exit_code == 2);
}
