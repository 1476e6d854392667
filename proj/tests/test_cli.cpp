// End-to-end checks of the evtsir binary: exit codes, pinned CSV headers,
// JSON round trip, and byte-identical reruns across worker counts.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(EVTSIR_BIN_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> lines;
  std::istringstream in(s);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

// first non-comment line = column header
std::string header_of(const std::string& csv) {
  for (const auto& line : lines_of(csv))
    if (!line.empty() && line[0] != '#') return line;
  return "";
}

std::string data_row(const std::string& csv, size_t idx = 0) {
  size_t seen = 0;
  bool past_header = false;
  for (const auto& line : lines_of(csv)) {
    if (line.empty() || line[0] == '#') continue;
    if (!past_header) {
      past_header = true;
      continue;
    }
    if (seen++ == idx) return line;
  }
  return "";
}

} // namespace

TEST_CASE("help exits zero") {
  CHECK(run("--help").exit_code == 0);
  CHECK(run("cdf --help").exit_code == 0);
}

TEST_CASE("usage errors exit 64") {
  CHECK(run("").exit_code == 64);                                          // no subcommand
  CHECK(run("cdf --preset no-such-preset").exit_code == 64);               // unknown preset
  CHECK(run("cdf").exit_code == 64);                                       // missing scenario
  CHECK(run("cdf --preset table1-rayleigh-n1 --zn 0").exit_code == 64);    // empty z grid
  CHECK(run("cdf --preset table1-rayleigh-n1 --zmin 5 --zmax 1").exit_code == 64);
  CHECK(run("frechet --preset table1-rayleigh-n1 --L 1").exit_code == 64); // quantile undefined
  CHECK(run("fas --preset table1-rayleigh-n1 --L 8 --Ls 9").exit_code == 64);
}

TEST_CASE("series non-convergence exits 2 with row flags") {
  const auto r = run("cdf --preset table1-beta3 --zmin 0.5 --zmax 2 --zn 3 --max-outer 2");
  CHECK(r.exit_code == 2);
  CHECK(header_of(r.out) == "z,exact,beta_prime_approx,converged");
  CHECK(data_row(r.out).find(",0") != std::string::npos); // converged = 0 flag
}

TEST_CASE("frechet command reproduces the closed-form chain") {
  const auto r = run("frechet --preset table1-rayleigh-n1 --L 20");
  CHECK(r.exit_code == 0);
  CHECK(header_of(r.out) == "a_L,beta,delta");
  std::istringstream row(data_row(r.out));
  double a = 0, beta = 0, delta = 0;
  char comma;
  row >> a >> comma >> beta >> comma >> delta;
  CHECK(a == doctest::Approx(19.0).epsilon(1e-8));
  CHECK(beta == doctest::Approx(1.0));
  CHECK(delta == doctest::Approx(1.0));
}

TEST_CASE("cdf columns are pinned, with the optional asymptotic column") {
  auto r = run("cdf --preset table1-rayleigh-n1 --zmin 1 --zmax 1 --zn 1");
  CHECK(r.exit_code == 0);
  CHECK(header_of(r.out) == "z,exact,beta_prime_approx,converged");
  CHECK(data_row(r.out).substr(0, 6) == "1,0.5,");

  r = run("cdf --preset table1-rayleigh-n1 --zmin 1 --zmax 1 --zn 1 --L 20");
  CHECK(header_of(r.out) == "z,exact,asymptotic_max_L,beta_prime_approx,converged");

  r = run("pdf --preset table1-rayleigh-n1 --zmin 1 --zmax 1 --zn 1");
  CHECK(header_of(r.out) == "z,exact,beta_prime_approx,converged");
  CHECK(data_row(r.out).substr(0, 7) == "1,0.25,");
}

TEST_CASE("provenance header embeds the config and seed") {
  const auto r = run("cdf --preset table1-rayleigh-n1 --zmin 1 --zmax 2 --zn 2 --seed 99");
  const auto lines = lines_of(r.out);
  REQUIRE(lines.size() >= 2);
  CHECK(lines[0] == "# evtsir cdf");
  CHECK(lines[1].substr(0, 10) == "# config: ");
  const auto cfg = nlohmann::json::parse(lines[1].substr(10));
  CHECK(cfg["seed"] == 99);
  CHECK(cfg["scenario"]["interferers"].size() == 1);
}

TEST_CASE("json format round-trips through the documented schema") {
  const auto r = run("outage --preset table1-rayleigh-n1 --L 20 --gamma-t 19 --format json");
  CHECK(r.exit_code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "outage");
  CHECK(j["columns"] == nlohmann::json({"gamma_t", "asymptotic", "mc_estimate", "mc_se"}));
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0][1].get<double>() == doctest::Approx(std::exp(-1.0)).epsilon(1e-6));
  CHECK(j["config"]["scenario"]["source"]["mu"] == 1.0);
}

TEST_CASE("simulation output is byte-identical across worker counts") {
  const std::string base =
      "outage --preset table1-beta2 --L 16 --gamma-t 2 --reps 20000 --seed 7 ";
  const auto w1 = run(base + "--workers 1");
  const auto w4 = run(base + "--workers 4");
  CHECK(w1.exit_code == 0);
  CHECK(w1.out == w4.out);

  const std::string fas = "fas --preset fig-fas-n1 --L 16 --Ls 2 --reps 5000 --seed 3 ";
  CHECK(run(fas + "--workers 1").out == run(fas + "--workers 3").out);
}

TEST_CASE("kl command emits a finite value") {
  const auto r = run("kl --preset table1-rayleigh-n1 --L 8 --reps 5000 --workers 2");
  CHECK(r.exit_code == 0);
  CHECK(header_of(r.out) == "L,n,kl");
  const auto row = data_row(r.out);
  CHECK(row.substr(0, 7) == "8,5000,");
}

TEST_CASE("reproduce table1 emits the 5x6 grid") {
  const auto r = run("reproduce --target table1 --reps 2000 --workers 2");
  CHECK(r.exit_code == 0);
  CHECK(header_of(r.out) ==
        "L,kl_rayleigh_n1,kl_rayleigh_n2,kl_rayleigh_n3,kl_beta2,kl_beta3,kl_beta4");
  size_t rows = 0;
  bool past_header = false;
  for (const auto& line : lines_of(r.out)) {
    if (line.empty() || line[0] == '#') continue;
    if (!past_header) {
      past_header = true;
      continue;
    }
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(rows == 5);
  CHECK(run("reproduce --target not-a-target").exit_code == 64);
}

TEST_CASE("output file writing matches stdout") {
  const std::string path = "/tmp/evtsir_cli_test_out.csv";
  std::remove(path.c_str());
  const auto direct = run("frechet --preset table1-rayleigh-n2 --L 20");
  const auto to_file = run("frechet --preset table1-rayleigh-n2 --L 20 --out " + path);
  CHECK(to_file.exit_code == 0);
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == direct.out);
  std::remove(path.c_str());
}
