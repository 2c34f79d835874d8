// Black-box tests of the command-line tool: golden bytes, exit codes,
// JSON schema round trips, and byte-determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(RSTIRLING_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::string read_golden(const std::string& name) {
  std::ifstream in(std::string(RSTIRLING_GOLDEN_DIR) + "/" + name, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("enumerate (4,3,2) csv matches the golden bytes") {
  const auto res = run_cli("enumerate --n 4 --k 3 --r 2 --format csv");
  CHECK(res.exit_code == 0);
  CHECK(res.out == read_golden("enumerate_4_3_2.csv"));

  // 30 rows plus the header.
  CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 31);
}

TEST_CASE("enumerate (3,3,3) emits the six permutations") {
  const auto res = run_cli("enumerate --n 3 --k 3 --r 3");
  CHECK(res.exit_code == 0);
  CHECK(std::count(res.out.begin(), res.out.end(), '\n') == 7);  // header + 6
}

TEST_CASE("enumerate json: schema, params, 150 records") {
  const auto res = run_cli("enumerate --n 5 --k 3 --r 0 --format json");
  CHECK(res.exit_code == 0);
  const auto doc = nlohmann::json::parse(res.out);
  CHECK(doc["schema"] == "rstirling/enumerate/v1");
  CHECK(doc["params"]["n"] == 5);
  CHECK(doc["params"]["k"] == 3);
  CHECK(doc["params"]["r"] == 0);
  CHECK(doc["rows"].size() == 150);
  CHECK(doc["rows"][0].contains("sigma"));
  CHECK(doc["rows"][0].contains("code"));
  CHECK(doc["rows"][0].contains("monomial"));
  CHECK(doc["provenance"]["tool"] == "rstirling");
  // Timings are opt-in so default output stays byte-deterministic.
  CHECK(!doc["provenance"].contains("wall_ms"));
}

TEST_CASE("deterministic byte-identical output") {
  const auto a = run_cli("enumerate --n 4 --k 3 --r 1 --format json");
  const auto b = run_cli("enumerate --n 4 --k 3 --r 1 --format json");
  CHECK(a.out == b.out);
  const auto c = run_cli("verify --suite hilbert --n 4 --k 3 --r 2 --format json");
  const auto d = run_cli("verify --suite hilbert --n 4 --k 3 --r 2 --format json");
  CHECK(c.out == d.out);

  // Parallel sweeps merge results in canonical order.
  const auto e = run_cli("verify --suite standard-basis --max-n 4 --jobs 8 --format csv");
  const auto f = run_cli("verify --suite standard-basis --max-n 4 --jobs 2 --format csv");
  CHECK(e.exit_code == 0);
  CHECK(e.out == f.out);
}

TEST_CASE("poly subcommands") {
  CHECK(run_cli("poly schubert --perm 321").out == "x1^2*x2\n");
  CHECK(run_cli("poly demazure --gamma 0,0,0,0").out == "1\n");

  // The missing-letter word identity, via two independent subcommands.
  const auto lhs = run_cli("poly word-schubert --word 1245555 --n 7 --k 5");
  const auto rhs = run_cli("poly elementary --d 5 --m 7");
  CHECK(lhs.exit_code == 0);
  CHECK(lhs.out == rhs.out);

  const auto doc =
      nlohmann::json::parse(run_cli("poly schubert --perm 321 --format json").out);
  CHECK(doc["schema"] == "rstirling/poly/v1");
  CHECK(doc["polynomial"] == "x1^2*x2");
  CHECK(doc["degree"] == 3);
}

TEST_CASE("pattern matrix display") {
  const auto res = run_cli("pattern --word 242141 --k 4");
  CHECK(res.exit_code == 0);
  CHECK(res.out == read_golden("pattern_242141.txt"));

  const auto doc = nlohmann::json::parse(run_cli("pattern --word 242141 --k 4 --format json").out);
  CHECK(doc["schema"] == "rstirling/pattern/v1");
  CHECK(doc["initial_indices"] == nlohmann::json::array({1, 2, 4}));
  CHECK(doc["star_count"] == 4);
  CHECK(doc["rows"].size() == 4);
}

TEST_CASE("verify subcommand verdicts and formats") {
  const auto hil = run_cli("verify --suite hilbert --n 4 --k 3 --r 2");
  CHECK(hil.exit_code == 0);
  CHECK(hil.out.find("1 + 4*q + 8*q^2 + 9*q^3 + 6*q^4 + 2*q^5") != std::string::npos);
  CHECK(hil.out.find("PASS") != std::string::npos);

  const auto all = run_cli("verify --suite all --n 2 --k 2 --r 2");
  CHECK(all.exit_code == 0);

  const auto doc = nlohmann::json::parse(
      run_cli("verify --suite standard-basis --n 3 --k 2 --r 1 --format json").out);
  CHECK(doc["schema"] == "rstirling/verify/v1");
  CHECK(doc["pass"] == true);
  CHECK(doc["results"][0]["suite"] == "standard-basis");

  const auto csv = run_cli("verify --suite hilbert --n 3 --k 2 --r 0 --format csv");
  CHECK(csv.out.rfind("suite,n,k,r,verdict,detail", 0) == 0);

  const auto golden_csv = run_cli("verify --suite hilbert --n 4 --k 3 --r 2 --format csv");
  CHECK(golden_csv.out == read_golden("verify_hilbert_4_3_2.csv"));
}

TEST_CASE("environment variable sets the default sweep bound") {
  const std::string cmd = std::string("RSTIRLING_MAX_N=3 ") + RSTIRLING_CLI_PATH +
                          " verify --suite hilbert --format csv 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
  pclose(pipe);
  // Header plus one row per valid triple with n <= 3 (2 + 5 + 9 = 16).
  CHECK(std::count(out.begin(), out.end(), '\n') == 17);
}

TEST_CASE("schubert cache budget does not change results") {
  const auto a = run_cli("poly word-schubert --word 232111 --n 6 --k 3");
  const auto b = run_cli("--schubert-cache 2 poly word-schubert --word 232111 --n 6 --k 3");
  CHECK(a.exit_code == 0);
  CHECK(b.exit_code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("exit-code contract") {
  CHECK(run_cli("enumerate --n 3 --k 5 --r 0").exit_code == 2);              // usage
  CHECK(run_cli("enumerate --n 4 --k 3").exit_code == 2);                    // missing flag
  CHECK(run_cli("verify --suite standard-basis --max-n 8").exit_code == 3);  // budget
  CHECK(run_cli("verify --suite nosuch --n 2 --k 2 --r 0").exit_code == 2);
  CHECK(run_cli("--version").exit_code == 0);
}
