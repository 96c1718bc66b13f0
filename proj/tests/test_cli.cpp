#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

namespace {

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  std::string cmd = std::string(HYPERDET_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 512> buf{};
  while (fgets(buf.data(), int(buf.size()), pipe)) r.out += buf.data();
  int rc = pclose(pipe);
  r.status = WEXITSTATUS(rc);
  return r;
}

}  // namespace

TEST_CASE("hankel subcommand") {
  auto r = run_cli("hankel --family factorial --n 2 --k 2");
  CHECK(r.status == 0);
  CHECK(r.out == "12\n");
  CHECK(run_cli("hankel --family catalan --n 2 --k 2").out == "6\n");
  CHECK(run_cli("hankel --family bell --n 2 --k 2").out == "6*a^2+a\n");
  CHECK(run_cli("hankel --family bell --n 2 --k 1 --r 1").out == "a^3\n");
}

TEST_CASE("closed-form subcommand") {
  auto r = run_cli("closed-form --family hilbert --n 2 --k 1");
  CHECK(r.status == 0);
  CHECK(r.out == "1/12\n");
  CHECK(run_cli("closed-form --family two_n_over_n --n 2 --k 1").out == "8\n");
  auto err = run_cli("closed-form --family bell --n 2 --k 1");
  CHECK(err.status == 1);
  CHECK(err.out.find("\"error\"") != std::string::npos);
  CHECK(err.out.find("\"schema\":\"hyperdet/1\"") != std::string::npos);
}

TEST_CASE("det subcommand from JSON") {
  auto r = run_cli(
      R"(det --json '{"order":2,"dim":2,"entries":["1","1","1","2"]}')");
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  // odd order dispatches to the pseudo-hyperdeterminant
  auto r3 = run_cli(
      R"(det --json '{"order":3,"dim":2,"entries":["1","1/2","1/2","1/3","1/2","1/3","1/3","1/4"]}')");
  CHECK(r3.status == 0);
  CHECK(r3.out == "1/6\n");
}

TEST_CASE("hankel subcommand from JSON moments") {
  auto r = run_cli(R"(hankel --json '{"moments":["1","1","2","5","14"],"n":2,"k":2,"r":0}')");
  CHECK(r.out == "6\n");
  auto bad = run_cli(R"(hankel --json '{"moments":["1","1"],"n":2,"k":2,"r":0}')");
  CHECK(bad.status == 1);
}

TEST_CASE("toeplitz subcommand") {
  auto r = run_cli(
      R"(toeplitz --json '{"offsets":{"-1":"3","0":"2","1":"5"},"n":2,"k":1}')");
  CHECK(r.out == "-11\n");
}

TEST_CASE("pfaffian4 subcommand") {
  CHECK(run_cli("pfaffian4 --family factorial --n 2").out == "12\n");
  CHECK(run_cli("pfaffian4 --family bell --n 2").out == "6*a^2+a\n");
}

TEST_CASE("turanian subcommand") {
  auto r = run_cli("turanian --family charlier --n 2 --k 1");
  CHECK(r.out == "-x\n");
  CHECK(run_cli("turanian --family hermite --n 2 --k 1 --closed").out == "-1/2\n");
}

TEST_CASE("identity subcommands") {
  auto fib = run_cli("identity fibonacci --k 2");
  CHECK(fib.status == 0);
  CHECK(fib.out == "{\"equal\":true,\"lhs\":\"5\",\"rhs\":\"5\",\"schema\":\"hyperdet/1\"}\n");
  CHECK(run_cli("identity laplacian --n 2 --k 2").status == 0);
  CHECK(run_cli("identity bQ --r 1 --n 2 --k 1").status == 0);
  CHECK(run_cli("identity fibonacci --k 4").out.find("\"equal\":true") != std::string::npos);
  CHECK(run_cli("identity appendixA --n 2 --a 1 --b 3 --k 2").status == 0);
  CHECK(run_cli("identity appendixC --case 3 --n 2 --k 1 --s 1 --m 1").status == 0);
  CHECK(run_cli("identity KZbell --n 2 --r 1").status == 0);
  CHECK(run_cli("identity binomial-shift --r 1 --N 2 --n 1 --k 1").status == 0);
  CHECK(run_cli("identity chebyshev --cheb-m 6").status == 0);
  CHECK(run_cli("identity heine --n 2 --r 1 --k 1 --a 1 --b 1").status == 0);
  CHECK(run_cli("identity leclerc --n 2 --r 2").status == 0);
}

TEST_CASE("kaneko-check subcommand") {
  auto r = run_cli("kaneko-check --n 1 --r 1 --a 1 --b 1 --k 1");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"equal\":true") != std::string::npos);
}

TEST_CASE("schur subcommand") {
  auto r = run_cli("schur --n 2 --k 2");
  CHECK(r.status == 0);
  CHECK(r.out ==
        "{\"basis\":\"schur\",\"n\":2,\"schema\":\"hyperdet/1\","
        "\"terms\":{\"2,2\":\"3\",\"3,1\":\"-1\"}}\n");
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli("frobnicate").status == 2);
  CHECK(run_cli("identity no-such-identity").status == 2);
}

TEST_CASE("deterministic output") {
  auto a = run_cli("hankel --family bell --n 3 --k 2");
  auto b = run_cli("hankel --family bell --n 3 --k 2");
  CHECK(a.out == b.out);
  auto c = run_cli("schur --n 3 --k 2");
  auto d = run_cli("schur --n 3 --k 2");
  CHECK(c.out == d.out);
  // thread count must not change results
  auto t1 = run_cli("hankel --family factorial --n 4 --k 2 --threads 1");
  auto t4 = run_cli("hankel --family factorial --n 4 --k 2 --threads 4");
  CHECK(t1.out == t4.out);
}
