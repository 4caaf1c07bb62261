#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string out_path = "/tmp/polyfold_cli_test_out";
  std::string cmd =
      std::string(POLYFOLD_CLI_PATH) + " " + args + " >" + out_path + " 2>/dev/null";
  int status = std::system(cmd.c_str());
  RunResult r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::FILE* f = std::fopen(out_path.c_str(), "rb");
  if (f != nullptr) {
    std::array<char, 4096> buf{};
    size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) {
      r.out.append(buf.data(), n);
    }
    std::fclose(f);
  }
  return r;
}

}  // namespace

TEST_CASE("examples lists the catalog") {
  auto r = run("examples");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("bing_house") != std::string::npos);
  CHECK(r.out.find("two_crossings") != std::string::npos);
}

TEST_CASE("analyze bing_house in dimension 4 affirms sphere recognition") {
  auto r = run("analyze catalog:bing_house --dim 4 --json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"compatible\": true") != std::string::npos);
  CHECK(r.out.find("a standard sphere or S^4") != std::string::npos);
  CHECK(r.out.find("\"verdict\": \"affirmed\"") != std::string::npos);
}

TEST_CASE("thicken on incompatible input exits 2 and writes nothing") {
  std::remove("/tmp/polyfold_cli_gate.tri3");
  auto r = run("thicken catalog:incompatible_circle -o /tmp/polyfold_cli_gate.tri3");
  CHECK(r.exit_code == 2);
  std::FILE* f = std::fopen("/tmp/polyfold_cli_gate.tri3", "rb");
  CHECK(f == nullptr);
  if (f != nullptr) std::fclose(f);
}

TEST_CASE("validate on a missing file exits 1") {
  auto r = run("validate /tmp/definitely_not_here.spoly");
  CHECK(r.exit_code == 1);
}

TEST_CASE("budget exhaustion exits 3") {
  auto r = run("collapse catalog:disc --budget 1 --exhaustive-max 0");
  CHECK(r.exit_code == 3);
  CHECK(r.out.find("exhausted-budget") != std::string::npos);
}

TEST_CASE("same seed gives byte-identical output") {
  auto a = run("collapse catalog:round_bundle --seed 11 --json");
  auto b = run("collapse catalog:round_bundle --seed 11 --json");
  CHECK(a.exit_code == b.exit_code);
  CHECK(a.out == b.out);
  auto t1 = run("thicken catalog:suzuoka");
  auto t2 = run("thicken catalog:suzuoka");
  CHECK(t1.out == t2.out);
}

TEST_CASE("emitted example round-trips through a file") {
  std::string path = "/tmp/polyfold_cli_rt.spoly";
  auto e = run("examples round_sum2 -o " + path);
  REQUIRE(e.exit_code == 0);
  auto v = run("validate " + path);
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("valid") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("catalog entries never exit 4") {
  for (const char* name : {"disc", "round_bundle", "round_sum2", "suzuoka",
                           "bing_house", "two_crossings", "incompatible_circle"}) {
    auto r = run(std::string("thicken catalog:") + name + " -o /dev/null");
    CHECK(r.exit_code != 4);
  }
}
