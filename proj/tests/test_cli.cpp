#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {
struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("OCGW_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = env + " '" + std::string(bin) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}
}  // namespace

TEST_CASE("describe") {
  auto r = run("describe --r 3 --m 1 --s 1 --f 1");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["orbifold"]["order"] == 3);
  CHECK(j["orbifold"]["genus"] == 1);
  CHECK(j["orbifold"]["p"] == 1);
  // flags before the subcommand work too
  auto r2 = run("--r 3 --m 1 --s 1 --f 1 describe");
  CHECK(r2.out == r.out);
}

TEST_CASE("fgn disk") {
  auto a = run("fgn --side a --g 0 --n 1 --max-winding 3");
  REQUIRE(a.code == 0);
  auto j = nlohmann::json::parse(a.out);
  const auto& c0 = j["potential"]["coefficients"][0];
  CHECK(c0["legs"][0]["d"] == 1);
  CHECK(c0["re"].get<double>() == doctest::Approx(1.0).epsilon(1e-14));
  auto b = run("fgn --side b --g 0 --n 1 --max-winding 3");
  REQUIRE(b.code == 0);
  auto k = nlohmann::json::parse(b.out);
  CHECK(k["potential"]["coefficients"][0]["re"].get<double>() == doctest::Approx(-1.0).epsilon(1e-13));
}

TEST_CASE("psi and mirrormap") {
  auto r = run("psi --g 1 --k 1");
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["value"] == "1/24");
  auto m = run("mirrormap --r 3 --s 1 --degree 5");
  REQUIRE(m.code == 0);
  auto j = nlohmann::json::parse(m.out);
  CHECK(j["round_trip"].get<double>() <= 1e-12);
}

TEST_CASE("exit codes") {
  CHECK(run("describe --r 0").code == 2);
  CHECK(run("describe --s 5").code == 2);
  CHECK(run("nosuch").code == 2);
  CHECK(run("eo --r 3 --s 1").code == 2);
  CHECK(run("check bridge").code == 0);
  CHECK(run("eo --check pants --m 2").code == 0);
  // the curve disk carries the opposite sign, so the main check reports a failure
  CHECK(run("check main --m 2").code == 4);
}

TEST_CASE("output is byte-identical across runs and worker counts") {
  const std::string args = "fgn --side b --g 1 --n 2 --tau-degree 1 --max-winding 3 --m 2";
  auto one = run(args + " --workers 1");
  auto four = run(args + " --workers 4");
  auto env = run(args, "OCGW_WORKERS=3");
  auto again = run(args + " --workers 4");
  REQUIRE(one.code == 0);
  CHECK(one.out == four.out);
  CHECK(one.out == env.out);
  CHECK(four.out == again.out);
}
