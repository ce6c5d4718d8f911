#include <doctest.h>

#include <array>
#include <cstdio>
#include <json.hpp>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  std::string cmd = std::string(MZV_CLI_PATH) + " " + args + " 2>&1";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
  int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("eval prints the value") {
  auto r = run("eval 3 --x 1/2");
  CHECK(r.code == 0);
  CHECK(r.out.find("0.5372131936") != std::string::npos);
  CHECK(r.out.find("geometric") != std::string::npos);
}

TEST_CASE("eval 2,1 gives zeta(3)") {
  auto r = run("--json eval 2,1 --tol 1e-9");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "eval");
  CHECK(j["result"]["value"].get<std::string>().rfind("1.2020569", 0) == 0);
  CHECK(j["result"]["method"] == "richardson");
}

TEST_CASE("dual") {
  auto r = run("dual 3");
  CHECK(r.code == 0);
  CHECK(r.out == "2,1\n");
  CHECK(run("dual 1,2").code == 2);
}

TEST_CASE("closed") {
  auto r = run("--json closed 3,1,3");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["result"].is_array());
  CHECK_FALSE(j["result"].empty());
  CHECK(run("closed 5,2,7").code == 3);
}

TEST_CASE("coeffs") {
  auto r = run("--json coeffs A --order 2");
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["version"] == "1.0.0");
  CHECK(run("coeffs nope").code == 2);
}

TEST_CASE("verify and suite") {
  CHECK(run("verify WRONSKIAN").code == 0);
  CHECK(run("verify JACOBI --tol 0").code == 1);
  CHECK(run("verify NOPE").code == 2);
  auto s = run("--json suite --only BBB14 TMILK");
  REQUIRE(s.code == 0);
  auto j = nlohmann::json::parse(s.out);
  for (const char* key : {"command", "inputs", "reports", "version"}) CHECK(j.contains(key));
  CHECK(j["reports"].size() == 2);
}

TEST_CASE("usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("eval").code == 2);
  CHECK(run("eval 3,,1").code == 2);
  CHECK(run("eval 1,1").code == 2);
  CHECK(run("--prec 10 eval 2").code == 2);
}
