#include "mzv/verifier.hpp"

#include <set>

#include "mzv/errors.hpp"
#include "support.hpp"

TEST_CASE("registry") {
  const auto& reg = mzv::registry();
  CHECK(reg.size() == 19);
  std::set<std::string> ids;
  for (const auto& c : reg) {
    ids.insert(c.id);
    CHECK((c.kind == mzv::CheckKind::ExactCoeff ? c.tolerance == 0 : c.tolerance > 0));
    CHECK(c.time_limit_s > 0);
  }
  CHECK(ids.size() == reg.size());
  REQUIRE(mzv::find_check("THM1") != nullptr);
  CHECK(mzv::find_check("THM1")->kind == mzv::CheckKind::NumericResidual);
  CHECK(mzv::find_check("BBB14")->kind == mzv::CheckKind::ExactCoeff);
  CHECK(mzv::find_check("NOPE") == nullptr);
}

TEST_CASE("unknown ids and bad overrides are usage errors") {
  CHECK_THROWS_AS(mzv::run("NOPE"), mzv::UsageError);
  CHECK_THROWS_AS(mzv::run("JACOBI", {{"colour", "red"}}), mzv::UsageError);
  CHECK_THROWS_AS(mzv::run("JACOBI", {{"tol", "abc"}}), mzv::UsageError);
  CHECK_THROWS_AS(mzv::run("JACOBI", {{"prec", "10"}}), mzv::UsageError);
  mzv::SuiteConfig cfg;
  cfg.ids = std::vector<std::string>{"JACOBI", "NOPE"};
  CHECK_THROWS_AS(mzv::run_suite(cfg), mzv::UsageError);
}

TEST_CASE("a passing check and its report") {
  auto r = mzv::run("WRONSKIAN");
  CHECK(r.pass);
  CHECK(r.id == "WRONSKIAN");
  CHECK_FALSE(r.points.empty());
  for (const auto& p : r.points) CHECK(p.pass());
  CHECK(r.max_residual <= r.tolerance);
  CHECK(r.digits == 60);
}

TEST_CASE("a numeric check fails under a zero tolerance") {
  auto r = mzv::run("JACOBI", {{"tol", "0"}});
  CHECK_FALSE(r.pass);
  CHECK(r.tolerance == 0);
}

TEST_CASE("exact-coefficient checks pass under a zero tolerance") {
  CHECK(mzv::run("TMILK", {{"tol", "0"}}).pass);
}

TEST_CASE("precision override") {
  auto r = mzv::run("GAUSS_SUM", {{"prec", "80"}});
  CHECK(r.digits == 80);
  CHECK(r.pass);
  CHECK(r.max_residual < 1e-70);
}

TEST_CASE("reports are reproducible") {
  auto a = mzv::run("JACOBI");
  auto b = mzv::run("JACOBI");
  REQUIRE(a.points.size() == b.points.size());
  for (size_t i = 0; i < a.points.size(); ++i) {
    CHECK(a.points[i].value == b.points[i].value);
    CHECK(a.points[i].residual == b.points[i].residual);
  }
}

TEST_CASE("suite filtering") {
  mzv::SuiteConfig empty;
  empty.ids = std::vector<std::string>{};
  auto s = mzv::run_suite(empty);
  CHECK(s.pass);
  CHECK(s.reports.empty());

  mzv::SuiteConfig two;
  two.ids = std::vector<std::string>{"WRONSKIAN", "BBB14"};
  two.jobs = 2;
  auto t = mzv::run_suite(two);
  REQUIRE(t.reports.size() == 2);
  // registry order, not request order
  CHECK(t.reports[0].id == "BBB14");
  CHECK(t.reports[1].id == "WRONSKIAN");
  CHECK(t.pass);
}
