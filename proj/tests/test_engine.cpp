#include "mzv/engine.hpp"

#include "mzv/constants.hpp"
#include "mzv/errors.hpp"
#include "support.hpp"

using mzv::BigReal;
using mzv::Composition;
using mzv::Method;
using mzv::Rational;
using testing::ctx60;
using testing::diff;
using testing::ref;

namespace {

const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
const char* kLog2 = "0.69314718055994530941723212145817656807550013436025";
const char* kPi4Over360 = "0.27058080842778454787900092413529197569368773797968";
const char* kZeta41 = "0.096551159989443734465645531428942764032010372343693";
const char* kLi3Half = "0.53721319360804020094062322559496582667040249934038";

}  // namespace

TEST_CASE("truncated sums") {
  const auto& ctx = ctx60();
  // (1) at x = 1/2 tends to log 2
  BigReal x(Rational(1, 2), ctx);
  CHECK(diff(mzv::eval_truncated(Composition{1}, x, 400), ref(kLog2)) < 1e-50);
  CHECK(mzv::eval_truncated(Composition{}, Rational(1, 3), 10) == 1);
  CHECK(mzv::eval_truncated(Composition{2}, Rational(1), 2) == Rational(5, 4));
  CHECK(mzv::eval_truncated(Composition{-1}, Rational(1), 2) == Rational(-1, 2));
  CHECK_THROWS_AS(mzv::eval_truncated(Composition{1, 2}, Rational(1), 10), mzv::DomainError);
  CHECK_THROWS_AS(mzv::eval_truncated(Composition{2}, Rational(3, 2), 10), mzv::DomainError);
}

TEST_CASE("NestedSum steps match the rational partial sums") {
  const auto& ctx = ctx60();
  Composition c{2, -1, 1};
  mzv::NestedSum s(c, BigReal(Rational(2, 3), ctx), ctx.bits());
  for (long n : {1L, 3L, 7L, 20L}) {
    s.advance_to(n);
    CHECK(s.index() == n);
    BigReal exact(mzv::eval_truncated(c, Rational(2, 3), n), ctx);
    CHECK(diff(s.value(), exact) < 1e-55);
  }
  CHECK_THROWS_AS(s.advance_to(5), mzv::DomainError);
}

TEST_CASE("eval_auto at x = 1, all arguments unbarred") {
  const auto& ctx = ctx60();
  auto r = mzv::eval_auto(Composition{2, 1}, Rational(1), 1e-10, ctx);
  CHECK(r.method == Method::Richardson);
  CHECK(diff(r.value, ref(kZeta3)) < 1e-9);
  CHECK(r.err_bound.sign() > 0);
  CHECK_FALSE(r.warning);

  auto r31 = mzv::eval_auto(Composition{3, 1}, Rational(1), 1e-12, ctx);
  CHECK(diff(r31.value, ref(kPi4Over360)) < 1e-11);
  auto r41 = mzv::eval_auto(Composition{4, 1}, Rational(1), 1e-12, ctx);
  CHECK(diff(r41.value, ref(kZeta41)) < 1e-11);
}

TEST_CASE("eval_auto with bars uses the Euler transform") {
  const auto& ctx = ctx60();
  auto r = mzv::eval_auto(Composition{-1}, Rational(1), 1e-20, ctx);
  CHECK(r.method == Method::EulerTransform);
  CHECK(r.value.sign() < 0);
  CHECK(diff(r.value, -ref(kLog2)) < 1e-19);

  auto r11 = mzv::eval_auto(Composition{-1, 1}, Rational(1), 1e-15, ctx);
  BigReal l2 = ref(kLog2);
  CHECK(diff(r11.value, l2 * l2 / 2L) < 1e-14);

  auto rr = mzv::eval_auto(Composition{-1, -1}, Rational(1), 1e-12, ctx);
  CHECK(rr.value.sign() < 0);
}

TEST_CASE("eval_auto below x = 1 truncates geometrically") {
  const auto& ctx = ctx60();
  auto r = mzv::eval_auto(Composition{3}, Rational(1, 2), 1e-40, ctx);
  CHECK(r.method == Method::Geometric);
  CHECK(diff(r.value, ref(kLi3Half)) < 1e-40);
  CHECK(r.terms_used <= 10000);

  auto r09 = mzv::eval_auto(Composition{1}, Rational(9, 10), 1e-20, ctx);
  CHECK(diff(r09.value, mzv::log(BigReal(10, ctx))) < 1e-19);
}

TEST_CASE("empty composition is exact") {
  auto r = mzv::eval_auto(Composition{}, Rational(1), 1e-30, ctx60());
  CHECK(r.method == Method::ExactCoeff);
  CHECK(r.value == 1);
  CHECK(r.err_bound.is_zero());
}

TEST_CASE("an unreachable tolerance sets the warning") {
  mzv::EvalOptions opt;
  opt.max_terms_unit = 5000;
  auto r = mzv::eval_auto(Composition{2, 1}, Rational(1), 1e-40, ctx60(), opt);
  CHECK(r.warning);
  CHECK(r.err_bound.to_double() > 1e-40);
  CHECK(r.terms_used <= 5000);
}

TEST_CASE("divergent input is rejected") {
  CHECK_THROWS_AS(mzv::eval_auto(Composition{1, 1}, Rational(1), 1e-10, ctx60()), mzv::DomainError);
}

TEST_CASE("coefficients in x") {
  CHECK(mzv::coeff_x_exact(Composition{3}, 2) == Rational(1, 8));
  CHECK(mzv::coeff_x_exact(Composition{3, 1, 3}, 3) == Rational(1, 54));
  CHECK(mzv::coeff_x_exact(Composition{3, 1, 3}, 2) == 0);
  CHECK(mzv::coeff_x_exact(Composition{}, 0) == 1);
  CHECK(mzv::coeff_x_exact(Composition{}, 3) == 0);
  CHECK(mzv::coeff_x_exact(Composition{-1, 1}, 2) == Rational(1, 2));
}

TEST_CASE("method names") {
  CHECK(mzv::to_string(Method::Geometric) == "geometric");
  CHECK(mzv::to_string(Method::Richardson) == "richardson");
  CHECK(mzv::to_string(Method::EulerTransform) == "euler_transform");
  CHECK(mzv::to_string(Method::ExactCoeff) == "exact_coeff");
}
