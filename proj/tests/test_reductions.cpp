#include "mzv/reductions.hpp"

#include <algorithm>

#include "mzv/constants.hpp"
#include "mzv/engine.hpp"
#include "mzv/errors.hpp"
#include "support.hpp"

using mzv::Composition;
using mzv::Rational;
using mzv::Route;
using mzv::SymbolicValue;
using testing::ctx60;
using testing::diff;
using testing::ref;

namespace {

SymbolicValue z(int k) { return SymbolicValue::zeta(k); }

bool has_route(const std::vector<mzv::Reduction>& rs, Route r) {
  return std::any_of(rs.begin(), rs.end(), [&](const mzv::Reduction& x) { return x.route == r; });
}

}  // namespace

TEST_CASE("depth-two Euler sums") {
  CHECK(mzv::euler_depth2(2).closed_form == z(3));
  CHECK(mzv::euler_depth2(2).target == Composition{2, 1});
  CHECK(mzv::euler_depth2(3).closed_form == SymbolicValue::pi(4) * Rational(1, 360));
  // 2 zeta(5) - zeta(2) zeta(3)
  CHECK(mzv::euler_depth2(4).closed_form == z(5) * Rational(2) - z(2) * z(3));
  CHECK_THROWS_AS(mzv::euler_depth2(1), mzv::DomainError);
}

TEST_CASE("{3,1}^n blocks") {
  CHECK(mzv::z31_block(0).closed_form == SymbolicValue(1));
  CHECK(mzv::z31_block(1).closed_form == SymbolicValue::pi(4) * Rational(1, 360));
  CHECK(mzv::z31_block(2).target == Composition{3, 1, 3, 1});
}

TEST_CASE("zeta(3, {1,3}^n) and zeta(2, {1,3}^n)") {
  CHECK(mzv::thm1(0).closed_form == z(3));
  CHECK(mzv::thm1(1).closed_form == (z(3) * z(4) - z(7)) * Rational(1, 4));
  for (int n = 0; n <= 4; ++n) CHECK(mzv::thm1(n).closed_form == mzv::thm1_alternate(n));
  CHECK(mzv::thm1(1).target == Composition{3, 1, 3});
  CHECK(mzv::thm2(0).closed_form == z(2));
  CHECK(mzv::thm2(1).target == Composition{2, 1, 3});

  mzv::ConstantTable table(ctx60());
  CHECK(diff(mzv::thm1(1).closed_form.realize(table),
             ref("0.073166209287641436828653406091759702849792047034371")) < 1e-48);
  CHECK(diff(mzv::thm2(1).closed_form.realize(table),
             ref("0.6183495605712693078956392608518648982635086951122")) < 1e-48);
}

TEST_CASE("cor3 targets are the duals") {
  for (int n = 0; n <= 3; ++n) {
    auto r = mzv::cor3(n);
    CHECK(r.target == mzv::dual(mzv::thm1(n).target));
    CHECK(r.closed_form == mzv::thm1(n).closed_form);
  }
}

TEST_CASE("alternating families") {
  auto c = mzv::c_sequence(4);
  CHECK(c[0] == SymbolicValue(1));
  CHECK(c[1] == -SymbolicValue::log2());
  CHECK(c[2] == SymbolicValue::log2().pow(2) * Rational(1, 2));

  auto [even, odd] = mzv::cream(1);
  CHECK(even.target == Composition{-1, 1});
  CHECK(even.closed_form == c[2]);
  CHECK(odd.target == Composition{-1, 1, -1});
  CHECK(odd.closed_form == c[3]);

  auto cp = mzv::c_prime_sequence(4);
  auto [codd, ceven] = mzv::cheese(1);
  CHECK(codd.target == Composition{-1, -1, 1});
  CHECK(codd.closed_form == cp[3]);
  CHECK(ceven.target == Composition{-1, -1, 1, -1});
  CHECK(ceven.closed_form == cp[4]);
}

TEST_CASE("half-integer evaluations") {
  for (int f = 1; f <= mzv::kHalfDualFamilies; ++f) {
    auto r = mzv::half_dual(f, 1);
    CHECK(r.x == Rational(1, 2));
    CHECK(r.route == Route::HalfDual);
  }
  CHECK(mzv::half_dual(1, 0).target.empty());
  CHECK_THROWS_AS(mzv::half_dual(0, 1), mzv::DomainError);
  CHECK_THROWS_AS(mzv::half_dual(9, 1), mzv::DomainError);

  // ({1,3}^1) at 1/2 numerically against its closed form
  mzv::ConstantTable table(ctx60());
  auto r = mzv::half_dual(8, 0);
  auto num = mzv::eval_auto(r.target, Rational(1, 2), 1e-40, ctx60());
  CHECK(diff(num.value, r.closed_form.realize(table)) < 1e-39);
}

TEST_CASE("generating-function coefficients") {
  auto s1 = mzv::gf_coeff_route("S1", 10);
  CHECK(s1[2] == mzv::thm1(0).closed_form);
  CHECK(s1[6] == mzv::thm1(1).closed_form * Rational(-4));
  auto bbb = mzv::gf_coeff_route("bbb14", 6);
  auto c = mzv::c_sequence(6);
  for (int m = 0; m <= 6; ++m) CHECK(bbb[m] == c[m]);
  CHECK_THROWS_AS(mzv::gf_coeff_route("nope", 4), mzv::DomainError);
}

TEST_CASE("find_reductions") {
  CHECK(has_route(mzv::find_reductions(Composition{2, 1}, 1), Route::EulerDepth2));
  CHECK(has_route(mzv::find_reductions(Composition{3, 1, 3}, 1), Route::Thm1));
  CHECK(has_route(mzv::find_reductions(Composition{2, 1, 3, 1}, 1), Route::Cor3));
  CHECK(has_route(mzv::find_reductions(Composition{3, 1}, 1), Route::Z31));
  CHECK(has_route(mzv::find_reductions(Composition{-1, 1}, 1), Route::Cream));
  CHECK(has_route(mzv::find_reductions(Composition{-1, -1, 1}, 1), Route::Cheese));
  CHECK(has_route(mzv::find_reductions(Composition{3, 1}, Rational(1, 2)), Route::HalfDual));
  auto single = mzv::find_reductions(Composition{-3}, 1);
  REQUIRE(has_route(single, Route::Singleton));
  CHECK(single.front().closed_form == z(3) * Rational(-3, 4));
  CHECK(mzv::find_reductions(Composition{5, 2, 7}, 1).empty());
  CHECK(mzv::find_reductions(Composition{2, 1}, Rational(1, 3)).empty());
}

TEST_CASE("route names") {
  CHECK(mzv::to_string(Route::Thm1) == "thm1");
  CHECK(mzv::to_string(Route::HalfDual) == "half_dual");
}
