#include <vector>

#include "mzv/compositions.hpp"
#include "mzv/constants.hpp"
#include "mzv/engine.hpp"
#include "mzv/powerseries.hpp"
#include "mzv/reductions.hpp"
#include "support.hpp"

using mzv::Composition;
using mzv::Rational;
using testing::Gen;

namespace {

Rational q(int a, int b) {
  Rational r(a, b);
  r.canonicalize();
  return r;
}

Composition from_ints(const std::vector<int>& v) {
  std::vector<mzv::SignedArg> args;
  for (int a : v) args.push_back({a < 0 ? -a : a, a < 0});
  return Composition(args);
}

Composition random_composition(Gen& g, int max_depth, int max_mag, bool bars) {
  std::vector<int> v(g.uniform(0, max_depth));
  for (int& a : v) {
    a = g.uniform(1, max_mag);
    if (bars && g.coin()) a = -a;
  }
  return from_ints(v);
}

// Convergent at x = 1 and unbarred, so the dual is defined.
Composition random_admissible(Gen& g) {
  std::vector<int> v(g.uniform(1, 4));
  for (int& a : v) a = g.uniform(1, 4);
  if (v[0] == 1) v[0] = 2;
  return from_ints(v);
}

}  // namespace

TEST_CASE("render then parse is the identity") {
  Gen g(11);
  for (int i = 0; i < 300; ++i) {
    Composition c = random_composition(g, 6, 9, true);
    CAPTURE(mzv::render(c));
    CHECK(mzv::parse_composition(mzv::render(c)) == c);
  }
}

TEST_CASE("a repeated group expands to prefix plus copies") {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    Composition pre = random_composition(g, 3, 5, true);
    Composition per = random_composition(g, 3, 5, true);
    if (per.empty()) per = Composition{2};
    int reps = g.uniform(0, 4);
    std::string text = mzv::render(pre);
    if (!text.empty()) text += ",";
    text += "{" + mzv::render(per) + "}^" + std::to_string(reps);
    CAPTURE(text);
    Composition e = mzv::parse_composition(text);
    CHECK(e.depth() == pre.depth() + reps * per.depth());
    CHECK(e.weight() == pre.weight() + reps * per.weight());
  }
}

TEST_CASE("duality is an involution preserving weight") {
  Gen g(13);
  for (int i = 0; i < 300; ++i) {
    Composition c = random_admissible(g);
    CAPTURE(mzv::render(c));
    Composition d = mzv::dual(c);
    CHECK(mzv::dual(d) == c);
    CHECK(d.weight() == c.weight());
    CHECK(d.depth() == c.weight() - c.depth());
    CHECK(mzv::is_convergent(d, true));
  }
}

TEST_CASE("duality carries zeta(3,{1,3}^n) to zeta(2,1,{3,1}^n)") {
  for (int n = 0; n <= 5; ++n) {
    Composition a = Composition{3} + Composition{1, 3}.repeated(n);
    Composition b = Composition{2, 1} + Composition{3, 1}.repeated(n);
    CHECK(mzv::dual(a) == b);
  }
}

TEST_CASE("log then exp returns the series") {
  Gen g(14);
  for (int i = 0; i < 60; ++i) {
    int order = g.uniform(1, 10);
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    for (int k = 1; k <= order; ++k) c[k] = q(g.uniform(-9, 9), g.uniform(1, 7));
    mzv::Series<Rational> s(c);
    CHECK((mzv::exp_series(mzv::log_series(s)) - s).is_zero());
  }
}

TEST_CASE("the x-coefficients sum to the truncated value") {
  Gen g(15);
  for (int i = 0; i < 40; ++i) {
    Composition c = random_composition(g, 3, 4, true);
    long N = g.uniform(1, 12);
    Rational x = q(g.uniform(1, 5), g.uniform(5, 9));
    Rational sum = 0, xp = 1;
    for (long m = 0; m <= N; ++m) {
      sum += mzv::coeff_x_exact(c, m) * xp;
      xp *= x;
    }
    CAPTURE(mzv::render(c));
    CHECK(sum == mzv::eval_truncated(c, x, N));
  }
}

TEST_CASE("truncated sums are real and bounded by the geometric tail") {
  Gen g(16);
  for (int i = 0; i < 40; ++i) {
    Composition c = random_composition(g, 3, 4, false);
    if (c.empty()) continue;
    Rational x(1, g.uniform(2, 5));
    Rational v = mzv::eval_truncated(c, x, 30);
    // every term is positive and at most x^n
    CHECK(v > 0);
    CHECK(v <= x / (1 - x));
  }
}
