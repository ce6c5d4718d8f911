#include "mzv/constants.hpp"

#include <thread>
#include <vector>

#include "mzv/errors.hpp"
#include "support.hpp"

using mzv::Rational;
using mzv::SymbolicValue;
using testing::ctx60;
using testing::diff;
using testing::ref;

namespace {

const char* kZeta2 = "1.6449340668482264364724151666460251892189499012068";
const char* kZeta3 = "1.2020569031595942853997381615114499907649862923405";
const char* kZeta5 = "1.0369277551433699263313654864570341680570809195019";
const char* kZeta7 = "1.0083492773819228268397975498497967595998635605652";
const char* kZeta11 = "1.0004941886041194645587022825264699364686064357582";
const char* kGamma = "0.57721566490153286060651209008240243104215933593992";
const char* kLog2 = "0.69314718055994530941723212145817656807550013436025";

}  // namespace

TEST_CASE("bernoulli numbers") {
  CHECK(mzv::bernoulli(0) == 1);
  CHECK(mzv::bernoulli(1) == Rational(-1, 2));
  CHECK(mzv::bernoulli(2) == Rational(1, 6));
  CHECK(mzv::bernoulli(3) == 0);
  CHECK(mzv::bernoulli(4) == Rational(-1, 30));
  CHECK(mzv::bernoulli(12) == Rational(-691, 2730));
  auto t = mzv::bernoulli_table(20);
  CHECK(t.size() == 21);
  CHECK(t[20] == Rational(-174611, 330));
}

TEST_CASE("even zeta values are rational multiples of powers of pi") {
  CHECK(mzv::zeta_even_symbolic(2) == SymbolicValue::pi(2) * Rational(1, 6));
  CHECK(mzv::zeta_even_symbolic(4) == SymbolicValue::pi(4) * Rational(1, 90));
  CHECK(mzv::zeta_even_symbolic(6) == SymbolicValue::pi(6) * Rational(1, 945));
  CHECK_THROWS_AS(mzv::zeta_even_symbolic(3), mzv::DomainError);
  CHECK_THROWS_AS(mzv::zeta_even_symbolic(0), mzv::DomainError);
}

TEST_CASE("numeric zeta against frozen references") {
  const auto& ctx = ctx60();
  CHECK(diff(mzv::zeta(2, ctx), ref(kZeta2)) < 1e-49);
  CHECK(diff(mzv::zeta(3, ctx), ref(kZeta3)) < 1e-49);
  CHECK(diff(mzv::zeta(5, ctx), ref(kZeta5)) < 1e-49);
  CHECK(diff(mzv::zeta(7, ctx), ref(kZeta7)) < 1e-49);
  CHECK(diff(mzv::zeta(11, ctx), ref(kZeta11)) < 1e-49);
  CHECK_THROWS_AS(mzv::zeta(1, ctx), mzv::DomainError);
}

TEST_CASE("numeric zeta(2n) matches the symbolic route for n = 1..10") {
  const auto& ctx = ctx60();
  mzv::ConstantTable table(ctx);
  for (int n = 1; n <= 10; ++n) {
    CAPTURE(n);
    CHECK(diff(mzv::zeta(2 * n, ctx), mzv::zeta_even_symbolic(2 * n).realize(table)) < 1e-55);
  }
}

TEST_CASE("constants table") {
  const auto& ctx = ctx60();
  mzv::ConstantTable table(ctx);
  CHECK(diff(table.euler_gamma(), ref(kGamma)) < 1e-49);
  CHECK(diff(table.log2(), ref(kLog2)) < 1e-49);
  CHECK(diff(table.zeta(3), ref(kZeta3)) < 1e-49);
  CHECK(&table.zeta(3) == &table.zeta(3));
}

TEST_CASE("constants table lookups from several threads agree") {
  mzv::ConstantTable table(ctx60());
  std::vector<double> seen(4);
  std::vector<std::thread> pool;
  for (int i = 0; i < 4; ++i)
    pool.emplace_back([&, i] {
      double s = 0;
      for (int k = 2; k <= 20; ++k) s += table.zeta(k).to_double();
      seen[i] = s;
    });
  for (auto& t : pool) t.join();
  for (double s : seen) CHECK(s == seen[0]);
}

TEST_CASE("precision context") {
  CHECK(mzv::PrecisionContext().digits() == 60);
  CHECK_THROWS_AS(mzv::PrecisionContext(29), mzv::DomainError);
  CHECK(mzv::PrecisionContext(30).widened(10).digits() == 40);
}

TEST_CASE("doubling the precision moves constants by less than the claimed bound") {
  mzv::PrecisionContext lo(40), hi(80);
  for (int s : {2, 3, 4, 9}) {
    CAPTURE(s);
    CHECK(diff(mzv::zeta(s, lo), mzv::zeta(s, hi)) < 1e-37);
  }
  CHECK(diff(mzv::euler_gamma(lo), mzv::euler_gamma(hi)) < 1e-37);
}

TEST_CASE("zeta({4}^n)") {
  CHECK(mzv::zeta4_block(0) == SymbolicValue(1));
  CHECK(mzv::zeta4_block(1) == SymbolicValue::pi(4) * Rational(1, 90));
  // 2^(2n+1) pi^(4n)/(4n+2)! at n = 2
  CHECK(mzv::zeta4_block(2) == SymbolicValue::pi(8) * Rational(1, 113400));
}

TEST_CASE("a_k, b_k, d_k") {
  CHECK(mzv::a_seq(1) == -SymbolicValue::log2());
  CHECK(mzv::a_seq(3) == SymbolicValue::zeta(3) * Rational(-3, 4));
  CHECK(mzv::a_seq(4) == SymbolicValue::zeta(4));
  CHECK(mzv::b_seq(1) == -SymbolicValue::log2());
  CHECK(mzv::b_seq(2).is_zero());
  CHECK(mzv::b_seq(3) == SymbolicValue::zeta(3) * Rational(3, 8));
  CHECK(mzv::d_seq(0) == SymbolicValue(1));
  CHECK(mzv::d_seq(1).is_zero());
  CHECK(mzv::d_seq(2) == SymbolicValue::zeta(2) * Rational(-1, 2));
  CHECK(mzv::d_seq(3) == -SymbolicValue::zeta(3));
}

TEST_CASE("b_k agrees with the route through a_k for k = 1..24") {
  for (int k = 1; k <= 24; ++k) {
    CAPTURE(k);
    CHECK(mzv::b_seq(k) == mzv::b_seq_from_a(k));
  }
}
