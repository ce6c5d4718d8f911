#include "mzv/hypergeometrics.hpp"

#include "mzv/engine.hpp"
#include "mzv/errors.hpp"
#include "support.hpp"

using mzv::BigComplex;
using mzv::BigReal;
using mzv::Rational;
using testing::cref;
using testing::ctx60;
using testing::diff;
using testing::ref;

namespace {

BigComplex cx(Rational re, Rational im = 0) { return mzv::make_complex(re, im, ctx60().bits()); }
BigReal rx(Rational q) { return BigReal(q, ctx60()); }

const mzv::ConstantTable& table() {
  static const mzv::ConstantTable t(ctx60());
  return t;
}

BigComplex f21(Rational a, Rational b, Rational c, Rational x) {
  return mzv::gauss_2f1({cx(a), cx(b), cx(c), cx(x)}, ctx60());
}

}  // namespace

TEST_CASE("terminating 2F1") {
  CHECK(diff(f21(1, -1, 1, Rational(7, 3)), cx(Rational(-4, 3))) < 1e-55);
  CHECK(diff(f21(0, Rational(1, 3), 2, Rational(9, 2)), cx(1)) < 1e-55);
  CHECK(diff(mzv::Y1(cx(Rational(3, 10)), cx(1), ctx60()), cx(Rational(7, 10))) < 1e-55);
}

TEST_CASE("2F1 against frozen references") {
  CHECK(diff(f21(Rational(6, 5), Rational(4, 5), 2, Rational(3, 5)),
             mzv::make_complex(ref("1.5032399566003182410983922499042274232578406938367"))) < 1e-48);
  CHECK(diff(f21(Rational(6, 5), Rational(4, 5), 2, Rational(2, 5)),
             mzv::make_complex(ref("1.2651179284394617264325379071885417932440034276593"))) < 1e-48);
  CHECK(diff(f21(Rational(1, 2), Rational(1, 4), Rational(3, 2), Rational(7, 10)),
             mzv::make_complex(ref("1.084624593820451638888930711412487158053612135354"))) < 1e-48);
}

TEST_CASE("2F1 at x = 1 by extrapolation") {
  // Gauss sum: Gamma(3/2) Gamma(3/4) / (Gamma(1) Gamma(5/4))
  CHECK(diff(f21(Rational(1, 2), Rational(1, 4), Rational(3, 2), 1),
             mzv::make_complex(ref("1.1981402347355922074399224922803238782272126632157"))) < 1e-30);
  CHECK_THROWS_AS(f21(1, 1, 2, 1), mzv::DomainError);
  CHECK_THROWS_AS(f21(Rational(1, 2), Rational(1, 2), 1, 2), mzv::DomainError);
}

TEST_CASE("Y1, Y2 and U") {
  CHECK(diff(mzv::Y1(cx(Rational(3, 5)), cx(Rational(1, 4)), ctx60()),
             mzv::make_complex(ref("0.9550658257092612346654024441983897598781224390486"))) < 1e-48);
  CHECK(diff(mzv::Y2(cx(Rational(3, 5)), cx(Rational(1, 4)), ctx60()),
             mzv::make_complex(ref("0.50337241216446836696328252312357664753696728176469"))) < 1e-48);
  // U(1/2, z) = A(z)
  CHECK(diff(mzv::U(rx(Rational(1, 2)), cx(Rational(3, 10)), ctx60()),
             mzv::make_complex(ref("0.74608922934395880978614569456173083043778660145774"))) < 1e-45);
  CHECK_THROWS_AS(mzv::Y2(cx(Rational(-3, 2)), cx(Rational(1, 4)), ctx60()), mzv::DomainError);
}

TEST_CASE("logarithmic expansion of F(1+z,1-z;2;w)") {
  BigComplex z = cx(Rational(1, 5)), w = cx(Rational(3, 5));
  BigComplex direct = mzv::gauss_2f1({cx(1) + z, 1 - z, cx(2), w}, ctx60());
  CHECK(diff(mzv::f21_log_near_one(z, w, table()), direct) < 1e-40);
  // z = 0: -log(1-w)/w
  BigComplex at0 = mzv::f21_log_near_one(cx(0), w, table());
  BigReal closed = -mzv::log(rx(Rational(2, 5))) / rx(Rational(3, 5));
  CHECK(diff(at0, mzv::make_complex(closed)) < 1e-50);
}

TEST_CASE("A, G and digamma") {
  CHECK(diff(mzv::A_eval(cx(0), table()), cx(1)) < 1e-58);
  CHECK(diff(mzv::A_eval(cx(Rational(-3, 10), Rational(1, 5)), table()),
             cref("1.1795929210626875301354091516229324934305901696829",
                  "-0.060001554696585936229093701766665578274650257096118")) < 1e-45);
  CHECK(diff(mzv::G_eval(cx(Rational(3, 10)), table()),
             mzv::make_complex(ref("0.10892616394744718259865084567073056177620485347896"))) < 1e-48);
  CHECK(diff(mzv::G_digamma(cx(Rational(9, 10)), table()),
             mzv::make_complex(ref("2.5236187025000059189330341469772368097443906680958"))) < 1e-45);
  CHECK(diff(mzv::digamma(cx(Rational(5, 2), 1), table()),
             cref("0.80977681054404899566893547682636732016205030285013",
                  "0.45724821012357159033043219726346625569343168908248")) < 1e-45);
  CHECK(diff(mzv::digamma(cx(Rational(-1, 2), Rational(1, 4)), table()),
             cref("0.061838744290764255018188958187368155192220531205552",
                  "1.8301191246287899840696057437288670904788730718373")) < 1e-45);
  CHECK_THROWS_AS(mzv::digamma(cx(-2), table()), mzv::DomainError);
  CHECK_THROWS_AS(mzv::G_eval(cx(Rational(11, 10)), table()), mzv::DomainError);
}

TEST_CASE("closed right sides") {
  BigComplex z = cx(Rational(3, 10));
  CHECK(mzv::abs(mzv::S_rhs(rx(Rational(1, 2)), cx(0), table())).to_double() < 1e-58);
  // S(1, z) = G(z) Q(z), Q(z) = sinc(pi z) sinhc(pi z)
  BigComplex gq = mzv::G_eval(z, table()) * mzv::sinc_pi(z, table()) * mzv::sinhc_pi(z, table());
  CHECK(diff(mzv::S_rhs(rx(1), z, table()), gq) < 1e-45);

  BigComplex t = cx(Rational(1, 5));
  CHECK(diff(mzv::M_rhs(rx(Rational(2, 5)), cx(0), table()), cx(1)) < 1e-55);
  BigComplex zt = cx(Rational(1, 10), Rational(1, 10));
  BigComplex m1 = mzv::A_eval(zt, table()) * mzv::A_eval(-zt.times_i(), table());
  CHECK(diff(mzv::M_rhs(rx(1), t, table()), m1) < 1e-40);
  CHECK(diff(mzv::T_rhs(rx(1), cx(0), table()), cx(1)) < 1e-55);
}

TEST_CASE("[z^2] of Sprime_one is zeta(2)") {
  BigComplex h = cx(Rational(1, 1000));
  BigComplex q = mzv::Sprime_one(h, table()) / (h * h);
  CHECK(std::abs(q.re.to_double() - 1.6449340668482264) < 1e-4);
}

TEST_CASE("Jacobi residual vanishes at integer z") {
  CHECK(mzv::jacobi_residual(rx(Rational(3, 10)), 1, ctx60()).to_double() < 1e-55);
  CHECK(mzv::jacobi_residual(rx(Rational(7, 10)), 3, ctx60()).to_double() < 1e-50);
}

TEST_CASE("Wronskian at s = 1/2") {
  BigComplex w02 = mzv::wronskian_half(cx(Rational(1, 5)), table());
  CHECK(diff(w02, mzv::make_complex(ref("-0.5224739594042883774427264548758317746617"))) < 1e-38);
  BigComplex w03 = mzv::wronskian_closed(cx(Rational(3, 10)), table());
  CHECK(diff(w03, mzv::make_complex(ref("-5.867781659267073502330942688717182203059"))) < 1e-37);
  // even in z
  BigComplex a = mzv::wronskian_half(cx(Rational(1, 4), Rational(1, 7)), table());
  BigComplex b = mzv::wronskian_half(cx(Rational(-1, 4), Rational(-1, 7)), table());
  CHECK(diff(a, b) < 1e-50);
}
