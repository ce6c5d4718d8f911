#include "mzv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>

namespace mzv {

PrecisionContext::PrecisionContext(int digits) : digits_(digits) {
  if (digits < kMinDigits)
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                      std::to_string(digits));
}

mpfr_prec_t PrecisionContext::bits() const noexcept {
  return static_cast<mpfr_prec_t>(std::ceil(digits_ * 3.321928094887362)) + 16;
}

PrecisionContext PrecisionContext::from_environment() {
  if (const char* env = std::getenv("MZV_PREC"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    long d = std::strtol(env, &end, 10);
    if (*end != '\0') throw UsageError(std::string("MZV_PREC is not an integer: ") + env);
    return PrecisionContext(static_cast<int>(d));
  }
  return PrecisionContext();
}

// ---------------------------------------------------------------- BigReal

BigReal::BigReal(mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal(long value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

BigReal::BigReal(const Rational& value, mpfr_prec_t bits) {
  mpfr_init2(value_, bits);
  mpfr_set_q(value_, value.get_mpq_t(), MPFR_RNDN);
}

BigReal BigReal::from_double(double value, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set_d(r.value_, value, MPFR_RNDN);
  return r;
}

BigReal BigReal::from_string(const std::string& text, mpfr_prec_t bits) {
  BigReal r(bits);
  if (mpfr_set_str(r.value_, text.c_str(), 10, MPFR_RNDN) != 0)
    throw ParseError("not a real number: '" + text + "'", 0);
  return r;
}

BigReal BigReal::pi(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_pi(r.value_, MPFR_RNDN);
  return r;
}

BigReal BigReal::log2(mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_const_log2(r.value_, MPFR_RNDN);
  return r;
}

BigReal::BigReal(const BigReal& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    if (precision() != other.precision()) mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

std::string BigReal::to_string(int significant) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", significant, value_);
  std::string s(buffer);
  mpfr_free_str(buffer);
  return s;
}

namespace {

void widen_to(mpfr_ptr target, mpfr_srcptr other) {
  if (mpfr_get_prec(other) > mpfr_get_prec(target)) mpfr_prec_round(target, mpfr_get_prec(other), MPFR_RNDN);
}

}  // namespace

BigReal& BigReal::operator+=(const BigReal& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_add(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(const BigReal& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_sub(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(const BigReal& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_mul(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(const BigReal& rhs) {
  widen_to(value_, rhs.value_);
  mpfr_div(value_, value_, rhs.value_, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator+=(long rhs) {
  mpfr_add_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator-=(long rhs) {
  mpfr_sub_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}
BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, MPFR_RNDN);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal r(*this);
  mpfr_neg(r.value_, r.value_, MPFR_RNDN);
  return r;
}

BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }

BigReal operator-(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_sub(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

BigReal operator/(long a, const BigReal& b) {
  BigReal r(b.precision());
  mpfr_si_div(r.value_, a, b.value_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.value_, b.value_);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

std::partial_ordering operator<=>(const BigReal& a, long b) {
  if (mpfr_nan_p(a.value_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.value_, b);
  return c < 0 ? std::partial_ordering::less : c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent;
}

namespace {

template <int (*F)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigReal unary(const BigReal& x) {
  BigReal r(x.precision());
  F(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

}  // namespace

BigReal abs(const BigReal& x) { return unary<mpfr_abs>(x); }
BigReal sqrt(const BigReal& x) { return unary<mpfr_sqrt>(x); }
BigReal exp(const BigReal& x) { return unary<mpfr_exp>(x); }
BigReal log(const BigReal& x) { return unary<mpfr_log>(x); }
BigReal sin(const BigReal& x) { return unary<mpfr_sin>(x); }
BigReal cos(const BigReal& x) { return unary<mpfr_cos>(x); }
BigReal sinh(const BigReal& x) { return unary<mpfr_sinh>(x); }
BigReal cosh(const BigReal& x) { return unary<mpfr_cosh>(x); }

BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, long exponent) {
  BigReal r(base.precision());
  mpfr_pow_si(r.raw(), base.raw(), exponent, MPFR_RNDN);
  return r;
}

BigReal pow(const BigReal& base, const BigReal& exponent) {
  BigReal r(std::max(base.precision(), exponent.precision()));
  mpfr_pow(r.raw(), base.raw(), exponent.raw(), MPFR_RNDN);
  return r;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal with_precision(const BigReal& x, mpfr_prec_t bits) {
  BigReal r(bits);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}

// ---------------------------------------------------------------- complex

GaussRational gauss(const Rational& re, const Rational& im) { return GaussRational(re, im); }

GaussRational pow(const GaussRational& z, unsigned long exponent) {
  GaussRational result(Rational(1), Rational(0));
  GaussRational base = z;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

BigComplex make_complex(const BigReal& re) { return BigComplex(re, zero_like(re)); }

BigComplex make_complex(const Rational& re, const Rational& im, mpfr_prec_t bits) {
  return BigComplex(BigReal(re, bits), BigReal(im, bits));
}

BigComplex to_big(const GaussRational& z, mpfr_prec_t bits) { return make_complex(z.re, z.im, bits); }

BigComplex operator*(BigComplex z, long s) {
  z.re *= s;
  z.im *= s;
  return z;
}

BigComplex operator/(BigComplex z, long s) {
  z.re /= s;
  z.im /= s;
  return z;
}

BigComplex operator+(BigComplex z, long s) {
  z.re += s;
  return z;
}

BigComplex operator-(long s, BigComplex z) {
  z.re = s - z.re;
  z.im = -z.im;
  return z;
}

BigComplex operator-(BigComplex z, long s) { return z + (-s); }

BigComplex operator/(const BigComplex& z, const BigReal& s) { return BigComplex(z.re / s, z.im / s); }

BigReal abs(const BigComplex& z) {
  BigReal r(std::max(z.re.precision(), z.im.precision()));
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

BigComplex exp(const BigComplex& z) {
  BigReal m = exp(z.re);
  return BigComplex(m * cos(z.im), m * sin(z.im));
}

BigComplex log(const BigComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("log of zero");
  return BigComplex(log(abs(z)), atan2(z.im, z.re));
}

BigComplex sin(const BigComplex& z) { return BigComplex(sin(z.re) * cosh(z.im), cos(z.re) * sinh(z.im)); }

BigComplex cos(const BigComplex& z) { return BigComplex(cos(z.re) * cosh(z.im), -(sin(z.re) * sinh(z.im))); }

BigComplex sinh(const BigComplex& z) { return BigComplex(sinh(z.re) * cos(z.im), cosh(z.re) * sin(z.im)); }

BigComplex pow(const BigComplex& z, unsigned long exponent) {
  BigComplex result(BigReal(1, z.re.precision()), BigReal(z.re.precision()));
  BigComplex base = z;
  while (exponent > 0) {
    if (exponent & 1UL) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

BigComplex inverse(const BigComplex& z) {
  BigComplex one(BigReal(1, z.re.precision()), BigReal(z.re.precision()));
  return one / z;
}

BigComplex with_precision(const BigComplex& z, mpfr_prec_t bits) {
  return BigComplex(with_precision(z.re, bits), with_precision(z.im, bits));
}

std::string to_string(const BigComplex& z, int significant) {
  if (z.im.is_zero()) return z.re.to_string(significant);
  std::string im = z.im.to_string(significant);
  if (im.front() != '-') im = "+" + im;
  return z.re.to_string(significant) + im + "i";
}

}  // namespace mzv
