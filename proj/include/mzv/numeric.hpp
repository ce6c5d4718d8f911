#pragma once

#include <mpfr.h>

#include <cmath>
#include <compare>
#include <string>
#include <utility>

#include "mzv/errors.hpp"
#include "mzv/rational.hpp"

namespace mzv {

/// Working precision in decimal digits. Every BigReal produced under a
/// context carries ceil(digits * log2(10)) + 16 bits.
class PrecisionContext {
 public:
  static constexpr int kDefaultDigits = 60;
  static constexpr int kMinDigits = 30;

  explicit PrecisionContext(int digits = kDefaultDigits);

  int digits() const noexcept { return digits_; }
  mpfr_prec_t bits() const noexcept;
  /// Same context with `extra` additional guard digits.
  PrecisionContext widened(int extra) const { return PrecisionContext(digits_ + extra); }

  /// Default precision: MZV_PREC from the environment when set, else 60.
  static PrecisionContext from_environment();

 private:
  int digits_;
};

/// RAII value type over an MPFR float. Binary operations produce a result
/// at the larger precision of the two operands.
class BigReal {
 public:
  explicit BigReal(mpfr_prec_t bits);
  BigReal(long value, mpfr_prec_t bits);
  BigReal(const Rational& value, mpfr_prec_t bits);
  explicit BigReal(const PrecisionContext& ctx) : BigReal(ctx.bits()) {}
  BigReal(long value, const PrecisionContext& ctx) : BigReal(value, ctx.bits()) {}
  BigReal(const Rational& value, const PrecisionContext& ctx) : BigReal(value, ctx.bits()) {}

  static BigReal from_double(double value, mpfr_prec_t bits);
  static BigReal from_string(const std::string& text, mpfr_prec_t bits);
  static BigReal pi(mpfr_prec_t bits);
  static BigReal log2(mpfr_prec_t bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }
  mpfr_ptr raw() noexcept { return value_; }
  mpfr_srcptr raw() const noexcept { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  bool is_finite() const { return mpfr_number_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  /// Scientific notation with `significant` digits.
  std::string to_string(int significant) const;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator+=(long rhs);
  BigReal& operator-=(long rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);
  BigReal operator-() const;

  friend BigReal operator+(BigReal a, const BigReal& b);
  friend BigReal operator-(BigReal a, const BigReal& b);
  friend BigReal operator*(BigReal a, const BigReal& b);
  friend BigReal operator/(BigReal a, const BigReal& b);
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator+(long a, BigReal b) { return b += a; }
  friend BigReal operator-(long a, const BigReal& b);
  friend BigReal operator*(long a, BigReal b) { return b *= a; }
  friend BigReal operator/(long a, const BigReal& b);

  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b);
  friend bool operator==(const BigReal& a, long b) { return mpfr_cmp_si(a.value_, b) == 0; }
  friend std::partial_ordering operator<=>(const BigReal& a, long b);

 private:
  mpfr_t value_;
};

BigReal abs(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal log(const BigReal& x);
BigReal sin(const BigReal& x);
BigReal cos(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal atan2(const BigReal& y, const BigReal& x);
BigReal pow(const BigReal& base, long exponent);
BigReal pow(const BigReal& base, const BigReal& exponent);
BigReal max(const BigReal& a, const BigReal& b);
/// x rounded to `bits` of precision.
BigReal with_precision(const BigReal& x, mpfr_prec_t bits);

inline BigReal zero_like(const BigReal& x) { return BigReal(x.precision()); }
inline BigReal one_like(const BigReal& x) { return BigReal(1, x.precision()); }
inline BigReal scaled(const BigReal& x, const Rational& q) { return x * BigReal(q, x.precision()); }
inline bool is_zero(const BigReal& x) { return x.is_zero(); }
inline double magnitude(const BigReal& x) { return std::abs(x.to_double()); }

/// Cartesian complex number over any ring T. Division requires T to be a field.
template <class T>
struct Complex {
  T re;
  T im;

  Complex(T real, T imag) : re(std::move(real)), im(std::move(imag)) {}

  Complex& operator+=(const Complex& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  Complex& operator-=(const Complex& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  Complex& operator*=(const Complex& o) {
    T r = re * o.re - im * o.im;
    T i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex& operator/=(const Complex& o) {
    T den = o.re * o.re + o.im * o.im;
    T r = (re * o.re + im * o.im) / den;
    T i = (im * o.re - re * o.im) / den;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  Complex operator-() const { return Complex(T(-re), T(-im)); }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const T& s) {
    a.re = T(a.re * s);
    a.im = T(a.im * s);
    return a;
  }
  friend Complex operator*(const T& s, Complex a) { return std::move(a) * s; }
  friend bool operator==(const Complex& a, const Complex& b) { return a.re == b.re && a.im == b.im; }

  Complex conj() const { return Complex(re, T(-im)); }
  /// Multiplication by i.
  Complex times_i() const { return Complex(T(-im), re); }
};

template <class T>
Complex<T> zero_like(const Complex<T>& z) {
  return Complex<T>(zero_like(z.re), zero_like(z.im));
}
template <class T>
Complex<T> one_like(const Complex<T>& z) {
  return Complex<T>(one_like(z.re), zero_like(z.im));
}
template <class T>
Complex<T> scaled(const Complex<T>& z, const Rational& q) {
  return Complex<T>(scaled(z.re, q), scaled(z.im, q));
}
template <class T>
bool is_zero(const Complex<T>& z) {
  return is_zero(z.re) && is_zero(z.im);
}
template <class T>
double magnitude(const Complex<T>& z) {
  double a = magnitude(z.re), b = magnitude(z.im);
  return a > b ? a : b;
}

using GaussRational = Complex<Rational>;
using BigComplex = Complex<BigReal>;

GaussRational gauss(const Rational& re, const Rational& im = 0);
GaussRational pow(const GaussRational& z, unsigned long exponent);

BigComplex make_complex(const BigReal& re);
BigComplex make_complex(const Rational& re, const Rational& im, mpfr_prec_t bits);
BigComplex to_big(const GaussRational& z, mpfr_prec_t bits);
BigComplex operator*(BigComplex z, long s);
BigComplex operator/(BigComplex z, long s);
BigComplex operator+(BigComplex z, long s);
BigComplex operator-(long s, BigComplex z);
BigComplex operator-(BigComplex z, long s);
BigComplex operator/(const BigComplex& z, const BigReal& s);
BigReal abs(const BigComplex& z);
BigComplex exp(const BigComplex& z);
BigComplex log(const BigComplex& z);
BigComplex sin(const BigComplex& z);
BigComplex cos(const BigComplex& z);
BigComplex sinh(const BigComplex& z);
BigComplex pow(const BigComplex& z, unsigned long exponent);
BigComplex inverse(const BigComplex& z);
BigComplex with_precision(const BigComplex& z, mpfr_prec_t bits);
std::string to_string(const BigComplex& z, int significant);

}  // namespace mzv
