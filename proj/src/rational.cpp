#include "mzv/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational", 0);
  std::string_view body = text;
  bool negative = false;
  if (body.front() == '+' || body.front() == '-') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num)) throw ParseError("bad numerator in '" + std::string(text) + "'", 0);
    if (!all_digits(den)) throw ParseError("bad denominator in '" + std::string(text) + "'", slash + 1);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else {
    long exponent = 0;
    if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
      auto exp_text = std::string(body.substr(e + 1));
      char* end = nullptr;
      exponent = std::strtol(exp_text.c_str(), &end, 10);
      if (exp_text.empty() || *end != '\0')
        throw ParseError("bad exponent in '" + std::string(text) + "'", e + 1);
      body = body.substr(0, e);
    }
    std::string digits;
    long scale = 0;
    if (auto dot = body.find('.'); dot != std::string_view::npos) {
      auto ip = body.substr(0, dot);
      auto fp = body.substr(dot + 1);
      if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)) || (ip.empty() && fp.empty()))
        throw ParseError("bad decimal '" + std::string(text) + "'", 0);
      digits = std::string(ip) + std::string(fp);
      scale = static_cast<long>(fp.size());
    } else {
      if (!all_digits(body)) throw ParseError("bad number '" + std::string(text) + "'", 0);
      digits = std::string(body);
    }
    value = Rational(mpz_class(digits, 10));
    long net = exponent - scale;
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(net)));
    if (net >= 0)
      value *= p10;
    else
      value /= p10;
    value.canonicalize();
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw DomainError("zero to a negative power");
    return pow(Rational(1 / base), -exponent);
  }
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational pow2(long exponent) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(std::labs(exponent)));
  if (exponent >= 0) return Rational(p);
  Rational r(mpz_class(1), p);
  return r;
}

Rational factorial(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational binomial(unsigned long n, unsigned long k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

double magnitude(const Rational& x) { return std::fabs(x.get_d()); }

}  // namespace mzv
