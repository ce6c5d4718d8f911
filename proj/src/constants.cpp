#include "mzv/constants.hpp"

#include <algorithm>
#include <cmath>

namespace mzv {

namespace {

// Bernoulli numbers are immutable, so a process-wide cache is safe to share.
std::mutex g_bernoulli_mutex;
std::vector<Rational> g_bernoulli{Rational(1)};

constexpr double kLn10 = 2.302585092994046;
constexpr double kLog10TwoPi = 0.7981798683581150;

// Number of Euler-Maclaurin correction terms for a target precision.
int correction_terms(int digits) { return std::max(8, (digits + 2) / 3); }

}  // namespace

std::vector<Rational> bernoulli_table(unsigned nmax) {
  std::lock_guard lock(g_bernoulli_mutex);
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  for (unsigned m = static_cast<unsigned>(g_bernoulli.size()); m <= nmax; ++m) {
    Rational sum = 0;
    for (unsigned k = 0; k < m; ++k) {
      if (k > 1 && k % 2 == 1) continue;
      sum += binomial(m + 1, k) * g_bernoulli[k];
    }
    Rational bm = -sum / Rational(m + 1);
    bm.canonicalize();
    g_bernoulli.push_back(bm);
  }
  return {g_bernoulli.begin(), g_bernoulli.begin() + nmax + 1};
}

Rational bernoulli(unsigned n) { return bernoulli_table(n)[n]; }

SymbolicValue zeta_even_symbolic(int k) {
  if (k < 2 || k % 2 != 0) throw DomainError("zeta_even_symbolic needs an even argument >= 2, got " + std::to_string(k));
  // zeta(2n) = (-1)^(n+1) B_2n (2 pi)^(2n) / (2 (2n)!)
  int n = k / 2;
  Rational c = bernoulli(static_cast<unsigned>(k)) * pow2(k) / (2 * factorial(static_cast<unsigned long>(k)));
  if (n % 2 == 0) c = -c;
  return SymbolicValue(c) * SymbolicValue::pi(k);
}

BigReal zeta(int s, const PrecisionContext& ctx) {
  if (s < 2) throw DomainError("zeta(s) needs s >= 2, got " + std::to_string(s));
  const int p = correction_terms(ctx.digits());
  const mpfr_prec_t bits = ctx.bits() + 32;
  // Remainder after p corrections is about 2 (s)_{2p+1} / (2 pi)^{2p+2} N^{-(s+2p+1)}.
  double log10_scale = std::log10(2.0) + (std::lgamma(s + 2.0 * p + 1) - std::lgamma(static_cast<double>(s))) / kLn10 -
                       (2.0 * p + 2) * kLog10TwoPi;
  double target = -(ctx.digits() + 6.0);
  long N = static_cast<long>(std::ceil(std::pow(10.0, (log10_scale - target) / (s + 2.0 * p + 1)))) + 1;
  N = std::max(N, 2L);

  BigReal sum(bits), term(bits), nn(bits);
  for (long n = 1; n < N; ++n) {
    mpfr_set_si(nn.raw(), n, MPFR_RNDN);
    mpfr_pow_si(term.raw(), nn.raw(), -s, MPFR_RNDN);
    sum += term;
  }
  BigReal bigN(N, bits);
  BigReal nps = pow(bigN, static_cast<long>(-s));  // N^-s
  sum += nps * bigN / (s - 1);
  sum += nps / 2;
  auto bern = bernoulli_table(static_cast<unsigned>(2 * p));
  BigReal rising(static_cast<long>(s), bits);  // (s)_{2j-1}
  BigReal npow = nps / bigN;                   // N^{-s-2j+1} for j = 1
  BigReal n2 = bigN * bigN;
  for (int j = 1; j <= p; ++j) {
    BigReal coef(bern[2 * j] / factorial(2 * j), bits);
    sum += coef * rising * npow;
    rising *= (s + 2 * j - 1);
    rising *= (s + 2 * j);
    npow /= n2;
  }
  return with_precision(sum, ctx.bits());
}

BigReal euler_gamma(const PrecisionContext& ctx) {
  const int p = correction_terms(ctx.digits());
  const mpfr_prec_t bits = ctx.bits() + 32;
  double log10_scale = std::log10(2.0) + std::lgamma(2.0 * p + 3) / kLn10 - (2.0 * p + 2) * kLog10TwoPi -
                       std::log10(2.0 * p + 2);
  double target = -(ctx.digits() + 6.0);
  long N = static_cast<long>(std::ceil(std::pow(10.0, (log10_scale - target) / (2.0 * p + 2)))) + 1;
  N = std::max(N, 2L);
  // gamma = H_{N-1} - ln N + 1/(2N) + sum_j B_2j / (2j N^2j)
  BigReal h(bits);
  for (long n = 1; n < N; ++n) h += BigReal(1, bits) / n;
  BigReal bigN(N, bits);
  BigReal result = h - log(bigN) + BigReal(1, bits) / (2 * N);
  auto bern = bernoulli_table(static_cast<unsigned>(2 * p));
  BigReal n2 = bigN * bigN;
  BigReal npow = BigReal(1, bits) / n2;
  for (int j = 1; j <= p; ++j) {
    result += BigReal(bern[2 * j] / Rational(2 * j), bits) * npow;
    npow /= n2;
  }
  return with_precision(result, ctx.bits());
}

ConstantTable::ConstantTable(const PrecisionContext& ctx)
    : ctx_(ctx),
      pi_(BigReal::pi(ctx.bits())),
      log2_(BigReal::log2(ctx.bits())),
      gamma_(mzv::euler_gamma(ctx)) {}

const BigReal& ConstantTable::zeta(int s) const {
  std::lock_guard lock(mutex_);
  auto it = zeta_.find(s);
  if (it == zeta_.end()) it = zeta_.emplace(s, mzv::zeta(s, ctx_)).first;
  return it->second;
}

SymbolicValue zeta4_block(int n) {
  if (n < 0) throw DomainError("zeta4_block needs n >= 0");
  Rational c = pow2(2 * n + 1) / factorial(static_cast<unsigned long>(4 * n + 2));
  return SymbolicValue(c) * SymbolicValue::pi(4 * n);
}

SymbolicValue a_seq(int k) {
  if (k < 1) throw DomainError("a_k needs k >= 1");
  if (k == 1) return -SymbolicValue::log2();
  if (k % 2 == 0) return SymbolicValue::zeta(k);
  return SymbolicValue(pow2(1 - k) - 1) * SymbolicValue::zeta(k);
}

SymbolicValue b_seq(int k) {
  if (k < 1) throw DomainError("b_k needs k >= 1");
  if (k == 1) return -SymbolicValue::log2();
  if (k % 2 == 1) {
    Rational c = pow2((1 - k) / 2) * (pow2(1 - k) - 1);
    if (((k + 1) / 4) % 2 == 1) c = -c;
    return SymbolicValue(c) * SymbolicValue::zeta(k);
  }
  if (k % 4 == 0) {
    Rational c = pow2(1 - k / 2);
    if ((1 + k / 4) % 2 == 1) c = -c;
    return SymbolicValue(c) * SymbolicValue::zeta(k);
  }
  return SymbolicValue();
}

SymbolicValue b_seq_from_a(int k) {
  if (k < 1) throw DomainError("b_k needs k >= 1");
  const GaussRational i(Rational(0), Rational(1));
  GaussRational numer(Rational(k % 2 == 1 ? 1 : -1), Rational(0));
  numer -= pow(i, static_cast<unsigned long>(k));
  GaussRational factor = numer / pow(GaussRational(Rational(1), Rational(-1)), static_cast<unsigned long>(k));
  if (sgn(factor.im) != 0) throw DomainError("complex factor for b_" + std::to_string(k) + " is not real");
  return a_seq(k) * factor.re;
}

SymbolicValue d_seq(int k) {
  if (k < 0) throw DomainError("d_k needs k >= 0");
  if (k == 0) return SymbolicValue(1);
  if (k % 2 == 0) {
    // sign (-1)^floor((k+2)/4): the k = 2n term of the cosecant-side series
    Rational c = pow2(2 - 3 * k / 2) * (pow2(k - 1) - 1);
    if (((k + 2) / 4) % 2 == 1) c = -c;
    return SymbolicValue(c) * SymbolicValue::zeta(k);
  }
  if (k % 4 == 1) return SymbolicValue();
  Rational c = pow2((3 - k) / 2);
  if (((k + 1) / 4) % 2 == 1) c = -c;
  return SymbolicValue(c) * SymbolicValue::zeta(k);
}

}  // namespace mzv
