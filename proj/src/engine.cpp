#include "mzv/engine.hpp"

#include <algorithm>
#include <cmath>

#include "mzv/errors.hpp"
#include "mzv/linalg.hpp"

namespace mzv {

std::string to_string(Method m) {
  switch (m) {
    case Method::Geometric: return "geometric";
    case Method::Richardson: return "richardson";
    case Method::EulerTransform: return "euler_transform";
    case Method::ExactCoeff: return "exact_coeff";
  }
  return "unknown";
}

namespace {

void check_x(const BigReal& x, const Composition& comp) {
  if (x < 0 || x > 1) throw DomainError("x must lie in [0, 1]");
  if (x == 1 && !is_convergent(comp, true))
    throw DomainError("the sum for (" + render(comp) + ") diverges at x = 1");
}

int max_magnitude(const Composition& comp) {
  int m = 1;
  for (const auto& a : comp.args()) m = std::max(m, a.magnitude);
  return m;
}

// Exact partial sum with no convergence checks.
Rational partial_rational(const Composition& comp, const Rational& x, long N) {
  const std::size_t k = comp.depth();
  std::vector<Rational> acc(k + 1, Rational(0));
  acc[k] = 1;
  Rational xpow = 1;
  for (long n = 1; n <= N; ++n) {
    xpow *= x;
    Rational inv(1, n);
    for (std::size_t j = 0; j < k; ++j) {
      Rational t = pow(inv, comp[j].magnitude) * acc[j + 1];
      if (comp[j].barred && n % 2 == 1) t = -t;
      if (j == 0) t *= xpow;
      acc[j] += t;
    }
  }
  return acc[0];
}

// Unknown-coefficient fit: value of the constant term of
// y(N) = L + sum_b c_b basis_b(N) through the given nodes.
BigReal fit_constant(const std::vector<long>& nodes, const std::vector<BigReal>& values,
                     const std::vector<std::pair<int, int>>& terms, mpfr_prec_t bits) {
  // terms: (log power j, inverse power e) for ln^j N / N^e
  std::vector<std::vector<BigReal>> a;
  for (long N : nodes) {
    BigReal bigN(N, bits);
    BigReal lnN = log(bigN);
    std::vector<BigReal> row{BigReal(1, bits)};
    for (auto [j, e] : terms) row.push_back(pow(lnN, static_cast<long>(j)) / pow(bigN, static_cast<long>(e)));
    a.push_back(std::move(row));
  }
  return solve_linear(std::move(a), values).front();
}

// For x < 1: |term_n| <= x^n n^{-|s1|} (1 + ln n)^{k-1}, and consecutive
// bounds shrink by at least r = x (1 + 1/(N+1))^{k-1}.
double geometric_tail(double x, int s1, std::size_t depth, long N) {
  double n1 = static_cast<double>(N) + 1;
  double kk = static_cast<double>(depth) - 1;
  double r = x * std::pow(1 + 1 / n1, kk);
  if (r >= 1) return INFINITY;
  double log_first = n1 * std::log(x) - s1 * std::log(n1) + kk * std::log(1 + std::log(n1));
  return std::exp(log_first) / (1 - r);
}

EvalResult eval_geometric(const Composition& comp, const BigReal& x, double tol, const EvalOptions& options) {
  double xd = x.to_double();
  long budget = xd <= 0.5 ? std::min(options.max_terms_geometric, 10'000L) : options.max_terms_geometric;
  long N = std::max<long>(static_cast<long>(comp.depth()), 1);
  if (x.is_zero()) {
    EvalResult r{BigReal(x.precision()), BigReal::from_double(1e-300, x.precision()), 0, Method::Geometric, false};
    return r;
  }
  while (N < budget && geometric_tail(xd, comp[0].magnitude, comp.depth(), N) > tol)
    N = std::min(budget, N + std::max(1L, N / 16));
  double bound = geometric_tail(xd, comp[0].magnitude, comp.depth(), N);
  EvalResult r{eval_truncated(comp, x, N), BigReal::from_double(std::max(bound, 1e-300), x.precision()), N,
               Method::Geometric, bound > tol};
  return r;
}

int unit_run_after_first(const Composition& comp) {
  int run = 0;
  for (std::size_t j = 1; j < comp.depth() && comp[j].magnitude == 1; ++j) ++run;
  return run;
}

EvalResult eval_richardson(const Composition& comp, const BigReal& x, double tol, const EvalOptions& options) {
  const mpfr_prec_t bits = x.precision();
  const int J = std::max(1, unit_run_after_first(comp));
  const int q = comp[0].magnitude - 1;
  const std::size_t points = static_cast<std::size_t>(J) + 2;
  std::vector<std::pair<int, int>> terms;
  for (int j = 0; j <= J; ++j) terms.emplace_back(j, q);

  NestedSum sum(comp, x, bits);
  std::vector<long> nodes;
  std::vector<BigReal> values;
  std::vector<BigReal> fits;
  BigReal err = BigReal::from_double(INFINITY, bits);
  long N = 250;
  while (true) {
    sum.advance_to(N);
    nodes.push_back(N);
    values.push_back(sum.value());
    if (nodes.size() >= points) {
      std::vector<long> nn(nodes.end() - points, nodes.end());
      std::vector<BigReal> vv(values.end() - points, values.end());
      fits.push_back(fit_constant(nn, vv, terms, bits));
      if (fits.size() >= 2) {
        err = abs(fits.back() - fits[fits.size() - 2]);
        if (err.to_double() <= tol) break;
      }
    }
    if (2 * N > options.max_terms_unit) break;
    N *= 2;
  }
  if (fits.empty()) return {sum.value(), BigReal::from_double(INFINITY, bits), N, Method::Richardson, true};
  if (err.is_zero()) err = BigReal::from_double(1e-300, bits);
  bool warn = !(err.to_double() <= tol);
  return {fits.back(), err, N, Method::Richardson, warn};
}

EvalResult eval_euler_transform(const Composition& comp, const BigReal& x, double tol, const EvalOptions& options) {
  constexpr int K = 16;
  constexpr int J = 1;
  constexpr std::size_t points = 5;
  const mpfr_prec_t bits = x.precision();
  const int p = comp[0].barred ? comp[0].magnitude : comp[0].magnitude - 1;
  std::vector<std::pair<int, int>> terms;
  for (int i = 0; i <= 1; ++i)
    for (int j = 0; j <= J; ++j) terms.emplace_back(j, p + i);

  std::vector<BigReal> weights;  // C(K, i) / 2^K
  for (int i = 0; i <= K; ++i) weights.emplace_back(binomial(K, i) / pow2(K), bits);

  NestedSum sum(comp, x, bits);
  std::vector<long> nodes;
  std::vector<BigReal> averaged, fits;
  BigReal err = BigReal::from_double(INFINITY, bits);
  long N = 390;
  while (true) {
    BigReal e(bits);
    for (int i = 0; i <= K; ++i) {
      sum.advance_to(N + i);
      e += weights[i] * sum.value();
    }
    nodes.push_back(N);
    averaged.push_back(e);
    if (nodes.size() >= points) {
      std::vector<long> nn(nodes.end() - points, nodes.end());
      std::vector<BigReal> vv(averaged.end() - points, averaged.end());
      fits.push_back(fit_constant(nn, vv, terms, bits));
      if (fits.size() >= 2) {
        err = abs(fits.back() - fits[fits.size() - 2]);
        if (err.to_double() <= tol) break;
      }
    }
    if (2 * N + K > options.max_terms_alternating) break;
    N *= 2;
  }
  long used = N + K;
  if (fits.empty()) return {averaged.back(), BigReal::from_double(INFINITY, bits), used, Method::EulerTransform, true};
  if (err.is_zero()) err = BigReal::from_double(1e-300, bits);
  bool warn = !(err.to_double() <= tol);
  return {fits.back(), err, used, Method::EulerTransform, warn};
}

}  // namespace

NestedSum::NestedSum(const Composition& comp, const BigReal& x, mpfr_prec_t bits)
    : comp_(comp),
      x_(with_precision(x, bits)),
      xpow_(1, bits),
      x_is_one_(x == 1),
      acc_(comp.depth() + 1, BigReal(bits)),
      inv_pow_(static_cast<std::size_t>(max_magnitude(comp)) + 1, BigReal(bits)),
      term_(bits) {
  check_x(x, comp);
  mpfr_set_ui(acc_.back().raw(), 1, MPFR_RNDN);
}

void NestedSum::advance_to(long N) {
  if (N < n_) throw DomainError("NestedSum cannot move backwards");
  const std::size_t k = comp_.depth();
  const std::size_t maxm = inv_pow_.size() - 1;
  for (long n = n_ + 1; n <= N; ++n) {
    mpfr_set_ui(inv_pow_[1].raw(), static_cast<unsigned long>(n), MPFR_RNDN);
    mpfr_ui_div(inv_pow_[1].raw(), 1, inv_pow_[1].raw(), MPFR_RNDN);
    for (std::size_t m = 2; m <= maxm; ++m) mpfr_mul(inv_pow_[m].raw(), inv_pow_[m - 1].raw(), inv_pow_[1].raw(), MPFR_RNDN);
    if (!x_is_one_) mpfr_mul(xpow_.raw(), xpow_.raw(), x_.raw(), MPFR_RNDN);
    const bool odd = n % 2 == 1;
    // Outer to inner so acc_[j+1] still holds the sum over indices < n.
    for (std::size_t j = 0; j < k; ++j) {
      const auto& a = comp_[j];
      if (j + 1 == k)
        mpfr_set(term_.raw(), inv_pow_[a.magnitude].raw(), MPFR_RNDN);
      else
        mpfr_mul(term_.raw(), inv_pow_[a.magnitude].raw(), acc_[j + 1].raw(), MPFR_RNDN);
      if (j == 0 && !x_is_one_) mpfr_mul(term_.raw(), term_.raw(), xpow_.raw(), MPFR_RNDN);
      if (a.barred && odd)
        mpfr_sub(acc_[j].raw(), acc_[j].raw(), term_.raw(), MPFR_RNDN);
      else
        mpfr_add(acc_[j].raw(), acc_[j].raw(), term_.raw(), MPFR_RNDN);
    }
  }
  n_ = std::max(n_, N);
}

Rational eval_truncated(const Composition& comp, const Rational& x, long N) {
  if (x < 0 || x > 1) throw DomainError("x must lie in [0, 1]");
  if (x == 1 && !is_convergent(comp, true))
    throw DomainError("the sum for (" + render(comp) + ") diverges at x = 1");
  return partial_rational(comp, x, N);
}

BigReal eval_truncated(const Composition& comp, const BigReal& x, long N) {
  NestedSum sum(comp, x, x.precision());
  sum.advance_to(N);
  return sum.value();
}

EvalResult eval_auto(const Composition& comp, const BigReal& x, double tol, const EvalOptions& options) {
  check_x(x, comp);
  const mpfr_prec_t bits = x.precision();
  if (comp.empty()) return {BigReal(1, bits), BigReal(bits), 0, Method::ExactCoeff, false};
  if (x < 1) return eval_geometric(comp, x, tol, options);
  if (!comp.has_bars()) return eval_richardson(comp, x, tol, options);
  return eval_euler_transform(comp, x, tol, options);
}

EvalResult eval_auto(const Composition& comp, const Rational& x, double tol, const PrecisionContext& ctx,
                     const EvalOptions& options) {
  return eval_auto(comp, BigReal(x, ctx), tol, options);
}

Rational coeff_x_exact(const Composition& comp, long m) {
  if (m < 0) throw DomainError("coefficient index must be >= 0");
  if (comp.empty()) return m == 0 ? Rational(1) : Rational(0);
  if (m == 0) return 0;
  std::vector<SignedArg> rest(comp.args().begin() + 1, comp.args().end());
  Rational inner = partial_rational(Composition(std::move(rest)), Rational(1), m - 1);
  Rational c = pow(Rational(1, m), comp[0].magnitude) * inner;
  if (comp[0].barred && m % 2 == 1) c = -c;
  return c;
}

}  // namespace mzv
