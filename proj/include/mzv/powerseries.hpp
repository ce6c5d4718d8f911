#pragma once

#include <algorithm>
#include <map>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/numeric.hpp"
#include "mzv/rational.hpp"
#include "mzv/symbolic.hpp"

namespace mzv {

/// Truncated power series sum_{k <= order} c_k x^k over a coefficient ring C.
/// C must provide +, -, *, and the free functions zero_like, one_like,
/// scaled(c, Rational), is_zero and magnitude.
template <class C>
class Series {
 public:
  explicit Series(std::vector<C> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a series needs at least one coefficient");
  }

  static Series zero(const C& proto, int order) { return Series(std::vector<C>(order + 1, zero_like(proto))); }
  static Series constant(const C& c, int order) {
    Series s = zero(c, order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<C>& coeffs() const { return coeffs_; }
  const C& operator[](int k) const { return coeffs_[k]; }
  C& operator[](int k) { return coeffs_[k]; }

  const C& coeff(int k) const {
    if (k < 0 || k > order())
      throw RangeError("coefficient " + std::to_string(k) + " beyond order " + std::to_string(order()));
    return coeffs_[k];
  }

  Series truncated(int new_order) const {
    if (new_order > order()) throw RangeError("cannot extend a truncated series");
    return Series(std::vector<C>(coeffs_.begin(), coeffs_.begin() + new_order + 1));
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const C& c) { return mzv::is_zero(c); });
  }
  double max_magnitude() const {
    double m = 0;
    for (const auto& c : coeffs_) m = std::max(m, magnitude(c));
    return m;
  }

  Series operator-() const {
    Series out = *this;
    for (auto& c : out.coeffs_) c = scaled(c, Rational(-1));
    return out;
  }
  friend Series operator+(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(n + 1);
    for (int k = 0; k <= n; ++k) out.push_back(a[k] + b[k]);
    return Series(std::move(out));
  }
  friend Series operator-(const Series& a, const Series& b) { return a + (-b); }
  friend Series operator*(Series a, const C& s) {
    for (auto& c : a.coeffs_) c = c * s;
    return a;
  }
  friend Series operator*(const C& s, Series a) { return std::move(a) * s; }
  friend Series operator*(const Series& a, const Series& b) { return cauchy_product(a, b); }

  friend Series cauchy_product(const Series& a, const Series& b) {
    int n = std::min(a.order(), b.order());
    std::vector<C> out;
    out.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
      C acc = zero_like(a[0]);
      for (int i = 0; i <= k; ++i) {
        if (mzv::is_zero(a[i]) || mzv::is_zero(b[k - i])) continue;
        acc += a[i] * b[k - i];
      }
      out.push_back(std::move(acc));
    }
    return Series(std::move(out));
  }

 private:
  std::vector<C> coeffs_;
};

template <class C>
Series<C> scale(const Series<C>& s, const C& factor) {
  return s * factor;
}

template <class C>
  requires(!std::is_same_v<C, Rational>)
Series<C> scale(const Series<C>& s, const Rational& q) {
  std::vector<C> out;
  for (const auto& c : s.coeffs()) out.push_back(scaled(c, q));
  return Series<C>(std::move(out));
}

/// s(c x): coefficient k picks up c^k.
template <class C>
Series<C> substitute_scale(const Series<C>& s, const C& c) {
  std::vector<C> out;
  C power = one_like(s[0]);
  for (int k = 0; k <= s.order(); ++k) {
    out.push_back(s[k] * power);
    power = power * c;
  }
  return Series<C>(std::move(out));
}

template <class C>
Series<C> exp_series(const Series<C>& s) {
  if (!is_zero(s[0])) throw DomainError("exp_series needs a zero constant term");
  // n e_n = sum_{k=1}^{n} k s_k e_{n-k}
  std::vector<C> e;
  e.push_back(one_like(s[0]));
  for (int n = 1; n <= s.order(); ++n) {
    C acc = zero_like(s[0]);
    for (int k = 1; k <= n; ++k) {
      if (is_zero(s[k]) || is_zero(e[n - k])) continue;
      acc += scaled(s[k] * e[n - k], Rational(k));
    }
    e.push_back(scaled(acc, Rational(1, n)));
  }
  return Series<C>(std::move(e));
}

template <class C>
Series<C> log_series(const Series<C>& s) {
  if (!is_zero(s[0] - one_like(s[0]))) throw DomainError("log_series needs constant term 1");
  // n l_n = n s_n - sum_{k=1}^{n-1} k l_k s_{n-k}
  std::vector<C> l;
  l.push_back(zero_like(s[0]));
  for (int n = 1; n <= s.order(); ++n) {
    C acc = scaled(s[n], Rational(n));
    for (int k = 1; k < n; ++k) {
      if (is_zero(l[k]) || is_zero(s[n - k])) continue;
      acc -= scaled(l[k] * s[n - k], Rational(k));
    }
    l.push_back(scaled(acc, Rational(1, n)));
  }
  return Series<C>(std::move(l));
}

/// Coefficient reciprocal 1/s for an invertible constant term (fields only).
template <class C>
Series<C> reciprocal(const Series<C>& s) {
  if (is_zero(s[0])) throw DomainError("reciprocal needs a nonzero constant term");
  C inv0 = one_like(s[0]) / s[0];
  std::vector<C> r;
  r.push_back(inv0);
  for (int n = 1; n <= s.order(); ++n) {
    C acc = zero_like(s[0]);
    for (int k = 1; k <= n; ++k) acc += s[k] * r[n - k];
    r.push_back(-(acc * inv0));
  }
  return Series<C>(std::move(r));
}

template <class C>
Series<C> derivative(const Series<C>& s) {
  if (s.order() == 0) return Series<C>::zero(s[0], 0);
  std::vector<C> out;
  for (int k = 1; k <= s.order(); ++k) out.push_back(scaled(s[k], Rational(k)));
  return Series<C>(std::move(out));
}

/// The derivation f d/dx for a linear f = alpha + beta x with rational
/// coefficients.
struct LinearDerivation {
  Rational alpha;
  Rational beta;
};

inline constexpr auto kD0 = [] { return LinearDerivation{Rational(0), Rational(1)}; };
inline constexpr auto kD1 = [] { return LinearDerivation{Rational(1), Rational(-1)}; };

/// [x^n] (alpha + beta x) s' = alpha (n+1) s_{n+1} + beta n s_n. The result
/// loses one order when alpha != 0.
template <class C>
Series<C> apply(const LinearDerivation& d, const Series<C>& s) {
  bool shrink = sgn(d.alpha) != 0;
  int n_out = shrink ? s.order() - 1 : s.order();
  if (n_out < 0) throw RangeError("series too short for the derivation");
  std::vector<C> out;
  for (int n = 0; n <= n_out; ++n) {
    C c = scaled(s[n], d.beta * n);
    if (shrink) c += scaled(s[n + 1], d.alpha * (n + 1));
    out.push_back(std::move(c));
  }
  return Series<C>(std::move(out));
}

/// D0 = x d/dx.
template <class C>
Series<C> apply_D0(const Series<C>& s) {
  return apply(kD0(), s);
}
/// D1 = (1 - x) d/dx.
template <class C>
Series<C> apply_D1(const Series<C>& s) {
  return apply(kD1(), s);
}

/// Series in w with integer (possibly negative) exponents and powers of
/// L = log w: sum c_{n,j} w^n L^j, known exactly for n <= order().
template <class C>
class LogSeries {
 public:
  using Key = std::pair<int, int>;  // (power of w, power of L)

  LogSeries(std::map<Key, C> terms, int order) : terms_(std::move(terms)), order_(order) { prune(); }

  /// s * L^log_power.
  static LogSeries from_series(const Series<C>& s, int log_power = 0) {
    std::map<Key, C> t;
    for (int n = 0; n <= s.order(); ++n)
      if (!mzv::is_zero(s[n])) t.emplace(Key{n, log_power}, s[n]);
    return LogSeries(std::move(t), s.order());
  }

  int order() const { return order_; }
  const std::map<Key, C>& terms() const { return terms_; }
  int lowest_power() const {
    int low = 0;
    for (const auto& [k, c] : terms_) low = std::min(low, k.first);
    return low;
  }
  bool is_zero() const { return terms_.empty(); }
  double max_magnitude() const {
    double m = 0;
    for (const auto& [k, c] : terms_) m = std::max(m, magnitude(c));
    return m;
  }

  friend LogSeries operator+(const LogSeries& a, const LogSeries& b) {
    std::map<Key, C> t = a.terms_;
    for (const auto& [k, c] : b.terms_) add_to(t, k, c);
    return LogSeries(std::move(t), std::min(a.order_, b.order_));
  }
  friend LogSeries operator*(LogSeries a, const C& s) {
    for (auto& [k, c] : a.terms_) c = c * s;
    a.prune();
    return a;
  }
  friend LogSeries operator*(const LogSeries& a, const LogSeries& b) {
    int order = std::min(a.order_ + b.lowest_power(), b.order_ + a.lowest_power());
    std::map<Key, C> t;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) {
        Key k{ka.first + kb.first, ka.second + kb.second};
        if (k.first <= order) add_to(t, k, ca * cb);
      }
    return LogSeries(std::move(t), order);
  }

  /// (alpha + beta w) d/dw, using d/dw (w^n L^j) = n w^{n-1} L^j + j w^{n-1} L^{j-1}.
  friend LogSeries apply(const LinearDerivation& d, const LogSeries& s) {
    std::map<Key, C> deriv;  // keys hold w^{n-1} exponents
    for (const auto& [k, c] : s.terms_) {
      auto [n, j] = k;
      if (n != 0) add_to(deriv, Key{n - 1, j}, scaled(c, Rational(n)));
      if (j != 0) add_to(deriv, Key{n - 1, j - 1}, scaled(c, Rational(j)));
    }
    std::map<Key, C> t;
    for (const auto& [k, c] : deriv) {
      if (sgn(d.alpha) != 0) add_to(t, k, scaled(c, d.alpha));
      if (sgn(d.beta) != 0) add_to(t, Key{k.first + 1, k.second}, scaled(c, d.beta));
    }
    return LogSeries(std::move(t), sgn(d.alpha) != 0 ? s.order_ - 1 : s.order_);
  }

 private:
  static void add_to(std::map<Key, C>& t, const Key& k, const C& c) {
    auto it = t.find(k);
    if (it == t.end())
      t.emplace(k, c);
    else
      it->second += c;
  }
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) {
      if (it->first.first > order_ || mzv::is_zero(it->second))
        it = terms_.erase(it);
      else
        ++it;
    }
  }

  std::map<Key, C> terms_;
  int order_;
};

/// D_f^2 D_g^2 s + four_t2 * s, the operator annihilating y1*y2 whenever
/// (D_f D_g + t) y1 = 0 and (D_f D_g - t) y2 = 0 with four_t2 = 4 t^2.
template <class S, class C>
S lemma_operator(const S& s, const LinearDerivation& f, const LinearDerivation& g, const C& four_t2) {
  S r = apply(f, apply(f, apply(g, apply(g, s))));
  return r + s * four_t2;
}

/// (D1^2 D0^2 + 4 z^4) s in the x chart, truncated to `order`.
template <class C>
Series<C> annihilation_series(const Series<C>& s, const C& z, int order) {
  if (s.order() < order + 2) throw RangeError("series must be truncated at order >= order + 2");
  C z2 = z * z;
  C four_t2 = scaled(z2 * z2, Rational(4));
  return lemma_operator(s, kD1(), kD0(), four_t2).truncated(order);
}

/// Largest coefficient magnitude of (D1^2 D0^2 + 4 z^4) s through `order`.
template <class C>
double annihilation_residual(const Series<C>& s, const C& z, int order) {
  return annihilation_series(s, z, order).max_magnitude();
}

/// Y1(x, z) = F(z, -z; 1; x): a_{n+1} = a_n (n^2 - z^2) / (n+1)^2.
template <class C>
Series<C> Y1_series(const C& z, int order) {
  C z2 = z * z;
  std::vector<C> a{one_like(z)};
  for (int n = 0; n < order; ++n) a.push_back(scaled(a[n] * (scaled(one_like(z), Rational(n * n)) - z2), Rational(1, (n + 1) * (n + 1))));
  return Series<C>(std::move(a));
}

/// Y2 in the chart w = 1 - x: w F(1+z, 1-z; 2; w), h_{n+1} = h_n (n^2 - z^2) / ((n+1) n).
template <class C>
Series<C> Y2_series_w(const C& z, int order) {
  C z2 = z * z;
  std::vector<C> h{zero_like(z), one_like(z)};
  for (int n = 1; n < order; ++n)
    h.push_back(scaled(h[n] * (scaled(one_like(z), Rational(n * n)) - z2), Rational(1, (n + 1) * n)));
  h.resize(order + 1, zero_like(z));
  return Series<C>(std::move(h));
}

/// Second solution of (D1 D0 + z^2) y = 0 in the w chart, y = -z^2 Y2 log w + h
/// with h(0) = 1, h'(0) = 0.
template <class C>
LogSeries<C> Y2_log_partner_w(const C& z, int order) {
  C t = z * z;
  C c = -t;
  Series<C> f = Y2_series_w(z, order + 1);
  // R = (1 - w)(2 f' - f / w) - f, with f / w analytic since f(0) = 0.
  std::vector<C> r(order + 1, zero_like(z));
  auto fw = [&](int n) { return f[n + 1]; };
  auto g = [&](int n) { return scaled(f[n + 1], Rational(2 * (n + 1))) - fw(n); };  // [w^n](2f' - f/w)
  for (int n = 0; n <= order; ++n) {
    r[n] = g(n) - f[n];
    if (n > 0) r[n] -= g(n - 1);
  }
  std::vector<C> h(order + 1, zero_like(z));
  h[0] = one_like(z);
  for (int n = 1; n < order; ++n) {
    C rhs = h[n] * (scaled(one_like(z), Rational(n * n)) - t) - c * r[n];
    h[n + 1] = scaled(rhs, Rational(1, (n + 1) * n));
  }
  // n = 0 fixes the logarithm coefficient: 0 = -t h_0 - c R_0 with R_0 = 1.
  return LogSeries<C>::from_series(Series<C>(f.coeffs()).truncated(order), 1) * c +
         LogSeries<C>::from_series(Series<C>(std::move(h)), 0);
}

/// U(s, w) / A(w) about s = 1/2 in u = s - 1/2: the solution of
/// s(1-s) y'' + (1-s) y' + w^2 y = 0 with y = 1, y' = 2w at u = 0.
template <class C>
Series<C> U_normalized_series(const C& w, int order) {
  C w2 = w * w;
  std::vector<C> y{one_like(w), scaled(w, Rational(2))};
  for (int n = 0; n + 2 <= order; ++n) {
    C rhs = y[n] * (scaled(one_like(w), Rational(n * n)) - w2) - scaled(y[n + 1], Rational(n + 1, 2));
    y.push_back(scaled(rhs, Rational(4, (n + 1) * (n + 2))));
  }
  y.resize(order + 1, zero_like(w));
  return Series<C>(std::move(y));
}

// Named Maclaurin series with exact symbolic coefficients.

/// A(z) = sum z^n zeta({-1}^n) = exp(sum (-1)^(k+1) a_k z^k / k).
Series<SymbolicValue> A_series(int order);
/// G(z) = sum z^(4n+2) zeta(4n+3).
Series<SymbolicValue> G_series(int order);
/// sin(pi z)/(pi z) and sinh(pi z)/(pi z).
Series<SymbolicValue> sinc_pi_series(int order);
Series<SymbolicValue> sinhc_pi_series(int order);
/// Q(z) = Y1(1,z) Y1(1,iz) = sin(pi z) sinh(pi z) / (pi z)^2.
Series<SymbolicValue> Q_series(int order);
/// pi cot(pi z) - 1/z.
Series<SymbolicValue> pi_cot_regular(int order);
/// pi csc(pi z) - 1/z and pi csch(pi z) - 1/z.
Series<SymbolicValue> pi_csc_regular(int order);
Series<SymbolicValue> pi_csch_regular(int order);
/// pi^2 csc^2(pi z) - 1/z^2 and pi^2 csch^2(pi z) - 1/z^2.
Series<SymbolicValue> csc2_regular(int order);
Series<SymbolicValue> csch2_regular(int order);

/// Dispatch by name: A, G, Q, csc2, csch2.
Series<SymbolicValue> named_series(std::string_view which, int order);
/// Y1(x, z) in x for an exact Gaussian rational z.
Series<GaussRational> named_series_Y1(const GaussRational& z, int order);

/// Rational series to symbolic coefficients (for mixing with constants).
Series<SymbolicValue> to_symbolic(const Series<Rational>& s);
Series<BigReal> realize(const Series<SymbolicValue>& s, const ConstantTable& table);

}  // namespace mzv
