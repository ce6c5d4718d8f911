#include "mzv/hypergeometrics.hpp"

#include <cmath>
#include <vector>

#include "mzv/errors.hpp"
#include "mzv/linalg.hpp"

namespace mzv {

namespace {

BigComplex cx(long re, mpfr_prec_t bits) { return BigComplex(BigReal(re, bits), BigReal(bits)); }

BigComplex rounded(const BigComplex& z, mpfr_prec_t bits) { return with_precision(z, bits); }

double mag(const BigComplex& z) { return abs(z).to_double(); }

bool is_real_integer(const BigComplex& z) { return z.im.is_zero() && mpfr_integer_p(z.re.raw()) != 0; }

bool is_nonpositive_integer(const BigComplex& z) { return is_real_integer(z) && z.re <= 0; }

bool is_one(const BigComplex& z) { return z.im.is_zero() && z.re == 1; }

BigComplex add(const BigComplex& z, const BigReal& r) { return BigComplex(z.re + r, z.im); }

double epsilon(mpfr_prec_t bits) { return std::ldexp(1.0, -static_cast<int>(bits)); }

// Terms t_0 = 1, t_{n+1} = t_n (a+n)(b+n) / ((c+n)(n+1)) x, summed while
// `more(n, term, sum)` holds.
template <class More>
BigComplex hyper_sum(const HyperParams& p, mpfr_prec_t bits, More more, std::vector<BigComplex>* partials = nullptr) {
  BigComplex term = cx(1, bits);
  BigComplex sum = cx(0, bits);
  for (long n = 0;; ++n) {
    sum += term;
    if (partials) partials->push_back(sum);
    if (!more(n, term, sum)) break;
    BigComplex num = (p.a + n) * (p.b + n);
    BigComplex den = (p.c + n) * n + (p.c + n);  // (c+n)(n+1)
    term = term * num / den * p.x;
  }
  return sum;
}

BigComplex gauss_at_one(const HyperParams& p, const PrecisionContext& ctx) {
  // S_N = L + sum_{j=0}^{m-2} c_j N^{delta - j}, delta = a + b - c, over the
  // nodes N = 100, 200, ..., 100 m.
  const PrecisionContext wide = ctx.widened(30);
  const mpfr_prec_t bits = wide.bits();
  HyperParams q{rounded(p.a, bits), rounded(p.b, bits), rounded(p.c, bits), cx(1, bits)};
  const int m = ctx.digits() / 3 + 2;
  const long last = 100L * m;
  std::vector<BigComplex> partials;
  hyper_sum(q, bits, [&](long n, const BigComplex&, const BigComplex&) { return n + 1 < last; }, &partials);
  BigComplex delta = q.a + q.b - q.c;
  std::vector<std::vector<BigComplex>> a;
  std::vector<BigComplex> y;
  for (int i = 0; i < m; ++i) {
    long N = 100L * (i + 1);
    BigComplex lnN = make_complex(log(BigReal(N, bits)));
    std::vector<BigComplex> row{cx(1, bits)};
    for (int j = 0; j + 1 < m; ++j) row.push_back(exp((delta - cx(j, bits)) * lnN));
    a.push_back(std::move(row));
    y.push_back(partials[static_cast<std::size_t>(N - 1)]);
  }
  return rounded(solve_linear(std::move(a), std::move(y)).front(), ctx.bits());
}

}  // namespace

BigComplex gauss_2f1(const HyperParams& p, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  HyperParams q{rounded(p.a, bits), rounded(p.b, bits), rounded(p.c, bits), rounded(p.x, bits)};
  if (is_nonpositive_integer(q.c)) throw DomainError("2F1: c must not be zero or a negative integer");
  for (const BigComplex* e : {&q.a, &q.b}) {
    if (is_nonpositive_integer(*e)) {
      long stop = -mpfr_get_si(e->re.raw(), MPFR_RNDN);
      return hyper_sum(q, bits, [&](long n, const BigComplex&, const BigComplex&) { return n < stop; });
    }
  }
  BigReal ax = abs(q.x);
  if (ax < 1) {
    const double eps = epsilon(bits);
    const double scale = mag(q.a) + mag(q.b) + mag(q.c);
    const long floor_n = static_cast<long>(2 * scale) + 10;
    int quiet = 0;
    return hyper_sum(q, bits, [&](long n, const BigComplex& term, const BigComplex& sum) {
      if (n > 50'000'000) throw RangeError("2F1 series did not converge");
      quiet = mag(term) <= eps * std::max(mag(sum), 1e-300) ? quiet + 1 : 0;
      return n < floor_n || quiet < 3;
    });
  }
  if (is_one(q.x)) {
    if ((q.c - q.a - q.b).re <= 0) throw DomainError("2F1 at x = 1 needs Re(c - a - b) > 0");
    return gauss_at_one(q, ctx);
  }
  throw DomainError("2F1 series needs |x| < 1 or x = 1");
}

BigComplex Y1(const BigComplex& x, const BigComplex& z, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  return gauss_2f1({rounded(z, bits), -rounded(z, bits), cx(1, bits), x}, ctx);
}

BigComplex Y2(const BigComplex& x, const BigComplex& z, const PrecisionContext& ctx) {
  const mpfr_prec_t bits = ctx.bits();
  BigComplex w = cx(1, bits) - x;
  if (!(abs(w) < 1)) throw DomainError("Y2 needs |1 - x| < 1");
  BigComplex zz = rounded(z, bits);
  return w * gauss_2f1({zz + 1, 1 - zz, cx(2, bits), w}, ctx);
}

BigComplex sinc_pi(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (z.re.is_zero() && z.im.is_zero()) return cx(1, bits);
  BigComplex pz = rounded(z, bits) * table.pi();
  return sin(pz) / pz;
}

BigComplex sinhc_pi(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (z.re.is_zero() && z.im.is_zero()) return cx(1, bits);
  BigComplex pz = rounded(z, bits) * table.pi();
  return sinh(pz) / pz;
}

namespace {

// U(s, z) with U(1, z) = Y1(1, z) = sin(pi z)/(pi z) by Gauss summation.
BigComplex U_table(const BigReal& s, const BigComplex& z, const ConstantTable& table) {
  if (s == 1) return sinc_pi(z, table);
  return U(s, z, table.context());
}

}  // namespace

BigComplex U(const BigReal& s, const BigComplex& z, const PrecisionContext& ctx) {
  if (!(s > 0) || s > 1) throw DomainError("U(s, z) needs 0 < s <= 1");
  BigComplex sc = make_complex(with_precision(s, ctx.bits()));
  if (s == 1) return Y1(sc, z, ctx);
  return Y1(sc, z, ctx) - rounded(z, ctx.bits()) * Y2(sc, z, ctx);
}

BigComplex U_prime(const BigReal& s, const BigComplex& z, const PrecisionContext& ctx) {
  if (!(s > 0) || !(s < 1)) throw DomainError("U'(s, z) needs 0 < s < 1");
  const mpfr_prec_t bits = ctx.bits();
  BigComplex zz = rounded(z, bits);
  BigComplex sc = make_complex(with_precision(s, bits));
  BigComplex w = cx(1, bits) - sc;
  // Y1' = -z^2 F(1+z, 1-z; 2; s)
  BigComplex y1p = -(zz * zz * gauss_2f1({zz + 1, 1 - zz, cx(2, bits), sc}, ctx));
  // Y2' = -F(1+z, 1-z; 2; 1-s) - (1-s) (1+z)(1-z)/2 F(2+z, 2-z; 3; 1-s)
  BigComplex f1 = gauss_2f1({zz + 1, 1 - zz, cx(2, bits), w}, ctx);
  BigComplex f2 = gauss_2f1({zz + 2, 2 - zz, cx(3, bits), w}, ctx);
  BigComplex y2p = -f1 - w * (zz + 1) * (1 - zz) * f2 / 2;
  return y1p - zz * y2p;
}

BigComplex digamma_one_plus_series(const BigComplex& w, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (!(abs(w) < 1)) throw DomainError("the psi(1+w) series needs |w| < 1");
  const double eps = epsilon(bits);
  BigComplex ww = rounded(w, bits);
  BigComplex sum = make_complex(-table.euler_gamma());
  BigComplex power = ww;  // w^(k-1)
  for (int k = 2;; ++k) {
    BigComplex term = power * table.zeta(k);
    if (k % 2 == 1) term = -term;
    sum += term;
    if (mag(power) < eps) break;
    if (k > 100000) throw RangeError("psi(1+w) series did not converge");
    power *= ww;
  }
  return sum;
}

BigComplex digamma(const BigComplex& w, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (is_nonpositive_integer(w)) throw DomainError("psi has a pole at a non-positive integer");
  BigComplex ww = rounded(w, bits);
  BigComplex shift = ww - 1;
  if (abs(shift) < BigReal::from_double(0.5, bits)) return digamma_one_plus_series(shift, table);

  // psi(w) = psi(w + m) - sum_{k<m} 1/(w + k), then the asymptotic series.
  const double target = 0.5 * table.context().digits() + 10;
  long m = std::max(0L, static_cast<long>(std::ceil(target - ww.re.to_double())));
  BigComplex acc = cx(0, bits);
  for (long k = 0; k < m; ++k) acc -= inverse(ww + k);
  BigComplex v = ww + m;
  BigComplex vinv = inverse(v);
  BigComplex vinv2 = vinv * vinv;
  BigComplex result = log(v) - vinv / 2 + acc;
  const double eps = epsilon(bits);
  BigComplex power = vinv2;
  double last = INFINITY;
  for (unsigned k = 1; k < 400; ++k) {
    BigComplex term = power * BigReal(bernoulli(2 * k) / Rational(2 * k), bits);
    double t = mag(term);
    if (t > last) break;  // asymptotic series: stop at the smallest term
    result -= term;
    last = t;
    if (t < eps * std::max(mag(result), 1e-300)) break;
    power *= vinv2;
  }
  return result;
}

BigComplex f21_log_near_one(const BigComplex& z, const BigComplex& w, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  BigComplex zz = rounded(z, bits);
  if (is_real_integer(zz) && !zz.re.is_zero()) throw DomainError("log expansion needs z not a nonzero integer");
  BigComplex u = cx(1, bits) - rounded(w, bits);
  if (!(abs(u) < 1)) throw DomainError("log expansion needs |1 - w| < 1");
  // F(a, b; a+b; w) = Gamma(a+b)/(Gamma(a)Gamma(b)) sum_n (a)_n (b)_n / n!^2
  //   [2 psi(n+1) - psi(a+n) - psi(b+n) - log(1-w)] (1-w)^n,  a = 1+z, b = 1-z
  BigComplex a = zz + 1, b = 1 - zz;
  BigComplex psi_n1 = make_complex(-table.euler_gamma());
  BigComplex psi_a = digamma(a, table), psi_b = digamma(b, table);
  BigComplex logu = log(u);
  BigComplex coef = cx(1, bits);  // (a)_n (b)_n / n!^2 * u^n
  BigComplex sum = cx(0, bits);
  const double eps = epsilon(bits);
  int quiet = 0;
  for (long n = 0;; ++n) {
    BigComplex term = coef * (psi_n1 * 2 - psi_a - psi_b - logu);
    sum += term;
    quiet = mag(term) <= eps * std::max(mag(sum), 1e-300) ? quiet + 1 : 0;
    if (n > 10 && quiet >= 3) break;
    if (n > 10'000'000) throw RangeError("log expansion did not converge");
    psi_n1 += make_complex(BigReal(1, bits) / (n + 1));
    psi_a += inverse(a + n);
    psi_b += inverse(b + n);
    coef = coef * (a + n) * (b + n) * u / ((n + 1) * (n + 1));
  }
  return sinc_pi(zz, table) * sum;
}

BigComplex A_eval(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (!(abs(z) < 1)) throw DomainError("A(z) series route needs |z| < 1");
  const double eps = epsilon(bits);
  BigComplex zz = rounded(z, bits);
  BigComplex power = zz;
  BigComplex sum = cx(0, bits);
  for (int k = 1;; ++k) {
    BigReal ak = k == 1 ? -table.log2()
                 : k % 2 == 0 ? table.zeta(k)
                              : (BigReal(pow2(1 - k), bits) - 1) * table.zeta(k);
    BigComplex term = power * ak / k;
    if (k % 2 == 0) term = -term;
    sum += term;
    if (mag(power) < eps) break;
    if (k > 1'000'000) throw RangeError("A(z) series did not converge");
    power *= zz;
  }
  return exp(sum);
}

BigComplex G_eval(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (!(abs(z) < 1)) throw DomainError("G(z) series route needs |z| < 1");
  const double eps = epsilon(bits);
  BigComplex zz = rounded(z, bits);
  BigComplex z4 = zz * zz * zz * zz;
  BigComplex power = zz * zz;
  BigComplex sum = cx(0, bits);
  for (int n = 0;; ++n) {
    sum += power * table.zeta(4 * n + 3);
    if (mag(power) < eps) break;
    if (n > 1'000'000) throw RangeError("G(z) series did not converge");
    power *= z4;
  }
  return sum;
}

BigComplex G_digamma(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  BigComplex zz = rounded(z, bits);
  BigComplex iz = zz.times_i();
  BigComplex total = digamma(iz + 1, table) + digamma(1 - iz, table) - digamma(zz + 1, table) - digamma(1 - zz, table);
  return total / 4;
}

namespace {

BigComplex G_any(const BigComplex& z, const ConstantTable& table) {
  if (abs(z) < BigReal::from_double(0.75, table.context().bits())) return G_eval(z, table);
  return G_digamma(z, table);
}

void require_nonzero(const BigComplex& d, const char* what) {
  if (d.re.is_zero() && d.im.is_zero()) throw DomainError(std::string(what) + " vanishes");
}

}  // namespace

BigComplex S_rhs(const BigReal& x, const BigComplex& z, const ConstantTable& table) {
  const PrecisionContext& ctx = table.context();
  const mpfr_prec_t bits = ctx.bits();
  if (!(x > 0) || x > 1) throw DomainError("S(x, z) needs 0 < x <= 1");
  BigComplex zz = rounded(z, bits);
  BigComplex iz = zz.times_i();
  BigComplex g = G_any(zz, table);
  BigComplex q1 = sinc_pi(zz, table);  // Y1(1, z)
  BigComplex q2 = sinc_pi(iz, table);  // Y1(1, iz)
  if (x == 1) return g * q1 * q2;
  require_nonzero(q1, "Y1(1, z)");
  require_nonzero(q2, "Y1(1, iz)");
  BigComplex xc = make_complex(with_precision(x, bits));
  BigComplex y1z = Y1(xc, zz, ctx), y1iz = Y1(xc, iz, ctx);
  BigComplex y2z = Y2(xc, zz, ctx), y2iz = Y2(xc, iz, ctx);
  return g * y1z * y1iz - y1iz * y2z / (q1 * 4) + y1z * y2iz / (q2 * 4);
}

BigComplex Sprime_one(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  BigComplex zz = rounded(z, bits);
  if (zz.re.is_zero() && zz.im.is_zero()) return cx(0, bits);
  BigComplex q = sinc_pi(zz, table) * sinhc_pi(zz, table);
  BigComplex g = G_any(zz, table);
  BigComplex pz = zz * table.pi();
  BigComplex s = sin(pz), sh = sinh(pz);
  require_nonzero(s, "sin(pi z)");
  require_nonzero(sh, "sinh(pi z)");
  BigComplex pi = cx(1, bits) * table.pi();
  BigComplex csc2 = pi * pi / (s * s);
  BigComplex csch2 = pi * pi / (sh * sh);
  BigComplex z2 = zz * zz;
  return -(z2 * q * g * g * 4) + z2 * q * (csc2 - csch2) / 4;
}

BigComplex M_rhs(const BigReal& x, const BigComplex& t, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (x < 0 || x > 1) throw DomainError("M(x, t) needs 0 <= x <= 1");
  BigComplex one_plus_i(BigReal(1, bits), BigReal(1, bits));
  BigComplex z = one_plus_i * rounded(t, bits) / 2;
  BigReal s = (with_precision(x, bits) + 1) / 2;
  BigComplex iz = z.times_i();
  BigComplex den = A_eval(-z, table) * A_eval(iz, table);
  require_nonzero(den, "A(-z) A(iz)");
  return U_table(s, -z, table) * U_table(s, iz, table) / den;
}

BigComplex T_rhs(const BigReal& x, const BigComplex& t, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  if (x < 0 || x > 1) throw DomainError("T(x, t) needs 0 <= x <= 1");
  if (t.re.is_zero() && t.im.is_zero()) return cx(1, bits);
  BigComplex one_plus_i(BigReal(1, bits), BigReal(1, bits));
  BigComplex z = one_plus_i * rounded(t, bits) / 2;
  BigComplex iz = z.times_i();
  if (x == 1) {
    // (1+i)/2 z A(z) A(-iz) {pi csc(pi z) - i pi csch(pi z) + 4 G(z)}
    BigComplex pz = z * table.pi();
    BigComplex s = sin(pz), sh = sinh(pz);
    require_nonzero(s, "sin(pi z)");
    require_nonzero(sh, "sinh(pi z)");
    BigComplex pi = cx(1, bits) * table.pi();
    BigComplex bracket = pi / s - (pi / sh).times_i() + G_any(z, table) * 4;
    return one_plus_i * z * A_eval(z, table) * A_eval(-iz, table) * bracket / 2;
  }
  BigReal s = (with_precision(x, bits) + 1) / 2;
  const PrecisionContext& ctx = table.context();
  BigComplex num = U_prime(s, iz, ctx) * U(s, -z, ctx) + U(s, iz, ctx) * U_prime(s, -z, ctx);
  BigComplex den = A_eval(-z, table) * A_eval(iz, table);
  require_nonzero(den, "A(-z) A(iz)");
  return -(make_complex(s) * one_plus_i * num / (z * den * 2));
}

BigReal jacobi_residual(const BigReal& x, int n, const PrecisionContext& ctx) {
  if (n < 1) throw DomainError("Jacobi identity needs n >= 1");
  const mpfr_prec_t bits = ctx.bits();
  BigComplex xc = make_complex(with_precision(x, bits));
  BigComplex nz = cx(n, bits);
  BigComplex r = Y1(xc, nz, ctx) + Y2(xc, nz, ctx) * (n % 2 == 0 ? n : -n);
  return abs(r);
}

namespace {

// U^(k)(1/2, w) = c_k(w) A(w), c = [1, 2w, -4w(1+w), 8w(1+w)(2-w)].
std::vector<BigComplex> u_derivatives(const BigComplex& w, const ConstantTable& table) {
  BigComplex a = A_eval(w, table);
  BigComplex onep = w + 1;
  return {a, w * 2 * a, -(w * onep * 4 * a), w * onep * (2 - w) * 8 * a};
}

// Derivatives 0..3 of the product of two functions by Leibniz's rule.
std::vector<BigComplex> product_derivatives(const std::vector<BigComplex>& f, const std::vector<BigComplex>& g) {
  static const long binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  std::vector<BigComplex> out;
  for (int k = 0; k < 4; ++k) {
    BigComplex acc = zero_like(f[0]);
    for (int j = 0; j <= k; ++j) acc += f[j] * g[k - j] * binom[k][j];
    out.push_back(acc);
  }
  return out;
}

BigComplex determinant(std::vector<std::vector<BigComplex>> m) {
  const std::size_t n = m.size();
  BigComplex det = one_like(m[0][0]);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (pivot_size(m[r][col]) > pivot_size(m[best][col])) best = r;
    if (pivot_size(m[best][col]) == 0) return zero_like(det);
    if (best != col) {
      std::swap(m[col], m[best]);
      det = -det;
    }
    det *= m[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      BigComplex factor = m[r][col] / m[col][col];
      for (std::size_t c = col; c < n; ++c) m[r][c] -= factor * m[col][c];
    }
  }
  return det;
}

}  // namespace

BigComplex wronskian_half(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  BigComplex zz = rounded(z, bits);
  BigComplex iz = zz.times_i();
  auto dz = u_derivatives(zz, table), dmz = u_derivatives(-zz, table);
  auto diz = u_derivatives(iz, table), dmiz = u_derivatives(-iz, table);
  std::vector<std::vector<BigComplex>> cols{product_derivatives(dz, diz), product_derivatives(dmz, diz),
                                            product_derivatives(dz, dmiz), product_derivatives(dmz, dmiz)};
  std::vector<std::vector<BigComplex>> m(4, std::vector<BigComplex>(4, cx(0, bits)));
  for (int k = 0; k < 4; ++k)
    for (int j = 0; j < 4; ++j) m[k][j] = cols[j][k];
  return determinant(std::move(m));
}

BigComplex wronskian_closed(const BigComplex& z, const ConstantTable& table) {
  const mpfr_prec_t bits = table.context().bits();
  BigComplex zz = rounded(z, bits);
  BigComplex z2 = zz * zz;
  BigComplex s = sinc_pi(zz, table), sh = sinhc_pi(zz, table);
  return -(z2 * z2 * z2 * s * s * sh * sh * 8192);
}

}  // namespace mzv
