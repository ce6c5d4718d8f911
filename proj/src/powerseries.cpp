#include "mzv/powerseries.hpp"

#include "mzv/constants.hpp"

namespace mzv {

namespace {

using SymSeries = Series<SymbolicValue>;

SymSeries zeros(int order) { return SymSeries::zero(SymbolicValue(), order); }

}  // namespace

SymSeries A_series(int order) {
  SymSeries exponent = zeros(order);
  for (int k = 1; k <= order; ++k) {
    Rational c(k % 2 == 1 ? 1 : -1, k);
    exponent[k] = a_seq(k) * c;
  }
  return exp_series(exponent);
}

SymSeries G_series(int order) {
  SymSeries s = zeros(order);
  for (int n = 0; 4 * n + 2 <= order; ++n) s[4 * n + 2] = SymbolicValue::zeta(4 * n + 3);
  return s;
}

SymSeries sinc_pi_series(int order) {
  SymSeries s = zeros(order);
  for (int k = 0; 2 * k <= order; ++k) {
    Rational c = 1 / factorial(static_cast<unsigned long>(2 * k + 1));
    if (k % 2 == 1) c = -c;
    s[2 * k] = SymbolicValue::pi(2 * k) * c;
  }
  return s;
}

SymSeries sinhc_pi_series(int order) {
  SymSeries s = zeros(order);
  for (int k = 0; 2 * k <= order; ++k)
    s[2 * k] = SymbolicValue::pi(2 * k) * Rational(1 / factorial(static_cast<unsigned long>(2 * k + 1)));
  return s;
}

SymSeries Q_series(int order) { return sinc_pi_series(order) * sinhc_pi_series(order); }

SymSeries pi_cot_regular(int order) {
  // pi cot(pi z) = 1/z - 2 sum_{k>=1} zeta(2k) z^(2k-1)
  SymSeries s = zeros(order);
  for (int k = 1; 2 * k - 1 <= order; ++k) s[2 * k - 1] = SymbolicValue::zeta(2 * k) * Rational(-2);
  return s;
}

SymSeries pi_csc_regular(int order) {
  SymSeries s = zeros(order);
  for (int k = 1; 2 * k - 1 <= order; ++k) s[2 * k - 1] = SymbolicValue::zeta(2 * k) * Rational(2 * (1 - pow2(1 - 2 * k)));
  return s;
}

SymSeries pi_csch_regular(int order) {
  SymSeries s = zeros(order);
  for (int k = 1; 2 * k - 1 <= order; ++k) {
    Rational c = 2 * (1 - pow2(1 - 2 * k));
    if (k % 2 == 1) c = -c;
    s[2 * k - 1] = SymbolicValue::zeta(2 * k) * c;
  }
  return s;
}

SymSeries csc2_regular(int order) {
  // pi^2 csc^2(pi z) = -d/dz pi cot(pi z); the 1/z part contributes exactly 1/z^2.
  return -derivative(pi_cot_regular(order + 1));
}

SymSeries csch2_regular(int order) {
  // pi^2 csch^2(pi z) = -pi^2 csc^2(i pi z): the z^(2k-2) coefficient gains (-1)^k.
  SymSeries c = csc2_regular(order);
  for (int n = 0; n <= order; n += 4) c[n] = -c[n];
  return c;
}

SymSeries named_series(std::string_view which, int order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  if (which == "A") return A_series(order);
  if (which == "G") return G_series(order);
  if (which == "Q") return Q_series(order);
  if (which == "csc2") return csc2_regular(order);
  if (which == "csch2") return csch2_regular(order);
  throw DomainError("unknown series '" + std::string(which) + "'");
}

Series<GaussRational> named_series_Y1(const GaussRational& z, int order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  return Y1_series(z, order);
}

SymSeries to_symbolic(const Series<Rational>& s) {
  SymSeries out = zeros(s.order());
  for (int k = 0; k <= s.order(); ++k) out[k] = SymbolicValue(s[k]);
  return out;
}

Series<BigReal> realize(const SymSeries& s, const ConstantTable& table) {
  std::vector<BigReal> out;
  for (const auto& c : s.coeffs()) out.push_back(c.realize(table));
  return Series<BigReal>(std::move(out));
}

}  // namespace mzv
