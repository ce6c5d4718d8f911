#pragma once

#include "mzv/constants.hpp"
#include "mzv/numeric.hpp"

namespace mzv {

struct HyperParams {
  BigComplex a;
  BigComplex b;
  BigComplex c;
  BigComplex x;
};

/// Gauss 2F1(a, b; c; x) by its defining series. Terminating parameters
/// are summed exactly for any x; otherwise |x| < 1, or x = 1 with
/// Re(c - a - b) > 0, where the partial sums are extrapolated in N.
BigComplex gauss_2f1(const HyperParams& p, const PrecisionContext& ctx);

/// Y1(x, z) = F(z, -z; 1; x), |x| <= 1.
BigComplex Y1(const BigComplex& x, const BigComplex& z, const PrecisionContext& ctx);
/// Y2(x, z) = (1 - x) F(1+z, 1-z; 2; 1-x), |1 - x| < 1.
BigComplex Y2(const BigComplex& x, const BigComplex& z, const PrecisionContext& ctx);
/// U(s, z) = Y1(s, z) - z Y2(s, z) and its s-derivative, 0 < s <= 1.
BigComplex U(const BigReal& s, const BigComplex& z, const PrecisionContext& ctx);
BigComplex U_prime(const BigReal& s, const BigComplex& z, const PrecisionContext& ctx);

/// sin(pi z)/(pi z) and sinh(pi z)/(pi z), both 1 at z = 0.
BigComplex sinc_pi(const BigComplex& z, const ConstantTable& table);
BigComplex sinhc_pi(const BigComplex& z, const ConstantTable& table);

/// psi(1 + w) = -gamma + sum_{k>=2} (-1)^k zeta(k) w^(k-1), |w| < 1.
BigComplex digamma_one_plus_series(const BigComplex& w, const ConstantTable& table);
/// psi(w) for any w off the poles, by recurrence and the asymptotic series.
BigComplex digamma(const BigComplex& w, const ConstantTable& table);

/// F(1+z, 1-z; 2; w) through its logarithmic expansion in powers of 1 - w,
/// |1 - w| < 1, z not a nonzero integer.
BigComplex f21_log_near_one(const BigComplex& z, const BigComplex& w, const ConstantTable& table);

/// A(z) = exp(sum (-1)^(k+1) a_k z^k / k), |z| < 1.
BigComplex A_eval(const BigComplex& z, const ConstantTable& table);
/// G(z) = sum z^(4n+2) zeta(4n+3), |z| < 1.
BigComplex G_eval(const BigComplex& z, const ConstantTable& table);
/// G(z) = (psi(1+iz) + psi(1-iz) - psi(1+z) - psi(1-z)) / 4.
BigComplex G_digamma(const BigComplex& z, const ConstantTable& table);

/// Closed right side for the generating function of zeta_x(3, {1,3}^n),
/// 0 < x <= 1.
BigComplex S_rhs(const BigReal& x, const BigComplex& z, const ConstantTable& table);
/// -4 z^2 Q G^2 + (1/4) pi^2 z^2 Q (csc^2(pi z) - csch^2(pi z)).
BigComplex Sprime_one(const BigComplex& z, const ConstantTable& table);
/// U(s,-z) U(s,iz) / (A(-z) A(iz)) with z = (1+i)t/2, s = (1+x)/2.
BigComplex M_rhs(const BigReal& x, const BigComplex& t, const ConstantTable& table);
/// Generating function of zeta_x(-1,{-1,1}^n) and zeta_x(-1,-1,{1,-1}^n);
/// at x = 1 the cosecant form is used.
BigComplex T_rhs(const BigReal& x, const BigComplex& t, const ConstantTable& table);

/// |Y1(x, n) + n (-1)^n Y2(x, n)|.
BigReal jacobi_residual(const BigReal& x, int n, const PrecisionContext& ctx);

/// Wronskian at s = 1/2 of U(s,z)U(s,iz), U(s,-z)U(s,iz), U(s,z)U(s,-iz),
/// U(s,-z)U(s,-iz), from the closed derivative values of U at s = 1/2.
BigComplex wronskian_half(const BigComplex& z, const ConstantTable& table);
/// -2^13 z^6 (sin(pi z)/(pi z))^2 (sinh(pi z)/(pi z))^2.
BigComplex wronskian_closed(const BigComplex& z, const ConstantTable& table);

}  // namespace mzv
