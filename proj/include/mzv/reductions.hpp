#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/compositions.hpp"
#include "mzv/powerseries.hpp"
#include "mzv/rational.hpp"
#include "mzv/symbolic.hpp"

namespace mzv {

enum class Route { Thm1, Thm2, Cor3, Z31, EulerDepth2, Cream, Cheese, HalfDual, GfCoeff, Singleton };

std::string to_string(Route r);

/// A closed form for the sum indexed by `target`, evaluated at `x`
/// (1 unless the family lives at x = 1/2).
struct Reduction {
  Composition target;
  SymbolicValue closed_form;
  Route route;
  Rational x = 1;
  std::string family;
};

/// zeta(n, 1) = (n zeta(n+1) - sum_{k=1}^{n-2} zeta(n-k) zeta(k+1)) / 2.
Reduction euler_depth2(int n);
/// zeta({3,1}^n) = 2 pi^(4n) / (4n+2)!.
Reduction z31_block(int n);
/// zeta(3, {1,3}^n) = 4^-n sum_k (-1)^k zeta(4k+3) zeta({4}^(n-k)).
Reduction thm1(int n);
/// The same value as sum_k 2 pi^(4k)/(4k+2)! (-1/4)^(n-k) zeta(4n-4k+3).
SymbolicValue thm1_alternate(int n);
/// zeta(2, {1,3}^n).
Reduction thm2(int n);
/// zeta(2, 1, {3,1}^n), the dual of zeta(3, {1,3}^n).
Reduction cor3(int n);

/// c_0..c_mmax from exp(sum b_k x^k / k).
std::vector<SymbolicValue> c_sequence(int mmax);
/// c'_m = sum_k c_k d_(m-k).
std::vector<SymbolicValue> c_prime_sequence(int mmax);

/// zeta({-1,1}^n) = c_2n and zeta(-1, {1,-1}^n) = c_(2n+1).
std::pair<Reduction, Reduction> cream(int n);
/// zeta(-1, {-1,1}^n) = c'_(2n+1) and zeta(-1, -1, {1,-1}^n) = c'_(2n+2).
std::pair<Reduction, Reduction> cheese(int n);

inline constexpr int kHalfDualFamilies = 8;
/// One of the eight x = 1/2 evaluations, family 1..8:
///   1 ({3,1}^n)  2 (2,1,{3,1}^n)  3 (1,1,{3,1}^n)  4 (1,{3,1}^n)
///   5 (3,{1,3}^n)  6 (2,{1,3}^n)  7 (1,{1,3}^n)  8 ({1,3}^(n+1))
Reduction half_dual(int family, int n);
/// The alternating Euler sum each family's value equals, with its sign.
std::pair<Composition, int> half_dual_partner(int family, int n);

/// Maclaurin coefficients assembled by series algebra alone:
/// bbb14 = A(t/(1-i)) A(t/(1+i)); tmilk = the cosecant-form generating
/// function of c'_m; S1 = G(z) Q(z); Sprime1 = -4z^2 Q G^2 + z^2 Q pi^2 (csc^2 - csch^2)/4.
Series<SymbolicValue> gf_coeff_route(std::string_view which, int order);

/// Every known reduction whose target is `comp` at `x`.
std::vector<Reduction> find_reductions(const Composition& comp, const Rational& x);

}  // namespace mzv
