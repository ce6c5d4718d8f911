#include "mzv/reductions.hpp"

#include "mzv/constants.hpp"
#include "mzv/errors.hpp"

namespace mzv {

std::string to_string(Route r) {
  switch (r) {
    case Route::Thm1: return "thm1";
    case Route::Thm2: return "thm2";
    case Route::Cor3: return "cor3";
    case Route::Z31: return "z31";
    case Route::EulerDepth2: return "euler_depth2";
    case Route::Cream: return "cream";
    case Route::Cheese: return "cheese";
    case Route::HalfDual: return "half_dual";
    case Route::GfCoeff: return "gf_coeff";
    case Route::Singleton: return "singleton";
  }
  return "unknown";
}

namespace {

using Sym = SymbolicValue;
using GSym = GaussSymbolic;

void require_nonnegative(int n) {
  if (n < 0) throw DomainError("family index must be >= 0");
}

Sym zeta_sym(int k) { return Sym::zeta(k); }

Composition periodic(const Composition& prefix, const Composition& period, int n) {
  return prefix + period.repeated(n);
}

// n with comp == prefix + period^n, if any.
std::optional<int> match(const Composition& comp, const Composition& prefix, const Composition& period) {
  if (comp.depth() < prefix.depth()) return std::nullopt;
  std::size_t rest = comp.depth() - prefix.depth();
  if (period.depth() == 0 || rest % period.depth() != 0) return std::nullopt;
  int n = static_cast<int>(rest / period.depth());
  if (periodic(prefix, period, n) != comp) return std::nullopt;
  return n;
}

GSym gsym(const Sym& re) { return GSym(re, Sym()); }

Series<GSym> complexify(const Series<Sym>& s) {
  std::vector<GSym> out;
  for (const auto& c : s.coeffs()) out.push_back(gsym(c));
  return Series<GSym>(std::move(out));
}

GSym gauss_const(const Rational& re, const Rational& im) { return GSym(Sym(re), Sym(im)); }

Series<Sym> real_part_checked(const Series<GSym>& s, std::string_view what) {
  std::vector<Sym> out;
  for (int k = 0; k <= s.order(); ++k) {
    if (!s[k].im.is_zero())
      throw DomainError(std::string(what) + ": coefficient " + std::to_string(k) + " is not real");
    out.push_back(s[k].re);
  }
  return Series<Sym>(std::move(out));
}

Series<Sym> bbb14_series(int order) {
  Series<GSym> a = complexify(A_series(order));
  // 1/(1-i) = (1+i)/2 and 1/(1+i) = (1-i)/2
  Series<GSym> p = substitute_scale(a, gauss_const(Rational(1, 2), Rational(1, 2))) *
                   substitute_scale(a, gauss_const(Rational(1, 2), Rational(-1, 2)));
  return real_part_checked(p, "bbb14");
}

Series<Sym> tmilk_series(int order) {
  // z {pi csc(pi z) - i pi csch(pi z) + 4 G(z)} as a series in z
  const GSym one = gauss_const(1, 0);
  Series<GSym> csc = complexify(pi_csc_regular(order));
  Series<GSym> csch = complexify(pi_csch_regular(order));
  Series<GSym> g = complexify(G_series(order));
  Series<GSym> bracket = Series<GSym>::zero(one, order);
  bracket[0] = gauss_const(1, -1);
  for (int m = 1; m <= order; ++m) {
    const GSym& c = csc[m - 1];
    GSym ich = csch[m - 1].times_i();
    bracket[m] = c - ich + scaled(g[m - 1], Rational(4));
  }
  Series<GSym> a = complexify(A_series(order));
  Series<GSym> prod = a * substitute_scale(a, gauss_const(0, -1)) * bracket;
  prod = prod * gauss_const(Rational(1, 2), Rational(1, 2));
  // z = (1+i) t / 2
  return real_part_checked(substitute_scale(prod, gauss_const(Rational(1, 2), Rational(1, 2))), "tmilk");
}

Series<Sym> sprime1_series(int order) {
  Series<Sym> q = Q_series(order), g = G_series(order);
  Series<Sym> diff = csc2_regular(order) - csch2_regular(order);
  Series<Sym> z2 = Series<Sym>::zero(Sym(), order);
  if (order >= 2) z2[2] = Sym(1);
  Series<Sym> first = scale(z2 * q * g * g, Rational(-4));
  Series<Sym> second = scale(z2 * q * diff, Rational(1, 4));
  return first + second;
}

}  // namespace

Reduction euler_depth2(int n) {
  if (n < 2) throw DomainError("euler_depth2 needs n >= 2");
  Sym v = zeta_sym(n + 1) * Rational(n);
  for (int k = 1; k <= n - 2; ++k) v -= zeta_sym(n - k) * zeta_sym(k + 1);
  return {Composition{n, 1}, v * Rational(1, 2), Route::EulerDepth2, 1, "euler_depth2"};
}

Reduction z31_block(int n) {
  require_nonnegative(n);
  Sym v = Sym(Rational(2) / factorial(static_cast<unsigned long>(4 * n + 2))) * Sym::pi(4 * n);
  return {Composition{3, 1}.repeated(n), v, Route::Z31, 1, "z31"};
}

namespace {

Sym thm1_value(int n) {
  Sym v;
  for (int k = 0; k <= n; ++k) {
    Sym term = zeta_sym(4 * k + 3) * zeta4_block(n - k);
    v += k % 2 == 0 ? term : -term;
  }
  return v * pow2(-2 * n);
}

}  // namespace

Reduction thm1(int n) {
  require_nonnegative(n);
  return {Composition{3} + Composition{1, 3}.repeated(n), thm1_value(n), Route::Thm1, 1, "thm1"};
}

SymbolicValue thm1_alternate(int n) {
  require_nonnegative(n);
  Sym v;
  for (int k = 0; k <= n; ++k) {
    Rational c = Rational(2) / factorial(static_cast<unsigned long>(4 * k + 2)) * pow(Rational(-1, 4), n - k);
    v += Sym::pi(4 * k) * zeta_sym(4 * n - 4 * k + 3) * c;
  }
  return v;
}

Reduction thm2(int n) {
  require_nonnegative(n);
  Sym v;
  for (int k = 0; k <= n; ++k) {
    Sym inner = zeta_sym(4 * k + 2) * Rational(4 * k + 1);
    for (int j = 1; j <= k; ++j) inner -= zeta_sym(4 * j - 1) * zeta_sym(4 * k - 4 * j + 3) * Rational(4);
    Sym term = zeta4_block(n - k) * inner;
    v += k % 2 == 0 ? term : -term;
  }
  return {Composition{2} + Composition{1, 3}.repeated(n), v * pow2(-2 * n), Route::Thm2, 1, "thm2"};
}

Reduction cor3(int n) {
  require_nonnegative(n);
  return {Composition{2, 1} + Composition{3, 1}.repeated(n), thm1_value(n), Route::Cor3, 1, "cor3"};
}

std::vector<SymbolicValue> c_sequence(int mmax) {
  if (mmax < 0) throw DomainError("sequence length must be >= 0");
  Series<Sym> exponent = Series<Sym>::zero(Sym(), mmax);
  for (int k = 1; k <= mmax; ++k) exponent[k] = b_seq(k) * Rational(1, k);
  return exp_series(exponent).coeffs();
}

std::vector<SymbolicValue> c_prime_sequence(int mmax) {
  auto c = c_sequence(mmax);
  std::vector<Sym> out;
  for (int m = 0; m <= mmax; ++m) {
    Sym v;
    for (int k = 0; k <= m; ++k) v += c[k] * d_seq(m - k);
    out.push_back(v);
  }
  return out;
}

std::pair<Reduction, Reduction> cream(int n) {
  require_nonnegative(n);
  auto c = c_sequence(2 * n + 1);
  Reduction even{Composition{-1, 1}.repeated(n), c[2 * n], Route::Cream, 1, "cream_even"};
  Reduction odd{Composition{-1} + Composition{1, -1}.repeated(n), c[2 * n + 1], Route::Cream, 1, "cream_odd"};
  return {even, odd};
}

std::pair<Reduction, Reduction> cheese(int n) {
  require_nonnegative(n);
  auto c = c_prime_sequence(2 * n + 2);
  Reduction odd{Composition{-1} + Composition{-1, 1}.repeated(n), c[2 * n + 1], Route::Cheese, 1, "cheese_odd"};
  Reduction even{Composition{-1, -1} + Composition{1, -1}.repeated(n), c[2 * n + 2], Route::Cheese, 1,
                 "cheese_even"};
  return {odd, even};
}

namespace {

Composition half_dual_target(int family, int n) {
  switch (family) {
    case 1: return Composition{3, 1}.repeated(n);
    case 2: return Composition{2, 1} + Composition{3, 1}.repeated(n);
    case 3: return Composition{1, 1} + Composition{3, 1}.repeated(n);
    case 4: return Composition{1} + Composition{3, 1}.repeated(n);
    case 5: return Composition{3} + Composition{1, 3}.repeated(n);
    case 6: return Composition{2} + Composition{1, 3}.repeated(n);
    case 7: return Composition{1} + Composition{1, 3}.repeated(n);
    case 8: return Composition{1, 3}.repeated(n + 1);
    default: throw DomainError("unknown half-dual family " + std::to_string(family));
  }
}

// (index m into c or c', uses c', sign)
struct HalfDualValue {
  int m;
  bool prime;
  int sign;
};

HalfDualValue half_dual_value(int family, int n) {
  switch (family) {
    case 1: return {4 * n, false, 1};
    case 2: return {4 * n + 3, false, 1};
    case 3: return {4 * n + 2, false, 1};
    case 4: return {4 * n + 1, false, -1};
    case 5: return {4 * n + 3, true, -1};
    case 6: return {4 * n + 2, true, -1};
    case 7: return {4 * n + 1, true, -1};
    case 8: return {4 * n + 4, true, 1};
    default: throw DomainError("unknown half-dual family " + std::to_string(family));
  }
}

}  // namespace

std::pair<Composition, int> half_dual_partner(int family, int n) {
  require_nonnegative(n);
  HalfDualValue v = half_dual_value(family, n);
  Composition partner;
  if (!v.prime) {
    partner = v.m % 2 == 0 ? Composition{-1, 1}.repeated(v.m / 2) : Composition{-1} + Composition{1, -1}.repeated(v.m / 2);
  } else {
    partner = v.m % 2 == 1 ? Composition{-1} + Composition{-1, 1}.repeated(v.m / 2)
                           : Composition{-1, -1} + Composition{1, -1}.repeated(v.m / 2 - 1);
  }
  return {partner, v.sign};
}

Reduction half_dual(int family, int n) {
  require_nonnegative(n);
  Composition target = half_dual_target(family, n);
  HalfDualValue v = half_dual_value(family, n);
  Sym value = v.prime ? c_prime_sequence(v.m)[v.m] : c_sequence(v.m)[v.m];
  if (v.sign < 0) value = -value;
  return {target, value, Route::HalfDual, Rational(1, 2), "half_dual_" + std::to_string(family)};
}

Series<SymbolicValue> gf_coeff_route(std::string_view which, int order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  if (which == "bbb14") return bbb14_series(order);
  if (which == "tmilk") return tmilk_series(order);
  if (which == "S1") return G_series(order) * Q_series(order);
  if (which == "Sprime1") return sprime1_series(order);
  throw DomainError("unknown generating-function route '" + std::string(which) + "'");
}

std::vector<Reduction> find_reductions(const Composition& comp, const Rational& x) {
  std::vector<Reduction> out;
  if (x == Rational(1, 2)) {
    for (int family = 1; family <= kHalfDualFamilies; ++family) {
      for (int n = 0; n <= static_cast<int>(comp.depth()); ++n) {
        if (half_dual_target(family, n) == comp) {
          out.push_back(half_dual(family, n));
          break;
        }
        if (half_dual_target(family, n).depth() > comp.depth()) break;
      }
    }
    return out;
  }
  if (x != 1) return out;

  if (comp.depth() == 1) {
    const auto& a = comp[0];
    if (!a.barred && a.magnitude >= 2)
      out.push_back({comp, zeta_sym(a.magnitude), Route::Singleton, 1, "singleton"});
    if (a.barred && a.magnitude >= 2)
      out.push_back({comp, zeta_sym(a.magnitude) * (pow2(1 - a.magnitude) - 1), Route::Singleton, 1, "singleton"});
  }
  if (comp.depth() == 2 && !comp.has_bars() && comp[1].magnitude == 1 && comp[0].magnitude >= 2)
    out.push_back(euler_depth2(comp[0].magnitude));
  if (auto n = match(comp, {}, Composition{3, 1}); n) out.push_back(z31_block(*n));
  if (auto n = match(comp, Composition{3}, Composition{1, 3}); n) out.push_back(thm1(*n));
  if (auto n = match(comp, Composition{2}, Composition{1, 3}); n) out.push_back(thm2(*n));
  if (auto n = match(comp, Composition{2, 1}, Composition{3, 1}); n) out.push_back(cor3(*n));
  if (auto n = match(comp, {}, Composition{-1, 1}); n) out.push_back(cream(*n).first);
  if (auto n = match(comp, Composition{-1}, Composition{1, -1}); n) out.push_back(cream(*n).second);
  if (auto n = match(comp, Composition{-1}, Composition{-1, 1}); n) out.push_back(cheese(*n).first);
  if (auto n = match(comp, Composition{-1, -1}, Composition{1, -1}); n) out.push_back(cheese(*n).second);
  return out;
}

}  // namespace mzv
