#include "mzv/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <thread>

#include "mzv/compositions.hpp"
#include "mzv/constants.hpp"
#include "mzv/engine.hpp"
#include "mzv/errors.hpp"
#include "mzv/hypergeometrics.hpp"
#include "mzv/powerseries.hpp"
#include "mzv/reductions.hpp"

namespace mzv {

std::string to_string(CheckKind k) { return k == CheckKind::ExactCoeff ? "exact_coeff" : "numeric_residual"; }

namespace {

using Clock = std::chrono::steady_clock;

struct Env {
  PrecisionContext ctx;
  const ConstantTable& table;
  std::optional<double> tol;
  int sig;

  mpfr_prec_t bits() const { return ctx.bits(); }
  BigReal real(const Rational& q) const { return BigReal(q, ctx); }
  BigComplex complex(const Rational& re, const Rational& im = 0) const { return make_complex(re, im, ctx.bits()); }
};

enum class Scale { Auto, Absolute };

class Points {
 public:
  explicit Points(const Env& env) : env_(env) {}

  void compare(std::string label, const BigReal& value, const BigReal& ref, double tol, Scale scale = Scale::Auto) {
    BigReal d = abs(value - ref);
    BigReal r = abs(ref);
    if (scale == Scale::Auto && r > BigReal(Rational(1, 1000), env_.bits())) d /= r;
    add(std::move(label), value.to_string(env_.sig), ref.to_string(env_.sig), d.to_double(), tol);
  }

  void compare(std::string label, const BigComplex& value, const BigComplex& ref, double tol) {
    BigReal d = abs(value - ref);
    BigReal r = abs(ref);
    if (r > BigReal(Rational(1, 1000), env_.bits())) d /= r;
    add(std::move(label), to_string(value, env_.sig), to_string(ref, env_.sig), d.to_double(), tol);
  }

  void absolute(std::string label, const std::string& value, double residual, double tol) {
    add(std::move(label), value, "0", residual, tol);
  }

  void exact(std::string label, const SymbolicValue& value, const SymbolicValue& ref) {
    add(std::move(label), value.to_string(), ref.to_string(), magnitude(value - ref), 0);
  }

  void exact_zero(std::string label, bool zero, double size) {
    add(std::move(label), zero ? "0" : "nonzero", "0", zero ? 0 : std::max(size, 1e-300), 0);
  }

  std::vector<CheckPoint> take() { return std::move(points_); }

 private:
  void add(std::string label, std::string value, std::string ref, double residual, double tol) {
    points_.push_back({std::move(label), std::move(value), std::move(ref), residual, env_.tol.value_or(tol)});
  }

  const Env& env_;
  std::vector<CheckPoint> points_;
};

// Absolute engine tolerance, with margin, for a point held to `tol` in the
// residual scale of `ref`.
double engine_tol(const BigReal& ref, double tol) {
  double r = std::abs(ref.to_double());
  return 1e-2 * tol * (r > 1e-3 ? r : 1.0);
}

std::string zeta_label(const Composition& c, const Rational& x = 1) {
  std::string s = x == 1 ? "zeta(" : "zeta_" + to_string(x) + "(";
  return s + render(c) + ")";
}

void oracle_vs_closed(const Env& env, Points& pts, const Reduction& r, double tol, const EvalOptions& opt,
                      Scale scale = Scale::Auto) {
  BigReal ref = r.closed_form.realize(env.table);
  EvalResult e = eval_auto(r.target, r.x, engine_tol(ref, tol), env.ctx, opt);
  pts.compare(zeta_label(r.target, r.x), e.value, ref, tol, scale);
}

void check_euler_d2(const Env& env, Points& pts) {
  EvalOptions opt;
  opt.max_terms_unit = 4'000'000;
  for (int n = 2; n <= 6; ++n) oracle_vs_closed(env, pts, euler_depth2(n), 1e-8, opt);
}

void check_z31(const Env& env, Points& pts) {
  for (int n = 1; n <= 3; ++n) oracle_vs_closed(env, pts, z31_block(n), n == 1 ? 1e-9 : 1e-8, {});
}

void check_thm1(const Env& env, Points& pts) {
  for (int n = 0; n <= 2; ++n) oracle_vs_closed(env, pts, thm1(n), 1e-8, {});
}

void check_thm2(const Env& env, Points& pts) {
  for (int n = 0; n <= 2; ++n) oracle_vs_closed(env, pts, thm2(n), 1e-6, {});
}

void check_cor3(const Env& env, Points& pts) {
  for (int n = 0; n <= 2; ++n) oracle_vs_closed(env, pts, cor3(n), 1e-6, {});
}

EvalOptions alternating_budget() {
  EvalOptions opt;
  opt.max_terms_alternating = 100'000;
  return opt;
}

void check_cream(const Env& env, Points& pts) {
  const EvalOptions opt = alternating_budget();
  for (int n = 0; n <= 4; ++n) oracle_vs_closed(env, pts, cream(n).first, 1e-9, opt, Scale::Absolute);
  for (int n = 0; n <= 3; ++n) oracle_vs_closed(env, pts, cream(n).second, 1e-9, opt, Scale::Absolute);
}

void check_cheese(const Env& env, Points& pts) {
  const EvalOptions opt = alternating_budget();
  for (int n = 0; n <= 3; ++n) oracle_vs_closed(env, pts, cheese(n).first, 1e-9, opt, Scale::Absolute);
  for (int n = 0; n <= 3; ++n) oracle_vs_closed(env, pts, cheese(n).second, 1e-9, opt, Scale::Absolute);
}

void check_half_duals(const Env& env, Points& pts) {
  const BigReal half = env.real(Rational(1, 2));
  for (int family = 1; family <= kHalfDualFamilies; ++family)
    for (int n = 0; n <= 2; ++n) {
      Reduction r = half_dual(family, n);
      BigReal lhs = eval_truncated(r.target, half, 200);
      pts.compare(zeta_label(r.target, r.x), lhs, r.closed_form.realize(env.table), 1e-12, Scale::Absolute);
    }
}

void check_prop1(const Env& env, Points& pts) {
  struct Point {
    Rational x, zre, zim;
    double tol;
  };
  const Point points[] = {{Rational(1, 2), Rational(1, 4), 0, 1e-12},
                          {Rational(3, 4), Rational(1, 5), Rational(1, 10), 1e-12},
                          {Rational(1), Rational(3, 10), 0, 1e-8}};
  for (const auto& p : points) {
    BigComplex z = env.complex(p.zre, p.zim);
    BigComplex z4 = pow(z, 4);
    BigComplex coef = z * z;  // (-4)^n z^(4n+2)
    BigComplex lhs = env.complex(0);
    for (int n = 0; 4 * n + 2 <= 60; ++n) {
      double mag = std::max(abs(coef).to_double(), 1e-300);
      double tol = p.x == 1 ? 1e-2 * p.tol / mag : 1e-14 / std::max(mag, 1.0);
      Composition c = Composition{3} + Composition{1, 3}.repeated(n);
      EvalResult e = eval_auto(c, p.x, tol, env.ctx);
      lhs += coef * e.value;
      coef = coef * z4 * -4L;
    }
    BigComplex rhs = S_rhs(env.real(p.x), z, env.table);
    pts.compare("x=" + to_string(p.x) + " z=" + to_string(z, 6), lhs, rhs, p.tol);
  }
}

Composition cream_composition(int m) {
  return m % 2 == 0 ? Composition{-1, 1}.repeated(m / 2) : Composition{-1} + Composition{1, -1}.repeated(m / 2);
}

void check_prop2(const Env& env, Points& pts) {
  const std::pair<Rational, Rational> points[] = {{Rational(1, 2), Rational(1, 5)}, {Rational(4, 5), Rational(3, 10)}};
  for (const auto& [x, t] : points) {
    BigReal tb = env.real(t);
    BigReal tm = env.real(1);
    BigReal lhs = env.real(0);
    for (int m = 0; m <= 40; ++m) {
      double tol = 1e-14 / std::max(tm.to_double(), 1e-300);
      lhs += tm * eval_auto(cream_composition(m), x, std::min(tol, 1.0), env.ctx).value;
      tm *= tb;
    }
    BigComplex rhs = M_rhs(env.real(x), make_complex(tb), env.table);
    pts.compare("x=" + to_string(x) + " t=" + to_string(t), make_complex(lhs), rhs, 1e-10);
  }
}

void check_bbb14(const Env&, Points& pts) {
  auto gf = gf_coeff_route("bbb14", 10);
  auto c = c_sequence(10);
  for (int m = 0; m <= 10; ++m) pts.exact("[t^" + std::to_string(m) + "]", gf[m], c[m]);
}

void check_tmilk(const Env&, Points& pts) {
  auto gf = gf_coeff_route("tmilk", 10);
  auto c = c_prime_sequence(10);
  for (int m = 0; m <= 10; ++m) pts.exact("[t^" + std::to_string(m) + "]", gf[m], c[m]);
}

void check_sprime_gf(const Env&, Points& pts) {
  auto gf = gf_coeff_route("Sprime1", 14);
  for (int n = 0; n <= 3; ++n)
    pts.exact("n=" + std::to_string(n), gf[4 * n + 2] * pow(Rational(-1, 4), n), thm2(n).closed_form);
}

void check_jacobi(const Env& env, Points& pts) {
  for (int n = 1; n <= 5; ++n)
    for (int k = 1; k <= 9; ++k) {
      BigReal r = jacobi_residual(env.real(Rational(k, 10)), n, env.ctx);
      pts.absolute("n=" + std::to_string(n) + " x=0." + std::to_string(k), r.to_string(3), r.to_double(), 1e-40);
    }
}

template <class S>
void record_zero(Points& pts, const std::string& label, const S& s) {
  pts.exact_zero(label, s.is_zero(), s.max_magnitude());
}

void check_ode_annihilation(const Env&, Points& pts) {
  constexpr int order = 30;
  const GaussRational z = gauss(Rational(1, 3));
  const GaussRational iz = z.times_i();
  const GaussRational z2 = z * z;
  const GaussRational four_t2 = scaled(z2 * z2, Rational(4));

  auto p = Y1_series(z, order + 2) * Y1_series(iz, order + 2);
  record_zero(pts, "x chart: Y1(x,z) Y1(x,iz)", annihilation_series(p, z, order));

  // About x = 1 the operators read D1 = -w d/dw, D0 = -(1-w) d/dw; the
  // solution space there is spanned by Y2 and its logarithmic partner.
  using LS = LogSeries<GaussRational>;
  const LinearDerivation f{0, -1}, g{-1, 1};
  const int w_order = order + 6;
  LS y2 = LS::from_series(Y2_series_w(z, w_order)), y2i = LS::from_series(Y2_series_w(iz, w_order));
  LS pz = Y2_log_partner_w(z, w_order), piz = Y2_log_partner_w(iz, w_order);
  record_zero(pts, "w chart: Y2(z) Y2(iz)", lemma_operator(y2 * y2i, f, g, four_t2));
  record_zero(pts, "w chart: Y2(z) P(iz)", lemma_operator(y2 * piz, f, g, four_t2));
  record_zero(pts, "w chart: P(z) Y2(iz)", lemma_operator(pz * y2i, f, g, four_t2));
  record_zero(pts, "w chart: P(z) P(iz)", lemma_operator(pz * piz, f, g, four_t2));

  // S(x,z) itself, from exact x-coefficients of the nested sums.
  std::vector<GaussRational> s(order + 3, gauss(0));
  for (int m = 1; m <= order + 2; ++m) {
    GaussRational coef = z2;
    for (int n = 0; 2 * n + 1 <= m; ++n) {
      Rational c = coeff_x_exact(Composition{3} + Composition{1, 3}.repeated(n), m);
      s[m] += coef * gauss(c);
      coef = coef * z2 * z2 * gauss(-4);
    }
  }
  record_zero(pts, "x chart: S(x,z)", annihilation_series(Series<GaussRational>(s), z, order));

  // U products about s = 1/2 for f = 1-s, g = s, u = s - 1/2.
  const LinearDerivation fu{Rational(1, 2), -1}, gu{Rational(1, 2), 1};
  auto u = [&](const GaussRational& w) { return U_normalized_series(w, order + 4); };
  const GaussRational mz = -z, miz = -iz;
  record_zero(pts, "u chart: U(s,z) U(s,iz)", lemma_operator(u(z) * u(iz), fu, gu, four_t2).truncated(order));
  record_zero(pts, "u chart: U(s,-z) U(s,iz)", lemma_operator(u(mz) * u(iz), fu, gu, four_t2).truncated(order));
  record_zero(pts, "u chart: U(s,z) U(s,-iz)", lemma_operator(u(z) * u(miz), fu, gu, four_t2).truncated(order));
  record_zero(pts, "u chart: U(s,-z) U(s,-iz)", lemma_operator(u(mz) * u(miz), fu, gu, four_t2).truncated(order));

  // M(x,t) in x: [(1-x)d/dx]^2 [-(1+x)d/dx]^2 M = t^4 M.
  const Rational t(1, 3);
  std::vector<Rational> mc(order + 5, Rational(0));
  for (int m = 0; m <= order + 4; ++m) {
    Rational tk = 1;
    for (int k = 0; k <= m; ++k, tk *= t) mc[m] += tk * coeff_x_exact(cream_composition(k), m);
  }
  const LinearDerivation fm{1, -1}, gm{-1, -1};
  record_zero(pts, "x chart: M(x,t)",
              lemma_operator(Series<Rational>(mc), fm, gm, Rational(-(t * t * t * t))).truncated(order));
}

void check_wronskian(const Env& env, Points& pts) {
  for (const Rational& z : {Rational(1, 5), Rational(3, 10)}) {
    BigComplex zc = env.complex(z);
    pts.compare("z=" + to_string(z), wronskian_half(zc, env.table), wronskian_closed(zc, env.table), 1e-30);
  }
}

void check_maclaurin_opening(const Env&, Points& pts) {
  // [x^m] S(x,z) as polynomials in z: power of z -> coefficient.
  using Poly = std::map<int, Rational>;
  const Poly expected[] = {{{2, Rational(1)}},
                           {{2, Rational(1, 8)}},
                           {{2, Rational(1, 27)}, {6, Rational(-2, 27)}},
                           {{2, Rational(1, 64)}, {6, Rational(-7, 128)}}};
  for (int m = 1; m <= 4; ++m) {
    Poly got;
    Rational sign = 1;
    for (int n = 0; 2 * n + 1 <= m; ++n, sign *= -4) {
      Rational c = coeff_x_exact(Composition{3} + Composition{1, 3}.repeated(n), m);
      if (c != 0) got[4 * n + 2] += sign * c;
    }
    SymbolicValue diff;
    std::string text, ref;
    for (const auto& [k, c] : got) text += (text.empty() ? "" : " + ") + to_string(c) + "*z^" + std::to_string(k);
    for (const auto& [k, c] : expected[m - 1]) ref += (ref.empty() ? "" : " + ") + to_string(c) + "*z^" + std::to_string(k);
    double worst = 0;
    Poly all = got;
    for (const auto& [k, c] : expected[m - 1]) all[k] -= c;
    for (const auto& [k, c] : all) worst = std::max(worst, std::abs(c.get_d()));
    bool equal = worst == 0 && got.size() == expected[m - 1].size();
    pts.exact_zero("[x^" + std::to_string(m) + "] " + text + " vs " + ref, equal, worst);
  }
}

void check_gauss_sum(const Env& env, Points& pts) {
  for (const Rational& z : {Rational(1, 10), Rational(3, 10), Rational(9, 20)}) {
    BigComplex zc = env.complex(z);
    pts.compare("z=" + to_string(z), Y1(env.complex(1), zc, env.ctx), sinc_pi(zc, env.table), 1e-30);
  }
}

// g(z) = (z - p n) S(x, z) near z0 = p n. For a removable point the
// symmetric averages of g along each direction vanish like delta^2 and the
// central difference quotients agree across directions; a pole of any
// order violates one of the two.
void check_removable_sing(const Env& env, Points& pts) {
  const BigReal delta = env.real(Rational(1, 1000000));
  const BigReal r2 = sqrt(env.real(Rational(1, 2)));
  const BigComplex dirs[] = {env.complex(1), BigComplex(r2, r2)};
  const std::pair<Rational, Rational> ps[] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  for (const Rational& x : {Rational(1, 2), Rational(1)}) {
    BigReal xb = env.real(x);
    for (int n = 1; n <= 2; ++n)
      for (const auto& [pre, pim] : ps) {
        BigComplex z0 = env.complex(pre * n, pim * n);
        double worst = 0;
        std::vector<BigComplex> quotients;
        for (const auto& dir : dirs) {
          BigComplex h = dir * delta;
          BigComplex gp = h * S_rhs(xb, z0 + h, env.table);
          BigComplex gm = -h * S_rhs(xb, z0 - h, env.table);
          BigComplex avg = (gp + gm) * BigReal(Rational(1, 2), env.bits());
          worst = std::max(worst, abs(avg).to_double());
          quotients.push_back((gp - gm) / (h * 2L));
        }
        BigReal spread = abs(quotients[0] - quotients[1]);
        BigReal scale = max(abs(quotients[0]), env.real(1));
        worst = std::max(worst, (spread / scale).to_double());
        pts.absolute("x=" + to_string(x) + " z0=" + to_string(z0, 3), quotients[0].re.to_string(6), worst, 1e-8);
      }
  }
}

using CheckFn = void (*)(const Env&, Points&);

struct Entry {
  IdentityCheck check;
  CheckFn fn;
};

const std::vector<Entry>& entries() {
  using K = CheckKind;
  static const std::vector<Entry> table = {
      {{"EULER_D2", "zeta(n,1), n=2..6, oracle vs depth-2 reduction", {{"n", "2..6"}, {"max_terms", "4e6"}}, 1e-8,
        K::NumericResidual, 30},
       check_euler_d2},
      {{"Z31", "zeta({3,1}^n), n=1..3, vs 2 pi^(4n)/(4n+2)!", {{"n", "1..3"}, {"tol", "1e-9 (n=1), 1e-8"}}, 1e-8,
        K::NumericResidual, 60},
       check_z31},
      {{"THM1", "zeta(3,{1,3}^n), n=0..2, vs closed form", {{"n", "0..2"}}, 1e-8, K::NumericResidual, 60}, check_thm1},
      {{"THM2", "zeta(2,{1,3}^n), n=0..2, vs closed form", {{"n", "0..2"}}, 1e-6, K::NumericResidual, 90}, check_thm2},
      {{"COR3", "zeta(2,1,{3,1}^n), n=0..2, vs the zeta(3,{1,3}^n) closed form", {{"n", "0..2"}}, 1e-6,
        K::NumericResidual, 90},
       check_cor3},
      {{"CREAM", "zeta({-1,1}^n), n=0..4, and zeta(-1,{1,-1}^n), n=0..3, vs c_m", {{"max_terms", "1e5"}}, 1e-9,
        K::NumericResidual, 30},
       check_cream},
      {{"CHEESE", "zeta(-1,{-1,1}^n) and zeta(-1,-1,{1,-1}^n), n=0..3, vs c'_m", {{"max_terms", "1e5"}}, 1e-9,
        K::NumericResidual, 30},
       check_cheese},
      {{"HALF_DUALS", "eight x=1/2 families, n=0..2, truncated at N=200, vs c_m / c'_m", {{"N", "200"}}, 1e-12,
        K::NumericResidual, 10},
       check_half_duals},
      {{"PROP1", "S(x,z) series vs closed form", {{"points", "(0.5,0.25) (0.75,0.2+0.1i) (1,0.3)"}, {"z_order", "60"}},
        1e-8, K::NumericResidual, 120},
       check_prop1},
      {{"PROP2", "M(x,t) series vs U-product form", {{"points", "(0.5,0.2) (0.8,0.3)"}, {"t_order", "40"}}, 1e-10,
        K::NumericResidual, 60},
       check_prop2},
      {{"BBB14", "A(t/(1-i)) A(t/(1+i)) coefficients vs c_m, m=0..10", {{"order", "10"}}, 0, K::ExactCoeff, 5},
       check_bbb14},
      {{"TMILK", "cosecant-form generating function coefficients vs c'_m, m=0..10", {{"order", "10"}}, 0,
        K::ExactCoeff, 5},
       check_tmilk},
      {{"SPRIME_GF", "(-1)^n 4^-n [z^(4n+2)] S'(1,z) vs zeta(2,{1,3}^n) closed form, n=0..3", {{"n", "0..3"}}, 0,
        K::ExactCoeff, 5},
       check_sprime_gf},
      {{"JACOBI", "|Y1(x,n) + n(-1)^n Y2(x,n)|, n=1..5, x=0.1..0.9", {{"n", "1..5"}}, 1e-40, K::NumericResidual, 10},
       check_jacobi},
      {{"ODE_ANNIHILATION", "fourth-order operator on products of solutions, exact, order 30",
        {{"z", "1/3"}, {"t", "1/3"}, {"order", "30"}}, 0, K::ExactCoeff, 10},
       check_ode_annihilation},
      {{"WRONSKIAN", "Wronskian of the U products at s=1/2 vs closed form", {{"z", "0.2 0.3"}}, 1e-30,
        K::NumericResidual, 5},
       check_wronskian},
      {{"MACLAURIN_OPENING", "opening x-coefficients of S(x,z), exact", {{"m", "1..4"}}, 0, K::ExactCoeff, 5},
       check_maclaurin_opening},
      {{"GAUSS_SUM", "Y1(1,z) vs sin(pi z)/(pi z)", {{"z", "0.1 0.3 0.45"}}, 1e-30, K::NumericResidual, 30},
       check_gauss_sum},
      {{"REMOVABLE_SING", "(z - pn) S(x,z) near z = pn, p in {1,-1,i,-i}, n=1,2",
        {{"x", "0.5 1"}, {"offset", "1e-6"}, {"directions", "0 45deg"}}, 1e-8, K::NumericResidual, 30},
       check_removable_sing},
  };
  return table;
}

const Entry* find_entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.check.id == id) return &e;
  return nullptr;
}

struct Parsed {
  std::optional<double> tol;
  std::optional<int> digits;
};

Parsed parse_overrides(const Overrides& overrides) {
  Parsed p;
  for (const auto& [key, value] : overrides) {
    try {
      std::size_t used = 0;
      if (key == "tol") {
        p.tol = std::stod(value, &used);
        if (*p.tol < 0) throw UsageError("tol must be >= 0");
      } else if (key == "prec") {
        p.digits = std::stoi(value, &used);
        if (*p.digits < PrecisionContext::kMinDigits) throw UsageError("prec must be >= 30");
      } else {
        throw UsageError("unknown override '" + key + "'");
      }
      if (used != value.size()) throw UsageError("malformed value for '" + key + "': " + value);
    } catch (const std::logic_error&) {
      throw UsageError("malformed value for '" + key + "': " + value);
    }
  }
  return p;
}

}  // namespace

const std::vector<IdentityCheck>& registry() {
  static const std::vector<IdentityCheck> checks = [] {
    std::vector<IdentityCheck> out;
    for (const auto& e : entries()) out.push_back(e.check);
    return out;
  }();
  return checks;
}

const IdentityCheck* find_check(const std::string& id) {
  const Entry* e = find_entry(id);
  return e ? &e->check : nullptr;
}

VerificationReport run(const std::string& id, const Overrides& overrides) {
  const Entry* entry = find_entry(id);
  if (!entry) throw UsageError("unknown check id '" + id + "'");
  Parsed parsed = parse_overrides(overrides);
  PrecisionContext ctx = parsed.digits ? PrecisionContext(*parsed.digits) : PrecisionContext::from_environment();

  auto start = Clock::now();
  ConstantTable table(ctx);
  Env env{ctx, table, parsed.tol, std::min(ctx.digits() - 5, 30)};
  Points pts(env);
  entry->fn(env, pts);

  VerificationReport report;
  report.id = id;
  report.kind = entry->check.kind;
  report.points = pts.take();
  report.tolerance = parsed.tol.value_or(entry->check.tolerance);
  report.time_limit_s = entry->check.time_limit_s;
  report.digits = ctx.digits();
  for (const auto& p : report.points) {
    report.max_residual = std::max(report.max_residual, p.residual);
    report.pass = report.pass && p.pass();
  }
  report.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

SuiteSummary run_suite(const SuiteConfig& config) {
  std::vector<std::string> ids;
  if (config.ids) {
    for (const auto& e : entries())
      if (std::find(config.ids->begin(), config.ids->end(), e.check.id) != config.ids->end()) ids.push_back(e.check.id);
    for (const auto& id : *config.ids)
      if (!find_entry(id)) throw UsageError("unknown check id '" + id + "'");
  } else {
    for (const auto& e : entries()) ids.push_back(e.check.id);
  }
  parse_overrides(config.overrides);

  auto start = Clock::now();
  SuiteSummary summary;
  summary.reports.resize(ids.size());
  unsigned jobs = config.jobs ? config.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, std::max<std::size_t>(ids.size(), 1));

  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(ids.size());
  auto worker = [&] {
    for (std::size_t i; (i = next++) < ids.size();) {
      try {
        summary.reports[i] = run(ids[i], config.overrides);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  for (const auto& r : summary.reports) summary.pass = summary.pass && r.pass;
  summary.elapsed_s = std::chrono::duration<double>(Clock::now() - start).count();
  return summary;
}

}  // namespace mzv
