#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mzv/numeric.hpp"
#include "mzv/rational.hpp"

namespace mzv {

class ConstantTable;

enum class ConstantKind : int { Pi = 0, Log2 = 1, EulerGamma = 2, Zeta = 3 };

/// One transcendental constant; `arg` is the zeta argument (unused otherwise).
struct Atom {
  ConstantKind kind;
  int arg = 0;
  auto operator<=>(const Atom&) const = default;
};

/// Sorted (atom, exponent) pairs with positive exponents; empty is the unit monomial.
using Monomial = std::vector<std::pair<Atom, int>>;

/// Exact rational linear combination of monomials in pi, log 2, gamma and
/// zeta values. Even zeta values are always rewritten as rational multiples
/// of powers of pi, so equal values have equal representations over the
/// basis {pi, log 2, gamma, zeta(odd)}.
class SymbolicValue {
 public:
  SymbolicValue() = default;
  explicit SymbolicValue(const Rational& q);
  explicit SymbolicValue(long q) : SymbolicValue(Rational(q)) {}

  static SymbolicValue pi(int exponent = 1);
  static SymbolicValue log2();
  static SymbolicValue euler_gamma();
  /// zeta(k) for k >= 2; even k are expanded through the Bernoulli numbers.
  static SymbolicValue zeta(int k);

  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  /// Coefficient of a monomial (0 if absent).
  Rational coefficient(const Monomial& m) const;
  /// Weight of the heaviest monomial (pi and log 2 count 1, zeta(k) counts k).
  int weight() const;

  SymbolicValue& operator+=(const SymbolicValue& o);
  SymbolicValue& operator-=(const SymbolicValue& o);
  SymbolicValue& operator*=(const SymbolicValue& o);
  SymbolicValue& operator*=(const Rational& q);
  SymbolicValue operator-() const;

  friend SymbolicValue operator+(SymbolicValue a, const SymbolicValue& b) { return a += b; }
  friend SymbolicValue operator-(SymbolicValue a, const SymbolicValue& b) { return a -= b; }
  friend SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b);
  friend SymbolicValue operator*(SymbolicValue a, const Rational& q) { return a *= q; }
  friend SymbolicValue operator*(const Rational& q, SymbolicValue a) { return a *= q; }
  friend bool operator==(const SymbolicValue& a, const SymbolicValue& b) { return a.terms_ == b.terms_; }

  SymbolicValue pow(unsigned n) const;

  /// Human-readable form, e.g. "1/360*pi^4*zeta(3) - 1/4*zeta(7)".
  std::string to_string() const;
  BigReal realize(const ConstantTable& table) const;

 private:
  static SymbolicValue monomial(const Monomial& m, const Rational& q);
  void add_term(const Monomial& m, const Rational& q);

  std::map<Monomial, Rational> terms_;
};

inline SymbolicValue zero_like(const SymbolicValue&) { return SymbolicValue(); }
inline SymbolicValue one_like(const SymbolicValue&) { return SymbolicValue(1); }
inline SymbolicValue scaled(const SymbolicValue& x, const Rational& q) { return x * q; }
inline bool is_zero(const SymbolicValue& x) { return x.is_zero(); }
/// Largest absolute rational coefficient; 0 exactly for the zero value.
double magnitude(const SymbolicValue& x);

using GaussSymbolic = Complex<SymbolicValue>;

}  // namespace mzv
