#include "mzv/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "mzv/constants.hpp"

namespace mzv {

namespace {

Monomial multiply(const Monomial& a, const Monomial& b) {
  Monomial out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->first < j->first)) {
      out.push_back(*i++);
    } else if (i == a.end() || j->first < i->first) {
      out.push_back(*j++);
    } else {
      out.emplace_back(i->first, i->second + j->second);
      ++i;
      ++j;
    }
  }
  return out;
}

std::string atom_name(const Atom& a) {
  switch (a.kind) {
    case ConstantKind::Pi:
      return "pi";
    case ConstantKind::Log2:
      return "log(2)";
    case ConstantKind::EulerGamma:
      return "gamma";
    case ConstantKind::Zeta:
      return "zeta(" + std::to_string(a.arg) + ")";
  }
  return "?";
}

}  // namespace

SymbolicValue::SymbolicValue(const Rational& q) {
  if (sgn(q) != 0) terms_.emplace(Monomial{}, q);
}

SymbolicValue SymbolicValue::monomial(const Monomial& m, const Rational& q) {
  SymbolicValue v;
  v.add_term(m, q);
  return v;
}

SymbolicValue SymbolicValue::pi(int exponent) {
  if (exponent < 0) throw DomainError("negative power of pi");
  if (exponent == 0) return SymbolicValue(1);
  return monomial({{Atom{ConstantKind::Pi, 0}, exponent}}, 1);
}

SymbolicValue SymbolicValue::log2() { return monomial({{Atom{ConstantKind::Log2, 0}, 1}}, 1); }

SymbolicValue SymbolicValue::euler_gamma() { return monomial({{Atom{ConstantKind::EulerGamma, 0}, 1}}, 1); }

SymbolicValue SymbolicValue::zeta(int k) {
  if (k < 2) throw DomainError("zeta(" + std::to_string(k) + ") is not a convergent zeta value");
  if (k % 2 == 0) return zeta_even_symbolic(k);
  return monomial({{Atom{ConstantKind::Zeta, k}, 1}}, 1);
}

Rational SymbolicValue::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int SymbolicValue::weight() const {
  int best = 0;
  for (const auto& [m, q] : terms_) {
    int w = 0;
    for (const auto& [atom, e] : m) w += (atom.kind == ConstantKind::Zeta ? atom.arg : 1) * e;
    best = std::max(best, w);
  }
  return best;
}

void SymbolicValue::add_term(const Monomial& m, const Rational& q) {
  if (sgn(q) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

SymbolicValue& SymbolicValue::operator+=(const SymbolicValue& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

SymbolicValue& SymbolicValue::operator-=(const SymbolicValue& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, Rational(-q));
  return *this;
}

SymbolicValue operator*(const SymbolicValue& a, const SymbolicValue& b) {
  SymbolicValue out;
  for (const auto& [ma, qa] : a.terms_)
    for (const auto& [mb, qb] : b.terms_) out.add_term(multiply(ma, mb), Rational(qa * qb));
  return out;
}

SymbolicValue& SymbolicValue::operator*=(const SymbolicValue& o) {
  *this = *this * o;
  return *this;
}

SymbolicValue& SymbolicValue::operator*=(const Rational& q) {
  if (sgn(q) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= q;
  return *this;
}

SymbolicValue SymbolicValue::operator-() const { return *this * Rational(-1); }

SymbolicValue SymbolicValue::pow(unsigned n) const {
  SymbolicValue result(1);
  for (unsigned i = 0; i < n; ++i) result *= *this;
  return result;
}

std::string SymbolicValue::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, q] : terms_) {
    Rational c = q;
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    c = abs(c);
    bool wrote = false;
    if (m.empty() || c != 1) {
      os << c.get_str();
      wrote = true;
    }
    for (const auto& [atom, e] : m) {
      if (wrote) os << "*";
      os << atom_name(atom);
      if (e != 1) os << "^" << e;
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

BigReal SymbolicValue::realize(const ConstantTable& table) const {
  BigReal sum(table.context());
  for (const auto& [m, q] : terms_) {
    BigReal term(q, table.context());
    for (const auto& [atom, e] : m) {
      switch (atom.kind) {
        case ConstantKind::Pi:
          term *= mzv::pow(table.pi(), static_cast<long>(e));
          break;
        case ConstantKind::Log2:
          term *= mzv::pow(table.log2(), static_cast<long>(e));
          break;
        case ConstantKind::EulerGamma:
          term *= mzv::pow(table.euler_gamma(), static_cast<long>(e));
          break;
        case ConstantKind::Zeta:
          term *= mzv::pow(table.zeta(atom.arg), static_cast<long>(e));
          break;
      }
    }
    sum += term;
  }
  return sum;
}

double magnitude(const SymbolicValue& x) {
  double best = 0;
  for (const auto& [m, q] : x.terms()) best = std::max(best, std::fabs(q.get_d()));
  return best;
}

}  // namespace mzv
