#pragma once

#include <map>
#include <mutex>
#include <vector>

#include "mzv/numeric.hpp"
#include "mzv/rational.hpp"
#include "mzv/symbolic.hpp"

namespace mzv {

/// B_n from z/(e^z - 1) = sum B_n z^n / n!  (so B_1 = -1/2).
Rational bernoulli(unsigned n);
/// B_0 .. B_nmax.
std::vector<Rational> bernoulli_table(unsigned nmax);

/// zeta(k) for even k >= 2 as a rational multiple of pi^k.
SymbolicValue zeta_even_symbolic(int k);

/// Riemann zeta at an integer s >= 2 by Euler-Maclaurin summation;
/// absolute error below 10^(-digits-3).
BigReal zeta(int s, const PrecisionContext& ctx);
/// Euler's constant by Euler-Maclaurin summation of the harmonic numbers.
BigReal euler_gamma(const PrecisionContext& ctx);

/// Constants realized once per precision context. zeta values are computed
/// on first use; lookups are thread-safe.
class ConstantTable {
 public:
  explicit ConstantTable(const PrecisionContext& ctx);

  const PrecisionContext& context() const { return ctx_; }
  const BigReal& pi() const { return pi_; }
  const BigReal& log2() const { return log2_; }
  const BigReal& euler_gamma() const { return gamma_; }
  const BigReal& zeta(int s) const;

 private:
  PrecisionContext ctx_;
  BigReal pi_;
  BigReal log2_;
  BigReal gamma_;
  mutable std::mutex mutex_;
  mutable std::map<int, BigReal> zeta_;
};

/// zeta({4}^n) = 2^(2n+1) pi^(4n) / (4n+2)!.
SymbolicValue zeta4_block(int n);

/// a_k = Li_k((-1)^k).
SymbolicValue a_seq(int k);
/// Exponent sequence of the unit Euler sum generating function.
SymbolicValue b_seq(int k);
/// b_k rebuilt as [(-1)^(k+1) - i^k] a_k / (1-i)^k; throws if the factor is not real.
SymbolicValue b_seq_from_a(int k);
/// Companion factor sequence, d_0 = 1.
SymbolicValue d_seq(int k);

}  // namespace mzv
