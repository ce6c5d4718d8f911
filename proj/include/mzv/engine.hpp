#pragma once

#include <string>
#include <vector>

#include "mzv/compositions.hpp"
#include "mzv/numeric.hpp"
#include "mzv/rational.hpp"

namespace mzv {

enum class Method { Geometric, Richardson, EulerTransform, ExactCoeff };

std::string to_string(Method m);

struct EvalResult {
  BigReal value;
  BigReal err_bound;
  long terms_used = 0;
  Method method = Method::ExactCoeff;
  /// Set when err_bound exceeds the requested tolerance.
  bool warning = false;
};

struct EvalOptions {
  /// Largest outer index for x = 1 with all arguments unbarred.
  long max_terms_unit = 20'000'000;
  /// Largest outer index for x = 1 with some barred argument.
  long max_terms_alternating = 20'000'000;
  /// Largest outer index for x < 1 (the default for x <= 1/2 is 10^4).
  long max_terms_geometric = 20'000'000;
};

/// Running value of the nested sum over n1 <= N,
///   sum x^{n1} prod_j sigma_j^{n_j} n_j^{-|s_j|},  n1 > n2 > ... > nk >= 1,
/// advanced one outer index at a time by the prefix-sum recursion.
class NestedSum {
 public:
  NestedSum(const Composition& comp, const BigReal& x, mpfr_prec_t bits);

  void advance_to(long n);
  long index() const { return n_; }
  /// Partial sum at the current index.
  const BigReal& value() const { return acc_.front(); }

 private:
  Composition comp_;
  BigReal x_;
  BigReal xpow_;
  bool x_is_one_;
  std::vector<BigReal> acc_;  // acc_[j] = partial sum of the tail starting at argument j; acc_[k] = 1
  std::vector<BigReal> inv_pow_;
  BigReal term_;
  long n_ = 0;
};

/// Exact partial sum over n1 <= N for exact rational x.
Rational eval_truncated(const Composition& comp, const Rational& x, long N);
/// Partial sum over n1 <= N at the precision of x.
BigReal eval_truncated(const Composition& comp, const BigReal& x, long N);

/// Evaluates the full sum, choosing truncation or acceleration by the shape
/// of the input. Tolerance is absolute.
EvalResult eval_auto(const Composition& comp, const BigReal& x, double tol, const EvalOptions& options = {});
EvalResult eval_auto(const Composition& comp, const Rational& x, double tol, const PrecisionContext& ctx,
                     const EvalOptions& options = {});

/// [x^m] of the sum, as an exact rational.
Rational coeff_x_exact(const Composition& comp, long m);

}  // namespace mzv
