#pragma once

#include <doctest.h>

#include <cstdint>
#include <random>
#include <string>

#include "mzv/numeric.hpp"

namespace testing {

inline const mzv::PrecisionContext& ctx60() {
  static const mzv::PrecisionContext ctx(60);
  return ctx;
}

inline mzv::BigReal ref(const char* digits, const mzv::PrecisionContext& ctx = ctx60()) {
  return mzv::BigReal::from_string(digits, ctx.bits());
}

inline double diff(const mzv::BigReal& a, const mzv::BigReal& b) { return mzv::abs(a - b).to_double(); }
inline double diff(const mzv::BigComplex& a, const mzv::BigComplex& b) { return mzv::abs(a - b).to_double(); }

inline mzv::BigComplex cref(const char* re, const char* im, const mzv::PrecisionContext& ctx = ctx60()) {
  return mzv::BigComplex(ref(re, ctx), ref(im, ctx));
}

// Deterministic source for the property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace testing
