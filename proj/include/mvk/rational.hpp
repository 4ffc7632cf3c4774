// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace mvk {

// Exact rational arithmetic everywhere; doubles only appear at the display
// and PSNR boundary.
using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
Rational parse_rational(const std::string& text);  // "p/q" or "p", canonicalized
std::string to_string(const Rational& q);
std::string to_decimal(const Rational& q, int significant = 6);

inline const Rational& rational_min(const Rational& a, const Rational& b) {
  return b < a ? b : a;
}
inline const Rational& rational_max(const Rational& a, const Rational& b) {
  return a < b ? b : a;
}

// Standard MV operations on the rational unit interval. Inputs must lie in
// [0,1]; results stay there.
Rational unit_oplus(const Rational& a, const Rational& b);  // min(a+b, 1)
Rational unit_star(const Rational& a);                      // 1-a
Rational unit_odot(const Rational& a, const Rational& b);   // max(a+b-1, 0)
bool in_unit_interval(const Rational& a);

// Deterministic stream of rationals in [0,1] with bounded denominator.
class RationalSampler {
 public:
  explicit RationalSampler(std::uint64_t seed, unsigned max_den = 64);
  Rational next();
  std::vector<Rational> vector(std::size_t n);

 private:
  std::mt19937_64 rng_;
  unsigned max_den_;
};

}  // namespace mvk
