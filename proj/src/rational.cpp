// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/rational.hpp"

#include <cstdio>
#include <stdexcept>

namespace mvk {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_decimal(const Rational& q, int significant) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", significant, q.get_d());
  return buf;
}

Rational unit_oplus(const Rational& a, const Rational& b) {
  Rational s = a + b;
  return s > 1 ? Rational(1) : s;
}

Rational unit_star(const Rational& a) { return Rational(1) - a; }

Rational unit_odot(const Rational& a, const Rational& b) {
  Rational s = a + b - 1;
  return s < 0 ? Rational(0) : s;
}

bool in_unit_interval(const Rational& a) { return a >= 0 && a <= 1; }

RationalSampler::RationalSampler(std::uint64_t seed, unsigned max_den)
    : rng_(seed), max_den_(max_den < 1 ? 1 : max_den) {}

Rational RationalSampler::next() {
  std::uniform_int_distribution<unsigned> dd(1, max_den_);
  unsigned den = dd(rng_);
  std::uniform_int_distribution<unsigned> dn(0, den);
  return make_rational(dn(rng_), den);
}

std::vector<Rational> RationalSampler::vector(std::size_t n) {
  std::vector<Rational> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(next());
  return out;
}

}  // namespace mvk
