// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <string>

#include "mvk/mv_algebra.hpp"

namespace mvk {

// Element of the min-plus semifield over the integers with a top element:
// either an integer or TOP (the annihilator for addition-as-multiplication
// and the identity for min-as-join).
struct ZTop {
  bool top = false;
  mpz_class v = 0;

  static ZTop infinity() { return ZTop{true, 0}; }
  static ZTop of(mpz_class x) { return ZTop{false, std::move(x)}; }

  friend bool operator==(const ZTop& a, const ZTop& b) {
    return a.top == b.top && (a.top || a.v == b.v);
  }
  friend bool operator!=(const ZTop& a, const ZTop& b) { return !(a == b); }
};

std::string to_string(const ZTop& a);

// Min-plus presentation of a u-semifield: join is min with identity TOP,
// multiplication is integer addition with TOP absorbing, every non-TOP
// element is invertible via negation. The distinguished unit u >= 1 drives
// the truncation back to an MV-chain.
class MinPlusSemifield {
 public:
  explicit MinPlusSemifield(mpz_class unit);  // throws on unit < 1

  const mpz_class& unit() const { return unit_; }

  ZTop meet(const ZTop& a, const ZTop& b) const;  // min, the semiring join
  ZTop add(const ZTop& a, const ZTop& b) const;   // the semiring product
  ZTop neg(const ZTop& a) const;                  // throws std::domain_error on TOP
  bool leq(const ZTop& a, const ZTop& b) const;   // numeric order, TOP greatest

  // gamma(a) = (a join 0) meet u, landing in {0, ..., u} read as an index
  // into Chain(u). TOP clamps to u.
  std::size_t gamma(const ZTop& a) const;

  // The MV-chain tables computed through the semifield operations:
  // x oplus y = (x + y) meet u, x* = u - x. Equals Chain(u) table for table.
  AlgebraPtr gamma_truncate() const;

 private:
  mpz_class unit_;
};

// The lattice-group presentation <F, meet, +, -, TOP, 0, u> realized over
// the integers; the constructor is the bridge.
MinPlusSemifield lgroup_semifield_bridge(mpz_class unit);

}  // namespace mvk
