// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/semifield.hpp"

#include <stdexcept>

namespace mvk {

std::string to_string(const ZTop& a) { return a.top ? "T" : a.v.get_str(); }

MinPlusSemifield::MinPlusSemifield(mpz_class unit) : unit_(std::move(unit)) {
  if (unit_ < 1) throw std::invalid_argument("semifield unit must be >= 1");
}

ZTop MinPlusSemifield::meet(const ZTop& a, const ZTop& b) const {
  if (a.top) return b;
  if (b.top) return a;
  return ZTop::of(a.v <= b.v ? a.v : b.v);
}

ZTop MinPlusSemifield::add(const ZTop& a, const ZTop& b) const {
  if (a.top || b.top) return ZTop::infinity();
  return ZTop::of(a.v + b.v);
}

ZTop MinPlusSemifield::neg(const ZTop& a) const {
  if (a.top) throw std::domain_error("top has no additive inverse");
  return ZTop::of(-a.v);
}

bool MinPlusSemifield::leq(const ZTop& a, const ZTop& b) const {
  if (b.top) return true;
  if (a.top) return false;
  return a.v <= b.v;
}

std::size_t MinPlusSemifield::gamma(const ZTop& a) const {
  if (a.top) return std::size_t(unit_.get_ui());
  mpz_class clamped = a.v < 0 ? mpz_class(0) : a.v;
  if (clamped > unit_) clamped = unit_;
  return std::size_t(clamped.get_ui());
}

AlgebraPtr MinPlusSemifield::gamma_truncate() const {
  if (unit_ > 4096) throw std::length_error("truncation cap: unit too large for tables");
  std::size_t n = std::size_t(unit_.get_ui()) + 1;
  std::vector<std::string> labels(n);
  std::vector<std::size_t> op(n * n), st(n);
  ZTop u = ZTop::of(unit_);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = std::to_string(i);
    // x* = u - x through the group structure
    st[i] = gamma(add(u, neg(ZTop::of(mpz_class(long(i))))));
    for (std::size_t j = 0; j < n; ++j) {
      ZTop sum = add(ZTop::of(mpz_class(long(i))), ZTop::of(mpz_class(long(j))));
      op[i * n + j] = gamma(meet(sum, u));
    }
  }
  return MvAlgebra::from_raw_tables(std::move(labels), std::move(op), std::move(st), 0);
}

MinPlusSemifield lgroup_semifield_bridge(mpz_class unit) {
  return MinPlusSemifield(std::move(unit));
}

}  // namespace mvk
