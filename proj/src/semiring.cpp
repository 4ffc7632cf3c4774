// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/semiring.hpp"

#include <algorithm>

namespace mvk {

LawViolation::LawViolation(const std::string& l, const std::string& w)
    : std::runtime_error(l + " violated at " + w), law(l), witness(w) {}

SemiringTable::SemiringTable(std::vector<std::string> labels,
                             std::vector<std::size_t> join_table,
                             std::vector<std::size_t> mul_table,
                             std::size_t zero, std::size_t one)
    : n_(labels.size()),
      labels_(std::move(labels)),
      join_(std::move(join_table)),
      mul_(std::move(mul_table)),
      zero_(zero),
      one_(one) {
  if (n_ == 0) throw std::invalid_argument("empty semiring carrier");
  if (join_.size() != n_ * n_ || mul_.size() != n_ * n_)
    throw std::invalid_argument("semiring table size mismatch");
  if (zero_ >= n_ || one_ >= n_) throw std::invalid_argument("constant index out of range");
  for (auto v : join_)
    if (v >= n_) throw std::invalid_argument("join entry out of range");
  for (auto v : mul_)
    if (v >= n_) throw std::invalid_argument("mul entry out of range");

  auto at = [this](const std::vector<std::size_t>& t, std::size_t a, std::size_t b) {
    return t[a * n_ + b];
  };
  auto pair_witness = [this](std::size_t a, std::size_t b) {
    return "(" + labels_[a] + ", " + labels_[b] + ")";
  };

  for (std::size_t a = 0; a < n_; ++a) {
    if (at(join_, a, a) != a) throw LawViolation("join idempotence", labels_[a]);
    if (at(join_, a, zero_) != a || at(join_, zero_, a) != a)
      throw LawViolation("join identity 0", labels_[a]);
    if (at(mul_, a, one_) != a || at(mul_, one_, a) != a)
      throw LawViolation("mul identity 1", labels_[a]);
    if (at(mul_, a, zero_) != zero_ || at(mul_, zero_, a) != zero_)
      throw LawViolation("mul annihilator 0", labels_[a]);
    for (std::size_t b = 0; b < n_; ++b) {
      if (at(join_, a, b) != at(join_, b, a))
        throw LawViolation("join commutativity", pair_witness(a, b));
      for (std::size_t c = 0; c < n_; ++c) {
        if (at(join_, at(join_, a, b), c) != at(join_, a, at(join_, b, c)))
          throw LawViolation("join associativity",
                             pair_witness(a, b) + " with " + labels_[c]);
        if (at(mul_, at(mul_, a, b), c) != at(mul_, a, at(mul_, b, c)))
          throw LawViolation("mul associativity",
                             pair_witness(a, b) + " with " + labels_[c]);
        if (at(mul_, a, at(join_, b, c)) != at(join_, at(mul_, a, b), at(mul_, a, c)))
          throw LawViolation("left distributivity",
                             labels_[a] + " over " + pair_witness(b, c));
        if (at(mul_, at(join_, b, c), a) != at(join_, at(mul_, b, a), at(mul_, c, a)))
          throw LawViolation("right distributivity",
                             labels_[a] + " over " + pair_witness(b, c));
      }
    }
  }
  commutative_ = true;
  for (std::size_t a = 0; a < n_ && commutative_; ++a)
    for (std::size_t b = 0; b < n_; ++b)
      if (at(mul_, a, b) != at(mul_, b, a)) {
        commutative_ = false;
        break;
      }
}

bool SemiringTable::same_tables(const SemiringTable& other) const {
  return n_ == other.n_ && zero_ == other.zero_ && one_ == other.one_ &&
         join_ == other.join_ && mul_ == other.mul_;
}

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_tables(*b);
}

std::pair<SemiringPtr, SemiringPtr> reducts(const MvAlgebra& a) {
  if (!a.finite()) throw std::domain_error("reducts need a finite carrier");
  std::size_t n = a.size();
  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = a.label(i);

  std::vector<std::size_t> join_vo(n * n), mul_vo(n * n), join_we(n * n), mul_we(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      join_vo[i * n + j] = a.join(i, j);
      mul_vo[i * n + j] = a.odot(i, j);
      join_we[i * n + j] = a.meet(i, j);
      mul_we[i * n + j] = a.oplus(i, j);
    }
  auto vo = std::make_shared<SemiringTable>(labels, std::move(join_vo), std::move(mul_vo),
                                            a.zero_index(), a.one_index());
  auto we = std::make_shared<SemiringTable>(labels, std::move(join_we), std::move(mul_we),
                                            a.one_index(), a.zero_index());

  // star must carry one reduct onto the other
  for (std::size_t i = 0; i < n; ++i) {
    if (a.star(vo->zero()) != we->zero() || a.star(vo->one()) != we->one())
      throw std::logic_error("star does not exchange the reduct constants");
    for (std::size_t j = 0; j < n; ++j) {
      if (a.star(vo->join(i, j)) != we->join(a.star(i), a.star(j)))
        throw std::logic_error("star does not carry join to meet");
      if (a.star(vo->mul(i, j)) != we->mul(a.star(i), a.star(j)))
        throw std::logic_error("star does not carry odot to oplus");
    }
  }
  return {vo, we};
}

Recognition recognize_mv_semiring(const SemiringTable& s, std::size_t max_size) {
  if (s.size() > max_size)
    throw std::length_error("recognition capped at carrier size " +
                            std::to_string(max_size));
  Recognition rec;
  if (!s.commutative()) {
    rec.reason = "multiplication is not commutative";
    return rec;
  }
  std::size_t n = s.size();
  std::vector<std::size_t> star(n);

  // (i) forces the negation pointwise: a* is the greatest annihilator of a,
  // and the annihilator set must be exactly its principal downset.
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<bool> ann(n, false);
    std::size_t top = s.zero();
    for (std::size_t b = 0; b < n; ++b)
      if (s.mul(a, b) == s.zero()) {
        ann[b] = true;
        top = s.join(top, b);
      }
    if (!ann[top]) {
      rec.reason = "annihilators of " + s.label(a) + " have no greatest element";
      return rec;
    }
    for (std::size_t b = 0; b < n; ++b) {
      bool below = s.leq(b, top);
      if (ann[b] != below) {
        rec.reason = "annihilator set of " + s.label(a) +
                     " is not the downset of " + s.label(top) + " (witness " +
                     s.label(b) + ")";
        return rec;
      }
    }
    star[a] = top;
  }

  // (ii) join must be recoverable from mul and the negation
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t rhs = star[s.mul(star[a], star[s.mul(star[a], b)])];
      if (s.join(a, b) != rhs) {
        rec.reason = "join of (" + s.label(a) + ", " + s.label(b) +
                     ") is not (a*.(a*.b)*)*: got " + s.label(rhs) + ", expected " +
                     s.label(s.join(a, b));
        return rec;
      }
    }

  rec.ok = true;
  rec.star = std::move(star);
  return rec;
}

AlgebraPtr reconstruct_mv(const SemiringTable& s, const std::vector<std::size_t>& star) {
  std::size_t n = s.size();
  if (star.size() != n) throw std::invalid_argument("star map size mismatch");
  for (auto v : star)
    if (v >= n) throw std::invalid_argument("star map entry out of range");
  std::vector<std::string> labels(n);
  std::vector<std::size_t> op(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    labels[a] = s.label(a);
    for (std::size_t b = 0; b < n; ++b) op[a * n + b] = star[s.mul(star[a], star[b])];
  }
  return MvAlgebra::from_raw_tables(std::move(labels), std::move(op), star, s.zero());
}

RSpec r_spec(SemiringPtr s) {
  if (!s) throw std::invalid_argument("null semiring");
  std::size_t n = s->size();
  if (n > 20) throw std::length_error("ideal enumeration capped at carrier size 20");
  RSpec out;
  out.ring = s;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    if (!(mask & (std::size_t{1} << s->zero()))) continue;
    auto in = [mask](std::size_t x) { return (mask >> x) & 1; };
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) {
      if (!in(x)) continue;
      for (std::size_t y = 0; y < n && ok; ++y) {
        if (in(y) && !in(s->join(x, y))) ok = false;
        if (!in(s->mul(x, y)) || !in(s->mul(y, x))) ok = false;
      }
    }
    if (!ok) continue;
    std::vector<std::size_t> elems;
    for (std::size_t x = 0; x < n; ++x)
      if (in(x)) elems.push_back(x);
    out.ideals.push_back(std::move(elems));
  }
  std::sort(out.ideals.begin(), out.ideals.end(),
            [](const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  for (std::size_t i = 0; i < out.ideals.size(); ++i) {
    const auto& p = out.ideals[i];
    if (p.size() == n) continue;  // primes are proper
    auto contains = [&p](std::size_t x) {
      return std::binary_search(p.begin(), p.end(), x);
    };
    bool prime = true;
    for (std::size_t x = 0; x < n && prime; ++x)
      for (std::size_t y = 0; y < n && prime; ++y)
        if (contains(s->mul(x, y)) && !contains(x) && !contains(y)) prime = false;
    if (prime) out.prime_ids.push_back(i);
  }

  out.basic_open.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t pi = 0; pi < out.prime_ids.size(); ++pi) {
      const auto& p = out.ideals[out.prime_ids[pi]];
      if (!std::binary_search(p.begin(), p.end(), x)) out.basic_open[x].push_back(pi);
    }
  return out;
}

}  // namespace mvk
