// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "mvk/mv_algebra.hpp"

namespace mvk {

struct LawViolation : std::runtime_error {
  LawViolation(const std::string& law, const std::string& witness);
  std::string law;
  std::string witness;
};

class SemiringTable;
using SemiringPtr = std::shared_ptr<const SemiringTable>;

// Commutative-by-flag idempotent semiring <S, join, mul, 0, 1> on explicit
// finite tables. The constructor verifies: join is an idempotent commutative
// associative operation with identity 0; mul is associative with identity 1
// and annihilator 0; mul distributes over join on both sides. Violations
// throw LawViolation with a witness.
class SemiringTable {
 public:
  SemiringTable(std::vector<std::string> labels,
                std::vector<std::size_t> join_table,
                std::vector<std::size_t> mul_table,
                std::size_t zero, std::size_t one);

  std::size_t size() const { return n_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * n_ + b]; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mul_[a * n_ + b]; }
  std::size_t zero() const { return zero_; }
  std::size_t one() const { return one_; }
  bool leq(std::size_t a, std::size_t b) const { return join(a, b) == b; }
  bool commutative() const { return commutative_; }
  bool same_tables(const SemiringTable& other) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> mul_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
  bool commutative_ = false;
};

bool same_semiring(const SemiringPtr& a, const SemiringPtr& b);

// The two semiring reducts of a finite MV-algebra: <A, join, odot, 0, 1> and
// <A, meet, oplus, 1, 0>, on the same carrier order. star is verified to be
// an isomorphism between them (throws std::logic_error otherwise).
std::pair<SemiringPtr, SemiringPtr> reducts(const MvAlgebra& a);

// Decision: is S the join/odot reduct of some MV-algebra? The negation map
// is forced pointwise: a* must be the unique maximal annihilator of a wrt
// mul. On success the witness map is returned; on refusal, the reason with
// a concrete witness. The search is capped (default 6 carrier elements) and
// refuses beyond the cap.
struct Recognition {
  bool ok = false;
  std::vector<std::size_t> star;
  std::string reason;  // refusal reason with witness, empty when ok
};

Recognition recognize_mv_semiring(const SemiringTable& s, std::size_t max_size = 6);

// Rebuild the MV-algebra from a recognized semiring: a oplus b = (a* mul b*)*.
AlgebraPtr reconstruct_mv(const SemiringTable& s, const std::vector<std::size_t>& star);

// Semiring ideals: join-closed, 0-containing, closed under multiplication by
// arbitrary elements. Primes are proper with ab in P implying a in P or b in P.
struct RSpec {
  SemiringPtr ring;
  std::vector<std::vector<std::size_t>> ideals;   // canonical order, improper included
  std::vector<std::size_t> prime_ids;             // indices into ideals
  // basic_open[a] = ordinals (into prime_ids) of primes not containing a
  std::vector<std::vector<std::size_t>> basic_open;
};

RSpec r_spec(SemiringPtr s);

}  // namespace mvk
