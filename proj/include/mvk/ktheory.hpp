// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvk/semimodule.hpp"

namespace mvk {

// Isomorphism class of finitely generated projectives, represented by the
// least-dimension, lexicographically least idempotent matrix.
struct ProjClass {
  std::size_t id = 0;
  std::size_t dim = 0;          // rows of the representative
  Matrix rep;                   // idempotent representative
  std::vector<Matrix> members;  // all enumerated idempotents in this class
  FiniteSemimodule module;      // row semimodule of the representative
};

struct ProjEnumeration {
  SemiringPtr S;
  std::size_t max_dim = 0;
  std::vector<ProjClass> classes;
  // sum[i][j] = class of rep_i (+) rep_j, nullopt when the sum leaves max_dim
  std::vector<std::vector<std::optional<std::size_t>>> sum;
  bool sum_closed = true;

  // Classify an idempotent matrix (any dim <= max_dim) by isomorphism of its
  // row semimodule; npos when it matches no enumerated class.
  std::size_t class_of(const Matrix& u) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// All idempotent n x n matrices for n = 0..max_dim, grouped into isomorphism
// classes of their row semimodules (dimension 0 contributes the zero class).
// Candidate count |S|^(n^2) per dimension is capped.
ProjEnumeration enumerate_projectives(SemiringPtr S, std::size_t max_dim,
                                      std::size_t max_candidates = 200'000);

// Block-diagonal sum; idempotency is preserved and checked.
Matrix direct_sum(const Matrix& u, const Matrix& v);

// Formal difference of multisets of projective classes.
struct K0Element {
  std::vector<std::size_t> pos;  // sorted class ids
  std::vector<std::size_t> neg;

  friend bool operator==(const K0Element& a, const K0Element& b) {
    return a.pos == b.pos && a.neg == b.neg;
  }
};

// Group completion of the projective-class monoid, with equality semi-decided
// inside the enumerated cap: [x] = [y] iff x + y' + r = y + x' + r for some
// witness class r.
class K0Group {
 public:
  explicit K0Group(const ProjEnumeration* enumeration);

  enum class Verdict { Equal, NotWithinCap, Unresolved };

  struct EqResult {
    Verdict verdict = Verdict::Unresolved;
    std::optional<std::size_t> witness;  // the r that closed the equation
  };

  const ProjEnumeration& enumeration() const { return *enum_; }
  K0Element k_of(std::size_t class_id) const;          // the canonical map
  K0Element add(const K0Element& a, const K0Element& b) const;
  K0Element negate(const K0Element& a) const;
  EqResult equal(const K0Element& a, const K0Element& b) const;

  // Fold a multiset of classes through the sum table; nullopt when a needed
  // sum leaves the cap.
  std::optional<std::size_t> fold_sum(std::vector<std::size_t> ids) const;

 private:
  const ProjEnumeration* enum_;
};

// Induced map on projective classes along an MV-homomorphism f: entrywise
// image of idempotents, [U] -> [f(U)]. Well-definedness (isomorphic members
// land in one class) and monoid-morphism behaviour on the sum tables are
// verified; violations throw std::logic_error.
struct K0Map {
  std::vector<std::size_t> class_map;  // dom class id -> cod class id

  std::size_t operator()(std::size_t c) const { return class_map[c]; }
};

K0Map k0_map(const MvHom& f, const ProjEnumeration& dom_classes,
             const ProjEnumeration& cod_classes);

K0Map compose(const K0Map& g, const K0Map& f);

// Deterministic CSV: one row per class with id, dim, representative and the
// sum-table row ("?" marks sums beyond the cap).
std::string k0_report_csv(const ProjEnumeration& e);

}  // namespace mvk
