// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mvk/semiring.hpp"

namespace mvk {

// Localization of a commutative semiring at a prime ideal P: fractions a/b
// with b outside P, identified when adk = bck for some denominator k. The
// fraction semiring is rebuilt as a SemiringTable (laws re-verified).
struct Localization {
  SemiringPtr base;
  std::vector<std::size_t> prime;                    // sorted
  std::vector<std::size_t> denoms;                   // complement of prime, sorted
  SemiringPtr table;                                 // the localized semiring
  // class_of[a][d] with d indexing denoms: the fraction class of a/denoms[d]
  std::vector<std::vector<std::size_t>> class_of;
  // canonical representative (a, b) of each class: least (a, b) lexicographic
  std::vector<std::pair<std::size_t, std::size_t>> reps;

  std::size_t fraction(std::size_t a, std::size_t b) const;  // b must be a denom
};

Localization localize(SemiringPtr s, const std::vector<std::size_t>& prime);

// Unique maximal proper semiring ideal.
bool is_local(SemiringPtr s);

// Stalkwise data over R-Spec plus the section semiring: the image of
// s -> (s/1 at every prime), with operations taken pointwise.
struct GlobalSections {
  SemiringPtr base;
  RSpec spec;
  std::vector<Localization> stalks;                 // one per prime
  std::vector<bool> stalk_local;                    // is_local per stalk
  std::vector<std::vector<std::size_t>> sections;   // distinct tuples, canonical order
  SemiringPtr section_ring;                         // semiring on those tuples
  std::vector<std::size_t> phi;                     // base index -> section index
  bool phi_injective = false;
  bool phi_surjective = false;                      // onto the built carrier
  bool phi_homomorphism = false;
};

GlobalSections global_sections(SemiringPtr s);

// The MV route: reduct of A, its global sections, recognition of the section
// ring as an MV-semiring, reconstruction, and a table-level comparison of
// the transported operations with A's own.
struct MvSheafRecord {
  GlobalSections sections;
  Recognition recognition;
  AlgebraPtr reconstructed;    // null when recognition refuses
  bool tables_match = false;   // phi carries oplus/star/0 exactly
};

MvSheafRecord mv_global_sections(AlgebraPtr a);

}  // namespace mvk
