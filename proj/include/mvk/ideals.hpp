// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mvk/mv_algebra.hpp"

namespace mvk {

// Ideal of a finite MV-algebra: contains 0, downward closed, closed under
// oplus. Elements are sorted carrier indices.
struct Ideal {
  AlgebraPtr alg;
  std::vector<std::size_t> elems;
  bool proper = true;

  bool contains(std::size_t a) const;
};

bool is_ideal(const MvAlgebra& a, const std::vector<std::size_t>& subset);

// Least ideal containing the seeds: all b <= a1 oplus ... oplus an with ai
// drawn from the seeds.
Ideal ideal_generated(AlgebraPtr a, const std::vector<std::size_t>& seeds);

// Every ideal, improper one included, in canonical order (by size, then by
// sorted element list). Carrier size capped at 20.
std::vector<Ideal> all_ideals(AlgebraPtr a);

// Proper primes, maximal ideals, radical and the basic open sets U(a) of the
// prime spectrum.
struct Spectra {
  AlgebraPtr alg;
  std::vector<Ideal> proper_ideals;          // canonical order
  std::vector<std::size_t> prime_ids;        // indices into proper_ideals
  std::vector<std::size_t> maximal_ids;      // indices into proper_ideals
  std::vector<std::size_t> radical;          // element indices: intersection of maximals
  // basic_open[a] = ordinals (into prime_ids) of primes not containing a
  std::vector<std::vector<std::size_t>> basic_open;
};

Spectra spectra(AlgebraPtr a);

// Quotient by an ideal: classes of the congruence a ~ b iff d(a,b) in I.
// Class representatives are the least member indices; the quotient algebra is
// a Table algebra over the classes.
struct QuotientAlgebra {
  AlgebraPtr parent;
  Ideal ideal;
  std::vector<std::size_t> class_of;    // parent index -> class index
  std::vector<std::size_t> class_rep;   // class index -> least parent index
  AlgebraPtr quotient;
};

QuotientAlgebra quotient(AlgebraPtr a, const Ideal& ideal);

}  // namespace mvk
