// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace mvk {

bool Ideal::contains(std::size_t a) const {
  return std::binary_search(elems.begin(), elems.end(), a);
}

bool is_ideal(const MvAlgebra& a, const std::vector<std::size_t>& subset) {
  if (!a.finite()) throw std::domain_error("ideals need a finite carrier");
  std::vector<bool> in(a.size(), false);
  for (auto v : subset) {
    if (v >= a.size()) return false;
    in[v] = true;
  }
  if (!in[a.zero_index()]) return false;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (a.leq(y, x) && !in[y]) return false;
      if (in[y] && !in[a.oplus(x, y)]) return false;
    }
  }
  return true;
}

Ideal ideal_generated(AlgebraPtr a, const std::vector<std::size_t>& seeds) {
  if (!a || !a->finite()) throw std::domain_error("ideals need a finite carrier");
  std::size_t n = a->size();
  for (auto s : seeds)
    if (s >= n) throw std::invalid_argument("seed index out of range");
  // close under oplus from the seeds, then downward
  std::vector<bool> sums(n, false);
  sums[a->zero_index()] = true;
  for (auto s : seeds) sums[s] = true;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t x = 0; x < n; ++x) {
      if (!sums[x]) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (!sums[y]) continue;
        std::size_t z = a->oplus(x, y);
        if (!sums[z]) {
          sums[z] = true;
          grew = true;
        }
      }
    }
  }
  Ideal ideal;
  ideal.alg = a;
  for (std::size_t y = 0; y < n; ++y) {
    for (std::size_t x = 0; x < n; ++x) {
      if (sums[x] && a->leq(y, x)) {
        ideal.elems.push_back(y);
        break;
      }
    }
  }
  ideal.proper = ideal.elems.size() < n;
  return ideal;
}

std::vector<Ideal> all_ideals(AlgebraPtr a) {
  if (!a || !a->finite()) throw std::domain_error("ideals need a finite carrier");
  std::size_t n = a->size();
  if (n > 20) throw std::length_error("ideal enumeration capped at carrier size 20");
  std::vector<Ideal> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (std::size_t{1} << i)) subset.push_back(i);
    if (!is_ideal(*a, subset)) continue;
    Ideal ideal;
    ideal.alg = a;
    ideal.elems = std::move(subset);
    ideal.proper = ideal.elems.size() < n;
    out.push_back(std::move(ideal));
  }
  std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
    if (x.elems.size() != y.elems.size()) return x.elems.size() < y.elems.size();
    return x.elems < y.elems;
  });
  return out;
}

Spectra spectra(AlgebraPtr a) {
  Spectra sp;
  sp.alg = a;
  auto ideals = all_ideals(a);
  for (auto& ideal : ideals)
    if (ideal.proper) sp.proper_ideals.push_back(std::move(ideal));

  std::size_t n = a->size();
  for (std::size_t i = 0; i < sp.proper_ideals.size(); ++i) {
    const Ideal& p = sp.proper_ideals[i];
    bool prime = true;
    for (std::size_t x = 0; x < n && prime; ++x)
      for (std::size_t y = 0; y < n && prime; ++y)
        if (p.contains(a->meet(x, y)) && !p.contains(x) && !p.contains(y)) prime = false;
    if (prime) sp.prime_ids.push_back(i);

    bool maximal = true;
    for (std::size_t j = 0; j < sp.proper_ideals.size() && maximal; ++j) {
      if (i == j) continue;
      const Ideal& q = sp.proper_ideals[j];
      if (q.elems.size() > p.elems.size() &&
          std::includes(q.elems.begin(), q.elems.end(), p.elems.begin(), p.elems.end()))
        maximal = false;
    }
    if (maximal) sp.maximal_ids.push_back(i);
  }

  for (std::size_t x = 0; x < n; ++x) {
    bool everywhere = true;
    for (auto mi : sp.maximal_ids)
      if (!sp.proper_ideals[mi].contains(x)) {
        everywhere = false;
        break;
      }
    if (everywhere) sp.radical.push_back(x);
  }

  sp.basic_open.resize(n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t pi = 0; pi < sp.prime_ids.size(); ++pi)
      if (!sp.proper_ideals[sp.prime_ids[pi]].contains(x)) sp.basic_open[x].push_back(pi);
  return sp;
}

QuotientAlgebra quotient(AlgebraPtr a, const Ideal& ideal) {
  if (!a || !a->finite()) throw std::domain_error("quotients need a finite carrier");
  if (!ideal.alg || !same_algebra(*ideal.alg, *a))
    throw std::invalid_argument("ideal belongs to a different algebra");
  if (!is_ideal(*a, ideal.elems)) throw std::invalid_argument("subset is not an ideal");

  std::size_t n = a->size();
  QuotientAlgebra q;
  q.parent = a;
  q.ideal = ideal;
  q.class_of.assign(n, SIZE_MAX);
  for (std::size_t x = 0; x < n; ++x) {
    if (q.class_of[x] != SIZE_MAX) continue;
    std::size_t cls = q.class_rep.size();
    q.class_rep.push_back(x);
    q.class_of[x] = cls;
    for (std::size_t y = x + 1; y < n; ++y)
      if (ideal.contains(a->distance(x, y))) q.class_of[y] = cls;
  }

  std::size_t m = q.class_rep.size();
  std::vector<std::string> labels(m);
  std::vector<std::size_t> op(m * m), st(m);
  for (std::size_t c = 0; c < m; ++c) {
    labels[c] = "[" + a->label(q.class_rep[c]) + "]";
    st[c] = q.class_of[a->star(q.class_rep[c])];
    for (std::size_t d = 0; d < m; ++d)
      op[c * m + d] = q.class_of[a->oplus(q.class_rep[c], q.class_rep[d])];
  }
  // well-definedness across representatives
  for (std::size_t x = 0; x < n; ++x) {
    if (st[q.class_of[x]] != q.class_of[a->star(x)])
      throw std::logic_error("quotient star not constant on classes");
    for (std::size_t y = 0; y < n; ++y)
      if (op[q.class_of[x] * m + q.class_of[y]] != q.class_of[a->oplus(x, y)])
        throw std::logic_error("quotient oplus not constant on classes");
  }
  q.quotient = MvAlgebra::from_raw_tables(std::move(labels), std::move(op), std::move(st),
                                          q.class_of[a->zero_index()]);
  return q;
}

}  // namespace mvk
