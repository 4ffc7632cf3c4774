// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/sheaf.hpp"

#include <algorithm>
#include <numeric>

namespace mvk {

namespace {

bool is_semiring_ideal(const SemiringTable& s, const std::vector<std::size_t>& subset) {
  std::vector<bool> in(s.size(), false);
  for (auto v : subset) {
    if (v >= s.size()) return false;
    in[v] = true;
  }
  if (!in[s.zero()]) return false;
  for (std::size_t x = 0; x < s.size(); ++x) {
    if (!in[x]) continue;
    for (std::size_t y = 0; y < s.size(); ++y) {
      if (in[y] && !in[s.join(x, y)]) return false;
      if (!in[s.mul(x, y)] || !in[s.mul(y, x)]) return false;
    }
  }
  return true;
}

}  // namespace

std::size_t Localization::fraction(std::size_t a, std::size_t b) const {
  auto it = std::lower_bound(denoms.begin(), denoms.end(), b);
  if (it == denoms.end() || *it != b)
    throw std::invalid_argument("denominator lies in the prime");
  return class_of[a][std::size_t(it - denoms.begin())];
}

Localization localize(SemiringPtr s, const std::vector<std::size_t>& prime) {
  if (!s) throw std::invalid_argument("null semiring");
  if (!s->commutative()) throw std::invalid_argument("localization needs commutativity");
  std::size_t n = s->size();
  std::vector<std::size_t> p = prime;
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() >= n) throw std::invalid_argument("prime must be proper");
  if (!is_semiring_ideal(*s, p)) throw std::invalid_argument("subset is not an ideal");
  auto in_p = [&p](std::size_t x) { return std::binary_search(p.begin(), p.end(), x); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (in_p(s->mul(x, y)) && !in_p(x) && !in_p(y))
        throw std::invalid_argument("ideal is not prime");

  Localization loc;
  loc.base = s;
  loc.prime = p;
  for (std::size_t x = 0; x < n; ++x)
    if (!in_p(x)) loc.denoms.push_back(x);
  std::size_t nd = loc.denoms.size();

  // a/b = c/d iff adk = bck for some denominator k
  auto equiv = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) {
    for (auto k : loc.denoms)
      if (s->mul(s->mul(a, d), k) == s->mul(s->mul(b, c), k)) return true;
    return false;
  };

  std::size_t pairs = n * nd;
  std::vector<std::size_t> cls(pairs, SIZE_MAX);
  std::vector<std::pair<std::size_t, std::size_t>> reps;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bi = 0; bi < nd; ++bi) {
      std::size_t id = a * nd + bi;
      if (cls[id] != SIZE_MAX) continue;
      std::size_t c = reps.size();
      reps.emplace_back(a, loc.denoms[bi]);
      cls[id] = c;
      for (std::size_t a2 = a; a2 < n; ++a2)
        for (std::size_t bi2 = (a2 == a ? bi + 1 : 0); bi2 < nd; ++bi2)
          if (cls[a2 * nd + bi2] == SIZE_MAX &&
              equiv(a, loc.denoms[bi], a2, loc.denoms[bi2]))
            cls[a2 * nd + bi2] = c;
    }

  // the defining relation must already be an equivalence (transitivity check)
  for (std::size_t i = 0; i < pairs; ++i)
    for (std::size_t j = 0; j < pairs; ++j)
      if ((cls[i] == cls[j]) !=
          equiv(i / nd, loc.denoms[i % nd], j / nd, loc.denoms[j % nd]))
        throw std::logic_error("fraction relation failed to be an equivalence");

  std::size_t k = reps.size();
  loc.class_of.assign(n, std::vector<std::size_t>(nd));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bi = 0; bi < nd; ++bi) loc.class_of[a][bi] = cls[a * nd + bi];

  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c)
    labels[c] = "[" + s->label(reps[c].first) + "]/[" + s->label(reps[c].second) + "]";

  auto fr = [&](std::size_t a, std::size_t b) {
    auto it = std::lower_bound(loc.denoms.begin(), loc.denoms.end(), b);
    return loc.class_of[a][std::size_t(it - loc.denoms.begin())];
  };

  std::vector<std::size_t> join_table(k * k), mul_table(k * k);
  for (std::size_t c = 0; c < k; ++c)
    for (std::size_t d = 0; d < k; ++d) {
      auto [a, b] = reps[c];
      auto [e, f] = reps[d];
      join_table[c * k + d] = fr(s->join(s->mul(a, f), s->mul(b, e)), s->mul(b, f));
      mul_table[c * k + d] = fr(s->mul(a, e), s->mul(b, f));
    }
  std::size_t zero = fr(s->zero(), s->one());
  std::size_t one = fr(s->one(), s->one());
  loc.table = std::make_shared<SemiringTable>(std::move(labels), std::move(join_table),
                                              std::move(mul_table), zero, one);
  loc.reps = std::move(reps);

  // operations must not depend on the chosen representatives
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t bi = 0; bi < nd; ++bi)
      for (std::size_t e = 0; e < n; ++e)
        for (std::size_t fi = 0; fi < nd; ++fi) {
          std::size_t b = loc.denoms[bi], f = loc.denoms[fi];
          std::size_t c1 = loc.class_of[a][bi], c2 = loc.class_of[e][fi];
          if (loc.table->mul(c1, c2) != fr(s->mul(a, e), s->mul(b, f)))
            throw std::logic_error("fraction product not constant on classes");
          if (loc.table->join(c1, c2) !=
              fr(s->join(s->mul(a, f), s->mul(b, e)), s->mul(b, f)))
            throw std::logic_error("fraction join not constant on classes");
        }
  return loc;
}

bool is_local(SemiringPtr s) {
  RSpec rs = r_spec(s);
  std::size_t n = s->size();
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < rs.ideals.size(); ++i) {
    const auto& p = rs.ideals[i];
    if (p.size() == n) continue;
    bool max = true;
    for (std::size_t j = 0; j < rs.ideals.size() && max; ++j) {
      const auto& q = rs.ideals[j];
      if (q.size() == n || q.size() <= p.size()) continue;
      if (std::includes(q.begin(), q.end(), p.begin(), p.end())) max = false;
    }
    if (max) maximal.push_back(i);
  }
  return maximal.size() == 1;
}

GlobalSections global_sections(SemiringPtr s) {
  GlobalSections gs;
  gs.base = s;
  gs.spec = r_spec(s);
  std::size_t n = s->size();

  for (auto pid : gs.spec.prime_ids) {
    gs.stalks.push_back(localize(s, gs.spec.ideals[pid]));
    gs.stalk_local.push_back(is_local(gs.stalks.back().table));
  }

  gs.phi.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<std::size_t> tuple;
    tuple.reserve(gs.stalks.size());
    for (const auto& stalk : gs.stalks) tuple.push_back(stalk.fraction(x, s->one()));
    auto it = std::find(gs.sections.begin(), gs.sections.end(), tuple);
    if (it == gs.sections.end()) {
      gs.phi[x] = gs.sections.size();
      gs.sections.push_back(std::move(tuple));
    } else {
      gs.phi[x] = std::size_t(it - gs.sections.begin());
    }
  }
  gs.phi_injective = gs.sections.size() == n;
  gs.phi_surjective = true;  // carrier is the image by construction

  // transported operations; well defined iff independent of the preimage
  std::size_t k = gs.sections.size();
  std::vector<std::size_t> pre(k);
  for (std::size_t x = n; x-- > 0;) pre[gs.phi[x]] = x;
  std::vector<std::string> labels(k);
  std::vector<std::size_t> join_table(k * k), mul_table(k * k);
  for (std::size_t c = 0; c < k; ++c) {
    labels[c] = "s(" + s->label(pre[c]) + ")";
    for (std::size_t d = 0; d < k; ++d) {
      join_table[c * k + d] = gs.phi[s->join(pre[c], pre[d])];
      mul_table[c * k + d] = gs.phi[s->mul(pre[c], pre[d])];
    }
  }
  gs.section_ring = std::make_shared<SemiringTable>(
      std::move(labels), std::move(join_table), std::move(mul_table),
      gs.phi[s->zero()], gs.phi[s->one()]);

  // the transported table must agree with the pointwise stalk operations
  gs.phi_homomorphism = true;
  for (std::size_t x = 0; x < n && gs.phi_homomorphism; ++x)
    for (std::size_t y = 0; y < n && gs.phi_homomorphism; ++y) {
      for (std::size_t t = 0; t < gs.stalks.size(); ++t) {
        const auto& stalk = gs.stalks[t];
        std::size_t sx = gs.sections[gs.phi[x]][t], sy = gs.sections[gs.phi[y]][t];
        if (stalk.table->join(sx, sy) != gs.sections[gs.phi[s->join(x, y)]][t] ||
            stalk.table->mul(sx, sy) != gs.sections[gs.phi[s->mul(x, y)]][t]) {
          gs.phi_homomorphism = false;
          break;
        }
      }
    }
  return gs;
}

MvSheafRecord mv_global_sections(AlgebraPtr a) {
  if (!a || !a->finite()) throw std::domain_error("needs a finite algebra");
  auto [vo, we] = reducts(*a);
  (void)we;
  MvSheafRecord rec;
  rec.sections = global_sections(vo);
  rec.recognition =
      recognize_mv_semiring(*rec.sections.section_ring, rec.sections.section_ring->size());
  if (!rec.recognition.ok) return rec;
  rec.reconstructed = reconstruct_mv(*rec.sections.section_ring, rec.recognition.star);

  const MvAlgebra& b = *rec.reconstructed;
  rec.tables_match = rec.sections.phi[a->zero_index()] == b.zero_index();
  std::size_t n = a->size();
  for (std::size_t x = 0; x < n && rec.tables_match; ++x) {
    if (rec.sections.phi[a->star(x)] != b.star(rec.sections.phi[x]))
      rec.tables_match = false;
    for (std::size_t y = 0; y < n && rec.tables_match; ++y)
      if (rec.sections.phi[a->oplus(x, y)] != b.oplus(rec.sections.phi[x], rec.sections.phi[y]))
        rec.tables_match = false;
  }
  return rec;
}

}  // namespace mvk
