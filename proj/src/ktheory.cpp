// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/ktheory.hpp"

#include <algorithm>

namespace mvk {

namespace {

std::size_t checked_pow(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::size_t ProjEnumeration::class_of(const Matrix& u) const {
  if (!is_idempotent(u)) throw std::invalid_argument("matrix is not idempotent");
  FiniteSemimodule module = row_semimodule(u);
  for (const auto& cls : classes) {
    if (cls.module.size() != module.size()) continue;
    if (semimodules_isomorphic(cls.module, module)) return cls.id;
  }
  return npos;
}

ProjEnumeration enumerate_projectives(SemiringPtr S, std::size_t max_dim,
                                      std::size_t max_candidates) {
  if (!S) throw std::invalid_argument("null semiring");
  ProjEnumeration out;
  out.S = S;
  out.max_dim = max_dim;

  for (std::size_t dim = 0; dim <= max_dim; ++dim) {
    std::size_t total = checked_pow(S->size(), dim * dim, max_candidates);
    if (total > max_candidates)
      throw std::length_error("projective enumeration exceeds the candidate cap");
    for (std::size_t ord = 0; ord < total; ++ord) {
      // entries in lexicographic order, first entry most significant
      std::vector<std::size_t> entries(dim * dim);
      std::size_t rest = ord;
      for (std::size_t i = entries.size(); i-- > 0;) {
        entries[i] = rest % S->size();
        rest /= S->size();
      }
      Matrix u(S, dim, dim, std::move(entries));
      if (!is_idempotent(u)) continue;
      FiniteSemimodule module = row_semimodule(u);
      std::size_t found = ProjEnumeration::npos;
      for (const auto& cls : out.classes) {
        if (cls.module.size() != module.size()) continue;
        if (semimodules_isomorphic(cls.module, module)) {
          found = cls.id;
          break;
        }
      }
      if (found == ProjEnumeration::npos) {
        ProjClass cls{out.classes.size(), dim, u, {u}, std::move(module)};
        out.classes.push_back(std::move(cls));
      } else {
        out.classes[found].members.push_back(std::move(u));
      }
    }
  }

  std::size_t k = out.classes.size();
  out.sum.assign(k, std::vector<std::optional<std::size_t>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (out.classes[i].dim + out.classes[j].dim > max_dim) {
        out.sum_closed = false;
        continue;
      }
      Matrix s = direct_sum(out.classes[i].rep, out.classes[j].rep);
      std::size_t c = out.class_of(s);
      if (c == ProjEnumeration::npos)
        throw std::logic_error("direct sum escaped the enumerated classes");
      out.sum[i][j] = c;
    }
  return out;
}

Matrix direct_sum(const Matrix& u, const Matrix& v) {
  if (!same_semiring(u.semiring(), v.semiring()))
    throw std::invalid_argument("direct sum over different semirings");
  if (u.rows() != u.cols() || v.rows() != v.cols())
    throw std::invalid_argument("direct sum needs square blocks");
  std::size_t n = u.rows() + v.rows();
  Matrix out(u.semiring(), n, n);
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j) out.set(i, j, u.at(i, j));
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j)
      out.set(u.rows() + i, u.cols() + j, v.at(i, j));
  if (is_idempotent(u) && is_idempotent(v) && !is_idempotent(out))
    throw std::logic_error("direct sum of idempotents lost idempotency");
  return out;
}

K0Group::K0Group(const ProjEnumeration* enumeration) : enum_(enumeration) {
  if (!enum_ || enum_->classes.empty())
    throw std::invalid_argument("empty projective enumeration");
  if (enum_->classes[0].dim != 0)
    throw std::invalid_argument("enumeration lacks the dimension-0 class");
}

K0Element K0Group::k_of(std::size_t class_id) const {
  if (class_id >= enum_->classes.size())
    throw std::invalid_argument("class id out of range");
  K0Element e;
  e.pos.push_back(class_id);
  return e;
}

namespace {

// removes pairs common to both sides; sound in any group completion
void cancel(std::vector<std::size_t>& pos, std::vector<std::size_t>& neg) {
  std::sort(pos.begin(), pos.end());
  std::sort(neg.begin(), neg.end());
  std::vector<std::size_t> p2, n2;
  std::size_t i = 0, j = 0;
  while (i < pos.size() && j < neg.size()) {
    if (pos[i] == neg[j]) {
      ++i;
      ++j;
    } else if (pos[i] < neg[j]) {
      p2.push_back(pos[i++]);
    } else {
      n2.push_back(neg[j++]);
    }
  }
  p2.insert(p2.end(), pos.begin() + long(i), pos.end());
  n2.insert(n2.end(), neg.begin() + long(j), neg.end());
  pos = std::move(p2);
  neg = std::move(n2);
}

}  // namespace

K0Element K0Group::add(const K0Element& a, const K0Element& b) const {
  K0Element out;
  out.pos = a.pos;
  out.pos.insert(out.pos.end(), b.pos.begin(), b.pos.end());
  out.neg = a.neg;
  out.neg.insert(out.neg.end(), b.neg.begin(), b.neg.end());
  cancel(out.pos, out.neg);
  return out;
}

K0Element K0Group::negate(const K0Element& a) const {
  K0Element out;
  out.pos = a.neg;
  out.neg = a.pos;
  return out;
}

std::optional<std::size_t> K0Group::fold_sum(std::vector<std::size_t> ids) const {
  std::sort(ids.begin(), ids.end());
  std::size_t acc = 0;  // the zero class
  for (auto id : ids) {
    auto next = enum_->sum[acc][id];
    if (!next) return std::nullopt;
    acc = *next;
  }
  return acc;
}

K0Group::EqResult K0Group::equal(const K0Element& a, const K0Element& b) const {
  EqResult res;
  bool all_resolved = true;
  for (std::size_t r = 0; r < enum_->classes.size(); ++r) {
    std::vector<std::size_t> lhs = a.pos, rhs = b.pos;
    lhs.insert(lhs.end(), b.neg.begin(), b.neg.end());
    rhs.insert(rhs.end(), a.neg.begin(), a.neg.end());
    lhs.push_back(r);
    rhs.push_back(r);
    auto l = fold_sum(std::move(lhs));
    auto rr = fold_sum(std::move(rhs));
    if (!l || !rr) {
      all_resolved = false;
      continue;
    }
    if (*l == *rr) {
      res.verdict = Verdict::Equal;
      res.witness = r;
      return res;
    }
  }
  res.verdict = all_resolved ? Verdict::NotWithinCap : Verdict::Unresolved;
  return res;
}

K0Map k0_map(const MvHom& f, const ProjEnumeration& dom_classes,
             const ProjEnumeration& cod_classes) {
  auto dr = reducts(*f.dom), cr = reducts(*f.cod);
  if (!same_semiring(dom_classes.S, dr.first) || !same_semiring(cod_classes.S, cr.first))
    throw std::invalid_argument("enumerations must live over the join/odot reducts");

  auto image = [&](const Matrix& u) {
    std::vector<std::size_t> entries(u.entries().size());
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = f.map[u.entries()[i]];
    return Matrix(cod_classes.S, u.rows(), u.cols(), std::move(entries));
  };

  K0Map out;
  out.class_map.resize(dom_classes.classes.size());
  for (const auto& cls : dom_classes.classes) {
    std::size_t target = cod_classes.class_of(image(cls.rep));
    if (target == ProjEnumeration::npos)
      throw std::logic_error("image of a representative escaped the enumerated classes");
    for (const auto& member : cls.members)
      if (cod_classes.class_of(image(member)) != target)
        throw std::logic_error("induced class map is not well defined on members");
    out.class_map[cls.id] = target;
  }

  // monoid morphism on the part of the sum tables inside both caps
  std::size_t k = dom_classes.classes.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      auto s = dom_classes.sum[i][j];
      if (!s) continue;
      auto t = cod_classes.sum[out.class_map[i]][out.class_map[j]];
      if (!t) continue;
      if (out.class_map[*s] != *t)
        throw std::logic_error("induced class map is not a monoid morphism");
    }
  return out;
}

K0Map compose(const K0Map& g, const K0Map& f) {
  K0Map out;
  out.class_map.resize(f.class_map.size());
  for (std::size_t i = 0; i < f.class_map.size(); ++i)
    out.class_map[i] = g.class_map[f.class_map[i]];
  return out;
}

std::string k0_report_csv(const ProjEnumeration& e) {
  std::string out = "class,dim,representative,sums\n";
  for (const auto& cls : e.classes) {
    out += std::to_string(cls.id) + "," + std::to_string(cls.dim) + ",\"" +
           to_string(cls.rep) + "\",\"";
    for (std::size_t j = 0; j < e.classes.size(); ++j) {
      if (j) out += " ";
      out += std::to_string(cls.id) + "+" + std::to_string(j) + "=";
      out += e.sum[cls.id][j] ? std::to_string(*e.sum[cls.id][j]) : std::string("?");
    }
    out += "\"\n";
  }
  return out;
}

}  // namespace mvk
