// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/semimodule.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace mvk {

namespace {

void require_same_semiring(const SemiringPtr& a, const SemiringPtr& b) {
  if (!same_semiring(a, b))
    throw std::invalid_argument("operands live over different semirings");
}

}  // namespace

Vec zero_vec(SemiringPtr S, std::size_t n) {
  if (!S) throw std::invalid_argument("null semiring");
  return Vec{S, std::vector<std::size_t>(n, S->zero())};
}

Vec chi(SemiringPtr S, std::size_t n, std::size_t i) {
  if (i >= n) throw std::invalid_argument("unit vector index out of range");
  Vec v = zero_vec(std::move(S), n);
  v.e[i] = v.S->one();
  return v;
}

Vec join(const Vec& a, const Vec& b) {
  require_same_semiring(a.S, b.S);
  if (a.dim() != b.dim()) throw std::invalid_argument("vector dimension mismatch");
  Vec out = a;
  for (std::size_t i = 0; i < out.e.size(); ++i) out.e[i] = a.S->join(a.e[i], b.e[i]);
  return out;
}

Vec scale(std::size_t a, const Vec& v) {
  if (a >= v.S->size()) throw std::invalid_argument("scalar index out of range");
  Vec out = v;
  for (auto& x : out.e) x = v.S->mul(a, x);
  return out;
}

bool leq(const Vec& a, const Vec& b) { return join(a, b) == b; }

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.e.size(); ++i) {
    if (i) out += ",";
    out += v.S->label(v.e[i]);
  }
  return out + ")";
}

std::size_t vec_ordinal(const Vec& v) {
  std::size_t ord = 0;
  for (auto x : v.e) ord = ord * v.S->size() + x;
  return ord;
}

Vec vec_from_ordinal(SemiringPtr S, std::size_t n, std::size_t ordinal) {
  Vec v = zero_vec(S, n);
  for (std::size_t i = n; i-- > 0;) {
    v.e[i] = ordinal % S->size();
    ordinal /= S->size();
  }
  return v;
}

Matrix::Matrix(SemiringPtr S, std::size_t rows, std::size_t cols)
    : S_(std::move(S)), rows_(rows), cols_(cols), e_(rows * cols, S_->zero()) {}

Matrix::Matrix(SemiringPtr S, std::size_t rows, std::size_t cols,
               std::vector<std::size_t> entries)
    : S_(std::move(S)), rows_(rows), cols_(cols), e_(std::move(entries)) {
  if (e_.size() != rows_ * cols_) throw std::invalid_argument("matrix entry count mismatch");
  for (auto v : e_)
    if (v >= S_->size()) throw std::invalid_argument("matrix entry out of range");
}

Vec Matrix::row(std::size_t i) const {
  if (i >= rows_) throw std::invalid_argument("row index out of range");
  return Vec{S_, {e_.begin() + long(i * cols_), e_.begin() + long((i + 1) * cols_)}};
}

bool operator==(const Matrix& a, const Matrix& b) {
  require_same_semiring(a.S_, b.S_);
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

bool Matrix::operator<(const Matrix& other) const {
  if (rows_ != other.rows_) return rows_ < other.rows_;
  if (cols_ != other.cols_) return cols_ < other.cols_;
  return e_ < other.e_;
}

Matrix identity_matrix(SemiringPtr S, std::size_t n) {
  Matrix m(S, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, S->one());
  return m;
}

Matrix zero_matrix(SemiringPtr S, std::size_t rows, std::size_t cols) {
  return Matrix(std::move(S), rows, cols);
}

Matrix matrix_star(const Matrix& a, const Matrix& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix dimension mismatch");
  const SemiringTable& s = *a.semiring();
  Matrix out(a.semiring(), a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      std::size_t acc = s.zero();
      for (std::size_t k = 0; k < a.cols(); ++k)
        acc = s.join(acc, s.mul(a.at(i, k), b.at(k, j)));
      out.set(i, j, acc);
    }
  return out;
}

Matrix matrix_join(const Matrix& a, const Matrix& b) {
  require_same_semiring(a.semiring(), b.semiring());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("matrix dimension mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out.set(i, j, a.semiring()->join(a.at(i, j), b.at(i, j)));
  return out;
}

bool is_idempotent(const Matrix& a) {
  if (a.rows() != a.cols()) return false;
  return matrix_star(a, a) == a;
}

std::string to_string(const Matrix& a) {
  std::string out = "[";
  for (std::size_t i = 0; i < a.rows(); ++i) {
    if (i) out += ",";
    out += "[";
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ",";
      out += a.semiring()->label(a.at(i, j));
    }
    out += "]";
  }
  return out + "]";
}

Vec apply(const Vec& f, const Matrix& k) {
  require_same_semiring(f.S, k.semiring());
  if (f.dim() != k.rows()) throw std::invalid_argument("vector/matrix dimension mismatch");
  const SemiringTable& s = *f.S;
  Vec g = zero_vec(f.S, k.cols());
  for (std::size_t j = 0; j < k.cols(); ++j) {
    std::size_t acc = s.zero();
    for (std::size_t i = 0; i < k.rows(); ++i)
      acc = s.join(acc, s.mul(f.e[i], k.at(i, j)));
    g.e[j] = acc;
  }
  return g;
}

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

Vec FreeHom::operator()(const Vec& v) const {
  return vec_from_ordinal(S, n, images[vec_ordinal(v)]);
}

bool is_free_hom(const FreeHom& h, std::string* witness) {
  std::size_t total = checked_pow(h.S->size(), h.m, 2'000'000);
  if (total > 2'000'000) throw std::length_error("free hom table too large to verify");
  if (h.images.size() != total) {
    if (witness) *witness = "table size mismatch";
    return false;
  }
  auto set_witness = [witness](const std::string& w) {
    if (witness) *witness = w;
  };
  Vec z = zero_vec(h.S, h.m);
  if (h(z) != zero_vec(h.S, h.n)) {
    set_witness("zero not preserved");
    return false;
  }
  for (std::size_t u = 0; u < total; ++u) {
    Vec vu = vec_from_ordinal(h.S, h.m, u);
    for (std::size_t a = 0; a < h.S->size(); ++a) {
      if (h(scale(a, vu)) != scale(a, h(vu))) {
        set_witness("action not preserved at scalar " + h.S->label(a) + " on " +
                    to_string(vu));
        return false;
      }
    }
    for (std::size_t v = u; v < total; ++v) {
      Vec vv = vec_from_ordinal(h.S, h.m, v);
      if (h(join(vu, vv)) != join(h(vu), h(vv))) {
        set_witness("join not preserved at " + to_string(vu) + ", " + to_string(vv));
        return false;
      }
    }
  }
  return true;
}

FreeHom hom_from_matrix(const Matrix& k) {
  std::size_t total = checked_pow(k.semiring()->size(), k.rows(), 2'000'000);
  if (total > 2'000'000) throw std::length_error("free hom table too large");
  FreeHom h;
  h.S = k.semiring();
  h.m = k.rows();
  h.n = k.cols();
  h.images.resize(total);
  for (std::size_t u = 0; u < total; ++u)
    h.images[u] = vec_ordinal(apply(vec_from_ordinal(h.S, h.m, u), k));
  return h;
}

Matrix matrix_from_hom(const FreeHom& h) {
  std::string witness;
  if (!is_free_hom(h, &witness))
    throw std::invalid_argument("table is not a semimodule hom: " + witness);
  Matrix k(h.S, h.m, h.n);
  for (std::size_t i = 0; i < h.m; ++i) {
    Vec img = h(chi(h.S, h.m, i));
    for (std::size_t j = 0; j < h.n; ++j) k.set(i, j, img.e[j]);
  }
  return k;
}

FiniteSemimodule::FiniteSemimodule(SemiringPtr S, std::vector<std::string> labels,
                                   std::vector<std::size_t> join_table,
                                   std::vector<std::size_t> action_table,
                                   std::size_t zero)
    : S_(std::move(S)),
      n_(labels.size()),
      labels_(std::move(labels)),
      join_(std::move(join_table)),
      act_(std::move(action_table)),
      zero_(zero) {
  if (!S_) throw std::invalid_argument("null semiring");
  if (n_ == 0) throw std::invalid_argument("empty semimodule carrier");
  if (join_.size() != n_ * n_ || act_.size() != S_->size() * n_)
    throw std::invalid_argument("semimodule table size mismatch");
  if (zero_ >= n_) throw std::invalid_argument("zero index out of range");
  for (auto v : join_)
    if (v >= n_) throw std::invalid_argument("join entry out of range");
  for (auto v : act_)
    if (v >= n_) throw std::invalid_argument("action entry out of range");

  std::size_t ns = S_->size();
  for (std::size_t x = 0; x < n_; ++x) {
    if (join(x, x) != x) throw LawViolation("semilattice idempotence", labels_[x]);
    if (join(x, zero_) != x || join(zero_, x) != x)
      throw LawViolation("semilattice identity 0", labels_[x]);
    for (std::size_t y = 0; y < n_; ++y) {
      if (join(x, y) != join(y, x))
        throw LawViolation("semilattice commutativity", labels_[x] + ", " + labels_[y]);
      for (std::size_t z = 0; z < n_; ++z)
        if (join(join(x, y), z) != join(x, join(y, z)))
          throw LawViolation("semilattice associativity",
                             labels_[x] + ", " + labels_[y] + ", " + labels_[z]);
    }
  }
  for (std::size_t a = 0; a < ns; ++a) {
    if (act(a, zero_) != zero_)
      throw LawViolation("action annihilates 0", S_->label(a));
    for (std::size_t x = 0; x < n_; ++x) {
      if (act(S_->zero(), x) != zero_)
        throw LawViolation("zero scalar annihilates", labels_[x]);
      if (act(S_->one(), x) != x) throw LawViolation("unit scalar acts as identity", labels_[x]);
      for (std::size_t b = 0; b < ns; ++b)
        if (act(S_->mul(a, b), x) != act(a, act(b, x)))
          throw LawViolation("action associativity",
                             S_->label(a) + ", " + S_->label(b) + ", " + labels_[x]);
      for (std::size_t y = 0; y < n_; ++y)
        if (act(a, join(x, y)) != join(act(a, x), act(a, y)))
          throw LawViolation("action distributes over module join",
                             S_->label(a) + ", " + labels_[x] + ", " + labels_[y]);
    }
    for (std::size_t b = 0; b < ns; ++b)
      for (std::size_t x = 0; x < n_; ++x)
        if (act(S_->join(a, b), x) != join(act(a, x), act(b, x)))
          throw LawViolation("action distributes over scalar join",
                             S_->label(a) + ", " + S_->label(b) + ", " + labels_[x]);
  }
}

FiniteSemimodule from_vectors(SemiringPtr S, std::vector<Vec> carrier) {
  if (!S) throw std::invalid_argument("null semiring");
  if (carrier.empty()) throw std::invalid_argument("empty carrier");
  std::size_t dim = carrier.front().dim();
  for (const auto& v : carrier) {
    require_same_semiring(S, v.S);
    if (v.dim() != dim) throw std::invalid_argument("mixed vector dimensions");
  }
  std::sort(carrier.begin(), carrier.end(),
            [](const Vec& a, const Vec& b) { return vec_ordinal(a) < vec_ordinal(b); });
  carrier.erase(std::unique(carrier.begin(), carrier.end()), carrier.end());

  auto index_of = [&carrier](const Vec& v) {
    auto it = std::lower_bound(carrier.begin(), carrier.end(), v,
                               [](const Vec& a, const Vec& b) {
                                 return vec_ordinal(a) < vec_ordinal(b);
                               });
    if (it == carrier.end() || !(*it == v))
      throw std::invalid_argument("carrier not closed: missing " + to_string(v));
    return std::size_t(it - carrier.begin());
  };

  std::size_t n = carrier.size(), ns = S->size();
  Vec zv = zero_vec(S, dim);
  std::size_t zero = index_of(zv);  // throws when 0 missing
  std::vector<std::string> labels(n);
  std::vector<std::size_t> join_table(n * n), action(ns * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = to_string(carrier[i]);
    for (std::size_t j = 0; j < n; ++j)
      join_table[i * n + j] = index_of(join(carrier[i], carrier[j]));
    for (std::size_t a = 0; a < ns; ++a) action[a * n + i] = index_of(scale(a, carrier[i]));
  }
  return FiniteSemimodule(std::move(S), std::move(labels), std::move(join_table),
                          std::move(action), zero);
}

FiniteSemimodule regular_semimodule(SemiringPtr S) {
  if (!S) throw std::invalid_argument("null semiring");
  std::size_t n = S->size();
  std::vector<std::string> labels(n);
  std::vector<std::size_t> join_table(n * n), action(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = S->label(i);
    for (std::size_t j = 0; j < n; ++j) {
      join_table[i * n + j] = S->join(i, j);
      action[i * n + j] = S->mul(i, j);
    }
  }
  return FiniteSemimodule(std::move(S), std::move(labels), std::move(join_table),
                          std::move(action), S->zero());
}

FiniteSemimodule free_semimodule(SemiringPtr S, std::size_t n) {
  std::size_t total = checked_pow(S->size(), n, 100'000);
  if (total > 100'000) throw std::length_error("free semimodule carrier too large");
  std::vector<Vec> carrier;
  carrier.reserve(total);
  for (std::size_t u = 0; u < total; ++u) carrier.push_back(vec_from_ordinal(S, n, u));
  return from_vectors(std::move(S), std::move(carrier));
}

FiniteSemimodule submodule(const FiniteSemimodule& m, std::vector<std::size_t> subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (auto v : subset)
    if (v >= m.size()) throw std::invalid_argument("subset index out of range");
  auto pos = [&subset](std::size_t x) {
    auto it = std::lower_bound(subset.begin(), subset.end(), x);
    if (it == subset.end() || *it != x)
      throw std::invalid_argument("subset not closed under the operations");
    return std::size_t(it - subset.begin());
  };
  std::size_t n = subset.size(), ns = m.semiring()->size();
  std::vector<std::string> labels(n);
  std::vector<std::size_t> join_table(n * n), action(ns * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = m.label(subset[i]);
    for (std::size_t j = 0; j < n; ++j)
      join_table[i * n + j] = pos(m.join(subset[i], subset[j]));
    for (std::size_t a = 0; a < ns; ++a) action[a * n + i] = pos(m.act(a, subset[i]));
  }
  return FiniteSemimodule(m.semiring(), std::move(labels), std::move(join_table),
                          std::move(action), pos(m.zero()));
}

std::vector<Vec> row_space(const Matrix& u) {
  const SemiringPtr& S = u.semiring();
  std::size_t combos = checked_pow(S->size(), u.rows(), 200'000);
  if (combos > 200'000) throw std::length_error("row space enumeration too large");
  std::set<std::vector<std::size_t>> seen;
  std::vector<Vec> out;
  for (std::size_t ord = 0; ord < combos; ++ord) {
    Vec coeff = vec_from_ordinal(S, u.rows(), ord);
    Vec v = apply(coeff, u);
    if (seen.insert(v.e).second) out.push_back(v);
  }
  std::sort(out.begin(), out.end(),
            [](const Vec& a, const Vec& b) { return vec_ordinal(a) < vec_ordinal(b); });
  return out;
}

FiniteSemimodule row_semimodule(const Matrix& u) {
  return from_vectors(u.semiring(), row_space(u));
}

FiniteSemimodule quotient_semimodule(const QuotientAlgebra& q, SemiringPtr reduct) {
  if (!q.parent || !q.quotient) throw std::invalid_argument("incomplete quotient");
  auto rs = reducts(*q.parent);
  if (!same_semiring(reduct, rs.first))
    throw std::invalid_argument("expected the join/odot reduct of the parent algebra");
  const MvAlgebra& a = *q.parent;
  std::size_t n = q.class_rep.size(), ns = a.size();

  std::vector<std::string> labels(n);
  std::vector<std::size_t> join_table(n * n), action(ns * n);
  for (std::size_t c = 0; c < n; ++c) {
    labels[c] = q.quotient->label(c);
    for (std::size_t d = 0; d < n; ++d) join_table[c * n + d] = q.quotient->join(c, d);
    for (std::size_t s = 0; s < ns; ++s)
      action[s * n + c] = q.class_of[a.odot(s, q.class_rep[c])];
  }
  // the action must not depend on the representative
  for (std::size_t x = 0; x < ns; ++x)
    for (std::size_t s = 0; s < ns; ++s)
      if (q.class_of[a.odot(s, x)] != action[s * n + q.class_of[x]])
        throw std::logic_error("quotient action not constant on classes");
  return FiniteSemimodule(std::move(reduct), std::move(labels), std::move(join_table),
                          std::move(action), q.class_of[a.zero_index()]);
}

FiniteSemimodule restrict_scalars(const std::vector<std::size_t>& h, SemiringPtr S,
                                  const FiniteSemimodule& n_over_t) {
  if (!S) throw std::invalid_argument("null semiring");
  const SemiringPtr& T = n_over_t.semiring();
  if (h.size() != S->size()) throw std::invalid_argument("scalar map size mismatch");
  for (auto v : h)
    if (v >= T->size()) throw std::invalid_argument("scalar map target out of range");
  if (h[S->zero()] != T->zero() || h[S->one()] != T->one())
    throw std::invalid_argument("scalar map does not preserve the constants");
  for (std::size_t a = 0; a < S->size(); ++a)
    for (std::size_t b = 0; b < S->size(); ++b) {
      if (h[S->join(a, b)] != T->join(h[a], h[b]))
        throw std::invalid_argument("scalar map does not preserve join");
      if (h[S->mul(a, b)] != T->mul(h[a], h[b]))
        throw std::invalid_argument("scalar map does not preserve mul");
    }
  std::size_t n = n_over_t.size();
  std::vector<std::string> labels(n);
  std::vector<std::size_t> join_table(n * n), action(S->size() * n);
  for (std::size_t i = 0; i < n; ++i) {
    labels[i] = n_over_t.label(i);
    for (std::size_t j = 0; j < n; ++j) join_table[i * n + j] = n_over_t.join(i, j);
  }
  for (std::size_t a = 0; a < S->size(); ++a)
    for (std::size_t i = 0; i < n; ++i) action[a * n + i] = n_over_t.act(h[a], i);
  return FiniteSemimodule(std::move(S), std::move(labels), std::move(join_table),
                          std::move(action), n_over_t.zero());
}

namespace {

// join decomposition: for every carrier element either "irreducible" or a
// pair of strictly smaller elements joining to it
struct JoinShape {
  std::vector<std::size_t> order;  // carrier sorted by downset size
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> decomp;
  std::vector<std::size_t> irreducibles;  // in processing order
};

JoinShape join_shape(const FiniteSemimodule& m) {
  std::size_t n = m.size();
  JoinShape shape;
  shape.order.resize(n);
  std::iota(shape.order.begin(), shape.order.end(), 0);
  std::vector<std::size_t> downsize(n, 0);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (m.leq(y, x)) downsize[x]++;
  std::stable_sort(shape.order.begin(), shape.order.end(),
                   [&downsize](std::size_t a, std::size_t b) {
                     return downsize[a] < downsize[b];
                   });
  shape.decomp.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    if (x == m.zero()) continue;
    for (std::size_t a = 0; a < n && !shape.decomp[x]; ++a) {
      if (a == x) continue;
      for (std::size_t b = a; b < n; ++b) {
        if (b == x) continue;
        if (m.join(a, b) == x) {
          shape.decomp[x] = std::make_pair(a, b);
          break;
        }
      }
    }
  }
  for (auto x : shape.order)
    if (x != m.zero() && !shape.decomp[x]) shape.irreducibles.push_back(x);
  return shape;
}

bool is_module_hom(const FiniteSemimodule& m, const FiniteSemimodule& n,
                   const std::vector<std::size_t>& f) {
  if (f[m.zero()] != n.zero()) return false;
  for (std::size_t x = 0; x < m.size(); ++x) {
    for (std::size_t y = 0; y < m.size(); ++y)
      if (f[m.join(x, y)] != n.join(f[x], f[y])) return false;
    for (std::size_t a = 0; a < m.semiring()->size(); ++a)
      if (f[m.act(a, x)] != n.act(a, f[x])) return false;
  }
  return true;
}

}  // namespace

std::vector<std::vector<std::size_t>> enumerate_homs(const FiniteSemimodule& m,
                                                     const FiniteSemimodule& n,
                                                     std::size_t max_candidates) {
  require_same_semiring(m.semiring(), n.semiring());
  JoinShape shape = join_shape(m);
  std::size_t candidates = checked_pow(n.size(), shape.irreducibles.size(), max_candidates);
  if (candidates > max_candidates)
    throw std::length_error("hom enumeration exceeds the candidate cap");

  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> f(m.size());
  // odometer over irreducible images; everything else is forced
  std::vector<std::size_t> digits(shape.irreducibles.size(), 0);
  for (std::size_t c = 0; c < candidates; ++c) {
    std::size_t rest = c;
    for (std::size_t i = digits.size(); i-- > 0;) {
      digits[i] = rest % n.size();
      rest /= n.size();
    }
    f[m.zero()] = n.zero();
    for (std::size_t i = 0; i < digits.size(); ++i) f[shape.irreducibles[i]] = digits[i];
    for (auto x : shape.order) {
      if (x == m.zero() || !shape.decomp[x]) continue;
      auto [a, b] = *shape.decomp[x];
      f[x] = n.join(f[a], f[b]);
    }
    if (is_module_hom(m, n, f)) out.push_back(f);
  }
  return out;
}

bool brute_force_projective(const FiniteSemimodule& m, std::size_t n,
                            std::size_t max_candidates) {
  const SemiringPtr& S = m.semiring();
  FiniteSemimodule target = free_semimodule(S, n);
  std::size_t ptuples = checked_pow(m.size(), n, max_candidates);
  if (ptuples > max_candidates)
    throw std::length_error("retraction search exceeds the candidate cap");
  auto sections = enumerate_homs(m, target, max_candidates);

  // p is determined freely by the images of the unit vectors
  std::vector<std::size_t> t(n, 0);
  for (const auto& insert : sections) {
    for (std::size_t ord = 0; ord < ptuples; ++ord) {
      std::size_t rest = ord;
      for (std::size_t j = n; j-- > 0;) {
        t[j] = rest % m.size();
        rest /= m.size();
      }
      bool retract = true;
      for (std::size_t x = 0; x < m.size() && retract; ++x) {
        Vec img = vec_from_ordinal(S, n, insert[x]);  // target index == ordinal
        std::size_t acc = m.zero();
        for (std::size_t j = 0; j < n; ++j) acc = m.join(acc, m.act(img.e[j], t[j]));
        if (acc != x) retract = false;
      }
      if (retract) return true;
    }
  }
  return false;
}

namespace {

std::vector<std::size_t> refine_colors(const FiniteSemimodule& m) {
  std::size_t n = m.size(), ns = m.semiring()->size();
  std::vector<std::size_t> color(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t down = 0;
    for (std::size_t y = 0; y < n; ++y)
      if (m.leq(y, x)) down++;
    color[x] = down;  // initial invariant; zero is pinned by down == 1
  }
  for (std::size_t round = 0; round < n; ++round) {
    std::map<std::vector<std::size_t>, std::size_t> palette;
    std::vector<std::vector<std::size_t>> sigs(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::vector<std::size_t> sig;
      sig.push_back(color[x]);
      std::vector<std::pair<std::size_t, std::size_t>> joins;
      for (std::size_t y = 0; y < n; ++y) joins.emplace_back(color[y], color[m.join(x, y)]);
      std::sort(joins.begin(), joins.end());
      for (auto& [cy, cj] : joins) {
        sig.push_back(cy);
        sig.push_back(cj);
      }
      for (std::size_t a = 0; a < ns; ++a) sig.push_back(color[m.act(a, x)]);
      palette.emplace(sig, 0);
      sigs[x] = std::move(sig);
    }
    // number colors by signature rank, not first appearance: ids must agree
    // across modules for the cross-module color filter to be sound
    std::size_t id = 0;
    for (auto& [sig, c] : palette) c = id++;
    std::vector<std::size_t> next(n);
    for (std::size_t x = 0; x < n; ++x) next[x] = palette[sigs[x]];
    if (next == color) break;
    color = std::move(next);
  }
  return color;
}

bool iso_backtrack(const FiniteSemimodule& a, const FiniteSemimodule& b,
                   const std::vector<std::size_t>& ca, const std::vector<std::size_t>& cb,
                   std::vector<std::size_t>& f, std::vector<bool>& used, std::size_t depth,
                   const std::vector<std::size_t>& order) {
  std::size_t n = a.size();
  if (depth == n) {
    // full verification: bijection consistent on every table entry
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y)
        if (f[a.join(x, y)] != b.join(f[x], f[y])) return false;
      for (std::size_t s = 0; s < a.semiring()->size(); ++s)
        if (f[a.act(s, x)] != b.act(s, f[x])) return false;
    }
    return f[a.zero()] == b.zero();
  }
  std::size_t x = order[depth];
  for (std::size_t u = 0; u < n; ++u) {
    if (used[u] || ca[x] != cb[u]) continue;
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d) {
      std::size_t y = order[d];
      std::size_t jxy = a.join(x, y);
      if (jxy == x && b.join(u, f[y]) != u) ok = false;
      if (jxy == y && b.join(u, f[y]) != f[y]) ok = false;
    }
    if (!ok) continue;
    f[x] = u;
    used[u] = true;
    if (iso_backtrack(a, b, ca, cb, f, used, depth + 1, order)) return true;
    used[u] = false;
  }
  return false;
}

}  // namespace

bool semimodules_isomorphic(const FiniteSemimodule& a, const FiniteSemimodule& b) {
  if (!same_semiring(a.semiring(), b.semiring())) return false;
  if (a.size() != b.size()) return false;
  auto ca = refine_colors(a), cb = refine_colors(b);
  auto ha = ca, hb = cb;
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  if (ha != hb) return false;

  std::size_t n = a.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  // scarce colors first: prunes early
  std::vector<std::size_t> freq(n + 1, 0);
  for (auto c : ca) freq[c]++;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return freq[ca[x]] < freq[ca[y]]; });
  std::vector<std::size_t> f(n, 0);
  std::vector<bool> used(n, false);
  return iso_backtrack(a, b, ca, cb, f, used, 0, order);
}

bool mutual_expressibility(const Matrix& u, const Matrix& v) {
  require_same_semiring(u.semiring(), v.semiring());
  std::size_t c = std::max(u.cols(), v.cols());
  auto pad = [&](const Matrix& m) {
    Matrix out(m.semiring(), m.rows(), c);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) out.set(i, j, m.at(i, j));
    return out;
  };
  auto ru = row_space(pad(u)), rv = row_space(pad(v));
  if (ru.size() != rv.size()) return false;
  for (std::size_t i = 0; i < ru.size(); ++i)
    if (!(ru[i] == rv[i])) return false;
  return true;
}

StrongnessResult is_strong(const MvAlgebra& alg, SemiringPtr reduct,
                           const FiniteSemimodule& m) {
  auto rs = reducts(alg);
  if (!same_semiring(reduct, rs.first) && !same_semiring(reduct, rs.second))
    throw std::invalid_argument("semiring is not a reduct of the algebra");
  if (!same_semiring(reduct, m.semiring()))
    throw std::invalid_argument("module does not live over the given reduct");

  std::size_t ns = alg.size();
  StrongnessResult res;
  for (std::size_t a = 1; a < ns; ++a)
    for (std::size_t b = 0; b < a; ++b) {
      bool same_action = true;
      for (std::size_t x = 0; x < m.size() && same_action; ++x)
        if (m.act(a, x) != m.act(b, x)) same_action = false;
      if (!same_action) continue;
      std::size_t sa = alg.star(a), sb = alg.star(b);
      for (std::size_t x = 0; x < m.size(); ++x)
        if (m.act(sa, x) != m.act(sb, x)) {
          res.strong = false;
          res.a = a;
          res.b = b;
          res.x = x;
          return res;
        }
    }
  return res;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

TensorProduct tensor_product(const FiniteSemimodule& m, const FiniteSemimodule& n,
                             std::size_t cap_pairs) {
  require_same_semiring(m.semiring(), n.semiring());
  const SemiringPtr& S = m.semiring();
  if (!S->commutative())
    throw std::invalid_argument("tensor products need a commutative scalar semiring");
  std::size_t nm = m.size(), nn = n.size(), mn = nm * nn;
  if (mn > cap_pairs) throw std::length_error("tensor pair count exceeds the cap");

  std::size_t nodes = std::size_t{1} << mn;
  auto pair_bit = [nn](std::size_t x, std::size_t y) {
    return std::size_t{1} << (x * nn + y);
  };

  // generating relations on subsets of M x N
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t xmask = 0; xmask < (std::size_t{1} << nm); ++xmask)
    for (std::size_t y = 0; y < nn; ++y) {
      std::size_t jx = m.zero(), res = 0;
      for (std::size_t x = 0; x < nm; ++x)
        if (xmask & (std::size_t{1} << x)) {
          jx = m.join(jx, x);
          res |= pair_bit(x, y);
        }
      rel.emplace_back(pair_bit(jx, y), res);
    }
  for (std::size_t ymask = 0; ymask < (std::size_t{1} << nn); ++ymask)
    for (std::size_t x = 0; x < nm; ++x) {
      std::size_t jy = n.zero(), res = 0;
      for (std::size_t y = 0; y < nn; ++y)
        if (ymask & (std::size_t{1} << y)) {
          jy = n.join(jy, y);
          res |= pair_bit(x, y);
        }
      rel.emplace_back(pair_bit(x, jy), res);
    }
  for (std::size_t a = 0; a < S->size(); ++a)
    for (std::size_t x = 0; x < nm; ++x)
      for (std::size_t y = 0; y < nn; ++y)
        rel.emplace_back(pair_bit(m.act(a, x), y), pair_bit(x, n.act(a, y)));

  if (rel.size() * nodes > 80'000'000)
    throw std::length_error("tensor congruence closure too large");

  UnionFind uf(nodes);
  for (auto [u, v] : rel)
    for (std::size_t w = 0; w < nodes; ++w) uf.unite(u | w, v | w);

  // canonical carrier: classes ordered by least member mask
  std::vector<std::size_t> root_to_class(nodes, SIZE_MAX);
  std::vector<std::size_t> minrep;
  for (std::size_t mask = 0; mask < nodes; ++mask) {
    std::size_t r = uf.find(mask);
    if (root_to_class[r] == SIZE_MAX) {
      root_to_class[r] = minrep.size();
      minrep.push_back(mask);  // first-seen mask is the least in its class
    }
  }
  std::size_t k = minrep.size();
  auto cls = [&](std::size_t mask) { return root_to_class[uf.find(mask)]; };

  auto act_mask = [&](std::size_t a, std::size_t mask) {
    std::size_t out = 0;
    for (std::size_t x = 0; x < nm; ++x)
      for (std::size_t y = 0; y < nn; ++y)
        if (mask & pair_bit(x, y)) out |= pair_bit(m.act(a, x), y);
    return out;
  };

  std::vector<std::string> labels(k);
  std::vector<std::size_t> join_table(k * k), action(S->size() * k);
  for (std::size_t c = 0; c < k; ++c) {
    std::string lab = "{";
    bool first = true;
    for (std::size_t x = 0; x < nm; ++x)
      for (std::size_t y = 0; y < nn; ++y)
        if (minrep[c] & pair_bit(x, y)) {
          if (!first) lab += ",";
          first = false;
          lab += "(" + m.label(x) + "|" + n.label(y) + ")";
        }
    labels[c] = lab + "}";
    for (std::size_t d = 0; d < k; ++d) join_table[c * k + d] = cls(minrep[c] | minrep[d]);
    for (std::size_t a = 0; a < S->size(); ++a)
      action[a * k + c] = cls(act_mask(a, minrep[c]));
  }

  // action well-definedness across all members (cheap at desk scale)
  if (nodes * S->size() <= 1'000'000)
    for (std::size_t mask = 0; mask < nodes; ++mask)
      for (std::size_t a = 0; a < S->size(); ++a)
        if (cls(act_mask(a, mask)) != action[a * k + cls(mask)])
          throw std::logic_error("tensor action not constant on classes");

  TensorProduct t{FiniteSemimodule(S, std::move(labels), std::move(join_table),
                                   std::move(action), cls(0)),
                  {}};
  t.pure.assign(nm, std::vector<std::size_t>(nn));
  for (std::size_t x = 0; x < nm; ++x)
    for (std::size_t y = 0; y < nn; ++y) t.pure[x][y] = cls(pair_bit(x, y));
  return t;
}

bool is_bimorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                   const FiniteSemimodule& p,
                   const std::vector<std::vector<std::size_t>>& f) {
  std::size_t ns = m.semiring()->size();
  for (std::size_t x = 0; x < m.size(); ++x) {
    if (f[x][n.zero()] != p.zero()) return false;
    for (std::size_t y = 0; y < n.size(); ++y) {
      if (f[m.zero()][y] != p.zero()) return false;
      for (std::size_t x2 = 0; x2 < m.size(); ++x2)
        if (f[m.join(x, x2)][y] != p.join(f[x][y], f[x2][y])) return false;
      for (std::size_t y2 = 0; y2 < n.size(); ++y2)
        if (f[x][n.join(y, y2)] != p.join(f[x][y], f[x][y2])) return false;
      for (std::size_t a = 0; a < ns; ++a) {
        std::size_t target = p.act(a, f[x][y]);
        if (f[m.act(a, x)][y] != target || f[x][n.act(a, y)] != target) return false;
      }
    }
  }
  return true;
}

}  // namespace mvk
