// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/mv_algebra.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mvk {

namespace {

std::size_t checked_index(const std::vector<std::string>& labels, std::size_t i) {
  if (i >= labels.size()) throw std::invalid_argument("carrier index out of range");
  return i;
}

}  // namespace

AlgebraPtr MvAlgebra::chain(unsigned k) {
  if (k < 1) throw std::invalid_argument("chain order must be >= 1");
  auto a = std::shared_ptr<MvAlgebra>(new MvAlgebra);
  a->kind_ = Kind::Chain;
  a->chain_k_ = k;
  std::size_t n = k + 1;
  a->labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) a->labels_.push_back(to_string(make_rational(long(i), long(k))));
  a->oplus_.resize(n * n);
  a->star_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    a->star_[i] = k - i;
    for (std::size_t j = 0; j < n; ++j) a->oplus_[i * n + j] = std::min(i + j, std::size_t{k});
  }
  a->zero_ = 0;
  a->one_ = k;
  return a;
}

AlgebraPtr MvAlgebra::product(std::vector<AlgebraPtr> parts) {
  if (parts.size() < 2) throw std::invalid_argument("product needs at least two parts");
  std::size_t n = 1;
  for (const auto& p : parts) {
    if (!p) throw std::invalid_argument("null product part");
    if (!p->finite()) throw std::invalid_argument("product parts must be finite");
    n *= p->size();
    if (n > 4096) throw std::invalid_argument("product carrier too large");
  }
  auto a = std::shared_ptr<MvAlgebra>(new MvAlgebra);
  a->kind_ = Kind::Product;
  a->parts_ = std::move(parts);
  const auto& ps = a->parts_;

  // big-endian mixed radix: first part most significant
  auto digits = [&ps](std::size_t idx) {
    std::vector<std::size_t> d(ps.size());
    for (std::size_t i = ps.size(); i-- > 0;) {
      d[i] = idx % ps[i]->size();
      idx /= ps[i]->size();
    }
    return d;
  };
  auto from_digits = [&ps](const std::vector<std::size_t>& d) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < ps.size(); ++i) idx = idx * ps[i]->size() + d[i];
    return idx;
  };

  a->labels_.resize(n);
  a->star_.resize(n);
  a->oplus_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    auto di = digits(i);
    std::string lab = "(";
    for (std::size_t c = 0; c < ps.size(); ++c) {
      if (c) lab += ",";
      lab += ps[c]->label(di[c]);
    }
    lab += ")";
    a->labels_[i] = lab;
    std::vector<std::size_t> ds(ps.size());
    for (std::size_t c = 0; c < ps.size(); ++c) ds[c] = ps[c]->star(di[c]);
    a->star_[i] = from_digits(ds);
    for (std::size_t j = 0; j < n; ++j) {
      auto dj = digits(j);
      std::vector<std::size_t> dsum(ps.size());
      for (std::size_t c = 0; c < ps.size(); ++c) dsum[c] = ps[c]->oplus(di[c], dj[c]);
      a->oplus_[i * n + j] = from_digits(dsum);
    }
  }
  a->zero_ = 0;
  a->one_ = a->star_[0];
  return a;
}

AlgebraPtr MvAlgebra::unit_interval() {
  auto a = std::shared_ptr<MvAlgebra>(new MvAlgebra);
  a->kind_ = Kind::UnitInterval;
  return a;
}

AlgebraPtr MvAlgebra::from_raw_tables(std::vector<std::string> labels,
                                      std::vector<std::size_t> oplus_table,
                                      std::vector<std::size_t> star_table,
                                      std::size_t zero) {
  std::size_t n = labels.size();
  if (n == 0) throw std::invalid_argument("empty carrier");
  if (oplus_table.size() != n * n || star_table.size() != n)
    throw std::invalid_argument("table size mismatch");
  for (auto v : oplus_table)
    if (v >= n) throw std::invalid_argument("oplus table entry out of range");
  for (auto v : star_table)
    if (v >= n) throw std::invalid_argument("star table entry out of range");
  if (zero >= n) throw std::invalid_argument("zero index out of range");
  auto a = std::shared_ptr<MvAlgebra>(new MvAlgebra);
  a->kind_ = Kind::Table;
  a->labels_ = std::move(labels);
  a->oplus_ = std::move(oplus_table);
  a->star_ = std::move(star_table);
  a->zero_ = zero;
  a->one_ = a->star_[zero];
  return a;
}

namespace {

// splits on top-level commas; parentheses nest
std::vector<std::string> split_spec_list(std::string_view text) {
  std::vector<std::string> parts;
  std::string cur;
  int depth = 0;
  for (char ch : text) {
    if (ch == '(') depth++;
    if (ch == ')') depth--;
    if (ch == ',' && depth == 0) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  parts.push_back(cur);
  return parts;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

AlgebraPtr MvAlgebra::parse(std::string_view spec) {
  spec = trim(spec);
  if (spec.size() >= 2 && spec.front() == '(' && spec.back() == ')') {
    // only strip parens when they wrap the whole spec
    int depth = 0;
    bool wraps = true;
    for (std::size_t i = 0; i + 1 < spec.size(); ++i) {
      if (spec[i] == '(') depth++;
      if (spec[i] == ')') depth--;
      if (depth == 0) { wraps = false; break; }
    }
    if (wraps) return parse(spec.substr(1, spec.size() - 2));
  }
  if (spec == "unit") return unit_interval();
  if (spec.rfind("chain:", 0) == 0) {
    auto num = spec.substr(6);
    unsigned k = 0;
    if (num.empty()) throw std::invalid_argument("chain spec needs an order");
    for (char ch : num) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("bad chain order in spec");
      k = k * 10 + unsigned(ch - '0');
      if (k > 1000) throw std::invalid_argument("chain order too large");
    }
    return chain(k);
  }
  if (spec.rfind("product:", 0) == 0) {
    auto rest = spec.substr(8);
    std::vector<AlgebraPtr> parts;
    for (const auto& p : split_spec_list(rest)) parts.push_back(parse(p));
    return product(std::move(parts));
  }
  throw std::invalid_argument("unrecognized algebra spec: " + std::string(spec));
}

std::string MvAlgebra::describe() const {
  switch (kind_) {
    case Kind::Chain:
      return "chain:" + std::to_string(chain_k_);
    case Kind::UnitInterval:
      return "unit";
    case Kind::Product: {
      std::string out = "product:";
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        std::string d = parts_[i]->describe();
        if (d.rfind("product:", 0) == 0) d = "(" + d + ")";
        out += d;
      }
      return out;
    }
    case Kind::Table:
      return "table:" + std::to_string(labels_.size());
  }
  return "";
}

AlgebraPtr MvAlgebra::read_text(std::istream& in) {
  std::string kw;
  if (!(in >> kw)) throw std::invalid_argument("empty algebra text");
  if (kw == "unit") return unit_interval();
  if (kw == "chain") {
    unsigned k = 0;
    if (!(in >> k)) throw std::invalid_argument("chain header needs an order");
    return chain(k);
  }
  if (kw == "product") {
    std::string rest;
    std::getline(in, rest);
    return parse("product:" + std::string(trim(rest)));
  }
  if (kw == "table") {
    std::size_t n = 0;
    if (!(in >> n) || n == 0) throw std::invalid_argument("table header needs a size");
    auto expect = [&in](const char* word) {
      std::string t;
      if (!(in >> t) || t != word)
        throw std::invalid_argument(std::string("algebra text: expected '") + word + "'");
    };
    expect("labels");
    std::vector<std::string> labels(n);
    for (auto& l : labels)
      if (!(in >> l)) throw std::invalid_argument("algebra text: missing label");
    expect("zero");
    std::size_t zero = 0;
    if (!(in >> zero)) throw std::invalid_argument("algebra text: missing zero index");
    expect("oplus");
    std::vector<std::size_t> op(n * n);
    for (auto& v : op)
      if (!(in >> v)) throw std::invalid_argument("algebra text: short oplus table");
    expect("star");
    std::vector<std::size_t> st(n);
    for (auto& v : st)
      if (!(in >> v)) throw std::invalid_argument("algebra text: short star table");
    return from_raw_tables(std::move(labels), std::move(op), std::move(st), zero);
  }
  throw std::invalid_argument("unrecognized algebra text header: " + kw);
}

void MvAlgebra::write_text(std::ostream& out) const {
  switch (kind_) {
    case Kind::Chain:
      out << "chain " << chain_k_ << "\n";
      return;
    case Kind::UnitInterval:
      out << "unit\n";
      return;
    case Kind::Product:
      out << "product " << describe().substr(8) << "\n";
      return;
    case Kind::Table: {
      std::size_t n = labels_.size();
      out << "table " << n << "\nlabels";
      for (const auto& l : labels_) out << " " << l;
      out << "\nzero " << zero_ << "\noplus\n";
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << oplus_[i * n + j];
        out << "\n";
      }
      out << "star\n";
      for (std::size_t i = 0; i < n; ++i) out << (i ? " " : "") << star_[i];
      out << "\n";
      return;
    }
  }
}

std::size_t MvAlgebra::size() const {
  if (!finite()) throw std::domain_error("unit interval has no finite carrier");
  return labels_.size();
}

const std::string& MvAlgebra::label(std::size_t i) const {
  return labels_[checked_index(labels_, i)];
}

std::optional<std::size_t> MvAlgebra::index_of_label(std::string_view text) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == text) return i;
  return std::nullopt;
}

std::size_t MvAlgebra::zero_index() const {
  if (!finite()) throw std::domain_error("unit interval elements are rationals");
  return zero_;
}

std::size_t MvAlgebra::one_index() const {
  if (!finite()) throw std::domain_error("unit interval elements are rationals");
  return one_;
}

std::size_t MvAlgebra::oplus(std::size_t a, std::size_t b) const {
  std::size_t n = size();
  if (a >= n || b >= n) throw std::invalid_argument("carrier index out of range");
  return oplus_[a * n + b];
}

std::size_t MvAlgebra::star(std::size_t a) const {
  if (a >= size()) throw std::invalid_argument("carrier index out of range");
  return star_[a];
}

std::size_t MvAlgebra::odot(std::size_t a, std::size_t b) const {
  return star(oplus(star(a), star(b)));
}

std::size_t MvAlgebra::ominus(std::size_t a, std::size_t b) const {
  return odot(a, star(b));
}

std::size_t MvAlgebra::arrow(std::size_t a, std::size_t b) const {
  return oplus(star(a), b);
}

std::size_t MvAlgebra::join(std::size_t a, std::size_t b) const {
  return oplus(ominus(a, b), b);
}

std::size_t MvAlgebra::meet(std::size_t a, std::size_t b) const {
  return star(join(star(a), star(b)));
}

bool MvAlgebra::leq(std::size_t a, std::size_t b) const {
  return oplus(star(a), b) == one_;
}

std::size_t MvAlgebra::distance(std::size_t a, std::size_t b) const {
  return oplus(ominus(a, b), ominus(b, a));
}

MvElement MvAlgebra::elem(std::size_t index) const {
  if (!finite()) throw std::domain_error("unit interval elements are rationals");
  checked_index(labels_, index);
  return MvElement(shared_from_this(), index);
}

MvElement MvAlgebra::elem(const Rational& value) const {
  if (finite()) throw std::domain_error("finite algebra elements are indices");
  if (!in_unit_interval(value)) throw std::invalid_argument("value outside [0,1]");
  return MvElement(shared_from_this(), value);
}

MvElement MvAlgebra::zero() const {
  return finite() ? elem(zero_) : elem(Rational(0));
}

MvElement MvAlgebra::one() const {
  return finite() ? elem(one_) : elem(Rational(1));
}

unsigned MvAlgebra::chain_order() const {
  if (kind_ != Kind::Chain) throw std::domain_error("not a chain");
  return chain_k_;
}

const std::vector<AlgebraPtr>& MvAlgebra::parts() const {
  if (kind_ != Kind::Product) throw std::domain_error("not a product");
  return parts_;
}

bool same_algebra(const MvAlgebra& a, const MvAlgebra& b) {
  if (&a == &b) return true;
  if (a.kind() != b.kind()) return false;
  if (!a.finite()) return true;  // both unit intervals
  if (a.size() != b.size()) return false;
  std::size_t n = a.size();
  if (a.zero_index() != b.zero_index()) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.star(i) != b.star(i)) return false;
    for (std::size_t j = 0; j < n; ++j)
      if (a.oplus(i, j) != b.oplus(i, j)) return false;
  }
  return true;
}

MvElement::MvElement(AlgebraPtr alg, std::size_t index)
    : alg_(std::move(alg)), index_(index) {}

MvElement::MvElement(AlgebraPtr alg, Rational value)
    : alg_(std::move(alg)), value_(std::move(value)) {}

std::size_t MvElement::index() const {
  if (!alg_ || !alg_->finite()) throw std::domain_error("element has no carrier index");
  return index_;
}

const Rational& MvElement::value() const {
  if (!alg_ || alg_->finite()) throw std::domain_error("element has no rational value");
  return value_;
}

std::string MvElement::str() const {
  if (!alg_) return "<detached>";
  return alg_->finite() ? alg_->label(index_) : to_string(value_);
}

bool operator==(const MvElement& a, const MvElement& b) {
  if (!a.alg_ || !b.alg_) throw std::invalid_argument("comparing detached elements");
  if (!same_algebra(*a.alg_, *b.alg_))
    throw std::invalid_argument("comparing elements of different algebras");
  return a.alg_->finite() ? a.index_ == b.index_ : a.value_ == b.value_;
}

namespace {

const MvAlgebra& common_algebra(const MvElement& a, const MvElement& b) {
  if (!a.algebra() || !b.algebra()) throw std::invalid_argument("detached element");
  if (!same_algebra(*a.algebra(), *b.algebra()))
    throw std::invalid_argument("operands belong to different algebras");
  return *a.algebra();
}

}  // namespace

MvElement oplus(const MvElement& a, const MvElement& b) {
  const MvAlgebra& alg = common_algebra(a, b);
  if (alg.finite()) return a.algebra()->elem(alg.oplus(a.index(), b.index()));
  return a.algebra()->elem(unit_oplus(a.value(), b.value()));
}

MvElement star(const MvElement& a) {
  if (!a.algebra()) throw std::invalid_argument("detached element");
  const MvAlgebra& alg = *a.algebra();
  if (alg.finite()) return a.algebra()->elem(alg.star(a.index()));
  return a.algebra()->elem(unit_star(a.value()));
}

MvElement odot(const MvElement& a, const MvElement& b) {
  return star(oplus(star(a), star(b)));
}

MvElement ominus(const MvElement& a, const MvElement& b) { return odot(a, star(b)); }

MvElement arrow(const MvElement& a, const MvElement& b) { return oplus(star(a), b); }

MvElement join(const MvElement& a, const MvElement& b) {
  return oplus(ominus(a, b), b);
}

MvElement meet(const MvElement& a, const MvElement& b) {
  return star(join(star(a), star(b)));
}

bool leq(const MvElement& a, const MvElement& b) {
  const MvAlgebra& alg = common_algebra(a, b);
  (void)alg;
  return oplus(star(a), b) == a.algebra()->one();
}

bool AxiomReport::all_pass() const {
  for (const auto& l : laws)
    if (!l.pass) return false;
  return true;
}

std::size_t AxiomReport::failure_count() const {
  std::size_t c = 0;
  for (const auto& l : laws)
    if (!l.pass) ++c;
  return c;
}

namespace {

struct Law {
  const char* name;
  int arity;
  MvElement (*lhs)(const MvElement&, const MvElement&, const MvElement&);
  MvElement (*rhs)(const MvElement&, const MvElement&, const MvElement&);
};

std::string witness_string(const std::vector<MvElement>& xs, int arity,
                           const MvElement& l, const MvElement& r) {
  static const char* names[3] = {"x", "y", "z"};
  std::string w;
  for (int i = 0; i < arity; ++i) {
    if (i) w += ", ";
    w += names[i];
    w += "=";
    w += xs[std::size_t(i)].str();
  }
  if (arity) w += ": ";
  w += "lhs=" + l.str() + " rhs=" + r.str();
  return w;
}

}  // namespace

AxiomReport check_axioms(const MvAlgebra& a, unsigned unit_grid) {
  AlgebraPtr alg = a.shared_from_this();
  std::vector<MvElement> carrier;
  if (a.finite()) {
    for (std::size_t i = 0; i < a.size(); ++i) carrier.push_back(a.elem(i));
  } else {
    if (unit_grid < 1) unit_grid = 1;
    for (unsigned i = 0; i <= unit_grid; ++i)
      carrier.push_back(a.elem(make_rational(long(i), long(unit_grid))));
  }

  auto O = [alg]() { return alg->zero(); };
  auto I = [alg]() { return alg->one(); };

  static const Law laws[] = {
      {"MV1 (x+y)+z = x+(y+z)", 3,
       [](const MvElement& x, const MvElement& y, const MvElement& z) { return oplus(oplus(x, y), z); },
       [](const MvElement& x, const MvElement& y, const MvElement& z) { return oplus(x, oplus(y, z)); }},
      {"MV2 x+y = y+x", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) { return oplus(x, y); },
       [](const MvElement& x, const MvElement& y, const MvElement&) { return oplus(y, x); }},
      {"MV3 x+0 = x", 1,
       [](const MvElement& x, const MvElement&, const MvElement&) { return oplus(x, x.algebra()->zero()); },
       [](const MvElement& x, const MvElement&, const MvElement&) { return x; }},
      {"MV4 x** = x", 1,
       [](const MvElement& x, const MvElement&, const MvElement&) { return star(star(x)); },
       [](const MvElement& x, const MvElement&, const MvElement&) { return x; }},
      {"MV5 x+0* = 0*", 1,
       [](const MvElement& x, const MvElement&, const MvElement&) {
         return oplus(x, star(x.algebra()->zero()));
       },
       [](const MvElement& x, const MvElement&, const MvElement&) {
         return star(x.algebra()->zero());
       }},
      {"MV6 (x*+y)*+y = (y*+x)*+x", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return oplus(star(oplus(star(x), y)), y);
       },
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return oplus(star(oplus(star(y), x)), x);
       }},
      {"MV7 1* = 0", 0,
       [](const MvElement& x, const MvElement&, const MvElement&) {
         return star(x.algebra()->one());
       },
       [](const MvElement& x, const MvElement&, const MvElement&) { return x.algebra()->zero(); }},
      {"MV8 x+y = (x* . y*)*", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) { return oplus(x, y); },
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return star(odot(star(x), star(y)));
       }},
      {"MV9 x+x* = 1", 1,
       [](const MvElement& x, const MvElement&, const MvElement&) { return oplus(x, star(x)); },
       [](const MvElement& x, const MvElement&, const MvElement&) { return x.algebra()->one(); }},
      {"MV5' x+1 = 1", 1,
       [](const MvElement& x, const MvElement&, const MvElement&) {
         return oplus(x, x.algebra()->one());
       },
       [](const MvElement& x, const MvElement&, const MvElement&) { return x.algebra()->one(); }},
      {"MV6' (x-y)+y = (y-x)+x", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return oplus(ominus(x, y), y);
       },
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return oplus(ominus(y, x), x);
       }},
      {"DM1 (x v y)* = x* ^ y*", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) { return star(join(x, y)); },
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return meet(star(x), star(y));
       }},
      {"DM2 (x ^ y)* = x* v y*", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) { return star(meet(x, y)); },
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return join(star(x), star(y));
       }},
      {"DM3 (x+y)* = x* . y*", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) { return star(oplus(x, y)); },
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return odot(star(x), star(y));
       }},
      {"DM4 (x . y)* = x* + y*", 2,
       [](const MvElement& x, const MvElement& y, const MvElement&) { return star(odot(x, y)); },
       [](const MvElement& x, const MvElement& y, const MvElement&) {
         return oplus(star(x), star(y));
       }},
  };
  (void)O;
  (void)I;

  AxiomReport report;
  for (const Law& law : laws) {
    LawCheck check;
    check.law = law.name;
    std::size_t dims = law.arity == 0 ? 1 : carrier.size();
    bool done = false;
    for (std::size_t xi = 0; xi < dims && !done; ++xi) {
      std::size_t ydims = law.arity >= 2 ? carrier.size() : 1;
      for (std::size_t yi = 0; yi < ydims && !done; ++yi) {
        std::size_t zdims = law.arity >= 3 ? carrier.size() : 1;
        for (std::size_t zi = 0; zi < zdims && !done; ++zi) {
          const MvElement& x = carrier[law.arity >= 1 ? xi : 0];
          const MvElement& y = carrier[law.arity >= 2 ? yi : 0];
          const MvElement& z = carrier[law.arity >= 3 ? zi : 0];
          MvElement l = law.lhs(x, y, z);
          MvElement r = law.rhs(x, y, z);
          if (!(l == r)) {
            check.pass = false;
            check.witness = witness_string({x, y, z}, law.arity, l, r);
            done = true;
          }
        }
      }
    }
    report.laws.push_back(std::move(check));
  }
  return report;
}

std::vector<std::size_t> boolean_center(const MvAlgebra& a) {
  if (!a.finite()) throw std::domain_error("boolean center needs a finite carrier");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.oplus(i, i) == i) out.push_back(i);
  return out;
}

MvHom make_mv_hom(AlgebraPtr dom, AlgebraPtr cod, std::vector<std::size_t> map) {
  if (!dom || !cod) throw std::invalid_argument("null algebra");
  if (!dom->finite() || !cod->finite())
    throw std::invalid_argument("homomorphisms are table-level: finite algebras only");
  std::size_t n = dom->size(), m = cod->size();
  if (map.size() != n) throw std::invalid_argument("hom map size mismatch");
  for (auto v : map)
    if (v >= m) throw std::invalid_argument("hom map target out of range");
  if (map[dom->zero_index()] != cod->zero_index())
    throw std::invalid_argument("map does not preserve 0");
  for (std::size_t x = 0; x < n; ++x) {
    if (map[dom->star(x)] != cod->star(map[x]))
      throw std::invalid_argument("map does not preserve star at " + dom->label(x));
    for (std::size_t y = 0; y < n; ++y)
      if (map[dom->oplus(x, y)] != cod->oplus(map[x], map[y]))
        throw std::invalid_argument("map does not preserve oplus at (" + dom->label(x) +
                                    ", " + dom->label(y) + ")");
  }
  return MvHom{std::move(dom), std::move(cod), std::move(map)};
}

MvHom compose(const MvHom& g, const MvHom& f) {
  if (!same_algebra(*f.cod, *g.dom))
    throw std::invalid_argument("hom composition: codomain/domain mismatch");
  std::vector<std::size_t> map(f.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g.map[f.map[i]];
  return MvHom{f.dom, g.cod, std::move(map)};
}

MvHom identity_hom(AlgebraPtr a) {
  std::vector<std::size_t> map(a->size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return MvHom{a, a, std::move(map)};
}

}  // namespace mvk
