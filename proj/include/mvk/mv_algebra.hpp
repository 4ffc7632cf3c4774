// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mvk/rational.hpp"

namespace mvk {

class MvAlgebra;
using AlgebraPtr = std::shared_ptr<const MvAlgebra>;
class MvElement;

// An MV-algebra <A, oplus, star, 0>. Finite kinds carry explicit operation
// tables over carrier indices; the rational unit interval computes directly
// on exact rationals. Derived operations (odot, ominus, arrow, join, meet,
// the order) are always computed from oplus/star, never stored.
class MvAlgebra : public std::enable_shared_from_this<MvAlgebra> {
 public:
  enum class Kind { Chain, Product, UnitInterval, Table };

  // Chain with k+1 equally spaced elements {0, 1/k, ..., 1}; k >= 1.
  static AlgebraPtr chain(unsigned k);
  // Componentwise product of finitely many finite algebras (>= 2 parts).
  static AlgebraPtr product(std::vector<AlgebraPtr> parts);
  static AlgebraPtr unit_interval();
  // Raw tables, deliberately unchecked: quotients and reconstructions land
  // here, and corrupted tables must be representable so law checks have
  // something to refuse.
  static AlgebraPtr from_raw_tables(std::vector<std::string> labels,
                                    std::vector<std::size_t> oplus_table,
                                    std::vector<std::size_t> star_table,
                                    std::size_t zero);

  // Spec strings: "chain:K", "product:<spec>,<spec>[,...]" (parenthesize
  // nested products), "unit".
  static AlgebraPtr parse(std::string_view spec);
  // Text form: header "chain K" / "product <spec>,<spec>" / "unit", or
  // "table N" followed by labels, zero index and explicit tables.
  static AlgebraPtr read_text(std::istream& in);
  void write_text(std::ostream& out) const;

  Kind kind() const { return kind_; }
  bool finite() const { return kind_ != Kind::UnitInterval; }
  std::size_t size() const;  // throws std::domain_error on the unit interval
  std::string describe() const;
  const std::string& label(std::size_t i) const;
  std::optional<std::size_t> index_of_label(std::string_view text) const;

  // Index-level operations, finite algebras only.
  std::size_t zero_index() const;
  std::size_t one_index() const;
  std::size_t oplus(std::size_t a, std::size_t b) const;
  std::size_t star(std::size_t a) const;
  std::size_t odot(std::size_t a, std::size_t b) const;
  std::size_t ominus(std::size_t a, std::size_t b) const;
  std::size_t arrow(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  std::size_t meet(std::size_t a, std::size_t b) const;
  bool leq(std::size_t a, std::size_t b) const;
  // d(a,b) = (a ominus b) oplus (b ominus a); zero iff a == b in any MV-algebra.
  std::size_t distance(std::size_t a, std::size_t b) const;

  MvElement elem(std::size_t index) const;
  MvElement elem(const Rational& value) const;  // unit interval only
  MvElement zero() const;
  MvElement one() const;

  unsigned chain_order() const;                   // Chain only
  const std::vector<AlgebraPtr>& parts() const;   // Product only

 private:
  MvAlgebra() = default;

  Kind kind_ = Kind::Table;
  unsigned chain_k_ = 0;
  std::vector<AlgebraPtr> parts_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> oplus_;  // row-major size*size
  std::vector<std::size_t> star_;
  std::size_t zero_ = 0;
  std::size_t one_ = 0;
};

bool same_algebra(const MvAlgebra& a, const MvAlgebra& b);

// Carrier-index element for finite algebras, exact rational for the unit
// interval. Operations on elements of different algebras throw.
class MvElement {
 public:
  MvElement() = default;
  MvElement(AlgebraPtr alg, std::size_t index);
  MvElement(AlgebraPtr alg, Rational value);

  const AlgebraPtr& algebra() const { return alg_; }
  std::size_t index() const;
  const Rational& value() const;
  std::string str() const;

  friend bool operator==(const MvElement& a, const MvElement& b);
  friend bool operator!=(const MvElement& a, const MvElement& b) { return !(a == b); }

 private:
  AlgebraPtr alg_;
  std::size_t index_ = 0;
  Rational value_;
};

MvElement oplus(const MvElement& a, const MvElement& b);
MvElement star(const MvElement& a);
MvElement odot(const MvElement& a, const MvElement& b);
MvElement ominus(const MvElement& a, const MvElement& b);
MvElement arrow(const MvElement& a, const MvElement& b);
MvElement join(const MvElement& a, const MvElement& b);
MvElement meet(const MvElement& a, const MvElement& b);
bool leq(const MvElement& a, const MvElement& b);

struct LawCheck {
  std::string law;
  bool pass = true;
  std::string witness;  // empty when the law holds
};

struct AxiomReport {
  std::vector<LawCheck> laws;
  bool all_pass() const;
  std::size_t failure_count() const;
};

// Exhaustive over finite carriers; the unit interval is sampled on the grid
// {0, 1/grid, ..., 1}.
AxiomReport check_axioms(const MvAlgebra& a, unsigned unit_grid = 10);

// Idempotents of oplus. Finite algebras only.
std::vector<std::size_t> boolean_center(const MvAlgebra& a);

// Verified MV-homomorphism: preserves oplus, star and 0 (hence all derived
// operations). Construction checks exhaustively and throws on a violation.
struct MvHom {
  AlgebraPtr dom;
  AlgebraPtr cod;
  std::vector<std::size_t> map;

  std::size_t operator()(std::size_t a) const { return map[a]; }
};

MvHom make_mv_hom(AlgebraPtr dom, AlgebraPtr cod, std::vector<std::size_t> map);
MvHom compose(const MvHom& g, const MvHom& f);  // g after f
MvHom identity_hom(AlgebraPtr a);

}  // namespace mvk
