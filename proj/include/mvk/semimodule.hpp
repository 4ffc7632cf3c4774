// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "mvk/ideals.hpp"
#include "mvk/semiring.hpp"

namespace mvk {

// Vector in the free semimodule S^n: entries are carrier indices of S.
struct Vec {
  SemiringPtr S;
  std::vector<std::size_t> e;

  std::size_t dim() const { return e.size(); }
  friend bool operator==(const Vec& a, const Vec& b) { return a.e == b.e; }
  friend bool operator!=(const Vec& a, const Vec& b) { return !(a == b); }
  friend bool operator<(const Vec& a, const Vec& b) { return a.e < b.e; }
};

Vec zero_vec(SemiringPtr S, std::size_t n);
Vec chi(SemiringPtr S, std::size_t n, std::size_t i);  // 1 at i, 0 elsewhere
Vec join(const Vec& a, const Vec& b);
Vec scale(std::size_t a, const Vec& v);
bool leq(const Vec& a, const Vec& b);
std::string to_string(const Vec& v);

// Big-endian mixed-radix ordinal of a vector among all |S|^n vectors.
std::size_t vec_ordinal(const Vec& v);
Vec vec_from_ordinal(SemiringPtr S, std::size_t n, std::size_t ordinal);

// Row-major matrix over S.
class Matrix {
 public:
  Matrix(SemiringPtr S, std::size_t rows, std::size_t cols);
  Matrix(SemiringPtr S, std::size_t rows, std::size_t cols,
         std::vector<std::size_t> entries);

  const SemiringPtr& semiring() const { return S_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  void set(std::size_t i, std::size_t j, std::size_t v) { e_[i * cols_ + j] = v; }
  Vec row(std::size_t i) const;
  const std::vector<std::size_t>& entries() const { return e_; }

  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  bool operator<(const Matrix& other) const;  // (rows, cols, entries) lex

 private:
  SemiringPtr S_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::size_t> e_;
};

Matrix identity_matrix(SemiringPtr S, std::size_t n);
Matrix zero_matrix(SemiringPtr S, std::size_t rows, std::size_t cols);
// (A B)_ij = join_k A_ik mul B_kj
Matrix matrix_star(const Matrix& a, const Matrix& b);
Matrix matrix_join(const Matrix& a, const Matrix& b);
bool is_idempotent(const Matrix& a);
std::string to_string(const Matrix& a);

// Row action f . K = (join_i f_i K(i,-)): the hom S^m -> S^n attached to an
// m x n matrix.
Vec apply(const Vec& f, const Matrix& k);

// A hom S^m -> S^n tabulated on every vector of S^m (by ordinal).
struct FreeHom {
  SemiringPtr S;
  std::size_t m = 0, n = 0;
  std::vector<std::size_t> images;  // ordinal of image vector, |S|^m entries

  Vec operator()(const Vec& v) const;
};

// Checks the join/action/zero preservation of a tabulated map.
bool is_free_hom(const FreeHom& h, std::string* witness = nullptr);

FreeHom hom_from_matrix(const Matrix& k);
// Reads the matrix back from images of the unit vectors; throws
// std::invalid_argument when the table is not a hom.
Matrix matrix_from_hom(const FreeHom& h);

// Finite semimodule over a SemiringTable on explicit tables. The constructor
// verifies the bounded-join-semilattice laws and the five action laws
// (associativity of the action, distribution over both joins, annihilation
// by 0 on both sides, unit action) and throws LawViolation with a witness.
class FiniteSemimodule {
 public:
  FiniteSemimodule(SemiringPtr S, std::vector<std::string> labels,
                   std::vector<std::size_t> join_table,
                   std::vector<std::size_t> action_table,  // |S| x n row-major
                   std::size_t zero);

  const SemiringPtr& semiring() const { return S_; }
  std::size_t size() const { return n_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  std::size_t join(std::size_t x, std::size_t y) const { return join_[x * n_ + y]; }
  std::size_t act(std::size_t a, std::size_t x) const { return act_[a * n_ + x]; }
  std::size_t zero() const { return zero_; }
  bool leq(std::size_t x, std::size_t y) const { return join(x, y) == y; }

 private:
  SemiringPtr S_;
  std::size_t n_ = 0;
  std::vector<std::string> labels_;
  std::vector<std::size_t> join_;
  std::vector<std::size_t> act_;
  std::size_t zero_ = 0;
};

// Carrier subsets of S^n closed under join, action and containing 0 become
// FiniteSemimodules; the carrier is sorted by vector ordinal.
FiniteSemimodule from_vectors(SemiringPtr S, std::vector<Vec> carrier);

// S as a semimodule over itself (join = semiring join, action = mul).
FiniteSemimodule regular_semimodule(SemiringPtr S);

// S^n materialized (|S|^n elements).
FiniteSemimodule free_semimodule(SemiringPtr S, std::size_t n);

// Subset of a semimodule's carrier; throws unless closed and 0 in subset.
FiniteSemimodule submodule(const FiniteSemimodule& m, std::vector<std::size_t> subset);

// Row semimodule of a matrix: all linear combinations of its rows inside
// S^cols. This is the projective presentation attached to an idempotent.
FiniteSemimodule row_semimodule(const Matrix& u);
std::vector<Vec> row_space(const Matrix& u);  // sorted by ordinal

// A/I as a semimodule over the join/odot reduct of A: classes with
// a . (x/I) = (a odot x)/I. Well-definedness across representatives is
// verified during construction.
FiniteSemimodule quotient_semimodule(const QuotientAlgebra& q, SemiringPtr reduct);

// Same carrier, scalars pulled back along a semiring hom h: S -> T given as
// an index map (verified; throws on violation).
FiniteSemimodule restrict_scalars(const std::vector<std::size_t>& h,
                                  SemiringPtr S, const FiniteSemimodule& n_over_t);

// All semimodule homs M -> N (maps preserving 0, join and the action), via
// backtracking over join-irreducible generators. Candidate count is capped.
std::vector<std::vector<std::size_t>> enumerate_homs(const FiniteSemimodule& m,
                                                     const FiniteSemimodule& n,
                                                     std::size_t max_candidates = 1'000'000);

// Ground-truth retract test: does there exist i: M -> S^n and p: S^n -> M
// with p after i = id? Throws std::length_error beyond the candidate cap.
bool brute_force_projective(const FiniteSemimodule& m, std::size_t n,
                            std::size_t max_candidates = 1'000'000);

// Abstract semimodule isomorphism (zero, join and action preserving
// bijection), decided by color refinement plus backtracking.
bool semimodules_isomorphic(const FiniteSemimodule& a, const FiniteSemimodule& b);

// Row spaces equal as subsets of the common ambient free semimodule after
// zero-padding to max(cols). Implies isomorphism of the presented modules.
bool mutual_expressibility(const Matrix& u, const Matrix& v);

struct StrongnessResult {
  bool strong = true;
  // Witness a, b, x (carrier indices of S, S, M) with equal actions of a and
  // b throughout M but different actions of a* and b* at x.
  std::size_t a = 0, b = 0, x = 0;
};

// Condition: whenever a and b act identically on all of M, so do a* and b*.
// S must be the chosen reduct of alg (tables compared); star comes from alg.
// Witness scan order: pairs (a,b) with a > b, then x ascending.
StrongnessResult is_strong(const MvAlgebra& alg, SemiringPtr reduct,
                           const FiniteSemimodule& m);

// Tensor product of semimodules over a commutative S: finite powerset of
// M x N modulo the congruence generated by bilinearity of finite joins in
// each slot and balancing of the action. |M|*|N| capped at 16.
struct TensorProduct {
  FiniteSemimodule module;
  // class of the simple tensor x (x) y
  std::vector<std::vector<std::size_t>> pure;  // [x][y] -> carrier index
};

TensorProduct tensor_product(const FiniteSemimodule& m, const FiniteSemimodule& n,
                             std::size_t cap_pairs = 16);

// Bimorphism check for a map M x N -> P given as a table.
bool is_bimorphism(const FiniteSemimodule& m, const FiniteSemimodule& n,
                   const FiniteSemimodule& p,
                   const std::vector<std::vector<std::size_t>>& f);

}  // namespace mvk
