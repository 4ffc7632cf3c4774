// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mvk/mv_algebra.hpp"

namespace mvk {

// Propositional formulas over negation and implication; variables are x1,
// x2, ... with positive indices.
struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  enum class Tag { Var, Not, Implies };

  Tag tag = Tag::Var;
  int var = 0;         // Var
  FormulaPtr left;     // Not: operand; Implies: antecedent
  FormulaPtr right;    // Implies: consequent

  static FormulaPtr make_var(int index);
  static FormulaPtr make_not(FormulaPtr f);
  static FormulaPtr make_implies(FormulaPtr a, FormulaPtr b);
};

bool equal(const FormulaPtr& a, const FormulaPtr& b);
std::string to_string(const Formula& f);

struct ParseError : std::runtime_error {
  ParseError(const std::string& message, std::size_t offset, std::size_t token);
  std::size_t offset;  // 0-based character position
  std::size_t token;   // 1-based token ordinal
};

// Grammar: formula := unary ('->' formula)? ; unary := '~' unary | atom ;
// atom := variable | '(' formula ')'. Implication associates to the right.
FormulaPtr parse_formula(std::string_view text);

// Terms over an MV-algebra signature: variables, star, oplus.
struct MvTerm;
using TermPtr = std::shared_ptr<const MvTerm>;

struct MvTerm {
  enum class Tag { Var, Star, Oplus };

  Tag tag = Tag::Var;
  int var = 0;
  TermPtr left;
  TermPtr right;

  static TermPtr make_var(int index);
  static TermPtr make_star(TermPtr t);
  static TermPtr make_oplus(TermPtr a, TermPtr b);
};

std::string to_string(const MvTerm& t);

// Negation becomes star, implication a -> b becomes a* oplus b.
TermPtr translate_tau(const FormulaPtr& f);

std::vector<int> variables_of(const FormulaPtr& f);  // sorted, distinct

// Evaluation in an arbitrary algebra; every variable of the term must be
// assigned an element of that algebra.
MvElement evaluate(const TermPtr& term,
                   const std::map<int, MvElement>& assignment,
                   const AlgebraPtr& alg);

struct TautologyResult {
  bool tautology = true;
  unsigned chain = 0;
  // First falsifying assignment in lexicographic order (variables ascending,
  // values ascending), as chain indices. Empty when tautology.
  std::map<int, std::size_t> witness;
};

// Exhaustive scan of all (k+1)^v assignments over Chain(k). Refuses (throws
// std::length_error) beyond max_configs rather than sampling.
TautologyResult is_tautology_on_chain(const FormulaPtr& f, unsigned k,
                                      std::size_t max_configs = 10'000'000,
                                      unsigned threads = 1);

}  // namespace mvk
