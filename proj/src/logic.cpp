// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include "mvk/logic.hpp"

#include <algorithm>
#include <atomic>
#include <set>

#include "mvk/parallel.hpp"

namespace mvk {

FormulaPtr Formula::make_var(int index) {
  if (index < 1) throw std::invalid_argument("variable index must be positive");
  auto f = std::make_shared<Formula>();
  f->tag = Tag::Var;
  f->var = index;
  return f;
}

FormulaPtr Formula::make_not(FormulaPtr inner) {
  auto f = std::make_shared<Formula>();
  f->tag = Tag::Not;
  f->left = std::move(inner);
  return f;
}

FormulaPtr Formula::make_implies(FormulaPtr a, FormulaPtr b) {
  auto f = std::make_shared<Formula>();
  f->tag = Tag::Implies;
  f->left = std::move(a);
  f->right = std::move(b);
  return f;
}

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->tag != b->tag) return false;
  switch (a->tag) {
    case Formula::Tag::Var:
      return a->var == b->var;
    case Formula::Tag::Not:
      return equal(a->left, b->left);
    case Formula::Tag::Implies:
      return equal(a->left, b->left) && equal(a->right, b->right);
  }
  return false;
}

std::string to_string(const Formula& f) {
  switch (f.tag) {
    case Formula::Tag::Var:
      return "x" + std::to_string(f.var);
    case Formula::Tag::Not: {
      const Formula& inner = *f.left;
      if (inner.tag == Formula::Tag::Implies)
        return "~(" + to_string(inner) + ")";
      return "~" + to_string(inner);
    }
    case Formula::Tag::Implies: {
      std::string lhs = to_string(*f.left);
      if (f.left->tag == Formula::Tag::Implies) lhs = "(" + lhs + ")";
      return lhs + " -> " + to_string(*f.right);  // right associative
    }
  }
  return "";
}

ParseError::ParseError(const std::string& message, std::size_t off, std::size_t tok)
    : std::runtime_error(message + " (offset " + std::to_string(off) + ", token " +
                         std::to_string(tok) + ")"),
      offset(off),
      token(tok) {}

namespace {

struct Token {
  enum class Kind { LParen, RParen, Not, Arrow, Var, End };
  Kind kind = Kind::End;
  int var = 0;
  std::size_t offset = 0;
  std::size_t ordinal = 0;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0, ordinal = 0;
  while (i < text.size()) {
    char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    ++ordinal;
    Token t;
    t.offset = i;
    t.ordinal = ordinal;
    if (c == '(') {
      t.kind = Token::Kind::LParen;
      ++i;
    } else if (c == ')') {
      t.kind = Token::Kind::RParen;
      ++i;
    } else if (c == '~' || c == '!') {
      t.kind = Token::Kind::Not;
      ++i;
    } else if (c == '-') {
      if (i + 1 >= text.size() || text[i + 1] != '>')
        throw ParseError("unknown token '-'", i, ordinal);
      t.kind = Token::Kind::Arrow;
      i += 2;
    } else if (c == 'x') {
      std::size_t j = i + 1;
      while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
      if (j == i + 1)
        throw ParseError("variable needs a numeric index", i, ordinal);
      if (j - i - 1 > 6) throw ParseError("variable index too large", i, ordinal);
      int idx = 0;
      for (std::size_t p = i + 1; p < j; ++p) idx = idx * 10 + (text[p] - '0');
      if (idx < 1) throw ParseError("variable index must be positive", i, ordinal);
      t.kind = Token::Kind::Var;
      t.var = idx;
      i = j;
    } else {
      throw ParseError(std::string("unknown token '") + c + "'", i, ordinal);
    }
    out.push_back(t);
  }
  Token end;
  end.kind = Token::Kind::End;
  end.offset = text.size();
  end.ordinal = ordinal + 1;
  out.push_back(end);
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FormulaPtr run() {
    if (toks_.front().kind == Token::Kind::End)
      throw ParseError("empty input", 0, 1);
    FormulaPtr f = implication();
    const Token& t = peek();
    if (t.kind != Token::Kind::End)
      throw ParseError("unexpected trailing token", t.offset, t.ordinal);
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }

  FormulaPtr implication() {
    FormulaPtr lhs = unary();
    if (peek().kind == Token::Kind::Arrow) {
      take();
      return Formula::make_implies(std::move(lhs), implication());
    }
    return lhs;
  }

  FormulaPtr unary() {
    const Token& t = peek();
    if (t.kind == Token::Kind::Not) {
      take();
      return Formula::make_not(unary());
    }
    return atom();
  }

  FormulaPtr atom() {
    const Token& t = take();
    switch (t.kind) {
      case Token::Kind::Var:
        return Formula::make_var(t.var);
      case Token::Kind::LParen: {
        FormulaPtr inner = implication();
        const Token& close = take();
        if (close.kind != Token::Kind::RParen)
          throw ParseError("expected ')'", close.offset, close.ordinal);
        return inner;
      }
      case Token::Kind::Arrow:
        throw ParseError("expected formula, found '->'", t.offset, t.ordinal);
      case Token::Kind::RParen:
        throw ParseError("expected formula, found ')'", t.offset, t.ordinal);
      case Token::Kind::End:
        throw ParseError("unexpected end of input", t.offset, t.ordinal);
      default:
        throw ParseError("expected formula", t.offset, t.ordinal);
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return Parser(lex(text)).run(); }

TermPtr MvTerm::make_var(int index) {
  auto t = std::make_shared<MvTerm>();
  t->tag = Tag::Var;
  t->var = index;
  return t;
}

TermPtr MvTerm::make_star(TermPtr inner) {
  auto t = std::make_shared<MvTerm>();
  t->tag = Tag::Star;
  t->left = std::move(inner);
  return t;
}

TermPtr MvTerm::make_oplus(TermPtr a, TermPtr b) {
  auto t = std::make_shared<MvTerm>();
  t->tag = Tag::Oplus;
  t->left = std::move(a);
  t->right = std::move(b);
  return t;
}

std::string to_string(const MvTerm& t) {
  switch (t.tag) {
    case MvTerm::Tag::Var:
      return "x" + std::to_string(t.var);
    case MvTerm::Tag::Star:
      return (t.left->tag == MvTerm::Tag::Var ? to_string(*t.left)
                                              : "(" + to_string(*t.left) + ")") +
             "*";
    case MvTerm::Tag::Oplus:
      return "(" + to_string(*t.left) + " + " + to_string(*t.right) + ")";
  }
  return "";
}

TermPtr translate_tau(const FormulaPtr& f) {
  if (!f) throw std::invalid_argument("null formula");
  switch (f->tag) {
    case Formula::Tag::Var:
      return MvTerm::make_var(f->var);
    case Formula::Tag::Not:
      return MvTerm::make_star(translate_tau(f->left));
    case Formula::Tag::Implies:
      return MvTerm::make_oplus(MvTerm::make_star(translate_tau(f->left)),
                                translate_tau(f->right));
  }
  throw std::logic_error("unreachable");
}

namespace {

void collect_vars(const FormulaPtr& f, std::set<int>& out) {
  if (!f) return;
  if (f->tag == Formula::Tag::Var) out.insert(f->var);
  collect_vars(f->left, out);
  collect_vars(f->right, out);
}

// chain-index evaluation: oplus is clamped addition, star reflects
std::size_t eval_chain(const MvTerm& t, const std::vector<std::size_t>& value_of_var,
                       unsigned k) {
  switch (t.tag) {
    case MvTerm::Tag::Var:
      return value_of_var[std::size_t(t.var)];
    case MvTerm::Tag::Star:
      return k - eval_chain(*t.left, value_of_var, k);
    case MvTerm::Tag::Oplus: {
      std::size_t s =
          eval_chain(*t.left, value_of_var, k) + eval_chain(*t.right, value_of_var, k);
      return std::min<std::size_t>(s, k);
    }
  }
  return 0;
}

}  // namespace

std::vector<int> variables_of(const FormulaPtr& f) {
  std::set<int> vars;
  collect_vars(f, vars);
  return {vars.begin(), vars.end()};
}

MvElement evaluate(const TermPtr& term, const std::map<int, MvElement>& assignment,
                   const AlgebraPtr& alg) {
  if (!term) throw std::invalid_argument("null term");
  switch (term->tag) {
    case MvTerm::Tag::Var: {
      auto it = assignment.find(term->var);
      if (it == assignment.end())
        throw std::invalid_argument("unassigned variable x" + std::to_string(term->var));
      if (!same_algebra(*it->second.algebra(), *alg))
        throw std::invalid_argument("assignment lands in a different algebra");
      return it->second;
    }
    case MvTerm::Tag::Star:
      return star(evaluate(term->left, assignment, alg));
    case MvTerm::Tag::Oplus:
      return oplus(evaluate(term->left, assignment, alg),
                   evaluate(term->right, assignment, alg));
  }
  throw std::logic_error("unreachable");
}

TautologyResult is_tautology_on_chain(const FormulaPtr& f, unsigned k,
                                      std::size_t max_configs, unsigned threads) {
  if (!f) throw std::invalid_argument("null formula");
  if (k < 1) throw std::invalid_argument("chain order must be >= 1");
  TermPtr term = translate_tau(f);
  std::vector<int> vars = variables_of(f);

  // configuration count (k+1)^v, refused beyond the cap
  std::size_t configs = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (configs > max_configs / (k + 1) + 1) {
      configs = max_configs + 1;
      break;
    }
    configs *= (k + 1);
  }
  if (configs > max_configs)
    throw std::length_error("assignment space exceeds the exhaustive-scan cap");

  TautologyResult result;
  result.chain = k;
  if (vars.empty()) {
    std::vector<std::size_t> value_of_var(1, 0);
    if (eval_chain(*term, value_of_var, k) != k) result.tautology = false;
    return result;
  }

  int max_var = vars.back();
  std::atomic<std::size_t> first_bad{configs};

  // ordinal -> assignment: earlier variables most significant, values ascend
  auto scan = [&](std::size_t begin, std::size_t end) {
    std::vector<std::size_t> value_of_var(std::size_t(max_var) + 1, 0);
    for (std::size_t ord = begin; ord < end; ++ord) {
      if (first_bad.load(std::memory_order_relaxed) < ord) return;
      std::size_t rest = ord;
      for (std::size_t vi = vars.size(); vi-- > 0;) {
        value_of_var[std::size_t(vars[vi])] = rest % (k + 1);
        rest /= (k + 1);
      }
      if (eval_chain(*term, value_of_var, k) != k) {
        std::size_t cur = first_bad.load(std::memory_order_relaxed);
        while (ord < cur && !first_bad.compare_exchange_weak(cur, ord)) {
        }
        return;
      }
    }
  };
  parallel_chunks(configs, threads, scan);

  std::size_t bad = first_bad.load();
  if (bad < configs) {
    result.tautology = false;
    std::size_t rest = bad;
    std::vector<std::size_t> vals(vars.size());
    for (std::size_t vi = vars.size(); vi-- > 0;) {
      vals[vi] = rest % (k + 1);
      rest /= (k + 1);
    }
    for (std::size_t vi = 0; vi < vars.size(); ++vi) result.witness[vars[vi]] = vals[vi];
  }
  return result;
}

}  // namespace mvk
