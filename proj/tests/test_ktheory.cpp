// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mvk/ktheory.hpp"
#include "mvk/mv_algebra.hpp"
#include "mvk/semiring.hpp"

using namespace mvk;

namespace {

SemiringPtr boolean_ring() { return reducts(*MvAlgebra::chain(1)).first; }
SemiringPtr chain2_ring() { return reducts(*MvAlgebra::chain(2)).first; }

}  // namespace

TEST_SUITE("ktheory") {

TEST_CASE("projective classes over the Boolean semiring up to dimension 2") {
  auto e = enumerate_projectives(boolean_ring(), 2);
  REQUIRE(e.classes.size() == 4);
  CHECK(e.max_dim == 2);

  // id order follows first appearance in the dimension/lex scan
  CHECK(e.classes[0].dim == 0);
  CHECK(to_string(e.classes[0].rep) == "[]");
  CHECK(to_string(e.classes[1].rep) == "[[1]]");
  CHECK(to_string(e.classes[2].rep) == "[[1,0],[0,1]]");
  CHECK(to_string(e.classes[3].rep) == "[[1,0],[1,1]]");  // the three-chain

  for (std::size_t i = 0; i < e.classes.size(); ++i) {
    CHECK(e.classes[i].id == i);
    CHECK_FALSE(e.classes[i].members.empty());
    CHECK(e.class_of(e.classes[i].rep) == i);
    CHECK(e.classes[i].module.size() == row_semimodule(e.classes[i].rep).size());
  }

  // the two one-dimensional idempotents split between the first two classes
  auto B = boolean_ring();
  CHECK(e.class_of(Matrix(B, 1, 1, {0})) == 0);
  CHECK(e.class_of(Matrix(B, 1, 1, {1})) == 1);
  CHECK(e.class_of(Matrix(B, 2, 2, {1, 1, 0, 1})) == 3);
  CHECK_THROWS_AS(e.class_of(Matrix(B, 2, 2, {0, 1, 1, 0})), std::invalid_argument);
}

TEST_CASE("projective classes over the 3-chain up to dimension 2") {
  auto S = chain2_ring();
  auto e = enumerate_projectives(S, 2);
  REQUIRE(e.classes.size() == 7);

  const char* reps[7] = {
      "[]",
      "[[1]]",
      "[[1,0],[0,1]]",
      "[[1,0],[1/2,1]]",
      "[[1,0],[1,1]]",
      "[[1,1/2],[1/2,1]]",
      "[[1,1/2],[1,1]]",
  };
  // row-space sizes tell the seven classes apart at dimension two
  std::size_t sizes[7] = {1, 3, 9, 8, 6, 7, 5};
  for (std::size_t i = 0; i < 7; ++i) {
    CHECK(to_string(e.classes[i].rep) == reps[i]);
    CHECK(e.classes[i].dim == (i == 0 ? 0 : i == 1 ? 1 : 2));
    CHECK(is_idempotent(e.classes[i].rep));
    CHECK(e.classes[i].module.size() == sizes[i]);
  }

  // conjugating by the coordinate swap lands in the same class
  CHECK(e.class_of(Matrix(S, 2, 2, {2, 1, 0, 2})) == 3);  // [[1,1/2],[0,1]]
  CHECK(e.class_of(Matrix(S, 2, 2, {2, 2, 0, 2})) == 4);  // [[1,1],[0,1]]

  // the zero class absorbs nothing: summing with it is the identity row
  for (std::size_t j = 0; j < 7; ++j) {
    REQUIRE(e.sum[0][j].has_value());
    CHECK(*e.sum[0][j] == j);
  }
  // [[1]] (+) [[1]] is the free rank-2 class
  REQUIRE(e.sum[1][1].has_value());
  CHECK(*e.sum[1][1] == 2);
  // any other sum leaves the two-dimensional cap
  CHECK_FALSE(e.sum[1][2].has_value());
  CHECK_FALSE(e.sum[2][2].has_value());
  CHECK_FALSE(e.sum_closed);

  // commutativity and in-cap associativity at the class level
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j) {
      CHECK(e.sum[i][j] == e.sum[j][i]);
      for (std::size_t k = 0; k < 7; ++k) {
        auto ij = e.sum[i][j], jk = e.sum[j][k];
        if (!ij || !jk) continue;
        auto l = e.sum[*ij][k], r = e.sum[i][*jk];
        if (l && r) CHECK(*l == *r);
      }
    }
}

TEST_CASE("padding with a zero block does not move the class") {
  auto S = chain2_ring();
  auto e = enumerate_projectives(S, 2);
  Matrix zero1(S, 1, 1, {0});
  Matrix empty(S, 0, 0);

  CHECK(e.class_of(direct_sum(e.classes[1].rep, zero1)) == 1);
  CHECK(e.class_of(direct_sum(zero1, e.classes[1].rep)) == 1);
  for (std::size_t c = 0; c < e.classes.size(); ++c)
    CHECK(e.class_of(direct_sum(e.classes[c].rep, empty)) == c);

  Matrix i1 = identity_matrix(S, 1);
  CHECK(to_string(direct_sum(i1, i1)) == "[[1,0],[0,1]]");
  CHECK_THROWS_AS(direct_sum(i1, identity_matrix(boolean_ring(), 1)),
                  std::invalid_argument);
  CHECK_THROWS_AS(direct_sum(i1, Matrix(S, 1, 2)), std::invalid_argument);
  // non-idempotent blocks pass through; the result is an honest block matrix
  Matrix k(S, 2, 2, {1, 2, 0, 1});
  CHECK_FALSE(is_idempotent(direct_sum(k, k)));
}

TEST_CASE("the group completion decides equality inside the cap") {
  auto e = enumerate_projectives(chain2_ring(), 2);
  K0Group g(&e);

  auto one = g.k_of(1);
  auto two = g.k_of(2);

  // [S] + [S] = [S^2]
  auto r = g.equal(g.add(one, one), two);
  CHECK(r.verdict == K0Group::Verdict::Equal);
  REQUIRE(r.witness.has_value());

  // x - x = 0 after cancellation
  auto diff = g.add(one, g.negate(one));
  CHECK(diff.pos.empty());
  CHECK(diff.neg.empty());
  CHECK(g.equal(diff, g.add(g.k_of(0), g.negate(g.k_of(0)))).verdict ==
        K0Group::Verdict::Equal);
  CHECK(g.equal(g.add(g.k_of(3), g.k_of(0)), g.k_of(3)).verdict ==
        K0Group::Verdict::Equal);

  // distinct two-dimensional classes cannot be separated inside the cap:
  // every candidate witness escapes the enumeration
  CHECK(g.equal(g.k_of(3), g.k_of(4)).verdict == K0Group::Verdict::Unresolved);

  // fold_sum walks the sum table from the zero class
  CHECK(g.fold_sum({1, 1}) == std::optional<std::size_t>{2});
  CHECK(g.fold_sum({0, 0, 1}) == std::optional<std::size_t>{1});
  CHECK_FALSE(g.fold_sum({1, 1, 1}).has_value());

  CHECK_THROWS_AS(g.k_of(99), std::invalid_argument);
  CHECK_THROWS_AS(K0Group(nullptr), std::invalid_argument);
}

TEST_CASE("trivial enumerations close their sum table") {
  auto e0 = enumerate_projectives(boolean_ring(), 0);
  CHECK(e0.classes.size() == 1);
  CHECK(e0.sum_closed);
  CHECK(*e0.sum[0][0] == 0);
  CHECK_THROWS_AS(enumerate_projectives(chain2_ring(), 3, 100), std::length_error);
}

TEST_CASE("homomorphisms induce functorial maps on projective classes") {
  auto c2 = MvAlgebra::chain(2);
  auto p = MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)});
  auto e2 = enumerate_projectives(reducts(*c2).first, 2);
  auto ep = enumerate_projectives(reducts(*p).first, 2);

  // the diagonal into the square, then the first projection back
  MvHom f = make_mv_hom(c2, p, {0, 4, 8});
  MvHom g = make_mv_hom(p, c2, {0, 0, 0, 1, 1, 1, 2, 2, 2});

  K0Map kf = k0_map(f, e2, ep);
  K0Map kg = k0_map(g, ep, e2);
  REQUIRE(kf.class_map.size() == e2.classes.size());
  REQUIRE(kg.class_map.size() == ep.classes.size());

  // K0 of a composite is the composite of the K0 maps; here it is the
  // identity because g after f is the identity hom
  K0Map kgf = k0_map(compose(g, f), e2, e2);
  K0Map comp = compose(kg, kf);
  REQUIRE(comp.class_map.size() == e2.classes.size());
  for (std::size_t c = 0; c < e2.classes.size(); ++c) {
    CHECK(comp(c) == kgf(c));
    CHECK(kgf(c) == c);
  }

  // the identity hom induces the identity on classes
  K0Map kid = k0_map(identity_hom(p), ep, ep);
  for (std::size_t c = 0; c < ep.classes.size(); ++c) CHECK(kid(c) == c);

  // zero and free classes are preserved
  CHECK(kf(0) == 0);
  CHECK(kf.class_map[1] == ep.class_of(identity_matrix(reducts(*p).first, 1)));

  // enumerations must match the reducts of the hom endpoints
  CHECK_THROWS_AS(k0_map(f, e2, e2), std::invalid_argument);
}

TEST_CASE("the csv report is deterministic and complete") {
  auto e = enumerate_projectives(chain2_ring(), 2);
  std::string csv = k0_report_csv(e);
  CHECK(csv == k0_report_csv(e));

  REQUIRE(csv.rfind("class,dim,representative,sums\n", 0) == 0);
  CHECK(csv.find("\n0,0,\"[]\",\"0+0=0 0+1=1 0+2=2 0+3=3 0+4=4 0+5=5 0+6=6\"\n") !=
        std::string::npos);
  CHECK(csv.find("\n1,1,\"[[1]]\",\"1+0=1 1+1=2 1+2=? 1+3=? 1+4=? 1+5=? 1+6=?\"\n") !=
        std::string::npos);
  CHECK(csv.find("\n6,2,\"[[1,1/2],[1,1]]\",") != std::string::npos);

  // one data row per class
  std::size_t rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 1 + e.classes.size());
}

}
