// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "mvk/ideals.hpp"
#include "mvk/mv_algebra.hpp"
#include "mvk/semimodule.hpp"
#include "mvk/semiring.hpp"

using namespace mvk;

namespace {

SemiringPtr boolean_ring() { return reducts(*MvAlgebra::chain(1)).first; }
SemiringPtr chain2_ring() { return reducts(*MvAlgebra::chain(2)).first; }

std::vector<Matrix> all_square_matrices(const SemiringPtr& S, std::size_t n) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < n * n; ++i) total *= S->size();
  std::vector<Matrix> out;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::size_t> e(n * n);
    std::size_t c = code;
    for (std::size_t i = n * n; i-- > 0;) {
      e[i] = c % S->size();
      c /= S->size();
    }
    out.emplace_back(S, n, n, std::move(e));
  }
  return out;
}

// the chain 0 < x < y < 1 as a Boolean semimodule (join is max, the action
// of 1 is the identity)
FiniteSemimodule bool_chain4() {
  auto B = boolean_ring();
  std::vector<std::size_t> join{0, 1, 2, 3, 1, 1, 2, 3, 2, 2, 2, 3, 3, 3, 3, 3};
  std::vector<std::size_t> act{0, 0, 0, 0, 0, 1, 2, 3};
  return FiniteSemimodule(B, {"0", "x", "y", "1"}, join, act, 0);
}

FiniteSemimodule bool_chain3() {
  auto B = boolean_ring();
  std::vector<std::size_t> join{0, 1, 2, 1, 1, 2, 2, 2, 2};
  std::vector<std::size_t> act{0, 0, 0, 0, 1, 2};
  return FiniteSemimodule(B, {"0", "x", "1"}, join, act, 0);
}

}  // namespace

TEST_SUITE("semimodule") {

TEST_CASE("vector helpers act entrywise") {
  auto S = chain2_ring();
  Vec z = zero_vec(S, 3);
  CHECK(z.e == std::vector<std::size_t>{0, 0, 0});
  Vec u = chi(S, 3, 1);
  CHECK(u.e == std::vector<std::size_t>{0, 2, 0});
  CHECK_THROWS_AS(chi(S, 3, 3), std::invalid_argument);

  Vec a{S, {1, 0, 2}};
  Vec b{S, {0, 1, 1}};
  CHECK(join(a, b).e == std::vector<std::size_t>{1, 1, 2});
  CHECK(scale(1, a).e == std::vector<std::size_t>{0, 0, 1});  // 1/2 odot each
  CHECK(leq(z, a));
  CHECK(leq(a, a));
  CHECK_FALSE(leq(a, b));
  CHECK(to_string(a) == "(1/2,0,1)");

  // big-endian ordinal: the first entry is most significant
  Vec v{S, {1, 2}};
  CHECK(vec_ordinal(v) == 5);
  CHECK(vec_from_ordinal(S, 2, 5) == v);
  for (std::size_t o = 0; o < 9; ++o) CHECK(vec_ordinal(vec_from_ordinal(S, 2, o)) == o);
}

TEST_CASE("matrix product follows the join-of-products rule") {
  auto S = chain2_ring();
  Matrix k(S, 2, 2, {1, 2, 0, 1});  // [[1/2,1],[0,1/2]]
  Matrix k2 = matrix_star(k, k);
  CHECK(k2.entries() == std::vector<std::size_t>{0, 1, 0, 0});
  CHECK(to_string(k2) == "[[0,1/2],[0,0]]");
  CHECK_FALSE(is_idempotent(k));

  Matrix i2 = identity_matrix(S, 2);
  CHECK(matrix_star(i2, k) == k);
  CHECK(matrix_star(k, i2) == k);
  CHECK(is_idempotent(i2));
  CHECK(matrix_join(k, zero_matrix(S, 2, 2)) == k);

  // halves on the diagonal square to zero
  Matrix h(S, 2, 2, {1, 0, 0, 1});
  CHECK(matrix_star(h, h) == zero_matrix(S, 2, 2));
  CHECK_FALSE(is_idempotent(h));

  auto B = boolean_ring();
  Matrix u(B, 2, 2, {1, 1, 0, 1});
  CHECK(is_idempotent(u));

  CHECK_THROWS_AS(Matrix(S, 2, 2, {0, 0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Matrix(S, 1, 1, {7}), std::invalid_argument);
  CHECK_THROWS_AS(matrix_star(k, Matrix(S, 3, 2)), std::invalid_argument);
}

TEST_CASE("the row action applies a matrix as a hom") {
  auto S = chain2_ring();
  Matrix k(S, 2, 2, {2, 0, 2, 0});  // [[1,0],[1,0]]
  Vec f{S, {1, 2}};                 // (1/2, 1)
  CHECK(apply(f, k).e == std::vector<std::size_t>{2, 0});
  CHECK(apply(zero_vec(S, 2), k) == zero_vec(S, 2));
  // action on unit vectors reads off the rows
  CHECK(apply(chi(S, 2, 0), k) == k.row(0));
  CHECK(apply(chi(S, 2, 1), k) == k.row(1));
}

TEST_CASE("homs of free modules are exactly the matrices") {
  auto B = boolean_ring();
  auto mats = all_square_matrices(B, 2);
  REQUIRE(mats.size() == 16);

  std::set<std::vector<std::size_t>> tables;
  for (const auto& m : mats) {
    FreeHom h = hom_from_matrix(m);
    CHECK(is_free_hom(h));
    CHECK(matrix_from_hom(h) == m);
    tables.insert(h.images);
  }
  // distinct matrices tabulate to distinct homs
  CHECK(tables.size() == 16);

  // and the free module hom count agrees
  auto f2 = free_semimodule(B, 2);
  CHECK(enumerate_homs(f2, f2).size() == 16);

  // a table that moves 0 is not a hom
  FreeHom bad{B, 1, 1, {1, 1}};
  std::string why;
  CHECK_FALSE(is_free_hom(bad, &why));
  CHECK_FALSE(why.empty());
  CHECK_THROWS_AS(matrix_from_hom(bad), std::invalid_argument);
}

TEST_CASE("matrix product mirrors composition of the attached homs") {
  for (const auto& S : {boolean_ring(), chain2_ring()}) {
    auto mats = all_square_matrices(S, 2);
    std::size_t vecs = S->size() * S->size();
    for (const auto& u : mats)
      for (const auto& v : mats) {
        Matrix uv = matrix_star(u, v);
        for (std::size_t o = 0; o < vecs; ++o) {
          Vec f = vec_from_ordinal(S, 2, o);
          // f . (UV) = (f . U) . V: the monoid of matrices is End(S^2)
          // with composition read left to right
          CHECK(apply(f, uv) == apply(apply(f, u), v));
        }
      }
  }
}

TEST_CASE("the semimodule constructor verifies the action laws") {
  auto B = boolean_ring();
  std::vector<std::size_t> join{0, 1, 1, 1};

  SUBCASE("zero scalar must annihilate") {
    std::vector<std::size_t> act{0, 1, 0, 1};
    try {
      FiniteSemimodule m(B, {"0", "x"}, join, act, 0);
      FAIL("accepted an action where 0 fixes x");
    } catch (const LawViolation& e) {
      CHECK(e.law == "zero scalar annihilates");
      CHECK(e.witness == "x");
    }
  }

  SUBCASE("unit scalar must act as the identity") {
    std::vector<std::size_t> act{0, 0, 0, 0};
    try {
      FiniteSemimodule m(B, {"0", "x"}, join, act, 0);
      FAIL("accepted an action where 1 kills x");
    } catch (const LawViolation& e) {
      CHECK(e.law == "unit scalar acts as identity");
      CHECK(e.witness == "x");
    }
  }

  SUBCASE("join must be a semilattice") {
    std::vector<std::size_t> bad_join{0, 1, 1, 0};
    std::vector<std::size_t> act{0, 0, 0, 1};
    try {
      FiniteSemimodule m(B, {"0", "x"}, bad_join, act, 0);
      FAIL("accepted a non-idempotent join");
    } catch (const LawViolation& e) {
      CHECK(e.law == "semilattice idempotence");
      CHECK(e.witness == "x");
    }
  }
}

TEST_CASE("regular, free, sub and row semimodules have the right carriers") {
  auto S = chain2_ring();
  auto B = boolean_ring();

  auto reg = regular_semimodule(S);
  CHECK(reg.size() == 3);
  CHECK(reg.zero() == 0);
  CHECK(reg.act(1, 2) == 1);  // 1/2 odot 1 = 1/2

  auto f2 = free_semimodule(S, 2);
  CHECK(f2.size() == 9);
  CHECK(f2.label(5) == "(1/2,1)");

  // {0, 1/2} is closed under join and the odot action
  auto sub = submodule(reg, {0, 1});
  CHECK(sub.size() == 2);
  CHECK_THROWS_AS(submodule(reg, {0, 2}), std::invalid_argument);

  // rows (1,1) and (0,1) span a three-element module
  Matrix u(B, 2, 2, {1, 1, 0, 1});
  auto rows = row_space(u);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].e == std::vector<std::size_t>{0, 0});
  CHECK(rows[1].e == std::vector<std::size_t>{0, 1});
  CHECK(rows[2].e == std::vector<std::size_t>{1, 1});
  CHECK(row_semimodule(u).size() == 3);

  CHECK(row_semimodule(identity_matrix(S, 2)).size() == 9);
  CHECK(row_semimodule(zero_matrix(S, 2, 2)).size() == 1);

  // from_vectors refuses a carrier that misses a join
  Vec a{B, {1, 0}}, b{B, {0, 1}};
  try {
    from_vectors(B, {zero_vec(B, 2), a, b});
    FAIL("accepted a join-incomplete carrier");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("missing (1,1)") != std::string::npos);
  }
}

TEST_CASE("row modules of idempotents are retracts of the free module") {
  auto B = boolean_ring();
  std::size_t idempotents = 0;
  for (const auto& u : all_square_matrices(B, 2)) {
    if (!is_idempotent(u)) continue;
    ++idempotents;
    CHECK(brute_force_projective(row_semimodule(u), 2));
  }
  CHECK(idempotents > 2);

  // chains embed as retracts only while they fit: length 3 does, 4 does not
  CHECK(brute_force_projective(bool_chain3(), 2));
  CHECK_FALSE(brute_force_projective(bool_chain4(), 2));
  CHECK_FALSE(brute_force_projective(bool_chain4(), 1));
  CHECK_THROWS_AS(brute_force_projective(bool_chain4(), 2, 1), std::length_error);
  CHECK_THROWS_AS(enumerate_homs(bool_chain4(), bool_chain4(), 1), std::length_error);
}

TEST_CASE("quotient modules act through the class map") {
  auto a = MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)});
  auto vo = reducts(*a).first;
  // the kernel of the second projection
  Ideal i = ideal_generated(a, {3});
  REQUIRE(i.elems == std::vector<std::size_t>{0, 3, 6});
  auto q = quotient(a, i);

  auto m = quotient_semimodule(q, vo);
  REQUIRE(m.size() == 3);
  // (1/2,1) . class(0,1/2) = class(0,1/2): second coordinates multiply
  CHECK(m.act(5, 1) == 1);
  CHECK(m.act(4, 1) == 0);  // (1/2,1/2) . (0,1/2) = (0,0)
  CHECK(m.act(8, 2) == 2);

  // only the join/odot reduct of the parent is accepted
  auto we = reducts(*a).second;
  CHECK_THROWS_AS(quotient_semimodule(q, we), std::invalid_argument);

  // scalars that agree on every class have stars that also agree
  CHECK(is_strong(*a, vo, m).strong);
}

TEST_CASE("scalar restriction pulls the action back along a semiring hom") {
  auto S = chain2_ring();
  auto a = MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)});
  auto T = reducts(*a).first;

  // the diagonal chain -> product is a semiring hom
  std::vector<std::size_t> diag{0, 4, 8};
  auto n = regular_semimodule(T);
  auto r = restrict_scalars(diag, S, n);
  CHECK(r.size() == 9);
  CHECK(r.act(1, 8) == 4);  // (1/2,1/2) odot (1,1)
  CHECK(r.act(2, 5) == 5);  // the unit still acts as identity
  CHECK(r.act(0, 7) == 0);

  // identity restriction changes nothing
  auto reg = regular_semimodule(S);
  auto same = restrict_scalars({0, 1, 2}, S, reg);
  for (std::size_t s = 0; s < 3; ++s)
    for (std::size_t x = 0; x < 3; ++x) CHECK(same.act(s, x) == reg.act(s, x));

  // non-homs are refused
  CHECK_THROWS_AS(restrict_scalars({0, 4, 7}, S, n), std::invalid_argument);
  CHECK_THROWS_AS(restrict_scalars({1, 4, 8}, S, n), std::invalid_argument);
}

TEST_CASE("strongness holds for faithful modules and fails on the half ideal") {
  auto a2 = MvAlgebra::chain(2);
  auto a4 = MvAlgebra::chain(4);
  auto vo2 = reducts(*a2).first;
  auto vo4 = reducts(*a4).first;

  CHECK(is_strong(*a4, vo4, regular_semimodule(vo4)).strong);
  CHECK(is_strong(*a2, vo2, free_semimodule(vo2, 1)).strong);
  CHECK(is_strong(*a2, vo2, free_semimodule(vo2, 2)).strong);

  // on {0, 1/2} both 0 and 1/2 act as zero, but their negations differ at 1/2
  auto sub = submodule(regular_semimodule(vo2), {0, 1});
  auto res = is_strong(*a2, vo2, sub);
  REQUIRE_FALSE(res.strong);
  CHECK(res.a == 1);
  CHECK(res.b == 0);
  CHECK(res.x == 1);

  // the meet/oplus reduct has its own failure: 1/2 and 1 push {1/2, 1} to 1
  auto we2 = reducts(*a2).second;
  auto wsub = submodule(regular_semimodule(we2), {1, 2});
  auto wres = is_strong(*a2, we2, wsub);
  REQUIRE_FALSE(wres.strong);
  CHECK(wres.a == 2);
  CHECK(wres.b == 1);
  CHECK(wres.x == 0);

  // reduct and module sanity guards
  CHECK_THROWS_AS(is_strong(*a2, vo4, regular_semimodule(vo4)), std::invalid_argument);
  CHECK_THROWS_AS(is_strong(*a2, vo2, regular_semimodule(vo4)), std::invalid_argument);
}

TEST_CASE("tensor products collapse to the expected modules") {
  auto B = boolean_ring();
  auto S = chain2_ring();

  SUBCASE("Boolean tensor Boolean is Boolean") {
    auto reg = regular_semimodule(B);
    auto t = tensor_product(reg, reg);
    CHECK(t.module.size() == 2);
    CHECK(semimodules_isomorphic(t.module, reg));
    CHECK(t.pure[0][0] == t.module.zero());
    CHECK(t.pure[1][0] == t.module.zero());
    CHECK(t.pure[1][1] != t.module.zero());
    CHECK(is_bimorphism(reg, reg, t.module, t.pure));
  }

  SUBCASE("the regular module absorbs tensoring") {
    auto reg = regular_semimodule(S);
    auto t = tensor_product(reg, reg);
    CHECK(t.module.size() == 3);
    CHECK(semimodules_isomorphic(t.module, reg));
    CHECK(is_bimorphism(reg, reg, t.module, t.pure));
    // 1/2 (x) 1/2 = (1/2 odot 1/2)(1 (x) 1) = 0
    CHECK(t.pure[1][1] == t.module.zero());
    CHECK(t.pure[1][2] != t.module.zero());
    CHECK(t.pure[1][2] == t.pure[2][1]);
  }

  SUBCASE("tensoring with the zero module kills everything") {
    auto reg = regular_semimodule(S);
    auto z = submodule(reg, {0});
    auto t = tensor_product(reg, z);
    CHECK(t.module.size() == 1);
  }

  SUBCASE("the tensor is symmetric up to isomorphism") {
    auto reg = regular_semimodule(S);
    auto sub = submodule(reg, {0, 1});
    auto mn = tensor_product(reg, sub);
    auto nm = tensor_product(sub, reg);
    CHECK(semimodules_isomorphic(mn.module, nm.module));
  }

  SUBCASE("pair count beyond the cap is refused") {
    auto f2 = free_semimodule(S, 2);
    CHECK_THROWS_AS(tensor_product(f2, f2), std::length_error);
  }
}

TEST_CASE("bimorphisms out of a product factor through the tensor") {
  auto B = boolean_ring();
  auto reg = regular_semimodule(B);
  auto t = tensor_product(reg, reg);

  // brute force all tables B x B -> B and keep the bimorphisms
  std::vector<std::vector<std::vector<std::size_t>>> bis;
  for (std::size_t code = 0; code < 16; ++code) {
    std::vector<std::vector<std::size_t>> f(2, std::vector<std::size_t>(2));
    std::size_t c = code;
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y) {
        f[x][y] = c & 1;
        c >>= 1;
      }
    if (is_bimorphism(reg, reg, reg, f)) bis.push_back(f);
  }

  auto homs = enumerate_homs(t.module, reg);
  CHECK(bis.size() == homs.size());

  // every bimorphism is a hom evaluated on the pure tensors
  for (const auto& f : bis) {
    bool factored = false;
    for (const auto& h : homs) {
      bool match = true;
      for (std::size_t x = 0; x < 2 && match; ++x)
        for (std::size_t y = 0; y < 2 && match; ++y)
          if (h[t.pure[x][y]] != f[x][y]) match = false;
      if (match) {
        factored = true;
        break;
      }
    }
    CHECK(factored);
  }
}

TEST_CASE("mutual expressibility compares row spaces inside one ambient") {
  auto B = boolean_ring();
  Matrix e1(B, 2, 2, {1, 0, 0, 0});
  Matrix e2(B, 2, 2, {0, 0, 0, 1});
  Matrix u(B, 2, 2, {1, 1, 0, 1});
  Matrix v(B, 2, 2, {1, 1, 0, 0});
  Matrix one1(B, 1, 1, {1});

  CHECK(mutual_expressibility(e1, e1));
  // isomorphic modules on different coordinate axes are not mutually
  // expressible: the row spaces differ as subsets
  CHECK_FALSE(mutual_expressibility(e1, e2));
  CHECK(semimodules_isomorphic(row_semimodule(e1), row_semimodule(e2)));

  CHECK_FALSE(mutual_expressibility(u, v));

  // zero padding aligns different ambient dimensions
  CHECK(mutual_expressibility(one1, e1));

  // expressibility implies isomorphism of the presented modules
  for (const auto& p : all_square_matrices(B, 2))
    for (const auto& q : all_square_matrices(B, 2))
      if (mutual_expressibility(p, q))
        CHECK(semimodules_isomorphic(row_semimodule(p), row_semimodule(q)));
}

TEST_CASE("isomorphism testing separates non-isomorphic modules") {
  auto B = boolean_ring();
  CHECK(semimodules_isomorphic(free_semimodule(B, 2), free_semimodule(B, 2)));
  CHECK_FALSE(semimodules_isomorphic(bool_chain3(), regular_semimodule(B)));
  // same size, different join shape: the diamond against the chain
  CHECK_FALSE(semimodules_isomorphic(free_semimodule(B, 2), bool_chain4()));
  CHECK(semimodules_isomorphic(bool_chain4(), bool_chain4()));
}

}
