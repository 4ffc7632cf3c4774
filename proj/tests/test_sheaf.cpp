// Copyright 2026 The mvkernel Authors
// SPDX-License-Identifier: Apache-2.0

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "mvk/mv_algebra.hpp"
#include "mvk/semiring.hpp"
#include "mvk/sheaf.hpp"

using namespace mvk;

namespace {

SemiringPtr vo_chain(unsigned k) { return reducts(*MvAlgebra::chain(k)).first; }

// the four-element Boolean square (1,0) and (0,1) are incomparable idempotents
SemiringPtr boolean_square() {
  return reducts(*MvAlgebra::product({MvAlgebra::chain(1), MvAlgebra::chain(1)})).first;
}

}  // namespace

TEST_SUITE("sheaf") {

TEST_CASE("localizing a chain at its unique prime changes nothing but the labels") {
  auto s = vo_chain(2);
  auto loc = localize(s, {0, 1});

  CHECK(loc.prime == std::vector<std::size_t>{0, 1});
  CHECK(loc.denoms == std::vector<std::size_t>{2});
  REQUIRE(loc.table->size() == 3);
  CHECK(loc.table->same_tables(*s));

  // every class is a/1 and the representatives walk the carrier in order
  REQUIRE(loc.reps.size() == 3);
  for (std::size_t a = 0; a < 3; ++a) {
    CHECK(loc.reps[a] == std::pair<std::size_t, std::size_t>{a, 2});
    CHECK(loc.class_of[a][0] == a);
  }
  CHECK(loc.table->label(0) == "[0]/[1]");
  CHECK(loc.table->label(1) == "[1/2]/[1]");
  CHECK(loc.table->label(2) == "[1]/[1]");

  // prime input may arrive unsorted and with repeats
  auto messy = localize(s, {1, 0, 1});
  CHECK(messy.prime == loc.prime);
  CHECK(messy.table->same_tables(*loc.table));
}

TEST_CASE("fraction lookup follows the class map and rejects prime denominators") {
  auto loc = localize(vo_chain(2), {0, 1});
  CHECK(loc.fraction(0, 2) == 0);
  CHECK(loc.fraction(1, 2) == 1);
  CHECK(loc.fraction(2, 2) == 2);
  CHECK_THROWS_WITH_AS(loc.fraction(1, 0), "denominator lies in the prime",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(loc.fraction(2, 1), "denominator lies in the prime",
                       std::invalid_argument);
}

TEST_CASE("localizing the Boolean square at a coordinate prime kills that coordinate") {
  auto t = boolean_square();
  // the two primes are the coordinate vanishing sets
  auto left = localize(t, {0, 1});
  CHECK(left.denoms == std::vector<std::size_t>{2, 3});
  REQUIRE(left.table->size() == 2);
  CHECK(left.table->same_tables(*vo_chain(1)));
  CHECK(left.table->label(0) == "[(0,0)]/[(1,0)]");
  CHECK(left.table->label(1) == "[(1,0)]/[(1,0)]");
  // (0,1)/(1,1) collapses onto zero: the second coordinate is invisible
  CHECK(left.fraction(1, 3) == 0);
  CHECK(left.fraction(2, 3) == 1);

  auto right = localize(t, {0, 2});
  REQUIRE(right.table->size() == 2);
  CHECK(right.fraction(1, 3) == 1);
  CHECK(right.fraction(2, 3) == 0);
}

TEST_CASE("localize rejects bad inputs with a reason") {
  auto s = vo_chain(2);
  CHECK_THROWS_WITH_AS(localize(nullptr, {0}), "null semiring", std::invalid_argument);
  CHECK_THROWS_WITH_AS(localize(s, {0, 1, 2}), "prime must be proper",
                       std::invalid_argument);
  // {0, 1} is closed under join and absorbs products; {0, 1/2} is the witness
  // that an arbitrary downset is not: 1 times 1/2 escapes
  CHECK_THROWS_WITH_AS(localize(s, {0, 2}), "subset is not an ideal",
                       std::invalid_argument);
  // {0} fails primeness: 1/2 times 1/2 vanishes with neither factor in
  CHECK_THROWS_WITH_AS(localize(s, {0}), "ideal is not prime", std::invalid_argument);

  // 2x2 Boolean matrices: entrywise or with the matrix product, bit k of the
  // code is entry k in row-major order
  std::vector<std::string> labels(16);
  std::vector<std::size_t> join(256), mul(256);
  auto bit = [](std::size_t m, int k) -> std::size_t { return (m >> k) & 1; };
  for (std::size_t x = 0; x < 16; ++x) {
    labels[x] = "m" + std::to_string(x);
    for (std::size_t y = 0; y < 16; ++y) {
      join[x * 16 + y] = x | y;
      std::size_t c11 = (bit(x, 0) & bit(y, 0)) | (bit(x, 1) & bit(y, 2));
      std::size_t c12 = (bit(x, 0) & bit(y, 1)) | (bit(x, 1) & bit(y, 3));
      std::size_t c21 = (bit(x, 2) & bit(y, 0)) | (bit(x, 3) & bit(y, 2));
      std::size_t c22 = (bit(x, 2) & bit(y, 1)) | (bit(x, 3) & bit(y, 3));
      mul[x * 16 + y] = c11 | (c12 << 1) | (c21 << 2) | (c22 << 3);
    }
  }
  auto mats = std::make_shared<SemiringTable>(labels, join, mul, 0, 9);
  CHECK_THROWS_WITH_AS(localize(mats, {0}), "localization needs commutativity",
                       std::invalid_argument);
}

TEST_CASE("locality means a unique maximal proper ideal") {
  CHECK(is_local(vo_chain(1)));
  CHECK(is_local(vo_chain(2)));
  CHECK(is_local(vo_chain(4)));
  // the Boolean square has two maximal ideals, one per coordinate
  CHECK_FALSE(is_local(boolean_square()));
  CHECK(is_local(localize(boolean_square(), {0, 1}).table));
  CHECK_THROWS_AS(is_local(nullptr), std::invalid_argument);
}

TEST_CASE("global sections of a chain reproduce the chain") {
  auto s = vo_chain(2);
  auto gs = global_sections(s);

  REQUIRE(gs.spec.prime_ids.size() == 1);
  CHECK(gs.spec.ideals[gs.spec.prime_ids[0]] == std::vector<std::size_t>{0, 1});
  REQUIRE(gs.stalks.size() == 1);
  CHECK(gs.stalks[0].table->size() == 3);
  CHECK(gs.stalk_local == std::vector<bool>{true});

  REQUIRE(gs.sections.size() == 3);
  for (std::size_t x = 0; x < 3; ++x) {
    CHECK(gs.sections[x] == std::vector<std::size_t>{x});
    CHECK(gs.phi[x] == x);
  }
  CHECK(gs.phi_injective);
  CHECK(gs.phi_surjective);
  CHECK(gs.phi_homomorphism);

  REQUIRE(gs.section_ring);
  CHECK(gs.section_ring->same_tables(*s));
  CHECK(gs.section_ring->label(0) == "s(0)");
  CHECK(gs.section_ring->label(1) == "s(1/2)");
  CHECK(gs.section_ring->label(2) == "s(1)");
}

TEST_CASE("global sections of the Boolean square separate the coordinates") {
  auto t = boolean_square();
  auto gs = global_sections(t);

  REQUIRE(gs.spec.prime_ids.size() == 2);
  CHECK(gs.spec.ideals[gs.spec.prime_ids[0]] == std::vector<std::size_t>{0, 1});
  CHECK(gs.spec.ideals[gs.spec.prime_ids[1]] == std::vector<std::size_t>{0, 2});
  CHECK(gs.stalk_local == std::vector<bool>{true, true});
  CHECK(gs.stalks[0].table->size() == 2);
  CHECK(gs.stalks[1].table->size() == 2);

  // x maps to its pair of coordinate germs, so phi is the identity here
  REQUIRE(gs.sections.size() == 4);
  CHECK(gs.sections[0] == std::vector<std::size_t>{0, 0});
  CHECK(gs.sections[1] == std::vector<std::size_t>{0, 1});
  CHECK(gs.sections[2] == std::vector<std::size_t>{1, 0});
  CHECK(gs.sections[3] == std::vector<std::size_t>{1, 1});
  CHECK(gs.phi == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(gs.phi_injective);
  CHECK(gs.phi_homomorphism);
  CHECK(gs.section_ring->same_tables(*t));
  CHECK(gs.section_ring->label(3) == "s((1,1))");
}

TEST_CASE("section enumeration inherits the ideal-scan cap") {
  CHECK_THROWS_AS(global_sections(vo_chain(20)), std::length_error);
}

TEST_CASE("the sheaf route recovers each test algebra on the nose") {
  struct Row {
    AlgebraPtr a;
    std::size_t primes, sections;
  };
  std::vector<Row> rows;
  rows.push_back({MvAlgebra::chain(2), 1, 3});
  rows.push_back({MvAlgebra::chain(4), 1, 5});
  rows.push_back({MvAlgebra::product({MvAlgebra::chain(2), MvAlgebra::chain(2)}), 2, 9});

  for (const auto& row : rows) {
    CAPTURE(row.a->describe());
    auto rec = mv_global_sections(row.a);
    CHECK(rec.sections.spec.prime_ids.size() == row.primes);
    CHECK(rec.sections.sections.size() == row.sections);
    for (bool local : rec.sections.stalk_local) CHECK(local);
    CHECK(rec.sections.phi_injective);
    CHECK(rec.sections.phi_surjective);
    CHECK(rec.sections.phi_homomorphism);
    REQUIRE(rec.recognition.ok);
    REQUIRE(rec.reconstructed);
    CHECK(rec.tables_match);
  }
}

TEST_CASE("the recovered negation on a chain of sections is the reversal") {
  auto rec = mv_global_sections(MvAlgebra::chain(2));
  CHECK(rec.recognition.star == std::vector<std::size_t>{2, 1, 0});
  CHECK(rec.reconstructed->size() == 3);

  // chain(4) has the single prime of everything below the top
  auto rec4 = mv_global_sections(MvAlgebra::chain(4));
  auto& spec4 = rec4.sections.spec;
  CHECK(spec4.ideals[spec4.prime_ids[0]] == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(rec4.sections.stalks[0].table->size() == 5);
}

TEST_CASE("the sheaf route needs a finite algebra") {
  CHECK_THROWS_WITH_AS(mv_global_sections(MvAlgebra::unit_interval()),
                       "needs a finite algebra", std::domain_error);
  CHECK_THROWS_WITH_AS(mv_global_sections(nullptr), "needs a finite algebra",
                       std::domain_error);
}

}  // TEST_SUITE("sheaf")
