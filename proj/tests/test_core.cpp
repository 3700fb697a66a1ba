// Copyright 2026 The cliffy Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "cliffy/morphism.hpp"
#include "oracle/brute.hpp"
#include "support.hpp"

using namespace testing;

TEST_SUITE("core") {
  TEST_CASE("tables reject bad shapes") {
    CHECK_THROWS_AS(Table::from_rows({{0, 1}, {1}}), PreconditionError);
    CHECK_THROWS_AS(Table::from_rows({{0, 2}, {1, 0}}), PreconditionError);
    CHECK_THROWS_AS(ElementMap(2, {0, 2}), PreconditionError);
    CHECK(ElementMap(3, {0, 2, 1}).inverse() == ElementMap(3, {0, 2, 1}));
    CHECK_FALSE(ElementMap(2, {0, 0}).is_bijective());
  }

  TEST_CASE("classification of small fixtures") {
    CHECK(classify(catalog_entry("z2").semigroup).kind == SemigroupKind::clifford);
    CHECK(classify(catalog_entry("sl2").semigroup).kind == SemigroupKind::clifford);

    Classification lz = classify(catalog_entry("left_zero2").semigroup);
    CHECK(lz.kind == SemigroupKind::semigroup);
    CHECK(lz.witness.axiom == "idempotents-commute");
    CHECK(lz.witness.witness == std::vector<Elem>{0, 1});

    Classification na = classify(catalog_entry("nonassoc3").semigroup);
    CHECK(na.kind == SemigroupKind::not_associative);
    CHECK(na.witness.axiom == "associativity");
    CHECK_THROWS_AS(catalog_clifford("left_zero2"), VerificationError);
  }

  TEST_CASE("clifford census of order <= 3 matches the brute-force oracle") {
    // Labeled Clifford tables on 1, 2, 3 points, counted by the oracle.
    std::vector<std::size_t> const frozen{1, 4, 24};
    for (std::size_t n = 1; n <= 3; ++n) {
      std::size_t lib = 0, orc = 0;
      oracle::for_each_table(n, [&](Table const& t) {
        bool const a = classify(FiniteSemigroup(t)).kind == SemigroupKind::clifford;
        bool const b = oracle::clifford_inverses(t).has_value();
        CHECK(a == b);
        lib += a;
        orc += b;
      });
      CHECK(lib == orc);
      CHECK(orc == frozen[n - 1]);
    }
  }

  TEST_CASE("semilattice decomposition") {
    SUBCASE("z2_0 is a 2-chain of Z2 and the trivial group") {
      auto d = decompose(ct("z2_0"));
      REQUIRE(d.components.size() == 2);
      CHECK(d.components[0].members == std::vector<Elem>{0, 1});
      CHECK(d.components[1].members == std::vector<Elem>{2});
      CHECK(d.components[0].group.order() == 2);
      CHECK(d.meet == Table::from_rows({{0, 1}, {1, 1}}));
      CHECK(d.reassemble() == ct("z2_0").table());
      CHECK(d.structure_maps.at({0, 1}) == std::vector<Elem>{0, 0});
    }
    SUBCASE("sl2 has two trivial groups") {
      auto d = decompose(ct("sl2"));
      REQUIRE(d.components.size() == 2);
      for (auto const& c : d.components) {
        CHECK(c.group.order() == 1);
      }
    }
    SUBCASE("z3 is a single group") {
      auto d = decompose(ct("z3"));
      REQUIRE(d.components.size() == 1);
      CHECK(d.components[0].group == ct("z3").table());
    }
    for (auto const& c : clifford_catalog()) {
      CHECK(decompose(c).reassemble() == c.table());
    }
  }

  TEST_CASE("quotients by normal subsemigroups") {
    CliffordTable z = ct("z2_0");
    SUBCASE("everything collapses onto sl2") {
      Quotient q = quotient(NormalSubsemigroup(z, {0, 1, 2}));
      CHECK(q.classes == std::vector<std::vector<Elem>>{{0, 1}, {2}});
      CHECK(are_isomorphic(q.table.semigroup(), catalog_entry("sl2").semigroup));
    }
    SUBCASE("N = {z, 0} separates 0 and 1") {
      Quotient q = quotient(NormalSubsemigroup(z, {0, 2}));
      CHECK(q.table.order() == 3);
      CHECK(are_isomorphic(q.table.semigroup(), z.semigroup()));
    }
    SUBCASE("idempotents alone in a commutative carrier") {
      for (auto const& c : clifford_catalog()) {
        if (!c.is_commutative()) {
          continue;
        }
        Quotient q = quotient(NormalSubsemigroup(c, c.idempotents()));
        // rho_E is equality: -a + b idempotent with a0 = b0 forces a = b.
        CHECK(q.table.order() == c.order());
      }
    }
    CHECK(check_normal(z, {0, 1}).axiom == "normal-idempotents");
    CHECK_THROWS_AS(NormalSubsemigroup(z, {1, 2}), VerificationError);
  }

  TEST_CASE("morphisms") {
    FiniteSemigroup const z3 = catalog_entry("z3").semigroup;
    CHECK(is_automorphism(ElementMap::identity(3), z3));
    CHECK(is_automorphism(map_of(3, {0, 2, 1}), z3));
    FiniteSemigroup const sl2 = catalog_entry("sl2").semigroup;
    CHECK(is_endomorphism(map_of(2, {0, 0}), sl2));
    CHECK(is_automorphism(map_of(2, {0, 0}), sl2).axiom == "bijective");
    CHECK(automorphisms(z3).size() == 2);

    FiniteSemigroup const z2 = catalog_entry("z2").semigroup;
    FiniteSemigroup const k4 = direct_product(z2, z2);
    CHECK(k4.order() == 4);
    CHECK(are_isomorphic(k4, catalog_entry("klein4").semigroup));
    CHECK(are_isomorphic(opposite(z3), z3));
    CHECK_FALSE(are_isomorphic(sl2, z2));
    CHECK_FALSE(are_isomorphic(catalog_entry("s3").semigroup, catalog_entry("z6").semigroup));
  }

  TEST_CASE("homomorphism search agrees with brute force") {
    for (auto const& [a, b] : std::vector<std::pair<char const*, char const*>>{
             {"z2", "z2"}, {"sl2", "z2"}, {"z3", "z3"}, {"z2_0", "sl2"}, {"chain3", "z2_0"}}) {
      FiniteSemigroup const& s = catalog_entry(a).semigroup;
      FiniteSemigroup const& t = catalog_entry(b).semigroup;
      std::vector<ElementMap> brute;
      oracle::for_each_map(s.order(), t.order(), [&](std::vector<Elem> const& v) {
        for (Elem x = 0; x < s.order(); ++x) {
          for (Elem y = 0; y < s.order(); ++y) {
            if (v[s.add(x, y)] != t.add(v[x], v[y])) {
              return;
            }
          }
        }
        brute.emplace_back(t.order(), v);
      });
      CHECK(homomorphisms(s, t) == brute);
    }
  }

  TEST_CASE("catalog") {
    std::size_t noncommutative = 0;
    for (auto const& e : catalog()) {
      CHECK(e.semigroup.order() <= 8);
      if (e.clifford) {
        CHECK(classify(e.semigroup).kind == SemigroupKind::clifford);
        noncommutative += !e.semigroup.is_commutative();
      } else {
        CHECK(classify(e.semigroup).kind != SemigroupKind::clifford);
      }
    }
    CHECK(noncommutative == 1);
    CHECK_FALSE(catalog_entry("s3").semigroup.is_commutative());
    CHECK_THROWS_AS(catalog_entry("nope"), PreconditionError);
  }

  TEST_CASE("budget") {
    Budget b;
    b.max_order = 3;
    CHECK_THROWS_AS(enumerate_rb(ct("z4"), Weight::plus, false, b), ResourceError);
    b.max_order = 10;
    b.max_nodes = 1;
    CHECK_THROWS_AS(enumerate_rb(ct("z4"), Weight::plus, false, b), ResourceError);
  }
}
