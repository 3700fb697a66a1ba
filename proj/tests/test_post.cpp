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

#include <algorithm>

#include "oracle/brute.hpp"
#include "support.hpp"

using namespace testing;

namespace {

  Table second(std::size_t n) {
    return Table::generate(n, [](Elem, Elem b) { return b; });
  }

}  // namespace

TEST_SUITE("post") {
  TEST_CASE("check_post") {
    auto z2 = check_post(ct("z2"), second(2));
    REQUIRE(z2);
    CHECK(z2->strong());

    auto sl = check_post(ct("sl2"), ct("sl2").table());
    REQUIRE(sl);
    CHECK(sl->strong());

    // (z3, a |> b = a + b): P1 is checked first and already fails, but P2
    // fails on its own as well.
    CliffordTable z3  = ct("z3");
    Table const   sum = z3.table();
    auto          bad = check_post(z3, sum);
    CHECK(bad.verdict().axiom == "P1");
    CHECK(bad.verdict().witness == std::vector<Elem>{1, 0, 0});
    Verdict p2 = post_axiom_violation(z3, sum, PostAxiom::p2);
    CHECK_FALSE(p2);
    REQUIRE(p2.witness.size() == 3);
    Elem const a = p2.witness[0], b = p2.witness[1], c = p2.witness[2];
    CHECK(sum(z3.add(a, sum(a, b)), c) != sum(a, sum(b, c)));
  }

  TEST_CASE("enumeration against the table oracle") {
    for (auto const& c : clifford_catalog()) {
      if (c.order() > 3) {
        continue;
      }
      for (bool strong : {false, true}) {
        std::vector<Table> lib;
        for (auto const& p : enumerate_post(c, strong)) {
          lib.push_back(p.rhd_table());
        }
        auto brute = oracle::post_tables(c.table(), strong);
        std::sort(brute.begin(), brute.end());
        CAPTURE(c.name());
        CHECK(lib == brute);
      }
    }
    // Regression counts (total, strong) on the order-4 entries.
    std::vector<std::tuple<char const*, std::size_t, std::size_t>> const frozen{
        {"z4", 2, 2}, {"klein4", 4, 4}, {"diamond", 7, 1}, {"z3_0", 3, 1}, {"z2_over_z2", 2, 1}};
    for (auto const& [key, total, strong] : frozen) {
      CHECK(enumerate_post(ct(key)).size() == total);
      CHECK(enumerate_post(ct(key), true).size() == strong);
    }
  }

  TEST_CASE("sub-adjacent semigroup") {
    CHECK(sub_adjacent(check_post(ct("z2"), second(2)).value()).table() == ct("z2").table());
    CHECK(sub_adjacent(check_post(ct("sl2"), ct("sl2").table()).value()).table() == ct("sl2").table());
    auto b = circ_r(rb("z3", {0, 2, 1})).brace;
    CHECK(sub_adjacent(brace_to_post(b)).table() == b.multiplicative().table());
  }

  TEST_CASE("brace to post") {
    CHECK(brace_to_post(trivial_brace("z2")).rhd_table() == second(2));
    CHECK(brace_to_post(trivial_brace("sl2")).rhd_table() == ct("sl2").table());
    auto p = brace_to_post(circ_r(rb("z3", {0, 2, 1})).brace);
    CHECK(p.strong());
    CHECK(p.rhd_table() == second(3));
  }

  TEST_CASE("round trips") {
    for (auto const& c : clifford_catalog()) {
      for (auto const& r : enumerate_rb(c, Weight::plus)) {
        CHECK(roundtrip_fg(circ_r(r).brace));
      }
    }
    std::size_t nonstrong = 0;
    for (auto const& p : small_posts()) {
      CHECK(roundtrip_fg(post_to_brace(p)));
      if (p.strong()) {
        CHECK(roundtrip_gf(p));
      } else {
        ++nonstrong;
        CHECK_THROWS_AS(roundtrip_gf(p), PreconditionError);
      }
    }
    CHECK(nonstrong > 0);
  }

  TEST_CASE("YBE from post structures") {
    YBEMap flip = ybe_from_post(check_post(ct("z2"), second(2)).value());
    CHECK(flip.out1 == second(2));

    // r(a,b) = (a0 + (a + b), (a + b) o a o b) with o = + on sl2.
    YBEMap sl = ybe_from_post(check_post(ct("sl2"), ct("sl2").table()).value());
    CHECK(sl.out1 == ct("sl2").table());
    CHECK(sl.out2 == ct("sl2").table());

    auto b = circ_r(rb("z3", {0, 2, 1})).brace;
    CHECK(ybe_from_post(brace_to_post(b)) == ybe_from_brace(b));

    for (auto const& p : small_posts()) {
      auto sol = ybe_from_post_detailed(p);
      CHECK(oracle::braid_holds(sol.map));
      CHECK(sol.forms_agree);
      if (p.strong()) {
        CHECK(sol.map == ybe_from_brace(post_to_brace(p)));
      }
    }
  }

  TEST_CASE("post homomorphisms") {
    for (auto const& p : small_posts()) {
      CHECK(is_post_hom(ElementMap::identity(p.order()), p, p));
    }
    auto z3 = brace_to_post(trivial_brace("z3"));
    CHECK(is_post_hom(map_of(3, {0, 2, 1}), z3, z3));
    CHECK(is_post_hom(map_of(3, {0, 1, 1}), z3, z3).axiom == "additive");
  }
}
