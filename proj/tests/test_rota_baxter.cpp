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

#include "cliffy/morphism.hpp"
#include "oracle/brute.hpp"
#include "support.hpp"

using namespace testing;

namespace {

  std::vector<std::vector<Elem>> images(std::vector<RBOperator> const& ops) {
    std::vector<std::vector<Elem>> out;
    for (auto const& r : ops) {
      out.push_back(r.map().images());
    }
    return out;
  }

}  // namespace

TEST_SUITE("rota_baxter") {
  TEST_CASE("check_rb on the small examples") {
    auto id = check_rb(ct("z2"), ElementMap::identity(2), Weight::plus);
    REQUIRE(id);
    CHECK(id->strong());

    auto up = check_rb(ct("sl2"), map_of(2, {1, 1}), Weight::plus);
    REQUIRE(up);
    CHECK_FALSE(up->strong());

    // Constant e on sl2: an endomorphism, yet f + R(f)^0 = e.
    auto ce = check_rb(ct("sl2"), map_of(2, {0, 0}), Weight::plus);
    CHECK_FALSE(ce);
    CHECK(ce.verdict().axiom == "rb-idempotent");
    CHECK(ce.verdict().witness == std::vector<Elem>{1});
    CHECK(is_endomorphism(map_of(2, {0, 0}), catalog_entry("sl2").semigroup));

    CHECK_THROWS_AS(check_rb(ct("z2"), map_of(3, {0, 0, 0}), Weight::plus), PreconditionError);
  }

  TEST_CASE("enumeration against the n^n oracle") {
    CHECK(images(enumerate_rb(ct("z2"), Weight::plus)) == std::vector<std::vector<Elem>>{{0, 0}, {0, 1}});
    CHECK(images(enumerate_rb(ct("z3"), Weight::plus))
          == std::vector<std::vector<Elem>>{{0, 0, 0}, {0, 1, 2}, {0, 2, 1}});
    CHECK(images(enumerate_rb(ct("sl2"), Weight::plus, true)) == std::vector<std::vector<Elem>>{{0, 1}});

    for (auto const& c : clifford_catalog()) {
      if (c.order() > 4) {
        continue;
      }
      for (Weight w : {Weight::plus, Weight::minus}) {
        for (bool strong : {false, true}) {
          CAPTURE(c.name());
          CHECK(images(enumerate_rb(c, w, strong)) == oracle::rb_maps(c.table(), w == Weight::plus, strong));
        }
      }
    }
  }

  TEST_CASE("enumeration is independent of the thread count") {
    Budget one;
    one.threads = 1;
    Budget many;
    many.threads = 4;
    for (auto const& c : clifford_catalog()) {
      CHECK(images(enumerate_rb(c, Weight::plus, false, one)) == images(enumerate_rb(c, Weight::plus, false, many)));
    }
  }

  TEST_CASE("constructions") {
    CHECK(construct::tilde(rb("z3", {0, 1, 2})).map() == ElementMap::identity(3));
    auto twice = construct::n_multiple(ct("z3"), 2);
    REQUIRE(twice);
    CHECK(twice->map().images() == std::vector<Elem>{0, 2, 1});

    SUBCASE("conjugation on sl2 by f follows the hypotheses") {
      CliffordTable s = ct("sl2");
      Elem const    b = 1;
      bool          identity = true, central = true;
      for (Elem x = 0; x < 2; ++x) {
        identity = identity && s.add(x, s.zero(b)) == x && s.add(s.zero(b), x) == x;
        for (Elem y = 0; y < 2; ++y) {
          central = central && s.is_central(s.sum({s.neg(b), s.neg(x), b, x}));
        }
      }
      auto c = construct::conjugation(s, b);
      CHECK(c.ok() == (identity && central));
      if (c) {
        CHECK(check_rb(s, c->map(), Weight::plus));
      }
      // e is not an identity: e + f = e.
      CHECK(construct::conjugation(s, 0).verdict().axiom == "identity");
    }

    SUBCASE("tilde and weight maps stay inside the enumerations") {
      for (auto const& c : clifford_catalog()) {
        auto plus  = enumerate_rb(c, Weight::plus);
        auto minus = enumerate_rb(c, Weight::minus);
        for (auto const& r : plus) {
          CHECK(std::find(plus.begin(), plus.end(), construct::tilde(r)) != plus.end());
          CHECK(std::find(minus.begin(), minus.end(), construct::weight_flip_neg(r)) != minus.end());
          CHECK(std::find(minus.begin(), minus.end(), construct::weight_phi(r)) != minus.end());
          for (auto const& phi : automorphisms(c.semigroup())) {
            auto t = construct::phi_twist(r, phi);
            REQUIRE(t);
            CHECK(std::find(plus.begin(), plus.end(), *t) != plus.end());
          }
        }
      }
    }

    SUBCASE("exact factorization of klein4") {
      auto r = construct::exact_factorization(ct("klein4"), {0, 1}, {0, 2});
      REQUIRE(r);
      CHECK(r->map().images() == std::vector<Elem>{0, 0, 2, 2});
      CHECK(construct::exact_factorization(ct("klein4"), {0, 1}, {0, 1}).verdict().axiom == "factorization");
    }

    SUBCASE("translation needs a commutative carrier") {
      CHECK(construct::translation(ct("s3"), 0, 0).verdict().axiom == "commutative");
      auto t = construct::translation(ct("z3"), 0, 0);
      REQUIRE(t);
      CHECK(t->map() == ElementMap::identity(3));
    }
  }

  TEST_CASE("weight correspondence") {
    CHECK(weight_correspondence(ct("z2")).pairs.size() == 2);
    CHECK(weight_correspondence(ct("z3")).pairs.size() == 3);
    auto sl = weight_correspondence(ct("sl2"));
    REQUIRE(sl.pairs.size() == 1);
    CHECK(sl.pairs[0].first.map() == ElementMap::identity(2));
    CHECK(sl.pairs[0].second.map() == ElementMap::identity(2));
  }

  TEST_CASE("structure theorem") {
    SUBCASE("z2 identity") {
      auto rep = structure_suite(rb("z2", {0, 1}));
      CHECK(rep.im_rplus == std::vector<Elem>{0});
      CHECK(rep.ker_r == std::vector<Elem>{0});
      CHECK(rep.im_r == std::vector<Elem>{0, 1});
      CHECK(rep.ker_rplus == std::vector<Elem>{0, 1});
      CHECK(rep.all_hold());
    }
    SUBCASE("z3 doubling") {
      auto rep = structure_suite(rb("z3", {0, 2, 1}));
      CHECK(rep.ker_r == std::vector<Elem>{0});
      CHECK(rep.im_r == std::vector<Elem>{0, 1, 2});
      CHECK(rep.im_rplus == std::vector<Elem>{0});
      CHECK(rep.all_hold());
    }
    SUBCASE("sl2 identity") {
      auto rep = structure_suite(rb("sl2", {0, 1}));
      for (auto const* set : {&rep.ker_r, &rep.im_r, &rep.ker_rplus, &rep.im_rplus}) {
        CHECK(*set == std::vector<Elem>{0, 1});
      }
      CHECK(rep.all_hold());
    }
    SUBCASE("kernel of R+ need not be normal in all of s3") {
      auto rep = structure_suite(rb("s3", {0, 1, 1, 0, 0, 1}));
      CHECK(rep.all_hold());
      CHECK(rep.kerplus_normal_in_S.axiom == "normal-conjugation");
      CHECK(rep.kerplus_normal_in_S.witness == std::vector<Elem>{2, 1});
    }
    SUBCASE("non-strong operators skip the strong items") {
      auto rep = structure_suite(rb("sl2", {1, 1}));
      CHECK(rep.all_hold());
      CHECK(std::any_of(rep.items.begin(), rep.items.end(),
                        [](auto const& i) { return i.status == ItemStatus::not_applicable; }));
    }
  }

  TEST_CASE("circ_R braces") {
    CHECK(circ_r(rb("z2", {0, 1})).brace.multiplicative().table() == ct("z2").table());
    auto z3 = circ_r(rb("z3", {0, 2, 1}));
    CHECK(z3.brace.multiplicative().table() == ct("z3").table());
    CHECK(z3.plus_equals_circ);
    auto sl = circ_r(rb("sl2", {1, 1}));
    CHECK(sl.brace.multiplicative().table() == ct("sl2").table());
    CHECK(sl.plus_equals_circ);

    for (auto const& c : clifford_catalog()) {
      for (auto const& r : enumerate_rb(c, Weight::plus)) {
        auto cr = circ_r(r);
        // R stays Rota-Baxter on (S, o_R).
        CHECK(check_rb(cr.brace.multiplicative(), r.map(), Weight::plus));
        CHECK(is_homomorphism(r.map(), cr.brace.multiplicative().semigroup(), c.semigroup()));
        bool central = true;
        for (Elem a = 0; a < c.order(); ++a) {
          central = central && c.is_central(c.add(c.zero(a), r(a)));
        }
        CHECK(cr.plus_equals_circ == central);
        CHECK(cr.plus_equals_circ == (cr.brace.multiplicative().table() == c.table()));
      }
    }
  }

  TEST_CASE("endomorphism gate") {
    CHECK(endo_iff_commutative(rb("z3", {0, 2, 1})) == EndoResult::endomorphism);
    CHECK(endo_iff_commutative(rb("sl2", {0, 1})) == EndoResult::endomorphism);
    CHECK(endo_iff_commutative(rb("sl2", {1, 1})) == EndoResult::endomorphism);
    CHECK(endo_iff_commutative(enumerate_rb(ct("s3"), Weight::plus).front()) == EndoResult::not_applicable);
  }
}
