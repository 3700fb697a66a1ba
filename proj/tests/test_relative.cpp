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

namespace {

  // S = sl2 acting on T = z2 by phi_e = 0 and phi_f = id.
  Action sl2_on_z2() {
    return check_action(ct("sl2"), ct("z2"), {map_of(2, {0, 0}), ElementMap::identity(2)}).value();
  }

  std::vector<Elem> all(std::size_t n) {
    std::vector<Elem> v(n);
    for (Elem a = 0; a < n; ++a) {
      v[a] = a;
    }
    return v;
  }

}  // namespace

TEST_SUITE("relative") {
  TEST_CASE("actions") {
    auto bad = check_action(ct("z2"), ct("z2"), {ElementMap::identity(2), map_of(2, {1, 0})});
    CHECK(bad.verdict().axiom == "action-endomorphism");
    CHECK(bad.verdict().witness == std::vector<Elem>{1, 0, 0});

    // Conjugation on sl2 is s + x - s = min(s, x), not the identity.
    Action conj = Action::conjugation(ct("sl2"));
    CHECK(conj.map(0) == map_of(2, {0, 0}));
    CHECK(conj.map(1) == ElementMap::identity(2));
    CHECK(check_relative(ct("z2"), ct("z2"), {ElementMap::identity(2), map_of(2, {1, 0})}, ElementMap::identity(2))
              .verdict()
              .axiom
          == "action-endomorphism");
  }

  TEST_CASE("check_relative") {
    auto triv = trivial_system("z2", {0, 1});
    CHECK(triv.strong());

    auto sl = check_relative(Action::conjugation(ct("sl2")), ElementMap::identity(2));
    REQUIRE(sl);
    CHECK(sl->strong());

    // R = 1 breaks C1 at (0,0) before C3 is reached; C3 fails on its own too.
    Action const act = Action::trivial(ct("z2"), ct("z2"));
    auto         one = check_relative(act, map_of(2, {1, 1}));
    CHECK(one.verdict().axiom == "C1");
    CHECK(one.verdict().witness == std::vector<Elem>{0, 0});
    Verdict c3 = relative_axiom_violation(act, map_of(2, {1, 1}), RelativeAxiom::c3);
    CHECK(c3.axiom == "C3");
    CHECK(c3.witness == std::vector<Elem>{0});

    // The identity action on sl2 with R = id satisfies C1..C4 but not C5.
    auto weak = check_relative(Action::trivial(ct("sl2"), ct("sl2")), ElementMap::identity(2));
    REQUIRE(weak);
    CHECK_FALSE(weak->strong());
    CHECK(to_string(RelativeAxiom::c5) == std::string("C5"));

    // With the conjugation action on S = T the systems are the RB operators.
    for (auto const& c : clifford_catalog()) {
      std::vector<ElementMap> rel, rb;
      for (auto const& s : enumerate_relative(Action::conjugation(c))) {
        rel.push_back(s.R());
      }
      for (auto const& r : enumerate_rb(c, Weight::plus)) {
        rb.push_back(r.map());
      }
      CAPTURE(c.name());
      CHECK(rel == rb);
    }
  }

  TEST_CASE("relative enumeration against brute force") {
    std::vector<Action> actions{sl2_on_z2(), Action::trivial(ct("z2"), ct("z3")), Action::trivial(ct("sl2"), ct("z2_0")),
                                Action::conjugation(ct("z2_0")), Action::trivial(ct("chain3"), ct("chain3"))};
    for (auto const& phi : actions) {
      std::vector<ElementMap> brute, lib;
      oracle::for_each_map(phi.acted().order(), phi.acting().order(), [&](std::vector<Elem> const& v) {
        ElementMap r(phi.acting().order(), v);
        if (check_relative(phi, r)) {
          brute.push_back(r);
        }
      });
      for (auto const& s : enumerate_relative(phi)) {
        lib.push_back(s.R());
      }
      CHECK(lib == brute);
    }
  }

  TEST_CASE("descendent operation") {
    CHECK(descendent(trivial_system("z2", {0, 1})).table() == ct("z2").table());
    CHECK(descendent(trivial_system("sl2", {1, 1})).table() == ct("sl2").table());
    for (auto const& c : clifford_catalog()) {
      for (auto const& s : enumerate_relative(Action::conjugation(c), true)) {
        CHECK(descendent(s).table() == sub_adjacent(relative_to_post(s)).table());
      }
    }
  }

  TEST_CASE("lambda-semidirect product") {
    auto z2 = lambda_semidirect(Action::trivial(ct("z2"), ct("z2")));
    CHECK(z2.semigroup.order() == 4);
    CHECK(are_isomorphic(z2.semigroup, catalog_entry("klein4").semigroup));
    CHECK(lambda_semidirect(Action::trivial(ct("sl2"), ct("sl2"))).semigroup.order() == 4);

    // x = f keeps both a; x = e keeps only a = 0.
    auto m = lambda_semidirect(sl2_on_z2());
    CHECK(m.semigroup.order() == 3);
    CHECK(m.pairs == std::vector<std::pair<Elem, Elem>>{{0, 0}, {1, 0}, {1, 1}});
    CHECK(m.index_of(0, 1) == std::nullopt);
    CHECK(classify(m.semigroup).kind == SemigroupKind::clifford);
  }

  TEST_CASE("graph characterization") {
    Action const triv = Action::trivial(ct("z2"), ct("z2"));
    auto         ok   = graph_characterization(triv, ElementMap::identity(2));
    CHECK(ok.axioms);
    CHECK(ok.graph);

    auto bad = graph_characterization(triv, map_of(2, {1, 1}));
    CHECK(bad.axioms.axiom == "C1");
    CHECK_FALSE(bad.graph);
    CHECK(bad.agree());

    auto sl = graph_characterization(Action::trivial(ct("sl2"), ct("sl2")), map_of(2, {1, 1}));
    CHECK(sl.axioms);
    CHECK(sl.graph);

    Action const act = sl2_on_z2();
    oracle::for_each_map(2, 2, [&](std::vector<Elem> const& v) {
      CHECK(graph_characterization(act, map_of(2, v)).agree());
    });
  }

  TEST_CASE("post equivalence") {
    auto triv = trivial_system("z2", {0, 1});
    CHECK(relative_to_post(triv).rhd_table() == Table::generate(2, [](Elem, Elem b) { return b; }));

    auto sl   = check_post(ct("sl2"), ct("sl2").table()).value();
    auto slr  = post_to_relative(sl);
    CHECK(slr.R() == ElementMap::identity(2));
    CHECK(check_relative(slr.phi(), slr.R()));

    auto z3 = trivial_system("z3", {0, 2, 1});
    CHECK(z3.R().is_bijective());
    CHECK(roundtrip_relative_gf(z3));
    CHECK_THROWS_AS(roundtrip_relative_gf(trivial_system("z2", {0, 0})), PreconditionError);

    for (auto const& p : small_posts()) {
      CHECK(roundtrip_relative_fg(p));
      CHECK(roundtrip_relative_gf(post_to_relative(p)));
    }
  }

  TEST_CASE("YBE from relative systems") {
    YBEMap flip = ybe_from_relative(trivial_system("z2", {0, 1}));
    CHECK(flip.out1 == Table::generate(2, [](Elem, Elem b) { return b; }));
    CHECK(flip.out2 == Table::generate(2, [](Elem a, Elem) { return a; }));

    auto sl = check_relative(Action::conjugation(ct("sl2")), ElementMap::identity(2)).value();
    CHECK(ybe_from_relative(sl) == ybe_from_post(relative_to_post(sl)));

    CHECK(oracle::braid_holds(ybe_from_relative(trivial_system("z3", {0, 2, 1}))));
  }

  TEST_CASE("twist") {
    auto z2 = trivial_system("z2", {0, 1});
    CHECK(twist(z2, ElementMap::identity(2), ElementMap::identity(2)).value() == z2);

    auto z3 = trivial_system("z3", {0, 1, 2});
    auto t  = twist(z3, map_of(3, {0, 2, 1}), ElementMap::identity(3));
    REQUIRE(t);
    CHECK(t->R() == map_of(3, {0, 2, 1}));

    // psi = 0 on S = z2; every phi_x is the identity so the hypothesis holds.
    auto zero = twist(z2, ElementMap::identity(2), map_of(2, {0, 0}));
    REQUIRE(zero);
    CHECK(zero->R() == map_of(2, {0, 0}));

    CHECK(twist(z2, map_of(2, {0, 0}), ElementMap::identity(2)).verdict().axiom == "theta-bijective");
  }

  TEST_CASE("ideals and quotients") {
    SUBCASE("M = T and N = S give the H-class skeletons") {
      for (auto const& c : clifford_catalog()) {
        for (auto const& s : enumerate_relative(Action::conjugation(c))) {
          auto q = ideal_and_quotient(s, all(c.order()), all(c.order()));
          REQUIRE(q);
          CHECK(q->t_classes.size() == c.idempotents().size());
          CHECK(q->s_classes.size() == c.idempotents().size());
          CHECK(q->brace_correspondence);
        }
      }
    }
    SUBCASE("idempotents of the trivial z2 system") {
      auto q = ideal_and_quotient(trivial_system("z2", {0, 1}), {0}, {0});
      REQUIRE(q);
      CHECK(q->system.T().order() == 2);
      CHECK(q->system.R() == ElementMap::identity(2));
    }
    SUBCASE("a subset missing an idempotent") {
      auto sl = check_relative(Action::conjugation(ct("sl2")), ElementMap::identity(2)).value();
      auto q  = ideal_and_quotient(sl, {1}, {1});
      CHECK(q.verdict().axiom == "I1-T:normal-idempotents");
      CHECK(q.verdict().witness == std::vector<Elem>{0});
    }
  }

  TEST_CASE("hom correspondence") {
    auto z2 = trivial_system("z2", {0, 1});
    auto h  = hom_correspondence(z2, z2);
    CHECK(h.brace_homs == std::vector<ElementMap>{map_of(2, {0, 0}), ElementMap::identity(2)});
    CHECK(h.relative_homs.size() == 2);
    CHECK(h.bijection);

    auto z3 = trivial_system("z3", {0, 1, 2});
    auto h3 = hom_correspondence(z3, z3);
    CHECK(h3.brace_homs.size() == 3);
    CHECK(h3.relative_homs.size() == 3);
    CHECK(h3.bijection);

    auto sl  = check_relative(Action::conjugation(ct("sl2")), ElementMap::identity(2)).value();
    auto mix = hom_correspondence(sl, z2);
    CHECK(mix.brace_homs == std::vector<ElementMap>{map_of(2, {0, 0})});
    CHECK(mix.relative_homs.size() == 1);
    CHECK(mix.bijection);

    CHECK_THROWS_AS(hom_correspondence(trivial_system("z2", {0, 0}), z2), PreconditionError);
  }
}
