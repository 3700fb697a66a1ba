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

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cliffy/brace.hpp"
#include "cliffy/post.hpp"
#include "cliffy/search.hpp"
#include "cliffy/ybe.hpp"

namespace cliffy {

  // s |-> phi_s, a homomorphism from (S,+) into the endomorphism monoid of
  // (T,+). Stored as |S| full tables.
  class Action {
   public:
    CliffordTable const& acting() const noexcept {
      return _s;
    }
    CliffordTable const& acted() const noexcept {
      return _t;
    }
    std::size_t acting_order() const noexcept {
      return _s.order();
    }
    // phi_s(a).
    Elem operator()(Elem s, Elem a) const noexcept {
      return _maps[s][a];
    }
    ElementMap const& map(Elem s) const noexcept {
      return _maps[s];
    }
    std::vector<ElementMap> const& maps() const noexcept {
      return _maps;
    }

    bool operator==(Action const& that) const {
      return _s == that._s && _t == that._t && _maps == that._maps;
    }

    // Every phi_s is the identity.
    static Action trivial(CliffordTable s, CliffordTable t);
    // S = T acting on itself by phi_s(x) = s + x - s.
    static Action conjugation(CliffordTable t);

   private:
    Action(CliffordTable s, CliffordTable t, std::vector<ElementMap> maps);
    CliffordTable           _s;
    CliffordTable           _t;
    std::vector<ElementMap> _maps;

    friend Checked<Action> check_action(CliffordTable, CliffordTable, std::vector<ElementMap>);
  };

  // Fails with "action-endomorphism" (s,a,b) or "action-homomorphism"
  // (x,y,a) where phi_{x+y}(a) != phi_x(phi_y(a)). Wrong sizes are a
  // PreconditionError.
  Checked<Action> check_action(CliffordTable s, CliffordTable t, std::vector<ElementMap> maps);

  enum class RelativeAxiom { c1, c2, c3, c4, c5 };
  char const* to_string(RelativeAxiom a) noexcept;

  // (T, S, phi, R) with R : T -> S and
  //   C1  R(a) + R(b) = R(a + phi_{R(a)}(b))
  //   C2  phi_{R(a)^0}(a) = a
  //   C3  R(a^0) = R(a)^0
  //   C4  a + phi_{R(a)}(b^0) = b^0 + phi_{R(b^0)}(a)
  // strong when also C5  a^0 + phi_{R(a)}(b) = phi_{R(a)}(b).
  class RelativeRBSystem {
   public:
    CliffordTable const& T() const noexcept {
      return _phi.acted();
    }
    CliffordTable const& S() const noexcept {
      return _phi.acting();
    }
    Action const& phi() const noexcept {
      return _phi;
    }
    ElementMap const& R() const noexcept {
      return _r;
    }
    bool strong() const noexcept {
      return _strong;
    }
    Elem act(Elem s, Elem a) const noexcept {
      return _phi(s, a);
    }

    bool operator==(RelativeRBSystem const& that) const {
      return _phi == that._phi && _r == that._r;
    }

   private:
    RelativeRBSystem(Action phi, ElementMap r, bool strong);
    Action     _phi;
    ElementMap _r;
    bool       _strong = false;

    friend Checked<RelativeRBSystem> check_relative(Action const&, ElementMap const&);
  };

  // First violation of one axiom; C1 and C4 witnesses are (a,b), C2 and C3
  // are (a), C5 is (a,b).
  Verdict relative_axiom_violation(Action const& phi, ElementMap const& r, RelativeAxiom axiom);

  // C1..C4 in order, C5 recorded. On success the derived identities of
  // the definition are asserted, together with the split form of C4.
  // PreconditionError if R does not map T into S.
  Checked<RelativeRBSystem> check_relative(Action const& phi, ElementMap const& r);
  // Action failures come back under their own axiom names.
  Checked<RelativeRBSystem> check_relative(CliffordTable const&           t,
                                           CliffordTable const&           s,
                                           std::vector<ElementMap> const& phi,
                                           ElementMap const&              r);

  // a o_R b = a + phi_{R(a)}(b). Asserts the inverse formula
  // phi_{-R(a)}(-a), that R is a homomorphism to (S,+) and that phi_{R(a)}
  // restricts to an automorphism of H_a inverted by phi_{-R(a)}.
  CliffordTable descendent(RelativeRBSystem const& sys);
  DualWeakLeftBrace descendent_brace(RelativeRBSystem const& sys);

  // M(S,T,phi) = {(x,a) : phi_{x^0}(a) = a} with
  // (x,a) + (y,b) = (x + y, phi_{y^0}(a) + phi_x(b)).
  struct LambdaSemidirectProduct {
    FiniteSemigroup                   semigroup;  // inverse, maybe not Clifford
    std::vector<std::pair<Elem, Elem>> pairs;     // x-major
    std::vector<Elem>                 negation;

    std::optional<Elem> index_of(Elem x, Elem a) const;
  };

  // Asserts the inverse semigroup property, the negation formula
  // (-x, phi_{-x}(-a)) and that the idempotents are exactly the pairs of
  // idempotents.
  LambdaSemidirectProduct lambda_semidirect(Action const& phi);

  struct GraphReport {
    Verdict axioms;  // check_relative verdict
    Verdict graph;   // "graph-in-M" (a), "graph-closed-add" (a,b),
                     // "graph-closed-neg" (a), "graph-clifford"
    bool    agree() const noexcept {
      return axioms.ok == graph.ok;
    }
  };

  // Decides the axioms and, independently, whether Gr R = {(R(a), a)} is a
  // Clifford subsemigroup of M(S,T,phi). When both hold, a |-> (R(a), a)
  // is checked to carry o_R onto the sum in M. Disagreement of the two
  // procedures throws InvariantViolation "graph-characterization".
  GraphReport graph_characterization(Action const& phi, ElementMap const& r);

  // a |> b = phi_{R(a)}(b).
  PostTable relative_to_post(RelativeRBSystem const& sys);
  // ((T,+), (T,o), L, id).
  RelativeRBSystem post_to_relative(PostTable const& p);

  // (psi, eta) with psi, eta homomorphisms, eta R = B psi and
  // psi phi_x = phi'_{eta(x)} psi. Fails with "psi-<axiom>", "eta-<axiom>",
  // "intertwine-R" (a) or "intertwine-phi" (x,a).
  Verdict is_relative_hom(ElementMap const&       psi,
                          ElementMap const&       eta,
                          RelativeRBSystem const& src,
                          RelativeRBSystem const& dst);
  // Adds "psi-bijective" and "eta-bijective".
  Verdict is_relative_iso(ElementMap const&       psi,
                          ElementMap const&       eta,
                          RelativeRBSystem const& src,
                          RelativeRBSystem const& dst);

  // post_to_relative(relative_to_post(p)) gives back p's rhd exactly.
  Verdict roundtrip_relative_fg(PostTable const& p);
  // For bijective R, (id_T, R) is a relative isomorphism from
  // post_to_relative(relative_to_post(sys)) onto sys. PreconditionError
  // when R is not bijective.
  Verdict roundtrip_relative_gf(RelativeRBSystem const& sys);

  // r(a,b) = (-a + a + c, phi_{-R(c)}(-c + a + c)) with c = phi_{R(a)}(b).
  // Braid-verified and checked against the post route.
  YBEMap ybe_from_relative(RelativeRBSystem const& sys);

  // (T, S, phi, psi R theta) for theta in Aut(T,+), psi in End(S,+) with
  // theta^-1 phi_x theta = phi_{psi(x)}. Fails with "theta-<axiom>",
  // "psi-<axiom>" or "twist-hypothesis" (x,a).
  Checked<RelativeRBSystem> twist(RelativeRBSystem const& sys,
                                  ElementMap const&       theta,
                                  ElementMap const&       psi);

  struct RelativeQuotient {
    RelativeRBSystem               system;
    ElementMap                     t_projection;
    ElementMap                     s_projection;
    std::vector<std::vector<Elem>> t_classes;
    std::vector<std::vector<Elem>> s_classes;
    // M is a brace ideal of (T,+,o_R) and the quotient brace equals the
    // descendent brace of the quotient system.
    Verdict brace_correspondence;
  };

  // Conditions in order: "sub-M:<axiom>", "sub-N:<axiom>", "sub-R" (m),
  // "sub-phi" (n,m), "I1-T:<normal axiom>", "I1-S:<normal axiom>",
  // "I2" (x,m), "I3" (n,t), "I4" (n1,n2,e). Then "well-defined-phi"
  // (x1,x2,b1,b2) and "well-defined-R" (b1,b2).
  Checked<RelativeQuotient> ideal_and_quotient(RelativeRBSystem const& sys,
                                               std::vector<Elem>       m,
                                               std::vector<Elem>       n);

  struct HomCorrespondence {
    std::vector<ElementMap>                          brace_homs;
    std::vector<std::pair<ElementMap, ElementMap>>   relative_homs;
    // "theta-not-hom" (i) or "theta-not-surjective" (i) on failure.
    Verdict bijection;
  };

  // Theta(psi) = (psi, B psi R^-1) between brace homomorphisms of the
  // descendent braces and relative homomorphisms. Both systems strong and
  // R of `a` bijective, else PreconditionError.
  HomCorrespondence hom_correspondence(RelativeRBSystem const& a,
                                       RelativeRBSystem const& b,
                                       Budget const&           budget = {});

  // All R : T -> S making a relative system, sorted by images.
  std::vector<RelativeRBSystem> enumerate_relative(Action const& phi,
                                                   bool          strong_only = false,
                                                   Budget const& budget      = {});

}  // namespace cliffy
