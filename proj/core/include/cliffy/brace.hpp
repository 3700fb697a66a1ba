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

#include <vector>

#include "cliffy/clifford.hpp"

namespace cliffy {

  // Dual weak left brace (S, +, o): both reducts Clifford,
  //   x o (y + z) = x o y - x + x o z   and   x o x^- = -x + x.
  class DualWeakLeftBrace {
   public:
    CliffordTable const& additive() const noexcept {
      return _add;
    }
    CliffordTable const& multiplicative() const noexcept {
      return _circ;
    }
    std::size_t order() const noexcept {
      return _add.order();
    }
    Elem add(Elem a, Elem b) const noexcept {
      return _add.add(a, b);
    }
    Elem neg(Elem a) const noexcept {
      return _add.neg(a);
    }
    Elem circ(Elem a, Elem b) const noexcept {
      return _circ.add(a, b);
    }
    // Inverse in (S, o).
    Elem inv(Elem a) const noexcept {
      return _circ.neg(a);
    }
    // lambda_a(b) = -a + a o b.
    Elem lambda(Elem a, Elem b) const noexcept {
      return _add.add(_add.neg(a), circ(a, b));
    }

    bool operator==(DualWeakLeftBrace const& that) const {
      return _add == that._add && _circ == that._circ;
    }

   private:
    DualWeakLeftBrace(CliffordTable add, CliffordTable circ);
    CliffordTable _add;
    CliffordTable _circ;

    friend Checked<DualWeakLeftBrace> check_brace(FiniteSemigroup const&,
                                                  FiniteSemigroup const&);
  };

  // Axioms in check order: "add-clifford", "circ-clifford" (classification
  // witness), "brace-inverse" (x), "brace-idempotents" (e),
  // "brace-distributive" (x,y,z), "brace-idempotent-action" (e,a).
  Checked<DualWeakLeftBrace> check_brace(FiniteSemigroup const& add,
                                         FiniteSemigroup const& circ);
  Checked<DualWeakLeftBrace> check_brace(Table const& add, Table const& circ);

  // lambda_a for every a; each is verified to be an endomorphism of (S,+)
  // and a |-> lambda_a a homomorphism from (S,o).
  std::vector<ElementMap> lambda_maps(DualWeakLeftBrace const& b);

  // Fails with "additive" (a,b) before testing "multiplicative" (a,b).
  // The lambda criterion psi lambda_a = lambda_psi(a) psi is evaluated too
  // and must agree with the direct test.
  Verdict is_brace_hom(ElementMap const&        psi,
                       DualWeakLeftBrace const& src,
                       DualWeakLeftBrace const& dst);

  // Ideal: normal in (S,+), normal in (S,o) and lambda_a(I) in I.
  // Fails with "ideal-add-<normal axiom>", "ideal-circ-<normal axiom>"
  // or "ideal-lambda" (a,i).
  Verdict check_ideal(DualWeakLeftBrace const& b, std::vector<Elem> const& members);

  struct BraceQuotient {
    DualWeakLeftBrace              brace;
    ElementMap                     projection;
    std::vector<std::vector<Elem>> classes;
  };

  // Throws VerificationError if `members` is not an ideal. Checks that the
  // additive and multiplicative congruences coincide and o is well defined.
  BraceQuotient quotient_brace(DualWeakLeftBrace const& b, std::vector<Elem> members);

}  // namespace cliffy
