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

#include "cliffy/brace.hpp"
#include "cliffy/search.hpp"
#include "cliffy/ybe.hpp"

namespace cliffy {

  enum class PostAxiom { p1, p2, p3, p4, p5 };
  char const* to_string(PostAxiom a) noexcept;

  // (T, +, |>) with
  //   P1  L_a is an endomorphism of (T,+)
  //   P2  (a + (a |> b)) |> c = a |> (b |> c)
  //   P3  a + (a |> b^0) = b^0 + (b^0 |> a)
  //   P4  L_a restricts to an automorphism of the group H_a
  // and strong when additionally P5  a^0 + (a |> b) = a |> b.
  class PostTable {
   public:
    CliffordTable const& additive() const noexcept {
      return _add;
    }
    Table const& rhd_table() const noexcept {
      return _rhd;
    }
    Elem rhd(Elem a, Elem b) const noexcept {
      return _rhd(a, b);
    }
    bool strong() const noexcept {
      return _strong;
    }
    std::size_t order() const noexcept {
      return _add.order();
    }
    // (L_a restricted to H_a)^{-1}(x) for x in H_a.
    Elem restricted_inverse(Elem a, Elem x) const noexcept {
      return _restricted_inverse(a, x);
    }

    bool operator==(PostTable const& that) const {
      return _add == that._add && _rhd == that._rhd;
    }

   private:
    PostTable(CliffordTable add, Table rhd, bool strong, Table inv);
    CliffordTable _add;
    Table         _rhd;
    bool          _strong = false;
    Table         _restricted_inverse;  // only entries with x in H_a are meaningful

    friend Checked<PostTable> check_post(CliffordTable const&, Table const&);
  };

  // First violation of one axiom: P1/P2 witness (a,b,c), P3 and P5 (a,b),
  // P4 (a,b) with b in H_a mapped outside H_a, missed, or breaking
  // additivity inside H_a.
  Verdict post_axiom_violation(CliffordTable const& add, Table const& rhd, PostAxiom axiom);

  // Checks P1..P4 in order, records P5, asserts the basic consequences.
  Checked<PostTable> check_post(CliffordTable const& add, Table const& rhd);
  // As above; a non-Clifford additive table fails with "add-<witness axiom>".
  Checked<PostTable> check_post(FiniteSemigroup const& add, Table const& rhd);

  // a o b = a + (a |> b); asserts inverse formula, E(+) = E(o) and
  // L_{a o b} = L_a L_b.
  CliffordTable sub_adjacent(PostTable const& p);

  DualWeakLeftBrace post_to_brace(PostTable const& p);
  // a |> b = -a + a o b; always strong.
  PostTable brace_to_post(DualWeakLeftBrace const& b);
  // G(F(p)) == p; PreconditionError naming P5 when p is not strong.
  Verdict roundtrip_gf(PostTable const& p);
  // F(G(b)) == b.
  Verdict roundtrip_fg(DualWeakLeftBrace const& b);

  struct PostSolution {
    YBEMap map;  // first displayed form, braid-verified
    // Agreement of the second component with
    // u + (u |> (a + (a |> b))), u = (L_{a|>b} on H)^{-1}(-(a |> b)).
    Verdict forms_agree;
  };
  // r(a,b) = (a^0 + (a |> b), (a |> b)^- o a o b).
  PostSolution ybe_from_post_detailed(PostTable const& p);
  YBEMap       ybe_from_post(PostTable const& p);

  // Fails with "additive" or "rhd" (a,b).
  Verdict is_post_hom(ElementMap const& psi, PostTable const& src, PostTable const& dst);

  // Every post structure on the given additive table, sorted by rhd table.
  std::vector<PostTable> enumerate_post(CliffordTable const& add,
                                        bool                 strong_only = false,
                                        Budget const&        budget      = {});

}  // namespace cliffy
