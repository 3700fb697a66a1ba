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

#include "cliffy/post.hpp"
#include "cliffy/ybe.hpp"

namespace cliffy {

  // (T, o, sigma) with sigma(a,b) = (a -> b, a <- b), where -> is `left`
  // and <- is `right`, satisfying B1..B9.
  class BraidedTable {
   public:
    CliffordTable const& circ() const noexcept {
      return _circ;
    }
    Table const& left_table() const noexcept {
      return _left;
    }
    Table const& right_table() const noexcept {
      return _right;
    }
    Elem left(Elem a, Elem b) const noexcept {
      return _left(a, b);
    }
    Elem right(Elem a, Elem b) const noexcept {
      return _right(a, b);
    }
    std::size_t order() const noexcept {
      return _circ.order();
    }

    bool operator==(BraidedTable const& that) const {
      return _circ == that._circ && _left == that._left && _right == that._right;
    }

   private:
    BraidedTable(CliffordTable circ, Table left, Table right);
    CliffordTable _circ;
    Table         _left;
    Table         _right;

    friend Checked<BraidedTable> check_braided(CliffordTable const&, Table const&, Table const&);
  };

  // Checked in the order B1, B4, B2, B5, B7, B8, B9, B3, B6. Unary
  // witnesses are (a), B7..B9 are (a,b), the rest (x,y,z) in the order the
  // variables appear in the law. On success the derived identities are
  // asserted.
  Checked<BraidedTable> check_braided(CliffordTable const& circ, Table const& left, Table const& right);
  // A non-Clifford circ table fails with "circ-<classification axiom>".
  Checked<BraidedTable> check_braided(Table const& circ, Table const& left, Table const& right);

  // a -> b = a^0 + (a |> b), a <- b = (a |> b)^- o a o b on the
  // sub-adjacent semigroup.
  BraidedTable post_to_braided(PostTable const& p);
  // a + b = a o (a^- -> b), |> = ->; the result is strong and
  // -a = a -> a^- is asserted.
  PostTable braided_to_post(BraidedTable const& b);

  // Fails with "py-add" or "py-rhd" (a,b). PreconditionError naming P5 when
  // p is not strong.
  Verdict roundtrip_py(PostTable const& p);
  // Fails with "yp-circ", "yp-left" or "yp-right" (a,b).
  Verdict roundtrip_yp(BraidedTable const& b);

  // sigma as a map on T x T, braid-verified.
  YBEMap sigma_as_ybe(BraidedTable const& b);

}  // namespace cliffy
