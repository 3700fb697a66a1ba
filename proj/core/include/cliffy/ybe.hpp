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

#include <utility>

#include "cliffy/table.hpp"

namespace cliffy {

  class DualWeakLeftBrace;

  // Set-theoretic map r(a,b) = (out1(a,b), out2(a,b)) on X x X.
  struct YBEMap {
    Table out1;
    Table out2;

    std::size_t order() const noexcept {
      return out1.order();
    }
    std::pair<Elem, Elem> operator()(Elem a, Elem b) const noexcept {
      return {out1(a, b), out2(a, b)};
    }
    bool operator==(YBEMap const&) const = default;
  };

  // (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r) on every triple;
  // fails with "braid" and the smallest (a,b,c).
  Verdict check_yang_baxter(YBEMap const& r);

  // r(a,b) = (-a + a o b, (-a + a o b)^- o a o b); braid-verified.
  YBEMap ybe_from_brace(DualWeakLeftBrace const& b);

  // r_q(pi a, pi b) = (pi x pi) r(a, b). Fails with "projection" (a,b).
  Verdict check_ybe_projection(YBEMap const& r, YBEMap const& rq, ElementMap const& pi);

}  // namespace cliffy
