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

#include "cliffy/ybe.hpp"

#include <array>

#include "cliffy/brace.hpp"

namespace cliffy {

  Verdict check_yang_baxter(YBEMap const& r) {
    using Triple        = std::array<Elem, 3>;
    auto const r12      = [&r](Triple t) {
      auto [x, y] = r(t[0], t[1]);
      return Triple{x, y, t[2]};
    };
    auto const r23 = [&r](Triple t) {
      auto [x, y] = r(t[1], t[2]);
      return Triple{t[0], x, y};
    };
    std::size_t const n = r.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          Triple const t{a, b, c};
          if (r12(r23(r12(t))) != r23(r12(r23(t)))) {
            return Verdict::fail("braid", {a, b, c});
          }
        }
      }
    }
    return Verdict::pass();
  }

  YBEMap ybe_from_brace(DualWeakLeftBrace const& b) {
    std::size_t const n = b.order();
    YBEMap            r{Table(n), Table(n)};
    for (Elem a = 0; a < n; ++a) {
      for (Elem c = 0; c < n; ++c) {
        Elem const first = b.lambda(a, c);
        r.out1.at(a, c)  = first;
        r.out2.at(a, c)  = b.circ(b.circ(b.inv(first), a), c);
      }
    }
    Verdict v = check_yang_baxter(r);
    detail::require(v.ok, "brace-solution-braid", v.witness);
    return r;
  }

  Verdict check_ybe_projection(YBEMap const& r, YBEMap const& rq, ElementMap const& pi) {
    for (Elem a = 0; a < r.order(); ++a) {
      for (Elem b = 0; b < r.order(); ++b) {
        auto const [x, y] = r(a, b);
        auto const [u, v] = rq(pi(a), pi(b));
        if (u != pi(x) || v != pi(y)) {
          return Verdict::fail("projection", {a, b});
        }
      }
    }
    return Verdict::pass();
  }

}  // namespace cliffy
