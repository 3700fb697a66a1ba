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

#include "cliffy/morphism.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace cliffy {

  Verdict is_homomorphism(ElementMap const&      f,
                          FiniteSemigroup const& src,
                          FiniteSemigroup const& dst) {
    if (f.source_order() != src.order() || f.target_order() != dst.order()) {
      return Verdict::fail("map-shape");
    }
    for (Elem a = 0; a < src.order(); ++a) {
      for (Elem b = 0; b < src.order(); ++b) {
        if (f(src.add(a, b)) != dst.add(f(a), f(b))) {
          return Verdict::fail("homomorphism", {a, b});
        }
      }
    }
    return Verdict::pass();
  }

  Verdict is_endomorphism(ElementMap const& f, FiniteSemigroup const& s) {
    return is_homomorphism(f, s, s);
  }

  Verdict is_automorphism(ElementMap const& f, FiniteSemigroup const& s) {
    Verdict v = is_endomorphism(f, s);
    if (!v) {
      return v;
    }
    for (Elem a = 0; a < s.order(); ++a) {
      for (Elem b = a + 1; b < s.order(); ++b) {
        if (f(a) == f(b)) {
          return Verdict::fail("bijective", {a, b});
        }
      }
    }
    return Verdict::pass();
  }

  FiniteSemigroup direct_product(FiniteSemigroup const& a, FiniteSemigroup const& b) {
    std::size_t const nb = b.order();
    std::size_t const n  = a.order() * nb;
    Table             t  = Table::generate(n, [&](Elem x, Elem y) {
      Elem const i = a.add(x / nb, y / nb);
      Elem const j = b.add(x % nb, y % nb);
      return i * nb + j;
    });
    std::vector<std::string> labels;
    for (Elem x = 0; x < n; ++x) {
      labels.push_back("(" + a.label(x / nb) + "," + b.label(x % nb) + ")");
    }
    return FiniteSemigroup(std::move(t), a.name() + "x" + b.name(), std::move(labels));
  }

  FiniteSemigroup opposite(FiniteSemigroup const& a) {
    return FiniteSemigroup(
        Table::generate(a.order(), [&](Elem x, Elem y) { return a.add(y, x); }),
        a.name() + "^op",
        a.labels());
  }

  namespace {
    // Invariant of an element preserved by isomorphisms.
    using Profile = std::array<std::size_t, 5>;

    std::vector<Profile> profiles(FiniteSemigroup const& s) {
      std::size_t const    n = s.order();
      std::vector<Profile> out(n);
      for (Elem a = 0; a < n; ++a) {
        // Index and period of the monogenic subsemigroup of a.
        std::vector<Elem> seen;
        Elem              x = a;
        std::size_t       index = 0, period = 0;
        while (true) {
          auto it = std::find(seen.begin(), seen.end(), x);
          if (it != seen.end()) {
            index  = static_cast<std::size_t>(it - seen.begin());
            period = seen.size() - index;
            break;
          }
          seen.push_back(x);
          x = s.add(x, a);
        }
        std::size_t left_fix = 0, right_fix = 0, square_roots = 0;
        for (Elem y = 0; y < n; ++y) {
          left_fix += s.add(y, a) == a;
          right_fix += s.add(a, y) == a;
          square_roots += s.add(y, y) == a;
        }
        out[a] = {index, period, left_fix, right_fix, square_roots};
      }
      return out;
    }
  }  // namespace

  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& a,
                                             FiniteSemigroup const& b) {
    std::size_t const n = a.order();
    if (n != b.order()) {
      return std::nullopt;
    }
    auto pa = profiles(a);
    auto pb = profiles(b);
    {
      auto sa = pa, sb = pb;
      std::sort(sa.begin(), sa.end());
      std::sort(sb.begin(), sb.end());
      if (sa != sb) {
        return std::nullopt;
      }
    }
    std::vector<std::vector<Elem>> candidates(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        if (pa[x] == pb[y]) {
          candidates[x].push_back(y);
        }
      }
    }
    std::vector<Elem> f(n);
    std::vector<bool> used(n, false);
    // Plain recursion; orders are tiny and profiles prune hard.
    auto consistent = [&](Elem k) {
      for (Elem x = 0; x <= k; ++x) {
        for (Elem y = 0; y <= k; ++y) {
          Elem const s = a.add(x, y);
          if ((x == k || y == k || s == k) && s <= k && f[s] != b.add(f[x], f[y])) {
            return false;
          }
        }
      }
      return true;
    };
    auto rec = [&](auto&& self, Elem k) -> bool {
      if (k == n) {
        return true;
      }
      for (Elem y : candidates[k]) {
        if (used[y]) {
          continue;
        }
        f[k]    = y;
        used[y] = true;
        if (consistent(k) && self(self, k + 1)) {
          return true;
        }
        used[y] = false;
      }
      return false;
    };
    if (!rec(rec, 0)) {
      return std::nullopt;
    }
    ElementMap iso(n, f);
    detail::require(static_cast<bool>(is_homomorphism(iso, a, b)), "isomorphism-found", {});
    return iso;
  }

  std::vector<ElementMap> homomorphisms(FiniteSemigroup const& src,
                                        FiniteSemigroup const& dst,
                                        Budget const&          budget) {
    std::size_t const              n = src.order();
    std::vector<std::vector<Elem>> candidates(n);
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < dst.order(); ++y) {
        candidates[x].push_back(y);
      }
    }
    auto accept = [&](std::vector<Elem> const& f, std::size_t k) {
      for (Elem x = 0; x <= k; ++x) {
        for (Elem y = 0; y <= k; ++y) {
          Elem const s = src.add(x, y);
          if ((x == k || y == k || s == k) && s <= k && f[s] != dst.add(f[x], f[y])) {
            return false;
          }
        }
      }
      return true;
    };
    std::vector<ElementMap> out;
    for (auto& v : detail::backtrack(candidates, accept, budget)) {
      out.emplace_back(dst.order(), std::move(v));
    }
    return out;
  }

  std::vector<ElementMap> automorphisms(FiniteSemigroup const& s, Budget const& budget) {
    std::vector<ElementMap> out;
    for (auto& f : homomorphisms(s, s, budget)) {
      if (f.is_bijective()) {
        out.push_back(std::move(f));
      }
    }
    return out;
  }

}  // namespace cliffy
