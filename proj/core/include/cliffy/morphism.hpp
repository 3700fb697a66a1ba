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
#include <vector>

#include "cliffy/clifford.hpp"
#include "cliffy/search.hpp"

namespace cliffy {

  // Fails with "map-shape" or "homomorphism" (a,b).
  Verdict is_homomorphism(ElementMap const&      f,
                          FiniteSemigroup const& src,
                          FiniteSemigroup const& dst);
  Verdict is_endomorphism(ElementMap const& f, FiniteSemigroup const& s);
  // Additionally fails with "bijective" (a,b) for a collision or () if
  // the map misses an element.
  Verdict is_automorphism(ElementMap const& f, FiniteSemigroup const& s);

  // Element (i, j) gets index i * |b| + j.
  FiniteSemigroup direct_product(FiniteSemigroup const& a, FiniteSemigroup const& b);
  FiniteSemigroup opposite(FiniteSemigroup const& a);

  // Backtracking over bijections pruned by per-element invariants.
  std::optional<ElementMap> find_isomorphism(FiniteSemigroup const& a,
                                             FiniteSemigroup const& b);
  inline bool are_isomorphic(FiniteSemigroup const& a, FiniteSemigroup const& b) {
    return find_isomorphism(a, b).has_value();
  }

  // All homomorphisms src -> dst, sorted.
  std::vector<ElementMap> homomorphisms(FiniteSemigroup const& src,
                                        FiniteSemigroup const& dst,
                                        Budget const&          budget = {});
  std::vector<ElementMap> automorphisms(FiniteSemigroup const& s,
                                        Budget const&          budget = {});

}  // namespace cliffy
