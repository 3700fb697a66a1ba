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

#include "cliffy/semigroup.hpp"

namespace cliffy {

  FiniteSemigroup::FiniteSemigroup(Table                    add,
                                   std::string              name,
                                   std::vector<std::string> labels)
      : _add(std::move(add)), _name(std::move(name)), _labels(std::move(labels)) {
    if (!_labels.empty() && _labels.size() != _add.order()) {
      throw PreconditionError("label count does not match order");
    }
  }

  std::string FiniteSemigroup::label(Elem a) const {
    return _labels.empty() ? std::to_string(a) : _labels[a];
  }

  std::optional<std::array<Elem, 3>>
  FiniteSemigroup::associativity_violation() const {
    std::size_t const n = order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const ab = add(a, b);
        for (Elem c = 0; c < n; ++c) {
          if (add(ab, c) != add(a, add(b, c))) {
            return std::array<Elem, 3>{a, b, c};
          }
        }
      }
    }
    return std::nullopt;
  }

  bool FiniteSemigroup::is_commutative() const {
    for (Elem a = 0; a < order(); ++a) {
      for (Elem b = a + 1; b < order(); ++b) {
        if (add(a, b) != add(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace cliffy
