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

#include <string>
#include <vector>

#include "cliffy/braided.hpp"
#include "cliffy/catalog.hpp"
#include "cliffy/relative.hpp"
#include "cliffy/rota_baxter.hpp"

namespace testing {

  using namespace cliffy;

  inline CliffordTable ct(std::string const& key) {
    return catalog_clifford(key);
  }

  inline ElementMap map_of(std::size_t target, std::vector<Elem> images) {
    return ElementMap(target, std::move(images));
  }

  inline RBOperator rb(std::string const& key, std::vector<Elem> images, Weight w = Weight::plus) {
    CliffordTable c = ct(key);
    return check_rb(c, map_of(c.order(), std::move(images)), w).value();
  }

  // (S, +, +).
  inline DualWeakLeftBrace trivial_brace(std::string const& key) {
    CliffordTable c = ct(key);
    return check_brace(c.table(), c.table()).value();
  }

  // a |> b = f(a, b) on the catalog entry `key`.
  template <typename F>
  Table rhd_table(std::string const& key, F&& f) {
    CliffordTable c = ct(key);
    return Table::generate(c.order(), [&](Elem a, Elem b) { return f(c, a, b); });
  }

  // (T, T, identity action, R).
  inline RelativeRBSystem trivial_system(std::string const& key, std::vector<Elem> r) {
    CliffordTable c = ct(key);
    return check_relative(Action::trivial(c, c), map_of(c.order(), std::move(r))).value();
  }

  // Every post structure on the catalog entries of order <= 4.
  inline std::vector<PostTable> small_posts() {
    std::vector<PostTable> out;
    for (auto const& c : clifford_catalog()) {
      if (c.order() <= 4) {
        for (auto& p : enumerate_post(c)) {
          out.push_back(std::move(p));
        }
      }
    }
    return out;
  }

}  // namespace testing
