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

#include "cliffy/catalog.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace cliffy {

  namespace {

    std::vector<std::string> numbered(std::size_t n) {
      std::vector<std::string> out;
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(std::to_string(i));
      }
      return out;
    }

    FiniteSemigroup cyclic(std::size_t n) {
      return FiniteSemigroup(Table::generate(n, [n](Elem a, Elem b) { return (a + b) % n; }),
                             "z" + std::to_string(n),
                             numbered(n));
    }

    FiniteSemigroup chain(std::size_t n, std::string name) {
      return FiniteSemigroup(Table::generate(n, [](Elem a, Elem b) { return std::min(a, b); }),
                             std::move(name));
    }

    // Z_n together with an absorbing zero at index n.
    FiniteSemigroup with_zero(std::size_t n) {
      auto labels = numbered(n);
      labels.push_back("z");
      return FiniteSemigroup(Table::generate(n + 1,
                                             [n](Elem a, Elem b) -> Elem {
                                               if (a == n || b == n) {
                                                 return static_cast<Elem>(n);
                                               }
                                               return (a + b) % n;
                                             }),
                             "z" + std::to_string(n) + "_0",
                             std::move(labels));
    }

    FiniteSemigroup symmetric3() {
      std::vector<std::array<Elem, 3>> perms;
      std::array<Elem, 3>              p{0, 1, 2};
      do {
        perms.push_back(p);
      } while (std::next_permutation(p.begin(), p.end()));
      std::vector<std::string> labels;
      for (auto const& q : perms) {
        labels.push_back(std::string{char('0' + q[0]), char('0' + q[1]), char('0' + q[2])});
      }
      // (p + q)(i) = p(q(i)).
      Table t = Table::generate(perms.size(), [&](Elem a, Elem b) {
        std::array<Elem, 3> r{};
        for (int i = 0; i < 3; ++i) {
          r[i] = perms[a][perms[b][i]];
        }
        return static_cast<Elem>(std::find(perms.begin(), perms.end(), r) - perms.begin());
      });
      return FiniteSemigroup(std::move(t), "s3", std::move(labels));
    }

    std::vector<CatalogEntry> build() {
      std::vector<CatalogEntry> out;
      for (std::size_t n = 2; n <= 8; ++n) {
        out.push_back({"z" + std::to_string(n), "cyclic group of order " + std::to_string(n), cyclic(n), true});
      }
      out.push_back({"klein4",
                     "Klein four-group, a + b = a xor b",
                     FiniteSemigroup(Table::generate(4, [](Elem a, Elem b) { return a ^ b; }), "klein4", numbered(4)),
                     true});
      out.push_back({"s3", "symmetric group on three points, one-line labels", symmetric3(), true});
      out.push_back({"sl2",
                     "two-element semilattice: e = 0 absorbing, f = 1 with f + f = f and e + f = e",
                     FiniteSemigroup(Table::generate(2, [](Elem a, Elem b) { return std::min(a, b); }),
                                     "sl2",
                                     {"e", "f"}),
                     true});
      out.push_back({"chain3", "three-element chain, a + b = min(a, b)", chain(3, "chain3"), true});
      out.push_back({"diamond",
                     "2x2 diamond semilattice sl2 x sl2, index 2i + j",
                     FiniteSemigroup(Table::generate(4,
                                                     [](Elem a, Elem b) {
                                                       return std::min(a / 2, b / 2) * 2 + std::min(a % 2, b % 2);
                                                     }),
                                     "diamond",
                                     {"00", "01", "10", "11"}),
                     true});
      out.push_back({"z2_0", "Z2 with an adjoined absorbing zero z = 2", with_zero(2), true});
      out.push_back({"z3_0", "Z3 with an adjoined absorbing zero z = 3", with_zero(3), true});
      out.push_back({"z2_over_z2",
                     "two Z2 layers over a 2-chain, top {2,3} projected identically onto bottom {0,1}",
                     FiniteSemigroup(Table::generate(4,
                                                     [](Elem a, Elem b) {
                                                       return std::min(a / 2, b / 2) * 2 + ((a % 2) ^ (b % 2));
                                                     }),
                                     "z2_over_z2",
                                     {"0", "1", "0'", "1'"}),
                     true});
      out.push_back({"left_zero2",
                     "left-zero band of order 2 (not inverse)",
                     FiniteSemigroup(Table::generate(2, [](Elem a, Elem) { return a; }), "left_zero2"),
                     false});
      out.push_back({"nonassoc3",
                     "a + b = a - b mod 3 (not associative)",
                     FiniteSemigroup(Table::generate(3, [](Elem a, Elem b) { return (a + 3 - b) % 3; }), "nonassoc3"),
                     false});
      return out;
    }

  }  // namespace

  std::vector<CatalogEntry> const& catalog() {
    static std::vector<CatalogEntry> const entries = build();
    return entries;
  }

  CatalogEntry const& catalog_entry(std::string_view key) {
    for (auto const& e : catalog()) {
      if (e.key == key) {
        return e;
      }
    }
    throw PreconditionError("unknown catalog key '" + std::string(key) + "'");
  }

  CliffordTable catalog_clifford(std::string_view key) {
    return CliffordTable::from(catalog_entry(key).semigroup);
  }

  std::vector<CliffordTable> clifford_catalog() {
    std::vector<CliffordTable> out;
    for (auto const& e : catalog()) {
      if (e.clifford) {
        out.push_back(CliffordTable::from(e.semigroup));
      }
    }
    return out;
  }

}  // namespace cliffy
