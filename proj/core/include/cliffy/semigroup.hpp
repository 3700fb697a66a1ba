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

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cliffy/table.hpp"

namespace cliffy {

  // A finite magma given by its Cayley table. Entries are range checked on
  // construction; associativity is not required here so that `classify` can
  // report it.
  class FiniteSemigroup {
   public:
    FiniteSemigroup() = default;
    explicit FiniteSemigroup(Table                    add,
                             std::string              name   = {},
                             std::vector<std::string> labels = {});

    std::size_t order() const noexcept {
      return _add.order();
    }
    Elem add(Elem a, Elem b) const noexcept {
      return _add(a, b);
    }
    Table const& table() const noexcept {
      return _add;
    }
    std::string const& name() const noexcept {
      return _name;
    }
    std::vector<std::string> const& labels() const noexcept {
      return _labels;
    }
    std::string label(Elem a) const;

    // Smallest (a,b,c) with (a+b)+c != a+(b+c).
    std::optional<std::array<Elem, 3>> associativity_violation() const;
    bool                               is_commutative() const;

    bool operator==(FiniteSemigroup const& that) const {
      return _add == that._add;
    }

   private:
    Table                    _add;
    std::string              _name;
    std::vector<std::string> _labels;
  };

}  // namespace cliffy
