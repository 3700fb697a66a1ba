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

#include <cstddef>
#include <compare>
#include <optional>
#include <vector>

#include "cliffy/error.hpp"

namespace cliffy {

  // Dense n x n table of a binary operation on {0..n-1}.
  class Table {
   public:
    Table() = default;
    explicit Table(std::size_t n, Elem fill = 0);

    // Throws PreconditionError on ragged rows or out-of-range entries.
    static Table from_rows(std::vector<std::vector<Elem>> const& rows);

    template <typename F>
    static Table generate(std::size_t n, F&& f) {
      Table t(n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          t.at(a, b) = static_cast<Elem>(f(a, b));
        }
      }
      return t;
    }

    std::size_t order() const noexcept {
      return _n;
    }
    Elem operator()(Elem a, Elem b) const noexcept {
      return _cells[a * _n + b];
    }
    Elem& at(Elem a, Elem b) noexcept {
      return _cells[a * _n + b];
    }
    std::vector<std::vector<Elem>> rows() const;
    std::vector<Elem> const&       cells() const noexcept {
      return _cells;
    }

    bool operator==(Table const&) const = default;
    auto operator<=>(Table const&) const = default;

   private:
    std::size_t       _n = 0;
    std::vector<Elem> _cells;
  };

  // A function {0..m-1} -> {0..k-1}.
  class ElementMap {
   public:
    ElementMap() = default;
    // Throws PreconditionError if an image is >= target_order.
    ElementMap(std::size_t target_order, std::vector<Elem> images);

    static ElementMap identity(std::size_t n);
    static ElementMap constant(std::size_t source, std::size_t target, Elem v);

    std::size_t source_order() const noexcept {
      return _images.size();
    }
    std::size_t target_order() const noexcept {
      return _target;
    }
    Elem operator()(Elem a) const noexcept {
      return _images[a];
    }
    Elem operator[](Elem a) const noexcept {
      return _images[a];
    }
    std::vector<Elem> const& images() const noexcept {
      return _images;
    }

    bool                      is_bijective() const;
    std::optional<ElementMap> inverse() const;
    // (*this) o inner, i.e. a |-> this(inner(a)).
    ElementMap after(ElementMap const& inner) const;

    bool operator==(ElementMap const&) const = default;
    auto operator<=>(ElementMap const&) const = default;

   private:
    std::size_t       _target = 0;
    std::vector<Elem> _images;
  };

}  // namespace cliffy
