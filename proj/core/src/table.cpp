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

#include "cliffy/table.hpp"

#include <string>

namespace cliffy {

  Table::Table(std::size_t n, Elem fill) : _n(n), _cells(n * n, fill) {}

  Table Table::from_rows(std::vector<std::vector<Elem>> const& rows) {
    std::size_t const n = rows.size();
    Table             t(n);
    for (Elem a = 0; a < n; ++a) {
      if (rows[a].size() != n) {
        throw PreconditionError("table row " + std::to_string(a) + " has "
                                + std::to_string(rows[a].size())
                                + " entries, expected " + std::to_string(n));
      }
      for (Elem b = 0; b < n; ++b) {
        if (rows[a][b] >= n) {
          throw PreconditionError("table entry (" + std::to_string(a) + ","
                                  + std::to_string(b) + ") = "
                                  + std::to_string(rows[a][b])
                                  + " out of range");
        }
        t.at(a, b) = rows[a][b];
      }
    }
    return t;
  }

  std::vector<std::vector<Elem>> Table::rows() const {
    std::vector<std::vector<Elem>> out(_n, std::vector<Elem>(_n));
    for (Elem a = 0; a < _n; ++a) {
      for (Elem b = 0; b < _n; ++b) {
        out[a][b] = (*this)(a, b);
      }
    }
    return out;
  }

  ElementMap::ElementMap(std::size_t target_order, std::vector<Elem> images)
      : _target(target_order), _images(std::move(images)) {
    for (std::size_t a = 0; a < _images.size(); ++a) {
      if (_images[a] >= _target) {
        throw PreconditionError("map image of " + std::to_string(a) + " is "
                                + std::to_string(_images[a])
                                + ", outside 0.." + std::to_string(_target)
                                + ")");
      }
    }
  }

  ElementMap ElementMap::identity(std::size_t n) {
    std::vector<Elem> v(n);
    for (Elem a = 0; a < n; ++a) {
      v[a] = a;
    }
    return ElementMap(n, std::move(v));
  }

  ElementMap ElementMap::constant(std::size_t source,
                                  std::size_t target,
                                  Elem        v) {
    return ElementMap(target, std::vector<Elem>(source, v));
  }

  bool ElementMap::is_bijective() const {
    if (_images.size() != _target) {
      return false;
    }
    std::vector<bool> hit(_target, false);
    for (Elem x : _images) {
      if (hit[x]) {
        return false;
      }
      hit[x] = true;
    }
    return true;
  }

  std::optional<ElementMap> ElementMap::inverse() const {
    if (!is_bijective()) {
      return std::nullopt;
    }
    std::vector<Elem> inv(_target);
    for (Elem a = 0; a < _images.size(); ++a) {
      inv[_images[a]] = a;
    }
    return ElementMap(_images.size(), std::move(inv));
  }

  ElementMap ElementMap::after(ElementMap const& inner) const {
    if (inner.target_order() != source_order()) {
      throw PreconditionError("cannot compose maps: inner target "
                              + std::to_string(inner.target_order())
                              + " != outer source "
                              + std::to_string(source_order()));
    }
    std::vector<Elem> v(inner.source_order());
    for (Elem a = 0; a < v.size(); ++a) {
      v[a] = _images[inner(a)];
    }
    return ElementMap(_target, std::move(v));
  }

}  // namespace cliffy
