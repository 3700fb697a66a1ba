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
#include <string_view>
#include <vector>

#include "cliffy/clifford.hpp"

namespace cliffy {

  struct CatalogEntry {
    std::string     key;
    std::string     description;
    FiniteSemigroup semigroup;
    // False for the negative fixtures (left-zero band, non-associative).
    bool clifford;
  };

  // Fixed list of small fixtures, all of order <= 8.
  std::vector<CatalogEntry> const& catalog();
  // Throws PreconditionError for an unknown key.
  CatalogEntry const& catalog_entry(std::string_view key);
  // Throws VerificationError for a negative fixture.
  CliffordTable catalog_clifford(std::string_view key);
  std::vector<CliffordTable> clifford_catalog();

}  // namespace cliffy
