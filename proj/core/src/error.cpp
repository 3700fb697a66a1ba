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

#include "cliffy/error.hpp"

#include <atomic>

namespace cliffy {

  std::string Verdict::str() const {
    if (ok) {
      return "OK";
    }
    std::string out = "FAIL " + axiom + " witness=(";
    for (std::size_t i = 0; i < witness.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += std::to_string(witness[i]);
    }
    out += ')';
    return out;
  }

  namespace detail {
    void require(bool cond, char const* identity, std::vector<Elem> witness) {
      if (!cond) {
        throw InvariantViolation(Verdict::fail(identity, std::move(witness)));
      }
    }
  }  // namespace detail

  namespace diagnostics {
    namespace {
      std::atomic<std::uint64_t> suites{0};
    }
    std::uint64_t identity_suites_run() noexcept {
      return suites.load();
    }
    void note_identity_suite() noexcept {
      suites.fetch_add(1, std::memory_order_relaxed);
    }
  }  // namespace diagnostics

}  // namespace cliffy
