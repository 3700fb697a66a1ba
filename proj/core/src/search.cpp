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

#include "cliffy/search.hpp"

#include <cstdlib>

namespace cliffy {

  namespace {
    template <typename T>
    void read_env(char const* key, T& slot) {
      char const* raw = std::getenv(key);
      if (raw == nullptr || *raw == '\0') {
        return;
      }
      char*                    end = nullptr;
      unsigned long long const v   = std::strtoull(raw, &end, 10);
      if (end == raw || *end != '\0') {
        throw PreconditionError(std::string(key) + " is not a non-negative integer: " + raw);
      }
      slot = static_cast<T>(v);
    }
  }  // namespace

  Budget Budget::from_env() {
    Budget b;
    read_env("CLIFFY_MAX_ORDER", b.max_order);
    read_env("CLIFFY_MAX_NODES", b.max_nodes);
    read_env("CLIFFY_THREADS", b.threads);
    return b;
  }

  void Budget::require_order(std::size_t n, char const* what) const {
    if (n > max_order) {
      throw ResourceError(std::string(what) + ": order " + std::to_string(n)
                          + " exceeds budget of " + std::to_string(max_order));
    }
  }

}  // namespace cliffy
