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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "cliffy/error.hpp"

namespace cliffy {

  // Limits for exhaustive searches. Exceeding either is a ResourceError,
  // never a silent truncation.
  struct Budget {
    std::size_t   max_order = 10;
    std::uint64_t max_nodes = 100'000'000;
    // 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;

    // Defaults overridden by CLIFFY_MAX_ORDER, CLIFFY_MAX_NODES and
    // CLIFFY_THREADS when set.
    static Budget from_env();

    void require_order(std::size_t n, char const* what) const;
  };

  namespace detail {

    // Depth-first search over assignments v[0..positions) with
    // v[k] in candidates[k]. After placing v[k], accept(v, k) decides whether
    // the prefix v[0..k] can still be extended. Complete assignments are
    // returned sorted lexicographically. The branches of position 0 are
    // split across threads; accept must be safe to call concurrently.
    template <typename Accept>
    std::vector<std::vector<Elem>>
    backtrack(std::vector<std::vector<Elem>> const& candidates,
              Accept const&                         accept,
              Budget const&                         budget) {
      std::size_t const              positions = candidates.size();
      std::vector<std::vector<Elem>> out;
      if (positions == 0) {
        out.emplace_back();
        return out;
      }
      std::atomic<std::uint64_t> nodes{0};
      std::atomic<bool>          stop{false};

      auto run_branch = [&](Elem first, std::vector<std::vector<Elem>>& found) {
        std::vector<Elem>        v(positions);
        std::vector<std::size_t> next(positions, 0);
        v[0] = first;
        if (!accept(v, 0)) {
          return;
        }
        if (positions == 1) {
          found.push_back(v);
          return;
        }
        std::size_t k = 1;
        next[1]       = 0;
        while (k > 0) {
          if (stop.load(std::memory_order_relaxed)) {
            return;
          }
          if (next[k] == candidates[k].size()) {
            --k;
            continue;
          }
          v[k] = candidates[k][next[k]++];
          if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > budget.max_nodes) {
            stop = true;
            throw ResourceError("search exceeded node budget of "
                                + std::to_string(budget.max_nodes));
          }
          if (!accept(v, k)) {
            continue;
          }
          if (k + 1 == positions) {
            found.push_back(v);
          } else {
            ++k;
            next[k] = 0;
          }
        }
      };

      auto const&                                 top = candidates[0];
      std::vector<std::vector<std::vector<Elem>>> per_branch(top.size());
      std::vector<std::exception_ptr>             errors(top.size());
      unsigned threads = budget.threads != 0 ? budget.threads
                                             : std::max(1u, std::thread::hardware_concurrency());
      threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(1, top.size())));

      if (threads <= 1) {
        for (std::size_t i = 0; i < top.size(); ++i) {
          run_branch(top[i], per_branch[i]);
        }
      } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < threads; ++t) {
          pool.emplace_back([&] {
            for (std::size_t i = cursor++; i < top.size(); i = cursor++) {
              try {
                run_branch(top[i], per_branch[i]);
              } catch (...) {
                errors[i] = std::current_exception();
                stop      = true;
              }
            }
          });
        }
        for (auto& th : pool) {
          th.join();
        }
        for (auto const& e : errors) {
          if (e) {
            std::rethrow_exception(e);
          }
        }
      }
      for (auto& branch : per_branch) {
        for (auto& v : branch) {
          out.push_back(std::move(v));
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

  }  // namespace detail

}  // namespace cliffy
