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

#include "cliffy/braided.hpp"
#include "cliffy/relative.hpp"
#include "cliffy/rota_baxter.hpp"

// JSON documents with a fixed key order so emitted text is byte-stable.
// Parsers validate shapes and index ranges and throw PreconditionError.
namespace cliffy::json {

  // {"name": str, "order": n, "add": [[int]]}
  std::string     dump_semigroup(FiniteSemigroup const& s);
  FiniteSemigroup parse_semigroup(std::string_view text);

  // {"map": [int]}
  std::string dump_map(ElementMap const& m);
  // Images must be < target_order.
  ElementMap parse_map(std::string_view text, std::size_t target_order);
  // [[int], ...]
  std::string dump_maps(std::vector<ElementMap> const& maps);

  std::string dump_table(Table const& t);

  struct BraceDoc {
    Table add, circ;
  };
  // {"add": [[int]], "circ": [[int]]}
  std::string dump_brace(DualWeakLeftBrace const& b);
  BraceDoc    parse_brace(std::string_view text);

  // {"out1": [[int]], "out2": [[int]]}
  std::string dump_ybe(YBEMap const& r);
  YBEMap      parse_ybe(std::string_view text);

  struct PostDoc {
    Table add, rhd;
  };
  // {"add": [[int]], "rhd": [[int]]}
  std::string dump_post(PostTable const& p);
  PostDoc     parse_post(std::string_view text);

  struct RelativeDoc {
    Table                   t, s;
    std::vector<ElementMap> phi;
    ElementMap              r;
  };
  // {"T": [[int]], "S": [[int]], "phi": [[int] per S-element], "R": [int]}
  std::string dump_relative(RelativeRBSystem const& sys);
  RelativeDoc parse_relative(std::string_view text);

  struct BraidedDoc {
    Table circ, left, right;
  };
  // {"circ": [[int]], "left": [[int]], "right": [[int]]}
  std::string dump_braided(BraidedTable const& b);
  BraidedDoc  parse_braided(std::string_view text);

  // {"pairs": [[x, a]], "add": [[int]], "neg": [int]}
  std::string dump_semidirect(LambdaSemidirectProduct const& m);

  // {"ok": bool, "axiom": str, "witness": [int]}
  std::string dump_verdict(Verdict const& v);

}  // namespace cliffy::json
