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

#include "cliffy/json_io.hpp"

#include <json.hpp>

namespace cliffy::json {

  namespace {

    using Json = nlohmann::ordered_json;

    Json parse(std::string_view text) {
      try {
        return Json::parse(text);
      } catch (nlohmann::json::exception const& e) {
        throw PreconditionError(std::string("malformed JSON: ") + e.what());
      }
    }

    Json const& field(Json const& doc, char const* key) {
      if (!doc.is_object() || !doc.contains(key)) {
        throw PreconditionError(std::string("JSON document lacks \"") + key + "\"");
      }
      return doc.at(key);
    }

    std::vector<Elem> ints(Json const& j, char const* what) {
      if (!j.is_array()) {
        throw PreconditionError(std::string(what) + " must be an array of integers");
      }
      std::vector<Elem> out;
      for (auto const& x : j) {
        if (!x.is_number_integer() || x.get<long long>() < 0) {
          throw PreconditionError(std::string(what) + " must hold non-negative integers");
        }
        out.push_back(x.get<Elem>());
      }
      return out;
    }

    Table table(Json const& j, char const* what) {
      if (!j.is_array()) {
        throw PreconditionError(std::string(what) + " must be an array of rows");
      }
      std::vector<std::vector<Elem>> rows;
      for (auto const& row : j) {
        rows.push_back(ints(row, what));
      }
      return Table::from_rows(rows);
    }

    Json rows(Table const& t) {
      return Json(t.rows());
    }

    std::string text(Json const& j) {
      return j.dump() + "\n";
    }

    void same_order(Table const& a, Table const& b, char const* what) {
      if (a.order() != b.order()) {
        throw PreconditionError(std::string(what) + " tables differ in order");
      }
    }

  }  // namespace

  std::string dump_semigroup(FiniteSemigroup const& s) {
    Json j;
    j["name"]  = s.name();
    j["order"] = s.order();
    j["add"]   = rows(s.table());
    return text(j);
  }

  FiniteSemigroup parse_semigroup(std::string_view in) {
    Json const  doc  = parse(in);
    Table       t    = table(field(doc, "add"), "add");
    std::string name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "";
    if (doc.contains("order")) {
      auto const& o = doc["order"];
      if (!o.is_number_integer() || o.get<long long>() != static_cast<long long>(t.order())) {
        throw PreconditionError("\"order\" does not match the add table");
      }
    }
    return FiniteSemigroup(std::move(t), std::move(name));
  }

  std::string dump_map(ElementMap const& m) {
    Json j;
    j["map"] = m.images();
    return text(j);
  }

  ElementMap parse_map(std::string_view in, std::size_t target_order) {
    Json const doc = parse(in);
    return ElementMap(target_order, ints(field(doc, "map"), "map"));
  }

  std::string dump_maps(std::vector<ElementMap> const& maps) {
    Json j = Json::array();
    for (auto const& m : maps) {
      j.push_back(m.images());
    }
    return text(j);
  }

  std::string dump_table(Table const& t) {
    return text(rows(t));
  }

  std::string dump_brace(DualWeakLeftBrace const& b) {
    Json j;
    j["add"]  = rows(b.additive().table());
    j["circ"] = rows(b.multiplicative().table());
    return text(j);
  }

  BraceDoc parse_brace(std::string_view in) {
    Json const doc = parse(in);
    BraceDoc   out{table(field(doc, "add"), "add"), table(field(doc, "circ"), "circ")};
    same_order(out.add, out.circ, "brace");
    return out;
  }

  std::string dump_ybe(YBEMap const& r) {
    Json j;
    j["out1"] = rows(r.out1);
    j["out2"] = rows(r.out2);
    return text(j);
  }

  YBEMap parse_ybe(std::string_view in) {
    Json const doc = parse(in);
    YBEMap     out{table(field(doc, "out1"), "out1"), table(field(doc, "out2"), "out2")};
    same_order(out.out1, out.out2, "YBE");
    return out;
  }

  std::string dump_post(PostTable const& p) {
    Json j;
    j["add"] = rows(p.additive().table());
    j["rhd"] = rows(p.rhd_table());
    return text(j);
  }

  PostDoc parse_post(std::string_view in) {
    Json const doc = parse(in);
    PostDoc    out{table(field(doc, "add"), "add"), table(field(doc, "rhd"), "rhd")};
    same_order(out.add, out.rhd, "post");
    return out;
  }

  std::string dump_relative(RelativeRBSystem const& sys) {
    Json j;
    j["T"]   = rows(sys.T().table());
    j["S"]   = rows(sys.S().table());
    Json phi = Json::array();
    for (auto const& m : sys.phi().maps()) {
      phi.push_back(m.images());
    }
    j["phi"] = std::move(phi);
    j["R"]   = sys.R().images();
    return text(j);
  }

  RelativeDoc parse_relative(std::string_view in) {
    Json const  doc = parse(in);
    RelativeDoc out;
    out.t = table(field(doc, "T"), "T");
    out.s = table(field(doc, "S"), "S");
    for (auto const& m : field(doc, "phi")) {
      out.phi.emplace_back(out.t.order(), ints(m, "phi"));
      if (out.phi.back().source_order() != out.t.order()) {
        throw PreconditionError("each phi entry must have one image per element of T");
      }
    }
    if (out.phi.size() != out.s.order()) {
      throw PreconditionError("phi must have one entry per element of S");
    }
    out.r = ElementMap(out.s.order(), ints(field(doc, "R"), "R"));
    if (out.r.source_order() != out.t.order()) {
      throw PreconditionError("R must have one image per element of T");
    }
    return out;
  }

  std::string dump_braided(BraidedTable const& b) {
    Json j;
    j["circ"]  = rows(b.circ().table());
    j["left"]  = rows(b.left_table());
    j["right"] = rows(b.right_table());
    return text(j);
  }

  BraidedDoc parse_braided(std::string_view in) {
    Json const doc = parse(in);
    BraidedDoc out{table(field(doc, "circ"), "circ"), table(field(doc, "left"), "left"),
                   table(field(doc, "right"), "right")};
    same_order(out.circ, out.left, "braided");
    same_order(out.circ, out.right, "braided");
    return out;
  }

  std::string dump_semidirect(LambdaSemidirectProduct const& m) {
    Json j;
    Json pairs = Json::array();
    for (auto [x, a] : m.pairs) {
      pairs.push_back({x, a});
    }
    j["pairs"] = std::move(pairs);
    j["add"]   = rows(m.semigroup.table());
    j["neg"]   = m.negation;
    return text(j);
  }

  std::string dump_verdict(Verdict const& v) {
    Json j;
    j["ok"]      = v.ok;
    j["axiom"]   = v.axiom;
    j["witness"] = v.witness;
    return text(j);
  }

}  // namespace cliffy::json
