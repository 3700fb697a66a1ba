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

#include "cliffy/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "cliffy/braided.hpp"
#include "cliffy/catalog.hpp"
#include "cliffy/json_io.hpp"
#include "cliffy/morphism.hpp"
#include "cliffy/relative.hpp"
#include "cliffy/rota_baxter.hpp"

namespace cliffy::cli {

  namespace {

    // A usage problem found after parsing (missing input, bad list, ...).
    struct Usage : std::runtime_error {
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::string kind;
      std::string semigroup;
      std::string input;
      std::string map;
      std::string map_file;
      std::string format = "text";
      std::string from;
      std::string to;
      std::string pair;
      std::string method;
      std::string members;
      std::string s_members;
      std::string elements;
      std::string action = "conjugation";
      std::string automorphism;
      std::string u, v, t;
      std::string key;
      int         weight = 1;
      unsigned    n      = 2;
      bool        strong = false;
    };

    std::string slurp(std::string const& path) {
      std::ostringstream ss;
      if (path == "-") {
        ss << std::cin.rdbuf();
        return ss.str();
      }
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw Usage("cannot read '" + path + "'");
      }
      ss << in.rdbuf();
      return ss.str();
    }

    std::vector<Elem> parse_list(std::string const& s, char const* what) {
      std::vector<Elem> out;
      std::stringstream ss(s);
      std::string       tok;
      while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
        if (tok.empty() || tok.size() > 9 || tok.find_first_not_of("0123456789") != std::string::npos) {
          throw Usage(std::string("malformed ") + what + " '" + s + "'");
        }
        out.push_back(static_cast<Elem>(std::stoul(tok)));
      }
      return out;
    }

    std::string join(std::vector<Elem> const& v) {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
      }
      return s;
    }

    Weight weight_of(int w) {
      if (w == 1) {
        return Weight::plus;
      }
      if (w == -1) {
        return Weight::minus;
      }
      throw Usage("--weight must be 1 or -1");
    }

    template <typename T>
    T const& need(Checked<T> const& c) {
      return c.value();  // VerificationError reaches run() and becomes exit 1
    }

    FiniteSemigroup load_semigroup(Options const& o) {
      if (!o.semigroup.empty() && !o.input.empty()) {
        throw Usage("give either --semigroup or --input, not both");
      }
      if (!o.semigroup.empty()) {
        return catalog_entry(o.semigroup).semigroup;
      }
      if (!o.input.empty()) {
        return json::parse_semigroup(slurp(o.input));
      }
      throw Usage("a semigroup is required (--semigroup <key> or --input <file>)");
    }

    CliffordTable load_clifford(Options const& o) {
      return CliffordTable::from(load_semigroup(o));
    }

    ElementMap load_map(Options const& o, std::size_t target) {
      if (!o.map.empty() && !o.map_file.empty()) {
        throw Usage("give either --map or --map-file, not both");
      }
      if (!o.map.empty()) {
        return ElementMap(target, parse_list(o.map, "--map"));
      }
      if (!o.map_file.empty()) {
        return json::parse_map(slurp(o.map_file), target);
      }
      throw Usage("a map is required (--map i0,i1,... or --map-file <file>)");
    }

    std::string need_input(Options const& o) {
      if (o.input.empty()) {
        throw Usage("--input <file> is required for this structure kind");
      }
      return slurp(o.input);
    }

    RBOperator load_rb(Options const& o) {
      CliffordTable ct = load_clifford(o);
      return need(check_rb(ct, load_map(o, ct.order()), weight_of(o.weight)));
    }

    DualWeakLeftBrace load_brace(Options const& o) {
      auto d = json::parse_brace(need_input(o));
      return need(check_brace(d.add, d.circ));
    }

    PostTable load_post(Options const& o) {
      auto d = json::parse_post(need_input(o));
      return need(check_post(FiniteSemigroup(d.add), d.rhd));
    }

    Checked<RelativeRBSystem> check_relative_doc(json::RelativeDoc const& d) {
      return check_relative(CliffordTable::from(d.t), CliffordTable::from(d.s), d.phi, d.r);
    }

    RelativeRBSystem load_relative(Options const& o) {
      return need(check_relative_doc(json::parse_relative(need_input(o))));
    }

    BraidedTable load_braided(Options const& o) {
      auto d = json::parse_braided(need_input(o));
      return need(check_braided(d.circ, d.left, d.right));
    }

    Action load_action(Options const& o) {
      if (!o.input.empty()) {
        auto d = json::parse_relative(slurp(o.input));
        return need(check_action(CliffordTable::from(d.s), CliffordTable::from(d.t), d.phi));
      }
      CliffordTable ct = load_clifford(o);
      if (o.action == "trivial") {
        return Action::trivial(ct, ct);
      }
      return Action::conjugation(ct);
    }

    void emit_map(std::ostream& out, Options const& o, ElementMap const& m) {
      if (o.format == "json") {
        out << json::dump_map(m);
      } else {
        out << join(m.images()) << "\n";
      }
    }

    void emit_ok(std::ostream& out, Options const& o, std::string const& detail) {
      if (o.format == "json") {
        out << json::dump_verdict(Verdict::pass());
      } else {
        out << "OK" << (detail.empty() ? "" : " " + detail) << "\n";
      }
    }

    std::string strong_flag(bool s) {
      return std::string("strong=") + (s ? "true" : "false");
    }

    int do_check(Options const& o, std::ostream& out) {
      if (o.kind == "semigroup") {
        Classification c = classify(load_semigroup(o));
        if (c.kind != SemigroupKind::clifford) {
          throw VerificationError(c.witness);
        }
        emit_ok(out, o, "kind=clifford");
      } else if (o.kind == "rb") {
        emit_ok(out, o, strong_flag(load_rb(o).strong()));
      } else if (o.kind == "brace") {
        load_brace(o);
        emit_ok(out, o, "");
      } else if (o.kind == "post") {
        emit_ok(out, o, strong_flag(load_post(o).strong()));
      } else if (o.kind == "relative") {
        emit_ok(out, o, strong_flag(load_relative(o).strong()));
      } else {
        load_braided(o);
        emit_ok(out, o, "");
      }
      return ok;
    }

    int do_enumerate(Options const& o, std::ostream& out) {
      Budget const            budget = Budget::from_env();
      std::vector<ElementMap> maps;
      if (o.kind == "rb") {
        for (auto const& r : enumerate_rb(load_clifford(o), weight_of(o.weight), o.strong, budget)) {
          maps.push_back(r.map());
        }
      } else if (o.kind == "relative") {
        for (auto const& s : enumerate_relative(load_action(o), o.strong, budget)) {
          maps.push_back(s.R());
        }
      } else {
        // One post document per line.
        for (auto const& p : enumerate_post(load_clifford(o), o.strong, budget)) {
          out << json::dump_post(p);
        }
        return ok;
      }
      if (o.format == "json") {
        out << json::dump_maps(maps);
      } else {
        for (auto const& m : maps) {
          out << join(m.images()) << "\n";
        }
      }
      return ok;
    }

    int do_construct(Options const& o, std::ostream& out) {
      std::string const& m = o.method;
      if (m == "n-multiple") {
        emit_map(out, o, need(construct::n_multiple(load_clifford(o), o.n)).map());
      } else if (m == "conjugation" || m == "translation") {
        auto          e  = parse_list(o.elements, "--elements");
        CliffordTable ct = load_clifford(o);
        for (Elem x : e) {
          if (x >= ct.order()) {
            throw Usage("--elements index out of range");
          }
        }
        if (m == "conjugation") {
          if (e.size() != 1) {
            throw Usage("conjugation needs --elements b");
          }
          emit_map(out, o, need(construct::conjugation(ct, e[0])).map());
        } else {
          if (e.size() != 2) {
            throw Usage("translation needs --elements a,b");
          }
          emit_map(out, o, need(construct::translation(ct, e[0], e[1])).map());
        }
      } else if (m == "exact-factorization" || m == "uvt") {
        CliffordTable ct = load_clifford(o);
        auto          u  = parse_list(o.u, "--u");
        auto          v  = parse_list(o.v, "--v");
        if (m == "exact-factorization") {
          emit_map(out, o, need(construct::exact_factorization(ct, u, v)).map());
        } else {
          auto t = parse_list(o.t, "--t");
          emit_map(out, o, need(construct::uvt(ct, u, v, t, load_map(o, v.size()))).map());
        }
      } else {
        RBOperator const r = load_rb(o);
        if (m == "tilde") {
          emit_map(out, o, construct::tilde(r).map());
        } else if (m == "phi-twist") {
          emit_map(out, o, need(construct::phi_twist(r, ElementMap(r.carrier().order(),
                                                                    parse_list(o.automorphism, "--automorphism"))))
                               .map());
        } else {
          if ((m == "psi") != (r.weight() == Weight::minus)) {
            throw Usage(m + " expects a weight " + (m == "psi" ? "-1" : "1") + " operator");
          }
          if (m == "weight-flip") {
            emit_map(out, o, construct::weight_flip_neg(r).map());
          } else if (m == "phi") {
            emit_map(out, o, construct::weight_phi(r).map());
          } else {
            emit_map(out, o, construct::weight_psi(r).map());
          }
        }
      }
      return ok;
    }

    int do_convert(Options const& o, std::ostream& out) {
      std::string const route = o.from + "->" + o.to;
      if (route == "rb->brace") {
        out << json::dump_brace(circ_r(load_rb(o)).brace);
      } else if (route == "post->brace") {
        out << json::dump_brace(post_to_brace(load_post(o)));
      } else if (route == "brace->post") {
        out << json::dump_post(brace_to_post(load_brace(o)));
      } else if (route == "post->braided") {
        out << json::dump_braided(post_to_braided(load_post(o)));
      } else if (route == "braided->post") {
        out << json::dump_post(braided_to_post(load_braided(o)));
      } else if (route == "post->relative") {
        out << json::dump_relative(post_to_relative(load_post(o)));
      } else if (route == "relative->post") {
        out << json::dump_post(relative_to_post(load_relative(o)));
      } else {
        throw Usage("no conversion from " + o.from + " to " + o.to);
      }
      return ok;
    }

    int do_roundtrip(Options const& o, std::ostream& out) {
      Verdict v;
      if (o.pair == "post-brace") {
        v = roundtrip_gf(load_post(o));
      } else if (o.pair == "brace-post") {
        v = roundtrip_fg(load_brace(o));
      } else if (o.pair == "post-braided") {
        v = roundtrip_py(load_post(o));
      } else if (o.pair == "braided-post") {
        v = roundtrip_yp(load_braided(o));
      } else if (o.pair == "post-relative") {
        v = roundtrip_relative_fg(load_post(o));
      } else {
        v = roundtrip_relative_gf(load_relative(o));
      }
      if (!v) {
        throw VerificationError(v);
      }
      emit_ok(out, o, "");
      return ok;
    }

    int do_ybe(Options const& o, std::ostream& out) {
      YBEMap r;
      if (o.from == "brace") {
        r = ybe_from_brace(load_brace(o));
      } else if (o.from == "post") {
        r = ybe_from_post(load_post(o));
      } else if (o.from == "relative") {
        r = ybe_from_relative(load_relative(o));
      } else if (o.from == "braided") {
        r = sigma_as_ybe(load_braided(o));
      } else {
        RBOperator const op = load_rb(o);
        if (op.weight() != Weight::plus) {
          throw Usage("ybe --from rb expects a weight 1 operator");
        }
        r = ybe_from_brace(circ_r(op).brace);
      }
      out << json::dump_ybe(r);
      return ok;
    }

    int do_quotient(Options const& o, std::ostream& out) {
      auto m = parse_list(o.members, "--members");
      if (o.kind == "semigroup") {
        CliffordTable ct = load_clifford(o);
        for (Elem x : m) {
          if (x >= ct.order()) {
            throw Usage("--members index out of range");
          }
        }
        if (Verdict v = check_normal(ct, m); !v) {
          throw VerificationError(v);
        }
        Quotient q = quotient(NormalSubsemigroup(ct, m));
        out << json::dump_semigroup(q.table.semigroup());
      } else if (o.kind == "brace") {
        DualWeakLeftBrace b = load_brace(o);
        for (Elem x : m) {
          if (x >= b.order()) {
            throw Usage("--members index out of range");
          }
        }
        if (Verdict v = check_ideal(b, m); !v) {
          throw VerificationError(v);
        }
        out << json::dump_brace(quotient_brace(b, m).brace);
      } else {
        auto q = ideal_and_quotient(load_relative(o), m, parse_list(o.s_members, "--s-members"));
        if (!q->brace_correspondence) {
          throw VerificationError(q->brace_correspondence);
        }
        out << json::dump_relative(q->system);
      }
      return ok;
    }

    int do_semidirect(Options const& o, std::ostream& out) {
      out << json::dump_semidirect(lambda_semidirect(load_action(o)));
      return ok;
    }

    int do_graph_test(Options const& o, std::ostream& out) {
      auto        d      = json::parse_relative(need_input(o));
      Action      action = need(check_action(CliffordTable::from(d.s), CliffordTable::from(d.t), d.phi));
      GraphReport rep    = graph_characterization(action, d.r);
      out << "OK axioms=" << rep.axioms.str() << " graph=" << rep.graph.str() << "\n";
      return ok;
    }

    int do_catalog_list(std::ostream& out) {
      for (auto const& e : catalog()) {
        out << e.key << " order=" << e.semigroup.order() << " " << e.description << "\n";
      }
      return ok;
    }

    int do_catalog_show(Options const& o, std::ostream& out) {
      CatalogEntry const& e = catalog_entry(o.key);
      if (o.format == "json") {
        out << json::dump_semigroup(e.semigroup);
        return ok;
      }
      FiniteSemigroup const& s = e.semigroup;
      out << e.key << ": " << e.description << "\n";
      for (Elem a = 0; a < s.order(); ++a) {
        for (Elem b = 0; b < s.order(); ++b) {
          out << (b ? " " : "") << s.label(s.add(a, b));
        }
        out << "\n";
      }
      return ok;
    }

    // Hyphenated shorthands expand to a verb plus fixed flags.
    std::vector<std::string> expand_alias(std::vector<std::string> args) {
      static std::map<std::string, std::vector<std::string>> const aliases = {
          {"check-rb", {"check", "--kind", "rb"}},
          {"enumerate-rb", {"enumerate", "--kind", "rb"}},
          {"construct-rb", {"construct", "--kind", "rb"}},
          {"check-brace", {"check", "--kind", "brace"}},
          {"check-post", {"check", "--kind", "post"}},
          {"check-relative", {"check", "--kind", "relative"}},
          {"check-braided", {"check", "--kind", "braided"}},
          {"post-to-brace", {"convert", "--from", "post", "--to", "brace"}},
          {"brace-to-post", {"convert", "--from", "brace", "--to", "post"}},
          {"post-to-braided", {"convert", "--from", "post", "--to", "braided"}},
          {"braided-to-post", {"convert", "--from", "braided", "--to", "post"}},
          {"post-to-relative", {"convert", "--from", "post", "--to", "relative"}},
          {"relative-to-post", {"convert", "--from", "relative", "--to", "post"}},
          {"quotient-relative", {"quotient", "--kind", "relative"}},
      };
      if (args.empty()) {
        return args;
      }
      auto it = aliases.find(args.front());
      if (it == aliases.end()) {
        return args;
      }
      std::vector<std::string> out = it->second;
      out.insert(out.end(), args.begin() + 1, args.end());
      return out;
    }

    // `--weight -1` would otherwise be read as a flag.
    std::vector<std::string> glue_negative_weight(std::vector<std::string> args) {
      for (std::size_t i = 0; i + 1 < args.size(); ++i) {
        if (args[i] == "--weight" && args[i + 1] == "-1") {
          args[i] = "--weight=-1";
          args.erase(args.begin() + static_cast<std::ptrdiff_t>(i) + 1);
        }
      }
      return args;
    }

  }  // namespace

  int run(std::vector<std::string> const& raw, std::ostream& out, std::ostream& err) {
    Options  o;
    CLI::App app{"Finite Clifford semigroup structures and Yang-Baxter solutions", "cliffy"};
    app.require_subcommand(1);
    app.footer(
        "Shorthands: check-rb, check-brace, check-post, check-relative, check-braided, enumerate-rb,\n"
        "construct-rb, post-to-brace, brace-to-post, post-to-braided, braided-to-post, post-to-relative,\n"
        "relative-to-post, quotient-relative.\n"
        "Exit status: 0 ok, 1 verification failure (FAIL line on stdout), 2 usage or I/O error.");

    auto add_semigroup = [&](CLI::App* c) {
      c->add_option("--semigroup", o.semigroup, "catalog key");
      c->add_option("--input", o.input, "input JSON document ('-' for stdin)");
    };
    auto add_format = [&](CLI::App* c) {
      c->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
    };
    auto add_map = [&](CLI::App* c) {
      c->add_option("--map", o.map, "inline map i0,i1,...");
      c->add_option("--map-file", o.map_file, "map JSON document");
      c->add_option("--weight", o.weight, "operator weight, 1 or -1");
    };

    auto* check = app.add_subcommand("check", "validate a structure");
    check->add_option("--kind", o.kind)
        ->required()
        ->check(CLI::IsMember({"semigroup", "rb", "brace", "post", "relative", "braided"}));
    add_semigroup(check);
    add_map(check);
    add_format(check);

    auto* enumerate = app.add_subcommand("enumerate", "list every structure of a kind");
    enumerate->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"rb", "post", "relative"}));
    enumerate->add_option("--weight", o.weight, "operator weight, 1 or -1");
    enumerate->add_flag("--strong", o.strong, "strong structures only");
    enumerate->add_option("--action", o.action, "action for relative enumeration")
        ->check(CLI::IsMember({"conjugation", "trivial"}));
    add_semigroup(enumerate);
    add_format(enumerate);

    auto* build = app.add_subcommand("construct", "build an operator from a recipe");
    build->add_option("--kind", o.kind)->check(CLI::IsMember({"rb"}));
    build->add_option("--method", o.method)
        ->required()
        ->check(CLI::IsMember({"tilde", "phi-twist", "n-multiple", "conjugation", "translation", "weight-flip",
                               "phi", "psi", "exact-factorization", "uvt"}));
    build->add_option("--n", o.n, "multiple for n-multiple");
    build->add_option("--elements", o.elements, "element parameters a[,b]");
    build->add_option("--automorphism", o.automorphism, "automorphism images for phi-twist");
    build->add_option("--u", o.u, "members of U");
    build->add_option("--v", o.v, "members of V");
    build->add_option("--t", o.t, "members of T");
    add_semigroup(build);
    add_map(build);
    add_format(build);

    std::vector<std::string> const kinds{"rb", "brace", "post", "relative", "braided"};
    auto* convert = app.add_subcommand("convert", "translate between structure kinds");
    convert->add_option("--from", o.from)->required()->check(CLI::IsMember(kinds));
    convert->add_option("--to", o.to)->required()->check(CLI::IsMember(kinds));
    add_semigroup(convert);
    add_map(convert);

    auto* roundtrip = app.add_subcommand("roundtrip", "verify a functor round trip");
    roundtrip->add_option("--pair", o.pair)
        ->required()
        ->check(CLI::IsMember(
            {"post-brace", "brace-post", "post-braided", "braided-post", "post-relative", "relative-post"}));
    roundtrip->add_option("--input", o.input)->required();
    add_format(roundtrip);

    auto* ybe = app.add_subcommand("ybe", "emit the induced Yang-Baxter map");
    ybe->add_option("--from", o.from)->required()->check(CLI::IsMember(kinds));
    add_semigroup(ybe);
    add_map(ybe);

    auto* quot = app.add_subcommand("quotient", "quotient by a normal subsemigroup or ideal");
    quot->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"semigroup", "brace", "relative"}));
    quot->add_option("--members", o.members, "members of M")->required();
    quot->add_option("--s-members", o.s_members, "members of N (relative only)");
    add_semigroup(quot);

    auto* semidirect = app.add_subcommand("semidirect", "lambda-semidirect product M(S,T,phi)");
    semidirect->add_option("--action", o.action)->check(CLI::IsMember({"conjugation", "trivial"}));
    add_semigroup(semidirect);

    auto* graph = app.add_subcommand("graph-test", "compare the axioms with the graph test");
    graph->add_option("--input", o.input)->required();

    auto* cat  = app.add_subcommand("catalog", "built-in fixtures");
    cat->require_subcommand(1);
    auto* list = cat->add_subcommand("list", "list catalog keys");
    auto* show = cat->add_subcommand("show", "print one catalog entry");
    show->add_option("key", o.key)->required();
    add_format(show);

    std::vector<std::string> args = glue_negative_weight(expand_alias(raw));
    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::CallForAllHelp const& e) {
      app.exit(e, out, err);
      return ok;
    } catch (CLI::ParseError const& e) {
      app.exit(e, out, err);
      return usage_error;
    }

    try {
      if (check->parsed()) {
        return do_check(o, out);
      }
      if (enumerate->parsed()) {
        return do_enumerate(o, out);
      }
      if (build->parsed()) {
        return do_construct(o, out);
      }
      if (convert->parsed()) {
        return do_convert(o, out);
      }
      if (roundtrip->parsed()) {
        return do_roundtrip(o, out);
      }
      if (ybe->parsed()) {
        return do_ybe(o, out);
      }
      if (quot->parsed()) {
        return do_quotient(o, out);
      }
      if (semidirect->parsed()) {
        return do_semidirect(o, out);
      }
      if (graph->parsed()) {
        return do_graph_test(o, out);
      }
      if (list->parsed()) {
        return do_catalog_list(out);
      }
      if (show->parsed()) {
        return do_catalog_show(o, out);
      }
    } catch (VerificationError const& e) {
      out << e.verdict().str() << "\n";
      return verification_failure;
    } catch (InvariantViolation const& e) {
      out << e.verdict().str() << "\n";
      return verification_failure;
    } catch (Usage const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    } catch (Error const& e) {
      err << "error: " << e.what() << "\n";
      return usage_error;
    }
    err << "error: no command\n";
    return usage_error;
  }

}  // namespace cliffy::cli
