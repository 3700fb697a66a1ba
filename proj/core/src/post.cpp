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

#include "cliffy/post.hpp"

#include "cliffy/morphism.hpp"

namespace cliffy {

  char const* to_string(PostAxiom a) noexcept {
    switch (a) {
      case PostAxiom::p1:
        return "P1";
      case PostAxiom::p2:
        return "P2";
      case PostAxiom::p3:
        return "P3";
      case PostAxiom::p4:
        return "P4";
      case PostAxiom::p5:
        return "P5";
    }
    return "?";
  }

  PostTable::PostTable(CliffordTable add, Table rhd, bool strong, Table inv)
      : _add(std::move(add)), _rhd(std::move(rhd)), _strong(strong), _restricted_inverse(std::move(inv)) {}

  Verdict post_axiom_violation(CliffordTable const& ct, Table const& rhd, PostAxiom axiom) {
    std::size_t const n = ct.order();
    if (rhd.order() != n) {
      throw PreconditionError("rhd table order differs from the additive table");
    }
    char const* name = to_string(axiom);
    switch (axiom) {
      case PostAxiom::p1:
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
              if (rhd(a, ct.add(b, c)) != ct.add(rhd(a, b), rhd(a, c))) {
                return Verdict::fail(name, {a, b, c});
              }
            }
          }
        }
        break;
      case PostAxiom::p2:
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            for (Elem c = 0; c < n; ++c) {
              if (rhd(ct.add(a, rhd(a, b)), c) != rhd(a, rhd(b, c))) {
                return Verdict::fail(name, {a, b, c});
              }
            }
          }
        }
        break;
      case PostAxiom::p3:
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            Elem const z = ct.zero(b);
            if (ct.add(a, rhd(a, z)) != ct.add(z, rhd(z, a))) {
              return Verdict::fail(name, {a, b});
            }
          }
        }
        break;
      case PostAxiom::p4:
        for (Elem a = 0; a < n; ++a) {
          auto const&       h = ct.hclass(a);
          std::vector<bool> hit(n, false);
          for (Elem b : h) {
            Elem const x = rhd(a, b);
            if (ct.zero(x) != ct.zero(a)) {
              return Verdict::fail(name, {a, b});
            }
            hit[x] = true;
            for (Elem c : h) {
              if (rhd(a, ct.add(b, c)) != ct.add(x, rhd(a, c))) {
                return Verdict::fail(name, {a, b});
              }
            }
          }
          for (Elem b : h) {
            if (!hit[b]) {
              return Verdict::fail(name, {a, b});
            }
          }
        }
        break;
      case PostAxiom::p5:
        for (Elem a = 0; a < n; ++a) {
          for (Elem b = 0; b < n; ++b) {
            if (ct.add(ct.zero(a), rhd(a, b)) != rhd(a, b)) {
              return Verdict::fail(name, {a, b});
            }
          }
        }
        break;
    }
    return Verdict::pass();
  }

  Checked<PostTable> check_post(CliffordTable const& ct, Table const& rhd) {
    using detail::require;
    for (PostAxiom ax : {PostAxiom::p1, PostAxiom::p2, PostAxiom::p3, PostAxiom::p4}) {
      if (Verdict v = post_axiom_violation(ct, rhd, ax); !v) {
        return Checked<PostTable>::fail(std::move(v));
      }
    }
    bool const        strong = post_axiom_violation(ct, rhd, PostAxiom::p5).ok;
    std::size_t const n      = ct.order();
    Table             inv(n);
    for (Elem a = 0; a < n; ++a) {
      Elem const z = ct.zero(a);
      require(rhd(a, z) == z, "post-fixes-zero", {a});
      require(rhd(z, z) == z, "post-zero-zero", {a});
      require(rhd(z, a) == a, "post-zero-acts-trivially", {a});
      for (Elem b : ct.hclass(a)) {
        inv.at(a, rhd(a, b)) = b;
      }
    }
    diagnostics::note_identity_suite();
    return Checked<PostTable>::pass(PostTable(ct, rhd, strong, std::move(inv)));
  }

  Checked<PostTable> check_post(FiniteSemigroup const& add, Table const& rhd) {
    Classification c = classify(add);
    if (c.kind != SemigroupKind::clifford) {
      Verdict v = c.witness;
      v.axiom   = "add-" + v.axiom;
      return Checked<PostTable>::fail(std::move(v));
    }
    return check_post(*c.clifford, rhd);
  }

  CliffordTable sub_adjacent(PostTable const& p) {
    using detail::require;
    CliffordTable const& ct = p.additive();
    std::size_t const    n  = ct.order();
    CliffordTable const  circ =
        CliffordTable::from(FiniteSemigroup(Table::generate(n, [&](Elem a, Elem b) { return ct.add(a, p.rhd(a, b)); }),
                                            ct.name() + "-circ"));
    for (Elem a = 0; a < n; ++a) {
      require(circ.neg(a) == p.restricted_inverse(a, ct.neg(a)), "subadjacent-inverse", {a});
      require(circ.add(a, circ.neg(a)) == ct.zero(a), "subadjacent-zero", {a});
      require(ct.is_idempotent(a) == circ.is_idempotent(a), "subadjacent-idempotents", {a});
      for (Elem b = 0; b < n; ++b) {
        for (Elem c = 0; c < n; ++c) {
          require(p.rhd(circ.add(a, b), c) == p.rhd(a, p.rhd(b, c)), "subadjacent-action", {a, b, c});
        }
      }
    }
    diagnostics::note_identity_suite();
    return circ;
  }

  DualWeakLeftBrace post_to_brace(PostTable const& p) {
    auto b = check_brace(p.additive().semigroup(), sub_adjacent(p).semigroup());
    detail::require(b.ok(), "post-to-brace", b.verdict().witness);
    return b.value();
  }

  PostTable brace_to_post(DualWeakLeftBrace const& b) {
    Table rhd = Table::generate(b.order(), [&](Elem x, Elem y) { return b.lambda(x, y); });
    auto  p   = check_post(b.additive(), rhd);
    detail::require(p.ok(), "brace-to-post", p.verdict().witness);
    detail::require(p->strong(), "brace-to-post-strong", {});
    return p.value();
  }

  Verdict roundtrip_gf(PostTable const& p) {
    if (!p.strong()) {
      Verdict why = post_axiom_violation(p.additive(), p.rhd_table(), PostAxiom::p5);
      throw PreconditionError("roundtrip_gf requires a strong post structure: " + why.str());
    }
    PostTable const back = brace_to_post(post_to_brace(p));
    for (Elem a = 0; a < p.order(); ++a) {
      for (Elem b = 0; b < p.order(); ++b) {
        if (back.rhd(a, b) != p.rhd(a, b)) {
          return Verdict::fail("gf-identity", {a, b});
        }
      }
    }
    return Verdict::pass();
  }

  Verdict roundtrip_fg(DualWeakLeftBrace const& b) {
    DualWeakLeftBrace const back = post_to_brace(brace_to_post(b));
    for (Elem x = 0; x < b.order(); ++x) {
      for (Elem y = 0; y < b.order(); ++y) {
        if (back.circ(x, y) != b.circ(x, y) || back.add(x, y) != b.add(x, y)) {
          return Verdict::fail("fg-identity", {x, y});
        }
      }
    }
    return Verdict::pass();
  }

  PostSolution ybe_from_post_detailed(PostTable const& p) {
    CliffordTable const& ct   = p.additive();
    CliffordTable const  circ = sub_adjacent(p);
    std::size_t const    n    = ct.order();
    PostSolution         out{YBEMap{Table(n), Table(n)}, Verdict::pass()};
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const ab         = p.rhd(a, b);
        out.map.out1.at(a, b) = ct.add(ct.zero(a), ab);
        out.map.out2.at(a, b) = circ.add(circ.add(circ.neg(ab), a), b);
        Elem const u          = p.restricted_inverse(ab, ct.neg(ab));
        Elem const second     = ct.add(u, p.rhd(u, ct.add(a, ab)));
        if (out.forms_agree.ok && second != out.map.out2(a, b)) {
          out.forms_agree = Verdict::fail("solution-forms", {a, b});
        }
      }
    }
    Verdict v = check_yang_baxter(out.map);
    detail::require(v.ok, "post-solution-braid", v.witness);
    return out;
  }

  YBEMap ybe_from_post(PostTable const& p) {
    return ybe_from_post_detailed(p).map;
  }

  Verdict is_post_hom(ElementMap const& psi, PostTable const& src, PostTable const& dst) {
    if (Verdict v = is_homomorphism(psi, src.additive().semigroup(), dst.additive().semigroup()); !v) {
      if (v.axiom == "homomorphism") {
        v.axiom = "additive";
      }
      return v;
    }
    for (Elem a = 0; a < src.order(); ++a) {
      for (Elem b = 0; b < src.order(); ++b) {
        if (psi(src.rhd(a, b)) != dst.rhd(psi(a), psi(b))) {
          return Verdict::fail("rhd", {a, b});
        }
      }
    }
    return Verdict::pass();
  }

  std::vector<PostTable> enumerate_post(CliffordTable const& ct, bool strong_only, Budget const& budget) {
    budget.require_order(ct.order(), "enumerate_post");
    std::size_t const              n = ct.order();
    std::vector<std::vector<Elem>> candidates(n * n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        auto& dom = candidates[a * n + b];
        if (b == ct.zero(a)) {
          dom = {b};  // a |> a^0 = a^0
          continue;
        }
        if (a == ct.zero(b)) {
          dom = {b};  // a^0 |> a = a
          continue;
        }
        for (Elem x = 0; x < n; ++x) {
          if (ct.zero(b) == ct.zero(a) && ct.zero(x) != ct.zero(a)) {
            continue;  // P4 keeps H_a inside H_a
          }
          if (strong_only && ct.add(ct.zero(a), x) != x) {
            continue;
          }
          dom.push_back(x);
        }
      }
    }
    auto accept = [&](std::vector<Elem> const& v, std::size_t k) {
      auto cell = [n](Elem a, Elem b) { return static_cast<std::size_t>(a) * n + b; };
      auto rhd  = [&](Elem a, Elem b) { return v[cell(a, b)]; };
      auto known = [k](std::size_t c) { return c <= k; };
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          std::size_t const ab = cell(a, b);
          if (!known(ab)) {
            continue;
          }
          // P3 pairs (a, b^0) with (b^0, a).
          {
            Elem const        z  = ct.zero(b);
            std::size_t const c1 = cell(a, z), c2 = cell(z, a);
            if (known(c1) && known(c2) && (c1 == k || c2 == k)
                && ct.add(a, rhd(a, z)) != ct.add(z, rhd(z, a))) {
              return false;
            }
          }
          for (Elem c = 0; c < n; ++c) {
            std::size_t const ac = cell(a, c), abc = cell(a, ct.add(b, c));
            if (known(ac) && known(abc) && (ab == k || ac == k || abc == k)
                && rhd(a, ct.add(b, c)) != ct.add(rhd(a, b), rhd(a, c))) {
              return false;
            }
            std::size_t const lhs = cell(ct.add(a, rhd(a, b)), c);
            std::size_t const bc  = cell(b, c);
            if (!known(lhs) || !known(bc)) {
              continue;
            }
            std::size_t const rhs = cell(a, rhd(b, c));
            if (known(rhs) && (ab == k || lhs == k || bc == k || rhs == k) && v[lhs] != v[rhs]) {
              return false;
            }
          }
        }
      }
      return true;
    };
    std::vector<PostTable> out;
    for (auto const& cells : detail::backtrack(candidates, accept, budget)) {
      Table t(n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          t.at(a, b) = cells[a * n + b];
        }
      }
      auto p = check_post(ct, t);
      if (p) {  // P4 bijectivity is only decided on complete tables
        out.push_back(p.value());
      }
    }
    return out;
  }

}  // namespace cliffy
