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

#include <algorithm>

#include "cliffy/morphism.hpp"
#include "cliffy/rota_baxter.hpp"

namespace cliffy {

  char const* to_string(ItemStatus s) noexcept {
    switch (s) {
      case ItemStatus::verified:
        return "verified";
      case ItemStatus::failed:
        return "failed";
      case ItemStatus::not_applicable:
        return "not-applicable";
    }
    return "?";
  }

  bool StructureReport::all_hold() const {
    return std::none_of(items.begin(), items.end(), [](Item const& i) { return i.status == ItemStatus::failed; });
  }

  namespace {

    Table circ_table(RBOperator const& r) {
      CliffordTable const& ct = r.carrier();
      return Table::generate(ct.order(), [&](Elem a, Elem b) { return ct.sum({a, r(a), b, ct.neg(r(a))}); });
    }

    std::vector<Elem> collect(std::size_t n, auto&& pred) {
      std::vector<Elem> out;
      for (Elem a = 0; a < n; ++a) {
        if (pred(a)) {
          out.push_back(a);
        }
      }
      return out;
    }

    std::vector<Elem> image(std::size_t n, auto&& f) {
      std::vector<Elem> out;
      for (Elem a = 0; a < n; ++a) {
        out.push_back(f(a));
      }
      std::sort(out.begin(), out.end());
      out.erase(std::unique(out.begin(), out.end()), out.end());
      return out;
    }

    // Translates ambient members into the local indexing of `sub`; returns
    // the first member outside `sub` as a failure.
    Checked<std::vector<Elem>> localize(Subsemigroup const& sub, std::vector<Elem> const& members) {
      std::vector<Elem> out;
      for (Elem a : members) {
        if (!sub.local[a]) {
          return Checked<std::vector<Elem>>::fail(Verdict::fail("containment", {a}));
        }
        out.push_back(*sub.local[a]);
      }
      return Checked<std::vector<Elem>>::pass(std::move(out));
    }

    StructureReport::Item item(std::string name, Verdict v) {
      return {std::move(name), v.ok ? ItemStatus::verified : ItemStatus::failed, std::move(v)};
    }

    StructureReport::Item skipped(std::string name) {
      return {std::move(name), ItemStatus::not_applicable, Verdict::fail("strong", {})};
    }

  }  // namespace

  StructureReport structure_suite(RBOperator const& r) {
    if (r.weight() != Weight::plus) {
      throw PreconditionError("structure_suite expects a weight +1 operator");
    }
    CliffordTable const& ct    = r.carrier();
    std::size_t const    n     = ct.order();
    auto                 rplus = [&](Elem a) { return ct.add(a, r(a)); };
    CliffordTable const  circ  = CliffordTable::from(circ_table(r));

    StructureReport rep;
    rep.ker_r     = collect(n, [&](Elem a) { return ct.is_idempotent(r(a)); });
    rep.im_r      = image(n, [&](Elem a) { return r(a); });
    rep.ker_rplus = collect(n, [&](Elem a) { return ct.is_idempotent(rplus(a)); });
    rep.im_rplus  = image(n, rplus);

    auto sub_ker   = clifford_subsemigroup(ct, rep.ker_r);
    auto sub_im    = clifford_subsemigroup(ct, rep.im_r);
    auto sub_implus = clifford_subsemigroup(ct, rep.im_rplus);
    rep.items.push_back(item("ker-subsemigroup", sub_ker.verdict()));
    rep.items.push_back(item("im-subsemigroup", sub_im.verdict()));

    {
      Verdict v = Verdict::pass();
      for (Elem a = 0; a < n && v.ok; ++a) {
        for (Elem b = 0; b < n && v.ok; ++b) {
          if (rplus(circ.add(a, b)) != ct.add(rplus(a), rplus(b))) {
            v = Verdict::fail("rplus-homomorphism", {a, b});
          }
        }
        if (v.ok && rplus(r(a)) != r(rplus(a))) {
          v = Verdict::fail("rplus-commutes", {a});
        }
      }
      rep.items.push_back(item("rplus-homomorphism", v));
    }

    {
      Verdict v = sub_implus.verdict();
      for (Elem a = 0; a < n && v.ok; ++a) {
        bool found = false;
        for (Elem x : rep.im_rplus) {
          for (Elem y : rep.im_r) {
            found |= ct.add(x, y) == a;
          }
        }
        if (!found) {
          v = Verdict::fail("sum-decomposition", {a});
        }
      }
      rep.items.push_back(item("item1-im-rplus-plus-im-r", v));
    }

    {
      Verdict v = check_normal(circ, rep.ker_r);
      if (v) {
        v = check_normal(circ, rep.ker_rplus);
      }
      rep.items.push_back(item("item2-kernels-normal-in-circ", v));
    }

    Checked<std::vector<Elem>> ker_in_implus = Checked<std::vector<Elem>>::fail(sub_implus.verdict());
    {
      Verdict v = sub_implus.verdict();
      if (v) {
        ker_in_implus = localize(*sub_implus, rep.ker_r);
        v             = ker_in_implus ? check_normal(sub_implus->table, *ker_in_implus) : ker_in_implus.verdict();
      }
      rep.items.push_back(item("item3-ker-normal-in-im-rplus", v));
    }

    if (!r.strong()) {
      rep.items.push_back(skipped("item4-kerplus-normal-in-im"));
      rep.items.push_back(skipped("item5-quotient-isomorphism"));
      diagnostics::note_identity_suite();
      return rep;
    }

    Checked<std::vector<Elem>> kerplus_in_im = Checked<std::vector<Elem>>::fail(sub_im.verdict());
    {
      Verdict v = sub_im.verdict();
      if (v) {
        kerplus_in_im = localize(*sub_im, rep.ker_rplus);
        v             = kerplus_in_im ? check_normal(sub_im->table, *kerplus_in_im) : kerplus_in_im.verdict();
      }
      rep.items.push_back(item("item4-kerplus-normal-in-im", v));
      rep.kerplus_normal_in_S = check_normal(ct, rep.ker_rplus);
    }

    {
      Verdict v = Verdict::pass();
      if (!ker_in_implus || !kerplus_in_im || !check_normal(sub_implus->table, *ker_in_implus)
          || !check_normal(sub_im->table, *kerplus_in_im)) {
        v = Verdict::fail("quotients-undefined", {});
      } else {
        Quotient q1 = quotient(NormalSubsemigroup(sub_implus->table, *ker_in_implus));
        Quotient q2 = quotient(NormalSubsemigroup(sub_im->table, *kerplus_in_im));
        auto     c1 = [&](Elem a) { return q1.projection(*sub_implus->local[rplus(a)]); };
        auto     c2 = [&](Elem a) { return q2.projection(*sub_im->local[r(a)]); };
        std::vector<std::optional<Elem>> f(q1.table.order());
        for (Elem a = 0; a < n && v.ok; ++a) {
          if (f[c1(a)] && *f[c1(a)] != c2(a)) {
            v = Verdict::fail("well-defined", {a});
          }
          f[c1(a)] = c2(a);
        }
        if (v.ok) {
          std::vector<Elem> img;
          for (auto const& x : f) {
            img.push_back(*x);  // every class is hit since R+ is onto its image
          }
          ElementMap const m(q2.table.order(), img);
          if (!m.is_bijective()) {
            v = Verdict::fail("bijective", {});
          } else {
            v = is_homomorphism(m, q1.table.semigroup(), q2.table.semigroup());
          }
        }
      }
      rep.items.push_back(item("item5-quotient-isomorphism", v));
    }
    diagnostics::note_identity_suite();
    return rep;
  }

  CircR circ_r(RBOperator const& r) {
    using detail::require;
    if (r.weight() != Weight::plus) {
      throw PreconditionError("circ_r expects a weight +1 operator");
    }
    CliffordTable const& ct = r.carrier();
    std::size_t const    n  = ct.order();
    auto                 b  = check_brace(ct.semigroup(), FiniteSemigroup(circ_table(r), ct.name() + "-circ"));
    require(b.ok(), "circ-brace", b.verdict().witness);
    DualWeakLeftBrace const& brace = b.value();
    CliffordTable const&     circ  = brace.multiplicative();
    for (Elem a = 0; a < n; ++a) {
      require(circ.neg(a) == ct.sum({ct.neg(r(a)), ct.neg(a), r(a)}), "circ-inverse", {a});
    }
    auto on_circ = check_rb(circ, r.map(), Weight::plus);
    require(on_circ.ok(), "rb-on-circ", on_circ.verdict().witness);
    Verdict hom = is_homomorphism(r.map(), circ.semigroup(), ct.semigroup());
    require(hom.ok, "rb-homomorphism-to-plus", hom.witness);

    bool same = ct.table() == circ.table();
    bool central = true;
    for (Elem a = 0; a < n; ++a) {
      central &= ct.is_central(ct.add(ct.zero(a), r(a)));
    }
    require(same == central, "plus-equals-circ-criterion", {});
    diagnostics::note_identity_suite();
    return CircR{brace, same};
  }

  EndoResult endo_iff_commutative(RBOperator const& r) {
    if (r.weight() != Weight::plus) {
      throw PreconditionError("endo_iff_commutative expects a weight +1 operator");
    }
    if (!r.carrier().is_commutative()) {
      return EndoResult::not_applicable;
    }
    Verdict v = is_endomorphism(r.map(), r.carrier().semigroup());
    detail::require(v.ok, "commutative-rb-endomorphism", v.witness);
    return EndoResult::endomorphism;
  }

}  // namespace cliffy
