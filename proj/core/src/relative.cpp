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

#include "cliffy/relative.hpp"

#include <algorithm>
#include <set>

#include "cliffy/morphism.hpp"

namespace cliffy {

  using detail::require;

  namespace {

    Verdict prefixed(Verdict v, std::string const& prefix) {
      v.axiom = prefix + v.axiom;
      return v;
    }

    std::vector<ElementMap> identity_maps(std::size_t count, std::size_t n) {
      return std::vector<ElementMap>(count, ElementMap::identity(n));
    }

  }  // namespace

  Action::Action(CliffordTable s, CliffordTable t, std::vector<ElementMap> maps)
      : _s(std::move(s)), _t(std::move(t)), _maps(std::move(maps)) {}

  Action Action::trivial(CliffordTable s, CliffordTable t) {
    auto maps = identity_maps(s.order(), t.order());
    return Action(std::move(s), std::move(t), std::move(maps));
  }

  Action Action::conjugation(CliffordTable t) {
    std::vector<ElementMap> maps;
    for (Elem s = 0; s < t.order(); ++s) {
      std::vector<Elem> img(t.order());
      for (Elem x = 0; x < t.order(); ++x) {
        img[x] = t.sum({s, x, t.neg(s)});
      }
      maps.emplace_back(t.order(), std::move(img));
    }
    return Action(t, t, std::move(maps));
  }

  Checked<Action> check_action(CliffordTable s, CliffordTable t, std::vector<ElementMap> maps) {
    std::size_t const ns = s.order(), nt = t.order();
    if (maps.size() != ns) {
      throw PreconditionError("action needs one map per element of S (" + std::to_string(ns) + "), got "
                              + std::to_string(maps.size()));
    }
    for (auto const& m : maps) {
      if (m.source_order() != nt || m.target_order() != nt) {
        throw PreconditionError("action maps must send T to T");
      }
    }
    for (Elem x = 0; x < ns; ++x) {
      for (Elem a = 0; a < nt; ++a) {
        for (Elem b = 0; b < nt; ++b) {
          if (maps[x](t.add(a, b)) != t.add(maps[x](a), maps[x](b))) {
            return Checked<Action>::fail(Verdict::fail("action-endomorphism", {x, a, b}));
          }
        }
      }
    }
    for (Elem x = 0; x < ns; ++x) {
      for (Elem y = 0; y < ns; ++y) {
        for (Elem a = 0; a < nt; ++a) {
          if (maps[s.add(x, y)](a) != maps[x](maps[y](a))) {
            return Checked<Action>::fail(Verdict::fail("action-homomorphism", {x, y, a}));
          }
        }
      }
    }
    return Checked<Action>::pass(Action(std::move(s), std::move(t), std::move(maps)));
  }

  char const* to_string(RelativeAxiom a) noexcept {
    switch (a) {
      case RelativeAxiom::c1:
        return "C1";
      case RelativeAxiom::c2:
        return "C2";
      case RelativeAxiom::c3:
        return "C3";
      case RelativeAxiom::c4:
        return "C4";
      case RelativeAxiom::c5:
        return "C5";
    }
    return "?";
  }

  RelativeRBSystem::RelativeRBSystem(Action phi, ElementMap r, bool strong)
      : _phi(std::move(phi)), _r(std::move(r)), _strong(strong) {}

  Verdict relative_axiom_violation(Action const& phi, ElementMap const& r, RelativeAxiom axiom) {
    CliffordTable const& t = phi.acted();
    CliffordTable const& s = phi.acting();
    std::size_t const    n = t.order();
    if (r.source_order() != n || r.target_order() != s.order()) {
      throw PreconditionError("R must map T into S");
    }
    char const* name = to_string(axiom);
    for (Elem a = 0; a < n; ++a) {
      switch (axiom) {
        case RelativeAxiom::c2:
          if (phi(s.zero(r(a)), a) != a) {
            return Verdict::fail(name, {a});
          }
          continue;
        case RelativeAxiom::c3:
          if (r(t.zero(a)) != s.zero(r(a))) {
            return Verdict::fail(name, {a});
          }
          continue;
        default:
          break;
      }
      for (Elem b = 0; b < n; ++b) {
        bool bad = false;
        switch (axiom) {
          case RelativeAxiom::c1:
            bad = s.add(r(a), r(b)) != r(t.add(a, phi(r(a), b)));
            break;
          case RelativeAxiom::c4: {
            Elem const z = t.zero(b);
            bad          = t.add(a, phi(r(a), z)) != t.add(z, phi(r(z), a));
            break;
          }
          case RelativeAxiom::c5:
            bad = t.add(t.zero(a), phi(r(a), b)) != phi(r(a), b);
            break;
          default:
            break;
        }
        if (bad) {
          return Verdict::fail(name, {a, b});
        }
      }
    }
    return Verdict::pass();
  }

  Checked<RelativeRBSystem> check_relative(Action const& phi, ElementMap const& r) {
    for (auto ax : {RelativeAxiom::c1, RelativeAxiom::c2, RelativeAxiom::c3, RelativeAxiom::c4}) {
      if (Verdict v = relative_axiom_violation(phi, r, ax); !v) {
        return Checked<RelativeRBSystem>::fail(std::move(v));
      }
    }
    bool const           strong = relative_axiom_violation(phi, r, RelativeAxiom::c5).ok;
    CliffordTable const& t      = phi.acted();
    CliffordTable const& s      = phi.acting();
    std::size_t const    n      = t.order();
    std::vector<bool>    in_image(s.order(), false);
    for (Elem a = 0; a < n; ++a) {
      in_image[r(a)] = true;
    }
    for (Elem a = 0; a < n; ++a) {
      Elem const z  = t.zero(a);
      Elem const ra = r(a);
      require(phi(s.zero(ra), z) == z, "relative-zero-fixed", {a});
      require(phi(r(z), z) == z, "relative-zero-fixed-image", {a});
      require(s.neg(ra) == r(phi(s.neg(ra), t.neg(a))), "relative-negation", {a});
      require(in_image[s.neg(ra)], "relative-image-neg", {a});
      if (t.is_idempotent(a)) {
        require(s.is_idempotent(ra), "relative-idempotent-image", {a});
      }
      for (Elem b = 0; b < n; ++b) {
        require(in_image[s.add(ra, r(b))], "relative-image-add", {a, b});
        Elem const zb = t.zero(b);
        require(t.add(a, phi(ra, zb)) == t.add(a, zb), "relative-c4-split-left", {a, b});
        require(t.add(zb, phi(r(zb), a)) == t.add(zb, a), "relative-c4-split-right", {a, b});
      }
    }
    diagnostics::note_identity_suite();
    return Checked<RelativeRBSystem>::pass(RelativeRBSystem(phi, r, strong));
  }

  Checked<RelativeRBSystem> check_relative(CliffordTable const&           t,
                                           CliffordTable const&           s,
                                           std::vector<ElementMap> const& phi,
                                           ElementMap const&              r) {
    auto action = check_action(s, t, phi);
    if (!action) {
      return Checked<RelativeRBSystem>::fail(action.verdict());
    }
    return check_relative(*action, r);
  }

  CliffordTable descendent(RelativeRBSystem const& sys) {
    CliffordTable const& t    = sys.T();
    CliffordTable const& s    = sys.S();
    ElementMap const&    r    = sys.R();
    std::size_t const    n    = t.order();
    CliffordTable const  circ = CliffordTable::from(FiniteSemigroup(
        Table::generate(n, [&](Elem a, Elem b) { return t.add(a, sys.act(r(a), b)); }), t.name() + "-circ"));
    for (Elem a = 0; a < n; ++a) {
      Elem const ra = r(a);
      require(circ.neg(a) == sys.act(s.neg(ra), t.neg(a)), "descendent-inverse", {a});
      require(sys.act(ra, t.zero(a)) == t.zero(a), "descendent-zero-fixed", {a});
      for (Elem b : t.hclass(a)) {
        Elem const x = sys.act(ra, b);
        require(t.zero(x) == t.zero(a), "descendent-hclass-stable", {a, b});
        require(sys.act(s.neg(ra), x) == b, "descendent-hclass-inverse", {a, b});
      }
      for (Elem b = 0; b < n; ++b) {
        require(r(circ.add(a, b)) == s.add(ra, r(b)), "descendent-homomorphism", {a, b});
      }
    }
    diagnostics::note_identity_suite();
    return circ;
  }

  DualWeakLeftBrace descendent_brace(RelativeRBSystem const& sys) {
    auto b = check_brace(sys.T().semigroup(), descendent(sys).semigroup());
    require(b.ok(), "descendent-brace", b.verdict().witness);
    return b.value();
  }

  std::optional<Elem> LambdaSemidirectProduct::index_of(Elem x, Elem a) const {
    auto it = std::lower_bound(pairs.begin(), pairs.end(), std::pair{x, a});
    if (it == pairs.end() || *it != std::pair{x, a}) {
      return std::nullopt;
    }
    return static_cast<Elem>(it - pairs.begin());
  }

  LambdaSemidirectProduct lambda_semidirect(Action const& phi) {
    CliffordTable const&    s = phi.acting();
    CliffordTable const&    t = phi.acted();
    LambdaSemidirectProduct m;
    for (Elem x = 0; x < s.order(); ++x) {
      for (Elem a = 0; a < t.order(); ++a) {
        if (phi(s.zero(x), a) == a) {
          m.pairs.emplace_back(x, a);
        }
      }
    }
    std::size_t const k   = m.pairs.size();
    auto              idx = [&](Elem x, Elem a) {
      auto i = m.index_of(x, a);
      require(i.has_value(), "semidirect-closed", {x, a});
      return *i;
    };
    Table add = Table::generate(k, [&](Elem i, Elem j) {
      auto [x, a] = m.pairs[i];
      auto [y, b] = m.pairs[j];
      return idx(s.add(x, y), t.add(phi(s.zero(y), a), phi(x, b)));
    });
    m.semigroup = FiniteSemigroup(std::move(add), "M(" + s.name() + "," + t.name() + ")");
    Classification c = classify(m.semigroup);
    require(c.kind == SemigroupKind::inverse || c.kind == SemigroupKind::clifford, "semidirect-inverse",
            c.witness.witness);
    m.negation.resize(k);
    for (Elem i = 0; i < k; ++i) {
      auto [x, a]   = m.pairs[i];
      m.negation[i] = idx(s.neg(x), phi(s.neg(x), t.neg(a)));
      require(c.inverses[i] == m.negation[i], "semidirect-negation", {x, a});
      bool const idem = m.semigroup.add(i, i) == i;
      require(idem == (s.is_idempotent(x) && t.is_idempotent(a)), "semidirect-idempotents", {x, a});
    }
    diagnostics::note_identity_suite();
    return m;
  }

  namespace {

    // Gr R as a Clifford subsemigroup of M, decided without C1..C4.
    Verdict graph_verdict(Action const& phi, ElementMap const& r, LambdaSemidirectProduct const& m,
                          Table& induced) {
      CliffordTable const& t = phi.acted();
      std::size_t const    n = t.order();
      std::vector<Elem>    at(n);
      std::vector<std::optional<Elem>> back(m.pairs.size());
      for (Elem a = 0; a < n; ++a) {
        auto i = m.index_of(r(a), a);
        if (!i) {
          return Verdict::fail("graph-in-M", {a});
        }
        at[a]    = *i;
        back[*i] = a;
      }
      induced = Table(n);
      for (Elem a = 0; a < n; ++a) {
        for (Elem b = 0; b < n; ++b) {
          auto c = back[m.semigroup.add(at[a], at[b])];
          if (!c) {
            return Verdict::fail("graph-closed-add", {a, b});
          }
          induced.at(a, b) = *c;
        }
      }
      for (Elem a = 0; a < n; ++a) {
        if (!back[m.negation[at[a]]]) {
          return Verdict::fail("graph-closed-neg", {a});
        }
      }
      Classification c = classify(FiniteSemigroup(induced));
      if (c.kind != SemigroupKind::clifford) {
        return prefixed(c.witness, "graph-");
      }
      return Verdict::pass();
    }

  }  // namespace

  GraphReport graph_characterization(Action const& phi, ElementMap const& r) {
    LambdaSemidirectProduct const m = lambda_semidirect(phi);
    auto                          sys = check_relative(phi, r);
    Table                         induced;
    GraphReport                   out{sys.verdict(), graph_verdict(phi, r, m, induced)};
    if (sys.ok()) {
      out.axioms = Verdict::pass();
    }
    if (!out.agree()) {
      std::vector<Elem> w = r.images();
      throw InvariantViolation(Verdict::fail("graph-characterization", std::move(w)));
    }
    if (sys.ok()) {
      // a |-> (R(a), a) carries o_R to + on M.
      require(induced == descendent(*sys).table(), "graph-isomorphism", {});
    }
    return out;
  }

  PostTable relative_to_post(RelativeRBSystem const& sys) {
    std::size_t const n   = sys.T().order();
    Table             rhd = Table::generate(n, [&](Elem a, Elem b) { return sys.act(sys.R()(a), b); });
    auto              p   = check_post(sys.T(), rhd);
    require(p.ok(), "relative-to-post", p.verdict().witness);
    require(!sys.strong() || p->strong(), "relative-to-post-strong", {});
    for (Elem a = 0; a < n; ++a) {
      for (Elem b : sys.T().hclass(a)) {
        require(p->restricted_inverse(a, b) == sys.act(sys.S().neg(sys.R()(a)), b), "relative-to-post-inverse",
                {a, b});
      }
    }
    return p.value();
  }

  RelativeRBSystem post_to_relative(PostTable const& p) {
    CliffordTable const     circ = sub_adjacent(p);
    std::size_t const       n    = p.order();
    std::vector<ElementMap> maps;
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> img(n);
      for (Elem b = 0; b < n; ++b) {
        img[b] = p.rhd(a, b);
      }
      maps.emplace_back(n, std::move(img));
    }
    auto sys = check_relative(p.additive(), circ, maps, ElementMap::identity(n));
    require(sys.ok(), "post-to-relative", sys.verdict().witness);
    require(!p.strong() || sys->strong(), "post-to-relative-strong", {});
    return sys.value();
  }

  Verdict is_relative_hom(ElementMap const&       psi,
                          ElementMap const&       eta,
                          RelativeRBSystem const& src,
                          RelativeRBSystem const& dst) {
    if (Verdict v = is_homomorphism(psi, src.T().semigroup(), dst.T().semigroup()); !v) {
      return prefixed(std::move(v), "psi-");
    }
    if (Verdict v = is_homomorphism(eta, src.S().semigroup(), dst.S().semigroup()); !v) {
      return prefixed(std::move(v), "eta-");
    }
    for (Elem a = 0; a < src.T().order(); ++a) {
      if (eta(src.R()(a)) != dst.R()(psi(a))) {
        return Verdict::fail("intertwine-R", {a});
      }
    }
    for (Elem x = 0; x < src.S().order(); ++x) {
      for (Elem a = 0; a < src.T().order(); ++a) {
        if (psi(src.act(x, a)) != dst.act(eta(x), psi(a))) {
          return Verdict::fail("intertwine-phi", {x, a});
        }
      }
    }
    return Verdict::pass();
  }

  Verdict is_relative_iso(ElementMap const&       psi,
                          ElementMap const&       eta,
                          RelativeRBSystem const& src,
                          RelativeRBSystem const& dst) {
    if (Verdict v = is_relative_hom(psi, eta, src, dst); !v) {
      return v;
    }
    if (psi.source_order() != psi.target_order() || !psi.is_bijective()) {
      return Verdict::fail("psi-bijective");
    }
    if (eta.source_order() != eta.target_order() || !eta.is_bijective()) {
      return Verdict::fail("eta-bijective");
    }
    return Verdict::pass();
  }

  Verdict roundtrip_relative_fg(PostTable const& p) {
    PostTable const back = relative_to_post(post_to_relative(p));
    for (Elem a = 0; a < p.order(); ++a) {
      for (Elem b = 0; b < p.order(); ++b) {
        if (back.rhd(a, b) != p.rhd(a, b)) {
          return Verdict::fail("fg-identity", {a, b});
        }
      }
    }
    return Verdict::pass();
  }

  Verdict roundtrip_relative_gf(RelativeRBSystem const& sys) {
    if (sys.R().source_order() != sys.R().target_order() || !sys.R().is_bijective()) {
      throw PreconditionError("roundtrip_relative_gf requires a bijective R");
    }
    RelativeRBSystem const gf = post_to_relative(relative_to_post(sys));
    return is_relative_iso(ElementMap::identity(sys.T().order()), sys.R(), gf, sys);
  }

  YBEMap ybe_from_relative(RelativeRBSystem const& sys) {
    CliffordTable const& t = sys.T();
    CliffordTable const& s = sys.S();
    ElementMap const&    r = sys.R();
    std::size_t const    n = t.order();
    YBEMap               out{Table(n), Table(n)};
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const c    = sys.act(r(a), b);
        out.out1.at(a, b) = t.sum({t.neg(a), a, c});
        out.out2.at(a, b) = sys.act(s.neg(r(c)), t.sum({t.neg(c), a, c}));
      }
    }
    Verdict v = check_yang_baxter(out);
    require(v.ok, "relative-solution-braid", v.witness);
    require(out == ybe_from_post(relative_to_post(sys)), "relative-solution-post-route", {});
    return out;
  }

  Checked<RelativeRBSystem> twist(RelativeRBSystem const& sys, ElementMap const& theta, ElementMap const& psi) {
    if (Verdict v = is_automorphism(theta, sys.T().semigroup()); !v) {
      return Checked<RelativeRBSystem>::fail(prefixed(std::move(v), "theta-"));
    }
    if (Verdict v = is_endomorphism(psi, sys.S().semigroup()); !v) {
      return Checked<RelativeRBSystem>::fail(prefixed(std::move(v), "psi-"));
    }
    ElementMap const theta_inv = *theta.inverse();
    for (Elem x = 0; x < sys.S().order(); ++x) {
      for (Elem a = 0; a < sys.T().order(); ++a) {
        if (theta_inv(sys.act(x, theta(a))) != sys.act(psi(x), a)) {
          return Checked<RelativeRBSystem>::fail(Verdict::fail("twist-hypothesis", {x, a}));
        }
      }
    }
    auto out = check_relative(sys.phi(), psi.after(sys.R()).after(theta));
    require(out.ok(), "twist-result", out.verdict().witness);
    return out;
  }

  Checked<RelativeQuotient> ideal_and_quotient(RelativeRBSystem const& sys,
                                               std::vector<Elem>       m,
                                               std::vector<Elem>       n) {
    using Result             = Checked<RelativeQuotient>;
    CliffordTable const& t   = sys.T();
    CliffordTable const& s   = sys.S();
    ElementMap const&    r   = sys.R();
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    std::sort(n.begin(), n.end());
    n.erase(std::unique(n.begin(), n.end()), n.end());
    for (Elem x : m) {
      if (x >= t.order()) {
        throw PreconditionError("M contains an index outside T");
      }
    }
    for (Elem x : n) {
      if (x >= s.order()) {
        throw PreconditionError("N contains an index outside S");
      }
    }
    if (auto sub = clifford_subsemigroup(t, m); !sub) {
      return Result::fail(prefixed(sub.verdict(), "sub-M:"));
    }
    if (auto sub = clifford_subsemigroup(s, n); !sub) {
      return Result::fail(prefixed(sub.verdict(), "sub-N:"));
    }
    std::vector<bool> in_m(t.order(), false), in_n(s.order(), false);
    for (Elem x : m) {
      in_m[x] = true;
    }
    for (Elem x : n) {
      in_n[x] = true;
    }
    for (Elem x : m) {
      if (!in_n[r(x)]) {
        return Result::fail(Verdict::fail("sub-R", {x}));
      }
    }
    for (Elem y : n) {
      for (Elem x : m) {
        if (!in_m[sys.act(y, x)]) {
          return Result::fail(Verdict::fail("sub-phi", {y, x}));
        }
      }
    }
    if (Verdict v = check_normal(t, m); !v) {
      return Result::fail(prefixed(std::move(v), "I1-T:"));
    }
    if (Verdict v = check_normal(s, n); !v) {
      return Result::fail(prefixed(std::move(v), "I1-S:"));
    }
    for (Elem x = 0; x < s.order(); ++x) {
      for (Elem y : m) {
        if (!in_m[sys.act(x, y)]) {
          return Result::fail(Verdict::fail("I2", {x, y}));
        }
      }
    }
    for (Elem y : n) {
      for (Elem a = 0; a < t.order(); ++a) {
        if (!in_m[t.sub(sys.act(y, a), a)]) {
          return Result::fail(Verdict::fail("I3", {y, a}));
        }
      }
    }
    for (Elem n1 : n) {
      for (Elem n2 : n) {
        if (s.zero(n1) != s.zero(n2)) {
          continue;
        }
        for (Elem e : t.idempotents()) {
          if (sys.act(n1, e) != sys.act(n2, e)) {
            return Result::fail(Verdict::fail("I4", {n1, n2, e}));
          }
        }
      }
    }

    Quotient const    tq = quotient(NormalSubsemigroup(t, m));
    Quotient const    sq = quotient(NormalSubsemigroup(s, n));
    ElementMap const& pt = tq.projection;
    ElementMap const& ps = sq.projection;
    for (Elem x1 = 0; x1 < s.order(); ++x1) {
      for (Elem x2 = 0; x2 < s.order(); ++x2) {
        if (ps(x1) != ps(x2)) {
          continue;
        }
        for (Elem b1 = 0; b1 < t.order(); ++b1) {
          for (Elem b2 = 0; b2 < t.order(); ++b2) {
            if (pt(b1) == pt(b2) && pt(sys.act(x1, b1)) != pt(sys.act(x2, b2))) {
              return Result::fail(Verdict::fail("well-defined-phi", {x1, x2, b1, b2}));
            }
          }
        }
      }
    }
    for (Elem b1 = 0; b1 < t.order(); ++b1) {
      for (Elem b2 = 0; b2 < t.order(); ++b2) {
        if (pt(b1) == pt(b2) && ps(r(b1)) != ps(r(b2))) {
          return Result::fail(Verdict::fail("well-defined-R", {b1, b2}));
        }
      }
    }

    std::size_t const       kt = tq.classes.size(), ks = sq.classes.size();
    std::vector<ElementMap> maps;
    for (Elem x = 0; x < ks; ++x) {
      Elem const        rep = sq.classes[x].front();
      std::vector<Elem> img(kt);
      for (Elem b = 0; b < kt; ++b) {
        img[b] = pt(sys.act(rep, tq.classes[b].front()));
      }
      maps.emplace_back(kt, std::move(img));
    }
    std::vector<Elem> rbar(kt);
    for (Elem b = 0; b < kt; ++b) {
      rbar[b] = ps(r(tq.classes[b].front()));
    }
    auto qsys = check_relative(tq.table, sq.table, maps, ElementMap(ks, std::move(rbar)));
    require(qsys.ok(), "quotient-relative", qsys.verdict().witness);

    Verdict                 brace_side = Verdict::pass();
    DualWeakLeftBrace const whole      = descendent_brace(sys);
    if (Verdict v = check_ideal(whole, m); !v) {
      brace_side = prefixed(std::move(v), "brace-");
    } else {
      BraceQuotient const     bq   = quotient_brace(whole, m);
      DualWeakLeftBrace const mine = descendent_brace(*qsys);
      if (bq.classes != tq.classes) {
        brace_side = Verdict::fail("brace-classes");
      } else if (!(bq.brace == mine)) {
        brace_side = Verdict::fail("brace-quotient");
      }
    }
    return Result::pass(RelativeQuotient{qsys.value(), pt, ps, tq.classes, sq.classes, std::move(brace_side)});
  }

  HomCorrespondence hom_correspondence(RelativeRBSystem const& a,
                                       RelativeRBSystem const& b,
                                       Budget const&           budget) {
    if (!a.strong() || !b.strong()) {
      throw PreconditionError("hom_correspondence requires strong systems");
    }
    auto r_inv = a.R().inverse();
    if (!r_inv || a.R().source_order() != a.R().target_order()) {
      throw PreconditionError("hom_correspondence requires a bijective R on the source system");
    }
    DualWeakLeftBrace const ba = descendent_brace(a);
    DualWeakLeftBrace const bb = descendent_brace(b);
    HomCorrespondence       out;
    for (auto const& psi : homomorphisms(a.T().semigroup(), b.T().semigroup(), budget)) {
      if (is_brace_hom(psi, ba, bb)) {
        out.brace_homs.push_back(psi);
      }
    }
    auto const etas = homomorphisms(a.S().semigroup(), b.S().semigroup(), budget);
    for (auto const& psi : homomorphisms(a.T().semigroup(), b.T().semigroup(), budget)) {
      for (auto const& eta : etas) {
        if (is_relative_hom(psi, eta, a, b)) {
          out.relative_homs.emplace_back(psi, eta);
        }
      }
    }
    out.bijection = Verdict::pass();
    std::set<std::pair<ElementMap, ElementMap>> image;
    for (Elem i = 0; i < out.brace_homs.size(); ++i) {
      ElementMap const& psi   = out.brace_homs[i];
      ElementMap const  theta = b.R().after(psi).after(*r_inv);
      auto              hit   = std::find(out.relative_homs.begin(), out.relative_homs.end(), std::pair{psi, theta});
      if (hit == out.relative_homs.end()) {
        out.bijection = Verdict::fail("theta-not-hom", {i});
        return out;
      }
      image.emplace(psi, theta);
    }
    for (Elem i = 0; i < out.relative_homs.size(); ++i) {
      if (!image.contains(out.relative_homs[i])) {
        out.bijection = Verdict::fail("theta-not-surjective", {i});
        return out;
      }
    }
    return out;
  }

  std::vector<RelativeRBSystem> enumerate_relative(Action const& phi, bool strong_only, Budget const& budget) {
    CliffordTable const& t = phi.acted();
    CliffordTable const& s = phi.acting();
    std::size_t const    n = t.order();
    budget.require_order(n, "enumerate_relative");
    std::vector<std::vector<Elem>> candidates(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem x = 0; x < s.order(); ++x) {
        if (phi(s.zero(x), a) != a) {
          continue;  // C2
        }
        if (t.is_idempotent(a) && !s.is_idempotent(x)) {
          continue;  // C3 at a = a^0
        }
        candidates[a].push_back(x);
      }
    }
    auto accept = [&](std::vector<Elem> const& v, std::size_t k) {
      for (Elem a = 0; a <= k; ++a) {
        for (Elem b = 0; b <= k; ++b) {
          Elem const z = t.add(a, phi(v[a], b));
          if (z <= k && (a == k || b == k || z == k) && s.add(v[a], v[b]) != v[z]) {
            return false;
          }
        }
        Elem const za = t.zero(a);
        if (za <= k && (a == k || za == k) && v[za] != s.zero(v[a])) {
          return false;
        }
      }
      return true;
    };
    std::vector<RelativeRBSystem> out;
    for (auto& images : detail::backtrack(candidates, accept, budget)) {
      auto sys = check_relative(phi, ElementMap(s.order(), std::move(images)));
      if (sys && (!strong_only || sys->strong())) {
        out.push_back(sys.value());
      }
    }
    return out;
  }

}  // namespace cliffy
