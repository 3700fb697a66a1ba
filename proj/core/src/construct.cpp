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

  namespace {

    ElementMap build(std::size_t n, auto&& f) {
      std::vector<Elem> img(n);
      for (Elem a = 0; a < n; ++a) {
        img[a] = f(a);
      }
      return ElementMap(n, std::move(img));
    }

    // Result of a construction theorem: must pass the checker.
    RBOperator certified(CliffordTable const& ct, ElementMap const& m, Weight w, char const* what) {
      auto checked = check_rb(ct, m, w);
      if (!checked) {
        Verdict v = checked.verdict();
        v.axiom   = std::string(what) + ":" + v.axiom;
        throw InvariantViolation(std::move(v));
      }
      return checked.value();
    }

    // For the "if and only if" constructions: a failed hypothesis must mean
    // the candidate map is not an operator either.
    Checked<RBOperator> refuted(CliffordTable const& ct, ElementMap const& m, Verdict why) {
      detail::require(!check_rb(ct, m, Weight::plus).ok(), "construction-converse", why.witness);
      return Checked<RBOperator>::fail(std::move(why));
    }

    void require_weight(RBOperator const& r, Weight w, char const* what) {
      if (r.weight() != w) {
        throw PreconditionError(std::string(what) + " expects an operator of weight "
                                + (w == Weight::plus ? "+1" : "-1"));
      }
    }

  }  // namespace

  namespace construct {

    Checked<RBOperator> phi_twist(RBOperator const& r, ElementMap const& phi) {
      CliffordTable const& ct = r.carrier();
      if (Verdict v = is_automorphism(phi, ct.semigroup()); !v) {
        v.axiom = "automorphism:" + v.axiom;
        return Checked<RBOperator>::fail(std::move(v));
      }
      ElementMap const inv = *phi.inverse();
      auto twist = [&](RBOperator const& x) {
        return certified(ct, inv.after(x.map()).after(phi), x.weight(), "phi_twist");
      };
      RBOperator out = twist(r);
      detail::require(!r.strong() || out.strong(), "twist-preserves-strong", {});
      if (r.weight() == Weight::plus) {
        detail::require(twist(tilde(r)) == tilde(out), "twist-commutes-with-tilde", {});
      }
      return Checked<RBOperator>::pass(std::move(out));
    }

    RBOperator tilde(RBOperator const& r) {
      CliffordTable const& ct = r.carrier();
      ElementMap           m  = build(ct.order(), [&](Elem a) {
        return r.weight() == Weight::plus ? ct.add(ct.neg(a), r(ct.neg(a)))
                                          : ct.add(a, r(ct.neg(a)));
      });
      RBOperator out = certified(ct, m, r.weight(), "tilde");
      detail::require(!r.strong() || out.strong(), "tilde-preserves-strong", {});
      return out;
    }

    Checked<RBOperator> n_multiple(CliffordTable const& ct, unsigned n) {
      if (n == 0) {
        throw PreconditionError("n_multiple needs a positive multiplier");
      }
      auto times = [&](Elem a) {
        Elem acc = a;
        for (unsigned i = 1; i < n; ++i) {
          acc = ct.add(acc, a);
        }
        return acc;
      };
      ElementMap m = build(ct.order(), times);
      for (Elem a = 0; a < ct.order(); ++a) {
        for (Elem b = 0; b < ct.order(); ++b) {
          if (times(ct.add(a, b)) != ct.add(times(b), times(a))) {
            return refuted(ct, m, Verdict::fail("reversal", {a, b}));
          }
        }
      }
      RBOperator out = certified(ct, m, Weight::plus, "n_multiple");
      detail::require(out.strong(), "n-multiple-strong", {});
      return Checked<RBOperator>::pass(std::move(out));
    }

    Checked<RBOperator> conjugation(CliffordTable const& ct, Elem b) {
      if (b >= ct.order()) {
        throw PreconditionError("conjugating element out of range");
      }
      std::size_t const n = ct.order();
      ElementMap        m = build(n, [&](Elem a) { return ct.sum({ct.neg(b), ct.neg(a), b}); });
      Elem const        z = ct.zero(b);
      for (Elem x = 0; x < n; ++x) {
        if (ct.add(x, z) != x || ct.add(z, x) != x) {
          return refuted(ct, m, Verdict::fail("identity", {x}));
        }
      }
      for (Elem x = 0; x < n; ++x) {
        Elem const c = ct.sum({ct.neg(b), ct.neg(x), b, x});
        for (Elem y = 0; y < n; ++y) {
          if (ct.add(c, y) != ct.add(y, c)) {
            return refuted(ct, m, Verdict::fail("central", {x, y}));
          }
        }
      }
      RBOperator out = certified(ct, m, Weight::plus, "conjugation");
      detail::require(out.strong(), "conjugation-strong", {});
      return Checked<RBOperator>::pass(std::move(out));
    }

    Checked<RBOperator> translation(CliffordTable const& ct, Elem a, Elem b) {
      if (a >= ct.order() || b >= ct.order()) {
        throw PreconditionError("translation element out of range");
      }
      std::size_t const n = ct.order();
      ElementMap        m = build(n, [&](Elem x) { return ct.sum({a, x, b}); });
      for (Elem x = 0; x < n; ++x) {
        for (Elem y = x + 1; y < n; ++y) {
          if (ct.add(x, y) != ct.add(y, x)) {
            return refuted(ct, m, Verdict::fail("commutative", {x, y}));
          }
        }
      }
      for (Elem x = 0; x < n; ++x) {
        if (ct.add(ct.zero(a), x) != x) {
          return refuted(ct, m, Verdict::fail("identity", {x}));
        }
      }
      if (b != ct.neg(a)) {
        return refuted(ct, m, Verdict::fail("inverse", {a, b}));
      }
      RBOperator out = certified(ct, m, Weight::plus, "translation");
      detail::require(out.map() == ElementMap::identity(n), "translation-is-identity", {});
      return Checked<RBOperator>::pass(std::move(out));
    }

    RBOperator weight_flip_neg(RBOperator const& r) {
      require_weight(r, Weight::plus, "weight_flip_neg");
      CliffordTable const& ct  = r.carrier();
      RBOperator           out = certified(
          ct, build(ct.order(), [&](Elem a) { return r(ct.neg(a)); }), Weight::minus, "weight_flip_neg");
      detail::require(!r.strong() || out.strong(), "flip-preserves-strong", {});
      return out;
    }

    RBOperator weight_phi(RBOperator const& r) {
      require_weight(r, Weight::plus, "weight_phi");
      CliffordTable const& ct  = r.carrier();
      RBOperator           out = certified(
          ct, build(ct.order(), [&](Elem a) { return ct.add(a, r(a)); }), Weight::minus, "weight_phi");
      detail::require(!r.strong() || out.strong(), "phi-preserves-strong", {});
      return out;
    }

    RBOperator weight_psi(RBOperator const& l) {
      require_weight(l, Weight::minus, "weight_psi");
      CliffordTable const& ct  = l.carrier();
      RBOperator           out = certified(
          ct, build(ct.order(), [&](Elem a) { return ct.add(ct.neg(a), l(a)); }), Weight::plus, "weight_psi");
      detail::require(!l.strong() || out.strong(), "psi-preserves-strong", {});
      return out;
    }

    Checked<RBOperator> exact_factorization(CliffordTable const&     ct,
                                            std::vector<Elem> const& u,
                                            std::vector<Elem> const& v) {
      using Result = Checked<RBOperator>;
      auto su      = clifford_subsemigroup(ct, u);
      if (!su) {
        Verdict w = su.verdict();
        w.axiom   = "subsemigroup-U:" + w.axiom;
        return Result::fail(std::move(w));
      }
      auto sv = clifford_subsemigroup(ct, v);
      if (!sv) {
        Verdict w = sv.verdict();
        w.axiom   = "subsemigroup-V:" + w.axiom;
        return Result::fail(std::move(w));
      }
      std::size_t const n = ct.order();
      std::vector<Elem> ua(n), va(n);
      for (Elem a = 0; a < n; ++a) {
        std::size_t count = 0;
        for (Elem x : su->embedding) {
          for (Elem y : sv->embedding) {
            if (ct.add(x, y) == a) {
              ua[a] = x;
              va[a] = y;
              ++count;
            }
          }
        }
        if (count != 1) {
          return Result::fail(Verdict::fail("factorization", {a}));
        }
      }
      RBOperator r = certified(ct, build(n, [&](Elem a) { return ct.neg(va[a]); }), Weight::plus,
                               "exact_factorization");
      // (S, o_R) is U x V^op via a |-> (u_a, v_a).
      FiniteSemigroup const target = direct_product(su->table.semigroup(), opposite(sv->table.semigroup()));
      std::size_t const     nv     = sv->embedding.size();
      ElementMap            iso    = build(n, [&](Elem a) { return *su->local[ua[a]] * nv + *sv->local[va[a]]; });
      iso                          = ElementMap(target.order(), iso.images());
      FiniteSemigroup const circ(Table::generate(n, [&](Elem a, Elem b) {
        return ct.sum({a, r(a), b, ct.neg(r(a))});
      }));
      for (Elem a = 0; a < n; ++a) {
        detail::require(ct.is_idempotent(r(ct.add(a, r(a)))), "factorization-idempotent", {a});
      }
      detail::require(iso.is_bijective() && is_homomorphism(iso, circ, target).ok,
                      "factorization-isomorphism", {});
      return Result::pass(std::move(r));
    }

    Checked<RBOperator> uvt(CliffordTable const&     ct,
                            std::vector<Elem> const& u,
                            std::vector<Elem> const& v,
                            std::vector<Elem> const& t,
                            ElementMap const&        l_on_v) {
      using Result = Checked<RBOperator>;
      auto sub     = [&](std::vector<Elem> const& m, char const* tag) {
        auto s = clifford_subsemigroup(ct, m);
        if (!s) {
          Verdict w = s.verdict();
          w.axiom   = std::string("subsemigroup-") + tag + ":" + w.axiom;
          throw VerificationError(std::move(w));
        }
        return s.value();
      };
      Subsemigroup su, sv, st;
      try {
        su = sub(u, "U");
        sv = sub(v, "V");
        st = sub(t, "T");
      } catch (VerificationError const& e) {
        return Result::fail(e.verdict());
      }
      if (l_on_v.source_order() != sv.embedding.size() || l_on_v.target_order() != sv.embedding.size()) {
        throw PreconditionError("operator on V has the wrong order");
      }
      auto lop = check_rb(sv.table, l_on_v, Weight::plus);
      if (!lop) {
        Verdict w = lop.verdict();
        w.axiom   = "operator-L:" + w.axiom;
        return Result::fail(std::move(w));
      }
      std::size_t const n = ct.order();
      std::vector<Elem> ua(n), va(n), ta(n);
      for (Elem a = 0; a < n; ++a) {
        std::size_t count = 0;
        for (Elem x : su.embedding) {
          for (Elem y : sv.embedding) {
            for (Elem z : st.embedding) {
              if (ct.sum({x, y, z}) == a) {
                ua[a] = x;
                va[a] = y;
                ta[a] = z;
                ++count;
              }
            }
          }
        }
        if (count != 1) {
          return Result::fail(Verdict::fail("factorization", {a}));
        }
      }
      for (Elem x : su.embedding) {
        for (Elem y : sv.embedding) {
          if (ct.add(x, y) != ct.add(y, x)) {
            return Result::fail(Verdict::fail("commute-UV", {x, y}));
          }
        }
      }
      auto l_amb = [&](Elem y) { return sv.embedding[l_on_v(*sv.local[y])]; };
      for (Elem y : sv.embedding) {
        for (Elem z : st.embedding) {
          if (ct.add(l_amb(y), z) != ct.add(z, l_amb(y))) {
            return Result::fail(Verdict::fail("commute-LT", {y, z}));
          }
        }
      }
      RBOperator r = certified(ct, build(n, [&](Elem a) { return ct.sub(l_amb(va[a]), ta[a]); }),
                               Weight::plus, "uvt");
      // (S, o_R) is U x V_L x T^op via a |-> (u_a, v_a, t_a).
      std::size_t const     nv = sv.embedding.size();
      std::size_t const     nt = st.embedding.size();
      FiniteSemigroup const vl(Table::generate(nv, [&](Elem x, Elem y) {
        CliffordTable const& c = sv.table;
        return c.sum({x, l_on_v(x), y, c.neg(l_on_v(x))});
      }));
      FiniteSemigroup const target =
          direct_product(direct_product(su.table.semigroup(), vl), opposite(st.table.semigroup()));
      std::vector<Elem> img(n);
      for (Elem a = 0; a < n; ++a) {
        img[a] = (*su.local[ua[a]] * nv + *sv.local[va[a]]) * nt + *st.local[ta[a]];
      }
      ElementMap const      iso(target.order(), img);
      FiniteSemigroup const circ(Table::generate(n, [&](Elem a, Elem b) {
        return ct.sum({a, r(a), b, ct.neg(r(a))});
      }));
      detail::require(iso.is_bijective() && is_homomorphism(iso, circ, target).ok, "uvt-isomorphism", {});
      return Result::pass(std::move(r));
    }

  }  // namespace construct

  WeightCorrespondence weight_correspondence(CliffordTable const& ct, Budget const& budget) {
    using detail::require;
    auto const plus  = enumerate_rb(ct, Weight::plus, true, budget);
    auto const minus = enumerate_rb(ct, Weight::minus, true, budget);
    require(plus.size() == minus.size(), "correspondence-cardinality", {});
    WeightCorrespondence out;
    for (RBOperator const& r : plus) {
      RBOperator l = construct::weight_phi(r);
      require(std::find(minus.begin(), minus.end(), l) != minus.end(), "phi-lands-in-strong", {});
      require(construct::weight_psi(l) == r, "psi-after-phi", {});
      out.pairs.emplace_back(r, std::move(l));
    }
    for (RBOperator const& l : minus) {
      RBOperator r = construct::weight_psi(l);
      require(std::find(plus.begin(), plus.end(), r) != plus.end(), "psi-lands-in-strong", {});
      require(construct::weight_phi(r) == l, "phi-after-psi", {});
    }
    diagnostics::note_identity_suite();
    return out;
  }

}  // namespace cliffy
