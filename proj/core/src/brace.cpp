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

#include "cliffy/brace.hpp"
#include "cliffy/morphism.hpp"

#include <algorithm>

namespace cliffy {

  DualWeakLeftBrace::DualWeakLeftBrace(CliffordTable add, CliffordTable circ)
      : _add(std::move(add)), _circ(std::move(circ)) {}

  namespace {
    Verdict prefixed(char const* prefix, Verdict v) {
      if (!v) {
        v.axiom = std::string(prefix) + v.axiom;
      }
      return v;
    }
  }  // namespace

  Checked<DualWeakLeftBrace> check_brace(FiniteSemigroup const& add_s,
                                         FiniteSemigroup const& circ_s) {
    using Result = Checked<DualWeakLeftBrace>;
    if (add_s.order() != circ_s.order()) {
      throw PreconditionError("brace tables have different orders");
    }
    Classification ca = classify(add_s);
    if (ca.kind != SemigroupKind::clifford) {
      return Result::fail(prefixed("add-", ca.witness));
    }
    Classification cc = classify(circ_s);
    if (cc.kind != SemigroupKind::clifford) {
      return Result::fail(prefixed("circ-", cc.witness));
    }
    CliffordTable const& p = *ca.clifford;
    CliffordTable const& c = *cc.clifford;
    std::size_t const    n = p.order();

    for (Elem x = 0; x < n; ++x) {
      if (c.add(x, c.neg(x)) != p.zero(x)) {
        return Result::fail(Verdict::fail("brace-inverse", {x}));
      }
    }
    // Implied by brace-inverse; reported separately for clearer witnesses.
    for (Elem e = 0; e < n; ++e) {
      if (p.is_idempotent(e) != c.is_idempotent(e)) {
        return Result::fail(Verdict::fail("brace-idempotents", {e}));
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          Elem const lhs = c.add(x, p.add(y, z));
          Elem const rhs = p.sum({c.add(x, y), p.neg(x), c.add(x, z)});
          if (lhs != rhs) {
            return Result::fail(Verdict::fail("brace-distributive", {x, y, z}));
          }
        }
      }
    }
    for (Elem e : p.idempotents()) {
      for (Elem a = 0; a < n; ++a) {
        Elem const ea = p.add(e, a);
        if (c.add(e, a) != ea || c.add(a, e) != ea || p.add(a, e) != ea) {
          return Result::fail(Verdict::fail("brace-idempotent-action", {e, a}));
        }
      }
    }
    diagnostics::note_identity_suite();
    return Result::pass(DualWeakLeftBrace(p, c));
  }

  Checked<DualWeakLeftBrace> check_brace(Table const& add, Table const& circ) {
    return check_brace(FiniteSemigroup(add), FiniteSemigroup(circ));
  }

  std::vector<ElementMap> lambda_maps(DualWeakLeftBrace const& b) {
    std::size_t const       n = b.order();
    std::vector<ElementMap> out;
    for (Elem a = 0; a < n; ++a) {
      std::vector<Elem> img(n);
      for (Elem x = 0; x < n; ++x) {
        img[x] = b.lambda(a, x);
      }
      out.emplace_back(n, std::move(img));
      Verdict v = is_homomorphism(out.back(), b.additive().semigroup(), b.additive().semigroup());
      detail::require(v.ok, "lambda-endomorphism", {a});
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem c = 0; c < n; ++c) {
        for (Elem x = 0; x < n; ++x) {
          detail::require(out[b.circ(a, c)](x) == out[a](out[c](x)),
                          "lambda-homomorphism",
                          {a, c, x});
        }
      }
    }
    diagnostics::note_identity_suite();
    return out;
  }

  Verdict is_brace_hom(ElementMap const&        psi,
                       DualWeakLeftBrace const& src,
                       DualWeakLeftBrace const& dst) {
    if (psi.source_order() != src.order() || psi.target_order() != dst.order()) {
      return Verdict::fail("map-shape");
    }
    std::size_t const n = src.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (psi(src.add(a, b)) != dst.add(psi(a), psi(b))) {
          return Verdict::fail("additive", {a, b});
        }
      }
    }
    Verdict direct = Verdict::pass();
    for (Elem a = 0; a < n && direct.ok; ++a) {
      for (Elem b = 0; b < n && direct.ok; ++b) {
        if (psi(src.circ(a, b)) != dst.circ(psi(a), psi(b))) {
          direct = Verdict::fail("multiplicative", {a, b});
        }
      }
    }
    bool lambda_ok = true;
    for (Elem a = 0; a < n && lambda_ok; ++a) {
      for (Elem b = 0; b < n && lambda_ok; ++b) {
        lambda_ok = psi(src.lambda(a, b)) == dst.lambda(psi(a), psi(b));
      }
    }
    detail::require(lambda_ok == direct.ok, "lambda-criterion", {});
    return direct;
  }

  Verdict check_ideal(DualWeakLeftBrace const& b, std::vector<Elem> const& members) {
    if (Verdict v = check_normal(b.additive(), members); !v) {
      return prefixed("ideal-add-", v);
    }
    if (Verdict v = check_normal(b.multiplicative(), members); !v) {
      return prefixed("ideal-circ-", v);
    }
    std::vector<bool> in(b.order(), false);
    for (Elem i : members) {
      in[i] = true;
    }
    for (Elem a = 0; a < b.order(); ++a) {
      for (Elem i = 0; i < b.order(); ++i) {
        if (in[i] && !in[b.lambda(a, i)]) {
          return Verdict::fail("ideal-lambda", {a, i});
        }
      }
    }
    return Verdict::pass();
  }

  BraceQuotient quotient_brace(DualWeakLeftBrace const& b, std::vector<Elem> members) {
    using detail::require;
    if (Verdict v = check_ideal(b, members); !v) {
      throw VerificationError(std::move(v));
    }
    Quotient qa = quotient(NormalSubsemigroup(b.additive(), members));
    Quotient qc = quotient(NormalSubsemigroup(b.multiplicative(), members));
    // a + I = a o I: both congruences give the same partition, and since
    // classes are ordered by least member the indices agree as well.
    require(qa.classes == qc.classes, "additive-equals-multiplicative-classes", {});
    std::size_t const n = b.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem c = 0; c < n; ++c) {
        require(qc.table.add(qa.projection(a), qa.projection(c))
                    == qa.projection(b.circ(a, c)),
                "quotient-circ-well-defined",
                {a, c});
      }
    }
    auto checked = check_brace(qa.table.semigroup(), qc.table.semigroup());
    require(checked.ok(), "quotient-brace", checked.verdict().witness);
    return BraceQuotient{checked.value(), qa.projection, qa.classes};
  }

}  // namespace cliffy
