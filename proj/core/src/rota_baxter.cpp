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

#include "cliffy/rota_baxter.hpp"

#include "cliffy/morphism.hpp"

namespace cliffy {

  RBOperator::RBOperator(CliffordTable carrier, ElementMap map, Weight w, bool strong)
      : _carrier(std::move(carrier)), _map(std::move(map)), _weight(w), _strong(strong) {}

  namespace {

    // The element whose image must equal R(a) + R(b).
    Elem product_argument(CliffordTable const& ct, Weight w, Elem a, Elem ra, Elem b) {
      return w == Weight::plus ? ct.sum({a, ra, b, ct.neg(ra)})
                               : ct.sum({ra, b, ct.neg(ra), a});
    }

    // Derived identities of a weight +1 operator.
    void weight_plus_suite(CliffordTable const& ct, ElementMap const& r) {
      using detail::require;
      std::size_t const n = ct.order();
      for (Elem a = 0; a < n; ++a) {
        Elem const ra  = r(a);
        Elem const nra = ct.neg(ra);
        require(r(ct.zero(a)) == ct.zero(ra), "rb-zero", {a});
        require(ct.add(ra, r(ct.neg(a))) == r(ct.sum({a, ra, ct.neg(a), nra})), "rb-negative-sum", {a});
        require(ct.add(ra, r(ra)) == r(ct.add(a, ra)), "rb-iterate", {a});
        require(nra == r(ct.sum({nra, ct.neg(a), ra})), "rb-negation", {a});
        require(ct.add(ct.zero(a), ct.zero(ra)) == ct.zero(a), "rb-zero-absorb", {a});
        for (Elem b = 0; b < n; ++b) {
          require(ct.add(nra, r(ct.sum({ra, b, nra}))) == r(ct.sum({nra, ct.neg(a), ra, b})),
                  "rb-conjugate",
                  {a, b});
          if (ct.is_idempotent(ra)) {
            require(r(ct.add(a, b)) == ct.add(ra, r(b)), "rb-idempotent-image-additive", {a, b});
          }
        }
      }
      bool strong_by_fix = true, strong_by_class = true;
      for (Elem a = 0; a < n; ++a) {
        strong_by_fix &= !ct.is_idempotent(a) || r(a) == a;
        strong_by_class &= ct.zero(r(a)) == ct.zero(a);
      }
      require(strong_by_fix == strong_by_class, "rb-strong-characterization", {});
      if (is_automorphism(r, ct.semigroup())) {
        for (Elem a = 0; a < n; ++a) {
          require(ct.is_central(r(ct.add(ct.zero(a), r(a)))), "rb-automorphism-central", {a});
        }
      }
      diagnostics::note_identity_suite();
    }

  }  // namespace

  Checked<RBOperator> check_rb(CliffordTable const& ct, ElementMap const& r, Weight w) {
    if (r.source_order() != ct.order() || r.target_order() != ct.order()) {
      throw PreconditionError("operator map has order " + std::to_string(r.source_order())
                              + ", carrier has order " + std::to_string(ct.order()));
    }
    std::size_t const n = ct.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (ct.add(r(a), r(b)) != r(product_argument(ct, w, a, r(a), b))) {
          return Checked<RBOperator>::fail(Verdict::fail("rb-product", {a, b}));
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (ct.add(a, ct.zero(r(a))) != a) {
        return Checked<RBOperator>::fail(Verdict::fail("rb-idempotent", {a}));
      }
    }
    bool strong = true;
    for (Elem e : ct.idempotents()) {
      strong &= r(e) == e;
    }
    if (w == Weight::plus) {
      weight_plus_suite(ct, r);
    }
    return Checked<RBOperator>::pass(RBOperator(ct, r, w, strong));
  }

  std::vector<RBOperator> enumerate_rb(CliffordTable const& ct,
                                       Weight               w,
                                       bool                 strong_only,
                                       Budget const&        budget) {
    budget.require_order(ct.order(), "enumerate_rb");
    std::size_t const              n = ct.order();
    std::vector<std::vector<Elem>> candidates(n);
    for (Elem a = 0; a < n; ++a) {
      if (strong_only && ct.is_idempotent(a)) {
        candidates[a] = {a};
        continue;
      }
      // Unary constraint a + R(a)^0 = a prunes first.
      for (Elem x = 0; x < n; ++x) {
        if (ct.add(a, ct.zero(x)) == a) {
          candidates[a].push_back(x);
        }
      }
    }
    // Re-checks every pair whose three images are now fixed and that
    // involves the newest position k.
    auto accept = [&](std::vector<Elem> const& r, std::size_t k) {
      for (Elem a = 0; a <= k; ++a) {
        for (Elem b = 0; b <= k; ++b) {
          Elem const z = product_argument(ct, w, a, r[a], b);
          if (z > k || (a != k && b != k && z != k)) {
            continue;
          }
          if (ct.add(r[a], r[b]) != r[z]) {
            return false;
          }
        }
      }
      return true;
    };
    std::vector<RBOperator> out;
    for (auto& images : detail::backtrack(candidates, accept, budget)) {
      auto checked = check_rb(ct, ElementMap(n, std::move(images)), w);
      detail::require(checked.ok(), "enumeration-sound", checked.verdict().witness);
      out.push_back(checked.value());
    }
    return out;
  }

}  // namespace cliffy
