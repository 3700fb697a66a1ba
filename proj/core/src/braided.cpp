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

#include "cliffy/braided.hpp"

namespace cliffy {

  using detail::require;

  BraidedTable::BraidedTable(CliffordTable circ, Table left, Table right)
      : _circ(std::move(circ)), _left(std::move(left)), _right(std::move(right)) {}

  Checked<BraidedTable> check_braided(CliffordTable const& c, Table const& l, Table const& r) {
    using Result      = Checked<BraidedTable>;
    std::size_t const n = c.order();
    if (l.order() != n || r.order() != n) {
      throw PreconditionError("braiding tables must match the order of circ");
    }
    auto o = [&](Elem a, Elem b) { return c.add(a, b); };
    for (Elem a = 0; a < n; ++a) {
      if (l(c.zero(a), a) != a) {
        return Result::fail(Verdict::fail("B1", {a}));
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (r(a, c.zero(a)) != a) {
        return Result::fail(Verdict::fail("B4", {a}));
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (l(x, l(y, z)) != l(o(x, y), z)) {
            return Result::fail(Verdict::fail("B2", {x, y, z}));
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (r(r(x, y), z) != r(x, o(y, z))) {
            return Result::fail(Verdict::fail("B5", {x, y, z}));
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (o(l(a, b), r(a, b)) != o(a, b)) {
          return Result::fail(Verdict::fail("B7", {a, b}));
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (c.zero(l(a, b)) != c.zero(r(a, b))) {
          return Result::fail(Verdict::fail("B8", {a, b}));
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (o(a, l(c.zero(a), b)) != o(a, b)) {
          return Result::fail(Verdict::fail("B9", {a, b}));
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (r(o(x, y), z) != o(r(x, l(y, z)), r(y, z))) {
            return Result::fail(Verdict::fail("B3", {x, y, z}));
          }
        }
      }
    }
    for (Elem x = 0; x < n; ++x) {
      for (Elem y = 0; y < n; ++y) {
        for (Elem z = 0; z < n; ++z) {
          if (l(x, o(y, z)) != o(l(x, y), l(r(x, y), z))) {
            return Result::fail(Verdict::fail("B6", {x, y, z}));
          }
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      Elem const za = c.zero(a);
      require(l(a, za) == za, "braided-fixes-zero", {a});
      for (Elem b = 0; b < n; ++b) {
        Elem const zab = o(za, c.zero(b));
        require(c.zero(l(a, b)) == zab && c.zero(r(a, b)) == zab, "braided-zero-product", {a, b});
        require(o(za, l(a, b)) == l(a, b), "braided-zero-absorbs", {a, b});
        for (Elem d = 0; d < n; ++d) {
          require(l(c.neg(l(a, b)), l(a, d)) == l(r(a, b), l(c.neg(b), d)), "braided-inverse-shift", {a, b, d});
        }
      }
    }
    diagnostics::note_identity_suite();
    return Result::pass(BraidedTable(c, l, r));
  }

  Checked<BraidedTable> check_braided(Table const& circ, Table const& left, Table const& right) {
    Classification cl = classify(FiniteSemigroup(circ));
    if (cl.kind != SemigroupKind::clifford) {
      Verdict v = cl.witness;
      v.axiom   = "circ-" + v.axiom;
      return Checked<BraidedTable>::fail(std::move(v));
    }
    return check_braided(*cl.clifford, left, right);
  }

  BraidedTable post_to_braided(PostTable const& p) {
    CliffordTable const& ct   = p.additive();
    CliffordTable const  circ = sub_adjacent(p);
    std::size_t const    n    = p.order();
    Table                left(n), right(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        Elem const ab   = p.rhd(a, b);
        left.at(a, b)   = ct.add(ct.zero(a), ab);
        right.at(a, b)  = circ.add(circ.add(circ.neg(ab), a), b);
      }
    }
    auto out = check_braided(circ, left, right);
    require(out.ok(), "post-to-braided", out.verdict().witness);
    Verdict v = check_yang_baxter(YBEMap{left, right});
    require(v.ok, "post-to-braided-braid", v.witness);
    return out.value();
  }

  PostTable braided_to_post(BraidedTable const& b) {
    CliffordTable const& c = b.circ();
    std::size_t const    n = b.order();
    Table plus = Table::generate(n, [&](Elem x, Elem y) { return c.add(x, b.left(c.neg(x), y)); });
    auto  p    = check_post(FiniteSemigroup(plus), b.left_table());
    require(p.ok(), "braided-to-post", p.verdict().witness);
    require(p->strong(), "braided-to-post-strong", {});
    for (Elem a = 0; a < n; ++a) {
      require(p->additive().neg(a) == b.left(a, c.neg(a)), "braided-to-post-negation", {a});
    }
    return p.value();
  }

  Verdict roundtrip_py(PostTable const& p) {
    if (!p.strong()) {
      Verdict why = post_axiom_violation(p.additive(), p.rhd_table(), PostAxiom::p5);
      throw PreconditionError("roundtrip_py requires a strong post structure: " + why.str());
    }
    PostTable const back = braided_to_post(post_to_braided(p));
    for (Elem a = 0; a < p.order(); ++a) {
      for (Elem x = 0; x < p.order(); ++x) {
        if (back.additive().add(a, x) != p.additive().add(a, x)) {
          return Verdict::fail("py-add", {a, x});
        }
        if (back.rhd(a, x) != p.rhd(a, x)) {
          return Verdict::fail("py-rhd", {a, x});
        }
      }
    }
    return Verdict::pass();
  }

  Verdict roundtrip_yp(BraidedTable const& b) {
    BraidedTable const back = post_to_braided(braided_to_post(b));
    for (Elem a = 0; a < b.order(); ++a) {
      for (Elem x = 0; x < b.order(); ++x) {
        if (back.circ().add(a, x) != b.circ().add(a, x)) {
          return Verdict::fail("yp-circ", {a, x});
        }
        if (back.left(a, x) != b.left(a, x)) {
          return Verdict::fail("yp-left", {a, x});
        }
        if (back.right(a, x) != b.right(a, x)) {
          return Verdict::fail("yp-right", {a, x});
        }
      }
    }
    return Verdict::pass();
  }

  YBEMap sigma_as_ybe(BraidedTable const& b) {
    YBEMap  out{b.left_table(), b.right_table()};
    Verdict v = check_yang_baxter(out);
    require(v.ok, "sigma-braid", v.witness);
    return out;
  }

}  // namespace cliffy
