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

#include "cliffy/clifford.hpp"

#include <algorithm>
#include <string>

namespace cliffy {

  char const* to_string(SemigroupKind k) noexcept {
    switch (k) {
      case SemigroupKind::not_associative:
        return "not-associative";
      case SemigroupKind::semigroup:
        return "semigroup";
      case SemigroupKind::inverse:
        return "inverse";
      case SemigroupKind::clifford:
        return "clifford";
    }
    return "?";
  }

  Classification classify(FiniteSemigroup const& s) {
    Classification out;
    if (auto bad = s.associativity_violation()) {
      out.kind    = SemigroupKind::not_associative;
      out.witness = Verdict::fail("associativity", {(*bad)[0], (*bad)[1], (*bad)[2]});
      return out;
    }
    out.kind              = SemigroupKind::semigroup;
    std::size_t const n   = s.order();
    auto              add = [&s](Elem a, Elem b) { return s.add(a, b); };

    for (Elem a = 0; a < n; ++a) {
      bool regular = false;
      for (Elem x = 0; x < n && !regular; ++x) {
        regular = add(add(a, x), a) == a;
      }
      if (!regular) {
        out.witness = Verdict::fail("regularity", {a});
        return out;
      }
    }
    std::vector<Elem> idem;
    for (Elem a = 0; a < n; ++a) {
      if (add(a, a) == a) {
        idem.push_back(a);
      }
    }
    for (Elem e : idem) {
      for (Elem f : idem) {
        if (add(e, f) != add(f, e)) {
          out.witness = Verdict::fail("idempotents-commute", {std::min(e, f), std::max(e, f)});
          return out;
        }
      }
    }
    std::vector<Elem> inv(n);
    for (Elem a = 0; a < n; ++a) {
      std::size_t found = 0;
      for (Elem x = 0; x < n; ++x) {
        if (add(add(a, x), a) == a && add(add(x, a), x) == x) {
          inv[a] = x;
          ++found;
        }
      }
      // Regular with commuting idempotents forces exactly one inverse.
      detail::require(found == 1, "unique-inverse", {a});
    }
    out.kind     = SemigroupKind::inverse;
    out.inverses = inv;
    for (Elem a = 0; a < n; ++a) {
      if (add(inv[a], a) != add(a, inv[a])) {
        out.witness = Verdict::fail("clifford", {a});
        return out;
      }
    }
    out.kind     = SemigroupKind::clifford;
    out.witness  = Verdict::pass();
    out.clifford = CliffordTable(s, std::move(inv));
    return out;
  }

  CliffordTable CliffordTable::from(FiniteSemigroup s) {
    Classification c = classify(s);
    if (c.kind != SemigroupKind::clifford) {
      throw VerificationError(c.witness);
    }
    return std::move(*c.clifford);
  }

  CliffordTable CliffordTable::from(Table add, std::string name) {
    return from(FiniteSemigroup(std::move(add), std::move(name)));
  }

  CliffordTable::CliffordTable(FiniteSemigroup s, std::vector<Elem> neg)
      : _s(std::move(s)), _neg(std::move(neg)) {
    std::size_t const n = order();
    for (Elem a = 0; a < n; ++a) {
      if (is_idempotent(a)) {
        _idempotents.push_back(a);
      }
    }
    _hclasses.resize(_idempotents.size());
    _hclass_of.resize(n);
    for (Elem a = 0; a < n; ++a) {
      auto it = std::lower_bound(_idempotents.begin(), _idempotents.end(), zero(a));
      std::size_t const i = static_cast<std::size_t>(it - _idempotents.begin());
      _hclass_of[a]       = i;
      _hclasses[i].push_back(a);
    }
    _commutative = _s.is_commutative();
    check_identities();
  }

  Elem CliffordTable::sum(std::initializer_list<Elem> terms) const noexcept {
    auto it  = terms.begin();
    Elem acc = *it;
    for (++it; it != terms.end(); ++it) {
      acc = add(acc, *it);
    }
    return acc;
  }

  bool CliffordTable::is_central(Elem x) const noexcept {
    for (Elem y = 0; y < order(); ++y) {
      if (add(x, y) != add(y, x)) {
        return false;
      }
    }
    return true;
  }

  std::optional<Elem> CliffordTable::identity() const noexcept {
    for (Elem e : _idempotents) {
      bool ok = true;
      for (Elem a = 0; a < order() && ok; ++a) {
        ok = add(e, a) == a && add(a, e) == a;
      }
      if (ok) {
        return e;
      }
    }
    return std::nullopt;
  }

  void CliffordTable::check_identities() const {
    using detail::require;
    std::size_t const n = order();
    for (Elem a = 0; a < n; ++a) {
      require(neg(neg(a)) == a, "double-negation", {a});
      require(zero(neg(a)) == zero(a), "zero-of-negative", {a});
      require(sub(a, a) == zero(a), "zero-two-sided", {a});
      require(add(zero(a), a) == a, "zero-is-identity", {a});
      for (Elem b = 0; b < n; ++b) {
        require(neg(add(a, b)) == sub(neg(b), a), "negation-reverses", {a, b});
        require(zero(add(a, b)) == add(zero(a), zero(b)), "zero-additive", {a, b});
        require(add(zero(a), b) == add(b, zero(a)), "idempotents-central", {a, b});
      }
    }
    diagnostics::note_identity_suite();
  }

  std::size_t SemilatticeDecomposition::component_of(Elem a) const {
    return _component_of.at(a);
  }

  Elem SemilatticeDecomposition::local_index(Elem a) const {
    return _local.at(a);
  }

  Table SemilatticeDecomposition::reassemble() const {
    std::size_t const n = _local.size();
    Table             t(n);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        std::size_t const alpha = _component_of[a];
        std::size_t const beta  = _component_of[b];
        std::size_t const m     = meet(static_cast<Elem>(alpha), static_cast<Elem>(beta));
        Elem const x = structure_maps.at({alpha, m})[_local[a]];
        Elem const y = structure_maps.at({beta, m})[_local[b]];
        t.at(a, b)   = components[m].members[components[m].group(x, y)];
      }
    }
    return t;
  }

  SemilatticeDecomposition decompose(CliffordTable const& ct) {
    using detail::require;
    SemilatticeDecomposition d;
    std::size_t const        n = ct.order();
    std::size_t const        k = ct.idempotents().size();
    d._component_of.resize(n);
    d._local.resize(n);
    for (std::size_t i = 0; i < k; ++i) {
      auto const& members = ct.hclasses()[i];
      for (Elem j = 0; j < members.size(); ++j) {
        d._component_of[members[j]] = i;
        d._local[members[j]]        = j;
      }
    }
    for (std::size_t i = 0; i < k; ++i) {
      SemilatticeDecomposition::Component c;
      c.identity = ct.idempotents()[i];
      c.members  = ct.hclasses()[i];
      c.group    = Table(c.members.size());
      for (Elem x = 0; x < c.members.size(); ++x) {
        for (Elem y = 0; y < c.members.size(); ++y) {
          Elem const s = ct.add(c.members[x], c.members[y]);
          require(d._component_of[s] == i, "hclass-closed", {c.members[x], c.members[y]});
          c.group.at(x, y) = d._local[s];
        }
      }
      d.components.push_back(std::move(c));
    }
    d.meet = Table(k);
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        Elem const m = ct.add(ct.idempotents()[i], ct.idempotents()[j]);
        require(ct.is_idempotent(m), "meet-idempotent", {ct.idempotents()[i], ct.idempotents()[j]});
        d.meet.at(i, j) = static_cast<Elem>(d._component_of[m]);
      }
    }
    // phi_{f,e}(a) = e + a for e <= f.
    for (std::size_t f = 0; f < k; ++f) {
      for (std::size_t e = 0; e < k; ++e) {
        Elem const fe = ct.idempotents()[f];
        Elem const ee = ct.idempotents()[e];
        if (!ct.leq(ee, fe)) {
          continue;
        }
        auto const&       src = d.components[f].members;
        std::vector<Elem> phi(src.size());
        for (Elem x = 0; x < src.size(); ++x) {
          Elem const img = ct.add(ee, src[x]);
          require(d._component_of[img] == e, "structure-map-target", {fe, ee, src[x]});
          phi[x] = d._local[img];
        }
        for (Elem x = 0; x < src.size(); ++x) {
          for (Elem y = 0; y < src.size(); ++y) {
            require(phi[d.components[f].group(x, y)]
                        == d.components[e].group(phi[x], phi[y]),
                    "structure-map-homomorphism",
                    {fe, ee, src[x], src[y]});
          }
        }
        if (e == f) {
          for (Elem x = 0; x < src.size(); ++x) {
            require(phi[x] == x, "structure-map-identity", {fe, src[x]});
          }
        }
        d.structure_maps[{f, e}] = std::move(phi);
      }
    }
    for (auto const& [fe1, phi1] : d.structure_maps) {
      for (auto const& [fe2, phi2] : d.structure_maps) {
        if (fe1.second != fe2.first) {
          continue;
        }
        auto const& direct = d.structure_maps.at({fe1.first, fe2.second});
        for (Elem x = 0; x < phi1.size(); ++x) {
          require(phi2[phi1[x]] == direct[x],
                  "structure-map-composition",
                  {ct.idempotents()[fe1.first],
                   ct.idempotents()[fe1.second],
                   ct.idempotents()[fe2.second]});
        }
      }
    }
    Table const re = d.reassemble();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        require(re(a, b) == ct.add(a, b), "reassembly", {a, b});
      }
    }
    diagnostics::note_identity_suite();
    return d;
  }

  Checked<Subsemigroup> clifford_subsemigroup(CliffordTable const& ct,
                                              std::vector<Elem>    members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    std::vector<std::optional<Elem>> local(ct.order());
    for (Elem i = 0; i < members.size(); ++i) {
      if (members[i] >= ct.order()) {
        throw PreconditionError("subset member " + std::to_string(members[i])
                                + " out of range");
      }
      local[members[i]] = i;
    }
    if (members.empty()) {
      return Checked<Subsemigroup>::fail(Verdict::fail("nonempty"));
    }
    for (Elem a : members) {
      for (Elem b : members) {
        if (!local[ct.add(a, b)]) {
          return Checked<Subsemigroup>::fail(Verdict::fail("closed-add", {a, b}));
        }
      }
    }
    for (Elem a : members) {
      if (!local[ct.neg(a)]) {
        return Checked<Subsemigroup>::fail(Verdict::fail("closed-neg", {a}));
      }
    }
    std::size_t const m = members.size();
    Table             t(m);
    std::vector<std::string> labels;
    for (Elem i = 0; i < m; ++i) {
      labels.push_back(ct.semigroup().label(members[i]));
      for (Elem j = 0; j < m; ++j) {
        t.at(i, j) = *local[ct.add(members[i], members[j])];
      }
    }
    Subsemigroup sub{CliffordTable::from(FiniteSemigroup(std::move(t), ct.name() + "-sub", std::move(labels))),
                     std::move(members),
                     std::move(local)};
    return Checked<Subsemigroup>::pass(std::move(sub));
  }

  Verdict check_normal(CliffordTable const& ct, std::vector<Elem> const& members) {
    std::vector<bool> in(ct.order(), false);
    for (Elem a : members) {
      if (a >= ct.order()) {
        throw PreconditionError("subset member " + std::to_string(a) + " out of range");
      }
      in[a] = true;
    }
    if (members.empty()) {
      return Verdict::fail("normal-nonempty");
    }
    std::size_t const n = ct.order();
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        if (in[a] && in[b] && !in[ct.add(a, b)]) {
          return Verdict::fail("normal-closed-add", {a, b});
        }
      }
    }
    for (Elem a = 0; a < n; ++a) {
      if (in[a] && !in[ct.neg(a)]) {
        return Verdict::fail("normal-closed-neg", {a});
      }
    }
    for (Elem e : ct.idempotents()) {
      if (!in[e]) {
        return Verdict::fail("normal-idempotents", {e});
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem m = 0; m < n; ++m) {
        if (in[m] && !in[ct.sum({ct.neg(a), m, a})]) {
          return Verdict::fail("normal-conjugation", {a, m});
        }
      }
    }
    return Verdict::pass();
  }

  NormalSubsemigroup::NormalSubsemigroup(CliffordTable ambient, std::vector<Elem> members)
      : _ambient(std::move(ambient)), _members(std::move(members)) {
    Verdict v = check_normal(_ambient, _members);
    if (!v) {
      throw VerificationError(std::move(v));
    }
    std::sort(_members.begin(), _members.end());
    _members.erase(std::unique(_members.begin(), _members.end()), _members.end());
    _in.assign(_ambient.order(), false);
    for (Elem a : _members) {
      _in[a] = true;
    }
  }

  Quotient quotient(NormalSubsemigroup const& nsub) {
    using detail::require;
    CliffordTable const& ct = nsub.ambient();
    std::size_t const    n  = ct.order();
    auto related = [&](Elem a, Elem b) {
      return ct.zero(a) == ct.zero(b) && nsub.contains(ct.add(ct.neg(a), b));
    };
    std::vector<Elem>              cls(n);
    std::vector<std::vector<Elem>> classes;
    for (Elem a = 0; a < n; ++a) {
      bool placed = false;
      for (Elem c = 0; c < classes.size() && !placed; ++c) {
        if (related(classes[c][0], a)) {
          cls[a] = c;
          classes[c].push_back(a);
          placed = true;
        }
      }
      if (!placed) {
        cls[a] = static_cast<Elem>(classes.size());
        classes.push_back({a});
      }
    }
    // rho_N must be an equivalence (checked against every member).
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        require(related(a, b) == (cls[a] == cls[b]), "rho-equivalence", {a, b});
      }
    }
    std::size_t const k = classes.size();
    Table             t(k);
    for (Elem i = 0; i < k; ++i) {
      for (Elem j = 0; j < k; ++j) {
        t.at(i, j) = cls[ct.add(classes[i][0], classes[j][0])];
      }
    }
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        require(t(cls[a], cls[b]) == cls[ct.add(a, b)], "rho-congruence", {a, b});
      }
    }
    Classification c = classify(FiniteSemigroup(t, ct.name() + "/N"));
    require(c.kind == SemigroupKind::clifford, "quotient-clifford", c.witness.witness);
    Quotient q{std::move(*c.clifford), ElementMap(k, cls), std::move(classes)};
    for (Elem a = 0; a < n; ++a) {
      require(q.table.neg(cls[a]) == cls[ct.neg(a)], "projection-negation", {a});
      require(q.table.zero(cls[a]) == cls[ct.zero(a)], "projection-zero", {a});
    }
    return q;
  }

}  // namespace cliffy
