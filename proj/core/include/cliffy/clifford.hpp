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

#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cliffy/semigroup.hpp"

namespace cliffy {

  struct Classification;

  // A semigroup known to be Clifford: inverse, with -a+a = a-a for all a.
  // Construction precomputes inverses, idempotents and the H-classes, and
  // asserts the basic identities every Clifford semigroup satisfies.
  class CliffordTable {
   public:
    CliffordTable() = default;

    // Throws VerificationError carrying the classification witness when `s`
    // is not Clifford.
    static CliffordTable from(FiniteSemigroup s);
    static CliffordTable from(Table add, std::string name = {});

    std::size_t order() const noexcept {
      return _s.order();
    }
    Elem add(Elem a, Elem b) const noexcept {
      return _s.add(a, b);
    }
    Elem neg(Elem a) const noexcept {
      return _neg[a];
    }
    // a - b, i.e. a + (-b).
    Elem sub(Elem a, Elem b) const noexcept {
      return _s.add(a, _neg[b]);
    }
    // a^0 = -a + a, the identity of the H-class of a.
    Elem zero(Elem a) const noexcept {
      return _s.add(_neg[a], a);
    }
    // Left-to-right sum of the terms.
    Elem sum(std::initializer_list<Elem> terms) const noexcept;

    bool is_idempotent(Elem a) const noexcept {
      return _s.add(a, a) == a;
    }
    std::vector<Elem> const& idempotents() const noexcept {
      return _idempotents;
    }
    // H-classes are indexed like idempotents(): class i has identity
    // idempotents()[i].
    std::vector<std::vector<Elem>> const& hclasses() const noexcept {
      return _hclasses;
    }
    std::size_t hclass_index(Elem a) const noexcept {
      return _hclass_of[a];
    }
    std::vector<Elem> const& hclass(Elem a) const noexcept {
      return _hclasses[_hclass_of[a]];
    }
    // Natural order on idempotents: e <= f iff e + f = e.
    bool leq(Elem e, Elem f) const noexcept {
      return _s.add(e, f) == e;
    }

    bool is_commutative() const noexcept {
      return _commutative;
    }
    bool is_central(Elem x) const noexcept;
    // Identity element of the whole semigroup, if any.
    std::optional<Elem> identity() const noexcept;

    FiniteSemigroup const& semigroup() const noexcept {
      return _s;
    }
    Table const& table() const noexcept {
      return _s.table();
    }
    std::string const& name() const noexcept {
      return _s.name();
    }

    bool operator==(CliffordTable const& that) const {
      return _s == that._s;
    }

   private:
    CliffordTable(FiniteSemigroup s, std::vector<Elem> neg);
    void check_identities() const;

    FiniteSemigroup                _s;
    std::vector<Elem>              _neg;
    std::vector<Elem>              _idempotents;
    std::vector<std::vector<Elem>> _hclasses;
    std::vector<std::size_t>       _hclass_of;
    bool                           _commutative = false;

    friend Classification classify(FiniteSemigroup const&);
  };

  enum class SemigroupKind { not_associative, semigroup, inverse, clifford };

  char const* to_string(SemigroupKind k) noexcept;

  struct Classification {
    SemigroupKind kind = SemigroupKind::not_associative;
    // Failure of the next stronger class; `ok` when kind is clifford.
    Verdict witness;
    // Unique inverses, filled when kind >= inverse.
    std::vector<Elem>            inverses;
    std::optional<CliffordTable> clifford;
  };

  // Witness axioms: "associativity" (a,b,c), "regularity" (a),
  // "unique-inverse" (a), "idempotents-commute" (e,f), "clifford" (a).
  Classification classify(FiniteSemigroup const& s);

  // Strong semilattice of groups view of a Clifford semigroup.
  struct SemilatticeDecomposition {
    struct Component {
      Elem              identity;
      std::vector<Elem> members;  // ascending
      Table             group;    // in local indices
    };
    std::vector<Component> components;  // indexed like idempotents()
    Table                  meet;        // on component indices
    // structure_maps[{f, e}] for e <= f sends local indices of component f
    // to local indices of component e.
    std::map<std::pair<std::size_t, std::size_t>, std::vector<Elem>>
        structure_maps;

    std::size_t component_of(Elem a) const;
    Elem        local_index(Elem a) const;
    // Rebuilds the Cayley table via a + b = phi(a) + phi(b) in G_{a0+b0}.
    Table reassemble() const;

   private:
    std::vector<std::size_t> _component_of;
    std::vector<Elem>        _local;
    friend SemilatticeDecomposition decompose(CliffordTable const&);
  };

  // Verifies the structure maps are homomorphisms that compose, and that
  // reassemble() reproduces the table (InvariantViolation otherwise).
  SemilatticeDecomposition decompose(CliffordTable const& ct);

  // A subset closed under + and -, with its own dense indexing.
  struct Subsemigroup {
    CliffordTable                    table;
    std::vector<Elem>                embedding;  // local -> ambient
    std::vector<std::optional<Elem>> local;      // ambient -> local
  };

  // Fails with "closed-add" (a,b) or "closed-neg" (a).
  Checked<Subsemigroup> clifford_subsemigroup(CliffordTable const&     ct,
                                              std::vector<Elem> members);

  // Normal subsemigroup: closed under + and -, contains every idempotent and
  // -a + n + a lies in it. Fails with "normal-nonempty", "normal-closed-add"
  // (m,n), "normal-closed-neg" (m), "normal-idempotents" (e) or
  // "normal-conjugation" (a,n).
  Verdict check_normal(CliffordTable const& ct, std::vector<Elem> const& members);

  class NormalSubsemigroup {
   public:
    // Throws VerificationError with the check_normal verdict.
    NormalSubsemigroup(CliffordTable ambient, std::vector<Elem> members);

    CliffordTable const& ambient() const noexcept {
      return _ambient;
    }
    std::vector<Elem> const& members() const noexcept {
      return _members;
    }
    bool contains(Elem a) const noexcept {
      return _in[a];
    }

   private:
    CliffordTable     _ambient;
    std::vector<Elem> _members;
    std::vector<bool> _in;
  };

  struct Quotient {
    CliffordTable                  table;
    ElementMap                     projection;
    std::vector<std::vector<Elem>> classes;  // ordered by least member
  };

  // S / rho_N with a rho b iff a^0 = b^0 and -a + b in N.
  Quotient quotient(NormalSubsemigroup const& n);

}  // namespace cliffy
