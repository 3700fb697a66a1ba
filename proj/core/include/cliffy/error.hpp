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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cliffy {

  // Elements of every finite structure are dense indices 0..n-1.
  using Elem = std::uint32_t;

  // Outcome of checking an axiom family. On failure `axiom` names the first
  // violated law and `witness` is the lexicographically smallest tuple.
  struct Verdict {
    bool              ok = true;
    std::string       axiom;
    std::vector<Elem> witness;

    static Verdict pass() {
      return {};
    }
    static Verdict fail(std::string axiom, std::vector<Elem> witness = {}) {
      return Verdict{false, std::move(axiom), std::move(witness)};
    }

    explicit operator bool() const noexcept {
      return ok;
    }

    // "OK" or "FAIL <axiom> witness=(i,j,k)".
    std::string str() const;

    bool operator==(Verdict const&) const = default;
  };

  class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Caller handed in something outside the operation's domain (bad sizes,
  // wrong weight, out-of-range indices).
  class PreconditionError : public Error {
   public:
    using Error::Error;
  };

  // Enumeration exceeded its order or node budget.
  class ResourceError : public Error {
   public:
    using Error::Error;
  };

  // A hypothesis failed on concrete data; carries the witness.
  class VerificationError : public PreconditionError {
   public:
    explicit VerificationError(Verdict v)
        : PreconditionError(v.str()), _verdict(std::move(v)) {}
    Verdict const& verdict() const noexcept {
      return _verdict;
    }

   private:
    Verdict _verdict;
  };

  // An identity that must follow from already verified axioms did not hold.
  // Either the input violated an unchecked assumption or there is a bug.
  class InvariantViolation : public Error {
   public:
    explicit InvariantViolation(Verdict v)
        : Error("invariant " + v.str()), _verdict(std::move(v)) {}
    Verdict const& verdict() const noexcept {
      return _verdict;
    }

   private:
    Verdict _verdict;
  };

  // Either a validated value or the verdict explaining why there is none.
  template <typename T>
  class Checked {
   public:
    static Checked pass(T value) {
      Checked c;
      c._value = std::move(value);
      return c;
    }
    static Checked fail(Verdict v) {
      Checked c;
      c._verdict = std::move(v);
      return c;
    }

    bool ok() const noexcept {
      return _value.has_value();
    }
    explicit operator bool() const noexcept {
      return ok();
    }

    T const& value() const {
      if (!_value) {
        throw VerificationError(_verdict);
      }
      return *_value;
    }
    T const& operator*() const {
      return value();
    }
    T const* operator->() const {
      return &value();
    }
    Verdict const& verdict() const noexcept {
      return _verdict;
    }

   private:
    Checked() = default;
    std::optional<T> _value;
    Verdict          _verdict;
  };

  namespace detail {
    // Throws InvariantViolation when `cond` is false.
    void require(bool cond, char const* identity, std::vector<Elem> witness);
  }  // namespace detail

  namespace diagnostics {
    // Number of derived-identity suites evaluated (and passed) so far.
    std::uint64_t identity_suites_run() noexcept;
    void          note_identity_suite() noexcept;
  }  // namespace diagnostics

}  // namespace cliffy
