// Copyright 2026 The geninv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "geninv/inverses.hpp"

// Brute-force ground truth on finite rings. The table ring below does its
// own arithmetic and shares nothing with the library except the canonical
// element order, so it can check the library and the theorems independently.
namespace geninv::oracle {

using Index = std::uint32_t;
using Set = boost::dynamic_bitset<>;

class TableRing {
 public:
  // NotEnumerable for rings over Q.
  explicit TableRing(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  std::size_t size() const { return size_; }
  bool has_star() const { return !star_.empty(); }

  Index zero() const { return zero_; }
  Index one() const { return one_; }
  Index add(Index a, Index b) const { return add_[a * size_ + b]; }
  Index mul(Index a, Index b) const { return mul_[a * size_ + b]; }
  Index neg(Index a) const { return neg_[a]; }
  Index sub(Index a, Index b) const { return add(a, neg(b)); }
  // UnsupportedInvolution when the ring has none.
  Index star(Index a) const;
  Index pow(Index a, unsigned k) const;
  Index mul3(Index a, Index b, Index c) const { return mul(mul(a, b), c); }

  // Same text as Element::str.
  std::string render(Index a) const;
  std::string render(const Set& s) const;
  // Decodes the payload directly; the ring spec must match.
  Index index_of(const Element& e) const;
  Element element(const RingPtr& ring, Index a) const;

  Set empty_set() const { return Set(size_); }
  Set singleton_zero() const;
  Set all() const;

  // Cached per element.
  const Set& rprin(Index a) const { return rprin_[a]; }  // aR
  const Set& lprin(Index a) const { return lprin_[a]; }  // Ra
  const Set& rann(Index a) const { return rann_[a]; }
  const Set& lann(Index a) const { return lann_[a]; }

  // {r : s r = 0 for all s in S} and {r : r s = 0 for all s in S}.
  Set rann_of(const Set& s) const;
  Set lann_of(const Set& s) const;
  Set left_image(Index a, const Set& s) const;   // aS
  Set right_image(const Set& s, Index a) const;  // Sa
  Set right_preimage(Index a, const Set& s) const;  // {r : ar in S}
  Set left_preimage(Index a, const Set& s) const;   // {r : ra in S}
  Set sum(const Set& s, const Set& t) const;        // {s + t}

  static bool subset(const Set& s, const Set& t) { return s.is_subset_of(t); }
  bool trivial_meet(const Set& s, const Set& t) const;
  // R = S + T with S and T meeting only in 0.
  bool direct_sum(const Set& s, const Set& t) const;
  // phi_b = rho_{S,T}: b r in S and r - b r in T for every r, with R = S (+) T.
  bool rho_right(Index b, const Set& s, const Set& t) const;
  // _b phi = rho_{S,T}: r b in S and r - r b in T for every r, with R = S (+) T.
  bool rho_left(Index b, const Set& s, const Set& t) const;
  // The S-component of 1, when R = S (+) T.
  std::optional<Index> unit_component(const Set& s, const Set& t) const;
  // The S-component of r, when R = S (+) T.
  std::optional<Index> component(const Set& s, const Set& t, Index r) const;

  // All one-sided ideals and all additive subgroups, each sorted by size and
  // then by member list.
  const std::vector<Set>& right_ideals() const;
  const std::vector<Set>& left_ideals() const;
  const std::vector<Set>& subgroups() const;
  bool is_right_ideal(const Set& s) const;
  bool is_left_ideal(const Set& s) const;

  bool idempotent(Index a) const { return mul(a, a) == a; }
  bool symmetric(Index a) const { return star(a) == a; }
  std::optional<Index> inverse(Index a) const { return inverse_[a] == kNone ? std::nullopt : std::optional(inverse_[a]); }
  bool invertible(Index a) const { return inverse_[a] != kNone; }

  // Equations (1)-(9) and the power forms, decided from the tables.
  bool satisfies(Index a, Index x, const EquationSet& eqs) const;
  // Canonical-order solution set.
  std::vector<Index> solutions(Index a, const EquationSet& eqs) const;
  Set solution_set(Index a, const EquationSet& eqs) const;
  bool regular(Index a) const { return regular_[a]; }

 private:
  static constexpr Index kNone = 0xffffffffu;
  Set closure_sums(const std::vector<Set>& seeds) const;
  std::vector<Set> lattice(const std::vector<Set>& seeds) const;

  RingSpec spec_;
  std::size_t size_ = 0;
  std::size_t dim_ = 0;  // matrix entries, or 0 for Z_n
  std::int64_t base_ = 0;
  Index zero_ = 0;
  Index one_ = 0;
  std::vector<Index> add_;
  std::vector<Index> mul_;
  std::vector<Index> neg_;
  std::vector<Index> star_;
  std::vector<Index> inverse_;
  std::vector<bool> regular_;
  std::vector<Set> rprin_, lprin_, rann_, lann_;
  mutable std::optional<std::vector<Set>> right_ideals_, left_ideals_, subgroups_;
};

// Ground truth for a predicate: every x with predicate(x), canonical order.
// NotEnumerable on infinite rings.
std::vector<Element> brute_force_set(const Element& a, const std::function<bool(const Element&)>& predicate);

// ---------------------------------------------------------------------------
// Theorem catalog.

// A power or count bound by a checker, rendered as a number.
struct Exponent {
  unsigned value;
};

struct Binding {
  const char* name;
  std::variant<Index, const Set*, Exponent> value;
};

struct Counterexample {
  std::vector<std::pair<std::string, std::string>> bindings;
  std::string detail;
};

struct Budget {
  std::optional<std::uint64_t> max_cases;
  std::optional<double> max_seconds;
};

// Collects checker outcomes; stops at the first failure, which is the first
// in the checker's canonical loop order.
class CaseSink {
 public:
  CaseSink(const TableRing& ring, const Budget& budget);
  // Records one case. `failure` names the violated clause, if any. Returns
  // false when the checker must stop.
  bool check(const std::optional<std::string>& failure, std::initializer_list<Binding> bindings);
  std::uint64_t cases() const { return cases_; }
  const std::optional<Counterexample>& counterexample() const { return counterexample_; }
  bool exhausted() const { return exhausted_; }

 private:
  const TableRing& ring_;
  Budget budget_;
  std::uint64_t cases_ = 0;
  std::optional<Counterexample> counterexample_;
  bool exhausted_ = false;
  double start_ = 0;
};

struct TheoremCase {
  std::string id;
  std::string statement;  // the claim in brief
  std::string scope;      // the ranged variables
  bool needs_involution = false;
  std::function<void(const TableRing&, CaseSink&)> check;
};

const std::vector<TheoremCase>& catalog();
const TheoremCase* find_case(std::string_view id);

struct VerificationReport {
  RingSpec ring;
  std::string theorem;
  bool applicable = true;  // false when the ring lacks a required involution
  std::uint64_t cases_checked = 0;
  std::optional<Counterexample> counterexample;
  bool complete = true;
  std::optional<double> elapsed_seconds;
  bool passed() const { return !counterexample && complete; }
};

// Unknown ids raise PreconditionError; infinite rings raise NotEnumerable.
VerificationReport verify(std::string_view id, const RingSpec& ring, const Budget& budget = {});
VerificationReport verify(const TheoremCase& theorem, const TableRing& ring, const Budget& budget = {});

}  // namespace geninv::oracle
