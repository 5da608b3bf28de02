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

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "geninv/ring.hpp"
#include "geninv/subspace.hpp"

namespace geninv {

enum class Side { right, left };

inline Side opposite(Side s) { return s == Side::right ? Side::left : Side::right; }
inline const char* side_name(Side s) { return s == Side::right ? "right" : "left"; }

// A one-sided ideal. Matrix rings use the subspace form: a right ideal is
// {X : col(X) in V}, a left ideal {X : row(X) in W}, with row vectors of W
// stored as columns. Z_n uses the extensional form: a bitset over the
// canonical enumeration.
class SidedIdeal {
 public:
  using ElementSet = boost::dynamic_bitset<>;

  static SidedIdeal principal(const Element& a, Side side);     // aR or Ra
  static SidedIdeal annihilator(const Element& a, Side side);   // rann(a) or lann(a)
  static SidedIdeal whole(const RingPtr& ring, Side side);
  static SidedIdeal zero(const RingPtr& ring, Side side);
  // Explicit element set; must already be an ideal of the given side.
  static SidedIdeal from_elements(const RingPtr& ring, Side side, const std::vector<Element>& elements);
  // Matrix rings: columns of `vectors` span V (right) or W (left).
  static SidedIdeal from_vectors(const RingPtr& ring, Side side, const Matrix& vectors);
  static SidedIdeal from_subspace(const RingPtr& ring, Side side, Subspace space);
  // Extensional form of a set already known to be an ideal; no closure check.
  static SidedIdeal from_element_set_unchecked(const RingPtr& ring, Side side, ElementSet set);

  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }
  Side side() const { return side_; }

  bool is_subspace() const { return std::holds_alternative<Subspace>(repr_); }
  const Subspace& subspace() const { return std::get<Subspace>(repr_); }
  const ElementSet& element_set() const { return std::get<ElementSet>(repr_); }

  bool contains(const Element& x) const;
  bool is_zero() const;
  bool is_whole() const;

  // Members in canonical order; finite rings only.
  std::vector<Element> members() const;
  std::optional<std::uint64_t> cardinality() const;
  // Finite set whose additive and one-sided multiplicative closure is the ideal.
  std::vector<Element> generators() const;

  // Same ideal in extensional form; finite rings only.
  ElementSet to_element_set() const;

  std::string describe() const;

  bool operator==(const SidedIdeal& other) const;
  bool operator!=(const SidedIdeal& other) const { return !(*this == other); }

 private:
  SidedIdeal(RingPtr ring, Side side, std::variant<ElementSet, Subspace> repr)
      : ring_(std::move(ring)), side_(side), repr_(std::move(repr)) {}

  RingPtr ring_;
  Side side_;
  std::variant<ElementSet, Subspace> repr_;
};

bool ideal_subset(const SidedIdeal& inner, const SidedIdeal& outer);
SidedIdeal intersection(const SidedIdeal& a, const SidedIdeal& b);
SidedIdeal ideal_sum(const SidedIdeal& a, const SidedIdeal& b);

// aS for a right ideal S, Sa for a left ideal S.
SidedIdeal multiply(const Element& a, const SidedIdeal& ideal);
// {r : ar in T} for a right ideal T, {r : ra in T} for a left ideal T.
SidedIdeal preimage(const Element& a, const SidedIdeal& ideal);
// lann(S) for a right ideal S (a left ideal), rann(S) for a left ideal S.
SidedIdeal annihilator_of(const SidedIdeal& ideal);

// Some x in S with a x = target (right S) or x a = target (left S).
std::optional<Element> solve_in_ideal(const SidedIdeal& ideal, const Element& a, const Element& target);

// R = S + T with S and T meeting in {0}.
class DirectSum {
 public:
  const SidedIdeal& first() const { return first_; }
  const SidedIdeal& second() const { return second_; }
  // S-component of 1.
  const Element& unit_first() const { return unit_first_; }
  // (s, t) with r = s + t.
  std::pair<Element, Element> decompose(const Element& r) const;

 private:
  friend std::optional<DirectSum> direct_sum(const SidedIdeal&, const SidedIdeal&);
  DirectSum(SidedIdeal first, SidedIdeal second, Element unit_first)
      : first_(std::move(first)), second_(std::move(second)), unit_first_(std::move(unit_first)) {}

  SidedIdeal first_;
  SidedIdeal second_;
  Element unit_first_;
};

std::optional<DirectSum> direct_sum(const SidedIdeal& s, const SidedIdeal& t);
bool is_direct_sum(const SidedIdeal& s, const SidedIdeal& t);

std::optional<SidedIdeal> complement(const SidedIdeal& s);

// Every a in I, b in J satisfy a*b = 0 (flavor right) or ab* = 0 (flavor left).
bool orthogonal(const SidedIdeal& i, const SidedIdeal& j, Side flavor);

}  // namespace geninv
