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

#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geninv/projector.hpp"

namespace geninv {

// Equations on (a, x):
//   1: axa = a     2: xax = x     3: (ax)* = ax   4: (xa)* = xa   5: ax = xa
//   6: xa^2 = a    7: ax^2 = x    8: a^2x = a     9: x^2a = x
//   1^k: xa^{k+1} = a^k           ^k1: a^{k+1}x = a^k
class EquationSet {
 public:
  EquationSet() = default;
  EquationSet(std::initializer_list<int> equations);

  // Comma separated: "1,2,5", "1^2" (x a^3 = a^2), "^21" (a^3 x = a^2).
  static EquationSet parse(std::string_view text);

  EquationSet& add(int equation);
  EquationSet& add_power_left(unsigned k);
  EquationSet& add_power_right(unsigned k);

  bool has(int equation) const { return equation >= 1 && equation <= 9 && bits_.test(equation); }
  const std::optional<unsigned>& power_left() const { return power_left_; }
  const std::optional<unsigned>& power_right() const { return power_right_; }

  bool empty() const { return bits_.none() && !power_left_ && !power_right_; }
  bool needs_involution() const { return has(3) || has(4); }

  std::string str() const;

  bool operator==(const EquationSet&) const = default;

 private:
  std::bitset<10> bits_;
  std::optional<unsigned> power_left_;
  std::optional<unsigned> power_right_;
};

bool satisfies(const Element& a, const Element& x, const EquationSet& equations);

// {x : satisfies(a, x, equations)} in canonical order; finite rings only.
std::vector<Element> enumerate_inverse_set(const Element& a, const EquationSet& equations);
std::uint64_t count_inverse_set(const Element& a, const EquationSet& equations);

enum class InverseStatus { unique, family, none };

struct NamedProjector {
  std::string label;
  Projector projector;
};

struct InverseReport {
  InverseReport(Element subject_, std::string inverse_)
      : subject(std::move(subject_)), inverse(std::move(inverse_)) {}

  Element subject;
  std::string inverse;
  InverseStatus status = InverseStatus::none;
  std::optional<Element> value;
  std::vector<Element> members;
  std::optional<std::uint64_t> count;
  EquationSet satisfied;
  std::optional<unsigned> index;
  std::string reason;
  std::vector<NamedProjector> projectors;
  std::vector<std::pair<std::string, bool>> checks;

  bool found() const { return status != InverseStatus::none; }
};

InverseReport unique_report(const Element& a, std::string inverse, const Element& x, EquationSet satisfied);
InverseReport none_report(const Element& a, std::string inverse, std::string reason);

// Some x with axa = a: rank factorization on matrix rings, first solution in
// canonical order on Z_n.
std::optional<Element> inner_inverse(const Element& a);

// Some z with aza = a and left * z * right = target: a linear system in the
// entries of z on matrix rings, the first solution in canonical order on Z_n.
std::optional<Element> inner_inverse_with(const Element& a, const Element& left, const Element& right,
                                          const Element& target);

// Least k with rank(a^k) = rank(a^{k+1}) on matrix rings; on Z_n the least
// k <= n with a{2,5,1^k} nonempty.
InverseReport drazin_inverse(const Element& a);
InverseReport group_inverse(const Element& a);

// {1,3}- and {1,4}-inverses: (a*a)^(1) a* and a* (aa*)^(1) when the rank
// conditions allow.
std::optional<Element> one_three_inverse(const Element& a);
std::optional<Element> one_four_inverse(const Element& a);

InverseReport moore_penrose(const Element& a);
InverseReport core_inverse(const Element& a);
InverseReport dual_core_inverse(const Element& a);

struct MapSummary {
  std::string label;  // "phi_ax", "phi_xa", "ax_phi", "xa_phi"
  Element generator;
  Side side;
  bool is_projector = false;
  std::optional<SidedIdeal> onto;
  std::optional<SidedIdeal> along;
};

struct Characterization {
  std::string name;
  bool by_equations = false;
  std::vector<std::pair<std::string, bool>> clauses;
  bool consistent() const;
};

struct ProjectorRelations {
  std::vector<MapSummary> maps;
  std::vector<Characterization> characterizations;
  unsigned power = 1;  // exponent l used in the Drazin clauses
  bool consistent() const;
};

ProjectorRelations classify_projector_relations(const Element& a, const Element& x);

// Exponent large enough to exceed every Drazin index in the ring.
unsigned drazin_bound(const Ring& ring);

}  // namespace geninv
