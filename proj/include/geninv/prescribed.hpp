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

#include <optional>
#include <string>
#include <vector>

#include "geninv/inverses.hpp"

namespace geninv {

// Up to four prescribed ideals. For {1}-inverses they bind xaR, rann(ax),
// Rax and lann(xa); for outer and reflexive inverses they bind xR, rann(x),
// Rx and lann(x).
struct IdealConstraints {
  std::optional<SidedIdeal> right_prin;  // right ideal
  std::optional<SidedIdeal> right_ann;   // right ideal
  std::optional<SidedIdeal> left_prin;   // left ideal
  std::optional<SidedIdeal> left_ann;    // left ideal

  // Throws StructuralError on a wrong side, a ring mismatch or an empty bundle.
  void validate(const Ring& ring) const;
};

enum class ConstraintShape {
  prin_ann_right,  // rprin, rann
  prin_ann_left,   // lprin, lann
  prin_prin,       // rprin, lprin
  ann_ann,         // rann, lann
  right_prin,
  right_ann,
  left_prin,
  left_ann,
};

// Throws StructuralError unless the bundle has one of the eight supported shapes.
ConstraintShape constraint_shape(const IdealConstraints& c);
const char* shape_name(ConstraintShape shape);
bool is_single(ConstraintShape shape);

// {left * z * right + (1 - za) y (1 - az) : z, y} with z ranging over one
// inner inverse (inner_fixed) or over all of a{1}.
struct ParamFamily {
  ConstraintShape shape;
  IdealConstraints constraints;
  Element subject;
  Element left_mult;
  Element right_mult;
  Element inner;  // chosen inner inverse
  Element base;   // left_mult * inner * right_mult
  bool inner_fixed = true;
  std::string free_parameter_role;

  Element instantiate(const Element& y) const;
  Element instantiate(const Element& inner_inverse, const Element& y) const;
  // The constrained {1}-inverse condition itself, decided exactly.
  bool contains(const Element& x) const;
  // Distinct members in canonical order; finite rings only.
  std::vector<Element> members() const;
};

// The {1}-inverse family for the bundle, or nothing when a required direct
// sum fails or a{1} is empty. `why_not` receives the failed condition.
std::optional<ParamFamily> one_inverse_family(const Element& a, const IdealConstraints& c,
                                              std::string* why_not = nullptr);

// Whether x is a {1}-inverse meeting the bundle.
bool one_inverse_matches(const Element& a, const Element& x, const IdealConstraints& c);

struct SolutionSet {
  std::vector<Element> members;      // {z + (1 - za) y (1 - az) : y}
  std::vector<Element> constrained;  // {x in a{1} : constraints hold}
  bool equal = false;
};

// Finite rings. `fixed_inner` must be an inner inverse meeting the bundle,
// with the bundle's direct sums in place; PreconditionError otherwise.
SolutionSet one_inverse_solution_set(const Element& a, const IdealConstraints& c, const Element& fixed_inner);

// The outer inverse with the prescribed ideals, or with reflexive set the
// {1,2}-inverse. Only the four two-ideal shapes are accepted.
InverseReport outer_with(const Element& a, const IdealConstraints& c, bool reflexive);

// Whether x is an outer (or reflexive) inverse of a carrying exactly the
// bundle's ideals.
bool outer_matches(const Element& a, const Element& x, const IdealConstraints& c, bool reflexive);

// Equivalent clause list for x as the reflexive inverse with the bundle's
// ideals, plus the tabulated isomorphism clause on finite rings for the
// one-sided two-ideal shapes.
Characterization reflexive_characterize(const Element& a, const Element& x, const IdealConstraints& c);

// Exists v, w with vz = vy = y = yw = zw. Exact on every backend.
bool mitsch_leq(const Element& y, const Element& z);

struct MitschReport {
  std::vector<Element> lower;  // Y set
  std::vector<Element> upper;  // Z set
  std::vector<Element> both;   // Y intersect Z
  bool all_pairs_related = false;
  std::optional<Element> outer;
  bool outer_is_intersection = false;
  bool outer_is_max_lower = false;
  bool outer_is_min_upper = false;
  bool consistent() const;
};

MitschReport mitsch_extremes(const Element& a, const IdealConstraints& c);

}  // namespace geninv
