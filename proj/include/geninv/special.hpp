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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "geninv/prescribed.hpp"

namespace geninv {

// ---------------------------------------------------------------------------
// Condition grids: groups of labelled conditions and a target. The grid
// holds when, for every choice of one condition per group, the chosen
// conditions all hold exactly when the target holds.

struct GridCondition {
  std::string label;
  bool holds = false;
};

struct ConditionGrid {
  std::string name;
  bool target = false;
  std::vector<std::vector<GridCondition>> groups;

  std::uint64_t combinations() const;
  // First choice, in odometer order with the last group fastest, whose
  // conjunction differs from the target.
  std::optional<std::vector<std::size_t>> first_mismatch() const;
  bool consistent() const { return !first_mismatch().has_value(); }
  std::string describe(const std::vector<std::size_t>& choice) const;
};

// ---------------------------------------------------------------------------
// Classes of {1}-inverses defined with the involution.

enum class StarClass { c13, c14, c134, c136, c148, c137, c149 };

// Accepts "13" or "1,3" style tags.
StarClass parse_star_class(std::string_view tag);
const char* star_class_tag(StarClass cls);
EquationSet star_class_equations(StarClass cls);
const std::vector<StarClass>& all_star_classes();
// {1,3,6} and {1,4,8}: the projector forms imply membership but are not
// equivalent to it.
bool star_class_sufficient_only(StarClass cls);

struct StarMembership {
  bool by_equations = false;
  bool sufficient_only = false;
  std::vector<std::pair<std::string, bool>> projector_forms;
  // Every form agrees with the equations, or only implies them when
  // sufficient_only is set.
  bool consistent() const;
};

StarMembership star_class_member(const Element& a, const Element& x, StarClass cls);

struct StarSetForm {
  std::string label;
  std::vector<Element> members;
};

struct StarClassSet {
  StarClass cls;
  std::vector<Element> members;   // by the equations, canonical order
  std::vector<StarSetForm> forms; // {x in a{1} : ideal conditions}
  // Every form equals members, or is contained in it when sufficient_only.
  bool identities_hold = false;
  // For the sufficient-only classes: whether equality happened to hold.
  bool equality_observed = false;
};

// Finite rings with involution.
StarClassSet star_class_set(const Element& a, StarClass cls);

// ---------------------------------------------------------------------------
// Weighted Moore-Penrose and weighted core inverses. Weights must be
// invertible and symmetric; PreconditionError names the violated axiom.

void require_weight(const Element& weight, const char* name);

// x in a{1,2} with (eax)* = eax and (fxa)* = fxa.
bool is_weighted_mp(const Element& a, const Element& x, const Element& e, const Element& f);
InverseReport weighted_mp(const Element& a, const Element& e, const Element& f);
ConditionGrid weighted_mp_grid(const Element& a, const Element& x, const Element& e, const Element& f);

// x in a{1} with xR = aR and Rx = Ra*e.
bool is_e_core(const Element& a, const Element& x, const Element& e);
InverseReport e_core(const Element& a, const Element& e);
ConditionGrid e_core_grid(const Element& a, const Element& x, const Element& e);

// x in a{1} with xR = f^-1 a* R and Rx = Ra.
bool is_f_dual_core(const Element& a, const Element& x, const Element& f);
InverseReport f_dual_core(const Element& a, const Element& f);
ConditionGrid f_dual_core_grid(const Element& a, const Element& x, const Element& f);

// (awx)* = awx, xawa = a, awx^2 = x.
bool is_w_core(const Element& a, const Element& x, const Element& w);
InverseReport w_core(const Element& a, const Element& w);
// Groups: projector pair with b = aw, membership, and the range condition.
ConditionGrid w_core_grid(const Element& a, const Element& x, const Element& w);

// (xva)* = xva, avax = a, x^2va = x.
bool is_v_dual_core(const Element& a, const Element& x, const Element& v);
InverseReport v_dual_core(const Element& a, const Element& v);
ConditionGrid v_dual_core_grid(const Element& a, const Element& x, const Element& v);

// awxa = a, (awx)* = awx, awx^2 = x. Not unique: finite rings report the
// whole set, infinite rings one witness.
bool is_right_w_core(const Element& a, const Element& x, const Element& w);
InverseReport right_w_core(const Element& a, const Element& w);
ConditionGrid right_w_core_grid(const Element& a, const Element& x, const Element& w);

// axva = a, (xva)* = xva, x^2va = x.
bool is_left_v_dual_core(const Element& a, const Element& x, const Element& v);
InverseReport left_v_dual_core(const Element& a, const Element& v);
ConditionGrid left_v_dual_core_grid(const Element& a, const Element& x, const Element& v);

// ---------------------------------------------------------------------------
// (b,c) inverses: outer inverses with xR = bR or rann(x) = rann(c) on the
// right and Rx = Rc or lann(x) = lann(b) on the left.

enum class BcFlavor { full, right_hybrid, left_hybrid, annihilator };

BcFlavor parse_bc_flavor(std::string_view name);
const char* bc_flavor_name(BcFlavor flavor);
IdealConstraints bc_constraints(const Element& b, const Element& c, BcFlavor flavor);

// The flavor's outer inverse. When (cab){1} is nonempty the closed form
// b (cab)^(1) c and its clause list are recorded in `checks`; when an
// invertibility hypothesis holds, the inverse-based formula is checked too.
InverseReport bc_inverse(const Element& a, const Element& b, const Element& c, BcFlavor flavor);

// Five equivalence chains for x = b z c with z in (cab){1}.
std::vector<Characterization> bc_closed_form_clauses(const Element& a, const Element& b, const Element& c,
                                                     const Element& cab_inner);

struct BcInvertibility {
  bool right_first = false;   // rann(ab) = 0, cR = R, R = abR + rann(c)
  bool right_second = false;  // rann(b) = 0, caR = R, R = bR + preimage(a, rann c)
  bool left_first = false;    // lann(ca) = 0, Rb = R, R = Rca + lann(b)
  bool left_second = false;   // lann(c) = 0, Rab = R, R = Rc + left preimage(a, lann b)
  bool cab_invertible = false;
  std::optional<Element> formula;  // b (cab)^-1 c
  // Conclusions; empty when no hypothesis on that side holds.
  std::optional<bool> right_conclusion;
  std::optional<bool> left_conclusion;
};

BcInvertibility bc_invertibility(const Element& a, const Element& b, const Element& c);

struct EqualityItem {
  std::string label;
  // Alternatives joined by "or"; the item holds when any does.
  std::vector<std::pair<std::string, bool>> alternatives;
  bool holds() const;
};

struct BcEquality {
  std::vector<EqualityItem> items;
  bool consistent() const;
};

// The eight equivalent descriptions of x as the (b,c) inverse. Finite
// rings range the closed form over all of (cab){1}.
BcEquality bc_equality(const Element& a, const Element& b, const Element& c, const Element& x);

// ---------------------------------------------------------------------------
// (p,q) inverses for idempotents p and q.

enum class PqFlavor { djordjevic_wei, image_kernel, bott_duffin_p, bott_duffin_pq };

PqFlavor parse_pq_flavor(std::string_view name);
const char* pq_flavor_name(PqFlavor flavor);

// PreconditionError unless p and q are idempotent.
void require_idempotents(const Element& p, const Element& q);

// x in a{2}, xa = p, ax = 1 - q.
bool is_djordjevic_wei(const Element& a, const Element& x, const Element& p, const Element& q);
// x = px = xq, xap = p, qax = q.
bool is_bott_duffin(const Element& a, const Element& x, const Element& p, const Element& q);

// bott_duffin_p ignores q. Cross-identities between flavors are recorded in
// `checks` whenever both sides exist.
InverseReport pq_inverse(const Element& a, const Element& p, const Element& q, PqFlavor flavor);

// The equivalent descriptions of x as the Djordjevic-Wei (p,q) inverse,
// including the weakened forms and the two prescribed-ideal forms.
BcEquality pq_equality(const Element& a, const Element& x, const Element& p, const Element& q);

// rann(p) = preimage(a, qR) and Rq = left preimage(a, lann p).
bool pq_final_claim(const Element& a, const Element& p, const Element& q);

}  // namespace geninv
