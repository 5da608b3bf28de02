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

#include "geninv/prescribed.hpp"

#include <algorithm>

namespace geninv {

namespace {

SidedIdeal rprin(const Element& e) { return SidedIdeal::principal(e, Side::right); }
SidedIdeal lprin(const Element& e) { return SidedIdeal::principal(e, Side::left); }
SidedIdeal rann(const Element& e) { return SidedIdeal::annihilator(e, Side::right); }
SidedIdeal lann(const Element& e) { return SidedIdeal::annihilator(e, Side::left); }

bool subset(const SidedIdeal& a, const SidedIdeal& b) { return ideal_subset(a, b); }

std::vector<Element> sorted_unique(const Ring& ring, const std::vector<Element>& items) {
  boost::dynamic_bitset<> seen(*ring.cardinality());
  for (const auto& e : items) seen.set(ring.index_of(e));
  std::vector<Element> out;
  for (auto i = seen.find_first(); i != seen.npos; i = seen.find_next(i)) out.push_back(ring.element_at(i));
  return out;
}

// Unit images of the projectors multiplying an inner inverse: the left
// factor comes from rprin (rho_{S,rann a}) or lann (rho_{Ra,T'}), the right
// factor from rann (rho_{aR,T}) or lprin (rho_{S',lann a}).
struct Factors {
  std::optional<Element> left;
  std::optional<Element> right;
  std::string failed;
};

Factors projector_factors(const Element& a, const IdealConstraints& c) {
  Factors f;
  auto need = [&](const SidedIdeal& onto, const SidedIdeal& along, const char* label) -> std::optional<Element> {
    auto u = projector_unit(onto, along);
    if (!u && f.failed.empty()) f.failed = label;
    return u;
  };
  if (c.right_prin) f.left = need(*c.right_prin, rann(a), "R != S (+) rann(a)");
  if (c.left_ann) f.left = need(lprin(a), *c.left_ann, "R != Ra (+) T'");
  if (c.right_ann) f.right = need(rprin(a), *c.right_ann, "R != aR (+) T");
  if (c.left_prin) f.right = need(*c.left_prin, lann(a), "R != S' (+) lann(a)");
  return f;
}

const char* parameter_role(ConstraintShape shape) {
  switch (shape) {
    case ConstraintShape::prin_ann_right:
    case ConstraintShape::prin_ann_left:
    case ConstraintShape::prin_prin:
    case ConstraintShape::ann_ann:
      return "y ranges over R; the inner inverse is fixed";
    default:
      return "y ranges over R and the inner inverse over a{1}";
  }
}

void require_two_ideal(ConstraintShape shape) {
  if (is_single(shape)) throw StructuralError("outer and reflexive inverses need two prescribed ideals");
}

// The unique x in S with ax = rho_{aS,T}(1) (right) or xa = rho_{Sa,T}(1)
// (left), when R = aS + T directly and ker(a) meets S trivially.
std::optional<Element> outer_from_prin_ann(const Element& a, const SidedIdeal& s, const SidedIdeal& t,
                                           std::string& why) {
  bool right = s.side() == Side::right;
  SidedIdeal image = multiply(a, s);
  auto unit = projector_unit(image, t);
  if (!unit) {
    why = right ? "R != aS (+) T" : "R != S'a (+) T'";
    return std::nullopt;
  }
  if (!intersection(SidedIdeal::annihilator(a, s.side()), s).is_zero()) {
    why = right ? "rann(a) meets S nontrivially" : "lann(a) meets S' nontrivially";
    return std::nullopt;
  }
  auto x = solve_in_ideal(s, a, *unit);
  if (!x) throw InternalError("prescribed outer inverse: no solution inside the principal ideal");
  return x;
}

std::optional<Element> outer_candidate(const Element& a, const IdealConstraints& c, std::string& why) {
  switch (constraint_shape(c)) {
    case ConstraintShape::prin_ann_right:
      return outer_from_prin_ann(a, *c.right_prin, *c.right_ann, why);
    case ConstraintShape::prin_ann_left:
      return outer_from_prin_ann(a, *c.left_prin, *c.left_ann, why);
    case ConstraintShape::prin_prin: {
      SidedIdeal rann_s2 = annihilator_of(*c.left_prin);
      SidedIdeal lann_s = annihilator_of(*c.right_prin);
      if (!is_direct_sum(multiply(a, *c.right_prin), rann_s2)) {
        why = "R != aS (+) rann(S')";
        return std::nullopt;
      }
      if (!is_direct_sum(multiply(a, *c.left_prin), lann_s)) {
        why = "R != S'a (+) lann(S)";
        return std::nullopt;
      }
      auto x = outer_from_prin_ann(a, *c.right_prin, rann_s2, why);
      if (!x) throw InternalError("both-principal outer inverse: reduction failed: " + why);
      return x;
    }
    case ConstraintShape::ann_ann: {
      // x R = rann(lann(x)) for the regular element x, so the candidate is
      // the outer inverse with xR = rann(T') and rann(x) = T.
      auto x = outer_from_prin_ann(a, annihilator_of(*c.left_ann), *c.right_ann, why);
      if (!x) {
        why = "no outer inverse with xR = rann(T') and rann(x) = T: " + why;
        return std::nullopt;
      }
      if (lann(*x) != *c.left_ann) {
        why = "the outer inverse with xR = rann(T'), rann(x) = T has lann(x) != T'";
        return std::nullopt;
      }
      return x;
    }
    default:
      throw StructuralError("outer and reflexive inverses need two prescribed ideals");
  }
}

std::optional<Element> reflexive_candidate(const Element& a, const IdealConstraints& c, std::string& why) {
  ConstraintShape shape = constraint_shape(c);
  require_two_ideal(shape);
  IdealConstraints sums = c;
  if (shape == ConstraintShape::prin_prin) {
    // The four sums: aR + rann(S'), S + rann(a), Ra + lann(S), S' + lann(a).
    if (!is_direct_sum(rprin(a), annihilator_of(*c.left_prin))) {
      why = "R != aR (+) rann(S')";
      return std::nullopt;
    }
    if (!is_direct_sum(lprin(a), annihilator_of(*c.right_prin))) {
      why = "R != Ra (+) lann(S)";
      return std::nullopt;
    }
  }
  Factors f = projector_factors(a, sums);
  if (!f.failed.empty()) {
    why = f.failed;
    return std::nullopt;
  }
  auto inner = inner_inverse(a);
  if (!inner) {
    why = "a{1} is empty";
    return std::nullopt;
  }
  return *f.left * *inner * *f.right;
}

// Idempotents p = xa and q = ax carry the prescribed ideals.
std::vector<std::pair<std::string, bool>> idempotent_checks(const Element& a, const Element& x,
                                                            const IdealConstraints& c) {
  Element p = x * a;
  Element q = a * x;
  std::vector<std::pair<std::string, bool>> checks;
  checks.emplace_back("xa idempotent", is_idempotent(p));
  checks.emplace_back("ax idempotent", is_idempotent(q));
  if (c.right_prin) checks.emplace_back("S = (xa)R", rprin(p) == *c.right_prin);
  if (c.right_ann) checks.emplace_back("T = rann(ax)", rann(q) == *c.right_ann);
  if (c.left_prin) checks.emplace_back("S' = R(ax)", lprin(q) == *c.left_prin);
  if (c.left_ann) checks.emplace_back("T' = lann(xa)", lann(p) == *c.left_ann);
  return checks;
}

std::string outer_label(const IdealConstraints& c, bool reflexive) {
  std::string label = reflexive ? "reflexive(" : "outer(";
  label += shape_name(constraint_shape(c));
  return label + ")";
}

}  // namespace

void IdealConstraints::validate(const Ring& ring) const {
  auto check = [&](const std::optional<SidedIdeal>& ideal, Side side, const char* name) {
    if (!ideal) return;
    if (!same_ring(ideal->ring(), ring)) throw StructuralError(std::string(name) + " belongs to another ring");
    if (ideal->side() != side) {
      throw StructuralError(std::string(name) + " must be a " + side_name(side) + " ideal");
    }
  };
  check(right_prin, Side::right, "rprin");
  check(right_ann, Side::right, "rann");
  check(left_prin, Side::left, "lprin");
  check(left_ann, Side::left, "lann");
  if (!right_prin && !right_ann && !left_prin && !left_ann) throw StructuralError("no prescribed ideal given");
}

ConstraintShape constraint_shape(const IdealConstraints& c) {
  int mask = (c.right_prin ? 1 : 0) | (c.right_ann ? 2 : 0) | (c.left_prin ? 4 : 0) | (c.left_ann ? 8 : 0);
  switch (mask) {
    case 1 | 2: return ConstraintShape::prin_ann_right;
    case 4 | 8: return ConstraintShape::prin_ann_left;
    case 1 | 4: return ConstraintShape::prin_prin;
    case 2 | 8: return ConstraintShape::ann_ann;
    case 1: return ConstraintShape::right_prin;
    case 2: return ConstraintShape::right_ann;
    case 4: return ConstraintShape::left_prin;
    case 8: return ConstraintShape::left_ann;
    default:
      throw StructuralError(mask == 0 ? "no prescribed ideal given"
                                      : "unsupported combination of prescribed ideals");
  }
}

const char* shape_name(ConstraintShape shape) {
  switch (shape) {
    case ConstraintShape::prin_ann_right: return "rprin,rann";
    case ConstraintShape::prin_ann_left: return "lprin,lann";
    case ConstraintShape::prin_prin: return "rprin,lprin";
    case ConstraintShape::ann_ann: return "rann,lann";
    case ConstraintShape::right_prin: return "rprin";
    case ConstraintShape::right_ann: return "rann";
    case ConstraintShape::left_prin: return "lprin";
    case ConstraintShape::left_ann: return "lann";
  }
  return "?";
}

bool is_single(ConstraintShape shape) {
  return shape == ConstraintShape::right_prin || shape == ConstraintShape::right_ann ||
         shape == ConstraintShape::left_prin || shape == ConstraintShape::left_ann;
}

Element ParamFamily::instantiate(const Element& y) const { return instantiate(inner, y); }

Element ParamFamily::instantiate(const Element& z, const Element& y) const {
  const Element one = subject.ring().one();
  return left_mult * z * right_mult + (one - z * subject) * y * (one - subject * z);
}

bool ParamFamily::contains(const Element& x) const { return one_inverse_matches(subject, x, constraints); }

namespace {

// Additive generators: 1 for Z_n, the matrix units for M_n(F_p).
std::vector<Element> additive_generators(const Ring& ring) {
  if (!ring.is_matrix()) return {ring.one()};
  std::vector<Element> out;
  for (std::size_t i = 0; i < ring.size(); ++i)
    for (std::size_t j = 0; j < ring.size(); ++j) out.push_back(ring.matrix_unit(i, j));
  return out;
}

// Indices of left * R * right. The map y -> left y right is additive, so its
// image is the subgroup generated by the images of the additive generators.
std::vector<std::size_t> sandwich_image(const Ring& ring, const Element& left, const Element& right) {
  std::vector<Element> images;
  for (const Element& g : additive_generators(ring)) images.push_back(left * g * right);
  boost::dynamic_bitset<> seen(*ring.cardinality());
  std::vector<Element> frontier{ring.zero()};
  seen.set(ring.index_of(frontier.front()));
  while (!frontier.empty()) {
    Element x = frontier.back();
    frontier.pop_back();
    for (const Element& g : images) {
      Element y = x + g;
      std::size_t i = ring.index_of(y);
      if (seen.test(i)) continue;
      seen.set(i);
      frontier.push_back(std::move(y));
    }
  }
  std::vector<std::size_t> out;
  for (auto i = seen.find_first(); i != seen.npos; i = seen.find_next(i)) out.push_back(i);
  return out;
}

}  // namespace

std::vector<Element> ParamFamily::members() const {
  const Ring& ring = subject.ring();
  if (!ring.is_finite()) throw NotEnumerable("family members need a finite ring");
  std::vector<Element> inners = inner_fixed ? std::vector<Element>{inner} : enumerate_inverse_set(subject, {1});
  const Element one = ring.one();
  boost::dynamic_bitset<> seen(*ring.cardinality());
  for (const auto& z : inners) {
    const Element base = left_mult * z * right_mult;
    for (std::size_t h : sandwich_image(ring, one - z * subject, one - subject * z))
      seen.set(ring.index_of(base + ring.element_at(h)));
  }
  std::vector<Element> out;
  for (auto i = seen.find_first(); i != seen.npos; i = seen.find_next(i)) out.push_back(ring.element_at(i));
  return out;
}

bool one_inverse_matches(const Element& a, const Element& x, const IdealConstraints& c) {
  if (!satisfies(a, x, {1})) return false;
  if (c.right_prin && rprin(x * a) != *c.right_prin) return false;
  if (c.right_ann && rann(a * x) != *c.right_ann) return false;
  if (c.left_prin && lprin(a * x) != *c.left_prin) return false;
  if (c.left_ann && lann(x * a) != *c.left_ann) return false;
  return true;
}

std::optional<ParamFamily> one_inverse_family(const Element& a, const IdealConstraints& c, std::string* why_not) {
  c.validate(a.ring());
  ConstraintShape shape = constraint_shape(c);
  Factors f = projector_factors(a, c);
  if (!f.failed.empty()) {
    if (why_not) *why_not = f.failed;
    return std::nullopt;
  }
  auto inner = inner_inverse(a);
  if (!inner) {
    if (why_not) *why_not = "a{1} is empty";
    return std::nullopt;
  }
  const Element one = a.ring().one();
  Element left = f.left.value_or(one);
  Element right = f.right.value_or(one);
  Element base = left * *inner * right;
  // The projector-built candidate is itself an inner inverse meeting the
  // constraints; using it as the fixed inner inverse keeps the two-ideal
  // families complete.
  if (!one_inverse_matches(a, base, c)) throw InternalError("projector-built inner inverse misses its constraints");
  ParamFamily family{shape, c, a, left, right, base, base, !is_single(shape), parameter_role(shape)};
  return family;
}

SolutionSet one_inverse_solution_set(const Element& a, const IdealConstraints& c, const Element& fixed_inner) {
  const Ring& ring = a.ring();
  if (!ring.is_finite()) throw NotEnumerable("solution sets need a finite ring");
  c.validate(ring);
  std::string why;
  if (!one_inverse_family(a, c, &why)) throw PreconditionError("direct sum hypothesis fails: " + why);
  if (!one_inverse_matches(a, fixed_inner, c)) {
    throw PreconditionError("the fixed inner inverse does not meet the prescribed ideals");
  }
  SolutionSet out;
  const Element one = ring.one();
  std::vector<Element> generated;
  std::vector<Element> constrained;
  ring.for_each_element([&](const Element& y) {
    generated.push_back(fixed_inner + (one - fixed_inner * a) * y * (one - a * fixed_inner));
    if (one_inverse_matches(a, y, c)) constrained.push_back(y);
  });
  out.members = sorted_unique(ring, generated);
  out.constrained = std::move(constrained);
  out.equal = out.members == out.constrained;
  return out;
}

bool outer_matches(const Element& a, const Element& x, const IdealConstraints& c, bool reflexive) {
  if (!satisfies(a, x, reflexive ? EquationSet{1, 2} : EquationSet{2})) return false;
  if (c.right_prin && rprin(x) != *c.right_prin) return false;
  if (c.right_ann && rann(x) != *c.right_ann) return false;
  if (c.left_prin && lprin(x) != *c.left_prin) return false;
  if (c.left_ann && lann(x) != *c.left_ann) return false;
  return true;
}

InverseReport outer_with(const Element& a, const IdealConstraints& c, bool reflexive) {
  c.validate(a.ring());
  require_two_ideal(constraint_shape(c));
  std::string label = outer_label(c, reflexive);
  std::string why;
  auto outer = outer_candidate(a, c, why);
  if (!reflexive) {
    if (!outer) return none_report(a, label, why);
    if (!outer_matches(a, *outer, c, false)) throw InternalError(label + " failed its prescribed ideals");
    InverseReport r = unique_report(a, label, *outer, EquationSet{2});
    r.checks = idempotent_checks(a, *outer, c);
    for (const auto& [name, ok] : r.checks) {
      if (!ok) throw InternalError(label + ": " + name + " fails");
    }
    return r;
  }
  auto x = reflexive_candidate(a, c, why);
  if (!x) return none_report(a, label, why);
  if (!outer_matches(a, *x, c, true)) throw InternalError(label + " failed its prescribed ideals");
  InverseReport r = unique_report(a, label, *x, EquationSet{1, 2});
  r.checks = idempotent_checks(a, *x, c);
  r.checks.emplace_back("equals the outer inverse with the same ideals", outer && *outer == *x);
  for (const auto& [name, ok] : r.checks) {
    if (!ok) throw InternalError(label + ": " + name + " fails");
  }
  return r;
}

Characterization reflexive_characterize(const Element& a, const Element& x, const IdealConstraints& c) {
  c.validate(a.ring());
  if (!same_ring(a.ring(), x.ring())) throw StructuralError("ring mismatch");
  const Ring& ring = a.ring();
  const Element one = ring.one();
  ConstraintShape shape = constraint_shape(c);
  Element ax = a * x;
  Element xa = x * a;
  bool inner = satisfies(a, x, {1});
  auto phi = [&](const Element& b, const SidedIdeal& onto, const SidedIdeal& along) {
    return map_equals_projector(b, onto, along);
  };
  Factors f = projector_factors(a, c);
  auto a1 = inner_inverse(a);
  // Two-ideal expressions do not depend on the inner inverse chosen.
  auto expression = [&]() {
    return f.failed.empty() && a1 && *f.left * *a1 * *f.right == x;
  };
  // Single-ideal expressions quantify over a{1}.
  auto some_inner = [&](const Element& left, const Element& right, bool factor_defined) {
    return factor_defined && inner_inverse_with(a, left, right, x).has_value();
  };

  Characterization out;
  out.name = std::string("reflexive(") + shape_name(shape) + ")";
  bool single = is_single(shape);
  out.by_equations = outer_matches(a, x, c, true);
  auto& cl = out.clauses;

  switch (shape) {
    case ConstraintShape::prin_ann_right: {
      const SidedIdeal& s = *c.right_prin;
      const SidedIdeal& t = *c.right_ann;
      bool maps = phi(ax, rprin(a), t) && phi(xa, s, rann(a));
      bool ones = inner && rprin(xa) == s && rann(ax) == t;
      bool in_s = s.contains(x);
      bool lann_in = subset(annihilator_of(s), lann(x));
      bool t_in = subset(t, rann(x));
      cl = {{"phi_ax = rho(aR,T), phi_xa = rho(S,rann a), x in S", maps && in_s},
            {"phi_ax = rho(aR,T), phi_xa = rho(S,rann a), lann(S) in lann(x)", maps && lann_in},
            {"phi_ax = rho(aR,T), phi_xa = rho(S,rann a), T in rann(x)", maps && t_in},
            {"x in a{1}, xaR = S, rann(ax) = T, x in S", ones && in_s},
            {"x in a{1}, xaR = S, rann(ax) = T, lann(S) in lann(x)", ones && lann_in},
            {"x in a{1}, xaR = S, rann(ax) = T, T in rann(x)", ones && t_in},
            {"x = rho(S,rann a)(1) a1 rho(aR,T)(1)", expression()}};
      break;
    }
    case ConstraintShape::prin_ann_left: {
      const SidedIdeal& s = *c.left_prin;
      const SidedIdeal& t = *c.left_ann;
      bool maps = phi(ax, s, lann(a)) && phi(xa, lprin(a), t);
      bool ones = inner && lprin(ax) == s && lann(xa) == t;
      bool in_s = s.contains(x);
      bool rann_in = subset(annihilator_of(s), rann(x));
      bool t_in = subset(t, lann(x));
      cl = {{"ax_phi = rho(S',lann a), xa_phi = rho(Ra,T'), x in S'", maps && in_s},
            {"ax_phi = rho(S',lann a), xa_phi = rho(Ra,T'), rann(S') in rann(x)", maps && rann_in},
            {"ax_phi = rho(S',lann a), xa_phi = rho(Ra,T'), T' in lann(x)", maps && t_in},
            {"x in a{1}, Rax = S', lann(xa) = T', x in S'", ones && in_s},
            {"x in a{1}, Rax = S', lann(xa) = T', rann(S') in rann(x)", ones && rann_in},
            {"x in a{1}, Rax = S', lann(xa) = T', T' in lann(x)", ones && t_in},
            {"x = rho(Ra,T')(1) a1 rho(S',lann a)(1)", expression()}};
      break;
    }
    case ConstraintShape::prin_prin: {
      const SidedIdeal& s = *c.right_prin;
      const SidedIdeal& s2 = *c.left_prin;
      bool maps = phi(xa, s, rann(a)) && phi(ax, s2, lann(a));
      bool ones = inner && rprin(xa) == s && lprin(ax) == s2;
      bool in_union = s.contains(x) || s2.contains(x);
      bool lann_in = subset(annihilator_of(s), lann(x));
      bool rann_in = subset(annihilator_of(s2), rann(x));
      cl = {{"phi_xa = rho(S,rann a), ax_phi = rho(S',lann a), x in S or S'", maps && in_union},
            {"phi_xa = rho(S,rann a), ax_phi = rho(S',lann a), lann(S) in lann(x)", maps && lann_in},
            {"phi_xa = rho(S,rann a), ax_phi = rho(S',lann a), rann(S') in rann(x)", maps && rann_in},
            {"x in a{1}, xaR = S, Rax = S', x in S or S'", ones && in_union},
            {"x in a{1}, xaR = S, Rax = S', lann(S) in lann(x)", ones && lann_in},
            {"x in a{1}, xaR = S, Rax = S', rann(S') in rann(x)", ones && rann_in},
            {"a{1} nonempty, x = rho(S,rann a)(1) a1 rho(S',lann a)(1)", expression()}};
      break;
    }
    case ConstraintShape::ann_ann: {
      const SidedIdeal& t = *c.right_ann;
      const SidedIdeal& t2 = *c.left_ann;
      bool maps = phi(ax, rprin(a), t) && phi(xa, lprin(a), t2);
      bool ones = inner && rann(ax) == t && lann(xa) == t2;
      bool t_in = subset(t, rann(x));
      bool t2_in = subset(t2, lann(x));
      cl = {{"phi_ax = rho(aR,T), xa_phi = rho(Ra,T'), T in rann(x)", maps && t_in},
            {"phi_ax = rho(aR,T), xa_phi = rho(Ra,T'), T' in lann(x)", maps && t2_in},
            {"x in a{1}, rann(ax) = T, lann(xa) = T', T in rann(x)", ones && t_in},
            {"x in a{1}, rann(ax) = T, lann(xa) = T', T' in lann(x)", ones && t2_in},
            {"x = rho(Ra,T')(1) a1 rho(aR,T)(1)", expression()}};
      break;
    }
    case ConstraintShape::right_prin: {
      const SidedIdeal& s = *c.right_prin;
      bool maps = phi(xa, s, rann(a));
      bool ones = inner && rprin(xa) == s;
      bool in_s = s.contains(x);
      bool lann_in = subset(annihilator_of(s), lann(x));
      cl = {{"phi_xa = rho(S,rann a), x in S", maps && in_s},
            {"phi_xa = rho(S,rann a), lann(S) in lann(x)", maps && lann_in},
            {"x in a{1}, xaR = S, x in S", ones && in_s},
            {"x in a{1}, xaR = S, lann(S) in lann(x)", ones && lann_in},
            {"a{1} nonempty, x = rho(S,rann a)(1) a1 for some a1",
             some_inner(f.left.value_or(one), one, f.left.has_value())}};
      break;
    }
    case ConstraintShape::right_ann: {
      const SidedIdeal& t = *c.right_ann;
      bool t_in = subset(t, rann(x));
      cl = {{"phi_ax = rho(aR,T), T in rann(x)", phi(ax, rprin(a), t) && t_in},
            {"x in a{1}, rann(ax) = T, T in rann(x)", inner && rann(ax) == t && t_in},
            {"x = a1 rho(aR,T)(1) for some a1", some_inner(one, f.right.value_or(one), f.right.has_value())}};
      break;
    }
    case ConstraintShape::left_prin: {
      const SidedIdeal& s = *c.left_prin;
      bool maps = phi(ax, s, lann(a));
      bool ones = inner && lprin(ax) == s;
      bool in_s = s.contains(x);
      bool rann_in = subset(annihilator_of(s), rann(x));
      cl = {{"ax_phi = rho(S',lann a), x in S'", maps && in_s},
            {"ax_phi = rho(S',lann a), rann(S') in rann(x)", maps && rann_in},
            {"x in a{1}, Rax = S', x in S'", ones && in_s},
            {"x in a{1}, Rax = S', rann(S') in rann(x)", ones && rann_in},
            {"a{1} nonempty, x = a1 rho(S',lann a)(1) for some a1",
             some_inner(one, f.right.value_or(one), f.right.has_value())}};
      break;
    }
    case ConstraintShape::left_ann: {
      const SidedIdeal& t = *c.left_ann;
      bool t_in = subset(t, lann(x));
      cl = {{"xa_phi = rho(Ra,T'), T' in lann(x)", phi(xa, lprin(a), t) && t_in},
            {"x in a{1}, lann(xa) = T', T' in lann(x)", inner && lann(xa) == t && t_in},
            {"x = rho(Ra,T')(1) a1 for some a1", some_inner(f.left.value_or(one), one, f.left.has_value())}};
      break;
    }
  }

  // Tabulated isomorphism: psi(r) is the unique s in S with as = rho(aR,T)(r)
  // (or sa = rho(Ra,T')(r) on the left); x is the inverse iff psi = phi_x.
  bool one_sided = shape == ConstraintShape::prin_ann_right || shape == ConstraintShape::prin_ann_left;
  if (!single && one_sided && ring.is_finite() && f.failed.empty()) {
    bool right = shape == ConstraintShape::prin_ann_right;
    const SidedIdeal& s = right ? *c.right_prin : *c.left_prin;
    std::vector<Element> members = s.members();
    bool unique_solution = s.contains(x) && (right ? ax == *f.right : xa == *f.left);
    bool psi_matches = true;
    ring.for_each_element([&](const Element& r) {
      if (!psi_matches) return;
      Element target = right ? *f.right * r : r * *f.left;
      std::optional<Element> image;
      for (const auto& m : members) {
        if ((right ? a * m : m * a) == target) {
          if (image) throw InternalError("restriction of the multiplication map is not injective");
          image = m;
        }
      }
      if (!image) throw InternalError("restriction of the multiplication map is not onto");
      if ((right ? x * r : r * x) != *image) psi_matches = false;
    });
    cl.emplace_back(right ? "x is the unique s in S with as = rho(aR,T)(1)"
                          : "x is the unique s in S' with sa = rho(Ra,T')(1)",
                    unique_solution);
    cl.emplace_back(right ? "psi = phi_x" : "psi = x_phi", psi_matches);
  }
  return out;
}

bool mitsch_leq(const Element& y, const Element& z) {
  if (!same_ring(y.ring(), z.ring())) throw StructuralError("ring mismatch");
  const Ring& ring = y.ring();
  if (ring.is_matrix()) {
    const ScalarField& f = ring.scalars();
    // v [z y] = [y y] and [z; y] w = [y; y].
    bool left = linalg::solve_left(f, hstack(z.matrix(), y.matrix()), hstack(y.matrix(), y.matrix())).has_value();
    if (!left) return false;
    return linalg::solve(f, vstack(z.matrix(), y.matrix()), vstack(y.matrix(), y.matrix())).has_value();
  }
  bool left = false;
  bool right = false;
  ring.for_each_element([&](const Element& v) {
    if (!left && v * z == y && v * y == y) left = true;
    if (!right && y * v == y && z * v == y) right = true;
  });
  return left && right;
}

bool MitschReport::consistent() const {
  if (!all_pairs_related) return false;
  if (!outer) return both.empty();
  return outer_is_intersection && outer_is_max_lower && outer_is_min_upper;
}

MitschReport mitsch_extremes(const Element& a, const IdealConstraints& c) {
  const Ring& ring = a.ring();
  if (!ring.is_finite()) throw NotEnumerable("Mitsch extremes need a finite ring");
  c.validate(ring);
  ConstraintShape shape = constraint_shape(c);
  require_two_ideal(shape);

  auto lower = [&](const Element& y) {
    switch (shape) {
      case ConstraintShape::prin_prin: return c.right_prin->contains(y) && c.left_prin->contains(y);
      case ConstraintShape::prin_ann_right: return c.right_prin->contains(y) && subset(*c.right_ann, rann(y));
      case ConstraintShape::prin_ann_left: return c.left_prin->contains(y) && subset(*c.left_ann, lann(y));
      default: return subset(*c.right_ann, rann(y)) && subset(*c.left_ann, lann(y));
    }
  };
  auto upper = [&](const Element& z) {
    switch (shape) {
      case ConstraintShape::prin_prin: return subset(*c.right_prin, rprin(z)) && subset(*c.left_prin, lprin(z));
      case ConstraintShape::prin_ann_right: return subset(*c.right_prin, rprin(z)) && subset(rann(z), *c.right_ann);
      case ConstraintShape::prin_ann_left: return subset(*c.left_prin, lprin(z)) && subset(lann(z), *c.left_ann);
      default: return subset(rann(z), *c.right_ann) && subset(lann(z), *c.left_ann);
    }
  };

  MitschReport report;
  for (const auto& x : enumerate_inverse_set(a, {2})) {
    bool in_lower = lower(x);
    bool in_upper = upper(x);
    if (in_lower) report.lower.push_back(x);
    if (in_upper) report.upper.push_back(x);
    if (in_lower && in_upper) report.both.push_back(x);
  }
  report.all_pairs_related = true;
  for (const auto& y : report.lower) {
    for (const auto& z : report.upper) {
      if (!mitsch_leq(y, z)) report.all_pairs_related = false;
    }
  }
  InverseReport outer = outer_with(a, c, false);
  if (outer.found()) {
    const Element& x = *outer.value;
    report.outer = x;
    report.outer_is_intersection = report.both.size() == 1 && report.both.front() == x;
    auto contains = [&](const std::vector<Element>& v) { return std::find(v.begin(), v.end(), x) != v.end(); };
    report.outer_is_max_lower =
        contains(report.lower) &&
        std::all_of(report.lower.begin(), report.lower.end(), [&](const Element& y) { return mitsch_leq(y, x); });
    report.outer_is_min_upper =
        contains(report.upper) &&
        std::all_of(report.upper.begin(), report.upper.end(), [&](const Element& z) { return mitsch_leq(x, z); });
  }
  return report;
}

}  // namespace geninv
