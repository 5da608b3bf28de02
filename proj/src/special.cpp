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

#include "geninv/special.hpp"

#include <algorithm>
#include <functional>

namespace geninv {

namespace {

SidedIdeal rprin(const Element& e) { return SidedIdeal::principal(e, Side::right); }
SidedIdeal lprin(const Element& e) { return SidedIdeal::principal(e, Side::left); }
SidedIdeal rann(const Element& e) { return SidedIdeal::annihilator(e, Side::right); }
SidedIdeal lann(const Element& e) { return SidedIdeal::annihilator(e, Side::left); }

bool subset(const SidedIdeal& a, const SidedIdeal& b) { return ideal_subset(a, b); }

// phi_g = rho_{S,T} on right ideals, g_phi = rho_{S,T} on left ideals.
bool rho(const Element& g, const SidedIdeal& onto, const SidedIdeal& along) {
  return map_equals_projector(g, onto, along);
}

Element inverse_of(const Element& e) {
  auto inv = two_sided_inverse(e);
  if (!inv) throw InternalError("weight lost its inverse");
  return *inv;
}

IdealConstraints right_pair(SidedIdeal s, SidedIdeal t) {
  IdealConstraints c;
  c.right_prin = std::move(s);
  c.right_ann = std::move(t);
  return c;
}

IdealConstraints left_pair(SidedIdeal s, SidedIdeal t) {
  IdealConstraints c;
  c.left_prin = std::move(s);
  c.left_ann = std::move(t);
  return c;
}

IdealConstraints prin_pair(SidedIdeal s, SidedIdeal s2) {
  IdealConstraints c;
  c.right_prin = std::move(s);
  c.left_prin = std::move(s2);
  return c;
}

IdealConstraints ann_pair(SidedIdeal t, SidedIdeal t2) {
  IdealConstraints c;
  c.right_ann = std::move(t);
  c.left_ann = std::move(t2);
  return c;
}

// The four bundles S = xR, T = rann(x), S' = Rx, T' = lann(x) of one
// reflexive inverse.
std::vector<IdealConstraints> four_bundles(const SidedIdeal& s, const SidedIdeal& t, const SidedIdeal& s2,
                                           const SidedIdeal& t2) {
  return {right_pair(s, t), left_pair(s2, t2), prin_pair(s, s2), ann_pair(t, t2)};
}

// Solves through the first bundle and records whether the other three give
// the same element.
InverseReport reflexive_through(const Element& a, const std::vector<IdealConstraints>& bundles, std::string label) {
  InverseReport first = outer_with(a, bundles.front(), true);
  if (!first.found()) return none_report(a, std::move(label), first.reason);
  InverseReport r = unique_report(a, std::move(label), *first.value, EquationSet{1, 2});
  for (std::size_t i = 1; i < bundles.size(); ++i) {
    InverseReport other = outer_with(a, bundles[i], true);
    r.checks.emplace_back(std::string("agrees with the (1,2)-inverse prescribed by ") +
                              shape_name(constraint_shape(bundles[i])),
                          other.found() && *other.value == *first.value);
  }
  return r;
}

// Projector pairs for the (ax, xa) maps: both right, both left, and the two
// mixed choices.
std::vector<GridCondition> projector_pairs(bool right_ax, bool left_ax, bool right_xa, bool left_xa,
                                           const std::string& r_ax, const std::string& l_ax,
                                           const std::string& r_xa, const std::string& l_xa) {
  return {{r_ax + ", " + r_xa, right_ax && right_xa},
          {l_ax + ", " + l_xa, left_ax && left_xa},
          {r_ax + ", " + l_xa, right_ax && left_xa},
          {l_ax + ", " + r_xa, left_ax && right_xa}};
}

void require_same(const Element& a, const Element& other) {
  if (!same_ring(a.ring(), other.ring())) throw StructuralError("ring mismatch");
}

}  // namespace

// ---------------------------------------------------------------------------

std::uint64_t ConditionGrid::combinations() const {
  std::uint64_t n = 1;
  for (const auto& g : groups) n *= g.size();
  return n;
}

std::optional<std::vector<std::size_t>> ConditionGrid::first_mismatch() const {
  if (combinations() == 0) return std::nullopt;
  std::vector<std::size_t> choice(groups.size(), 0);
  while (true) {
    bool all = true;
    for (std::size_t g = 0; g < groups.size(); ++g) all = all && groups[g][choice[g]].holds;
    if (all != target) return choice;
    std::size_t g = groups.size();
    while (g > 0) {
      --g;
      if (++choice[g] < groups[g].size()) break;
      choice[g] = 0;
      if (g == 0) return std::nullopt;
    }
    if (groups.empty()) return std::nullopt;
  }
}

std::string ConditionGrid::describe(const std::vector<std::size_t>& choice) const {
  std::string out = name + ": target " + (target ? "holds" : "fails");
  for (std::size_t g = 0; g < groups.size() && g < choice.size(); ++g) {
    const auto& c = groups[g][choice[g]];
    out += "; [" + c.label + "] " + (c.holds ? "holds" : "fails");
  }
  return out;
}

// ---------------------------------------------------------------------------

StarClass parse_star_class(std::string_view tag) {
  std::string digits;
  for (char ch : tag) {
    if (ch >= '0' && ch <= '9') digits += ch;
    else if (ch != ',' && ch != ' ' && ch != '{' && ch != '}') throw StructuralError("bad class tag: " + std::string(tag));
  }
  for (StarClass c : all_star_classes()) {
    if (digits == star_class_tag(c)) return c;
  }
  throw StructuralError("unknown class tag: " + std::string(tag));
}

const char* star_class_tag(StarClass cls) {
  switch (cls) {
    case StarClass::c13: return "13";
    case StarClass::c14: return "14";
    case StarClass::c134: return "134";
    case StarClass::c136: return "136";
    case StarClass::c148: return "148";
    case StarClass::c137: return "137";
    case StarClass::c149: return "149";
  }
  return "?";
}

EquationSet star_class_equations(StarClass cls) {
  switch (cls) {
    case StarClass::c13: return {1, 3};
    case StarClass::c14: return {1, 4};
    case StarClass::c134: return {1, 3, 4};
    case StarClass::c136: return {1, 3, 6};
    case StarClass::c148: return {1, 4, 8};
    case StarClass::c137: return {1, 3, 7};
    case StarClass::c149: return {1, 4, 9};
  }
  return {};
}

const std::vector<StarClass>& all_star_classes() {
  static const std::vector<StarClass> all{StarClass::c13,  StarClass::c14,  StarClass::c134, StarClass::c136,
                                          StarClass::c148, StarClass::c137, StarClass::c149};
  return all;
}

bool star_class_sufficient_only(StarClass cls) { return cls == StarClass::c136 || cls == StarClass::c148; }

bool StarMembership::consistent() const {
  for (const auto& [label, holds] : projector_forms) {
    if (sufficient_only ? (holds && !by_equations) : (holds != by_equations)) return false;
  }
  return true;
}

StarMembership star_class_member(const Element& a, const Element& x, StarClass cls) {
  require_same(a, x);
  a.ring().require_involution();
  Element as = a.star();
  Element ax = a * x;
  Element xa = x * a;
  StarMembership m;
  m.by_equations = satisfies(a, x, star_class_equations(cls));
  m.sufficient_only = star_class_sufficient_only(cls);
  auto& forms = m.projector_forms;

  // Orthogonal projector forms of {1,3} (on ax) and {1,4} (on xa).
  auto r13 = [&] { return rho(ax, rprin(a), rann(as)); };
  auto l13 = [&] { return rho(ax, lprin(as), lann(a)); };
  auto r14 = [&] { return rho(xa, rprin(as), rann(a)); };
  auto l14 = [&] { return rho(xa, lprin(a), lann(as)); };
  const std::string R13 = "phi_ax = rho(aR,rann a*)", L13 = "ax_phi = rho(Ra*,lann a)";
  const std::string R14 = "phi_xa = rho(a*R,rann a)", L14 = "xa_phi = rho(Ra,lann a*)";

  switch (cls) {
    case StarClass::c13:
      forms = {{R13, r13()}, {L13, l13()}};
      break;
    case StarClass::c14:
      forms = {{R14, r14()}, {L14, l14()}};
      break;
    case StarClass::c134: {
      bool p[2] = {r13(), l13()};
      bool q[2] = {r14(), l14()};
      forms = {{R13 + ", " + R14, p[0] && q[0]},
               {R13 + ", " + L14, p[0] && q[1]},
               {L13 + ", " + R14, p[1] && q[0]},
               {L13 + ", " + L14, p[1] && q[1]}};
      break;
    }
    case StarClass::c136: {
      bool p[2] = {r13(), l13()};
      bool q[2] = {rho(xa, rprin(a), rann(a)), rho(xa, lprin(a), lann(a))};
      const std::string RQ = "phi_xa = rho(aR,rann a)", LQ = "xa_phi = rho(Ra,lann a)";
      forms = {{R13 + ", " + RQ, p[0] && q[0]},
               {R13 + ", " + LQ, p[0] && q[1]},
               {L13 + ", " + RQ, p[1] && q[0]},
               {L13 + ", " + LQ, p[1] && q[1]}};
      break;
    }
    case StarClass::c148: {
      bool p[2] = {rho(ax, rprin(a), rann(a)), rho(ax, lprin(a), lann(a))};
      bool q[2] = {r14(), l14()};
      const std::string RP = "phi_ax = rho(aR,rann a)", LP = "ax_phi = rho(Ra,lann a)";
      forms = {{RP + ", " + R14, p[0] && q[0]},
               {RP + ", " + L14, p[0] && q[1]},
               {LP + ", " + R14, p[1] && q[0]},
               {LP + ", " + L14, p[1] && q[1]}};
      break;
    }
    case StarClass::c137:
      forms = {{R13 + ", x in aR", r13() && rprin(a).contains(x)},
               {L13 + ", lann a in lann x", l13() && subset(lann(a), lann(x))}};
      break;
    case StarClass::c149:
      forms = {{R14 + ", rann a in rann x", r14() && subset(rann(a), rann(x))},
               {L14 + ", x in Ra", l14() && lprin(a).contains(x)}};
      break;
  }
  return m;
}

StarClassSet star_class_set(const Element& a, StarClass cls) {
  const Ring& ring = a.ring();
  ring.require_involution();
  if (!ring.is_finite()) throw NotEnumerable("class sets need a finite ring");
  Element as = a.star();
  SidedIdeal a_r = rprin(a), as_r = rprin(as), a_l = lprin(a), as_l = lprin(as);
  SidedIdeal rann_a = rann(a), rann_as = rann(as), lann_a = lann(a), lann_as = lann(as);

  using Pred = std::function<bool(const Element&)>;
  // Conditions on x in a{1}.
  Pred xaR_aR = [&](const Element& x) { return rprin(x * a) == a_r; };
  Pred xaR_asR = [&](const Element& x) { return rprin(x * a) == as_r; };
  Pred rann_ax_as = [&](const Element& x) { return rann(a * x) == rann_as; };
  Pred rann_ax_a = [&](const Element& x) { return rann(a * x) == rann_a; };
  Pred Rax_Ras = [&](const Element& x) { return lprin(a * x) == as_l; };
  Pred Rax_Ra = [&](const Element& x) { return lprin(a * x) == a_l; };
  Pred lann_xa_as = [&](const Element& x) { return lann(x * a) == lann_as; };
  Pred lann_xa_a = [&](const Element& x) { return lann(x * a) == lann_a; };
  Pred x_in_aR = [&](const Element& x) { return a_r.contains(x); };
  Pred x_in_Ra = [&](const Element& x) { return a_l.contains(x); };
  Pred lann_in = [&](const Element& x) { return subset(lann_a, lann(x)); };
  Pred rann_in = [&](const Element& x) { return subset(rann_a, rann(x)); };

  std::vector<std::pair<std::string, std::vector<Pred>>> specs;
  switch (cls) {
    case StarClass::c13:
      specs = {{"rann(ax) = rann(a*)", {rann_ax_as}}, {"Rax = Ra*", {Rax_Ras}}};
      break;
    case StarClass::c14:
      specs = {{"xaR = a*R", {xaR_asR}}, {"lann(xa) = lann(a*)", {lann_xa_as}}};
      break;
    case StarClass::c134:
      specs = {{"xaR = a*R, rann(ax) = rann(a*)", {xaR_asR, rann_ax_as}},
               {"lann(xa) = lann(a*), rann(ax) = rann(a*)", {lann_xa_as, rann_ax_as}},
               {"xaR = a*R, Rax = Ra*", {xaR_asR, Rax_Ras}},
               {"Rax = Ra*, lann(xa) = lann(a*)", {Rax_Ras, lann_xa_as}}};
      break;
    case StarClass::c136:
      specs = {{"xaR = aR, rann(ax) = rann(a*)", {xaR_aR, rann_ax_as}},
               {"lann(xa) = lann(a), rann(ax) = rann(a*)", {lann_xa_a, rann_ax_as}},
               {"xaR = aR, Rax = Ra*", {xaR_aR, Rax_Ras}},
               {"Rax = Ra*, lann(xa) = lann(a)", {Rax_Ras, lann_xa_a}}};
      break;
    case StarClass::c148:
      specs = {{"xaR = a*R, rann(ax) = rann(a)", {xaR_asR, rann_ax_a}},
               {"lann(xa) = lann(a*), rann(ax) = rann(a)", {lann_xa_as, rann_ax_a}},
               {"xaR = a*R, Rax = Ra", {xaR_asR, Rax_Ra}},
               {"Rax = Ra, lann(xa) = lann(a*)", {Rax_Ra, lann_xa_as}}};
      break;
    case StarClass::c137:
      specs = {{"rann(ax) = rann(a*), x in aR", {rann_ax_as, x_in_aR}},
               {"Rax = Ra*, lann(a) in lann(x)", {Rax_Ras, lann_in}}};
      break;
    case StarClass::c149:
      specs = {{"xaR = a*R, rann(a) in rann(x)", {xaR_asR, rann_in}},
               {"lann(xa) = lann(a*), x in Ra", {lann_xa_as, x_in_Ra}}};
      break;
  }

  StarClassSet out{cls, enumerate_inverse_set(a, star_class_equations(cls)), {}, false, false};
  std::vector<Element> inner = enumerate_inverse_set(a, {1});
  for (auto& [label, preds] : specs) {
    StarSetForm form{label, {}};
    for (const auto& x : inner) {
      if (std::all_of(preds.begin(), preds.end(), [&](const Pred& p) { return p(x); })) form.members.push_back(x);
    }
    out.forms.push_back(std::move(form));
  }
  bool forms_agree = std::all_of(out.forms.begin(), out.forms.end(),
                                 [&](const StarSetForm& f) { return f.members == out.forms.front().members; });
  const auto& common = out.forms.front().members;
  out.equality_observed = forms_agree && common == out.members;
  if (star_class_sufficient_only(cls)) {
    out.identities_hold = forms_agree && std::includes(out.members.begin(), out.members.end(), common.begin(),
                                                       common.end(), canonical_less);
  } else {
    out.identities_hold = out.equality_observed;
  }
  return out;
}

// ---------------------------------------------------------------------------

void require_weight(const Element& weight, const char* name) {
  weight.ring().require_involution();
  if (!two_sided_inverse(weight)) throw PreconditionError(std::string("weight ") + name + " is not invertible");
  if (weight.star() != weight) throw PreconditionError(std::string("weight ") + name + " is not symmetric");
}

bool is_weighted_mp(const Element& a, const Element& x, const Element& e, const Element& f) {
  if (!satisfies(a, x, {1, 2})) return false;
  Element eax = e * a * x;
  Element fxa = f * x * a;
  return eax.star() == eax && fxa.star() == fxa;
}

InverseReport weighted_mp(const Element& a, const Element& e, const Element& f) {
  require_same(a, e);
  require_same(a, f);
  require_weight(e, "e");
  require_weight(f, "f");
  Element as = a.star();
  Element fas = inverse_of(f) * as;
  Element ase = as * e;
  InverseReport r = reflexive_through(a, four_bundles(rprin(fas), rann(ase), lprin(ase), lann(fas)), "ef-mp");
  if (!r.found()) {
    r.reason = "no (1,2)-inverse with xR = f^-1 a* R and rann(x) = rann(a* e): " + r.reason;
    return r;
  }
  if (!is_weighted_mp(a, *r.value, e, f)) {
    return none_report(a, "ef-mp", "the (1,2)-inverse with the weighted ideals fails (eax)* = eax or (fxa)* = fxa");
  }
  if (e.is_one() && f.is_one()) {
    InverseReport mp = moore_penrose(a);
    r.checks.emplace_back("unit weights reproduce the Moore-Penrose inverse", mp.found() && *mp.value == *r.value);
  }
  return r;
}

ConditionGrid weighted_mp_grid(const Element& a, const Element& x, const Element& e, const Element& f) {
  require_same(a, x);
  require_weight(e, "e");
  require_weight(f, "f");
  Element as = a.star();
  Element fas = inverse_of(f) * as;
  Element ase = as * e;
  Element ax = a * x, xa = x * a;
  ConditionGrid g;
  g.name = "ef-mp";
  g.target = is_weighted_mp(a, x, e, f);
  g.groups.push_back(projector_pairs(rho(ax, rprin(a), rann(ase)), rho(ax, lprin(ase), lann(a)),
                                     rho(xa, rprin(fas), rann(a)), rho(xa, lprin(a), lann(fas)),
                                     "phi_ax = rho(aR,rann(a*e))", "ax_phi = rho(Ra*e,lann a)",
                                     "phi_xa = rho(f^-1a*R,rann a)", "xa_phi = rho(Ra,lann(f^-1a*))"));
  g.groups.push_back({{"xR in f^-1a*R", subset(rprin(x), rprin(fas))},
                      {"lann(f^-1a*) in lann(x)", subset(lann(fas), lann(x))},
                      {"Rx in Ra*e", subset(lprin(x), lprin(ase))},
                      {"rann(a*e) in rann(x)", subset(rann(ase), rann(x))}});
  return g;
}

bool is_e_core(const Element& a, const Element& x, const Element& e) {
  return satisfies(a, x, {1}) && rprin(x) == rprin(a) && lprin(x) == lprin(a.star() * e);
}

InverseReport e_core(const Element& a, const Element& e) {
  require_same(a, e);
  require_weight(e, "e");
  Element ase = a.star() * e;
  InverseReport r = reflexive_through(a, four_bundles(rprin(a), rann(ase), lprin(ase), lann(a)), "e-core");
  if (!r.found()) {
    r.reason = "no (1,2)-inverse with xR = aR and rann(x) = rann(a* e): " + r.reason;
    return r;
  }
  if (!is_e_core(a, *r.value, e)) return none_report(a, "e-core", "the (1,2)-inverse has Rx != Ra*e");
  if (e.is_one()) {
    InverseReport core = core_inverse(a);
    r.checks.emplace_back("unit weight reproduces the core inverse", core.found() && *core.value == *r.value);
  }
  return r;
}

ConditionGrid e_core_grid(const Element& a, const Element& x, const Element& e) {
  require_same(a, x);
  require_weight(e, "e");
  Element ase = a.star() * e;
  Element ax = a * x, xa = x * a;
  ConditionGrid g;
  g.name = "e-core";
  g.target = is_e_core(a, x, e);
  g.groups.push_back(projector_pairs(rho(ax, rprin(a), rann(ase)), rho(ax, lprin(ase), lann(a)),
                                     rho(xa, rprin(a), rann(a)), rho(xa, lprin(a), lann(a)),
                                     "phi_ax = rho(aR,rann(a*e))", "ax_phi = rho(Ra*e,lann a)",
                                     "phi_xa = rho(aR,rann a)", "xa_phi = rho(Ra,lann a)"));
  g.groups.push_back({{"xR in aR", subset(rprin(x), rprin(a))},
                      {"lann(a) in lann(x)", subset(lann(a), lann(x))},
                      {"Rx in Ra*e", subset(lprin(x), lprin(ase))},
                      {"rann(a*e) in rann(x)", subset(rann(ase), rann(x))}});
  return g;
}

bool is_f_dual_core(const Element& a, const Element& x, const Element& f) {
  return satisfies(a, x, {1}) && rprin(x) == rprin(inverse_of(f) * a.star()) && lprin(x) == lprin(a);
}

InverseReport f_dual_core(const Element& a, const Element& f) {
  require_same(a, f);
  require_weight(f, "f");
  Element fas = inverse_of(f) * a.star();
  InverseReport r = reflexive_through(a, four_bundles(rprin(fas), rann(a), lprin(a), lann(fas)), "f-dual-core");
  if (!r.found()) {
    r.reason = "no (1,2)-inverse with xR = f^-1 a* R and rann(x) = rann(a): " + r.reason;
    return r;
  }
  if (!is_f_dual_core(a, *r.value, f)) return none_report(a, "f-dual-core", "the (1,2)-inverse has Rx != Ra");
  if (f.is_one()) {
    InverseReport dual = dual_core_inverse(a);
    r.checks.emplace_back("unit weight reproduces the dual core inverse", dual.found() && *dual.value == *r.value);
  }
  return r;
}

ConditionGrid f_dual_core_grid(const Element& a, const Element& x, const Element& f) {
  require_same(a, x);
  require_weight(f, "f");
  Element fas = inverse_of(f) * a.star();
  Element ax = a * x, xa = x * a;
  ConditionGrid g;
  g.name = "f-dual-core";
  g.target = is_f_dual_core(a, x, f);
  g.groups.push_back(projector_pairs(rho(ax, rprin(a), rann(a)), rho(ax, lprin(a), lann(a)),
                                     rho(xa, rprin(fas), rann(a)), rho(xa, lprin(a), lann(fas)),
                                     "phi_ax = rho(aR,rann a)", "ax_phi = rho(Ra,lann a)",
                                     "phi_xa = rho(f^-1a*R,rann a)", "xa_phi = rho(Ra,lann(f^-1a*))"));
  g.groups.push_back({{"xR in f^-1a*R", subset(rprin(x), rprin(fas))},
                      {"lann(f^-1a*) in lann(x)", subset(lann(fas), lann(x))},
                      {"Rx in Ra", subset(lprin(x), lprin(a))},
                      {"rann(a) in rann(x)", subset(rann(a), rann(x))}});
  return g;
}

// ---------------------------------------------------------------------------

bool is_w_core(const Element& a, const Element& x, const Element& w) {
  Element awx = a * w * x;
  return awx.star() == awx && x * a * w * a == a && awx * x == x;
}

InverseReport w_core(const Element& a, const Element& w) {
  require_same(a, w);
  a.ring().require_involution();
  Element b = a * w;
  InverseReport core = core_inverse(b);
  if (!core.found()) return none_report(a, "w-core", "aw has no core inverse: " + core.reason);
  if (!subset(rprin(a), rprin(b))) return none_report(a, "w-core", "aR is not contained in awR");
  const Element& x = *core.value;
  if (!is_w_core(a, x, w)) throw InternalError("w-core: the core inverse of aw fails the defining equations");
  InverseReport r = unique_report(a, "w-core", x, EquationSet{});
  r.checks.emplace_back("lann(aw) in lann(a)", subset(lann(b), lann(a)));
  InverseReport via = outer_with(b, right_pair(rprin(b), rann(b.star())), true);
  r.checks.emplace_back("equals the (1,2)-inverse of aw with xR = awR and rann(x) = rann((aw)*)",
                        via.found() && *via.value == x);
  return r;
}

ConditionGrid w_core_grid(const Element& a, const Element& x, const Element& w) {
  require_same(a, x);
  a.ring().require_involution();
  Element b = a * w, bs = b.star();
  Element bx = b * x, xb = x * b;
  ConditionGrid g;
  g.name = "w-core";
  g.target = is_w_core(a, x, w);
  g.groups.push_back(projector_pairs(rho(bx, rprin(b), rann(bs)), rho(bx, lprin(bs), lann(b)),
                                     rho(xb, rprin(b), rann(b)), rho(xb, lprin(b), lann(b)),
                                     "phi_bx = rho(bR,rann b*)", "bx_phi = rho(Rb*,lann b)",
                                     "phi_xb = rho(bR,rann b)", "xb_phi = rho(Rb,lann b)"));
  g.groups.push_back({{"xR in bR", subset(rprin(x), rprin(b))},
                      {"lann(b) in lann(x)", subset(lann(b), lann(x))},
                      {"Rx in Rb*", subset(lprin(x), lprin(bs))},
                      {"rann(b*) in rann(x)", subset(rann(bs), rann(x))}});
  g.groups.push_back({{"aR in bR", subset(rprin(a), rprin(b))}, {"lann(b) in lann(a)", subset(lann(b), lann(a))}});
  return g;
}

bool is_v_dual_core(const Element& a, const Element& x, const Element& v) {
  Element xva = x * v * a;
  return xva.star() == xva && a * v * a * x == a && x * xva == x;
}

InverseReport v_dual_core(const Element& a, const Element& v) {
  require_same(a, v);
  a.ring().require_involution();
  Element c = v * a;
  InverseReport dual = dual_core_inverse(c);
  if (!dual.found()) return none_report(a, "v-dual-core", "va has no dual core inverse: " + dual.reason);
  if (!subset(lprin(a), lprin(c))) return none_report(a, "v-dual-core", "Ra is not contained in Rva");
  const Element& x = *dual.value;
  if (!is_v_dual_core(a, x, v)) throw InternalError("v-dual-core: the dual core inverse of va fails the defining equations");
  InverseReport r = unique_report(a, "v-dual-core", x, EquationSet{});
  r.checks.emplace_back("rann(va) in rann(a)", subset(rann(c), rann(a)));
  InverseReport via = outer_with(c, right_pair(rprin(c.star()), rann(c)), true);
  r.checks.emplace_back("equals the (1,2)-inverse of va with xR = (va)*R and rann(x) = rann(va)",
                        via.found() && *via.value == x);
  return r;
}

ConditionGrid v_dual_core_grid(const Element& a, const Element& x, const Element& v) {
  require_same(a, x);
  a.ring().require_involution();
  Element c = v * a, cs = c.star();
  Element cx = c * x, xc = x * c;
  ConditionGrid g;
  g.name = "v-dual-core";
  g.target = is_v_dual_core(a, x, v);
  g.groups.push_back(projector_pairs(rho(cx, rprin(c), rann(c)), rho(cx, lprin(c), lann(c)),
                                     rho(xc, rprin(cs), rann(c)), rho(xc, lprin(c), lann(cs)),
                                     "phi_cx = rho(cR,rann c)", "cx_phi = rho(Rc,lann c)",
                                     "phi_xc = rho(c*R,rann c)", "xc_phi = rho(Rc,lann c*)"));
  g.groups.push_back({{"xR in c*R", subset(rprin(x), rprin(cs))},
                      {"lann(c*) in lann(x)", subset(lann(cs), lann(x))},
                      {"Rx in Rc", subset(lprin(x), lprin(c))},
                      {"rann(c) in rann(x)", subset(rann(c), rann(x))}});
  g.groups.push_back({{"Ra in Rc", subset(lprin(a), lprin(c))}, {"rann(c) in rann(a)", subset(rann(c), rann(a))}});
  return g;
}

bool is_right_w_core(const Element& a, const Element& x, const Element& w) {
  Element awx = a * w * x;
  return awx * a == a && awx.star() == awx && awx * x == x;
}

InverseReport right_w_core(const Element& a, const Element& w) {
  require_same(a, w);
  const Ring& ring = a.ring();
  ring.require_involution();
  Element b = a * w;
  const char* label = "right-w-core";
  if (!subset(rprin(a), rprin(b))) return none_report(a, label, "aR is not contained in awR");
  InverseReport r(a, label);
  r.satisfied = EquationSet{};
  if (ring.is_finite()) {
    r.members = enumerate_inverse_set(b, {1, 3, 7});
    if (r.members.empty()) return none_report(a, label, "(aw){1,3,7} is empty");
    for (const auto& x : r.members) {
      if (!is_right_w_core(a, x, w)) throw InternalError("right w-core: an element of (aw){1,3,7} fails");
    }
    r.count = r.members.size();
    r.value = r.members.front();
  } else {
    // x in bR with bx the orthogonal projector onto bR.
    auto x13 = one_three_inverse(b);
    if (!x13) return none_report(a, label, "(aw){1,3} is empty");
    auto x = solve_in_ideal(rprin(b), b, b * *x13);
    if (!x) return none_report(a, label, "no x in awR with awx = bb^(1,3)");
    if (!is_right_w_core(a, *x, w)) throw InternalError("right w-core witness fails the defining equations");
    r.value = *x;
  }
  r.status = InverseStatus::family;
  return r;
}

ConditionGrid right_w_core_grid(const Element& a, const Element& x, const Element& w) {
  require_same(a, x);
  a.ring().require_involution();
  Element b = a * w, bs = b.star();
  Element bx = b * x;
  ConditionGrid g;
  g.name = "right-w-core";
  g.target = is_right_w_core(a, x, w);
  g.groups.push_back({{"phi_bx = rho(bR,rann b*), x in bR", rho(bx, rprin(b), rann(bs)) && rprin(b).contains(x)},
                      {"bx_phi = rho(Rb*,lann b), lann(b) in lann(x)",
                       rho(bx, lprin(bs), lann(b)) && subset(lann(b), lann(x))}});
  g.groups.push_back({{"aR in bR", subset(rprin(a), rprin(b))}, {"lann(b) in lann(a)", subset(lann(b), lann(a))}});
  return g;
}

bool is_left_v_dual_core(const Element& a, const Element& x, const Element& v) {
  Element xva = x * v * a;
  return a * xva == a && xva.star() == xva && x * xva == x;
}

InverseReport left_v_dual_core(const Element& a, const Element& v) {
  require_same(a, v);
  const Ring& ring = a.ring();
  ring.require_involution();
  Element c = v * a;
  const char* label = "left-v-dual-core";
  if (!subset(lprin(a), lprin(c))) return none_report(a, label, "Ra is not contained in Rva");
  InverseReport r(a, label);
  if (ring.is_finite()) {
    r.members = enumerate_inverse_set(c, {1, 4, 9});
    if (r.members.empty()) return none_report(a, label, "(va){1,4,9} is empty");
    for (const auto& x : r.members) {
      if (!is_left_v_dual_core(a, x, v)) throw InternalError("left v-dual core: an element of (va){1,4,9} fails");
    }
    r.count = r.members.size();
    r.value = r.members.front();
  } else {
    // x in Rc with xc the orthogonal projector onto Rc.
    auto x14 = one_four_inverse(c);
    if (!x14) return none_report(a, label, "(va){1,4} is empty");
    auto x = solve_in_ideal(lprin(c), c, *x14 * c);
    if (!x) return none_report(a, label, "no x in Rva with xva = c^(1,4)c");
    if (!is_left_v_dual_core(a, *x, v)) throw InternalError("left v-dual core witness fails the defining equations");
    r.value = *x;
  }
  r.status = InverseStatus::family;
  return r;
}

ConditionGrid left_v_dual_core_grid(const Element& a, const Element& x, const Element& v) {
  require_same(a, x);
  a.ring().require_involution();
  Element c = v * a, cs = c.star();
  Element xc = x * c;
  ConditionGrid g;
  g.name = "left-v-dual-core";
  g.target = is_left_v_dual_core(a, x, v);
  g.groups.push_back({{"phi_xc = rho(c*R,rann c), x in Rc", rho(xc, rprin(cs), rann(c)) && lprin(c).contains(x)},
                      {"xc_phi = rho(Rc,lann c*), rann(c) in rann(x)",
                       rho(xc, lprin(c), lann(cs)) && subset(rann(c), rann(x))}});
  g.groups.push_back({{"Ra in Rc", subset(lprin(a), lprin(c))}, {"rann(c) in rann(a)", subset(rann(c), rann(a))}});
  return g;
}

// ---------------------------------------------------------------------------

BcFlavor parse_bc_flavor(std::string_view name) {
  if (name == "full") return BcFlavor::full;
  if (name == "right-hybrid") return BcFlavor::right_hybrid;
  if (name == "left-hybrid") return BcFlavor::left_hybrid;
  if (name == "annihilator") return BcFlavor::annihilator;
  throw StructuralError("unknown (b,c) flavor: " + std::string(name));
}

const char* bc_flavor_name(BcFlavor flavor) {
  switch (flavor) {
    case BcFlavor::full: return "full";
    case BcFlavor::right_hybrid: return "right-hybrid";
    case BcFlavor::left_hybrid: return "left-hybrid";
    case BcFlavor::annihilator: return "annihilator";
  }
  return "?";
}

IdealConstraints bc_constraints(const Element& b, const Element& c, BcFlavor flavor) {
  switch (flavor) {
    case BcFlavor::full: return prin_pair(rprin(b), lprin(c));
    case BcFlavor::right_hybrid: return right_pair(rprin(b), rann(c));
    case BcFlavor::left_hybrid: return left_pair(lprin(c), lann(b));
    case BcFlavor::annihilator: return ann_pair(rann(c), lann(b));
  }
  throw StructuralError("unknown (b,c) flavor");
}

std::vector<Characterization> bc_closed_form_clauses(const Element& a, const Element& b, const Element& c,
                                                     const Element& cab_inner) {
  require_same(a, b);
  require_same(a, c);
  Element ab = a * b;
  Element cab = c * ab;
  if (!satisfies(cab, cab_inner, {1})) throw PreconditionError("the given element is not an inner inverse of cab");
  Element x = b * cab_inner * c;
  bool outer = satisfies(a, x, {2});
  bool abR = rprin(ab) == rprin(a);
  bool rann_cab_b = rann(cab) == rann(b);
  bool Rcab_Rb = lprin(cab) == lprin(b);
  bool cabR_cR = rprin(cab) == rprin(c);
  bool lann_cab_c = lann(cab) == lann(c);

  std::vector<Characterization> out(5);
  out[0] = {"x in a{1}", satisfies(a, x, {1}),
            {{"abR = aR, rann(cab) = rann(ab)", abR && rann(cab) == rann(ab)},
             {"abR = aR, Rcab = Rab", abR && lprin(cab) == lprin(ab)}}};
  out[1] = {"x in a{2}, xR = bR", outer && rprin(x) == rprin(b),
            {{"rann(cab) = rann(b)", rann_cab_b}, {"Rcab = Rb", Rcab_Rb}}};
  out[2] = {"x in a{2}, rann(x) = rann(c)", outer && rann(x) == rann(c),
            {{"cabR = cR", cabR_cR}, {"lann(cab) = lann(c)", lann_cab_c}}};
  out[3] = {"x in a{2}, Rx = Rc", outer && lprin(x) == lprin(c),
            {{"lann(cab) = lann(c)", lann_cab_c}, {"cabR = cR", cabR_cR}}};
  out[4] = {"x in a{2}, lann(x) = lann(b)", outer && lann(x) == lann(b),
            {{"Rcab = Rb", Rcab_Rb}, {"rann(cab) = rann(b)", rann_cab_b}}};
  return out;
}

BcInvertibility bc_invertibility(const Element& a, const Element& b, const Element& c) {
  require_same(a, b);
  require_same(a, c);
  Element ab = a * b, ca = c * a, cab = c * ab;
  BcInvertibility out;
  out.right_first = rann(ab).is_zero() && rprin(c).is_whole() && is_direct_sum(rprin(ab), rann(c));
  out.right_second = rann(b).is_zero() && rprin(ca).is_whole() && is_direct_sum(rprin(b), preimage(a, rann(c)));
  out.left_first = lann(ca).is_zero() && lprin(b).is_whole() && is_direct_sum(lprin(ca), lann(b));
  out.left_second = lann(c).is_zero() && lprin(ab).is_whole() && is_direct_sum(lprin(c), preimage(a, lann(b)));
  auto inv = two_sided_inverse(cab);
  out.cab_invertible = inv.has_value();
  if (inv) out.formula = b * *inv * c;
  auto conclusion = [&](BcFlavor flavor) {
    if (!out.formula) return false;
    InverseReport r = outer_with(a, bc_constraints(b, c, flavor), false);
    return r.found() && *r.value == *out.formula;
  };
  if (out.right_first || out.right_second) out.right_conclusion = conclusion(BcFlavor::right_hybrid);
  if (out.left_first || out.left_second) out.left_conclusion = conclusion(BcFlavor::left_hybrid);
  return out;
}

InverseReport bc_inverse(const Element& a, const Element& b, const Element& c, BcFlavor flavor) {
  require_same(a, b);
  require_same(a, c);
  std::string label = std::string("bc(") + bc_flavor_name(flavor) + ")";
  InverseReport r = outer_with(a, bc_constraints(b, c, flavor), false);
  r.inverse = label;
  Element cab = c * a * b;
  if (auto z = inner_inverse(cab)) {
    auto chains = bc_closed_form_clauses(a, b, c, *z);
    r.checks.emplace_back("closed form b(cab)^(1)c: clause chains agree",
                          std::all_of(chains.begin(), chains.end(), [](const Characterization& ch) { return ch.consistent(); }));
    Element closed = b * *z * c;
    if (chains[1].by_equations && chains[2].by_equations) {
      r.checks.emplace_back("b(cab)^(1)c is the right hybrid (b,c) inverse",
                            outer_matches(a, closed, bc_constraints(b, c, BcFlavor::right_hybrid), false));
    }
    if (chains[3].by_equations && chains[4].by_equations) {
      r.checks.emplace_back("b(cab)^(1)c is the left hybrid (b,c) inverse",
                            outer_matches(a, closed, bc_constraints(b, c, BcFlavor::left_hybrid), false));
    }
  }
  BcInvertibility inv = bc_invertibility(a, b, c);
  if (inv.right_conclusion) {
    r.checks.emplace_back("cab invertible and b(cab)^-1 c is the right hybrid inverse", *inv.right_conclusion);
  }
  if (inv.left_conclusion) {
    r.checks.emplace_back("cab invertible and b(cab)^-1 c is the left hybrid inverse", *inv.left_conclusion);
  }
  return r;
}

bool EqualityItem::holds() const {
  return std::any_of(alternatives.begin(), alternatives.end(), [](const auto& alt) { return alt.second; });
}

bool BcEquality::consistent() const {
  if (items.empty()) return true;
  bool first = items.front().holds();
  return std::all_of(items.begin(), items.end(), [&](const EqualityItem& i) { return i.holds() == first; });
}

BcEquality bc_equality(const Element& a, const Element& b, const Element& c, const Element& x) {
  require_same(a, b);
  require_same(a, c);
  require_same(a, x);
  const Ring& ring = a.ring();
  Element cab = c * a * b;
  bool right = outer_matches(a, x, bc_constraints(b, c, BcFlavor::right_hybrid), false);
  bool left = outer_matches(a, x, bc_constraints(b, c, BcFlavor::left_hybrid), false);
  bool full = outer_matches(a, x, bc_constraints(b, c, BcFlavor::full), false);
  bool ann = outer_matches(a, x, bc_constraints(b, c, BcFlavor::annihilator), false);
  auto z = inner_inverse(cab);
  bool cab_regular = z.has_value();
  bool b_regular = inner_inverse(b).has_value();
  bool c_regular = inner_inverse(c).has_value();
  bool in_bR = rprin(b).contains(x);
  bool in_Rc = lprin(c).contains(x);

  // x = b z c for every z in (cab){1}; finite rings check them all.
  bool closed = false;
  if (cab_regular) {
    if (ring.is_finite()) {
      auto inners = enumerate_inverse_set(cab, {1});
      closed = std::all_of(inners.begin(), inners.end(), [&](const Element& w) { return b * w * c == x; });
    } else {
      closed = b * *z * c == x;
    }
  }
  bool rb[2] = {lprin(cab) == lprin(b), rann(cab) == rann(b)};
  bool rc[2] = {rprin(cab) == rprin(c), lann(cab) == lann(c)};
  const char* rb_label[2] = {"Rcab = Rb", "rann(cab) = rann(b)"};
  const char* rc_label[2] = {"cabR = cR", "lann(cab) = lann(c)"};
  const char* bside[2] = {"x in bR", "b{1} nonempty"};
  const char* cside[2] = {"x in Rc", "c{1} nonempty"};
  bool bval[2] = {in_bR, b_regular};
  bool cval[2] = {in_Rc, c_regular};

  BcEquality out;
  out.items.push_back({"right hybrid, Rc side", {{"x = right hybrid, x in Rc", right && in_Rc},
                                                 {"x = right hybrid, c{1} nonempty", right && c_regular}}});
  out.items.push_back({"right hybrid, cab regular", {{"x = right hybrid, (cab){1} nonempty", right && cab_regular}}});
  out.items.push_back({"left hybrid, bR side", {{"x = left hybrid, x in bR", left && in_bR},
                                                {"x = left hybrid, b{1} nonempty", left && b_regular}}});
  out.items.push_back({"left hybrid, cab regular", {{"x = left hybrid, (cab){1} nonempty", left && cab_regular}}});
  out.items.push_back({"(b,c) inverse", {{"x = (b,c) inverse", full}}});
  EqualityItem six{"annihilator, both sides", {}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      six.alternatives.emplace_back(std::string("x = annihilator inverse, ") + bside[i] + ", " + cside[j],
                                    ann && bval[i] && cval[j]);
    }
  }
  out.items.push_back(std::move(six));
  out.items.push_back({"annihilator, cab regular", {{"x = annihilator inverse, (cab){1} nonempty", ann && cab_regular}}});
  EqualityItem eight{"closed form", {}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      eight.alternatives.emplace_back(
          std::string("(cab){1} nonempty, ") + rb_label[i] + ", " + rc_label[j] + ", x = b(cab)^(1)c",
          cab_regular && rb[i] && rc[j] && closed);
    }
  }
  out.items.push_back(std::move(eight));
  return out;
}

// ---------------------------------------------------------------------------

PqFlavor parse_pq_flavor(std::string_view name) {
  if (name == "djordjevic-wei") return PqFlavor::djordjevic_wei;
  if (name == "image-kernel") return PqFlavor::image_kernel;
  if (name == "bott-duffin") return PqFlavor::bott_duffin_p;
  if (name == "bott-duffin-pq") return PqFlavor::bott_duffin_pq;
  throw StructuralError("unknown (p,q) flavor: " + std::string(name));
}

const char* pq_flavor_name(PqFlavor flavor) {
  switch (flavor) {
    case PqFlavor::djordjevic_wei: return "djordjevic-wei";
    case PqFlavor::image_kernel: return "image-kernel";
    case PqFlavor::bott_duffin_p: return "bott-duffin";
    case PqFlavor::bott_duffin_pq: return "bott-duffin-pq";
  }
  return "?";
}

void require_idempotents(const Element& p, const Element& q) {
  if (!is_idempotent(p)) throw PreconditionError("p is not idempotent");
  if (!is_idempotent(q)) throw PreconditionError("q is not idempotent");
}

bool is_djordjevic_wei(const Element& a, const Element& x, const Element& p, const Element& q) {
  return satisfies(a, x, {2}) && x * a == p && a * x == a.ring().one() - q;
}

bool is_bott_duffin(const Element& a, const Element& x, const Element& p, const Element& q) {
  return x == p * x && x == x * q && x * a * p == p && q * a * x == q;
}

bool pq_final_claim(const Element& a, const Element& p, const Element& q) {
  return rann(p) == preimage(a, rprin(q)) && lprin(q) == preimage(a, lann(p));
}

InverseReport pq_inverse(const Element& a, const Element& p, const Element& q, PqFlavor flavor) {
  require_same(a, p);
  require_same(a, q);
  const Element one = a.ring().one();
  std::string label = std::string("pq(") + pq_flavor_name(flavor) + ")";
  auto image_kernel = [&](const Element& kernel_idempotent) {
    return outer_with(a, right_pair(rprin(p), rprin(kernel_idempotent)), false);
  };
  auto relabel = [&](InverseReport r) {
    r.inverse = label;
    return r;
  };
  auto mark_reflexive = [&](InverseReport& r) {
    if (r.found() && satisfies(a, *r.value, {1})) r.satisfied = EquationSet{1, 2};
  };

  switch (flavor) {
    case PqFlavor::image_kernel: {
      require_idempotents(p, q);
      InverseReport r = relabel(image_kernel(q));
      if (r.found()) {
        r.checks.emplace_back("is the Bott-Duffin (p,1-q) inverse", is_bott_duffin(a, *r.value, p, one - q));
        mark_reflexive(r);
      }
      return r;
    }
    case PqFlavor::djordjevic_wei: {
      require_idempotents(p, q);
      InverseReport ik = image_kernel(q);
      if (!ik.found()) return none_report(a, label, "no outer inverse with xR = pR and rann(x) = qR: " + ik.reason);
      const Element& x = *ik.value;
      if (x * a != p) return none_report(a, label, "the image-kernel (p,q) inverse has xa != p");
      if (a * x != one - q) return none_report(a, label, "the image-kernel (p,q) inverse has ax != 1 - q");
      InverseReport r = relabel(ik);
      mark_reflexive(r);
      r.checks.emplace_back("rann(p) = preimage(a, qR) and Rq = left preimage(a, lann p)", pq_final_claim(a, p, q));
      r.checks.emplace_back("equivalent descriptions agree", pq_equality(a, x, p, q).consistent());
      return r;
    }
    case PqFlavor::bott_duffin_p: {
      if (!is_idempotent(p)) throw PreconditionError("p is not idempotent");
      Element u = one - p + a * p;
      auto inv = two_sided_inverse(u);
      if (!inv) return none_report(a, label, "1 - p + ap is not invertible");
      Element x = p * *inv;
      InverseReport r = unique_report(a, label, x, EquationSet{2});
      mark_reflexive(r);
      r.checks.emplace_back("is the Bott-Duffin (p,p) inverse", is_bott_duffin(a, x, p, p));
      InverseReport ik = image_kernel(one - p);
      r.checks.emplace_back("equals the image-kernel (p,1-p) inverse", ik.found() && *ik.value == x);
      return r;
    }
    case PqFlavor::bott_duffin_pq: {
      require_idempotents(p, q);
      InverseReport ik = image_kernel(one - q);
      if (!ik.found()) {
        return none_report(a, label, "no outer inverse with xR = pR and rann(x) = (1-q)R: " + ik.reason);
      }
      const Element& x = *ik.value;
      if (!is_bott_duffin(a, x, p, q)) {
        return none_report(a, label, "the image-kernel (p,1-q) inverse fails x = px = xq, xap = p, qax = q");
      }
      InverseReport r = relabel(ik);
      mark_reflexive(r);
      if (p == q) {
        auto inv = two_sided_inverse(one - p + a * p);
        r.checks.emplace_back("equals p(1 - p + ap)^-1", inv && p * *inv == x);
      }
      return r;
    }
  }
  throw StructuralError("unknown (p,q) flavor");
}

BcEquality pq_equality(const Element& a, const Element& x, const Element& p, const Element& q) {
  require_same(a, x);
  require_idempotents(p, q);
  const Element one = a.ring().one();
  Element ax = a * x, xa = x * a;
  bool outer = satisfies(a, x, {2});
  BcEquality out;
  out.items.push_back({"definition", {{"x in a{2}, xa = p, ax = 1-q", is_djordjevic_wei(a, x, p, q)}}});
  out.items.push_back({"weakened right form",
                       {{"a(1-p)R in qR, xap = p, 1-q = ax, xq = 0",
                         subset(rprin(a * (one - p)), rprin(q)) && x * a * p == p && ax == one - q &&
                             (x * q).is_zero()}}});
  out.items.push_back({"weakened left form",
                       {{"Rqa in R(1-p), p = xa, px = x, (1-q)ax = 1-q",
                         subset(lprin(q * a), lprin(one - p)) && xa == p && p * x == x &&
                             (one - q) * ax == one - q}}});
  bool pa[2] = {subset(rprin(xa), rprin(p)) && subset(rann(xa), rann(p)),
                subset(rprin(p), rprin(xa)) && subset(rann(p), rann(xa))};
  bool qa[2] = {subset(rprin(ax), rann(q)) && subset(rann(ax), rprin(q)),
                subset(rann(q), rprin(ax)) && subset(rprin(q), rann(ax))};
  const char* pl[2] = {"xaR in pR, rann(xa) in rann(p)", "pR in xaR, rann(p) in rann(xa)"};
  const char* ql[2] = {"axR in rann(q), rann(ax) in qR", "rann(q) in axR, qR in rann(ax)"};
  EqualityItem inclusions{"inclusion form", {}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      inclusions.alternatives.emplace_back(std::string("x in a{2}, ") + pl[i] + ", " + ql[j], outer && pa[i] && qa[j]);
    }
  }
  out.items.push_back(std::move(inclusions));
  out.items.push_back({"right prescribed form",
                       {{"x = outer(pR, qR), apR = (1-q)R, preimage(a, qR) = (1-p)R",
                         outer_matches(a, x, right_pair(rprin(p), rprin(q)), false) &&
                             rprin(a * p) == rprin(one - q) && preimage(a, rprin(q)) == rprin(one - p)}}});
  out.items.push_back({"left prescribed form",
                       {{"x = outer(lann q, lann p), R(1-q)a = Rp, left preimage(a, R(1-p)) = Rq",
                         outer_matches(a, x, left_pair(lann(q), lann(p)), false) &&
                             lprin((one - q) * a) == lprin(p) && preimage(a, lprin(one - p)) == lprin(q)}}});
  return out;
}

}  // namespace geninv
