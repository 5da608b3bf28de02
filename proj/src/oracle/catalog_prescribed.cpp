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

// Inner inverses with prescribed ideals, their solution sets, and outer
// inverses with prescribed ideals including the Mitsch order results.

#include <set>

#include "checks.hpp"

namespace geninv::oracle::detail {

namespace {

using S = TableRing;

// Which ideal an inner inverse prescribes.
enum class Kind { rprin, rann, lprin, lann };

bool right_side(Kind k) { return k == Kind::rprin || k == Kind::rann; }

const std::vector<Set>& ideals_for(const TableRing& r, Kind k) {
  return right_side(k) ? r.right_ideals() : r.left_ideals();
}

const char* ideal_name(Kind k) {
  switch (k) {
    case Kind::rprin: return "S";
    case Kind::rann: return "T";
    case Kind::lprin: return "S'";
    case Kind::lann: return "T'";
  }
  return "?";
}

// xaR = S, rann(ax) = T, Rax = S', lann(xa) = T'.
bool inner_constraint(const TableRing& r, Kind k, const Set& ideal, Index a, Index x) {
  switch (k) {
    case Kind::rprin: return r.rprin(r.mul(x, a)) == ideal;
    case Kind::rann: return r.rann(r.mul(a, x)) == ideal;
    case Kind::lprin: return r.lprin(r.mul(a, x)) == ideal;
    case Kind::lann: return r.lann(r.mul(x, a)) == ideal;
  }
  return false;
}

// The projector form of the constraint.
bool inner_projector(const TableRing& r, Kind k, const Set& ideal, Index a, Index x) {
  switch (k) {
    case Kind::rprin: return r.rho_right(r.mul(x, a), ideal, r.rann(a));
    case Kind::rann: return r.rho_right(r.mul(a, x), r.rprin(a), ideal);
    case Kind::lprin: return r.rho_left(r.mul(a, x), ideal, r.lann(a));
    case Kind::lann: return r.rho_left(r.mul(x, a), r.lprin(a), ideal);
  }
  return false;
}

// The decomposition behind the constraint: S (+) rann a, aR (+) T,
// S' (+) lann a, Ra (+) T'.
bool inner_direct_sum(const TableRing& r, Kind k, const Set& ideal, Index a) {
  switch (k) {
    case Kind::rprin: return r.direct_sum(ideal, r.rann(a));
    case Kind::rann: return r.direct_sum(r.rprin(a), ideal);
    case Kind::lprin: return r.direct_sum(ideal, r.lann(a));
    case Kind::lann: return r.direct_sum(r.lprin(a), ideal);
  }
  return false;
}

// rho(1) of that decomposition, when it exists.
std::optional<Index> unit_of(const TableRing& r, Kind k, const Set& ideal, Index a) {
  switch (k) {
    case Kind::rprin: return r.unit_component(ideal, r.rann(a));
    case Kind::rann: return r.unit_component(r.rprin(a), ideal);
    case Kind::lprin: return r.unit_component(ideal, r.lann(a));
    case Kind::lann: return r.unit_component(r.lprin(a), ideal);
  }
  return std::nullopt;
}

// rprin and lann factors sit on the left of a^(1); rann and lprin on the right.
bool left_factor(Kind k) { return k == Kind::rprin || k == Kind::lann; }

// Left and right factors for the constraint list; nullopt when a needed
// decomposition fails.
std::optional<std::pair<Index, Index>> factors(const TableRing& r, const std::vector<Kind>& kinds,
                                               const std::vector<const Set*>& ideals, Index a) {
  Index left = r.one();
  Index right = r.one();
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    const auto unit = unit_of(r, kinds[i], *ideals[i], a);
    if (!unit) return std::nullopt;
    (left_factor(kinds[i]) ? left : right) = *unit;
  }
  return std::make_pair(left, right);
}

struct Shape {
  const char* id;
  std::vector<Kind> kinds;
  bool needs_regular;  // the general-solution clause also asks for a{1} nonempty
};

const std::vector<Shape>& inner_shapes() {
  static const std::vector<Shape> shapes = {
      {"T-1I-rprin-rann", {Kind::rprin, Kind::rann}, false},
      {"T-1I-lprin-lann", {Kind::lprin, Kind::lann}, false},
      {"T-1I-rprin-lprin", {Kind::rprin, Kind::lprin}, true},
      {"T-1I-rann-lann", {Kind::rann, Kind::lann}, false},
      {"T-1I-rprin", {Kind::rprin}, true},
      {"T-1I-rann", {Kind::rann}, false},
      {"T-1I-lprin", {Kind::lprin}, true},
      {"T-1I-lann", {Kind::lann}, false},
  };
  return shapes;
}

// Calls visit(ideals) for every assignment of ideals to the shape's kinds,
// first kind slowest. Stops when visit returns false.
template <class Visit>
void for_each_assignment(const TableRing& r, const std::vector<Kind>& kinds, Visit visit) {
  std::vector<const Set*> chosen(kinds.size());
  std::function<bool(std::size_t)> rec = [&](std::size_t i) {
    if (i == kinds.size()) return visit(chosen);
    for (const Set& ideal : ideals_for(r, kinds[i])) {
      chosen[i] = &ideal;
      if (!rec(i + 1)) return false;
    }
    return true;
  };
  rec(0);
}

// (1 - za) y (1 - az) for all y: the homogeneous part of the general solution.
Set general_solutions(const TableRing& r, Index a, Index left, Index z, Index right) {
  Set out = r.empty_set();
  const Index base = r.mul3(left, z, right);
  const Index p = r.sub(r.one(), r.mul(z, a));
  const Index q = r.sub(r.one(), r.mul(a, z));
  for (Index y = 0; y < r.size(); ++y) out.set(r.add(base, r.mul3(p, y, q)));
  return out;
}

void inner_shape_check(const TableRing& r, CaseSink& sink, const Shape& shape) {
  const auto inner = inner_inverses(r);
  for (Index a = 0; a < r.size(); ++a) {
    bool go = true;
    for_each_assignment(r, shape.kinds, [&](const std::vector<const Set*>& ideals) {
      Set formula = r.empty_set();
      if (const auto f = factors(r, shape.kinds, ideals, a))
        for (Index z : inner[a]) formula |= general_solutions(r, a, f->first, z, f->second);
      for (Index x = 0; x < r.size() && go; ++x) {
        bool constrained = r.satisfies(a, x, {1});
        bool projected = true;
        for (std::size_t i = 0; i < shape.kinds.size(); ++i) {
          constrained = constrained && inner_constraint(r, shape.kinds[i], *ideals[i], a, x);
          projected = projected && inner_projector(r, shape.kinds[i], *ideals[i], a, x);
        }
        const bool general = formula.test(x) && (!shape.needs_regular || r.regular(a));
        const Failure f = equivalent({{"x in a{1} with the prescribed ideals", constrained},
                                      {"projector form", projected},
                                      {"general solution form", general}});
        if (shape.kinds.size() == 2) {
          go = sink.check(f, {{"a", a},
                              {ideal_name(shape.kinds[0]), ideals[0]},
                              {ideal_name(shape.kinds[1]), ideals[1]},
                              {"x", x}});
        } else {
          go = sink.check(f, {{"a", a}, {ideal_name(shape.kinds[0]), ideals[0]}, {"x", x}});
        }
      }
      return go;
    });
    if (!go) return;
  }
}

// The principal ideals of idempotents and the annihilators of idempotents.
struct IdempotentIdeals {
  std::set<Set> rprin, rann, lprin, lann;
};

IdempotentIdeals idempotent_ideals(const TableRing& r) {
  IdempotentIdeals out;
  for (Index p : idempotents(r)) {
    out.rprin.insert(r.rprin(p));
    out.rann.insert(r.rann(p));
    out.lprin.insert(r.lprin(p));
    out.lann.insert(r.lann(p));
  }
  return out;
}

void idempotent_generated_inner(const TableRing& r, CaseSink& sink) {
  const IdempotentIdeals idem = idempotent_ideals(r);
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      const auto unit = r.unit_component(s, r.rann(a));
      const Failure f = first_failure({
          implies({"a regular with R = S (+) rann a", r.regular(a) && r.direct_sum(s, r.rann(a))},
                  {"S = pR for an idempotent p", idem.rprin.count(s) > 0}),
          implies({"rho(S, rann a)(1) in aR", unit && r.rprin(a).test(*unit)},
                  {"S = pR for an idempotent p", idem.rprin.count(s) > 0}),
          implies({"R = aR (+) T", r.direct_sum(r.rprin(a), s)},
                  {"T = rann q for an idempotent q", idem.rann.count(s) > 0}),
      });
      if (!sink.check(f, {{"a", a}, {"right ideal", &s}})) return;
    }
    for (const Set& s : r.left_ideals()) {
      const auto unit = r.unit_component(s, r.lann(a));
      const Failure f = first_failure({
          implies({"a regular with R = S' (+) lann a", r.regular(a) && r.direct_sum(s, r.lann(a))},
                  {"S' = Rq for an idempotent q", idem.lprin.count(s) > 0}),
          implies({"rho(S', lann a)(1) in Ra", unit && r.lprin(a).test(*unit)},
                  {"S' = Rq for an idempotent q", idem.lprin.count(s) > 0}),
          implies({"R = Ra (+) T'", r.direct_sum(r.lprin(a), s)},
                  {"T' = lann p for an idempotent p", idem.lann.count(s) > 0}),
      });
      if (!sink.check(f, {{"a", a}, {"left ideal", &s}})) return;
    }
  }
}

// With A(z) = {z + (1 - za) y (1 - az)} for z in a{1}: under the shape's
// decompositions and with z meeting the constraints, A(z) equals the
// constrained set for two constraints. For one constraint A(z) is contained
// in it, and the union of A(z) over all such z equals it.
void solution_sets(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  for (const Shape& shape : inner_shapes()) {
    for (Index a = 0; a < r.size(); ++a) {
      std::vector<Set> families;
      for (Index z : inner[a]) families.push_back(general_solutions(r, a, r.one(), z, r.one()));
      bool go = true;
      for_each_assignment(r, shape.kinds, [&](const std::vector<const Set*>& ideals) {
        bool decomposes = true;
        for (std::size_t i = 0; i < shape.kinds.size(); ++i)
          decomposes = decomposes && inner_direct_sum(r, shape.kinds[i], *ideals[i], a);
        auto meets = [&](Index x) {
          for (std::size_t i = 0; i < shape.kinds.size(); ++i)
            if (!inner_constraint(r, shape.kinds[i], *ideals[i], a, x)) return false;
          return true;
        };
        Set constrained = r.empty_set();
        Set union_of = r.empty_set();
        for (std::size_t i = 0; i < inner[a].size(); ++i) {
          if (!meets(inner[a][i])) continue;
          constrained.set(inner[a][i]);
          union_of |= families[i];
        }
        for (std::size_t i = 0; i < inner[a].size() && go; ++i) {
          const Index z = inner[a][i];
          Failure f;
          if (decomposes && meets(z)) {
            if (shape.kinds.size() == 2) {
              f = require({"A equals the constrained {1}-inverses", families[i] == constrained});
            } else {
              f = first_failure({
                  require({"A is contained in the constrained {1}-inverses", families[i].is_subset_of(constrained)}),
                  require({"the union of A over admissible a^(1) equals the constrained {1}-inverses",
                           union_of == constrained}),
              });
            }
            if (f) *f = std::string(shape.id) + ": " + *f;
          }
          if (shape.kinds.size() == 2) {
            go = sink.check(f, {{"a", a},
                                {ideal_name(shape.kinds[0]), ideals[0]},
                                {ideal_name(shape.kinds[1]), ideals[1]},
                                {"a^(1)", z}});
          } else {
            go = sink.check(f, {{"a", a}, {ideal_name(shape.kinds[0]), ideals[0]}, {"a^(1)", z}});
          }
        }
        return go;
      });
      if (!go) return;
    }
  }
}

// ---------------------------------------------------------------------------
// Outer inverses.

// for all s in S: x a s = s.
bool left_identity_on(const TableRing& r, Index xa, const Set& s) {
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
    if (r.mul(xa, static_cast<Index>(i)) != i) return false;
  return true;
}

// for all s in S: s a x = s.
bool right_identity_on(const TableRing& r, const Set& s, Index ax) {
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
    if (r.mul(static_cast<Index>(i), ax) != i) return false;
  return true;
}

// x T = 0 and T x = 0.
bool kills_right(const TableRing& r, Index x, const Set& t) { return t.is_subset_of(r.rann(x)); }
bool kills_left(const TableRing& r, const Set& t, Index x) { return t.is_subset_of(r.lann(x)); }

std::vector<Index> outer_matching(const TableRing& r, Index a, const std::function<bool(Index)>& predicate) {
  std::vector<Index> out;
  for (Index x = 0; x < r.size(); ++x)
    if (r.satisfies(a, x, {2}) && predicate(x)) out.push_back(x);
  return out;
}

void outer_rprin_rann_unique(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      const Set as = r.left_image(a, s);
      for (const Set& t : r.right_ideals()) {
        const auto xs = outer_matching(r, a, [&](Index x) { return r.rprin(x) == s && r.rann(x) == t; });
        std::vector<Failure> fs = {require({"at most one such outer inverse", xs.size() <= 1})};
        const Set pre = r.right_preimage(a, t);
        for (Index x : xs) {
          fs.push_back(require({"phi_ax = rho(aS, T)", r.rho_right(r.mul(a, x), as, t)}));
          fs.push_back(require({"phi_xa = rho(S, preimage of T under a)", r.rho_right(r.mul(x, a), s, pre)}));
        }
        if (!sink.check(first_failure(fs), {{"a", a}, {"S", &s}, {"T", &t}})) return;
      }
    }
  }
}

void outer_lprin_lann_unique(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.left_ideals()) {
      const Set sa = r.right_image(s, a);
      for (const Set& t : r.left_ideals()) {
        const auto xs = outer_matching(r, a, [&](Index x) { return r.lprin(x) == s && r.lann(x) == t; });
        std::vector<Failure> fs = {require({"at most one such outer inverse", xs.size() <= 1})};
        const Set pre = r.left_preimage(a, t);
        for (Index x : xs) {
          fs.push_back(require({"_xa phi = rho(S'a, T')", r.rho_left(r.mul(x, a), sa, t)}));
          fs.push_back(require({"_ax phi = rho(S', left preimage of T' under a)", r.rho_left(r.mul(a, x), s, pre)}));
        }
        if (!sink.check(first_failure(fs), {{"a", a}, {"S'", &s}, {"T'", &t}})) return;
      }
    }
  }
}

void outer_rprin_rann_existence(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      const Set as = r.left_image(a, s);
      const bool meet = r.trivial_meet(r.rann(a), s);
      for (const Set& t : r.right_ideals()) {
        const bool exists =
            !outer_matching(r, a, [&](Index x) { return r.rprin(x) == s && r.rann(x) == t; }).empty();
        bool projected = false, identities = false;
        for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) {
          const Index x = static_cast<Index>(i);
          const Index ax = r.mul(a, x);
          projected = projected || (r.rho_right(ax, as, t) && meet);
          identities = identities || (left_identity_on(r, r.mul(x, a), s) && t.test(r.sub(r.one(), ax)) &&
                                      kills_right(r, x, t));
        }
        const Failure f = equivalent({{"the outer inverse with xR = S, rann x = T exists", exists},
                                      {"some x in S has phi_ax = rho(aS, T), rann a meets S trivially", projected},
                                      {"R = aS (+) T, rann a meets S trivially", r.direct_sum(as, t) && meet},
                                      {"some x in S fixes S under xa, 1 - ax in T, xT = 0", identities}});
        if (!sink.check(f, {{"a", a}, {"S", &s}, {"T", &t}})) return;
      }
    }
  }
}

void outer_lprin_lann_existence(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.left_ideals()) {
      const Set sa = r.right_image(s, a);
      const bool meet = r.trivial_meet(r.lann(a), s);
      for (const Set& t : r.left_ideals()) {
        const bool exists =
            !outer_matching(r, a, [&](Index x) { return r.lprin(x) == s && r.lann(x) == t; }).empty();
        bool projected = false, identities = false;
        for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) {
          const Index x = static_cast<Index>(i);
          const Index xa = r.mul(x, a);
          projected = projected || (r.rho_left(xa, sa, t) && meet);
          identities = identities || (right_identity_on(r, s, r.mul(a, x)) && t.test(r.sub(r.one(), xa)) &&
                                      kills_left(r, t, x));
        }
        const Failure f = equivalent({{"the outer inverse with Rx = S', lann x = T' exists", exists},
                                      {"some x in S' has _xa phi = rho(S'a, T'), lann a meets S' trivially", projected},
                                      {"R = S'a (+) T', lann a meets S' trivially", r.direct_sum(sa, t) && meet},
                                      {"some x in S' fixes S' under ax, 1 - xa in T', T'x = 0", identities}});
        if (!sink.check(f, {{"a", a}, {"S'", &s}, {"T'", &t}})) return;
      }
    }
  }
}

void outer_rprin_lprin_existence(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      const Set as = r.left_image(a, s);
      const Set lann_s = r.lann_of(s);
      for (const Set& sp : r.left_ideals()) {
        const Set spa = r.right_image(sp, a);
        const Set rann_sp = r.rann_of(sp);
        const auto xs = outer_matching(r, a, [&](Index x) { return r.rprin(x) == s && r.lprin(x) == sp; });
        bool identities = false, projected = false;
        const Set both = s & sp;
        for (std::size_t i = both.find_first(); i != Set::npos; i = both.find_next(i)) {
          const Index x = static_cast<Index>(i);
          const Index ax = r.mul(a, x);
          const Index xa = r.mul(x, a);
          identities = identities || (left_identity_on(r, xa, s) && right_identity_on(r, sp, ax));
          projected = projected || (r.rho_right(ax, as, rann_sp) && r.rho_left(xa, spa, lann_s));
        }
        std::vector<Failure> fs = {
            equivalent({{"an outer inverse with xR = S, Rx = S' exists", !xs.empty()},
                        {"R = aS (+) rann S' and R = S'a (+) lann S",
                         r.direct_sum(as, rann_sp) && r.direct_sum(spa, lann_s)},
                        {"some x in S meet S' fixes S under xa and S' under ax", identities},
                        {"some x in S meet S' has phi_ax = rho(aS, rann S') and _xa phi = rho(S'a, lann S)",
                         projected}}),
            require({"at most one such outer inverse", xs.size() <= 1}),
        };
        for (Index x : xs) {
          fs.push_back(require({"it has rann x = rann S'", r.rann(x) == rann_sp}));
          fs.push_back(require({"it has lann x = lann S", r.lann(x) == lann_s}));
        }
        if (!sink.check(first_failure(fs), {{"a", a}, {"S", &s}, {"S'", &sp}})) return;
      }
    }
  }
}

void outer_rann_lann(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& t : r.right_ideals()) {
      for (const Set& tp : r.left_ideals()) {
        const auto xs = outer_matching(r, a, [&](Index x) { return r.rann(x) == t && r.lann(x) == tp; });
        bool go = sink.check(require({"at most one such outer inverse", xs.size() <= 1}),
                             {{"a", a}, {"T", &t}, {"T'", &tp}});
        for (Index x = 0; x < r.size() && go; ++x) {
          const Index ax = r.mul(a, x);
          const Index xa = r.mul(x, a);
          const bool proj = r.rho_right(ax, r.rprin(ax), t) && r.rho_left(xa, r.lprin(xa), tp);
          const Failure f = equivalent({
              {"x in a{2} with rann x = T and lann x = T'",
               r.satisfies(a, x, {2}) && r.rann(x) == t && r.lann(x) == tp},
              {"projectors with rann a meeting xR trivially", proj && r.trivial_meet(r.rann(a), r.rprin(x))},
              {"projectors with lann a meeting Rx trivially", proj && r.trivial_meet(r.lann(a), r.lprin(x))},
              {"projectors with T in rann x", proj && kills_right(r, x, t)},
              {"projectors with T' in lann x", proj && kills_left(r, tp, x)},
              {"1 - ax in T, xT = 0, 1 - xa in T', T'x = 0",
               t.test(r.sub(r.one(), ax)) && kills_right(r, x, t) && tp.test(r.sub(r.one(), xa)) &&
                   kills_left(r, tp, x)},
          });
          go = sink.check(f, {{"a", a}, {"T", &t}, {"T'", &tp}, {"x", x}});
        }
        if (!go) return;
      }
    }
  }
}

void idempotent_generated_outer(const TableRing& r, CaseSink& sink) {
  const IdempotentIdeals idem = idempotent_ideals(r);
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      for (const Set& t : r.right_ideals()) {
        const bool exists =
            !outer_matching(r, a, [&](Index x) { return r.rprin(x) == s && r.rann(x) == t; }).empty();
        const Failure f = implies({"the outer inverse with xR = S, rann x = T exists", exists},
                                  {"S = pR and T = rann q for idempotents p, q",
                                   idem.rprin.count(s) > 0 && idem.rann.count(t) > 0});
        if (!sink.check(f, {{"a", a}, {"S", &s}, {"T", &t}})) return;
      }
      for (const Set& sp : r.left_ideals()) {
        const bool exists =
            !outer_matching(r, a, [&](Index x) { return r.rprin(x) == s && r.lprin(x) == sp; }).empty();
        const Failure f = implies({"the outer inverse with xR = S, Rx = S' exists", exists},
                                  {"S = pR and S' = Rq for idempotents p, q",
                                   idem.rprin.count(s) > 0 && idem.lprin.count(sp) > 0});
        if (!sink.check(f, {{"a", a}, {"S", &s}, {"S'", &sp}})) return;
      }
    }
    for (const Set& s : r.left_ideals()) {
      for (const Set& t : r.left_ideals()) {
        const bool exists =
            !outer_matching(r, a, [&](Index x) { return r.lprin(x) == s && r.lann(x) == t; }).empty();
        const Failure f = implies({"the outer inverse with Rx = S', lann x = T' exists", exists},
                                  {"S' = Rp and T' = lann q for idempotents p, q",
                                   idem.lprin.count(s) > 0 && idem.lann.count(t) > 0});
        if (!sink.check(f, {{"a", a}, {"S'", &s}, {"T'", &t}})) return;
      }
    }
    for (const Set& t : r.right_ideals()) {
      for (const Set& tp : r.left_ideals()) {
        const bool exists =
            !outer_matching(r, a, [&](Index x) { return r.rann(x) == t && r.lann(x) == tp; }).empty();
        const Failure f = implies({"the outer inverse with rann x = T, lann x = T' exists", exists},
                                  {"T = rann p and T' = lann q for idempotents p, q",
                                   idem.rann.count(t) > 0 && idem.lann.count(tp) > 0});
        if (!sink.check(f, {{"a", a}, {"T", &t}, {"T'", &tp}})) return;
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Mitsch order.

// y <= z iff vz = vy = y = yw = zw for some v, w.
bool mitsch(const TableRing& r, Index y, Index z) {
  bool left = false, right = false;
  for (Index v = 0; v < r.size() && !left; ++v) left = r.mul(v, z) == y && r.mul(v, y) == y;
  for (Index w = 0; w < r.size() && !right; ++w) right = r.mul(y, w) == y && r.mul(z, w) == y;
  return left && right;
}

enum class Pair { rprin_lprin, rprin_rann, lprin_lann, rann_lann };

struct MitschShape {
  Pair pair;
  const char* first;
  const char* second;
};

const MitschShape kMitschShapes[] = {
    {Pair::rprin_lprin, "S", "S'"},
    {Pair::rprin_rann, "S", "T"},
    {Pair::lprin_lann, "S'", "T'"},
    {Pair::rann_lann, "T", "T'"},
};

const std::vector<Set>& first_ideals(const TableRing& r, Pair p) {
  return p == Pair::lprin_lann ? r.left_ideals() : r.right_ideals();
}

const std::vector<Set>& second_ideals(const TableRing& r, Pair p) {
  return p == Pair::rprin_rann ? r.right_ideals() : r.left_ideals();
}

// Y: outer inverses inside the prescribed ideals. Z: outer inverses
// containing them.
struct MitschSets {
  std::vector<Index> lower, upper, target;
};

MitschSets mitsch_sets(const TableRing& r, Pair p, Index a, const Set& i1, const Set& i2) {
  MitschSets out;
  for (Index x = 0; x < r.size(); ++x) {
    if (!r.satisfies(a, x, {2})) continue;
    bool lower = false, upper = false, target = false;
    switch (p) {
      case Pair::rprin_lprin:
        lower = i1.test(x) && i2.test(x);
        upper = i1.is_subset_of(r.rprin(x)) && i2.is_subset_of(r.lprin(x));
        target = r.rprin(x) == i1 && r.lprin(x) == i2;
        break;
      case Pair::rprin_rann:
        lower = i1.test(x) && i2.is_subset_of(r.rann(x));
        upper = i1.is_subset_of(r.rprin(x)) && r.rann(x).is_subset_of(i2);
        target = r.rprin(x) == i1 && r.rann(x) == i2;
        break;
      case Pair::lprin_lann:
        lower = i1.test(x) && i2.is_subset_of(r.lann(x));
        upper = i1.is_subset_of(r.lprin(x)) && r.lann(x).is_subset_of(i2);
        target = r.lprin(x) == i1 && r.lann(x) == i2;
        break;
      case Pair::rann_lann:
        lower = i1.is_subset_of(r.rann(x)) && i2.is_subset_of(r.lann(x));
        upper = r.rann(x).is_subset_of(i1) && r.lann(x).is_subset_of(i2);
        target = r.rann(x) == i1 && r.lann(x) == i2;
        break;
    }
    if (lower) out.lower.push_back(x);
    if (upper) out.upper.push_back(x);
    if (target) out.target.push_back(x);
  }
  return out;
}

void mitsch_lemma(const TableRing& r, CaseSink& sink) {
  for (const MitschShape& shape : kMitschShapes) {
    for (Index a = 0; a < r.size(); ++a) {
      for (const Set& i1 : first_ideals(r, shape.pair)) {
        for (const Set& i2 : second_ideals(r, shape.pair)) {
          const MitschSets sets = mitsch_sets(r, shape.pair, a, i1, i2);
          for (Index y : sets.lower) {
            for (Index z : sets.upper) {
              const Failure f = require({"y is below z in the Mitsch order", mitsch(r, y, z)});
              if (!sink.check(f, {{"a", a}, {shape.first, &i1}, {shape.second, &i2}, {"y", y}, {"z", z}})) return;
            }
          }
        }
      }
    }
  }
}

void mitsch_theorem(const TableRing& r, CaseSink& sink) {
  for (const MitschShape& shape : kMitschShapes) {
    for (Index a = 0; a < r.size(); ++a) {
      for (const Set& i1 : first_ideals(r, shape.pair)) {
        for (const Set& i2 : second_ideals(r, shape.pair)) {
          const MitschSets sets = mitsch_sets(r, shape.pair, a, i1, i2);
          const Set lower = of_list(r, sets.lower);
          const Set upper = of_list(r, sets.upper);
          const Set target = of_list(r, sets.target);
          for (Index x = 0; x < r.size(); ++x) {
            bool extremal = lower.test(x) && upper.test(x);
            for (Index y : sets.lower) extremal = extremal && mitsch(r, y, x);
            for (Index z : sets.upper) extremal = extremal && mitsch(r, x, z);
            const Failure f = equivalent({{"x is the prescribed outer inverse", target.test(x)},
                                          {"x in Y and Z", lower.test(x) && upper.test(x)},
                                          {"x = max Y = min Z", extremal}});
            if (!sink.check(f, {{"a", a}, {shape.first, &i1}, {shape.second, &i2}, {"x", x}})) return;
          }
        }
      }
    }
  }
}

}  // namespace

void add_prescribed_cases(std::vector<TheoremCase>& out) {
  for (const Shape& shape : inner_shapes()) {
    std::string scope = "a";
    for (Kind k : shape.kinds) scope += std::string(", ") + ideal_name(k);
    scope += ", x";
    out.push_back({shape.id,
                   "x in a{1} with the prescribed ideals iff the projector form holds iff x has the general "
                   "solution form built from rho(1) factors",
                   scope + "; ideals range over all one-sided ideals of the matching side", false,
                   [&shape](const TableRing& r, CaseSink& sink) { inner_shape_check(r, sink, shape); }});
  }
  out.push_back({"C-idempotent-generated-1I",
                 "complements of annihilators and images are generated by idempotents",
                 "a, one-sided ideals", false, idempotent_generated_inner});
  out.push_back({"P-solution-sets",
                 "the translate family of one inner inverse is the constrained set (two constraints) or contained "
                 "in it with the union over admissible inner inverses equal to it (one constraint)",
                 "shape, a, ideals, a^(1) in a{1}", false, solution_sets});
  out.push_back({"T-2I-rprin-rann-unique",
                 "an outer inverse with xR = S and rann x = T is unique and projects onto aS along T",
                 "a, right ideals S, T", false, outer_rprin_rann_unique});
  out.push_back({"T-2I-lprin-lann-unique",
                 "an outer inverse with Rx = S' and lann x = T' is unique and projects onto S'a along T'",
                 "a, left ideals S', T'", false, outer_lprin_lann_unique});
  out.push_back({"T-2I-rprin-rann-existence", "existence of the outer inverse with xR = S and rann x = T",
                 "a, right ideals S, T", false, outer_rprin_rann_existence});
  out.push_back({"T-2I-lprin-lann-existence", "existence of the outer inverse with Rx = S' and lann x = T'",
                 "a, left ideals S', T'", false, outer_lprin_lann_existence});
  out.push_back({"T-2I-rprin-lprin-existence",
                 "existence and uniqueness of the outer inverse with xR = S and Rx = S'",
                 "a, right ideal S, left ideal S'", false, outer_rprin_lprin_existence});
  out.push_back({"T-2I-rann-lann", "the outer inverse with rann x = T and lann x = T': six descriptions, uniqueness",
                 "a, right ideal T, left ideal T', x", false, outer_rann_lann});
  out.push_back({"C-idempotent-generated-outer",
                 "ideals prescribed to an existing outer inverse are generated by idempotents",
                 "a, ideal pairs of each shape", false, idempotent_generated_outer});
  out.push_back({"L-mitsch", "every y in Y lies below every z in Z in the Mitsch order",
                 "shape, a, ideals, y in Y, z in Z", false, mitsch_lemma});
  out.push_back({"T-mitsch", "the prescribed outer inverse is Y meet Z, the maximum of Y and the minimum of Z",
                 "shape, a, ideals, x", false, mitsch_theorem});
}

}  // namespace geninv::oracle::detail
