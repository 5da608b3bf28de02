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

// Inner inverses with symmetric products: projector characterizations and
// descriptions of the solution sets by ideals.

#include "checks.hpp"

namespace geninv::oracle::detail {

namespace {

// Projector conditions shared by the star classes. Each member evaluates one
// form of "ax (or xa) is the projector onto an ideal along another".
struct StarProjectors {
  bool ax_onto_a_along_rann_as;   // ax = rho(aR, rann a*)
  bool ax_onto_as_along_lann_a;   // ax = rho(Ra*, lann a), left form
  bool ax_onto_a_along_rann_a;    // ax = rho(aR, rann a)
  bool ax_onto_a_along_lann_a;    // ax = rho(Ra, lann a), left form
  bool xa_onto_as_along_rann_a;   // xa = rho(a*R, rann a)
  bool xa_onto_a_along_lann_as;   // xa = rho(Ra, lann a*), left form
  bool xa_onto_a_along_rann_a;    // xa = rho(aR, rann a)
  bool xa_onto_a_along_lann_a;    // xa = rho(Ra, lann a), left form
};

StarProjectors star_projectors(const TableRing& r, Index a, Index x) {
  const Index as = r.star(a);
  const Index ax = r.mul(a, x);
  const Index xa = r.mul(x, a);
  return {r.rho_right(ax, r.rprin(a), r.rann(as)), r.rho_left(ax, r.lprin(as), r.lann(a)),
          r.rho_right(ax, r.rprin(a), r.rann(a)),  r.rho_left(ax, r.lprin(a), r.lann(a)),
          r.rho_right(xa, r.rprin(as), r.rann(a)), r.rho_left(xa, r.lprin(a), r.lann(as)),
          r.rho_right(xa, r.rprin(a), r.rann(a)),  r.rho_left(xa, r.lprin(a), r.lann(a))};
}

template <class Check>
void pair_cases(const TableRing& r, CaseSink& sink, Check check) {
  for (Index a = 0; a < r.size(); ++a)
    for (Index x = 0; x < r.size(); ++x)
      if (!sink.check(check(a, x, star_projectors(r, a, x)), {{"a", a}, {"x", x}})) return;
}

void projectors_13(const TableRing& r, CaseSink& sink) {
  pair_cases(r, sink, [&](Index a, Index x, const StarProjectors& p) {
    return equivalent({{"x in a{1,3}", r.satisfies(a, x, {1, 3})},
                       {"ax = rho(aR, rann a*)", p.ax_onto_a_along_rann_as},
                       {"ax = rho(Ra*, lann a) on the left", p.ax_onto_as_along_lann_a}});
  });
}

void projectors_14(const TableRing& r, CaseSink& sink) {
  pair_cases(r, sink, [&](Index a, Index x, const StarProjectors& p) {
    return equivalent({{"x in a{1,4}", r.satisfies(a, x, {1, 4})},
                       {"xa = rho(a*R, rann a)", p.xa_onto_as_along_rann_a},
                       {"xa = rho(Ra, lann a*) on the left", p.xa_onto_a_along_lann_as}});
  });
}

void projectors_134(const TableRing& r, CaseSink& sink) {
  pair_cases(r, sink, [&](Index a, Index x, const StarProjectors& p) {
    return equivalent({{"x in a{1,3,4}", r.satisfies(a, x, {1, 3, 4})},
                       {"right ax, right xa", p.ax_onto_a_along_rann_as && p.xa_onto_as_along_rann_a},
                       {"left ax, left xa", p.ax_onto_as_along_lann_a && p.xa_onto_a_along_lann_as},
                       {"right ax, left xa", p.ax_onto_a_along_rann_as && p.xa_onto_a_along_lann_as},
                       {"left ax, right xa", p.ax_onto_as_along_lann_a && p.xa_onto_as_along_rann_a}});
  });
}

void projectors_136(const TableRing& r, CaseSink& sink) {
  pair_cases(r, sink, [&](Index a, Index x, const StarProjectors& p) {
    const Clause target{"x in a{1,3,6}", r.satisfies(a, x, {1, 3, 6})};
    return first_failure({
        implies({"right ax, right xa", p.ax_onto_a_along_rann_as && p.xa_onto_a_along_rann_a}, target),
        implies({"left ax, left xa", p.ax_onto_as_along_lann_a && p.xa_onto_a_along_lann_a}, target),
        implies({"right ax, left xa", p.ax_onto_a_along_rann_as && p.xa_onto_a_along_lann_a}, target),
        implies({"left ax, right xa", p.ax_onto_as_along_lann_a && p.xa_onto_a_along_rann_a}, target),
    });
  });
}

void projectors_148(const TableRing& r, CaseSink& sink) {
  pair_cases(r, sink, [&](Index a, Index x, const StarProjectors& p) {
    const Clause target{"x in a{1,4,8}", r.satisfies(a, x, {1, 4, 8})};
    return first_failure({
        implies({"right ax, right xa", p.ax_onto_a_along_rann_a && p.xa_onto_as_along_rann_a}, target),
        implies({"left ax, left xa", p.ax_onto_a_along_lann_a && p.xa_onto_a_along_lann_as}, target),
        implies({"right ax, left xa", p.ax_onto_a_along_rann_a && p.xa_onto_a_along_lann_as}, target),
        implies({"left ax, right xa", p.ax_onto_a_along_lann_a && p.xa_onto_as_along_rann_a}, target),
    });
  });
}

void projectors_137(const TableRing& r, CaseSink& sink) {
  pair_cases(r, sink, [&](Index a, Index x, const StarProjectors& p) {
    return equivalent({{"x in a{1,3,7}", r.satisfies(a, x, {1, 3, 7})},
                       {"ax = rho(aR, rann a*) and x in aR", p.ax_onto_a_along_rann_as && r.rprin(a).test(x)},
                       {"ax = rho(Ra*, lann a) and lann a in lann x",
                        p.ax_onto_as_along_lann_a && TableRing::subset(r.lann(a), r.lann(x))}});
  });
}

void projectors_149(const TableRing& r, CaseSink& sink) {
  pair_cases(r, sink, [&](Index a, Index x, const StarProjectors& p) {
    return equivalent({{"x in a{1,4,9}", r.satisfies(a, x, {1, 4, 9})},
                       {"xa = rho(a*R, rann a) and rann a in rann x",
                        p.xa_onto_as_along_rann_a && TableRing::subset(r.rann(a), r.rann(x))},
                       {"xa = rho(Ra, lann a*) and x in Ra", p.xa_onto_a_along_lann_as && r.lprin(a).test(x)}});
  });
}

// Solution sets described by ideals; x ranges over a{1} in every form.
void star_class_sets(const TableRing& r, CaseSink& sink) {
  using S = TableRing;
  const auto inner = inner_inverses(r);
  for (Index a = 0; a < r.size(); ++a) {
    const Index as = r.star(a);
    const Set& ar = r.rprin(a);
    const Set& ra = r.lprin(a);
    const Set& asr = r.rprin(as);
    const Set& ras = r.lprin(as);
    const Set& rann_a = r.rann(a);
    const Set& lann_a = r.lann(a);
    const Set& rann_as = r.rann(as);
    const Set& lann_as = r.lann(as);
    struct Forms {
      Set s15a, s15b, s13a, s13b, s14a, s14b, s134[4], s136[4], s148[4], s137a, s137b, s149a, s149b;
    };
    Forms f;
    for (Set* s : {&f.s15a, &f.s15b, &f.s13a, &f.s13b, &f.s14a, &f.s14b, &f.s137a, &f.s137b, &f.s149a, &f.s149b})
      *s = r.empty_set();
    for (int i = 0; i < 4; ++i) f.s134[i] = f.s136[i] = f.s148[i] = r.empty_set();
    for (Index x : inner[a]) {
      const Index ax = r.mul(a, x);
      const Index xa = r.mul(x, a);
      const bool xar_a = r.rprin(xa) == ar;
      const bool xar_as = r.rprin(xa) == asr;
      const bool rann_ax_a = r.rann(ax) == rann_a;
      const bool rann_ax_as = r.rann(ax) == rann_as;
      const bool rax_a = r.lprin(ax) == ra;
      const bool rax_as = r.lprin(ax) == ras;
      const bool lann_xa_a = r.lann(xa) == lann_a;
      const bool lann_xa_as = r.lann(xa) == lann_as;
      if (xar_a && rann_ax_a) f.s15a.set(x);
      if (rax_a && lann_xa_a) f.s15b.set(x);
      if (rann_ax_as) f.s13a.set(x);
      if (rax_as) f.s13b.set(x);
      if (xar_as) f.s14a.set(x);
      if (lann_xa_as) f.s14b.set(x);
      if (rann_ax_as && xar_as) f.s134[0].set(x);
      if (rax_as && lann_xa_as) f.s134[1].set(x);
      if (rann_ax_as && lann_xa_as) f.s134[2].set(x);
      if (rax_as && xar_as) f.s134[3].set(x);
      if (xar_a && rann_ax_as) f.s136[0].set(x);
      if (lann_xa_a && rann_ax_as) f.s136[1].set(x);
      if (xar_a && rax_as) f.s136[2].set(x);
      if (rax_as && lann_xa_a) f.s136[3].set(x);
      if (xar_as && rann_ax_a) f.s148[0].set(x);
      if (lann_xa_as && rann_ax_a) f.s148[1].set(x);
      if (xar_as && rax_a) f.s148[2].set(x);
      if (rax_a && lann_xa_as) f.s148[3].set(x);
      if (rann_ax_as && ar.test(x)) f.s137a.set(x);
      if (rax_as && S::subset(lann_a, r.lann(x))) f.s137b.set(x);
      if (xar_as && S::subset(rann_a, r.rann(x))) f.s149a.set(x);
      if (lann_xa_as && ra.test(x)) f.s149b.set(x);
    }
    const Set a15 = r.solution_set(a, {1, 5});
    const Set a13 = r.solution_set(a, {1, 3});
    const Set a14 = r.solution_set(a, {1, 4});
    const Set a134 = r.solution_set(a, {1, 3, 4});
    const Set a136 = r.solution_set(a, {1, 3, 6});
    const Set a148 = r.solution_set(a, {1, 4, 8});
    const Set a137 = r.solution_set(a, {1, 3, 7});
    const Set a149 = r.solution_set(a, {1, 4, 9});
    std::vector<Failure> failures = {
        require({"a{1,5} by right ideals", f.s15a == a15}),
        require({"a{1,5} by left ideals", f.s15b == a15}),
        require({"a{1,3} by rann", f.s13a == a13}),
        require({"a{1,3} by left principal", f.s13b == a13}),
        require({"a{1,4} by right principal", f.s14a == a14}),
        require({"a{1,4} by lann", f.s14b == a14}),
        require({"a{1,3,7} by rann and x in aR", f.s137a == a137}),
        require({"a{1,3,7} by Rax and lann a in lann x", f.s137b == a137}),
        require({"a{1,4,9} by xaR and rann a in rann x", f.s149a == a149}),
        require({"a{1,4,9} by lann xa and x in Ra", f.s149b == a149}),
    };
    for (int i = 0; i < 4; ++i) {
      failures.push_back(require({"a{1,3,4} form", f.s134[i] == a134}));
      failures.push_back(require({"a{1,3,6} forms agree", f.s136[i] == f.s136[0]}));
      failures.push_back(require({"a{1,3,6} form contained in a{1,3,6}", S::subset(f.s136[i], a136)}));
      failures.push_back(require({"a{1,4,8} forms agree", f.s148[i] == f.s148[0]}));
      failures.push_back(require({"a{1,4,8} form contained in a{1,4,8}", S::subset(f.s148[i], a148)}));
    }
    if (!sink.check(first_failure(failures), {{"a", a}})) return;
  }
}

}  // namespace

void add_star_cases(std::vector<TheoremCase>& out) {
  const std::string rings = "finite rings with involution";
  out.push_back({"T-13-projectors", "x is a {1,3}-inverse of a iff ax is the projector onto aR along rann(a*)",
                 rings, true, projectors_13});
  out.push_back({"T-14-projectors", "x is a {1,4}-inverse of a iff xa is the projector onto a*R along rann(a)",
                 rings, true, projectors_14});
  out.push_back({"T-134-projectors", "x is a {1,3,4}-inverse of a iff both ax and xa are the matching projectors",
                 rings, true, projectors_134});
  out.push_back({"T-136-projectors", "projector forms of ax and xa onto aR are sufficient for {1,3,6}", rings,
                 true, projectors_136});
  out.push_back({"T-148-projectors", "projector forms of ax and xa along rann(a) are sufficient for {1,4,8}",
                 rings, true, projectors_148});
  out.push_back({"T-137-projectors", "{1,3,7}-inverses are the {1,3}-inverses lying in aR", rings, true,
                 projectors_137});
  out.push_back({"T-149-projectors", "{1,4,9}-inverses are the {1,4}-inverses lying in Ra", rings, true,
                 projectors_149});
  out.push_back({"S-star-class-sets", "solution sets of the star classes described by ideals among inner inverses",
                 rings, true, star_class_sets});
}

}  // namespace geninv::oracle::detail
