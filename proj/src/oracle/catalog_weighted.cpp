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

// Weighted Moore-Penrose, weighted core and dual core inverses and their
// one-sided variants: reductions to star classes and projector grids.

#include "checks.hpp"

namespace geninv::oracle::detail {

namespace {

using S = TableRing;

// Every choice of one clause per group, conjoined, must agree with target.
Failure grid(const Clause& target, const std::vector<std::vector<Clause>>& groups) {
  std::vector<std::size_t> pick(groups.size(), 0);
  while (true) {
    bool holds = true;
    std::string label;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      const Clause& c = groups[g][pick[g]];
      holds = holds && c.holds;
      if (g) label += " and ";
      label += c.label;
    }
    if (holds != target.holds)
      return verdict(target) + " but " + label + (holds ? " holds" : " fails");
    std::size_t g = 0;
    while (g < groups.size() && ++pick[g] == groups[g].size()) pick[g++] = 0;
    if (g == groups.size()) return std::nullopt;
  }
}

// Both pairings of a right or left form for ax with a right or left form for
// xa, in the order right-right, left-left, right-left, left-right.
std::vector<Clause> projector_pairs(const Clause& ax_right, const Clause& ax_left, const Clause& xa_right,
                                    const Clause& xa_left) {
  return {{"right ax, right xa", ax_right.holds && xa_right.holds},
          {"left ax, left xa", ax_left.holds && xa_left.holds},
          {"right ax, left xa", ax_right.holds && xa_left.holds},
          {"left ax, right xa", ax_left.holds && xa_right.holds}};
}

bool symmetric(const TableRing& r, Index a) { return r.star(a) == a; }

void ef_moore_penrose(const TableRing& r, CaseSink& sink) {
  const auto ws = weights(r);
  for (Index a = 0; a < r.size(); ++a) {
    const Index as = r.star(a);
    for (Index e : ws) {
      const Index ase = r.mul(as, e);
      for (Index f : ws) {
        const Index fi = *r.inverse(f);
        const Index fias = r.mul(fi, as);
        for (Index x = 0; x < r.size(); ++x) {
          const Index ax = r.mul(a, x);
          const Index xa = r.mul(x, a);
          const Clause target{"x is the (e,f)-weighted Moore-Penrose inverse",
                              r.satisfies(a, x, {1, 2}) && symmetric(r, r.mul(e, ax)) && symmetric(r, r.mul(f, xa))};
          const auto pairs = projector_pairs({"", r.rho_right(ax, r.rprin(a), r.rann(ase))},
                                             {"", r.rho_left(ax, r.lprin(ase), r.lann(a))},
                                             {"", r.rho_right(xa, r.rprin(fias), r.rann(a))},
                                             {"", r.rho_left(xa, r.lprin(a), r.lann(fias))});
          const std::vector<Clause> ranges{{"xR in f^-1 a* R", S::subset(r.rprin(x), r.rprin(fias))},
                                           {"lann(f^-1 a*) in lann x", S::subset(r.lann(fias), r.lann(x))},
                                           {"Rx in R a* e", S::subset(r.lprin(x), r.lprin(ase))},
                                           {"rann(a* e) in rann x", S::subset(r.rann(ase), r.rann(x))}};
          const Index ei = *r.inverse(e);
          const Failure failure = first_failure({
              grid(target, {pairs, ranges}),
              implies(target, {"x e^-1 in (ea){1}", r.satisfies(r.mul(e, a), r.mul(x, ei), {1})}),
              implies(target, {"fx in (a f^-1){1}", r.satisfies(r.mul(a, fi), r.mul(f, x), {1})}),
              implies(target, {"xR = f^-1 a* R", r.rprin(x) == r.rprin(fias)}),
              implies(target, {"rann x = rann(a* e)", r.rann(x) == r.rann(ase)}),
              implies(target, {"Rx = R a* e", r.lprin(x) == r.lprin(ase)}),
              implies(target, {"lann x = lann(f^-1 a*)", r.lann(x) == r.lann(fias)}),
          });
          if (!sink.check(failure, {{"a", a}, {"e", e}, {"f", f}, {"x", x}})) return;
        }
      }
    }
  }
}

void e_core(const TableRing& r, CaseSink& sink) {
  const auto ws = weights(r);
  const Index one = r.one();
  for (Index a = 0; a < r.size(); ++a) {
    const Index as = r.star(a);
    for (Index e : ws) {
      const Index ase = r.mul(as, e);
      for (Index x = 0; x < r.size(); ++x) {
        const Index ax = r.mul(a, x);
        const Index xa = r.mul(x, a);
        const Clause target{"x is the e-core inverse",
                            r.satisfies(a, x, {1}) && r.rprin(x) == r.rprin(a) && r.lprin(x) == r.lprin(ase)};
        const auto pairs = projector_pairs({"", r.rho_right(ax, r.rprin(a), r.rann(ase))},
                                           {"", r.rho_left(ax, r.lprin(ase), r.lann(a))},
                                           {"", r.rho_right(xa, r.rprin(a), r.rann(a))},
                                           {"", r.rho_left(xa, r.lprin(a), r.lann(a))});
        const std::vector<Clause> ranges{{"xR in aR", S::subset(r.rprin(x), r.rprin(a))},
                                         {"lann a in lann x", S::subset(r.lann(a), r.lann(x))},
                                         {"Rx in R a* e", S::subset(r.lprin(x), r.lprin(ase))},
                                         {"rann(a* e) in rann x", S::subset(r.rann(ase), r.rann(x))}};
        const Failure failure = first_failure({
            grid(target, {pairs, ranges}),
            implies(target, {"x in a{1,2}", r.satisfies(a, x, {1, 2})}),
            implies(target, {"rann x = rann(a* e)", r.rann(x) == r.rann(ase)}),
            implies(target, {"lann x = lann a", r.lann(x) == r.lann(a)}),
            e == one ? equivalent({target, {"x in a{1,2,3,6,7}", r.satisfies(a, x, {1, 2, 3, 6, 7})}}) : Failure{},
        });
        if (!sink.check(failure, {{"a", a}, {"e", e}, {"x", x}})) return;
      }
    }
  }
}

void f_dual_core(const TableRing& r, CaseSink& sink) {
  const auto ws = weights(r);
  const Index one = r.one();
  for (Index a = 0; a < r.size(); ++a) {
    const Index as = r.star(a);
    for (Index f : ws) {
      const Index fias = r.mul(*r.inverse(f), as);
      for (Index x = 0; x < r.size(); ++x) {
        const Index ax = r.mul(a, x);
        const Index xa = r.mul(x, a);
        const Clause target{"x is the f-dual core inverse",
                            r.satisfies(a, x, {1}) && r.rprin(x) == r.rprin(fias) && r.lprin(x) == r.lprin(a)};
        const auto pairs = projector_pairs({"", r.rho_right(ax, r.rprin(a), r.rann(a))},
                                           {"", r.rho_left(ax, r.lprin(a), r.lann(a))},
                                           {"", r.rho_right(xa, r.rprin(fias), r.rann(a))},
                                           {"", r.rho_left(xa, r.lprin(a), r.lann(fias))});
        const std::vector<Clause> ranges{{"xR in f^-1 a* R", S::subset(r.rprin(x), r.rprin(fias))},
                                         {"lann(f^-1 a*) in lann x", S::subset(r.lann(fias), r.lann(x))},
                                         {"Rx in Ra", S::subset(r.lprin(x), r.lprin(a))},
                                         {"rann a in rann x", S::subset(r.rann(a), r.rann(x))}};
        const Failure failure = first_failure({
            grid(target, {pairs, ranges}),
            implies(target, {"x in a{1,2}", r.satisfies(a, x, {1, 2})}),
            implies(target, {"rann x = rann a", r.rann(x) == r.rann(a)}),
            implies(target, {"lann x = lann(f^-1 a*)", r.lann(x) == r.lann(fias)}),
            f == one ? equivalent({target, {"x in a{1,2,4,8,9}", r.satisfies(a, x, {1, 2, 4, 8, 9})}}) : Failure{},
        });
        if (!sink.check(failure, {{"a", a}, {"f", f}, {"x", x}})) return;
      }
    }
  }
}

// Loops a, weight, x over the whole ring.
template <class Check>
void weight_loop(const TableRing& r, CaseSink& sink, const char* weight_name, Check check) {
  for (Index a = 0; a < r.size(); ++a)
    for (Index w = 0; w < r.size(); ++w)
      for (Index x = 0; x < r.size(); ++x)
        if (!sink.check(check(a, w, x), {{"a", a}, {weight_name, w}, {"x", x}})) return;
}

bool is_w_core(const TableRing& r, Index a, Index w, Index x) {
  const Index b = r.mul(a, w);
  const Index bx = r.mul(b, x);
  return symmetric(r, bx) && r.mul(r.mul(x, b), a) == a && r.mul(bx, x) == x;
}

bool is_v_dual_core(const TableRing& r, Index a, Index v, Index x) {
  const Index c = r.mul(v, a);
  const Index xc = r.mul(x, c);
  return symmetric(r, xc) && r.mul(a, r.mul(c, x)) == a && r.mul(x, xc) == x;
}

bool is_right_w_core(const TableRing& r, Index a, Index w, Index x) {
  const Index bx = r.mul3(a, w, x);
  return r.mul(bx, a) == a && symmetric(r, bx) && r.mul(bx, x) == x;
}

bool is_left_v_dual_core(const TableRing& r, Index a, Index v, Index x) {
  const Index xc = r.mul3(x, v, a);
  return r.mul(a, xc) == a && symmetric(r, xc) && r.mul(x, xc) == x;
}

void w_core_reduction(const TableRing& r, CaseSink& sink) {
  weight_loop(r, sink, "w", [&](Index a, Index w, Index x) {
    const Index b = r.mul(a, w);
    const Index bs = r.star(b);
    const Clause target{"x is the w-core inverse", is_w_core(r, a, w, x)};
    const bool core = r.satisfies(b, x, {1, 2, 3, 6, 7});
    return first_failure({
        equivalent({target,
                    {"x is the core inverse of aw and aR in awR", core && S::subset(r.rprin(a), r.rprin(b))},
                    {"x is the core inverse of aw and lann(aw) in lann a",
                     core && S::subset(r.lann(b), r.lann(a))}}),
        implies(target, {"x in (aw){1,2}", r.satisfies(b, x, {1, 2})}),
        implies(target, {"xR = awR", r.rprin(x) == r.rprin(b)}),
        implies(target, {"rann x = rann((aw)*)", r.rann(x) == r.rann(bs)}),
        implies(target, {"Rx = R(aw)*", r.lprin(x) == r.lprin(bs)}),
        implies(target, {"lann x = lann(aw)", r.lann(x) == r.lann(b)}),
    });
  });
}

void w_core_grid(const TableRing& r, CaseSink& sink) {
  weight_loop(r, sink, "w", [&](Index a, Index w, Index x) {
    const Index b = r.mul(a, w);
    const Index bs = r.star(b);
    const Index bx = r.mul(b, x);
    const Index xb = r.mul(x, b);
    const auto pairs = projector_pairs({"", r.rho_right(bx, r.rprin(b), r.rann(bs))},
                                       {"", r.rho_left(bx, r.lprin(bs), r.lann(b))},
                                       {"", r.rho_right(xb, r.rprin(b), r.rann(b))},
                                       {"", r.rho_left(xb, r.lprin(b), r.lann(b))});
    return grid({"x is the w-core inverse", is_w_core(r, a, w, x)},
                {pairs,
                 {{"xR in awR", S::subset(r.rprin(x), r.rprin(b))},
                  {"lann(aw) in lann x", S::subset(r.lann(b), r.lann(x))},
                  {"Rx in R(aw)*", S::subset(r.lprin(x), r.lprin(bs))},
                  {"rann((aw)*) in rann x", S::subset(r.rann(bs), r.rann(x))}},
                 {{"aR in awR", S::subset(r.rprin(a), r.rprin(b))},
                  {"lann(aw) in lann a", S::subset(r.lann(b), r.lann(a))}}});
  });
}

void v_dual_core_reduction(const TableRing& r, CaseSink& sink) {
  weight_loop(r, sink, "v", [&](Index a, Index v, Index x) {
    const Index c = r.mul(v, a);
    const Index cs = r.star(c);
    const Clause target{"x is the v-dual core inverse", is_v_dual_core(r, a, v, x)};
    const bool dual = r.satisfies(c, x, {1, 2, 4, 8, 9});
    return first_failure({
        equivalent({target,
                    {"x is the dual core inverse of va and Ra in Rva", dual && S::subset(r.lprin(a), r.lprin(c))},
                    {"x is the dual core inverse of va and rann(va) in rann a",
                     dual && S::subset(r.rann(c), r.rann(a))}}),
        implies(target, {"x in (va){1,2}", r.satisfies(c, x, {1, 2})}),
        implies(target, {"xR = (va)*R", r.rprin(x) == r.rprin(cs)}),
        implies(target, {"rann x = rann(va)", r.rann(x) == r.rann(c)}),
        implies(target, {"Rx = Rva", r.lprin(x) == r.lprin(c)}),
        implies(target, {"lann x = lann((va)*)", r.lann(x) == r.lann(cs)}),
    });
  });
}

void v_dual_core_grid(const TableRing& r, CaseSink& sink) {
  weight_loop(r, sink, "v", [&](Index a, Index v, Index x) {
    const Index c = r.mul(v, a);
    const Index cs = r.star(c);
    const Index cx = r.mul(c, x);
    const Index xc = r.mul(x, c);
    const auto pairs = projector_pairs({"", r.rho_right(cx, r.rprin(c), r.rann(c))},
                                       {"", r.rho_left(cx, r.lprin(c), r.lann(c))},
                                       {"", r.rho_right(xc, r.rprin(cs), r.rann(c))},
                                       {"", r.rho_left(xc, r.lprin(c), r.lann(cs))});
    return grid({"x is the v-dual core inverse", is_v_dual_core(r, a, v, x)},
                {pairs,
                 {{"xR in (va)*R", S::subset(r.rprin(x), r.rprin(cs))},
                  {"lann((va)*) in lann x", S::subset(r.lann(cs), r.lann(x))},
                  {"Rx in Rva", S::subset(r.lprin(x), r.lprin(c))},
                  {"rann(va) in rann x", S::subset(r.rann(c), r.rann(x))}},
                 {{"Ra in Rva", S::subset(r.lprin(a), r.lprin(c))},
                  {"rann(va) in rann a", S::subset(r.rann(c), r.rann(a))}}});
  });
}

void right_w_core(const TableRing& r, CaseSink& sink) {
  weight_loop(r, sink, "w", [&](Index a, Index w, Index x) {
    const Index b = r.mul(a, w);
    const Index bs = r.star(b);
    const Index bx = r.mul(b, x);
    const Clause target{"x is a right w-core inverse", is_right_w_core(r, a, w, x)};
    const bool cls = r.satisfies(b, x, {1, 3, 7});
    const std::vector<Clause> ranges{{"aR in awR", S::subset(r.rprin(a), r.rprin(b))},
                                     {"lann(aw) in lann a", S::subset(r.lann(b), r.lann(a))}};
    return first_failure({
        equivalent({target,
                    {"x in (aw){1,3,7} and aR in awR", cls && ranges[0].holds},
                    {"x in (aw){1,3,7} and lann(aw) in lann a", cls && ranges[1].holds}}),
        grid(target, {{{"awx = rho(awR, rann((aw)*)) and x in awR",
                        r.rho_right(bx, r.rprin(b), r.rann(bs)) && r.rprin(b).test(x)},
                       {"awx = rho(R(aw)*, lann(aw)) on the left and lann(aw) in lann x",
                        r.rho_left(bx, r.lprin(bs), r.lann(b)) && S::subset(r.lann(b), r.lann(x))}},
                      ranges}),
    });
  });
}

void left_v_dual_core(const TableRing& r, CaseSink& sink) {
  weight_loop(r, sink, "v", [&](Index a, Index v, Index x) {
    const Index c = r.mul(v, a);
    const Index cs = r.star(c);
    const Index xc = r.mul(x, c);
    const Clause target{"x is a left v-dual core inverse", is_left_v_dual_core(r, a, v, x)};
    const bool cls = r.satisfies(c, x, {1, 4, 9});
    const std::vector<Clause> ranges{{"Ra in Rva", S::subset(r.lprin(a), r.lprin(c))},
                                     {"rann(va) in rann a", S::subset(r.rann(c), r.rann(a))}};
    return first_failure({
        equivalent({target,
                    {"x in (va){1,4,9} and Ra in Rva", cls && ranges[0].holds},
                    {"x in (va){1,4,9} and rann(va) in rann a", cls && ranges[1].holds}}),
        grid(target, {{{"xva = rho((va)*R, rann(va)) and x in Rva",
                        r.rho_right(xc, r.rprin(cs), r.rann(c)) && r.lprin(c).test(x)},
                       {"xva = rho(Rva, lann((va)*)) on the left and rann(va) in rann x",
                        r.rho_left(xc, r.lprin(c), r.lann(cs)) && S::subset(r.rann(c), r.rann(x))}},
                      ranges}),
    });
  });
}

}  // namespace

void add_weighted_cases(std::vector<TheoremCase>& out) {
  const std::string rings = "finite rings with involution";
  const std::string weighted = "finite rings with involution, weights invertible and symmetric";
  out.push_back({"G-ef-mp", "the weighted Moore-Penrose inverse is characterized by one projector pair and one range condition",
                 weighted, true, ef_moore_penrose});
  out.push_back({"G-e-core", "the e-core inverse is characterized by one projector pair and one range condition",
                 weighted, true, e_core});
  out.push_back({"G-f-dual-core", "the f-dual core inverse is characterized by one projector pair and one range condition",
                 weighted, true, f_dual_core});
  out.push_back({"P-w-core", "the w-core inverse of a is the core inverse of aw when aR lies in awR", rings, true,
                 w_core_reduction});
  out.push_back({"G-w-core", "the w-core inverse is characterized by projectors of awx and xaw with range conditions",
                 rings, true, w_core_grid});
  out.push_back({"P-v-dual-core", "the v-dual core inverse of a is the dual core inverse of va when Ra lies in Rva",
                 rings, true, v_dual_core_reduction});
  out.push_back({"G-v-dual-core", "the v-dual core inverse is characterized by projectors of vax and xva with range conditions",
                 rings, true, v_dual_core_grid});
  out.push_back({"G-right-w-core", "right w-core inverses are the {1,3,7}-inverses of aw when aR lies in awR", rings,
                 true, right_w_core});
  out.push_back({"G-left-v-dual-core", "left v-dual core inverses are the {1,4,9}-inverses of va when Ra lies in Rva",
                 rings, true, left_v_dual_core});
}

}  // namespace geninv::oracle::detail
