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

// Outer inverses prescribed by two elements or by two idempotents, and the
// classical inverses recovered as such outer inverses.

#include "checks.hpp"

namespace geninv::oracle::detail {

namespace {

using S = TableRing;

bool outer(const TableRing& r, Index a, Index x) { return r.satisfies(a, x, {2}); }

// ---------------------------------------------------------------------------
// Outer inverses prescribed by b and c.

void bc_closed_form(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      const Index ab = r.mul(a, b);
      for (Index c = 0; c < r.size(); ++c) {
        const Index cab = r.mul(c, ab);
        for (Index z : inner[cab]) {
          const Index x = r.mul3(b, z, c);
          const bool out = outer(r, a, x);
          const bool ab_a = r.rprin(ab) == r.rprin(a);
          const Failure f = first_failure({
              equivalent({{"x in a{1}", r.satisfies(a, x, {1})},
                          {"abR = aR and rann(cab) = rann(ab)", ab_a && r.rann(cab) == r.rann(ab)},
                          {"abR = aR and Rcab = Rab", ab_a && r.lprin(cab) == r.lprin(ab)}}),
              equivalent({{"x in a{2} and xR = bR", out && r.rprin(x) == r.rprin(b)},
                          {"rann(cab) = rann(b)", r.rann(cab) == r.rann(b)},
                          {"Rcab = Rb", r.lprin(cab) == r.lprin(b)}}),
              equivalent({{"x in a{2} and rann x = rann c", out && r.rann(x) == r.rann(c)},
                          {"cabR = cR", r.rprin(cab) == r.rprin(c)},
                          {"lann(cab) = lann(c)", r.lann(cab) == r.lann(c)}}),
              equivalent({{"x in a{2} and Rx = Rc", out && r.lprin(x) == r.lprin(c)},
                          {"lann(cab) = lann(c)", r.lann(cab) == r.lann(c)},
                          {"cabR = cR", r.rprin(cab) == r.rprin(c)}}),
              equivalent({{"x in a{2} and lann x = lann b", out && r.lann(x) == r.lann(b)},
                          {"Rcab = Rb", r.lprin(cab) == r.lprin(b)},
                          {"rann(cab) = rann(b)", r.rann(cab) == r.rann(b)}}),
          });
          if (!sink.check(f, {{"a", a}, {"b", b}, {"c", c}, {"z", z}})) return;
        }
      }
    }
  }
}

// Calls conclusion(a, b, c, x) with x = b (cab)^-1 c whenever cab is
// invertible; hypotheses(a, b, c) lists the sufficient conditions.
template <class Hypotheses, class Conclusion>
void bc_invertibility(const TableRing& r, CaseSink& sink, Hypotheses hypotheses, Conclusion conclusion) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      for (Index c = 0; c < r.size(); ++c) {
        const Index cab = r.mul3(c, a, b);
        const auto inv = r.inverse(cab);
        const Clause result = inv ? conclusion(a, b, c, r.mul3(b, *inv, c))
                                  : Clause{"cab invertible", false};
        std::vector<Failure> failures;
        for (const Clause& h : hypotheses(a, b, c)) failures.push_back(implies(h, result));
        if (!sink.check(first_failure(failures), {{"a", a}, {"b", b}, {"c", c}})) return;
      }
    }
  }
}

void bc_right_invertibility(const TableRing& r, CaseSink& sink) {
  const Set all = r.all();
  const Set zero = r.singleton_zero();
  bc_invertibility(
      r, sink,
      [&](Index a, Index b, Index c) {
        const Index ab = r.mul(a, b);
        return std::vector<Clause>{
            {"rann(ab) = 0, cR = R, R = abR (+) rann c",
             r.rann(ab) == zero && r.rprin(c) == all && r.direct_sum(r.rprin(ab), r.rann(c))},
            {"rann(b) = 0, caR = R, R = bR (+) {r : ar in rann c}",
             r.rann(b) == zero && r.rprin(r.mul(c, a)) == all &&
                 r.direct_sum(r.rprin(b), r.right_preimage(a, r.rann(c)))}};
      },
      [&](Index a, Index b, Index c, Index x) {
        return Clause{"b(cab)^-1 c in a{2} with xR = bR and rann x = rann c",
                      outer(r, a, x) && r.rprin(x) == r.rprin(b) && r.rann(x) == r.rann(c)};
      });
}

void bc_left_invertibility(const TableRing& r, CaseSink& sink) {
  const Set all = r.all();
  const Set zero = r.singleton_zero();
  bc_invertibility(
      r, sink,
      [&](Index a, Index b, Index c) {
        const Index ca = r.mul(c, a);
        return std::vector<Clause>{
            {"lann(ca) = 0, Rb = R, R = Rca (+) lann b",
             r.lann(ca) == zero && r.lprin(b) == all && r.direct_sum(r.lprin(ca), r.lann(b))},
            {"lann(c) = 0, Rab = R, R = Rc (+) {r : ra in lann b}",
             r.lann(c) == zero && r.lprin(r.mul(a, b)) == all &&
                 r.direct_sum(r.lprin(c), r.left_preimage(a, r.lann(b)))}};
      },
      [&](Index a, Index b, Index c, Index x) {
        return Clause{"b(cab)^-1 c in a{2} with Rx = Rc and lann x = lann b",
                      outer(r, a, x) && r.lprin(x) == r.lprin(c) && r.lann(x) == r.lann(b)};
      });
}

void bc_equality(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      const bool breg = r.regular(b);
      for (Index c = 0; c < r.size(); ++c) {
        const bool creg = r.regular(c);
        const Index cab = r.mul3(c, a, b);
        const bool cabreg = r.regular(cab);
        Set closed = r.empty_set();
        for (Index z : inner[cab]) closed.set(r.mul3(b, z, c));
        const bool left_b[2] = {r.lprin(cab) == r.lprin(b), r.rann(cab) == r.rann(b)};
        const bool right_c[2] = {r.rprin(cab) == r.rprin(c), r.lann(cab) == r.lann(c)};
        for (Index x = 0; x < r.size(); ++x) {
          const bool out = outer(r, a, x);
          const bool right_hybrid = out && r.rprin(x) == r.rprin(b) && r.rann(x) == r.rann(c);
          const bool left_hybrid = out && r.lprin(x) == r.lprin(c) && r.lann(x) == r.lann(b);
          const bool annihilator = out && r.lann(x) == r.lann(b) && r.rann(x) == r.rann(c);
          const bool in_b = r.rprin(b).test(x);
          const bool in_c = r.lprin(c).test(x);
          const bool only_x = closed.count() == 1 && closed.test(x);
          const Failure f = equivalent({
              {"x in a{2}, xR = bR, Rx = Rc", out && r.rprin(x) == r.rprin(b) && r.lprin(x) == r.lprin(c)},
              {"right hybrid and x in Rc", right_hybrid && in_c},
              {"right hybrid and c regular", right_hybrid && creg},
              {"right hybrid and cab regular", right_hybrid && cabreg},
              {"left hybrid and x in bR", left_hybrid && in_b},
              {"left hybrid and b regular", left_hybrid && breg},
              {"left hybrid and cab regular", left_hybrid && cabreg},
              {"annihilator form, x in bR, x in Rc", annihilator && in_b && in_c},
              {"annihilator form, b regular, x in Rc", annihilator && breg && in_c},
              {"annihilator form, x in bR, c regular", annihilator && in_b && creg},
              {"annihilator form, b regular, c regular", annihilator && breg && creg},
              {"annihilator form and cab regular", annihilator && cabreg},
              {"cab regular, Rcab = Rb, cabR = cR, x = b(cab)^(1)c",
               cabreg && left_b[0] && right_c[0] && only_x},
              {"cab regular, rann(cab) = rann b, cabR = cR, x = b(cab)^(1)c",
               cabreg && left_b[1] && right_c[0] && only_x},
              {"cab regular, Rcab = Rb, lann(cab) = lann c, x = b(cab)^(1)c",
               cabreg && left_b[0] && right_c[1] && only_x},
              {"cab regular, rann(cab) = rann b, lann(cab) = lann c, x = b(cab)^(1)c",
               cabreg && left_b[1] && right_c[1] && only_x},
          });
          if (!sink.check(f, {{"a", a}, {"b", b}, {"c", c}, {"x", x}})) return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------------------
// Outer inverses prescribed by idempotents.

// x in a{2} with xa = p and ax = 1 - q.
bool idempotent_outer(const TableRing& r, Index a, Index p, Index q, Index x) {
  return outer(r, a, x) && r.mul(x, a) == p && r.mul(a, x) == r.sub(r.one(), q);
}

template <class Check>
void idempotent_loop(const TableRing& r, CaseSink& sink, Check check) {
  const auto ps = idempotents(r);
  for (Index a = 0; a < r.size(); ++a)
    for (Index p : ps)
      for (Index q : ps) {
        bool exists = false;
        for (Index x = 0; x < r.size() && !exists; ++x) exists = idempotent_outer(r, a, p, q, x);
        for (Index x = 0; x < r.size(); ++x)
          if (!sink.check(check(a, p, q, x, exists), {{"a", a}, {"p", p}, {"q", q}, {"x", x}})) return;
      }
}

void pq_characterizations(const TableRing& r, CaseSink& sink) {
  idempotent_loop(r, sink, [&](Index a, Index p, Index q, Index x, bool exists) {
    const Index one = r.one();
    const Index cp = r.sub(one, p);
    const Index cq = r.sub(one, q);
    const Index ax = r.mul(a, x);
    const Index xa = r.mul(x, a);
    const bool out = outer(r, a, x);
    const bool p_below = S::subset(r.rprin(xa), r.rprin(p)) && S::subset(r.rann(xa), r.rann(p));
    const bool p_above = S::subset(r.rprin(p), r.rprin(xa)) && S::subset(r.rann(p), r.rann(xa));
    const bool q_below = S::subset(r.rprin(ax), r.rann(q)) && S::subset(r.rann(ax), r.rprin(q));
    const bool q_above = S::subset(r.rann(q), r.rprin(ax)) && S::subset(r.rprin(q), r.rann(ax));
    const Clause target{"x in a{2}, xa = p, ax = 1 - q", idempotent_outer(r, a, p, q, x)};
    return first_failure({
        equivalent({target,
                    {"a(1-p)R in qR, xap = p, ax = 1-q, xq = 0",
                     S::subset(r.rprin(r.mul(a, cp)), r.rprin(q)) && r.mul3(x, a, p) == p && ax == cq &&
                         r.mul(x, q) == r.zero()},
                    {"Rqa in R(1-p), xa = p, px = x, (1-q)ax = 1-q",
                     S::subset(r.lprin(r.mul(q, a)), r.lprin(cp)) && xa == p && r.mul(p, x) == x &&
                         r.mul(cq, ax) == cq},
                    {"x in a{2}, xa below p, ax below 1-q", out && p_below && q_below},
                    {"x in a{2}, xa above p, ax below 1-q", out && p_above && q_below},
                    {"x in a{2}, xa below p, ax above 1-q", out && p_below && q_above},
                    {"x in a{2}, xa above p, ax above 1-q", out && p_above && q_above}}),
        implies({"the outer inverse for (p, q) exists", exists},
                {"rann p = {r : ar in qR} and Rq = {r : ra in lann p}",
                 r.rann(p) == r.right_preimage(a, r.rprin(q)) && r.lprin(q) == r.left_preimage(a, r.lann(p))}),
    });
  });
}

void pq_prescribed(const TableRing& r, CaseSink& sink) {
  idempotent_loop(r, sink, [&](Index a, Index p, Index q, Index x, bool) {
    const Index one = r.one();
    const Index cp = r.sub(one, p);
    const Index cq = r.sub(one, q);
    const Index ax = r.mul(a, x);
    const Index xa = r.mul(x, a);
    const bool out = outer(r, a, x);
    const Clause target{"x in a{2}, xa = p, ax = 1 - q", idempotent_outer(r, a, p, q, x)};
    return first_failure({
        equivalent({target,
                    {"x in a{2}, xR = pR, rann x = qR, apR = (1-q)R, {r : ar in qR} = (1-p)R",
                     out && r.rprin(x) == r.rprin(p) && r.rann(x) == r.rprin(q) &&
                         r.rprin(r.mul(a, p)) == r.rprin(cq) && r.right_preimage(a, r.rprin(q)) == r.rprin(cp)},
                    {"x in a{2}, Rx = lann q, lann x = lann p, R(1-q)a = Rp, {r : ra in R(1-p)} = Rq",
                     out && r.lprin(x) == r.lann(q) && r.lann(x) == r.lann(p) &&
                         r.lprin(r.mul(cq, a)) == r.lprin(p) && r.left_preimage(a, r.lprin(cp)) == r.lprin(q)}}),
        implies(target, {"rann(xa) = rann p", r.rann(xa) == r.rann(p)}),
        implies(target, {"axR = rann q", r.rprin(ax) == r.rann(q)}),
        implies(target, {"Rxa = Rp", r.lprin(xa) == r.lprin(p)}),
        implies(target, {"lann(ax) = Rq", r.lann(ax) == r.lprin(q)}),
    });
  });
}

// x = px = xq, xap = p, qax = q.
bool bott_duffin(const TableRing& r, Index a, Index p, Index q, Index x) {
  return r.mul(p, x) == x && r.mul(x, q) == x && r.mul3(x, a, p) == p && r.mul3(q, a, x) == q;
}

void pq_bott_duffin(const TableRing& r, CaseSink& sink) {
  idempotent_loop(r, sink, [&](Index a, Index p, Index q, Index x, bool) {
    const Index one = r.one();
    const Index cq = r.sub(one, q);
    // 1 - p + ap; its inverse defines the classical formula.
    const Index u = r.add(r.sub(one, p), r.mul(a, p));
    const auto inv = r.inverse(u);
    const Failure main = equivalent(
        {{"x in a{2}, xR = pR, rann x = qR", outer(r, a, x) && r.rprin(x) == r.rprin(p) && r.rann(x) == r.rprin(q)},
         {"x = px = x(1-q), xap = p, (1-q)ax = 1-q", bott_duffin(r, a, p, cq, x)}});
    // The symmetric case is checked once per (a, p, x), on the diagonal q = p.
    const Failure diagonal =
        q == p ? equivalent({{"x = px = xp, xap = p, pax = p", bott_duffin(r, a, p, p, x)},
                             {"1 - p + ap invertible and x = p(1 - p + ap)^-1", inv && x == r.mul(p, *inv)}})
               : Failure{};
    return first_failure({main, diagonal});
  });
}

// ---------------------------------------------------------------------------
// Classical inverses as prescribed outer inverses.

void drazin_outer(const TableRing& r, CaseSink& sink) {
  const auto drazin = drazin_table(r);
  for (Index a = 0; a < r.size(); ++a) {
    if (!drazin[a]) continue;
    const Index d = drazin[a]->inverse;
    const Index p = r.mul(a, d);
    const Failure f = require({"a^D in a{2} with a^D a = aa^D and aa^D = 1 - (1 - aa^D)",
                               idempotent_outer(r, a, p, r.sub(r.one(), p), d) && r.mul(d, a) == p});
    if (!sink.check(f, {{"a", a}})) return;
  }
}

void star_outer(const TableRing& r, CaseSink& sink) {
  const std::pair<const char*, EquationSet> classes[] = {
      {"Moore-Penrose inverse", EquationSet{1, 2, 3, 4}},
      {"core inverse", EquationSet{1, 2, 3, 6, 7}},
      {"dual core inverse", EquationSet{1, 2, 4, 8, 9}},
  };
  for (Index a = 0; a < r.size(); ++a) {
    std::vector<Failure> failures;
    for (const auto& [name, eqs] : classes) {
      for (Index x : r.solutions(a, eqs)) {
        const Index xa = r.mul(x, a);
        const Index q = r.sub(r.one(), r.mul(a, x));
        bool unique = true;
        for (Index y = 0; y < r.size(); ++y)
          if (y != x && idempotent_outer(r, a, xa, q, y)) unique = false;
        failures.push_back(require({name, idempotent_outer(r, a, xa, q, x) && unique && r.satisfies(a, x, {1})}));
      }
    }
    if (!sink.check(first_failure(failures), {{"a", a}})) return;
  }
}

void reflexive_idempotents(const TableRing& r, CaseSink& sink) {
  const auto ps = idempotents(r);
  for (Index a = 0; a < r.size(); ++a) {
    bool rann_rprin = false;
    bool lprin_lann = false;
    bool lprin_rprin = false;
    for (Index p : ps) {
      for (Index q : ps) {
        rann_rprin = rann_rprin || (r.rann(a) == r.rann(p) && r.rprin(a) == r.rprin(q));
        lprin_lann = lprin_lann || (r.lprin(a) == r.lprin(p) && r.lann(a) == r.lann(q));
        lprin_rprin = lprin_rprin || (r.lprin(a) == r.lprin(p) && r.rprin(a) == r.rprin(q));
      }
    }
    const Failure f = equivalent({{"a{1,2} nonempty", !r.solutions(a, {1, 2}).empty()},
                                  {"rann a = rann p and aR = qR for idempotents", rann_rprin},
                                  {"Ra = Rp and lann a = lann q for idempotents", lprin_lann},
                                  {"Ra = Rp and aR = qR for idempotents", lprin_rprin}});
    if (!sink.check(f, {{"a", a}})) return;
  }
}

}  // namespace

void add_bc_pq_cases(std::vector<TheoremCase>& out) {
  const std::string rings = "finite rings";
  out.push_back({"T-bc-closed-form", "b z c with z an inner inverse of cab is an inner or outer inverse of a under ideal conditions",
                 rings, false, bc_closed_form});
  out.push_back({"T-bc-right-invertibility", "sufficient conditions for cab invertible giving the right hybrid inverse",
                 rings, false, bc_right_invertibility});
  out.push_back({"T-bc-left-invertibility", "sufficient conditions for cab invertible giving the left hybrid inverse",
                 rings, false, bc_left_invertibility});
  out.push_back({"T-bc-equality", "the (b,c), hybrid and annihilator inverses agree under regularity conditions",
                 rings, false, bc_equality});
  out.push_back({"T-pq-outer", "equivalent forms of the outer inverse with xa = p and ax = 1 - q", rings, false,
                 pq_characterizations});
  out.push_back({"P-pq-prescribed", "the outer inverse for idempotents p, q as an outer inverse with prescribed ideals",
                 rings, false, pq_prescribed});
  out.push_back({"T-pq-bott-duffin", "image-kernel outer inverses and the Bott-Duffin conditions agree", rings, false,
                 pq_bott_duffin});
  out.push_back({"E-drazin-outer", "the Drazin inverse is the outer inverse for the idempotents aa^D and 1 - aa^D",
                 rings, false, drazin_outer});
  out.push_back({"E-star-outer", "Moore-Penrose, core and dual core inverses are outer inverses for idempotents",
                 "finite rings with involution", true, star_outer});
  out.push_back({"P-reflexive-idempotents", "a has a reflexive inverse iff its ideals are generated by idempotents",
                 rings, false, reflexive_idempotents});
}

}  // namespace geninv::oracle::detail
