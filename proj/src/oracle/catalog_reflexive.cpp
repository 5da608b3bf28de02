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

// Reflexive inverses with prescribed ideals: characterizations, the
// isomorphism descriptions and the existence theorems.

#include "checks.hpp"

namespace geninv::oracle::detail {

namespace {

// {left z right : z in a{1}}, empty when a factor is missing.
Set products(const TableRing& r, const std::vector<Index>& inner, std::optional<Index> left,
             std::optional<Index> right) {
  Set out = r.empty_set();
  if (!left || !right) return out;
  for (Index z : inner) out.set(r.mul3(*left, z, *right));
  return out;
}

bool reflexive(const TableRing& r, Index a, Index x) { return r.satisfies(a, x, {1, 2}); }

// Loops a, first ideal, second ideal, x, calling clauses(a, i1, i2, x, formula)
// where formula is precomputed per (a, i1, i2).
template <class Formula, class Clauses>
void pair_loop(const TableRing& r, CaseSink& sink, const std::vector<Set>& firsts, const char* first_name,
               const std::vector<Set>& seconds, const char* second_name, Formula formula, Clauses clauses) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& i1 : firsts) {
      for (const Set& i2 : seconds) {
        const Set f = formula(a, i1, i2);
        for (Index x = 0; x < r.size(); ++x)
          if (!sink.check(clauses(a, i1, i2, x, f), {{"a", a}, {first_name, &i1}, {second_name, &i2}, {"x", x}}))
            return;
      }
    }
  }
}

template <class Formula, class Clauses>
void single_loop(const TableRing& r, CaseSink& sink, const std::vector<Set>& ideals, const char* name,
                 Formula formula, Clauses clauses) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& i : ideals) {
      const Set f = formula(a, i);
      for (Index x = 0; x < r.size(); ++x)
        if (!sink.check(clauses(a, i, x, f), {{"a", a}, {name, &i}, {"x", x}})) return;
    }
  }
}

void reflexive_rprin_rann(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  pair_loop(
      r, sink, r.right_ideals(), "S", r.right_ideals(), "T",
      [&](Index a, const Set& s, const Set& t) {
        return products(r, inner[a], r.unit_component(s, r.rann(a)), r.unit_component(r.rprin(a), t));
      },
      [&](Index a, const Set& s, const Set& t, Index x, const Set& formula) {
        const Index ax = r.mul(a, x);
        const Index xa = r.mul(x, a);
        const bool p = r.rho_right(ax, r.rprin(a), t) && r.rho_right(xa, s, r.rann(a));
        const bool q = r.satisfies(a, x, {1}) && r.rprin(xa) == s && r.rann(ax) == t;
        const bool in_s = s.test(x);
        const bool lann_s = r.lann_of(s).is_subset_of(r.lann(x));
        const bool t_in = t.is_subset_of(r.rann(x));
        return equivalent({{"x in a{1,2}, xR = S, rann x = T", reflexive(r, a, x) && r.rprin(x) == s && r.rann(x) == t},
                           {"projectors with x in S", p && in_s},
                           {"projectors with lann S in lann x", p && lann_s},
                           {"projectors with T in rann x", p && t_in},
                           {"inner with ideals and x in S", q && in_s},
                           {"inner with ideals and lann S in lann x", q && lann_s},
                           {"inner with ideals and T in rann x", q && t_in},
                           {"x = rho(S, rann a)(1) a^(1) rho(aR, T)(1)", formula.test(x)}});
      });
}

void reflexive_lprin_lann(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  pair_loop(
      r, sink, r.left_ideals(), "S'", r.left_ideals(), "T'",
      [&](Index a, const Set& s, const Set& t) {
        return products(r, inner[a], r.unit_component(r.lprin(a), t), r.unit_component(s, r.lann(a)));
      },
      [&](Index a, const Set& s, const Set& t, Index x, const Set& formula) {
        const Index ax = r.mul(a, x);
        const Index xa = r.mul(x, a);
        const bool p = r.rho_left(ax, s, r.lann(a)) && r.rho_left(xa, r.lprin(a), t);
        const bool q = r.satisfies(a, x, {1}) && r.lprin(ax) == s && r.lann(xa) == t;
        const bool in_s = s.test(x);
        const bool rann_s = r.rann_of(s).is_subset_of(r.rann(x));
        const bool t_in = t.is_subset_of(r.lann(x));
        return equivalent({{"x in a{1,2}, Rx = S', lann x = T'", reflexive(r, a, x) && r.lprin(x) == s && r.lann(x) == t},
                           {"projectors with x in S'", p && in_s},
                           {"projectors with rann S' in rann x", p && rann_s},
                           {"projectors with T' in lann x", p && t_in},
                           {"inner with ideals and x in S'", q && in_s},
                           {"inner with ideals and rann S' in rann x", q && rann_s},
                           {"inner with ideals and T' in lann x", q && t_in},
                           {"x = rho(Ra, T')(1) a^(1) rho(S', lann a)(1)", formula.test(x)}});
      });
}

void reflexive_rprin_lprin(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  pair_loop(
      r, sink, r.right_ideals(), "S", r.left_ideals(), "S'",
      [&](Index a, const Set& s, const Set& sp) {
        return products(r, inner[a], r.unit_component(s, r.rann(a)), r.unit_component(sp, r.lann(a)));
      },
      [&](Index a, const Set& s, const Set& sp, Index x, const Set& formula) {
        const Index ax = r.mul(a, x);
        const Index xa = r.mul(x, a);
        const bool p = r.rho_right(xa, s, r.rann(a)) && r.rho_left(ax, sp, r.lann(a));
        const bool q = r.satisfies(a, x, {1}) && r.rprin(xa) == s && r.lprin(ax) == sp;
        const bool in_union = s.test(x) || sp.test(x);
        const bool lann_s = r.lann_of(s).is_subset_of(r.lann(x));
        const bool rann_sp = r.rann_of(sp).is_subset_of(r.rann(x));
        return equivalent({{"x in a{1,2}, xR = S, Rx = S'", reflexive(r, a, x) && r.rprin(x) == s && r.lprin(x) == sp},
                           {"projectors with x in S or S'", p && in_union},
                           {"projectors with lann S in lann x", p && lann_s},
                           {"projectors with rann S' in rann x", p && rann_sp},
                           {"inner with ideals and x in S or S'", q && in_union},
                           {"inner with ideals and lann S in lann x", q && lann_s},
                           {"inner with ideals and rann S' in rann x", q && rann_sp},
                           {"a regular and x = rho(S, rann a)(1) a^(1) rho(S', lann a)(1)",
                            r.regular(a) && formula.test(x)}});
      });
}

void reflexive_rann_lann(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  pair_loop(
      r, sink, r.right_ideals(), "T", r.left_ideals(), "T'",
      [&](Index a, const Set& t, const Set& tp) {
        return products(r, inner[a], r.unit_component(r.lprin(a), tp), r.unit_component(r.rprin(a), t));
      },
      [&](Index a, const Set& t, const Set& tp, Index x, const Set& formula) {
        const Index ax = r.mul(a, x);
        const Index xa = r.mul(x, a);
        const bool p = r.rho_right(ax, r.rprin(a), t) && r.rho_left(xa, r.lprin(a), tp);
        const bool q = r.satisfies(a, x, {1}) && r.rann(ax) == t && r.lann(xa) == tp;
        const bool t_in = t.is_subset_of(r.rann(x));
        const bool tp_in = tp.is_subset_of(r.lann(x));
        return equivalent({{"x in a{1,2}, rann x = T, lann x = T'", reflexive(r, a, x) && r.rann(x) == t && r.lann(x) == tp},
                           {"projectors with T in rann x", p && t_in},
                           {"projectors with T' in lann x", p && tp_in},
                           {"inner with ideals and T in rann x", q && t_in},
                           {"inner with ideals and T' in lann x", q && tp_in},
                           {"x = rho(Ra, T')(1) a^(1) rho(aR, T)(1)", formula.test(x)}});
      });
}

void reflexive_rprin(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  single_loop(
      r, sink, r.right_ideals(), "S",
      [&](Index a, const Set& s) { return products(r, inner[a], r.unit_component(s, r.rann(a)), r.one()); },
      [&](Index a, const Set& s, Index x, const Set& formula) {
        const Index xa = r.mul(x, a);
        const bool p = r.rho_right(xa, s, r.rann(a));
        const bool q = r.satisfies(a, x, {1}) && r.rprin(xa) == s;
        const bool in_s = s.test(x);
        const bool lann_s = r.lann_of(s).is_subset_of(r.lann(x));
        return equivalent({{"x in a{1,2}, xR = S", reflexive(r, a, x) && r.rprin(x) == s},
                           {"phi_xa = rho(S, rann a) with x in S", p && in_s},
                           {"phi_xa = rho(S, rann a) with lann S in lann x", p && lann_s},
                           {"inner with xaR = S and x in S", q && in_s},
                           {"inner with xaR = S and lann S in lann x", q && lann_s},
                           {"a regular and x = rho(S, rann a)(1) a^(1)", r.regular(a) && formula.test(x)}});
      });
}

void reflexive_rann(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  single_loop(
      r, sink, r.right_ideals(), "T",
      [&](Index a, const Set& t) { return products(r, inner[a], r.one(), r.unit_component(r.rprin(a), t)); },
      [&](Index a, const Set& t, Index x, const Set& formula) {
        const Index ax = r.mul(a, x);
        const bool t_in = t.is_subset_of(r.rann(x));
        return equivalent({{"x in a{1,2}, rann x = T", reflexive(r, a, x) && r.rann(x) == t},
                           {"phi_ax = rho(aR, T) with T in rann x", r.rho_right(ax, r.rprin(a), t) && t_in},
                           {"inner with rann ax = T and T in rann x", r.satisfies(a, x, {1}) && r.rann(ax) == t && t_in},
                           {"x = a^(1) rho(aR, T)(1)", formula.test(x)}});
      });
}

void reflexive_lprin(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  single_loop(
      r, sink, r.left_ideals(), "S'",
      [&](Index a, const Set& s) { return products(r, inner[a], r.one(), r.unit_component(s, r.lann(a))); },
      [&](Index a, const Set& s, Index x, const Set& formula) {
        const Index ax = r.mul(a, x);
        const bool p = r.rho_left(ax, s, r.lann(a));
        const bool q = r.satisfies(a, x, {1}) && r.lprin(ax) == s;
        const bool in_s = s.test(x);
        const bool rann_s = r.rann_of(s).is_subset_of(r.rann(x));
        return equivalent({{"x in a{1,2}, Rx = S'", reflexive(r, a, x) && r.lprin(x) == s},
                           {"_ax phi = rho(S', lann a) with x in S'", p && in_s},
                           {"_ax phi = rho(S', lann a) with rann S' in rann x", p && rann_s},
                           {"inner with Rax = S' and x in S'", q && in_s},
                           {"inner with Rax = S' and rann S' in rann x", q && rann_s},
                           {"a regular and x = a^(1) rho(S', lann a)(1)", r.regular(a) && formula.test(x)}});
      });
}

void reflexive_lann(const TableRing& r, CaseSink& sink) {
  const auto inner = inner_inverses(r);
  single_loop(
      r, sink, r.left_ideals(), "T'",
      [&](Index a, const Set& t) { return products(r, inner[a], r.unit_component(r.lprin(a), t), r.one()); },
      [&](Index a, const Set& t, Index x, const Set& formula) {
        const Index xa = r.mul(x, a);
        const bool t_in = t.is_subset_of(r.lann(x));
        return equivalent({{"x in a{1,2}, lann x = T'", reflexive(r, a, x) && r.lann(x) == t},
                           {"_xa phi = rho(Ra, T') with T' in lann x", r.rho_left(xa, r.lprin(a), t) && t_in},
                           {"inner with lann xa = T' and T' in lann x", r.satisfies(a, x, {1}) && r.lann(xa) == t && t_in},
                           {"x = rho(Ra, T')(1) a^(1)", formula.test(x)}});
      });
}

// psi(r) is the unique s in S with a s (or s a) equal to the projection of r.
void isomorphism_right(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      if (!r.direct_sum(s, r.rann(a))) continue;
      for (const Set& t : r.right_ideals()) {
        if (!r.direct_sum(r.rprin(a), t)) continue;
        std::vector<Index> psi(r.size());
        std::vector<Index> rho(r.size());
        for (Index x = 0; x < r.size(); ++x) rho[x] = *r.component(r.rprin(a), t, x);
        for (Index x = 0; x < r.size(); ++x)
          for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
            if (r.mul(a, static_cast<Index>(i)) == rho[x]) psi[x] = static_cast<Index>(i);
        std::size_t solutions = 0;
        for (Index b = 0; b < r.size(); ++b)
          if (s.test(b) && r.mul(a, b) == rho[r.one()]) ++solutions;
        for (Index b = 0; b < r.size(); ++b) {
          bool is_mult = true;
          for (Index x = 0; x < r.size() && is_mult; ++x) is_mult = psi[x] == r.mul(b, x);
          const Failure f = first_failure({
              require({"exactly one b in S has ab = rho(aR, T)(1)", solutions == 1}),
              equivalent({{"b in S with ab = rho(aR, T)(1)", s.test(b) && r.mul(a, b) == rho[r.one()]},
                          {"psi is left multiplication by b", is_mult},
                          {"b in a{1,2}, bR = S, rann b = T",
                           reflexive(r, a, b) && r.rprin(b) == s && r.rann(b) == t}}),
          });
          if (!sink.check(f, {{"a", a}, {"S", &s}, {"T", &t}, {"b", b}})) return;
        }
      }
    }
  }
}

void isomorphism_left(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.left_ideals()) {
      if (!r.direct_sum(s, r.lann(a))) continue;
      for (const Set& t : r.left_ideals()) {
        if (!r.direct_sum(r.lprin(a), t)) continue;
        std::vector<Index> psi(r.size());
        std::vector<Index> rho(r.size());
        for (Index x = 0; x < r.size(); ++x) rho[x] = *r.component(r.lprin(a), t, x);
        for (Index x = 0; x < r.size(); ++x)
          for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
            if (r.mul(static_cast<Index>(i), a) == rho[x]) psi[x] = static_cast<Index>(i);
        std::size_t solutions = 0;
        for (Index b = 0; b < r.size(); ++b)
          if (s.test(b) && r.mul(b, a) == rho[r.one()]) ++solutions;
        for (Index b = 0; b < r.size(); ++b) {
          bool is_mult = true;
          for (Index x = 0; x < r.size() && is_mult; ++x) is_mult = psi[x] == r.mul(x, b);
          const Failure f = first_failure({
              require({"exactly one b in S' has ba = rho(Ra, T')(1)", solutions == 1}),
              equivalent({{"b in S' with ba = rho(Ra, T')(1)", s.test(b) && r.mul(b, a) == rho[r.one()]},
                          {"psi is right multiplication by b", is_mult},
                          {"b in a{1,2}, Rb = S', lann b = T'",
                           reflexive(r, a, b) && r.lprin(b) == s && r.lann(b) == t}}),
          });
          if (!sink.check(f, {{"a", a}, {"S'", &s}, {"T'", &t}, {"b", b}})) return;
        }
      }
    }
  }
}

bool reflexive_exists(const TableRing& r, Index a, const std::function<bool(Index)>& predicate) {
  for (Index x = 0; x < r.size(); ++x)
    if (reflexive(r, a, x) && predicate(x)) return true;
  return false;
}

void reflexive_rprin_rann_existence(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      const Set as = r.left_image(a, s);
      const bool meet_s = r.trivial_meet(r.rann(a), s);
      for (const Set& t : r.right_ideals()) {
        const bool meet_t = r.trivial_meet(r.rprin(a), t);
        bool projected = false;
        for (std::size_t i = s.find_first(); i != Set::npos && !projected; i = s.find_next(i))
          projected = r.rho_right(r.mul(a, static_cast<Index>(i)), as, t);
        const Failure f = equivalent({
            {"the reflexive inverse with xR = S, rann x = T exists",
             reflexive_exists(r, a, [&](Index x) { return r.rprin(x) == s && r.rann(x) == t; })},
            {"R = aR (+) T and R = S (+) rann a", r.direct_sum(r.rprin(a), t) && r.direct_sum(s, r.rann(a))},
            {"R = aS (+) T with both trivial meets", r.direct_sum(as, t) && meet_s && meet_t},
            {"some x in S has phi_ax = rho(aS, T) with both trivial meets", projected && meet_s && meet_t},
        });
        if (!sink.check(f, {{"a", a}, {"S", &s}, {"T", &t}})) return;
      }
    }
  }
}

void reflexive_lprin_lann_existence(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.left_ideals()) {
      const Set sa = r.right_image(s, a);
      const bool meet_s = r.trivial_meet(r.lann(a), s);
      for (const Set& t : r.left_ideals()) {
        const bool meet_t = r.trivial_meet(r.lprin(a), t);
        bool projected = false;
        for (std::size_t i = s.find_first(); i != Set::npos && !projected; i = s.find_next(i))
          projected = r.rho_left(r.mul(static_cast<Index>(i), a), sa, t);
        const Failure f = equivalent({
            {"the reflexive inverse with Rx = S', lann x = T' exists",
             reflexive_exists(r, a, [&](Index x) { return r.lprin(x) == s && r.lann(x) == t; })},
            {"R = Ra (+) T' and R = S' (+) lann a", r.direct_sum(r.lprin(a), t) && r.direct_sum(s, r.lann(a))},
            {"R = S'a (+) T' with both trivial meets", r.direct_sum(sa, t) && meet_s && meet_t},
            {"some x in S' has _xa phi = rho(S'a, T') with both trivial meets", projected && meet_s && meet_t},
        });
        if (!sink.check(f, {{"a", a}, {"S'", &s}, {"T'", &t}})) return;
      }
    }
  }
}

void reflexive_rprin_lprin_existence(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (const Set& s : r.right_ideals()) {
      const Set as = r.left_image(a, s);
      const Set lann_s = r.lann_of(s);
      for (const Set& sp : r.left_ideals()) {
        const Set spa = r.right_image(sp, a);
        const Set rann_sp = r.rann_of(sp);
        const bool meets = r.trivial_meet(r.rprin(a), rann_sp) && r.trivial_meet(r.lprin(a), lann_s);
        bool projected = false;
        const Set both = s & sp;
        for (std::size_t i = both.find_first(); i != Set::npos && !projected; i = both.find_next(i)) {
          const Index x = static_cast<Index>(i);
          projected = r.rho_right(r.mul(a, x), as, rann_sp) && r.rho_left(r.mul(x, a), spa, lann_s);
        }
        const Failure f = equivalent({
            {"the reflexive inverse with xR = S, Rx = S' exists",
             reflexive_exists(r, a, [&](Index x) { return r.rprin(x) == s && r.lprin(x) == sp; })},
            {"four decompositions of R", r.direct_sum(r.rprin(a), rann_sp) && r.direct_sum(s, r.rann(a)) &&
                                             r.direct_sum(r.lprin(a), lann_s) && r.direct_sum(sp, r.lann(a))},
            {"R = aS (+) rann S' and R = S'a (+) lann S with trivial meets",
             r.direct_sum(as, rann_sp) && r.direct_sum(spa, lann_s) && meets},
            {"some x in S meet S' gives both projectors with trivial meets", projected && meets},
        });
        if (!sink.check(f, {{"a", a}, {"S", &s}, {"S'", &sp}})) return;
      }
    }
  }
}

}  // namespace

void add_reflexive_cases(std::vector<TheoremCase>& out) {
  out.push_back({"T-12I-rprin-rann", "eight descriptions of the reflexive inverse with xR = S and rann x = T",
                 "a, right ideals S, T, x", false, reflexive_rprin_rann});
  out.push_back({"T-12I-lprin-lann", "eight descriptions of the reflexive inverse with Rx = S' and lann x = T'",
                 "a, left ideals S', T', x", false, reflexive_lprin_lann});
  out.push_back({"T-12I-rprin-lprin", "eight descriptions of the reflexive inverse with xR = S and Rx = S'",
                 "a, right ideal S, left ideal S', x", false, reflexive_rprin_lprin});
  out.push_back({"T-12I-rann-lann", "six descriptions of the reflexive inverse with rann x = T and lann x = T'",
                 "a, right ideal T, left ideal T', x", false, reflexive_rann_lann});
  out.push_back({"T-12I-rprin", "six descriptions of reflexive inverses with xR = S", "a, right ideal S, x", false,
                 reflexive_rprin});
  out.push_back({"T-12I-rann", "four descriptions of reflexive inverses with rann x = T", "a, right ideal T, x",
                 false, reflexive_rann});
  out.push_back({"T-12I-lprin", "six descriptions of reflexive inverses with Rx = S'", "a, left ideal S', x", false,
                 reflexive_lprin});
  out.push_back({"T-12I-lann", "four descriptions of reflexive inverses with lann x = T'", "a, left ideal T', x",
                 false, reflexive_lann});
  out.push_back({"T-12I-isomorphism-right",
                 "with R = S (+) rann a and R = aR (+) T, the reflexive inverse with xR = S and rann x = T is the "
                 "element inducing the inverse of a restricted to S composed with the projection onto aR",
                 "a, right ideals S, T with both decompositions, b", false, isomorphism_right});
  out.push_back({"T-12I-isomorphism-left", "the left-handed isomorphism description",
                 "a, left ideals S', T' with both decompositions, b", false, isomorphism_left});
  out.push_back({"T-12I-rprin-rann-existence", "existence of the reflexive inverse with xR = S and rann x = T",
                 "a, right ideals S, T", false, reflexive_rprin_rann_existence});
  out.push_back({"T-12I-lprin-lann-existence", "existence of the reflexive inverse with Rx = S' and lann x = T'",
                 "a, left ideals S', T'", false, reflexive_lprin_lann_existence});
  out.push_back({"T-12I-rprin-lprin-existence", "existence of the reflexive inverse with xR = S and Rx = S'",
                 "a, right ideal S, left ideal S'", false, reflexive_rprin_lprin_existence});
}

}  // namespace geninv::oracle::detail
