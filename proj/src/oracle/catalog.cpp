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

// Catalog assembly, shared brute-force tables and the elementary lemmas:
// identities of inner, outer and Drazin inverses, invertibility,
// idempotents, annihilators, the involution, and projectors.

#include <algorithm>

#include "checks.hpp"

namespace geninv::oracle {

namespace detail {

std::vector<std::vector<Index>> inner_inverses(const TableRing& r) {
  std::vector<std::vector<Index>> out(r.size());
  for (Index a = 0; a < r.size(); ++a) out[a] = r.solutions(a, {1});
  return out;
}

std::vector<std::optional<DrazinData>> drazin_table(const TableRing& r) {
  std::vector<std::optional<DrazinData>> out(r.size());
  for (Index a = 0; a < r.size(); ++a) {
    // The index never exceeds the length of the chain a^k R, which is at
    // most the ring size.
    for (unsigned k = 1; k <= r.size(); ++k) {
      EquationSet eqs{2, 5};
      eqs.add_power_left(k);
      const std::vector<Index> sols = r.solutions(a, eqs);
      if (sols.empty()) continue;
      if (sols.size() != 1) throw InternalError("Drazin inverse not unique in " + r.spec().name());
      out[a] = DrazinData{k, sols.front()};
      break;
    }
  }
  return out;
}

std::vector<Index> weights(const TableRing& r) {
  std::vector<Index> out;
  for (Index e = 0; e < r.size(); ++e)
    if (r.invertible(e) && r.symmetric(e)) out.push_back(e);
  return out;
}

std::vector<Index> idempotents(const TableRing& r) {
  std::vector<Index> out;
  for (Index p = 0; p < r.size(); ++p)
    if (r.idempotent(p)) out.push_back(p);
  return out;
}

namespace {

// ---------------------------------------------------------------------------
// Identities of inner, outer and Drazin inverses.

void inner_outer_identities(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index x = 0; x < r.size(); ++x) {
      const Index ax = r.mul(a, x);
      const Index xa = r.mul(x, a);
      const bool inner = r.satisfies(a, x, {1});
      const bool outer = r.satisfies(a, x, {2});
      const Failure f = first_failure({
          implies({"x in a{1}", inner}, {"axR = aR", r.rprin(ax) == r.rprin(a)}),
          implies({"x in a{1}", inner}, {"rann(xa) = rann(a)", r.rann(xa) == r.rann(a)}),
          implies({"x in a{1}", inner}, {"lann(ax) = lann(a)", r.lann(ax) == r.lann(a)}),
          implies({"x in a{1}", inner}, {"Rxa = Ra", r.lprin(xa) == r.lprin(a)}),
          implies({"x in a{2}", outer}, {"rann(ax) = rann(x)", r.rann(ax) == r.rann(x)}),
          implies({"x in a{2}", outer}, {"xaR = xR", r.rprin(xa) == r.rprin(x)}),
          implies({"x in a{2}", outer}, {"Rax = Rx", r.lprin(ax) == r.lprin(x)}),
          implies({"x in a{2}", outer}, {"lann(xa) = lann(x)", r.lann(xa) == r.lann(x)}),
      });
      if (!sink.check(f, {{"a", a}, {"x", x}})) return;
    }
  }
}

void drazin_identities(const TableRing& r, CaseSink& sink) {
  const auto drazin = drazin_table(r);
  unsigned top = 1;
  for (const auto& d : drazin)
    if (d) top = std::max(top, d->index + 1);
  for (Index a = 0; a < r.size(); ++a) {
    if (!drazin[a]) continue;
    const Index d = drazin[a]->inverse;
    const Index da = r.mul(d, a);
    const Index ad = r.mul(a, d);
    for (unsigned l = drazin[a]->index; l <= top; ++l) {
      const Index al = r.pow(a, l);
      const Failure f = first_failure({
          equivalent({{"a^l R", true},
                      {"DaR = a^l R", r.rprin(da) == r.rprin(al)},
                      {"aDR = a^l R", r.rprin(ad) == r.rprin(al)},
                      {"DR = a^l R", r.rprin(d) == r.rprin(al)}}),
          equivalent({{"rann(a^l)", true},
                      {"rann(aD) = rann(a^l)", r.rann(ad) == r.rann(al)},
                      {"rann(Da) = rann(a^l)", r.rann(da) == r.rann(al)},
                      {"rann(D) = rann(a^l)", r.rann(d) == r.rann(al)}}),
          equivalent({{"R a^l", true},
                      {"RaD = R a^l", r.lprin(ad) == r.lprin(al)},
                      {"RDa = R a^l", r.lprin(da) == r.lprin(al)},
                      {"RD = R a^l", r.lprin(d) == r.lprin(al)}}),
          equivalent({{"lann(a^l)", true},
                      {"lann(aD) = lann(a^l)", r.lann(ad) == r.lann(al)},
                      {"lann(Da) = lann(a^l)", r.lann(da) == r.lann(al)},
                      {"lann(D) = lann(a^l)", r.lann(d) == r.lann(al)}}),
      });
      if (!sink.check(f, {{"a", a}, {"l", Exponent{l}}})) return;
    }
  }
}

void invertible_lemma(const TableRing& r, CaseSink& sink) {
  const Set all = r.all();
  const Set zero = r.singleton_zero();
  for (Index a = 0; a < r.size(); ++a) {
    const Failure f = equivalent({
        {"a invertible", r.invertible(a)},
        {"aR = R and rann(a) = 0", r.rprin(a) == all && r.rann(a) == zero},
        {"Ra = R and lann(a) = 0", r.lprin(a) == all && r.lann(a) == zero},
    });
    if (!sink.check(f, {{"a", a}})) return;
  }
}

void idempotent_ideals(const TableRing& r, CaseSink& sink) {
  const auto ps = idempotents(r);
  for (Index p : ps) {
    const Index cp = r.sub(r.one(), p);
    for (Index q : ps) {
      const Failure f = first_failure({
          require({"pR = rann(1-p)", r.rprin(p) == r.rann(cp)}),
          require({"Rp = lann(1-p)", r.lprin(p) == r.lann(cp)}),
          equivalent({{"pR in qR", TableRing::subset(r.rprin(p), r.rprin(q))},
                      {"lann(q) in lann(p)", TableRing::subset(r.lann(q), r.lann(p))}}),
          equivalent({{"Rp in Rq", TableRing::subset(r.lprin(p), r.lprin(q))},
                      {"rann(q) in rann(p)", TableRing::subset(r.rann(q), r.rann(p))}}),
          equivalent({{"q = p", q == p},
                      {"qR in pR and rann(q) in rann(p)",
                       TableRing::subset(r.rprin(q), r.rprin(p)) && TableRing::subset(r.rann(q), r.rann(p))}}),
      });
      if (!sink.check(f, {{"p", p}, {"q", q}})) return;
    }
  }
}

// ---------------------------------------------------------------------------
// Annihilators, regularity and the involution.

void annihilator_inclusions(const TableRing& r, CaseSink& sink) {
  using S = TableRing;
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      const bool breg = r.regular(b);
      const Failure f = first_failure({
          implies({"aR in bR", S::subset(r.rprin(a), r.rprin(b))},
                  {"lann(b) in lann(a)", S::subset(r.lann(b), r.lann(a))}),
          implies({"lann(b) in lann(a) with b regular", S::subset(r.lann(b), r.lann(a)) && breg},
                  {"aR in bR", S::subset(r.rprin(a), r.rprin(b))}),
          implies({"Ra in Rb", S::subset(r.lprin(a), r.lprin(b))},
                  {"rann(b) in rann(a)", S::subset(r.rann(b), r.rann(a))}),
          implies({"rann(b) in rann(a) with b regular", S::subset(r.rann(b), r.rann(a)) && breg},
                  {"Ra in Rb", S::subset(r.lprin(a), r.lprin(b))}),
      });
      if (!sink.check(f, {{"a", a}, {"b", b}})) return;
    }
  }
}

void regularity_transfer(const TableRing& r, CaseSink& sink) {
  using S = TableRing;
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      const bool breg = r.regular(b);
      const Failure f = first_failure({
          implies({"b regular, rann(b) in rann(a), Rb in Ra",
                   breg && S::subset(r.rann(b), r.rann(a)) && S::subset(r.lprin(b), r.lprin(a))},
                  {"a regular", r.regular(a)}),
          implies({"b regular, lann(b) in lann(a), bR in aR",
                   breg && S::subset(r.lann(b), r.lann(a)) && S::subset(r.rprin(b), r.rprin(a))},
                  {"a regular", r.regular(a)}),
      });
      if (!sink.check(f, {{"a", a}, {"b", b}})) return;
    }
  }
}

void regularity_criterion(const TableRing& r, CaseSink& sink) {
  using S = TableRing;
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      Failure f;
      if (r.regular(b) && r.rann(a) == r.rann(b))
        f = equivalent({{"Rb in Ra", S::subset(r.lprin(b), r.lprin(a))}, {"a regular", r.regular(a)}});
      if (!f && r.regular(b) && r.lann(a) == r.lann(b))
        f = equivalent({{"bR in aR", S::subset(r.rprin(b), r.rprin(a))}, {"a regular", r.regular(a)}});
      if (!sink.check(f, {{"a", a}, {"b", b}})) return;
    }
  }
}

void star_inclusions(const TableRing& r, CaseSink& sink) {
  using S = TableRing;
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      const Index as = r.star(a);
      const Index bs = r.star(b);
      const Failure f = first_failure({
          equivalent({{"aR in bR", S::subset(r.rprin(a), r.rprin(b))},
                      {"Ra* in Rb*", S::subset(r.lprin(as), r.lprin(bs))}}),
          equivalent({{"rann(a) in rann(b)", S::subset(r.rann(a), r.rann(b))},
                      {"lann(a*) in lann(b*)", S::subset(r.lann(as), r.lann(bs))}}),
      });
      if (!sink.check(f, {{"a", a}, {"b", b}})) return;
    }
  }
}

// s* t = 0 for all s in S, t in T.
bool right_orthogonal(const TableRing& r, const Set& s, const Set& t) {
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
    for (std::size_t j = t.find_first(); j != Set::npos; j = t.find_next(j))
      if (r.mul(r.star(static_cast<Index>(i)), static_cast<Index>(j)) != r.zero()) return false;
  return true;
}

// s t* = 0 for all s in S, t in T.
bool left_orthogonal(const TableRing& r, const Set& s, const Set& t) {
  for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i))
    for (std::size_t j = t.find_first(); j != Set::npos; j = t.find_next(j))
      if (r.mul(static_cast<Index>(i), r.star(static_cast<Index>(j))) != r.zero()) return false;
  return true;
}

void orthogonality(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    const Index as = r.star(a);
    const bool sym = r.symmetric(a);
    const bool idem = r.idempotent(a);
    const bool right_own = right_orthogonal(r, r.rprin(a), r.rann(a));
    const bool left_own = left_orthogonal(r, r.lprin(a), r.lann(a));
    const Failure f = first_failure({
        require({"aR right orthogonal to rann(a*)", right_orthogonal(r, r.rprin(a), r.rann(as))}),
        implies({"a symmetric", sym}, {"aR right orthogonal to rann(a)", right_own}),
        implies({"a idempotent with aR right orthogonal to rann(a)", idem && right_own}, {"a symmetric", sym}),
        require({"Ra left orthogonal to lann(a*)", left_orthogonal(r, r.lprin(a), r.lann(as))}),
        implies({"a symmetric", sym}, {"Ra left orthogonal to lann(a)", left_own}),
        implies({"a idempotent with Ra left orthogonal to lann(a)", idem && left_own}, {"a symmetric", sym}),
    });
    if (!sink.check(f, {{"a", a}})) return;
  }
}

// ---------------------------------------------------------------------------
// Projectors.

// The table of rho_{S,T}, which must exist.
std::vector<Index> projector_table(const TableRing& r, const Set& s, const Set& t) {
  std::vector<Index> out(r.size());
  for (Index x = 0; x < r.size(); ++x) out[x] = *r.component(s, t, x);
  return out;
}

void projector_basics(const TableRing& r, CaseSink& sink) {
  const auto& groups = r.subgroups();
  const Index one = r.one();
  for (const Set& s : groups) {
    for (const Set& t : groups) {
      if (!r.direct_sum(s, t)) continue;
      const auto rho = projector_table(r, s, t);
      const auto other = projector_table(r, t, s);
      bool complementary = true, fixes_image = true, idempotent = true, additive = true;
      Set image = r.empty_set(), kernel = r.empty_set();
      for (Index x = 0; x < r.size(); ++x) {
        complementary = complementary && r.add(rho[x], other[x]) == x;
        fixes_image = fixes_image && (s.test(x) == (rho[x] == x));
        idempotent = idempotent && rho[rho[x]] == rho[x];
        image.set(rho[x]);
        if (rho[x] == r.zero()) kernel.set(x);
        for (Index y = 0; y < r.size() && additive; ++y)
          additive = rho[r.add(x, y)] == r.add(rho[x], rho[y]);
      }
      bool right_compatible = true, left_compatible = true;
      for (Index x = 0; x < r.size(); ++x) {
        for (Index y = 0; y < r.size(); ++y) {
          right_compatible = right_compatible && rho[r.mul(x, y)] == r.mul(rho[x], y);
          left_compatible = left_compatible && rho[r.mul(x, y)] == r.mul(x, rho[y]);
        }
      }
      const bool right_ideals = r.is_right_ideal(s) && r.is_right_ideal(t);
      const bool left_ideals = r.is_left_ideal(s) && r.is_left_ideal(t);
      const Index unit = rho[one];
      std::vector<Failure> fs = {
          require({"rho_ST + rho_TS = id", complementary}),
          require({"im(rho) = S", image == s}),
          require({"ker(rho) = T", kernel == t}),
          require({"rho fixes exactly S", fixes_image}),
          require({"rho idempotent", idempotent}),
          require({"rho additive", additive}),
          equivalent({{"S and T right ideals", right_ideals}, {"rho(r1 r2) = rho(r1) r2", right_compatible}}),
          equivalent({{"S and T left ideals", left_ideals}, {"rho(r1 r2) = r1 rho(r2)", left_compatible}}),
      };
      if (right_ideals) {
        fs.push_back(require({"rho(r) = rho(1) r", r.rho_right(unit, s, t)}));
        for (Index a = 0; a < r.size() && !first_failure(fs); ++a) {
          fs.push_back(equivalent({{"rho(1) a = a", r.mul(unit, a) == a},
                                   {"aR in S", TableRing::subset(r.rprin(a), s)}}));
          fs.push_back(equivalent({{"a rho(1) = a", r.mul(a, unit) == a},
                                   {"T in rann(a)", TableRing::subset(t, r.rann(a))}}));
        }
      }
      if (left_ideals) {
        fs.push_back(require({"rho(r) = r rho(1)", r.rho_left(unit, s, t)}));
        for (Index a = 0; a < r.size() && !first_failure(fs); ++a) {
          fs.push_back(equivalent({{"a rho(1) = a", r.mul(a, unit) == a},
                                   {"Ra in S", TableRing::subset(r.lprin(a), s)}}));
          fs.push_back(equivalent({{"rho(1) a = a", r.mul(unit, a) == a},
                                   {"T in lann(a)", TableRing::subset(t, r.lann(a))}}));
        }
      }
      if (!sink.check(first_failure(fs), {{"S", &s}, {"T", &t}})) return;
    }
  }
}

void endomorphism_projectors(const TableRing& r, CaseSink& sink) {
  const auto& groups = r.subgroups();
  for (Index b = 0; b < r.size(); ++b) {
    // Left and right multiplication are projectors onto some decomposition
    // exactly when b is idempotent, and then onto image along kernel.
    bool right_some = false, left_some = false;
    for (const Set& s : groups) {
      for (const Set& t : groups) {
        right_some = right_some || r.rho_right(b, s, t);
        left_some = left_some || r.rho_left(b, s, t);
      }
    }
    const Failure f = first_failure({
        equivalent({{"b idempotent", r.idempotent(b)},
                    {"left multiplication by b is some projector", right_some},
                    {"left multiplication by b = rho(bR, rann b)", r.rho_right(b, r.rprin(b), r.rann(b))}}),
        equivalent({{"b idempotent", r.idempotent(b)},
                    {"right multiplication by b is some projector", left_some},
                    {"right multiplication by b = rho(Rb, lann b)", r.rho_left(b, r.lprin(b), r.lann(b))}}),
    });
    if (!sink.check(f, {{"b", b}})) return;
  }
}

// ---------------------------------------------------------------------------
// Inverse classes as projectors.

void one_inverse_projectors(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index x = 0; x < r.size(); ++x) {
      const Index ax = r.mul(a, x);
      const Index xa = r.mul(x, a);
      const Failure f = equivalent({
          {"x in a{1}", r.satisfies(a, x, {1})},
          {"phi_ax = rho(aR, rann ax)", r.rho_right(ax, r.rprin(a), r.rann(ax))},
          {"phi_xa = rho(xaR, rann a)", r.rho_right(xa, r.rprin(xa), r.rann(a))},
          {"_ax phi = rho(Rax, lann a)", r.rho_left(ax, r.lprin(ax), r.lann(a))},
          {"_xa phi = rho(Ra, lann xa)", r.rho_left(xa, r.lprin(a), r.lann(xa))},
      });
      if (!sink.check(f, {{"a", a}, {"x", x}})) return;
    }
  }
}

void two_inverse_projectors(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index x = 0; x < r.size(); ++x) {
      const Index ax = r.mul(a, x);
      const Index xa = r.mul(x, a);
      const Failure f = equivalent({
          {"x in a{2}", r.satisfies(a, x, {2})},
          {"phi_ax = rho(axR, rann x)", r.rho_right(ax, r.rprin(ax), r.rann(x))},
          {"phi_xa = rho(xR, rann xa)", r.rho_right(xa, r.rprin(x), r.rann(xa))},
          {"_ax phi = rho(Rx, lann ax)", r.rho_left(ax, r.lprin(x), r.lann(ax))},
          {"_xa phi = rho(Rxa, lann x)", r.rho_left(xa, r.lprin(xa), r.lann(x))},
      });
      if (!sink.check(f, {{"a", a}, {"x", x}})) return;
    }
  }
}

void product_inner(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index b = 0; b < r.size(); ++b) {
      const Index ab = r.mul(a, b);
      for (Index z : r.solutions(ab, {1})) {
        const Failure f = first_failure({
            equivalent({{"ab z a = a", r.mul(r.mul(ab, z), a) == a},
                        {"abR = aR", r.rprin(ab) == r.rprin(a)},
                        {"lann(ab) = lann(a)", r.lann(ab) == r.lann(a)}}),
            equivalent({{"b z ab = b", r.mul(r.mul(b, z), ab) == b},
                        {"rann(ab) = rann(b)", r.rann(ab) == r.rann(b)},
                        {"Rab = Rb", r.lprin(ab) == r.lprin(b)}}),
        });
        if (!sink.check(f, {{"a", a}, {"b", b}, {"z", z}})) return;
      }
    }
  }
}

void reflexive_projectors(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index x = 0; x < r.size(); ++x) {
      const Index ax = r.mul(a, x);
      const Index xa = r.mul(x, a);
      const Failure f = equivalent({
          {"x in a{1,2}", r.satisfies(a, x, {1, 2})},
          {"phi_ax = rho(aR, rann x)", r.rho_right(ax, r.rprin(a), r.rann(x))},
          {"phi_xa = rho(xR, rann a)", r.rho_right(xa, r.rprin(x), r.rann(a))},
          {"_ax phi = rho(Rx, lann a)", r.rho_left(ax, r.lprin(x), r.lann(a))},
          {"_xa phi = rho(Ra, lann x)", r.rho_left(xa, r.lprin(a), r.lann(x))},
      });
      if (!sink.check(f, {{"a", a}, {"x", x}})) return;
    }
  }
}

void reflexive_sufficient(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index x = 0; x < r.size(); ++x) {
      const Index ax = r.mul(a, x);
      const Index xa = r.mul(x, a);
      const bool inner = r.satisfies(a, x, {1});
      const bool outer = r.satisfies(a, x, {2});
      const Clause both{"x in a{1,2}", inner && outer};
      const Failure f = first_failure({
          implies({"x in a{1} with xR = xaR", inner && r.rprin(x) == r.rprin(xa)}, both),
          implies({"x in a{1} with Rx = Rax", inner && r.lprin(x) == r.lprin(ax)}, both),
          implies({"x in a{2} with aR = axR", outer && r.rprin(a) == r.rprin(ax)}, both),
          implies({"x in a{2} with Ra = Rxa", outer && r.lprin(a) == r.lprin(xa)}, both),
      });
      if (!sink.check(f, {{"a", a}, {"x", x}})) return;
    }
  }
}

void commuting_inner_projectors(const TableRing& r, CaseSink& sink) {
  for (Index a = 0; a < r.size(); ++a) {
    for (Index x = 0; x < r.size(); ++x) {
      const Index ax = r.mul(a, x);
      const Index xa = r.mul(x, a);
      const Failure f = equivalent({
          {"x in a{1,5}", r.satisfies(a, x, {1, 5})},
          {"phi_ax = phi_xa = rho(aR, rann a)",
           r.rho_right(ax, r.rprin(a), r.rann(a)) && r.rho_right(xa, r.rprin(a), r.rann(a))},
          {"_ax phi = _xa phi = rho(Ra, lann a)",
           r.rho_left(ax, r.lprin(a), r.lann(a)) && r.rho_left(xa, r.lprin(a), r.lann(a))},
      });
      if (!sink.check(f, {{"a", a}, {"x", x}})) return;
    }
  }
}

void drazin_projectors(const TableRing& r, CaseSink& sink) {
  using S = TableRing;
  const auto drazin = drazin_table(r);
  unsigned top = 1;
  for (const auto& d : drazin)
    if (d) top = std::max(top, d->index + 1);
  for (Index a = 0; a < r.size(); ++a) {
    for (unsigned l = 1; l <= top; ++l) {
      const Index al = r.pow(a, l);
      const Set& im_r = r.rprin(al);
      const Set& ker_r = r.rann(al);
      const Set& im_l = r.lprin(al);
      const Set& ker_l = r.lann(al);
      for (Index x = 0; x < r.size(); ++x) {
        const Index ax = r.mul(a, x);
        const Index xa = r.mul(x, a);
        const bool right = r.rho_right(xa, im_r, ker_r) && r.rho_right(ax, im_r, ker_r);
        const bool left = r.rho_left(xa, im_l, ker_l) && r.rho_left(ax, im_l, ker_l);
        const Failure f = equivalent({
            {"a has index at most l and x is its Drazin inverse",
             drazin[a] && drazin[a]->index <= l && drazin[a]->inverse == x},
            {"phi_xa = phi_ax = rho(a^l R, rann a^l) with xR in a^l R", right && S::subset(r.rprin(x), im_r)},
            {"phi_xa = phi_ax = rho(a^l R, rann a^l) with rann a^l in rann x",
             right && S::subset(ker_r, r.rann(x))},
            {"_xa phi = _ax phi = rho(R a^l, lann a^l) with Rx in R a^l", left && S::subset(r.lprin(x), im_l)},
            {"_xa phi = _ax phi = rho(R a^l, lann a^l) with lann a^l in lann x",
             left && S::subset(ker_l, r.lann(x))},
        });
        if (!sink.check(f, {{"a", a}, {"l", Exponent{l}}, {"x", x}})) return;
      }
    }
  }
}

}  // namespace

void add_basic_cases(std::vector<TheoremCase>& out) {
  out.push_back({"L-inner-outer-identities",
                 "inner inverses keep aR, rann a, lann a, Ra through ax and xa; outer inverses do the same for x",
                 "a, x", false, inner_outer_identities});
  out.push_back({"L-drazin-identities",
                 "for l at least the index, the Drazin inverse, aD, Da and a^l share principal ideals and annihilators",
                 "a with a Drazin inverse, l from the index to the largest index plus one", false,
                 drazin_identities});
  out.push_back({"T-invertible-lemma", "a invertible iff aR = R with rann a = 0 iff Ra = R with lann a = 0", "a",
                 false, invertible_lemma});
  out.push_back({"L-idempotent-ideals",
                 "for idempotents: pR = rann(1-p), inclusions of principal ideals reverse on annihilators, and "
                 "q = p iff qR in pR with rann q in rann p",
                 "idempotents p, q", false, idempotent_ideals});
  out.push_back({"L-annihilator-inclusions",
                 "aR in bR forces lann b in lann a, with the converse for regular b; likewise on the left", "a, b",
                 false, annihilator_inclusions});
  out.push_back({"L-regularity-transfer",
                 "regularity passes from b to a under matching annihilator and principal ideal inclusions", "a, b",
                 false, regularity_transfer});
  out.push_back({"L-regularity-criterion",
                 "for regular b with rann a = rann b, Rb in Ra iff a is regular; likewise on the right", "a, b", false,
                 regularity_criterion});
  out.push_back({"L-star-inclusions",
                 "aR in bR iff Ra* in Rb*, and rann a in rann b iff lann a* in lann b*", "a, b", true,
                 star_inclusions});
  out.push_back({"L-orthogonality",
                 "aR is right orthogonal to rann a*; symmetric elements are orthogonal to their annihilators; an "
                 "idempotent orthogonal to its annihilator is symmetric; likewise on the left",
                 "a", true, orthogonality});
}

void add_projector_cases(std::vector<TheoremCase>& out) {
  out.push_back({"L-projector-basics",
                 "projectors onto S along T are idempotent and additive, with image S and kernel T; they commute "
                 "with right (left) multiplication iff S and T are right (left) ideals, in which case they are "
                 "multiplication by rho(1), and rho(1) detects inclusions in S and T",
                 "additive subgroups S, T with R = S (+) T", false, projector_basics});
  out.push_back({"L-endomorphism-projectors",
                 "multiplication by b is a projector iff b is idempotent, and then it projects onto the image "
                 "along the kernel",
                 "b; all additive subgroup pairs", false, endomorphism_projectors});
  out.push_back({"T-1I-projectors", "x in a{1} iff each of four multiplication maps is the matching projector",
                 "a, x", false, one_inverse_projectors});
  out.push_back({"T-2I-projectors", "x in a{2} iff each of four multiplication maps is the matching projector",
                 "a, x", false, two_inverse_projectors});
  out.push_back({"L-product-inner",
                 "for z in (ab){1}: ab z a = a iff abR = aR iff lann ab = lann a, and b z ab = b iff rann ab = "
                 "rann b iff Rab = Rb",
                 "a, b, z in (ab){1}", false, product_inner});
  out.push_back({"T-12I-projectors", "x in a{1,2} iff each of four multiplication maps is the matching projector",
                 "a, x", false, reflexive_projectors});
  out.push_back({"R-reflexive-sufficient",
                 "an inner inverse with xR = xaR or Rx = Rax is reflexive; an outer inverse with aR = axR or Ra = "
                 "Rxa is reflexive",
                 "a, x", false, reflexive_sufficient});
  out.push_back({"T-15-projectors",
                 "x in a{1,5} iff ax and xa both project onto aR along rann a iff both project onto Ra along lann a",
                 "a, x", false, commuting_inner_projectors});
  out.push_back({"T-drazin-projectors",
                 "x is the Drazin inverse with index at most l iff ax and xa project onto a^l R along rann a^l with "
                 "one extra inclusion, and likewise on the left",
                 "a, l up to the largest index plus one, x", false, drazin_projectors});
}

}  // namespace detail

const std::vector<TheoremCase>& catalog() {
  static const std::vector<TheoremCase> cases = [] {
    std::vector<TheoremCase> out;
    detail::add_basic_cases(out);
    detail::add_projector_cases(out);
    detail::add_prescribed_cases(out);
    detail::add_reflexive_cases(out);
    detail::add_star_cases(out);
    detail::add_weighted_cases(out);
    detail::add_bc_pq_cases(out);
    return out;
  }();
  return cases;
}

}  // namespace geninv::oracle
