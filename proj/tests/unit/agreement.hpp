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

// Library constructions against table-ring ground truth. Every input in the
// quantifier scope is tried; each comparison is one check.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geninv/oracle.hpp"
#include "geninv/prescribed.hpp"
#include "geninv/special.hpp"
#include "support.hpp"

namespace geninv::testing {

struct Agreement {
  std::string operation;
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::string first_mismatch;

  bool passed() const { return checked > 0 && mismatches == 0; }
};

namespace agreement_detail {

using oracle::Index;
using oracle::Set;
using oracle::TableRing;

class Recorder {
 public:
  Recorder(const RingPtr& ring, const TableRing& table, std::vector<Agreement>& out)
      : ring_(ring), table_(table), out_(out) {}

  // Unique-or-none: the library report against the ground-truth solutions.
  void unique(const std::string& op, const InverseReport& got, const std::vector<Index>& truth,
              const std::string& where) {
    bool ok = truth.size() <= 1 && got.found() == !truth.empty();
    if (ok && got.found()) ok = table_.index_of(*got.value) == truth.front();
    record(op, ok, where + " got " + (got.found() ? got.value->str() : "none") + ", expected " + render(truth));
  }

  // Set equality in canonical order.
  void set(const std::string& op, const std::vector<Element>& got, const std::vector<Index>& truth,
           const std::string& where) {
    bool ok = got.size() == truth.size();
    for (std::size_t i = 0; ok && i < got.size(); ++i) ok = table_.index_of(got[i]) == truth[i];
    record(op, ok, where + " got " + std::to_string(got.size()) + " members, expected " + render(truth));
  }

  void record(const std::string& op, bool ok, const std::string& detail) {
    Agreement& a = slot(op);
    ++a.checked;
    if (!ok && a.mismatches++ == 0) a.first_mismatch = detail;
  }

  std::vector<Index> solve(const std::function<bool(Index)>& pred) const {
    std::vector<Index> out;
    for (Index x = 0; x < table_.size(); ++x)
      if (pred(x)) out.push_back(x);
    return out;
  }

  std::string render(const std::vector<Index>& xs) const {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + table_.render(xs[i]);
    return s + "}";
  }

  Element el(Index i) const { return table_.element(ring_, i); }

  SidedIdeal ideal(const Set& s, Side side) const {
    std::vector<Element> members;
    for (std::size_t i = s.find_first(); i != Set::npos; i = s.find_next(i)) members.push_back(el(Index(i)));
    return SidedIdeal::from_elements(ring_, side, members);
  }

 private:
  Agreement& slot(const std::string& op) {
    auto it = index_.find(op);
    if (it != index_.end()) return out_[it->second];
    index_[op] = out_.size();
    out_.push_back(Agreement{op, 0, 0, {}});
    return out_.back();
  }

  RingPtr ring_;
  const TableRing& table_;
  std::vector<Agreement>& out_;
  std::map<std::string, std::size_t> index_;
};

}  // namespace agreement_detail

// Runs every comparison on a finite ring.
inline std::vector<Agreement> oracle_agreement(const RingPtr& ring) {
  using namespace agreement_detail;
  std::vector<Agreement> out;
  const TableRing t(ring->spec());
  Recorder rec(ring, t, out);
  const Index n = static_cast<Index>(t.size());
  const Index one = t.one();
  auto name = [&](const char* var, Index i) { return std::string(var) + "=" + t.render(i); };
  auto sols = [&](Index a, const EquationSet& eqs) { return t.solutions(a, eqs); };

  std::vector<Index> idempotents;
  std::vector<Index> weights;
  for (Index i = 0; i < n; ++i) {
    if (t.idempotent(i)) idempotents.push_back(i);
    if (t.has_star() && t.invertible(i) && t.symmetric(i)) weights.push_back(i);
  }

  for (Index a = 0; a < n; ++a) {
    const Element ea = rec.el(a);
    const std::string at = ring->name() + " " + name("a", a);

    rec.unique("group", group_inverse(ea), sols(a, {1, 2, 5}), at);
    // Least k with a{2,5,1^k} nonempty; n bounds every index.
    std::vector<Index> drazin;
    std::optional<unsigned> index;
    for (unsigned k = 1; k <= n && !index; ++k) {
      EquationSet eqs{2, 5};
      eqs.add_power_left(k);
      drazin = sols(a, eqs);
      if (!drazin.empty()) index = k;
    }
    InverseReport d = drazin_inverse(ea);
    rec.unique("drazin", d, drazin, at);
    rec.record("drazin index", d.index == index, at + " index mismatch");

    if (t.has_star()) {
      rec.unique("moore-penrose", moore_penrose(ea), sols(a, {1, 2, 3, 4}), at);
      rec.unique("core", core_inverse(ea), sols(a, {1, 2, 3, 6, 7}), at);
      rec.unique("dual-core", dual_core_inverse(ea), sols(a, {1, 2, 4, 8, 9}), at);
      for (Index e : weights)
        for (Index f : weights) {
          rec.unique("ef-mp", weighted_mp(ea, rec.el(e), rec.el(f)), rec.solve([&](Index x) {
            const Index eax = t.mul3(e, a, x), fxa = t.mul3(f, x, a);
            return t.satisfies(a, x, {1, 2}) && t.star(eax) == eax && t.star(fxa) == fxa;
          }),
                     at + " " + name("e", e) + " " + name("f", f));
        }
      for (Index e : weights) {
        const Index ase = t.mul(t.star(a), e);
        const Index fas = t.mul(*t.inverse(e), t.star(a));
        rec.unique("e-core", e_core(ea, rec.el(e)), rec.solve([&](Index x) {
          return t.satisfies(a, x, {1}) && t.rprin(x) == t.rprin(a) && t.lprin(x) == t.lprin(ase);
        }),
                   at + " " + name("e", e));
        rec.unique("f-dual-core", f_dual_core(ea, rec.el(e)), rec.solve([&](Index x) {
          return t.satisfies(a, x, {1}) && t.rprin(x) == t.rprin(fas) && t.lprin(x) == t.lprin(a);
        }),
                   at + " " + name("f", e));
      }
      for (Index w = 0; w < n; ++w) {
        const std::string where = at + " " + name("w", w);
        const Index aw = t.mul(a, w), wa = t.mul(w, a);
        rec.unique("w-core", w_core(ea, rec.el(w)), rec.solve([&](Index x) {
          const Index awx = t.mul(aw, x);
          return t.star(awx) == awx && t.mul3(x, aw, a) == a && t.mul(awx, x) == x;
        }),
                   where);
        rec.unique("v-dual-core", v_dual_core(ea, rec.el(w)), rec.solve([&](Index x) {
          const Index xva = t.mul(x, wa);
          return t.star(xva) == xva && t.mul3(a, wa, x) == a && t.mul(x, xva) == x;
        }),
                   where);
        rec.set("right-w-core", right_w_core(ea, rec.el(w)).members, rec.solve([&](Index x) {
          const Index awx = t.mul(aw, x);
          return t.mul(awx, a) == a && t.star(awx) == awx && t.mul(awx, x) == x;
        }),
                where);
        rec.set("left-v-dual-core", left_v_dual_core(ea, rec.el(w)).members, rec.solve([&](Index x) {
          const Index xva = t.mul(x, wa);
          return t.mul(a, xva) == a && t.star(xva) == xva && t.mul(x, xva) == x;
        }),
                where);
      }
    }

    // Prescribed ideals over every one-sided ideal: a right ideal R and a
    // left ideal L fill the mixed shapes; single shapes use one of them.
    auto prescribed = [&](const std::string& where, bool rp, bool ra, bool lp, bool la, const Set& rs,
                          const Set& ls) {
      IdealConstraints c;
      if (rp) c.right_prin = rec.ideal(rs, Side::right);
      if (ra) c.right_ann = rec.ideal(rs, Side::right);
      if (lp) c.left_prin = rec.ideal(ls, Side::left);
      if (la) c.left_ann = rec.ideal(ls, Side::left);
      auto outer = [&](Index x) {
        return (!rp || t.rprin(x) == rs) && (!ra || t.rann(x) == rs) && (!lp || t.lprin(x) == ls) &&
               (!la || t.lann(x) == ls);
      };
      auto inner = [&](Index x) {
        const Index xa = t.mul(x, a), ax = t.mul(a, x);
        return t.satisfies(a, x, {1}) && (!rp || t.rprin(xa) == rs) && (!ra || t.rann(ax) == rs) &&
               (!lp || t.lprin(ax) == ls) && (!la || t.lann(xa) == ls);
      };
      if (!is_single(constraint_shape(c))) {
        rec.unique("outer with ideals", outer_with(ea, c, false),
                   rec.solve([&](Index x) { return t.satisfies(a, x, {2}) && outer(x); }), where);
        rec.unique("reflexive with ideals", outer_with(ea, c, true),
                   rec.solve([&](Index x) { return t.satisfies(a, x, {1, 2}) && outer(x); }), where);
      }
      std::optional<ParamFamily> fam = one_inverse_family(ea, c);
      rec.set("{1}-inverse family", fam ? fam->members() : std::vector<Element>{}, rec.solve(inner), where);
    };
    const Set none = t.empty_set();
    for (const Set& rs : t.right_ideals()) {
      prescribed(at + " S=" + t.render(rs), true, false, false, false, rs, none);
      prescribed(at + " T=" + t.render(rs), false, true, false, false, rs, none);
      for (const Set& ls : t.left_ideals()) {
        prescribed(at + " S=" + t.render(rs) + " S'=" + t.render(ls), true, false, true, false, rs, ls);
        prescribed(at + " T=" + t.render(rs) + " T'=" + t.render(ls), false, true, false, true, rs, ls);
      }
    }
    for (const Set& ls : t.left_ideals()) {
      prescribed(at + " S'=" + t.render(ls), false, false, true, false, none, ls);
      prescribed(at + " T'=" + t.render(ls), false, false, false, true, none, ls);
    }
    // One-sided pairs of the same side.
    for (const Set& s1 : t.right_ideals())
      for (const Set& s2 : t.right_ideals()) {
        IdealConstraints c;
        c.right_prin = rec.ideal(s1, Side::right);
        c.right_ann = rec.ideal(s2, Side::right);
        const std::string w = at + " S=" + t.render(s1) + " T=" + t.render(s2);
        auto outer = [&](Index x) { return t.rprin(x) == s1 && t.rann(x) == s2; };
        rec.unique("outer with ideals", outer_with(ea, c, false),
                   rec.solve([&](Index x) { return t.satisfies(a, x, {2}) && outer(x); }), w);
        rec.unique("reflexive with ideals", outer_with(ea, c, true),
                   rec.solve([&](Index x) { return t.satisfies(a, x, {1, 2}) && outer(x); }), w);
        std::optional<ParamFamily> fam = one_inverse_family(ea, c);
        rec.set("{1}-inverse family", fam ? fam->members() : std::vector<Element>{}, rec.solve([&](Index x) {
          return t.satisfies(a, x, {1}) && t.rprin(t.mul(x, a)) == s1 && t.rann(t.mul(a, x)) == s2;
        }),
                w);
      }
    for (const Set& s1 : t.left_ideals())
      for (const Set& s2 : t.left_ideals()) {
        IdealConstraints c;
        c.left_prin = rec.ideal(s1, Side::left);
        c.left_ann = rec.ideal(s2, Side::left);
        const std::string w = at + " S'=" + t.render(s1) + " T'=" + t.render(s2);
        auto outer = [&](Index x) { return t.lprin(x) == s1 && t.lann(x) == s2; };
        rec.unique("outer with ideals", outer_with(ea, c, false),
                   rec.solve([&](Index x) { return t.satisfies(a, x, {2}) && outer(x); }), w);
        rec.unique("reflexive with ideals", outer_with(ea, c, true),
                   rec.solve([&](Index x) { return t.satisfies(a, x, {1, 2}) && outer(x); }), w);
        std::optional<ParamFamily> fam = one_inverse_family(ea, c);
        rec.set("{1}-inverse family", fam ? fam->members() : std::vector<Element>{}, rec.solve([&](Index x) {
          return t.satisfies(a, x, {1}) && t.lprin(t.mul(a, x)) == s1 && t.lann(t.mul(x, a)) == s2;
        }),
                w);
      }

    // (b,c) inverses in every flavor.
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        const std::string w = at + " " + name("b", b) + " " + name("c", c);
        auto outer = [&](Index x) { return t.satisfies(a, x, {2}); };
        rec.unique("(b,c) full", bc_inverse(ea, rec.el(b), rec.el(c), BcFlavor::full), rec.solve([&](Index x) {
          return outer(x) && t.rprin(x) == t.rprin(b) && t.lprin(x) == t.lprin(c);
        }),
                   w);
        rec.unique("(b,c) right hybrid", bc_inverse(ea, rec.el(b), rec.el(c), BcFlavor::right_hybrid),
                   rec.solve([&](Index x) { return outer(x) && t.rprin(x) == t.rprin(b) && t.rann(x) == t.rann(c); }),
                   w);
        rec.unique("(b,c) left hybrid", bc_inverse(ea, rec.el(b), rec.el(c), BcFlavor::left_hybrid),
                   rec.solve([&](Index x) { return outer(x) && t.lprin(x) == t.lprin(c) && t.lann(x) == t.lann(b); }),
                   w);
        rec.unique("(b,c) annihilator", bc_inverse(ea, rec.el(b), rec.el(c), BcFlavor::annihilator),
                   rec.solve([&](Index x) { return outer(x) && t.rann(x) == t.rann(c) && t.lann(x) == t.lann(b); }),
                   w);
      }

    // (p,q) inverses for idempotents.
    for (Index p : idempotents) {
      const Index bd_unit = t.add(t.sub(one, p), t.mul(a, p));
      std::vector<Index> bd;
      if (t.invertible(bd_unit)) bd.push_back(t.mul(p, *t.inverse(bd_unit)));
      const std::string wp = at + " " + name("p", p);
      rec.unique("(p,q) bott-duffin p(1-p+ap)^-1", pq_inverse(ea, rec.el(p), rec.el(p), PqFlavor::bott_duffin_p), bd,
                 wp);
      for (Index q : idempotents) {
        const std::string w = wp + " " + name("q", q);
        const Element ep = rec.el(p), eq = rec.el(q);
        rec.unique("(p,q) djordjevic-wei", pq_inverse(ea, ep, eq, PqFlavor::djordjevic_wei), rec.solve([&](Index x) {
          return t.satisfies(a, x, {2}) && t.mul(x, a) == p && t.mul(a, x) == t.sub(one, q);
        }),
                   w);
        rec.unique("(p,q) image-kernel", pq_inverse(ea, ep, eq, PqFlavor::image_kernel), rec.solve([&](Index x) {
          return t.satisfies(a, x, {2}) && t.rprin(x) == t.rprin(p) && t.rann(x) == t.rprin(q);
        }),
                   w);
        rec.unique("(p,q) bott-duffin", pq_inverse(ea, ep, eq, PqFlavor::bott_duffin_pq), rec.solve([&](Index x) {
          return x == t.mul(p, x) && x == t.mul(x, q) && t.mul3(x, a, p) == p && t.mul3(q, a, x) == q;
        }),
                   w);
      }
    }
  }
  return out;
}

}  // namespace geninv::testing
