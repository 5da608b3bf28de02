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


#include <gtest/gtest.h>

#include "geninv/special.hpp"
#include "support.hpp"

namespace geninv::testing {
namespace {

SidedIdeal rprin(const Element& a) { return SidedIdeal::principal(a, Side::right); }
SidedIdeal lprin(const Element& a) { return SidedIdeal::principal(a, Side::left); }
SidedIdeal rann(const Element& a) { return SidedIdeal::annihilator(a, Side::right); }
SidedIdeal lann(const Element& a) { return SidedIdeal::annihilator(a, Side::left); }

TEST(StarClass, ExampleGridOverQ) {
  RingPtr q = m2q();
  Element a = a3(q);
  EXPECT_TRUE(star_class_member(a, el(q, R"([["1/4","3"],["-1/4","3"]])"), StarClass::c134).by_equations);
  EXPECT_FALSE(star_class_member(a, el(q, R"([["1/4","3"],["-1/4","2"]])"), StarClass::c134).by_equations);
  for (StarClass cls : all_star_classes()) {
    StarMembership m = star_class_member(a, *moore_penrose(a).value, cls);
    EXPECT_TRUE(m.consistent()) << star_class_tag(cls);
  }
}

// Golden: E12 over F2 has a{1,3} = {x : x21 = 1, x22 = 0}.
TEST(StarClass, MatrixUnitOverF2) {
  RingPtr r = m2f2();
  StarClassSet set = star_class_set(r->matrix_unit(0, 1), StarClass::c13);
  EXPECT_EQ(strs(set.members), (std::vector<std::string>{"[[0,0],[1,0]]", "[[0,1],[1,0]]", "[[1,0],[1,0]]",
                                                         "[[1,1],[1,0]]"}));
  EXPECT_TRUE(set.identities_hold);
}

TEST(StarClass, IdentityClassesAreSingletons) {
  for (RingPtr r : {m2f2(), m2f5()})
    for (StarClass cls : all_star_classes()) {
      StarClassSet set = star_class_set(r->one(), cls);
      EXPECT_EQ(set.members, std::vector<Element>{r->one()}) << star_class_tag(cls);
    }
}

TEST(StarClass, SetIdentitiesExhaustiveOverF2) {
  RingPtr r = m2f2();
  for (const Element& a : r->elements())
    for (StarClass cls : all_star_classes()) {
      StarClassSet set = star_class_set(a, cls);
      EXPECT_TRUE(set.identities_hold) << a.str() << " " << star_class_tag(cls);
      // Over a field the contained forms are in fact equal.
      if (star_class_sufficient_only(cls)) {
        EXPECT_TRUE(set.equality_observed) << a.str() << " " << star_class_tag(cls);
      }
      for (const Element& x : r->elements()) EXPECT_TRUE(star_class_member(a, x, cls).consistent());
    }
}

TEST(StarClass, ParseTags) {
  EXPECT_EQ(parse_star_class("136"), StarClass::c136);
  EXPECT_EQ(parse_star_class("1,4,9"), StarClass::c149);
  EXPECT_THROW(parse_star_class("12"), StructuralError);
}

TEST(WeightedMp, UnitWeightsGiveMoorePenrose) {
  RingPtr q = m2q();
  InverseReport rep = weighted_mp(a3(q), q->one(), q->one());
  ASSERT_TRUE(rep.found());
  EXPECT_EQ(rep.value->str(), "[[1/4,0],[-1/4,0]]");
}

TEST(WeightedMp, DiagonalWeights) {
  RingPtr q = m2q();
  Element a = a3(q);
  Element e = q->matrix({{2, 0}, {0, 1}});
  InverseReport rep = weighted_mp(a, e, e);
  ASSERT_TRUE(rep.found());
  const Element& x = *rep.value;
  EXPECT_TRUE(satisfies(a, x, {1, 2}));
  EXPECT_EQ((e * a * x).star(), e * a * x);
  EXPECT_EQ((e * x * a).star(), e * x * a);
  // Solved by hand: x = [[1/6, 0], [-1/3, 0]].
  EXPECT_EQ(x.str(), "[[1/6,0],[-1/3,0]]");
  for (const auto& [label, holds] : rep.checks) EXPECT_TRUE(holds) << label;
  EXPECT_TRUE(weighted_mp_grid(a, x, e, e).consistent());
}

TEST(WeightedMp, InvertibleGivesInverse) {
  RingPtr q = m2q();
  Element a = q->matrix({{2, 1}, {1, 1}});
  Element e = q->matrix({{2, 1}, {1, 3}});
  EXPECT_EQ(*weighted_mp(a, e, q->one()).value, *two_sided_inverse(a));
}

TEST(WeightedMp, RejectsInvalidWeights) {
  RingPtr q = m2q();
  EXPECT_THROW(weighted_mp(a3(q), q->matrix({{1, 1}, {0, 1}}), q->one()), PreconditionError);
  EXPECT_THROW(weighted_mp(a3(q), q->one(), q->matrix_unit(0, 0)), PreconditionError);
}

TEST(WeightedCore, UnitWeights) {
  RingPtr q = m2q();
  Element a = a3(q);
  EXPECT_EQ(e_core(a, q->one()).value->str(), "[[1/2,0],[0,0]]");
  EXPECT_EQ(f_dual_core(a, q->one()).value->str(), "[[1/4,-1/4],[-1/4,1/4]]");
  EXPECT_EQ(w_core(a, q->one()).value->str(), "[[1/2,0],[0,0]]");
  EXPECT_EQ(v_dual_core(a, q->one()).value->str(), "[[1/4,-1/4],[-1/4,1/4]]");
}

TEST(WeightedCore, ZeroElement) {
  RingPtr q = m2q();
  Element e = q->matrix({{2, 1}, {1, 3}});
  EXPECT_TRUE(e_core(q->zero(), e).value->is_zero());
  EXPECT_TRUE(f_dual_core(q->zero(), e).value->is_zero());
  EXPECT_TRUE(w_core(q->zero(), e).value->is_zero());
}

TEST(WeightedCore, WeightedCoreMatchesDefinitionOverQ) {
  RingPtr q = m2q();
  Element a = el(q, R"([["1","2"],["3","4"]])");
  Element e = q->matrix({{2, 1}, {1, 3}});
  InverseReport rep = e_core(a, e);
  ASSERT_TRUE(rep.found());
  EXPECT_TRUE(is_e_core(a, *rep.value, e));
  EXPECT_TRUE(e_core_grid(a, *rep.value, e).consistent());
  InverseReport dual = f_dual_core(a, e);
  ASSERT_TRUE(dual.found());
  EXPECT_TRUE(is_f_dual_core(a, *dual.value, e));
}

// Golden, by brute force over the 16 candidates: aw = E11 and the w-core
// inverse of E12 with w = E21 is E11.
TEST(WCore, MatrixUnitOverF2) {
  RingPtr r = m2f2();
  Element a = r->matrix_unit(0, 1);
  Element w = r->matrix_unit(1, 0);
  EXPECT_EQ(a * w, r->matrix_unit(0, 0));
  InverseReport rep = w_core(a, w);
  ASSERT_TRUE(rep.found());
  EXPECT_EQ(*rep.value, r->matrix_unit(0, 0));
  std::vector<Element> truth;
  for (const Element& x : r->elements())
    if (is_w_core(a, x, w)) truth.push_back(x);
  EXPECT_EQ(truth, std::vector<Element>{r->matrix_unit(0, 0)});
}

// The grid with the projector of xa in place of xb loses the equivalence at
// a = E12, w = E21 over F2; the xb form keeps it.
TEST(WCore, GridNeedsTheWeightedProduct) {
  RingPtr r = m2f2();
  Element a = r->matrix_unit(0, 1);
  Element w = r->matrix_unit(1, 0);
  Element b = a * w;
  bool broken = false;
  for (const Element& x : r->elements()) {
    ConditionGrid fixed = w_core_grid(a, x, w);
    EXPECT_TRUE(fixed.consistent()) << x.str();
    ConditionGrid literal = fixed;
    Element bx = b * x, xa = x * a;
    bool r_bx = map_equals_projector(bx, rprin(b), rann(b.star()));
    bool l_bx = map_equals_projector(bx, lprin(b.star()), lann(b));
    bool r_xa = map_equals_projector(xa, rprin(b), rann(b));
    bool l_xa = map_equals_projector(xa, lprin(b), lann(b));
    literal.groups[0] = {{"right, right", r_bx && r_xa},
                         {"left, left", l_bx && l_xa},
                         {"right, left", r_bx && l_xa},
                         {"left, right", l_bx && r_xa}};
    broken = broken || !literal.consistent();
  }
  EXPECT_TRUE(broken);
}

TEST(WCore, DualAndOneSidedFamilies) {
  RingPtr r = m2f2();
  for (const Element& a : r->elements())
    for (const Element& w : r->elements()) {
      InverseReport rw = right_w_core(a, w);
      std::vector<Element> truth;
      for (const Element& x : r->elements())
        if (is_right_w_core(a, x, w)) truth.push_back(x);
      EXPECT_EQ(rw.members, truth) << a.str() << " " << w.str();
      InverseReport wc = w_core(a, w);
      std::optional<Element> unique;
      for (const Element& x : r->elements())
        if (is_w_core(a, x, w)) unique = x;
      EXPECT_EQ(wc.found(), unique.has_value());
      if (wc.found()) {
        EXPECT_EQ(*wc.value, *unique);
      }
      InverseReport vd = v_dual_core(a, w);
      std::optional<Element> dual;
      for (const Element& x : r->elements())
        if (is_v_dual_core(a, x, w)) dual = x;
      EXPECT_EQ(vd.found(), dual.has_value());
      InverseReport lv = left_v_dual_core(a, w);
      std::vector<Element> left;
      for (const Element& x : r->elements())
        if (is_left_v_dual_core(a, x, w)) left.push_back(x);
      EXPECT_EQ(lv.members, left);
    }
}

TEST(BcInverse, AlongItselfIsGroupInverse) {
  RingPtr q = m2q();
  Element a = a3(q);
  InverseReport rep = bc_inverse(a, a, a, BcFlavor::full);
  ASSERT_TRUE(rep.found());
  EXPECT_EQ(rep.value->str(), "[[1/2,-1/2],[0,0]]");
  EXPECT_EQ(*rep.value, a * *inner_inverse(a * a * a) * a);
  for (const auto& [label, holds] : rep.checks) EXPECT_TRUE(holds) << label;
}

TEST(BcInverse, MatrixUnitsOverF5) {
  RingPtr r = m2f5();
  Element a = r->matrix_unit(0, 1);
  Element b = r->matrix_unit(1, 0);
  EXPECT_EQ(b * a * b, b);
  for (BcFlavor flavor : {BcFlavor::full, BcFlavor::right_hybrid, BcFlavor::left_hybrid, BcFlavor::annihilator}) {
    InverseReport rep = bc_inverse(a, b, b, flavor);
    ASSERT_TRUE(rep.found()) << bc_flavor_name(flavor) << ": " << rep.reason;
    EXPECT_EQ(*rep.value, b) << bc_flavor_name(flavor);
  }
}

TEST(BcInverse, InvertibleWithUnitBc) {
  RingPtr q = m2q();
  Element a = q->matrix({{2, 1}, {1, 1}});
  EXPECT_EQ(*bc_inverse(a, q->one(), q->one(), BcFlavor::full).value, *two_sided_inverse(a));
  BcInvertibility inv = bc_invertibility(a, q->one(), q->one());
  EXPECT_TRUE(inv.right_first);
  EXPECT_TRUE(inv.cab_invertible);
  EXPECT_EQ(inv.right_conclusion, true);
}

TEST(BcInverse, EqualityItemsAgreeOnZ6) {
  RingPtr r = z(6);
  for (const Element& a : r->elements())
    for (const Element& b : r->elements())
      for (const Element& c : r->elements())
        for (const Element& x : r->elements()) EXPECT_TRUE(bc_equality(a, b, c, x).consistent());
}

TEST(BcInverse, FlavorNames) {
  EXPECT_EQ(parse_bc_flavor("right-hybrid"), BcFlavor::right_hybrid);
  EXPECT_STREQ(bc_flavor_name(BcFlavor::annihilator), "annihilator");
  EXPECT_THROW(parse_bc_flavor("sideways"), StructuralError);
}

TEST(PqInverse, MoorePenroseAsPq) {
  RingPtr q = m2q();
  Element a = a3(q);
  Element mp = *moore_penrose(a).value;
  Element p = mp * a;
  Element qq = q->one() - a * mp;
  EXPECT_EQ(p.str(), "[[1/2,-1/2],[-1/2,1/2]]");
  EXPECT_EQ(qq.str(), "[[0,0],[0,1]]");
  InverseReport rep = pq_inverse(a, p, qq, PqFlavor::djordjevic_wei);
  ASSERT_TRUE(rep.found());
  EXPECT_EQ(*rep.value, mp);
  EXPECT_TRUE(satisfies(a, *rep.value, {1, 2}));
  for (const auto& [label, holds] : rep.checks) EXPECT_TRUE(holds) << label;
}

TEST(PqInverse, GroupAsPq) {
  RingPtr q = m2q();
  Element a = a3(q);
  Element g = *group_inverse(a).value;
  Element p = a * g;
  InverseReport rep = pq_inverse(a, p, q->one() - p, PqFlavor::djordjevic_wei);
  ASSERT_TRUE(rep.found());
  EXPECT_EQ(*rep.value, *drazin_inverse(a).value);
  EXPECT_EQ(*rep.value, g);
}

TEST(PqInverse, InvertibleAllFlavors) {
  RingPtr q = m2q();
  Element a = q->matrix({{2, 1}, {1, 1}});
  Element inv = *two_sided_inverse(a);
  for (PqFlavor f : {PqFlavor::djordjevic_wei, PqFlavor::bott_duffin_p}) {
    InverseReport rep = pq_inverse(a, q->one(), q->zero(), f);
    ASSERT_TRUE(rep.found()) << pq_flavor_name(f);
    EXPECT_EQ(*rep.value, inv);
  }
  InverseReport ik = pq_inverse(a, q->one(), q->zero(), PqFlavor::image_kernel);
  ASSERT_TRUE(ik.found());
  EXPECT_EQ(*ik.value, inv);
  InverseReport bd = pq_inverse(a, q->one(), q->one(), PqFlavor::bott_duffin_pq);
  ASSERT_TRUE(bd.found());
  EXPECT_EQ(*bd.value, inv);
}

TEST(PqInverse, RejectsNonIdempotents) {
  RingPtr q = m2q();
  EXPECT_THROW(pq_inverse(a3(q), a3(q), q->zero(), PqFlavor::djordjevic_wei), PreconditionError);
  EXPECT_THROW(pq_inverse(a3(q), q->one(), a3(q), PqFlavor::image_kernel), PreconditionError);
}

TEST(PqInverse, BottDuffinFormula) {
  RingPtr r = m2f2();
  for (const Element& a : r->elements())
    for (const Element& p : r->elements()) {
      if (!is_idempotent(p)) continue;
      InverseReport rep = pq_inverse(a, p, p, PqFlavor::bott_duffin_p);
      std::optional<Element> u = two_sided_inverse(r->one() - p + a * p);
      EXPECT_EQ(rep.found(), u.has_value());
      if (u) {
        EXPECT_EQ(*rep.value, p * *u);
        EXPECT_TRUE(is_bott_duffin(a, *rep.value, p, p));
      }
    }
}

TEST(PqInverse, EquivalentDescriptionsExhaustive) {
  RingPtr r = m2f2();
  std::vector<Element> idem;
  for (const Element& e : r->elements())
    if (is_idempotent(e)) idem.push_back(e);
  for (const Element& a : r->elements())
    for (const Element& p : idem)
      for (const Element& q : idem) {
        InverseReport rep = pq_inverse(a, p, q, PqFlavor::djordjevic_wei);
        if (rep.found()) {
          EXPECT_TRUE(pq_final_claim(a, p, q));
        }
        for (const Element& x : r->elements()) EXPECT_TRUE(pq_equality(a, x, p, q).consistent());
      }
}

TEST(ConditionGridEvaluator, ReportsFirstMismatch) {
  ConditionGrid g;
  g.target = true;
  g.groups = {{{"a", true}, {"b", false}}, {{"c", true}, {"d", true}}};
  ASSERT_EQ(g.combinations(), 4u);
  std::optional<std::vector<std::size_t>> bad = g.first_mismatch();
  ASSERT_TRUE(bad);
  EXPECT_EQ(*bad, (std::vector<std::size_t>{1, 0}));
  g.groups[0][1].holds = true;
  EXPECT_TRUE(g.consistent());
}

}  // namespace
}  // namespace geninv::testing
