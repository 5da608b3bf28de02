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

#include <algorithm>

#include "geninv/oracle.hpp"
#include "geninv/prescribed.hpp"
#include "support.hpp"

namespace geninv::testing {
namespace {

// The nilpotent matrix unit over F5 with the ideals complementing its
// principal ideals: S (first row zero) complements aR, S' (second column
// zero) complements Ra, T = S and T' = S'.
struct UnitExample {
  RingPtr r = m2f5();
  Element a = r->matrix_unit(0, 1);
  SidedIdeal s = span_ideal(r, Side::right, {{0, 1}});
  SidedIdeal s_left = span_ideal(r, Side::left, {{1, 0}});
  Element e21 = r->matrix_unit(1, 0);

  IdealConstraints bundle(bool rp, bool ra, bool lp, bool la) const {
    IdealConstraints c;
    if (rp) c.right_prin = s;
    if (ra) c.right_ann = s;
    if (lp) c.left_prin = s_left;
    if (la) c.left_ann = s_left;
    return c;
  }

  // {E21 + i*u + j*v : i, j in F5}, sorted.
  std::vector<Element> span(const std::vector<Element>& dirs) const {
    std::vector<Element> out;
    std::vector<Element> scalars;
    for (int i = 0; i < 5; ++i) scalars.push_back(r->matrix({{i, 0}, {0, i}}));
    if (dirs.size() == 1) {
      for (const Element& s1 : scalars) out.push_back(e21 + s1 * dirs[0]);
    } else {
      for (const Element& s1 : scalars)
        for (const Element& s2 : scalars) out.push_back(e21 + s1 * dirs[0] + s2 * dirs[1]);
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
  }
};

TEST(Example, IdealsOfTheMatrixUnit) {
  UnitExample ex;
  EXPECT_EQ(SidedIdeal::principal(ex.a, Side::right), SidedIdeal::annihilator(ex.a, Side::right));
  EXPECT_EQ(SidedIdeal::principal(ex.a, Side::left), SidedIdeal::annihilator(ex.a, Side::left));
  std::optional<DirectSum> right = direct_sum(SidedIdeal::principal(ex.a, Side::right), ex.s);
  std::optional<DirectSum> left = direct_sum(SidedIdeal::principal(ex.a, Side::left), ex.s_left);
  ASSERT_TRUE(right);
  ASSERT_TRUE(left);
  EXPECT_EQ(right->unit_first(), ex.r->matrix_unit(0, 0));
  EXPECT_EQ(*projector_unit(ex.s_left, SidedIdeal::annihilator(ex.a, Side::left)), ex.r->matrix_unit(0, 0));
  EXPECT_EQ(*projector_unit(ex.s, SidedIdeal::annihilator(ex.a, Side::right)), ex.r->matrix_unit(1, 1));
  EXPECT_EQ(*projector_unit(SidedIdeal::principal(ex.a, Side::left), ex.s_left), ex.r->matrix_unit(1, 1));
}

TEST(OneInverseFamily, TwoConstraintsGiveOneLine) {
  UnitExample ex;
  std::vector<Element> expected = ex.span({ex.a});
  for (IdealConstraints c : {ex.bundle(1, 1, 0, 0), ex.bundle(0, 0, 1, 1), ex.bundle(0, 1, 0, 1),
                             ex.bundle(1, 0, 1, 0)}) {
    std::optional<ParamFamily> fam = one_inverse_family(ex.a, c);
    ASSERT_TRUE(fam) << shape_name(constraint_shape(c));
    EXPECT_EQ(fam->members(), expected) << shape_name(fam->shape);
  }
}

TEST(OneInverseFamily, OneConstraintGivesAPlane) {
  UnitExample ex;
  std::vector<Element> plane_a = ex.span({ex.r->matrix_unit(1, 1), ex.a});
  for (IdealConstraints c : {ex.bundle(1, 0, 0, 0), ex.bundle(0, 0, 0, 1)}) {
    std::optional<ParamFamily> fam = one_inverse_family(ex.a, c);
    ASSERT_TRUE(fam);
    EXPECT_EQ(fam->members(), plane_a) << shape_name(fam->shape);
  }
  std::vector<Element> plane_b = ex.span({ex.a, ex.r->matrix_unit(0, 0)});
  for (IdealConstraints c : {ex.bundle(0, 1, 0, 0), ex.bundle(0, 0, 1, 0)}) {
    std::optional<ParamFamily> fam = one_inverse_family(ex.a, c);
    ASSERT_TRUE(fam);
    EXPECT_EQ(fam->members(), plane_b) << shape_name(fam->shape);
  }
}

TEST(OneInverseFamily, MembersMeetTheConstraints) {
  UnitExample ex;
  std::optional<ParamFamily> fam = one_inverse_family(ex.a, ex.bundle(1, 1, 0, 0));
  ASSERT_TRUE(fam);
  for (const Element& y : ex.r->elements()) {
    Element x = fam->instantiate(y);
    EXPECT_TRUE(one_inverse_matches(ex.a, x, fam->constraints));
    EXPECT_TRUE(fam->contains(x));
  }
}

TEST(OneInverseFamily, InvertibleCollapsesToInverse) {
  RingPtr r = m2q();
  Element a = r->matrix({{2, 1}, {1, 1}});
  IdealConstraints c;
  c.right_prin = SidedIdeal::whole(r, Side::right);
  c.right_ann = SidedIdeal::zero(r, Side::right);
  std::optional<ParamFamily> fam = one_inverse_family(a, c);
  ASSERT_TRUE(fam);
  Element inv = *two_sided_inverse(a);
  EXPECT_EQ(fam->base, inv);
  EXPECT_EQ(fam->instantiate(r->matrix({{5, 7}, {-3, 2}})), inv);
}

TEST(OneInverseFamily, FailsWithoutDirectSum) {
  UnitExample ex;
  IdealConstraints c;
  c.right_prin = SidedIdeal::principal(ex.a, Side::right);  // meets rann(a)
  std::string why;
  EXPECT_FALSE(one_inverse_family(ex.a, c, &why));
  EXPECT_FALSE(why.empty());
}

TEST(OneInverseFamily, RejectsMalformedBundles) {
  UnitExample ex;
  EXPECT_THROW(one_inverse_family(ex.a, IdealConstraints{}), StructuralError);
  IdealConstraints wrong_side;
  wrong_side.right_prin = ex.s_left;
  EXPECT_THROW(one_inverse_family(ex.a, wrong_side), StructuralError);
  EXPECT_THROW(one_inverse_family(ex.a, ex.bundle(1, 1, 1, 0)), StructuralError);
}

TEST(SolutionSet, ExampleMatchesBruteForce) {
  UnitExample ex;
  SolutionSet set = one_inverse_solution_set(ex.a, ex.bundle(1, 1, 0, 0), ex.e21);
  EXPECT_EQ(set.members.size(), 5u);
  EXPECT_TRUE(set.equal);
  std::vector<Element> truth = oracle::brute_force_set(
      ex.a, [&](const Element& x) { return one_inverse_matches(ex.a, x, ex.bundle(1, 1, 0, 0)); });
  EXPECT_EQ(set.members, truth);
}

TEST(SolutionSet, ModularExample) {
  RingPtr r = z(6);
  IdealConstraints c;
  c.right_prin = SidedIdeal::principal(r->residue(2), Side::right);
  c.right_ann = SidedIdeal::annihilator(r->residue(2), Side::right);
  SolutionSet set = one_inverse_solution_set(r->residue(2), c, r->residue(2));
  // 2 + (1 - 4) y (1 - 4) = 2 + 3y; 5 also meets both ideals.
  EXPECT_EQ(strs(set.members), (std::vector<std::string>{"2", "5"}));
  EXPECT_TRUE(set.equal);
  EXPECT_EQ(set.members, oracle::brute_force_set(r->residue(2), [&](const Element& x) {
              return one_inverse_matches(r->residue(2), x, c);
            }));
}

TEST(SolutionSet, InvertibleGivesInverse) {
  RingPtr r = z(7);
  IdealConstraints c;
  c.right_prin = SidedIdeal::whole(r, Side::right);
  c.right_ann = SidedIdeal::zero(r, Side::right);
  SolutionSet set = one_inverse_solution_set(r->residue(3), c, r->residue(5));
  EXPECT_EQ(strs(set.members), (std::vector<std::string>{"5"}));
}

TEST(SolutionSet, RejectsAnInadmissibleInnerInverse) {
  UnitExample ex;
  EXPECT_THROW(one_inverse_solution_set(ex.a, ex.bundle(1, 1, 0, 0), ex.r->zero()), PreconditionError);
  // An inner inverse outside the prescribed family.
  EXPECT_THROW(one_inverse_solution_set(ex.a, ex.bundle(1, 1, 0, 0), ex.e21 + ex.r->matrix_unit(0, 0)),
               PreconditionError);
}

// With a single constraint one inner inverse need not generate every
// constrained inner inverse: E11 over F2 with xaR = E11 R.
TEST(SolutionSet, SingleConstraintOnlyContained) {
  RingPtr r = m2f2();
  Element a = r->matrix_unit(0, 0);
  IdealConstraints c;
  c.right_prin = SidedIdeal::principal(a, Side::right);
  bool strict = false;
  for (const Element& z : enumerate_inverse_set(a, {1})) {
    if (!one_inverse_matches(a, z, c)) continue;
    SolutionSet set = one_inverse_solution_set(a, c, z);
    EXPECT_TRUE(std::includes(set.constrained.begin(), set.constrained.end(), set.members.begin(),
                              set.members.end(), canonical_less));
    strict = strict || !set.equal;
  }
  EXPECT_TRUE(strict);
}

TEST(OuterWith, ExampleAllShapes) {
  UnitExample ex;
  for (IdealConstraints c : {ex.bundle(1, 1, 0, 0), ex.bundle(0, 0, 1, 1), ex.bundle(1, 0, 1, 0),
                             ex.bundle(0, 1, 0, 1)}) {
    for (bool reflexive : {false, true}) {
      InverseReport rep = outer_with(ex.a, c, reflexive);
      ASSERT_TRUE(rep.found()) << rep.inverse << ": " << rep.reason;
      EXPECT_EQ(*rep.value, ex.e21) << rep.inverse;
      for (const auto& [label, holds] : rep.checks) EXPECT_TRUE(holds) << label;
    }
  }
}

TEST(OuterWith, InvertibleGivesInverse) {
  RingPtr r = m2q();
  Element a = r->matrix({{2, 1}, {1, 1}});
  IdealConstraints c;
  c.right_prin = SidedIdeal::whole(r, Side::right);
  c.right_ann = SidedIdeal::zero(r, Side::right);
  for (bool reflexive : {false, true}) EXPECT_EQ(*outer_with(a, c, reflexive).value, *two_sided_inverse(a));
}

TEST(OuterWith, NamesTheFailedCondition) {
  UnitExample ex;
  IdealConstraints c;
  c.right_prin = SidedIdeal::principal(ex.a, Side::right);
  c.right_ann = ex.s;
  InverseReport rep = outer_with(ex.a, c, false);
  EXPECT_FALSE(rep.found());
  EXPECT_FALSE(rep.reason.empty());
  EXPECT_THROW(outer_with(ex.a, ex.bundle(1, 0, 0, 0), false), StructuralError);
}

// The reflexive inverses of the example with one prescribed ideal.
TEST(OuterWith, ReflexiveFamiliesByBruteForce) {
  UnitExample ex;
  auto family = [&](auto&& pred) {
    return oracle::brute_force_set(ex.a, [&](const Element& x) { return satisfies(ex.a, x, {1, 2}) && pred(x); });
  };
  std::vector<Element> line_22 = ex.span({ex.r->matrix_unit(1, 1)});
  EXPECT_EQ(family([&](const Element& x) { return SidedIdeal::principal(x * ex.a, Side::right) == ex.s; }), line_22);
  EXPECT_EQ(family([&](const Element& x) { return SidedIdeal::annihilator(x * ex.a, Side::left) == ex.s_left; }),
            line_22);
  std::vector<Element> line_11 = ex.span({ex.r->matrix_unit(0, 0)});
  EXPECT_EQ(family([&](const Element& x) { return SidedIdeal::annihilator(ex.a * x, Side::right) == ex.s; }),
            line_11);
  EXPECT_EQ(family([&](const Element& x) { return SidedIdeal::principal(ex.a * x, Side::left) == ex.s_left; }),
            line_11);
}

TEST(ReflexiveCharacterize, Example) {
  UnitExample ex;
  Characterization yes = reflexive_characterize(ex.a, ex.e21, ex.bundle(1, 1, 0, 0));
  EXPECT_TRUE(yes.by_equations);
  EXPECT_TRUE(yes.consistent());
  for (const auto& [label, holds] : yes.clauses) EXPECT_TRUE(holds) << label;

  Characterization no = reflexive_characterize(ex.a, ex.e21 + ex.a, ex.bundle(1, 1, 0, 0));
  EXPECT_FALSE(no.by_equations);
  EXPECT_TRUE(no.consistent());
  for (const auto& [label, holds] : no.clauses) EXPECT_FALSE(holds) << label;
}

TEST(ReflexiveCharacterize, Identity) {
  RingPtr r = m2f2();
  IdealConstraints c;
  c.right_prin = SidedIdeal::whole(r, Side::right);
  c.right_ann = SidedIdeal::zero(r, Side::right);
  Characterization ch = reflexive_characterize(r->one(), r->one(), c);
  EXPECT_TRUE(ch.by_equations);
  for (const auto& [label, holds] : ch.clauses) EXPECT_TRUE(holds) << label;
}

// Every clause agrees with the definition over all of Z6 and a sample of
// M2(F2) bundles built from principal ideals.
TEST(ReflexiveCharacterize, ConsistentExhaustive) {
  for (RingPtr r : {z(6), m2f2()}) {
    std::vector<Element> xs = r->elements();
    for (const Element& a : xs)
      for (const Element& b : xs) {
        IdealConstraints c;
        c.right_prin = SidedIdeal::principal(b, Side::right);
        c.right_ann = SidedIdeal::annihilator(b, Side::right);
        for (const Element& x : xs) EXPECT_TRUE(reflexive_characterize(a, x, c).consistent());
      }
  }
}

TEST(Mitsch, TrivialPairs) {
  RingPtr r = m2f2();
  for (const Element& z : r->elements()) {
    EXPECT_TRUE(mitsch_leq(z, z));
    EXPECT_TRUE(mitsch_leq(r->zero(), z));
  }
  RingPtr q = m2q();
  EXPECT_TRUE(mitsch_leq(q->zero(), a3(q)));
  EXPECT_TRUE(mitsch_leq(a3(q), a3(q)));
}

// Golden value: no v sends E21 + E22 to E21 on the left while fixing E21.
TEST(Mitsch, MatrixUnitPair) {
  RingPtr r = m2f2();
  Element y = r->matrix_unit(1, 0);
  Element z = y + r->matrix_unit(1, 1);
  EXPECT_FALSE(mitsch_leq(y, z));
  EXPECT_TRUE(mitsch_leq(r->matrix_unit(0, 0), r->one()));
}

TEST(Mitsch, AgreesWithExhaustiveSearch) {
  RingPtr r = m2f2();
  std::vector<Element> xs = r->elements();
  for (const Element& y : xs)
    for (const Element& z : xs) {
      bool left = false;
      bool right = false;
      for (const Element& v : xs) left = left || (v * z == y && v * y == y);
      for (const Element& w : xs) right = right || (z * w == y && y * w == y);
      EXPECT_EQ(mitsch_leq(y, z), left && right) << y.str() << " " << z.str();
    }
}

TEST(Mitsch, ExtremesOfTheExample) {
  UnitExample ex;
  MitschReport rep = mitsch_extremes(ex.a, ex.bundle(1, 0, 1, 0));
  EXPECT_TRUE(rep.consistent());
  EXPECT_EQ(rep.both, std::vector<Element>{ex.e21});
  EXPECT_EQ(rep.outer, ex.e21);
  EXPECT_TRUE(rep.outer_is_max_lower);
  EXPECT_TRUE(rep.outer_is_min_upper);
}

TEST(Mitsch, ModularExtremes) {
  RingPtr r = z(6);
  IdealConstraints c;
  c.right_prin = SidedIdeal::principal(r->residue(2), Side::right);
  c.left_prin = SidedIdeal::principal(r->residue(2), Side::left);
  MitschReport rep = mitsch_extremes(r->residue(2), c);
  EXPECT_TRUE(rep.consistent());
  EXPECT_EQ(strs(rep.both), (std::vector<std::string>{"2"}));
  EXPECT_TRUE(rep.all_pairs_related);
}

}  // namespace
}  // namespace geninv::testing
