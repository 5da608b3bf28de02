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

#include "geninv/inverses.hpp"
#include "support.hpp"

namespace geninv::testing {
namespace {

TEST(EquationSet, ParseAndRender) {
  EquationSet e = EquationSet::parse("2, 5,1^2");
  EXPECT_TRUE(e.has(2));
  EXPECT_TRUE(e.has(5));
  EXPECT_EQ(e.power_left(), 2u);
  EXPECT_EQ(EquationSet::parse(e.str()), e);
  EXPECT_TRUE(EquationSet::parse("1,3").needs_involution());
  EXPECT_THROW(EquationSet::parse("10"), StructuralError);
  EXPECT_THROW(EquationSet::parse("1,,2"), StructuralError);
}

TEST(Satisfies, MoorePenroseExampleOverQ) {
  RingPtr q = m2q();
  EXPECT_TRUE(satisfies(a3(q), el(q, R"([["1/4","0"],["-1/4","0"]])"), {1, 2, 3, 4}));
}

TEST(Satisfies, ModularExample) {
  RingPtr r = z(6);
  EXPECT_TRUE(satisfies(r->residue(2), r->residue(5), {1}));
  EXPECT_FALSE(satisfies(r->residue(2), r->residue(5), {1, 2}));
}

TEST(Satisfies, ZeroIsAlwaysOuter) {
  for (RingPtr r : {z(6), m2f2(), m2q()}) {
    Element a = r->is_matrix() ? r->matrix({{1, 1}, {0, 1}}) : r->residue(4);
    EXPECT_TRUE(satisfies(a, r->zero(), {2}));
  }
}

TEST(Satisfies, InvolutionEquationsNeedInvolution) {
  RingPtr r = z(6);
  EXPECT_THROW(satisfies(r->residue(2), r->residue(2), {1, 3}), UnsupportedInvolution);
}

TEST(Enumerate, NilpotentMatrixUnitOverF5) {
  RingPtr r = m2f5();
  Element a = r->matrix_unit(0, 1);
  std::vector<Element> inner = enumerate_inverse_set(a, {1});
  ASSERT_EQ(inner.size(), 125u);
  for (const Element& x : inner) EXPECT_EQ(x.matrix()(1, 0), 1);
  std::vector<Element> reflexive = enumerate_inverse_set(a, {1, 2});
  ASSERT_EQ(reflexive.size(), 25u);
  const ScalarField& f = r->scalars();
  for (const Element& x : reflexive) {
    const Matrix& m = x.matrix();
    EXPECT_EQ(m(1, 0), 1);
    EXPECT_EQ(m(0, 1), f.mul(m(0, 0), m(1, 1)));
  }
  EXPECT_EQ(count_inverse_set(a, {1, 2}), 25u);
}

TEST(Enumerate, ModularInner) {
  RingPtr r = z(6);
  EXPECT_EQ(strs(enumerate_inverse_set(r->residue(2), {1})), (std::vector<std::string>{"2", "5"}));
  EXPECT_TRUE(enumerate_inverse_set(r->residue(2), {1, 5, 2, 9}).size() <= 1);
  EXPECT_THROW(enumerate_inverse_set(a3(m2q()), {1}), NotEnumerable);
}

TEST(InnerInverse, ContractOverQ) {
  RingPtr q = m2q();
  for (const Element& a : {a3(q), q->one(), q->zero(), el(q, R"([["1","2"],["2","4"]])")}) {
    std::optional<Element> x = inner_inverse(a);
    ASSERT_TRUE(x);
    EXPECT_EQ(a * *x * a, a);
  }
  EXPECT_EQ(*inner_inverse(q->one()), q->one());
}

TEST(InnerInverse, ExistsForEveryMatrixOverF2) {
  RingPtr r = m2f2();
  for (const Element& a : r->elements()) {
    std::optional<Element> x = inner_inverse(a);
    ASSERT_TRUE(x) << a.str();
    EXPECT_TRUE(satisfies(a, *x, {1}));
  }
}

TEST(GroupInverse, ExampleOverQ) {
  RingPtr q = m2q();
  InverseReport g = group_inverse(a3(q));
  ASSERT_TRUE(g.found());
  EXPECT_EQ(g.value->str(), "[[1/2,-1/2],[0,0]]");
  EXPECT_EQ(g.index, 1u);
}

TEST(GroupInverse, NilpotentHasNone) {
  InverseReport g = group_inverse(m2q()->matrix_unit(0, 1));
  EXPECT_FALSE(g.found());
  EXPECT_EQ(g.reason, "index 2 > 1");
}

TEST(DrazinInverse, NilpotentIsZero) {
  InverseReport d = drazin_inverse(m2q()->matrix_unit(0, 1));
  ASSERT_TRUE(d.found());
  EXPECT_TRUE(d.value->is_zero());
  EXPECT_EQ(d.index, 2u);
}

TEST(DrazinInverse, ModularExample) {
  RingPtr r = z(6);
  InverseReport g = group_inverse(r->residue(3));
  ASSERT_TRUE(g.found());
  EXPECT_EQ(g.value->str(), "3");
  // 2 in Z8 is nilpotent of index 3.
  InverseReport d = drazin_inverse(z(8)->residue(2));
  ASSERT_TRUE(d.found());
  EXPECT_TRUE(d.value->is_zero());
  EXPECT_EQ(d.index, 3u);
}

TEST(DrazinInverse, Index3OverQ) {
  RingPtr q = mat(3, 0);
  Element n = q->matrix({{0, 1, 0}, {0, 0, 1}, {0, 0, 0}});
  InverseReport d = drazin_inverse(n);
  ASSERT_TRUE(d.found());
  EXPECT_EQ(d.index, 3u);
  Element a = q->matrix({{2, 0, 0}, {0, 0, 1}, {0, 0, 0}});
  InverseReport e = drazin_inverse(a);
  ASSERT_TRUE(e.found());
  EXPECT_EQ(e.index, 2u);
  EXPECT_EQ(e.value->str(), "[[1/2,0,0],[0,0,0],[0,0,0]]");
}

TEST(StarInverses, ExampleOverQ) {
  RingPtr q = m2q();
  Element a = a3(q);
  EXPECT_EQ(moore_penrose(a).value->str(), "[[1/4,0],[-1/4,0]]");
  EXPECT_EQ(core_inverse(a).value->str(), "[[1/2,0],[0,0]]");
  EXPECT_EQ(dual_core_inverse(a).value->str(), "[[1/4,-1/4],[-1/4,1/4]]");
}

TEST(StarInverses, IdentityIsItsOwnInverse) {
  for (RingPtr r : {m2q(), m2f2(), m2f5()}) {
    EXPECT_EQ(*moore_penrose(r->one()).value, r->one());
    EXPECT_EQ(*core_inverse(r->one()).value, r->one());
    EXPECT_EQ(*dual_core_inverse(r->one()).value, r->one());
  }
}

TEST(StarInverses, MoorePenroseMissingOverF2) {
  RingPtr r = m2f2();
  Element a = r->matrix({{1, 1}, {0, 0}});
  EXPECT_TRUE((a * a.star()).is_zero());
  EXPECT_FALSE(moore_penrose(a).found());
  EXPECT_TRUE(enumerate_inverse_set(a, {1, 2, 3, 4}).empty());
}

TEST(StarInverses, NeedInvolution) {
  EXPECT_THROW(moore_penrose(z(6)->residue(2)), UnsupportedInvolution);
  EXPECT_THROW(core_inverse(mat(2, 2, Involution::none)->one()), UnsupportedInvolution);
}

TEST(StarInverses, MatchEnumerationOverF5) {
  RingPtr r = m2f5();
  // A sample of the 625 elements, every 7th in canonical order.
  for (std::uint64_t i = 0; i < 625; i += 7) {
    Element a = r->element_at(i);
    std::vector<Element> mp = enumerate_inverse_set(a, {1, 2, 3, 4});
    InverseReport got = moore_penrose(a);
    ASSERT_EQ(got.found(), !mp.empty()) << a.str();
    if (got.found()) {
      EXPECT_EQ(*got.value, mp.front());
    }
    std::vector<Element> core = enumerate_inverse_set(a, {1, 2, 3, 6, 7});
    InverseReport c = core_inverse(a);
    ASSERT_EQ(c.found(), !core.empty()) << a.str();
    if (c.found()) {
      EXPECT_EQ(*c.value, core.front());
    }
  }
}

TEST(StarInverses, AgreeWithEquationsOverQ) {
  RingPtr q = m2q();
  for (const Element& a : elems(q, {R"([["1","2"],["3","4"]])", R"([["1","2"],["2","4"]])", R"([["0","3"],["0","0"]])",
                                    R"([["1","1"],["1","1"]])", R"([["-1/2","1"],["0","0"]])"})) {
    InverseReport mp = moore_penrose(a);
    ASSERT_TRUE(mp.found());
    EXPECT_TRUE(satisfies(a, *mp.value, {1, 2, 3, 4}));
    InverseReport core = core_inverse(a);
    InverseReport group = group_inverse(a);
    EXPECT_EQ(core.found(), group.found());
    if (core.found()) {
      EXPECT_TRUE(satisfies(a, *core.value, {1, 2, 3, 6, 7}));
      // Composition through the group and Moore-Penrose inverses.
      EXPECT_EQ(*core.value, *group.value * a * *mp.value);
    }
  }
}

TEST(ProjectorRelations, GroupInverseExample) {
  RingPtr q = m2q();
  Element a = a3(q);
  Element x = *group_inverse(a).value;
  ProjectorRelations rel = classify_projector_relations(a, x);
  EXPECT_TRUE(rel.consistent());
  for (const Characterization& c : rel.characterizations) {
    if (c.name != "{1,5}") continue;
    EXPECT_TRUE(c.by_equations);
    for (const auto& [label, holds] : c.clauses) EXPECT_TRUE(holds) << label;
  }
  EXPECT_TRUE(
      map_equals_projector(a * x, SidedIdeal::principal(a, Side::right), SidedIdeal::annihilator(a, Side::right)));
}

TEST(ProjectorRelations, MoorePenroseExample) {
  RingPtr q = m2q();
  Element a = a3(q);
  Element x = *moore_penrose(a).value;
  EXPECT_TRUE(map_equals_projector(a * x, SidedIdeal::principal(a, Side::right),
                                   SidedIdeal::annihilator(a.star(), Side::right)));
  EXPECT_TRUE(map_equals_projector(x * a, SidedIdeal::principal(a.star(), Side::right),
                                   SidedIdeal::annihilator(a, Side::right)));
  EXPECT_TRUE(classify_projector_relations(a, x).consistent());
}

TEST(ProjectorRelations, NothingFlaggedForUnrelatedElement) {
  RingPtr q = m2q();
  Element a = a3(q);
  Element x = q->matrix({{1, 0}, {0, 1}});
  ASSERT_FALSE(satisfies(a, x, {1}));
  ASSERT_FALSE(satisfies(a, x, {2}));
  ProjectorRelations rel = classify_projector_relations(a, x);
  EXPECT_TRUE(rel.consistent());
  for (const Characterization& c : rel.characterizations) {
    EXPECT_FALSE(c.by_equations) << c.name;
    for (const auto& [label, holds] : c.clauses) EXPECT_FALSE(holds) << c.name << ": " << label;
  }
}

// Every characterization agrees with the equations for every pair.
TEST(ProjectorRelations, ConsistentExhaustive) {
  for (RingPtr r : {z(6), z(8), m2f2()})
    for (const Element& a : r->elements())
      for (const Element& x : r->elements()) EXPECT_TRUE(classify_projector_relations(a, x).consistent())
          << r->name() << " a=" << a.str() << " x=" << x.str();
}

// The four solution grids of the 2x2 example over Q, solved as linear systems.
TEST(ExampleGrids, LinearSystemsOverQ) {
  RingPtr q = m2q();
  Element a = a3(q);
  auto products = [&](const Element& y) {
    return std::vector<AffineMap>{[a, y](const Element& x) { return a * x - a * y; },
                                  [a, y](const Element& x) { return x * a - y * a; }};
  };
  // AX = XA = AA^# = A^#A.
  Element g = *group_inverse(a).value;
  std::vector<AffineMap> first = products(g);
  first.push_back(eq_map(a, 5));
  EXPECT_TRUE(affine_equal(affine_system(q, first),
                           affine_system(q, {entry_is(0, 0, "1/2"), entry_is(1, 0, "0"), entry_diff(1, 1, 0, 1, "1/2")})));
  EXPECT_TRUE(affine_equal(affine_system(q, first), affine_system(q, {eq_map(a, 1), eq_map(a, 5)})));

  Element mp = *moore_penrose(a).value;
  AffineSystem second = affine_system(q, products(mp));
  EXPECT_TRUE(affine_equal(
      second, affine_system(q, {entry_is(0, 0, "1/4"), entry_is(1, 0, "-1/4"), entry_diff(0, 1, 1, 1, "0")})));
  EXPECT_TRUE(affine_equal(second, affine_system(q, {eq_map(a, 1), eq_map(a, 3), eq_map(a, 4)})));

  Element core = *core_inverse(a).value;
  AffineSystem third = affine_system(q, products(core));
  EXPECT_TRUE(affine_equal(
      third, affine_system(q, {entry_is(0, 0, "1/2"), entry_is(1, 0, "0"), entry_diff(0, 1, 1, 1, "0")})));
  EXPECT_TRUE(affine_equal(third, affine_system(q, {eq_map(a, 3), eq_map(a, 6)})));

  Element dual = *dual_core_inverse(a).value;
  AffineSystem fourth = affine_system(q, products(dual));
  EXPECT_TRUE(affine_equal(
      fourth, affine_system(q, {entry_is(0, 0, "1/4"), entry_is(1, 0, "-1/4"), entry_diff(1, 1, 0, 1, "1/2")})));
  EXPECT_TRUE(affine_equal(fourth, affine_system(q, {eq_map(a, 4), eq_map(a, 8)})));
}

TEST(ExampleGrids, AffineSolverDetectsDifferences) {
  RingPtr q = m2q();
  Element a = a3(q);
  EXPECT_FALSE(affine_equal(affine_system(q, {eq_map(a, 1)}), affine_system(q, {eq_map(a, 1), eq_map(a, 5)})));
  EXPECT_TRUE(affine_subset(affine_system(q, {eq_map(a, 1), eq_map(a, 5)}), affine_system(q, {eq_map(a, 1)})));
  EXPECT_FALSE(affine_subset(affine_system(q, {entry_is(0, 0, "1"), entry_is(0, 0, "2")}),
                             affine_system(q, {eq_map(a, 1)})));
}

}  // namespace
}  // namespace geninv::testing
