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

#include "geninv/projector.hpp"
#include "support.hpp"

namespace geninv::testing {
namespace {

SidedIdeal zset(const RingPtr& r, Side side, std::vector<std::int64_t> xs) {
  std::vector<Element> es;
  for (std::int64_t x : xs) es.push_back(r->residue(x));
  return SidedIdeal::from_elements(r, side, es);
}

TEST(Ideal, ModularPrincipalAndAnnihilator) {
  RingPtr r = z(6);
  EXPECT_EQ(strs(SidedIdeal::principal(r->residue(2), Side::right).members()),
            (std::vector<std::string>{"0", "2", "4"}));
  EXPECT_EQ(strs(SidedIdeal::annihilator(r->residue(2), Side::right).members()),
            (std::vector<std::string>{"0", "3"}));
  EXPECT_TRUE(SidedIdeal::annihilator(r->one(), Side::right).is_zero());
  EXPECT_TRUE(SidedIdeal::principal(r->zero(), Side::left).is_zero());
}

TEST(Ideal, MatrixUnitIdeals) {
  RingPtr r = m2f2();
  Element e12 = r->matrix_unit(0, 1);
  SidedIdeal prin = SidedIdeal::principal(e12, Side::right);
  // Second row zero.
  std::vector<Element> members = prin.members();
  ASSERT_EQ(members.size(), 4u);
  for (const Element& m : members) EXPECT_TRUE(m.matrix()(1, 0) == 0 && m.matrix()(1, 1) == 0);
  EXPECT_EQ(prin, SidedIdeal::annihilator(e12, Side::right));
  EXPECT_EQ(SidedIdeal::principal(e12, Side::left), SidedIdeal::annihilator(e12, Side::left));
}

TEST(Ideal, Subset) {
  RingPtr r = z(6);
  SidedIdeal t = zset(r, Side::right, {0, 3});
  EXPECT_TRUE(ideal_subset(t, t));
  EXPECT_FALSE(ideal_subset(zset(r, Side::right, {0, 2, 4}), t));
  RingPtr q = m2q();
  EXPECT_TRUE(ideal_subset(SidedIdeal::principal(a3(q), Side::right), SidedIdeal::principal(q->one(), Side::right)));
}

TEST(Ideal, FromElementsRejectsNonIdeal) {
  RingPtr r = z(6);
  EXPECT_THROW(zset(r, Side::right, {0, 1}), StructuralError);
}

TEST(Ideal, DirectSumDecomposition) {
  RingPtr r = z(6);
  std::optional<DirectSum> ds = direct_sum(zset(r, Side::right, {0, 2, 4}), zset(r, Side::right, {0, 3}));
  ASSERT_TRUE(ds);
  auto [s, t] = ds->decompose(r->one());
  EXPECT_EQ(s.str(), "4");
  EXPECT_EQ(t.str(), "3");
  EXPECT_EQ(ds->unit_first().str(), "4");
}

TEST(Ideal, DirectSumFailsOnOverlap) {
  RingPtr r = m2f2();
  SidedIdeal rows = SidedIdeal::principal(r->matrix_unit(0, 1), Side::right);
  EXPECT_FALSE(direct_sum(rows, rows));
}

TEST(Ideal, DirectSumWithWhole) {
  for (RingPtr r : {z(6), m2f2(), m2q()}) {
    std::optional<DirectSum> ds = direct_sum(SidedIdeal::whole(r, Side::right), SidedIdeal::zero(r, Side::right));
    ASSERT_TRUE(ds);
    Element x = r->is_matrix() ? r->matrix({{1, 1}, {0, 1}}) : r->residue(5);
    EXPECT_EQ(ds->decompose(x).first, x);
    EXPECT_TRUE(ds->decompose(x).second.is_zero());
  }
}

TEST(Ideal, Complements) {
  RingPtr q = m2q();
  std::optional<SidedIdeal> c = complement(span_ideal(q, Side::right, {{1, 0}}));
  ASSERT_TRUE(c);
  EXPECT_EQ(*c, span_ideal(q, Side::right, {{0, 1}}));

  RingPtr r = z(6);
  std::optional<SidedIdeal> t = complement(zset(r, Side::right, {0, 2, 4}));
  ASSERT_TRUE(t);
  EXPECT_EQ(strs(t->members()), (std::vector<std::string>{"0", "3"}));
  std::optional<SidedIdeal> all = complement(SidedIdeal::zero(r, Side::right));
  ASSERT_TRUE(all);
  EXPECT_TRUE(all->is_whole());
}

TEST(Ideal, ModularComplementMayNotExist) {
  // {0,2,4,6} in Z8 has no complementary ideal.
  RingPtr r = z(8);
  EXPECT_FALSE(complement(SidedIdeal::principal(r->residue(2), Side::right)));
}

TEST(Ideal, Orthogonality) {
  RingPtr f2 = m2f2();
  Element e11 = f2->matrix_unit(0, 0);
  EXPECT_TRUE(orthogonal(SidedIdeal::principal(e11, Side::right), SidedIdeal::annihilator(e11, Side::right),
                         Side::right));
  RingPtr q = m2q();
  Element a = a3(q);
  EXPECT_TRUE(orthogonal(SidedIdeal::principal(a, Side::right), SidedIdeal::annihilator(a.star(), Side::right),
                         Side::right));
  EXPECT_FALSE(
      orthogonal(SidedIdeal::principal(a, Side::right), SidedIdeal::annihilator(a, Side::right), Side::right));
  EXPECT_TRUE(orthogonal(SidedIdeal::zero(q, Side::right), SidedIdeal::whole(q, Side::right), Side::right));
}

// Symmetric a gives aR orthogonal to rann(a), for every a in M2(F2).
TEST(Ideal, SymmetricElementsGiveOrthogonalSums) {
  RingPtr r = m2f2();
  for (const Element& a : r->elements()) {
    if (a.star() != a) continue;
    EXPECT_TRUE(orthogonal(SidedIdeal::principal(a, Side::right), SidedIdeal::annihilator(a, Side::right),
                           Side::right))
        << a.str();
  }
}

TEST(Ideal, LatticeOperations) {
  RingPtr r = z(6);
  SidedIdeal two = zset(r, Side::right, {0, 2, 4});
  SidedIdeal three = zset(r, Side::right, {0, 3});
  EXPECT_TRUE(intersection(two, three).is_zero());
  EXPECT_TRUE(ideal_sum(two, three).is_whole());
  EXPECT_EQ(strs(multiply(r->residue(3), SidedIdeal::whole(r, Side::right)).members()),
            (std::vector<std::string>{"0", "3"}));
  EXPECT_EQ(strs(preimage(r->residue(2), three).members()), (std::vector<std::string>{"0", "3"}));
}

// Subspace membership against the definitions, by brute force.
TEST(Ideal, SubspaceFormMatchesDefinitions) {
  RingPtr r = m2f2();
  std::vector<Element> xs = r->elements();
  for (const Element& a : xs)
    for (Side side : {Side::right, Side::left}) {
      SidedIdeal prin = SidedIdeal::principal(a, side);
      SidedIdeal ann = SidedIdeal::annihilator(a, side);
      ASSERT_TRUE(prin.is_subspace());
      for (const Element& x : xs) {
        bool multiple = false;
        for (const Element& y : xs) multiple = multiple || (side == Side::right ? a * y : y * a) == x;
        EXPECT_EQ(prin.contains(x), multiple);
        EXPECT_EQ(ann.contains(x), (side == Side::right ? a * x : x * a).is_zero());
      }
    }
}

TEST(Projector, FromSum) {
  RingPtr r = z(6);
  std::optional<Projector> rho = Projector::from_sum(zset(r, Side::right, {0, 2, 4}), zset(r, Side::right, {0, 3}));
  ASSERT_TRUE(rho);
  EXPECT_EQ(rho->unit_image().str(), "4");
  EXPECT_EQ(rho->apply(r->one()).str(), "4");
  EXPECT_EQ(rho->apply(r->residue(2)).str(), "2");
  EXPECT_TRUE(rho->apply(r->residue(3)).is_zero());
}

TEST(Projector, OntoRangeAlongComplement) {
  RingPtr q = m2q();
  SidedIdeal s = SidedIdeal::principal(a3(q), Side::right);
  std::optional<Projector> rho = Projector::from_sum(s, *complement(s));
  ASSERT_TRUE(rho);
  EXPECT_EQ(rho->unit_image().str(), "[[1,0],[0,0]]");
  EXPECT_FALSE(Projector::from_sum(SidedIdeal::principal(m2f2()->matrix_unit(0, 1), Side::right),
                                   SidedIdeal::annihilator(m2f2()->matrix_unit(0, 1), Side::right)));
}

TEST(Projector, FromIdempotent) {
  RingPtr r = z(6);
  Projector rho = Projector::from_idempotent(r->residue(4), Side::right);
  EXPECT_EQ(strs(rho.onto().members()), (std::vector<std::string>{"0", "2", "4"}));
  EXPECT_EQ(strs(rho.along().members()), (std::vector<std::string>{"0", "3"}));

  RingPtr q = m2q();
  Projector e1 = Projector::from_idempotent(q->matrix_unit(0, 0), Side::right);
  EXPECT_EQ(e1.onto(), span_ideal(q, Side::right, {{1, 0}}));
  EXPECT_EQ(e1.along(), span_ideal(q, Side::right, {{0, 1}}));

  Projector id = Projector::from_idempotent(q->one(), Side::right);
  EXPECT_TRUE(id.onto().is_whole());
  EXPECT_TRUE(id.along().is_zero());
}

TEST(Projector, Orthogonality) {
  RingPtr q = m2q();
  OrthogonalityFlags mp = Projector::from_idempotent(q->matrix_unit(0, 0), Side::right).orthogonality();
  EXPECT_TRUE(mp.right_orthogonal);
  OrthogonalityFlags oblique = Projector::from_idempotent(q->matrix({{1, 1}, {0, 0}}), Side::right).orthogonality();
  EXPECT_FALSE(oblique.right_orthogonal);

  RingPtr f2 = m2f2();
  EXPECT_TRUE(Projector::from_idempotent(f2->matrix_unit(0, 0), Side::right).orthogonality().right_orthogonal);
  OrthogonalityFlags id = Projector::identity(q, Side::right).orthogonality();
  EXPECT_TRUE(id.right_orthogonal);
  EXPECT_TRUE(id.left_orthogonal);
}

// Every projector is idempotent, fixes its image and kills its kernel.
TEST(Projector, LawsExhaustive) {
  for (RingPtr r : {z(6), m2f2()})
    for (Side side : {Side::right, Side::left})
      for (const Element& p : r->elements()) {
        if (!is_idempotent(p)) continue;
        Projector rho = Projector::from_idempotent(p, side);
        for (const Element& x : r->elements()) {
          Element y = rho.apply(x);
          EXPECT_EQ(rho.apply(y), y);
          EXPECT_TRUE(rho.onto().contains(y));
          EXPECT_TRUE(rho.along().contains(x - y));
          EXPECT_EQ(rho.complementary().apply(x), x - y);
        }
        EXPECT_TRUE(map_equals_projector(p, rho.onto(), rho.along()));
      }
}

}  // namespace
}  // namespace geninv::testing
