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

#include "geninv/ideal.hpp"

#include <sstream>

namespace geninv {

namespace {

using ElementSet = SidedIdeal::ElementSet;

bool uses_subspace(const Ring& ring) { return ring.is_matrix(); }

// Matrix whose columns represent the ideal's defining vectors for membership:
// X itself for right ideals, X^T for left ideals.
Matrix oriented(const Element& x, Side side) {
  return side == Side::right ? x.matrix() : x.matrix().transpose();
}

ElementSet collect(const Ring& ring, const std::function<bool(const Element&)>& keep) {
  ElementSet set(*ring.cardinality());
  std::uint64_t i = 0;
  ring.for_each_element([&](const Element& e) {
    if (keep(e)) set.set(i);
    ++i;
  });
  return set;
}

ElementSet extensional_principal(const Element& a, Side side) {
  const Ring& ring = a.ring();
  ElementSet set(*ring.cardinality());
  ring.for_each_element([&](const Element& r) {
    set.set(ring.index_of(side == Side::right ? a * r : r * a));
  });
  return set;
}

void require_same(const SidedIdeal& a, const SidedIdeal& b) {
  if (!same_ring(a.ring(), b.ring())) throw StructuralError("ideals belong to different rings");
  if (a.side() != b.side()) throw StructuralError("ideals have different sides");
}

}  // namespace

SidedIdeal SidedIdeal::principal(const Element& a, Side side) {
  const Ring& ring = a.ring();
  if (uses_subspace(ring)) {
    return SidedIdeal(a.ring_ptr(), side, Subspace::span(ring.scalars(), oriented(a, side)));
  }
  return SidedIdeal(a.ring_ptr(), side, extensional_principal(a, side));
}

SidedIdeal SidedIdeal::annihilator(const Element& a, Side side) {
  const Ring& ring = a.ring();
  if (uses_subspace(ring)) {
    return SidedIdeal(a.ring_ptr(), side,
                      Subspace::span(ring.scalars(), linalg::nullspace(ring.scalars(), oriented(a, side))));
  }
  return SidedIdeal(a.ring_ptr(), side, collect(ring, [&](const Element& r) {
                      return (side == Side::right ? a * r : r * a).is_zero();
                    }));
}

SidedIdeal SidedIdeal::whole(const RingPtr& ring, Side side) {
  if (uses_subspace(*ring)) return SidedIdeal(ring, side, Subspace::whole(ring->scalars(), ring->size()));
  ElementSet set(*ring->cardinality());
  set.set();
  return SidedIdeal(ring, side, std::move(set));
}

SidedIdeal SidedIdeal::zero(const RingPtr& ring, Side side) {
  if (uses_subspace(*ring)) return SidedIdeal(ring, side, Subspace::zero(ring->scalars(), ring->size()));
  ElementSet set(*ring->cardinality());
  set.set(0);
  return SidedIdeal(ring, side, std::move(set));
}

SidedIdeal SidedIdeal::from_elements(const RingPtr& ring, Side side, const std::vector<Element>& elements) {
  for (const auto& e : elements) {
    if (!same_ring(e.ring(), *ring)) throw StructuralError("ideal element from a different ring");
  }
  if (!ring->is_finite()) {
    throw StructuralError("explicit element sets are only accepted on finite rings");
  }
  ElementSet given(*ring->cardinality());
  for (const auto& e : elements) given.set(ring->index_of(e));
  SidedIdeal candidate = zero(ring, side);
  if (uses_subspace(*ring)) {
    Matrix vectors(ring->size(), 0);
    for (const auto& e : elements) vectors = hstack(vectors, oriented(e, side));
    candidate = SidedIdeal(ring, side, Subspace::span(ring->scalars(), vectors));
  } else {
    ElementSet closure = given;
    closure.set(0);
    // Close under addition and one-sided multiplication.
    bool grew = true;
    while (grew) {
      grew = false;
      for (auto i = closure.find_first(); i != ElementSet::npos; i = closure.find_next(i)) {
        Element x = ring->element_at(i);
        for (auto j = closure.find_first(); j != ElementSet::npos; j = closure.find_next(j)) {
          auto k = ring->index_of(x + ring->element_at(j));
          if (!closure.test(k)) closure.set(k), grew = true;
        }
        ring->for_each_element([&](const Element& r) {
          auto k = ring->index_of(side == Side::right ? x * r : r * x);
          if (!closure.test(k)) closure.set(k), grew = true;
        });
      }
    }
    candidate = SidedIdeal(ring, side, std::move(closure));
  }
  if (candidate.to_element_set() != given) {
    throw StructuralError("element set is not a " + std::string(side_name(side)) + " ideal");
  }
  return candidate;
}

SidedIdeal SidedIdeal::from_vectors(const RingPtr& ring, Side side, const Matrix& vectors) {
  if (!ring->is_matrix()) throw StructuralError("subspace ideals require a matrix ring");
  if (vectors.rows() != ring->size()) throw StructuralError("subspace vectors have the wrong length");
  return SidedIdeal(ring, side, Subspace::span(ring->scalars(), linalg::normalize(ring->scalars(), vectors)));
}

SidedIdeal SidedIdeal::from_subspace(const RingPtr& ring, Side side, Subspace space) {
  if (!ring->is_matrix() || space.ambient() != ring->size() || !(space.field() == ring->scalars())) {
    throw StructuralError("subspace does not match the ring");
  }
  return SidedIdeal(ring, side, std::move(space));
}

SidedIdeal SidedIdeal::from_element_set_unchecked(const RingPtr& ring, Side side, ElementSet set) {
  if (ring->is_matrix()) throw StructuralError("matrix rings use the subspace form");
  return SidedIdeal(ring, side, std::move(set));
}

bool SidedIdeal::contains(const Element& x) const {
  if (!same_ring(x.ring(), *ring_)) throw StructuralError("membership test across rings");
  if (is_subspace()) return subspace().contains_columns(oriented(x, side_));
  return element_set().test(ring_->index_of(x));
}

bool SidedIdeal::is_zero() const {
  if (is_subspace()) return subspace().dim() == 0;
  return element_set().count() == 1;
}

bool SidedIdeal::is_whole() const {
  if (is_subspace()) return subspace().dim() == ring_->size();
  return element_set().all();
}

std::vector<Element> SidedIdeal::members() const {
  ElementSet set = to_element_set();
  std::vector<Element> out;
  out.reserve(set.count());
  for (auto i = set.find_first(); i != ElementSet::npos; i = set.find_next(i)) {
    out.push_back(ring_->element_at(i));
  }
  return out;
}

std::optional<std::uint64_t> SidedIdeal::cardinality() const {
  if (!ring_->is_finite()) return is_zero() ? std::optional<std::uint64_t>(1) : std::nullopt;
  if (!is_subspace()) return element_set().count();
  std::uint64_t total = 1;
  auto p = static_cast<std::uint64_t>(ring_->scalars().characteristic());
  for (std::size_t k = 0; k < subspace().dim() * ring_->size(); ++k) total *= p;
  return total;
}

std::vector<Element> SidedIdeal::generators() const {
  if (!is_subspace()) return members();
  std::vector<Element> out;
  Matrix basis = subspace().basis();
  std::size_t n = ring_->size();
  for (std::size_t b = 0; b < basis.cols(); ++b) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix m(n, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (side_ == Side::right) {
          m(i, j) = basis(i, b);
        } else {
          m(j, i) = basis(i, b);
        }
      }
      out.push_back(ring_->matrix(std::move(m)));
    }
  }
  return out;
}

SidedIdeal::ElementSet SidedIdeal::to_element_set() const {
  if (!is_subspace()) return element_set();
  return collect(*ring_, [&](const Element& e) { return contains(e); });
}

std::string SidedIdeal::describe() const {
  std::ostringstream out;
  out << side_name(side_) << ' ';
  if (is_subspace()) {
    out << (side_ == Side::right ? "col" : "row") << " span{";
    Matrix basis = subspace().basis();
    for (std::size_t b = 0; b < basis.cols(); ++b) {
      out << (b ? ",(" : "(");
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        out << (i ? "," : "") << ring_->scalars().render(basis(i, b));
      }
      out << ')';
    }
    out << '}';
  } else {
    out << '{';
    bool first = true;
    for (const auto& m : members()) {
      out << (first ? "" : ",") << m.str();
      first = false;
    }
    out << '}';
  }
  return out.str();
}

bool SidedIdeal::operator==(const SidedIdeal& other) const {
  return same_ring(*ring_, *other.ring_) && side_ == other.side_ && repr_ == other.repr_;
}

bool ideal_subset(const SidedIdeal& inner, const SidedIdeal& outer) {
  require_same(inner, outer);
  if (inner.is_subspace()) return inner.subspace().subset_of(outer.subspace());
  return inner.element_set().is_subset_of(outer.element_set());
}

SidedIdeal intersection(const SidedIdeal& a, const SidedIdeal& b) {
  require_same(a, b);
  if (a.is_subspace()) {
    return SidedIdeal::from_subspace(a.ring_ptr(), a.side(), a.subspace().intersect(b.subspace()));
  }
  return SidedIdeal::from_element_set_unchecked(a.ring_ptr(), a.side(), a.element_set() & b.element_set());
}

SidedIdeal ideal_sum(const SidedIdeal& a, const SidedIdeal& b) {
  require_same(a, b);
  if (a.is_subspace()) return SidedIdeal::from_subspace(a.ring_ptr(), a.side(), a.subspace().sum(b.subspace()));
  const Ring& ring = a.ring();
  ElementSet set(*ring.cardinality());
  for (const auto& s : a.members()) {
    for (const auto& t : b.members()) set.set(ring.index_of(s + t));
  }
  return SidedIdeal::from_element_set_unchecked(a.ring_ptr(), a.side(), std::move(set));
}

SidedIdeal multiply(const Element& a, const SidedIdeal& ideal) {
  if (!same_ring(a.ring(), ideal.ring())) throw StructuralError("ring mismatch");
  Side side = ideal.side();
  if (ideal.is_subspace()) {
    Matrix map = side == Side::right ? a.matrix() : a.matrix().transpose();
    return SidedIdeal::from_subspace(ideal.ring_ptr(), side, ideal.subspace().image(map));
  }
  const Ring& ring = ideal.ring();
  ElementSet set(*ring.cardinality());
  for (const auto& s : ideal.members()) set.set(ring.index_of(side == Side::right ? a * s : s * a));
  return SidedIdeal::from_element_set_unchecked(ideal.ring_ptr(), side, std::move(set));
}

SidedIdeal preimage(const Element& a, const SidedIdeal& ideal) {
  if (!same_ring(a.ring(), ideal.ring())) throw StructuralError("ring mismatch");
  Side side = ideal.side();
  if (ideal.is_subspace()) {
    Matrix map = side == Side::right ? a.matrix() : a.matrix().transpose();
    return SidedIdeal::from_subspace(ideal.ring_ptr(), side, ideal.subspace().preimage(map));
  }
  return SidedIdeal::from_element_set_unchecked(
      ideal.ring_ptr(), side,
      collect(ideal.ring(), [&](const Element& r) { return ideal.contains(side == Side::right ? a * r : r * a); }));
}

SidedIdeal annihilator_of(const SidedIdeal& ideal) {
  Side result_side = opposite(ideal.side());
  if (ideal.is_subspace()) {
    return SidedIdeal::from_subspace(ideal.ring_ptr(), result_side, ideal.subspace().annihilator());
  }
  auto gens = ideal.generators();
  return SidedIdeal::from_element_set_unchecked(
      ideal.ring_ptr(), result_side, collect(ideal.ring(), [&](const Element& r) {
        for (const auto& s : gens) {
          if (!(ideal.side() == Side::right ? r * s : s * r).is_zero()) return false;
        }
        return true;
      }));
}

std::optional<Element> solve_in_ideal(const SidedIdeal& ideal, const Element& a, const Element& target) {
  const Ring& ring = ideal.ring();
  if (!same_ring(a.ring(), ring) || !same_ring(target.ring(), ring)) throw StructuralError("ring mismatch");
  if (ideal.is_subspace()) {
    const ScalarField& f = ring.scalars();
    Matrix basis = ideal.subspace().basis();
    if (ideal.side() == Side::right) {
      auto z = linalg::solve(f, linalg::mul(f, a.matrix(), basis), target.matrix());
      if (!z) return std::nullopt;
      return ring.matrix(linalg::mul(f, basis, *z));
    }
    Matrix rows = basis.transpose();
    auto z = linalg::solve_left(f, linalg::mul(f, rows, a.matrix()), target.matrix());
    if (!z) return std::nullopt;
    return ring.matrix(linalg::mul(f, *z, rows));
  }
  for (const auto& x : ideal.members()) {
    if ((ideal.side() == Side::right ? a * x : x * a) == target) return x;
  }
  return std::nullopt;
}

std::pair<Element, Element> DirectSum::decompose(const Element& r) const {
  if (first_.side() == Side::right) {
    Element s = unit_first_ * r;
    return {s, r - s};
  }
  Element s = r * unit_first_;
  return {s, r - s};
}

std::optional<DirectSum> direct_sum(const SidedIdeal& s, const SidedIdeal& t) {
  require_same(s, t);
  const Ring& ring = s.ring();
  if (s.is_subspace()) {
    const Subspace& vs = s.subspace();
    const Subspace& vt = t.subspace();
    std::size_t n = ring.size();
    if (vs.dim() + vt.dim() != n) return std::nullopt;
    const ScalarField& f = ring.scalars();
    Matrix bs = vs.basis();
    auto inv = linalg::inverse(f, hstack(bs, vt.basis()));
    if (!inv) return std::nullopt;
    Matrix proj = linalg::mul(f, bs, inv->row_block(0, vs.dim()));
    if (s.side() == Side::left) proj = proj.transpose();
    return DirectSum(s, t, ring.matrix(std::move(proj)));
  }
  auto meet = s.element_set() & t.element_set();
  if (meet.count() != 1) return std::nullopt;
  if (s.element_set().count() * t.element_set().count() != *ring.cardinality()) return std::nullopt;
  Element one = ring.one();
  for (const auto& x : s.members()) {
    if (t.contains(one - x)) return DirectSum(s, t, x);
  }
  return std::nullopt;
}

bool is_direct_sum(const SidedIdeal& s, const SidedIdeal& t) { return direct_sum(s, t).has_value(); }

std::optional<SidedIdeal> complement(const SidedIdeal& s) {
  if (s.is_subspace()) {
    SidedIdeal t = SidedIdeal::from_subspace(s.ring_ptr(), s.side(), s.subspace().complement());
    if (is_direct_sum(s, t)) return t;
    return std::nullopt;
  }
  std::optional<SidedIdeal> found;
  const Ring& ring = s.ring();
  std::uint64_t n = *ring.cardinality();
  for (std::uint64_t i = 0; i < n && !found; ++i) {
    SidedIdeal t = SidedIdeal::principal(ring.element_at(i), s.side());
    if (is_direct_sum(s, t)) found = t;
  }
  for (std::uint64_t i = 0; i < n && !found; ++i) {
    SidedIdeal t = SidedIdeal::annihilator(ring.element_at(i), s.side());
    if (is_direct_sum(s, t)) found = t;
  }
  return found;
}

bool orthogonal(const SidedIdeal& i, const SidedIdeal& j, Side flavor) {
  if (!same_ring(i.ring(), j.ring())) throw StructuralError("ideals belong to different rings");
  i.ring().require_involution();
  auto gi = i.generators();
  auto gj = j.generators();
  for (const auto& a : gi) {
    for (const auto& b : gj) {
      if (!(flavor == Side::right ? a.star() * b : a * b.star()).is_zero()) return false;
    }
  }
  return true;
}

}  // namespace geninv
