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

#include "geninv/projector.hpp"

namespace geninv {

std::optional<Projector> Projector::from_sum(const SidedIdeal& onto, const SidedIdeal& along) {
  if (onto.side() != along.side()) throw StructuralError("projector ideals must share a side");
  auto sum = direct_sum(onto, along);
  if (!sum) return std::nullopt;
  return Projector(onto, along, sum->unit_first());
}

Projector Projector::from_idempotent(const Element& p, Side side) {
  if (!is_idempotent(p)) throw PreconditionError("projector_from_idempotent: " + p.str() + " is not idempotent");
  return Projector(SidedIdeal::principal(p, side), SidedIdeal::annihilator(p, side), p);
}

Projector Projector::identity(const RingPtr& ring, Side side) {
  return Projector(SidedIdeal::whole(ring, side), SidedIdeal::zero(ring, side), ring->one());
}

Element Projector::apply(const Element& r) const {
  return side() == Side::right ? unit_ * r : r * unit_;
}

Projector Projector::complementary() const {
  return Projector(along_, onto_, unit_.ring().one() - unit_);
}

OrthogonalityFlags Projector::orthogonality() const {
  return {orthogonal(onto_, along_, Side::right), orthogonal(onto_, along_, Side::left)};
}

std::optional<Element> projector_unit(const SidedIdeal& onto, const SidedIdeal& along) {
  if (onto.side() != along.side()) throw StructuralError("projector ideals must share a side");
  auto sum = direct_sum(onto, along);
  if (!sum) return std::nullopt;
  return sum->unit_first();
}

bool map_equals_projector(const Element& b, const SidedIdeal& onto, const SidedIdeal& along) {
  auto unit = projector_unit(onto, along);
  return unit && *unit == b;
}

}  // namespace geninv
