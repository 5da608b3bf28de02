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

#include <optional>

#include "geninv/ideal.hpp"

namespace geninv {

struct OrthogonalityFlags {
  bool right_orthogonal = false;
  bool left_orthogonal = false;
};

// The idempotent endomorphism selecting the S-component of R = S + T.
// Both ideals share a side; r maps to unit_image * r for right ideals and
// to r * unit_image for left ideals.
class Projector {
 public:
  static std::optional<Projector> from_sum(const SidedIdeal& onto, const SidedIdeal& along);
  // rho_{pR, rann(p)} (right) or rho_{Rp, lann(p)} (left); p must be idempotent.
  static Projector from_idempotent(const Element& p, Side side);
  static Projector identity(const RingPtr& ring, Side side);

  const SidedIdeal& onto() const { return onto_; }
  const SidedIdeal& along() const { return along_; }
  Side side() const { return onto_.side(); }
  const Element& unit_image() const { return unit_; }

  Element apply(const Element& r) const;
  // rho_{T,S}.
  Projector complementary() const;

  OrthogonalityFlags orthogonality() const;

 private:
  Projector(SidedIdeal onto, SidedIdeal along, Element unit)
      : onto_(std::move(onto)), along_(std::move(along)), unit_(std::move(unit)) {}

  SidedIdeal onto_;
  SidedIdeal along_;
  Element unit_;
};

// Unit image of rho_{S,T}, or nothing when R is not S + T directly.
std::optional<Element> projector_unit(const SidedIdeal& onto, const SidedIdeal& along);

// phi_b = rho_{S,T} for right ideals (r -> br), or the left map r -> rb =
// rho_{S,T} for left ideals.
bool map_equals_projector(const Element& b, const SidedIdeal& onto, const SidedIdeal& along);

}  // namespace geninv
