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

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "geninv/matrix.hpp"

namespace geninv {

enum class Involution { none, transpose };

// Z_n (no involution) or M_size(F) with an optional transpose involution.
struct RingSpec {
  enum class Kind { modular, matrix };

  Kind kind = Kind::modular;
  std::int64_t modulus = 2;
  std::size_t size = 0;
  ScalarField scalars = ScalarField::rationals();
  Involution involution = Involution::none;

  static RingSpec modular_ring(std::int64_t n);
  static RingSpec matrix_ring(std::size_t size, ScalarField scalars, Involution involution);

  // "Z6", "M2(F5)", "M2(Q)"; a "no-star" suffix marks a matrix ring without involution.
  std::string name() const;

  bool operator==(const RingSpec&) const = default;
};

class Element;
class Ring;
using RingPtr = std::shared_ptr<const Ring>;

class Ring : public std::enable_shared_from_this<Ring> {
 public:
  static RingPtr make(const RingSpec& spec);

  const RingSpec& spec() const { return spec_; }
  bool is_matrix() const { return spec_.kind == RingSpec::Kind::matrix; }
  bool is_finite() const { return !is_matrix() || spec_.scalars.is_finite(); }
  bool has_involution() const { return is_matrix() && spec_.involution == Involution::transpose; }
  const ScalarField& scalars() const { return spec_.scalars; }
  std::size_t size() const { return spec_.size; }

  // Number of elements, or nothing for infinite rings.
  std::optional<std::uint64_t> cardinality() const;

  Element zero() const;
  Element one() const;
  Element residue(std::int64_t value) const;
  Element matrix(Matrix value) const;
  Element matrix(const std::vector<std::vector<std::int64_t>>& rows) const;
  Element matrix_unit(std::size_t i, std::size_t j) const;

  // Canonical enumeration: residues ascending, matrices by row-major
  // lexicographic order of entries.
  Element element_at(std::uint64_t index) const;
  std::uint64_t index_of(const Element& e) const;
  std::vector<Element> elements() const;
  void for_each_element(const std::function<void(const Element&)>& visit) const;

  void require_involution() const;

  std::string name() const { return spec_.name(); }

 private:
  explicit Ring(const RingSpec& spec) : spec_(spec) {}
  void require_finite() const;

  RingSpec spec_;
};

bool same_ring(const Ring& a, const Ring& b);

class Element {
 public:
  const Ring& ring() const { return *ring_; }
  const RingPtr& ring_ptr() const { return ring_; }

  bool is_matrix() const { return std::holds_alternative<Matrix>(value_); }
  std::int64_t residue() const { return std::get<std::int64_t>(value_); }
  const Matrix& matrix() const { return std::get<Matrix>(value_); }

  bool is_zero() const;
  bool is_one() const;

  Element operator+(const Element& other) const;
  Element operator-(const Element& other) const;
  Element operator*(const Element& other) const;
  Element operator-() const;

  // a* ; throws UnsupportedInvolution when the ring has none.
  Element star() const;
  Element pow(unsigned k) const;

  bool operator==(const Element& other) const;
  bool operator!=(const Element& other) const { return !(*this == other); }

  // Diagnostic text: "3" or "[[1,0],[0,0]]".
  std::string str() const;

 private:
  friend class Ring;
  Element(RingPtr ring, std::variant<std::int64_t, Matrix> value)
      : ring_(std::move(ring)), value_(std::move(value)) {}
  void require_same_ring(const Element& other) const;

  RingPtr ring_;
  std::variant<std::int64_t, Matrix> value_;
};

// Order used for canonical sorting: enumeration index on finite rings,
// entry-wise numeric order otherwise.
bool canonical_less(const Element& a, const Element& b);

struct ElementFlags {
  bool idempotent = false;
  std::optional<bool> symmetric;   // empty without involution
  std::optional<bool> projection;  // empty without involution
  bool invertible = false;
  std::optional<Element> inverse;
};

ElementFlags classify_element(const Element& a);
std::optional<Element> two_sided_inverse(const Element& a);
bool is_idempotent(const Element& a);

}  // namespace geninv
