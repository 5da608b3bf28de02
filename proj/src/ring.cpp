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

#include "geninv/ring.hpp"

#include <numeric>
#include <sstream>

namespace geninv {

namespace {

constexpr std::uint64_t kEnumerationLimit = 1ULL << 24;

std::int64_t mod(std::int64_t v, std::int64_t n) {
  std::int64_t r = v % n;
  return r < 0 ? r + n : r;
}

}  // namespace

RingSpec RingSpec::modular_ring(std::int64_t n) {
  if (n < 2) throw StructuralError("Z_n requires n >= 2, got " + std::to_string(n));
  RingSpec s;
  s.kind = Kind::modular;
  s.modulus = n;
  return s;
}

RingSpec RingSpec::matrix_ring(std::size_t size, ScalarField scalars, Involution involution) {
  if (size == 0) throw StructuralError("matrix size must be positive");
  RingSpec s;
  s.kind = Kind::matrix;
  s.size = size;
  s.scalars = scalars;
  s.involution = involution;
  return s;
}

std::string RingSpec::name() const {
  if (kind == Kind::modular) return "Z" + std::to_string(modulus);
  std::string n = "M" + std::to_string(size) + "(" + scalars.name() + ")";
  if (involution == Involution::none) n += "no-star";
  return n;
}

RingPtr Ring::make(const RingSpec& spec) {
  if (spec.kind == RingSpec::Kind::modular) {
    RingSpec::modular_ring(spec.modulus);
  } else {
    RingSpec::matrix_ring(spec.size, spec.scalars, spec.involution);
  }
  return RingPtr(new Ring(spec));
}

std::optional<std::uint64_t> Ring::cardinality() const {
  if (!is_matrix()) return static_cast<std::uint64_t>(spec_.modulus);
  if (!scalars().is_finite()) return std::nullopt;
  std::uint64_t total = 1;
  auto p = static_cast<std::uint64_t>(scalars().characteristic());
  for (std::size_t k = 0; k < spec_.size * spec_.size; ++k) {
    if (total > kEnumerationLimit) return total;
    total *= p;
  }
  return total;
}

Element Ring::zero() const {
  if (!is_matrix()) return Element(shared_from_this(), std::int64_t{0});
  return Element(shared_from_this(), Matrix(spec_.size, spec_.size));
}

Element Ring::one() const {
  if (!is_matrix()) return Element(shared_from_this(), std::int64_t{1});
  return Element(shared_from_this(), Matrix::identity(spec_.size));
}

Element Ring::residue(std::int64_t value) const {
  if (is_matrix()) throw StructuralError("residue requested from a matrix ring");
  return Element(shared_from_this(), mod(value, spec_.modulus));
}

Element Ring::matrix(Matrix value) const {
  if (!is_matrix()) throw StructuralError("matrix requested from a modular ring");
  if (value.rows() != spec_.size || value.cols() != spec_.size) {
    throw StructuralError("matrix shape does not match " + name());
  }
  return Element(shared_from_this(), linalg::normalize(scalars(), value));
}

Element Ring::matrix(const std::vector<std::vector<std::int64_t>>& rows) const {
  Matrix m(spec_.size, spec_.size);
  if (rows.size() != spec_.size) throw StructuralError("matrix shape does not match " + name());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != spec_.size) throw StructuralError("matrix shape does not match " + name());
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return matrix(std::move(m));
}

Element Ring::matrix_unit(std::size_t i, std::size_t j) const {
  Matrix m(spec_.size, spec_.size);
  m(i, j) = 1;
  return matrix(std::move(m));
}

void Ring::require_finite() const {
  if (!is_finite()) throw NotEnumerable(name() + " is infinite and cannot be enumerated");
  if (*cardinality() > kEnumerationLimit) throw NotEnumerable(name() + " is too large to enumerate");
}

void Ring::require_involution() const {
  if (!has_involution()) throw UnsupportedInvolution(name() + " carries no involution");
}

Element Ring::element_at(std::uint64_t index) const {
  require_finite();
  if (index >= *cardinality()) throw StructuralError("element index out of range");
  if (!is_matrix()) return residue(static_cast<std::int64_t>(index));
  auto p = static_cast<std::uint64_t>(scalars().characteristic());
  Matrix m(spec_.size, spec_.size);
  auto& entries = m.entries();
  for (std::size_t k = entries.size(); k-- > 0;) {
    entries[k] = scalars().from_index(index % p);
    index /= p;
  }
  return Element(shared_from_this(), std::move(m));
}

std::uint64_t Ring::index_of(const Element& e) const {
  require_finite();
  if (!is_matrix()) return static_cast<std::uint64_t>(e.residue());
  auto p = static_cast<std::uint64_t>(scalars().characteristic());
  std::uint64_t index = 0;
  for (const auto& v : e.matrix().entries()) index = index * p + scalars().index_of(v);
  return index;
}

std::vector<Element> Ring::elements() const {
  std::vector<Element> out;
  require_finite();
  out.reserve(*cardinality());
  for_each_element([&](const Element& e) { out.push_back(e); });
  return out;
}

void Ring::for_each_element(const std::function<void(const Element&)>& visit) const {
  require_finite();
  std::uint64_t n = *cardinality();
  for (std::uint64_t i = 0; i < n; ++i) visit(element_at(i));
}

bool same_ring(const Ring& a, const Ring& b) { return &a == &b || a.spec() == b.spec(); }

void Element::require_same_ring(const Element& other) const {
  if (!same_ring(*ring_, *other.ring_)) {
    throw StructuralError("ring mismatch: " + ring_->name() + " vs " + other.ring_->name());
  }
}

bool Element::is_zero() const {
  if (!is_matrix()) return residue() == 0;
  return matrix().is_zero();
}

bool Element::is_one() const { return *this == ring_->one(); }

Element Element::operator+(const Element& other) const {
  require_same_ring(other);
  if (!is_matrix()) return Element(ring_, mod(residue() + other.residue(), ring_->spec().modulus));
  return Element(ring_, linalg::add(ring_->scalars(), matrix(), other.matrix()));
}

Element Element::operator-(const Element& other) const {
  require_same_ring(other);
  if (!is_matrix()) return Element(ring_, mod(residue() - other.residue(), ring_->spec().modulus));
  return Element(ring_, linalg::sub(ring_->scalars(), matrix(), other.matrix()));
}

Element Element::operator*(const Element& other) const {
  require_same_ring(other);
  if (!is_matrix()) {
    auto n = static_cast<__int128>(ring_->spec().modulus);
    auto product = static_cast<__int128>(residue()) * other.residue();
    return Element(ring_, static_cast<std::int64_t>(product % n));
  }
  return Element(ring_, linalg::mul(ring_->scalars(), matrix(), other.matrix()));
}

Element Element::operator-() const {
  if (!is_matrix()) return Element(ring_, mod(-residue(), ring_->spec().modulus));
  return Element(ring_, linalg::neg(ring_->scalars(), matrix()));
}

Element Element::star() const {
  ring_->require_involution();
  return Element(ring_, matrix().transpose());
}

Element Element::pow(unsigned k) const {
  Element result = ring_->one();
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

bool Element::operator==(const Element& other) const {
  return same_ring(*ring_, *other.ring_) && value_ == other.value_;
}

std::string Element::str() const {
  if (!is_matrix()) return std::to_string(residue());
  std::ostringstream out;
  const Matrix& m = matrix();
  out << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << (i ? ",[" : "[");
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ',';
      out << ring_->scalars().render(m(i, j));
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

bool canonical_less(const Element& a, const Element& b) {
  if (!a.is_matrix()) return a.residue() < b.residue();
  const auto& x = a.matrix().entries();
  const auto& y = b.matrix().entries();
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] != y[k]) return x[k] < y[k];
  }
  return false;
}

bool is_idempotent(const Element& a) { return a * a == a; }

std::optional<Element> two_sided_inverse(const Element& a) {
  const Ring& r = a.ring();
  if (!r.is_matrix()) {
    std::int64_t n = r.spec().modulus;
    if (std::gcd(a.residue(), n) != 1) return std::nullopt;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(static_cast<long>(a.residue())).get_mpz_t(),
               mpz_class(static_cast<long>(n)).get_mpz_t());
    return r.residue(inv.get_si());
  }
  auto inv = linalg::inverse(r.scalars(), a.matrix());
  if (!inv) return std::nullopt;
  return r.matrix(*inv);
}

ElementFlags classify_element(const Element& a) {
  ElementFlags flags;
  flags.idempotent = is_idempotent(a);
  if (a.ring().has_involution()) {
    flags.symmetric = a.star() == a;
    flags.projection = flags.idempotent && *flags.symmetric;
  }
  flags.inverse = two_sided_inverse(a);
  flags.invertible = flags.inverse.has_value();
  return flags;
}

}  // namespace geninv
