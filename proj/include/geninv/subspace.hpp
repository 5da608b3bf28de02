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

#include "geninv/matrix.hpp"

namespace geninv {

// Subspace of F^n held as the nonzero rows of a reduced row echelon matrix,
// so equal subspaces have identical representations.
class Subspace {
 public:
  // Span of the columns of `generators` (an n x k matrix).
  static Subspace span(const ScalarField& field, const Matrix& generators);
  static Subspace zero(const ScalarField& field, std::size_t n);
  static Subspace whole(const ScalarField& field, std::size_t n);

  const ScalarField& field() const { return field_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return echelon_.rows(); }

  // dim x n, reduced row echelon.
  const Matrix& echelon() const { return echelon_; }
  // n x dim, basis vectors as columns.
  Matrix basis() const { return echelon_.transpose(); }

  bool contains(const Matrix& column) const;
  bool contains_columns(const Matrix& m) const;
  bool subset_of(const Subspace& other) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  // {m v : v in this}.
  Subspace image(const Matrix& m) const;
  // {v : m v in this}.
  Subspace preimage(const Matrix& m) const;
  // {u : u . v = 0 for all v in this}, under the plain dot product.
  Subspace annihilator() const;
  // Extension by standard basis vectors in index order.
  Subspace complement() const;

  bool operator==(const Subspace& other) const = default;

 private:
  Subspace(const ScalarField& field, std::size_t n, Matrix echelon)
      : field_(field), ambient_(n), echelon_(std::move(echelon)) {}

  ScalarField field_;
  std::size_t ambient_;
  Matrix echelon_;
};

}  // namespace geninv
