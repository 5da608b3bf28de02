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

#include "geninv/subspace.hpp"

namespace geninv {

Subspace Subspace::span(const ScalarField& field, const Matrix& generators) {
  std::size_t n = generators.rows();
  auto e = linalg::rref(field, generators.transpose());
  return Subspace(field, n, e.reduced.row_block(0, e.pivots.size()));
}

Subspace Subspace::zero(const ScalarField& field, std::size_t n) { return Subspace(field, n, Matrix(0, n)); }

Subspace Subspace::whole(const ScalarField& field, std::size_t n) {
  return Subspace(field, n, Matrix::identity(n));
}

bool Subspace::contains(const Matrix& column) const { return contains_columns(column); }

bool Subspace::contains_columns(const Matrix& m) const {
  if (m.rows() != ambient_) throw StructuralError("subspace membership: dimension mismatch");
  if (dim() == ambient_) return true;
  // v lies in V exactly when the annihilator of V kills it.
  Matrix checks = annihilator().echelon();
  return linalg::mul(field_, checks, m).is_zero();
}

bool Subspace::subset_of(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw StructuralError("subspace comparison: dimension mismatch");
  return other.contains_columns(basis());
}

Subspace Subspace::sum(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw StructuralError("subspace sum: dimension mismatch");
  return span(field_, hstack(basis(), other.basis()));
}

Subspace Subspace::intersect(const Subspace& other) const {
  return annihilator().sum(other.annihilator()).annihilator();
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != ambient_) throw StructuralError("subspace image: dimension mismatch");
  return span(field_, linalg::mul(field_, m, basis()));
}

Subspace Subspace::preimage(const Matrix& m) const {
  if (m.rows() != ambient_) throw StructuralError("subspace preimage: dimension mismatch");
  Matrix checks = annihilator().echelon();
  return span(field_, linalg::nullspace(field_, linalg::mul(field_, checks, m)));
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return whole(field_, ambient_);
  return span(field_, linalg::nullspace(field_, echelon_));
}

Subspace Subspace::complement() const {
  Matrix chosen(ambient_, 0);
  Subspace current = *this;
  for (std::size_t i = 0; i < ambient_ && current.dim() < ambient_; ++i) {
    Matrix e(ambient_, 1);
    e(i, 0) = 1;
    if (current.contains(e)) continue;
    chosen = hstack(chosen, e);
    current = current.sum(span(field_, e));
  }
  return span(field_, chosen);
}

}  // namespace geninv
