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

// Shared fixtures for the unit and acceptance tests.

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "geninv/io.hpp"

namespace geninv::testing {

inline RingPtr z(std::int64_t n) { return Ring::make(RingSpec::modular_ring(n)); }

inline RingPtr mat(std::size_t size, std::int64_t p, Involution inv = Involution::transpose) {
  return Ring::make(RingSpec::matrix_ring(size, p == 0 ? ScalarField::rationals() : ScalarField::prime(p), inv));
}

inline RingPtr m2q() { return mat(2, 0); }
inline RingPtr m2f2() { return mat(2, 2); }
inline RingPtr m2f5() { return mat(2, 5); }

// Element from JSON text or a shorthand such as "E12" or "I".
inline Element el(const RingPtr& ring, std::string_view text) { return io::parse_element_text(ring, text); }

// The running 2x2 example over Q.
inline Element a3(const RingPtr& ring) { return el(ring, R"([["2","-2"],["0","0"]])"); }

inline std::vector<std::string> strs(const std::vector<Element>& xs) {
  std::vector<std::string> out;
  for (const Element& x : xs) out.push_back(x.str());
  return out;
}

inline std::vector<Element> elems(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<Element> out;
  for (const std::string& t : texts) out.push_back(el(ring, t));
  return out;
}

// Right ideal of matrices with columns in span(v), left ideal of matrices
// with rows in span(v).
inline SidedIdeal span_ideal(const RingPtr& ring, Side side, std::vector<std::vector<std::int64_t>> vectors) {
  Matrix m(ring->size(), vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j)
    for (std::size_t i = 0; i < ring->size(); ++i) m(i, j) = Rational(static_cast<long>(vectors[j][i]));
  return SidedIdeal::from_vectors(ring, side, m);
}

// Solution set {X : f(X) = 0 for every f} of maps that are affine in the
// entries of X, on a matrix ring over a field: lin * vec(X) = rhs.
struct AffineSystem {
  ScalarField field;
  Matrix lin;
  Matrix rhs;
};

using AffineMap = std::function<Element(const Element&)>;

inline AffineSystem affine_system(const RingPtr& ring, const std::vector<AffineMap>& maps) {
  const std::size_t n = ring->size();
  const std::size_t vars = n * n;
  AffineSystem sys{ring->scalars(), Matrix(maps.size() * vars, vars), Matrix(maps.size() * vars, 1)};
  const ScalarField& f = sys.field;
  for (std::size_t m = 0; m < maps.size(); ++m) {
    const Matrix base = maps[m](ring->zero()).matrix();
    for (std::size_t k = 0; k < vars; ++k) sys.rhs(m * vars + k, 0) = f.neg(base.entries()[k]);
    for (std::size_t j = 0; j < vars; ++j) {
      const Matrix image = maps[m](ring->matrix_unit(j / n, j % n)).matrix();
      for (std::size_t k = 0; k < vars; ++k) sys.lin(m * vars + k, j) = f.sub(image.entries()[k], base.entries()[k]);
    }
  }
  return sys;
}

// Every solution of `inner` solves `outer`; false when `inner` has none.
inline bool affine_subset(const AffineSystem& inner, const AffineSystem& outer) {
  const ScalarField& f = inner.field;
  std::optional<Matrix> p = linalg::solve(f, inner.lin, inner.rhs);
  if (!p) return false;
  if (linalg::mul(f, outer.lin, *p) != linalg::normalize(f, outer.rhs)) return false;
  const Matrix null = linalg::nullspace(f, inner.lin);
  return null.cols() == 0 || linalg::mul(f, outer.lin, null).is_zero();
}

inline bool affine_equal(const AffineSystem& a, const AffineSystem& b) {
  return affine_subset(a, b) && affine_subset(b, a);
}

// Maps for the defining equations; each vanishes exactly when the equation
// holds. Only the equations affine in x are offered.
inline AffineMap eq_map(const Element& a, int equation) {
  switch (equation) {
    case 1: return [a](const Element& x) { return a * x * a - a; };
    case 3: return [a](const Element& x) { return (a * x).star() - a * x; };
    case 4: return [a](const Element& x) { return (x * a).star() - x * a; };
    case 5: return [a](const Element& x) { return a * x - x * a; };
    case 6: return [a](const Element& x) { return x * a * a - a; };
    case 8: return [a](const Element& x) { return a * a * x - a; };
    default: throw PreconditionError("equation not affine in x");
  }
}

// X with entry (i, j) equal to `value`, written as entry - value.
inline AffineMap entry_is(std::size_t i, std::size_t j, const char* value) {
  return [=](const Element& x) {
    const ScalarField& f = x.ring().scalars();
    Matrix m(x.ring().size(), x.ring().size());
    m(0, 0) = f.sub(x.matrix()(i, j), f.parse(value));
    return x.ring().matrix(m);
  };
}

// X with entry (i, j) minus entry (k, l) equal to `value`.
inline AffineMap entry_diff(std::size_t i, std::size_t j, std::size_t k, std::size_t l, const char* value) {
  return [=](const Element& x) {
    const ScalarField& f = x.ring().scalars();
    Matrix m(x.ring().size(), x.ring().size());
    m(0, 0) = f.sub(f.sub(x.matrix()(i, j), x.matrix()(k, l)), f.parse(value));
    return x.ring().matrix(m);
  };
}

}  // namespace geninv::testing
