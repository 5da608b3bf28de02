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
#include <optional>
#include <vector>

#include "geninv/field.hpp"

namespace geninv {

// Dense row-major matrix of exact scalars. Arithmetic lives in the free
// functions below, which take the field that fixes the canonical form.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const { return entries_; }
  std::vector<Rational>& entries() { return entries_; }

  Matrix transpose() const;
  Matrix column(std::size_t j) const;
  Matrix columns(std::size_t first, std::size_t count) const;
  Matrix row_block(std::size_t first, std::size_t count) const;

  bool is_zero() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

Matrix hstack(const Matrix& left, const Matrix& right);
Matrix vstack(const Matrix& top, const Matrix& bottom);

namespace linalg {

Matrix add(const ScalarField& f, const Matrix& a, const Matrix& b);
Matrix sub(const ScalarField& f, const Matrix& a, const Matrix& b);
Matrix mul(const ScalarField& f, const Matrix& a, const Matrix& b);
Matrix neg(const ScalarField& f, const Matrix& a);
Matrix normalize(const ScalarField& f, const Matrix& a);

struct Echelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(const ScalarField& f, Matrix m);
std::size_t rank(const ScalarField& f, const Matrix& m);

// Columns form a basis of {v : m v = 0}.
Matrix nullspace(const ScalarField& f, const Matrix& m);

// Some X with a X = b, or nothing when the system is inconsistent.
std::optional<Matrix> solve(const ScalarField& f, const Matrix& a, const Matrix& b);

// Some X with X a = b.
std::optional<Matrix> solve_left(const ScalarField& f, const Matrix& a, const Matrix& b);

std::optional<Matrix> inverse(const ScalarField& f, const Matrix& a);

// a = F G with F of full column rank and G of full row rank.
struct RankFactorization {
  Matrix left;
  Matrix right;
};
RankFactorization rank_factorization(const ScalarField& f, const Matrix& a);

// Some X with F X = I for F of full column rank.
Matrix left_inverse(const ScalarField& f, const Matrix& full_column_rank);

// Some X with G X = I for G of full row rank.
Matrix right_inverse(const ScalarField& f, const Matrix& full_row_rank);

}  // namespace linalg
}  // namespace geninv
