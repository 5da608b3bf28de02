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

#include "geninv/matrix.hpp"

namespace geninv {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::column(std::size_t j) const { return columns(j, 1); }

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  Matrix c(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < count; ++j) c(i, j) = (*this)(i, first + j);
  }
  return c;
}

Matrix Matrix::row_block(std::size_t first, std::size_t count) const {
  Matrix r(count, cols_);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(first + i, j);
  }
  return r;
}

bool Matrix::is_zero() const {
  for (const auto& v : entries_) {
    if (v != 0) return false;
  }
  return true;
}

Matrix hstack(const Matrix& left, const Matrix& right) {
  if (left.rows() != right.rows()) throw StructuralError("hstack: row counts differ");
  Matrix m(left.rows(), left.cols() + right.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < left.cols(); ++j) m(i, j) = left(i, j);
    for (std::size_t j = 0; j < right.cols(); ++j) m(i, left.cols() + j) = right(i, j);
  }
  return m;
}

Matrix vstack(const Matrix& top, const Matrix& bottom) {
  if (top.cols() != bottom.cols()) throw StructuralError("vstack: column counts differ");
  Matrix m(top.rows() + bottom.rows(), top.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < top.rows(); ++i) m(i, j) = top(i, j);
    for (std::size_t i = 0; i < bottom.rows(); ++i) m(top.rows() + i, j) = bottom(i, j);
  }
  return m;
}

namespace linalg {

namespace {

void require_same_shape(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw StructuralError("matrix shapes differ");
  }
}

}  // namespace

Matrix add(const ScalarField& f, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.entries().size(); ++k) {
    c.entries()[k] = f.add(a.entries()[k], b.entries()[k]);
  }
  return c;
}

Matrix sub(const ScalarField& f, const Matrix& a, const Matrix& b) {
  require_same_shape(a, b);
  Matrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.entries().size(); ++k) {
    c.entries()[k] = f.sub(a.entries()[k], b.entries()[k]);
  }
  return c;
}

Matrix mul(const ScalarField& f, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw StructuralError("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j) == 0) continue;
        c(i, j) += aik * b(k, j);
      }
    }
  }
  return f.is_rational() ? c : normalize(f, c);
}

Matrix neg(const ScalarField& f, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.entries().size(); ++k) c.entries()[k] = f.neg(a.entries()[k]);
  return c;
}

Matrix normalize(const ScalarField& f, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t k = 0; k < c.entries().size(); ++k) c.entries()[k] = f.normalize(a.entries()[k]);
  return c;
}

Echelon rref(const ScalarField& f, Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    }
    Rational scale = f.inv(m(row, col));
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) = f.mul(m(row, j), scale);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        m(i, j) = f.sub(m(i, j), f.mul(factor, m(row, j)));
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const ScalarField& f, const Matrix& m) { return rref(f, m).pivots.size(); }

Matrix nullspace(const ScalarField& f, const Matrix& m) {
  Echelon e = rref(f, m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!is_pivot[c]) free_cols.push_back(c);
  }
  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    std::size_t fc = free_cols[k];
    basis(fc, k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
      basis(e.pivots[i], k) = f.neg(e.reduced(i, fc));
    }
  }
  return basis;
}

std::optional<Matrix> solve(const ScalarField& f, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw StructuralError("solve: row counts differ");
  Echelon e = rref(f, hstack(a, b));
  Matrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    std::size_t c = e.pivots[i];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(i, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> solve_left(const ScalarField& f, const Matrix& a, const Matrix& b) {
  auto xt = solve(f, a.transpose(), b.transpose());
  if (!xt) return std::nullopt;
  return xt->transpose();
}

std::optional<Matrix> inverse(const ScalarField& f, const Matrix& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  if (rank(f, a) != a.rows()) return std::nullopt;
  return solve(f, a, Matrix::identity(a.rows()));
}

RankFactorization rank_factorization(const ScalarField& f, const Matrix& a) {
  Echelon e = rref(f, a);
  std::size_t r = e.pivots.size();
  RankFactorization rf{Matrix(a.rows(), r), e.reduced.row_block(0, r)};
  for (std::size_t k = 0; k < r; ++k) {
    for (std::size_t i = 0; i < a.rows(); ++i) rf.left(i, k) = a(i, e.pivots[k]);
  }
  return rf;
}

Matrix left_inverse(const ScalarField& f, const Matrix& full_column_rank) {
  const Matrix& m = full_column_rank;
  std::vector<std::size_t> rows = rref(f, m.transpose()).pivots;
  if (rows.size() != m.cols()) throw PreconditionError("left_inverse: matrix lacks full column rank");
  Matrix square(m.cols(), m.cols());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t j = 0; j < m.cols(); ++j) square(k, j) = m(rows[k], j);
  }
  Matrix sq_inv = *inverse(f, square);
  Matrix x(m.cols(), m.rows());
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t i = 0; i < m.cols(); ++i) x(i, rows[k]) = sq_inv(i, k);
  }
  return x;
}

Matrix right_inverse(const ScalarField& f, const Matrix& full_row_rank) {
  return left_inverse(f, full_row_rank.transpose()).transpose();
}

}  // namespace linalg
}  // namespace geninv
