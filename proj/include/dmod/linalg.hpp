#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dmod/rational.hpp"

namespace dmod {

using Vec = std::vector<Rational>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  static Matrix identity(std::size_t n);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

// In-place Gauss-Jordan to reduced row echelon form. Pivots are chosen
// left-to-right, first nonzero row from the top; exact arithmetic makes the
// result canonical for the row space. Returns the pivot column indices.
std::vector<std::size_t> rref(Matrix& m);

std::size_t rank(Matrix m);

// Deterministic basis of the right nullspace of m.
std::vector<Vec> nullspace(const Matrix& m);

// One exact solution of m x = b, if the system is consistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);

Vec mat_vec(const Matrix& m, const Vec& v);

}  // namespace dmod
