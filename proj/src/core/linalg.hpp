#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "core/scalar.hpp"

namespace hig {

using ScalarVector = std::vector<Scalar>;

// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(std::span<const ScalarVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ScalarVector apply(std::span<const Scalar> x) const;
  Matrix transposed() const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form. Columns are searched for pivots in
// `column_order` (all columns, ascending, when empty); the pivot of each row
// is 1 and every other entry of a pivot column is 0.
struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivot_columns;  // pivot_columns[i] belongs to row i
  std::size_t rank() const { return pivot_columns.size(); }
};

RowEchelon row_reduce(Matrix m, std::span<const std::size_t> column_order = {});

std::size_t rank(const Matrix& m);
// Some solution of a x = b, or nullopt when inconsistent.
std::optional<ScalarVector> solve(const Matrix& a, std::span<const Scalar> b);
std::optional<Matrix> inverse(const Matrix& m);
// Basis of { x : m x = 0 }.
std::vector<ScalarVector> nullspace(const Matrix& m);

bool is_zero(std::span<const Scalar> v);

}  // namespace hig
