#include "core/linalg.hpp"

#include <numeric>

#include "core/errors.hpp"

namespace hig {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(std::span<const ScalarVector> columns, std::size_t rows) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DomainError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

ScalarVector Matrix::apply(std::span<const Scalar> x) const {
  if (x.size() != cols_) throw DomainError("matrix/vector size mismatch");
  ScalarVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !x[c].is_zero()) out[r] += a * x[c];
    }
  }
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix product size mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

RowEchelon row_reduce(Matrix m, std::span<const std::size_t> column_order) {
  std::vector<std::size_t> order(column_order.begin(), column_order.end());
  if (order.empty()) {
    order.resize(m.cols());
    std::iota(order.begin(), order.end(), std::size_t{0});
  }
  RowEchelon out;
  std::size_t row = 0;
  for (std::size_t col : order) {
    if (row == m.rows()) break;
    // Prefer a single-term pivot so that every division stays exact.
    std::optional<std::size_t> pivot;
    for (std::size_t r = row; r < m.rows(); ++r) {
      if (m(r, col).is_zero()) continue;
      if (!pivot) pivot = r;
      if (m(r, col).is_monomial()) {
        pivot = r;
        break;
      }
    }
    if (!pivot) continue;
    if (*pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(*pivot, c));
    }
    const Scalar pivot_value = m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(row, c).is_zero()) m(row, c) /= pivot_value;
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Scalar factor = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!m(row, c).is_zero()) m(r, c) -= factor * m(row, c);
      }
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).rank(); }

std::optional<ScalarVector> solve(const Matrix& a, std::span<const Scalar> b) {
  if (b.size() != a.rows()) throw DomainError("solve: right-hand side size mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  std::vector<std::size_t> order(a.cols());
  std::iota(order.begin(), order.end(), std::size_t{0});
  RowEchelon ech = row_reduce(std::move(aug), order);
  for (std::size_t r = ech.rank(); r < a.rows(); ++r) {
    if (!ech.reduced(r, a.cols()).is_zero()) return std::nullopt;
  }
  ScalarVector x(a.cols());
  for (std::size_t i = 0; i < ech.rank(); ++i) {
    x[ech.pivot_columns[i]] = ech.reduced(i, a.cols());
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = Scalar(1);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  RowEchelon ech = row_reduce(std::move(aug), order);
  if (ech.rank() != n) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = ech.reduced(r, n + c);
  }
  return inv;
}

std::vector<ScalarVector> nullspace(const Matrix& m) {
  RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : ech.pivot_columns) is_pivot[c] = true;
  std::vector<ScalarVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    ScalarVector x(m.cols());
    x[free] = Scalar(1);
    for (std::size_t i = 0; i < ech.rank(); ++i) {
      x[ech.pivot_columns[i]] = -ech.reduced(i, free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

bool is_zero(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

}  // namespace hig
