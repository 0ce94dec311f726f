#include "symcan/matrix.hpp"

#include <utility>

#include "symcan/error.hpp"

namespace symcan {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(Field field, const std::vector<std::vector<Scalar>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix out(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kValidation, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, rows[r][c]);
  }
  return out;
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix out(field, n, n);
  for (std::size_t i = 0; i < n; ++i) out.set(i, i, field.one());
  return out;
}

void Matrix::set(std::size_t r, std::size_t c, Scalar value) {
  if (!(value.field() == field_)) {
    throw Error(ErrorCode::kFieldMismatch,
                "entry over " + value.field().name() + " in matrix over " + field_.name());
  }
  data_[r * cols_ + c] = std::move(value);
}

std::vector<Scalar> Matrix::row(std::size_t r) const {
  return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
}

Matrix Matrix::transpose() const {
  Matrix out(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = (*this)(r, c);
  }
  return out;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) {
  if (!(lhs.field_ == rhs.field_)) throw Error(ErrorCode::kFieldMismatch, "matrix product across fields");
  if (lhs.cols_ != rhs.rows_) throw Error(ErrorCode::kValidation, "matrix product shape mismatch");
  Matrix out(lhs.field_, lhs.rows_, rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t k = 0; k < lhs.cols_; ++k) {
      const Scalar& a = lhs(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out.data_[i * out.cols_ + j] += a * rhs(k, j);
    }
  }
  return out;
}

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c != 0) out += ", ";
      out += (*this)(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

std::size_t rank(const Matrix& m) {
  std::vector<std::vector<Scalar>> a(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) a[r] = m.row(r);
  std::size_t next_row = 0;
  for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
    std::size_t pivot = next_row;
    while (pivot < m.rows() && a[pivot][c].is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    std::swap(a[pivot], a[next_row]);
    const Scalar inv = a[next_row][c].inverse();
    for (std::size_t r = next_row + 1; r < m.rows(); ++r) {
      if (a[r][c].is_zero()) continue;
      const Scalar factor = a[r][c] * inv;
      for (std::size_t k = c; k < m.cols(); ++k) a[r][k] -= factor * a[next_row][k];
    }
    ++next_row;
  }
  return next_row;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kValidation, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Field field = m.field();
  std::vector<std::vector<Scalar>> a(n);
  for (std::size_t r = 0; r < n; ++r) {
    a[r] = m.row(r);
    for (std::size_t c = 0; c < n; ++c) a[r].push_back(r == c ? field.one() : field.zero());
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t pivot = c;
    while (pivot < n && a[pivot][c].is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[pivot], a[c]);
    const Scalar inv = a[c][c].inverse();
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Scalar factor = a[r][c];
      for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] -= factor * a[c][k];
    }
  }
  Matrix out(field, n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out.set(r, c, a[r][n + c]);
  }
  return out;
}

}  // namespace symcan
