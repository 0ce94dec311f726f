#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symcan/scalar.hpp"

namespace symcan {

/// Dense row-major matrix with every entry over one field.
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Throws kFieldMismatch if any entry lies over another field and
  /// kValidation for ragged input.
  static Matrix from_rows(Field field, const std::vector<std::vector<Scalar>>& rows);
  static Matrix identity(Field field, std::size_t n);

  Field field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Scalar value);
  std::vector<Scalar> row(std::size_t r) const;

  Matrix transpose() const;
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);
  friend bool operator==(const Matrix& lhs, const Matrix& rhs) = default;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

/// Rank by Gaussian elimination. Pivots are chosen column by column, left to
/// right, taking the first nonzero entry scanning unused rows top-down.
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace symcan
