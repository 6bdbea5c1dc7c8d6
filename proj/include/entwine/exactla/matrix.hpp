#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "entwine/exactla/scalar.hpp"

namespace entwine::exactla {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
bool is_zero(const Vector& v);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Scalar& s, const Vector& v);

struct Entry {
  std::uint32_t col;
  Scalar value;
};
// Nonzero entries sorted by column.
using SparseRow = std::vector<Entry>;

// Compressed rows. Every stored value is nonzero, every row is sorted, so two
// equal matrices have identical storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  static Matrix from_dense(const FieldSpec& f, std::size_t rows, std::size_t cols,
                           const std::vector<Scalar>& row_major);
  // Small integer literals, mostly for tests.
  static Matrix from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows);
  static Matrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols);

  const FieldSpec& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Scalar at(std::size_t r, std::size_t c) const;
  const SparseRow& row(std::size_t r) const { return data_[r]; }
  void set_row(std::size_t r, SparseRow row);

  Vector column(std::size_t c) const;
  // Column-major sparse copy: entry.col holds the row index.
  std::vector<SparseRow> columns() const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Matrix scaled(const Scalar& s) const;
  Matrix to_field(const FieldSpec& f) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseRow> data_;
};

// Accumulates (row, col, value) contributions; duplicates are summed on build().
class MatrixBuilder {
 public:
  MatrixBuilder(const FieldSpec& f, std::size_t rows, std::size_t cols);
  void add(std::size_t r, std::size_t c, const Scalar& v);
  Matrix build();

 private:
  FieldSpec field_;
  std::size_t rows_, cols_;
  std::vector<std::pair<std::uint64_t, Scalar>> triplets_;
};

// (a ⊗ b)[i1*rb + i2, j1*cb + j2] = a[i1,j1] b[i2,j2]
Matrix kron(const Matrix& a, const Matrix& b);
Matrix hstack(const std::vector<Matrix>& blocks);
Matrix vstack(const std::vector<Matrix>& blocks);

// Position of the smallest column index at which a and b differ, if any.
std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a, const Matrix& b);

}  // namespace entwine::exactla
