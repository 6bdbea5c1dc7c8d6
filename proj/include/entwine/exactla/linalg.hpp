#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "entwine/exactla/matrix.hpp"

namespace entwine::exactla {

// Reduced row echelon form built one row at a time. Pivot rows are kept fully
// reduced with leading coefficient 1, so a fresh row is reduced in a single
// left-to-right sweep.
class RowEchelon {
 public:
  RowEchelon(const FieldSpec& f, std::size_t cols);

  // True iff the row was independent of everything inserted so far.
  bool insert(const SparseRow& row);
  bool insert(const Vector& v);
  // What is left of the row after clearing every pivot column.
  SparseRow remainder(const SparseRow& row) const;
  bool in_span(const Vector& v) const;

  std::size_t rank() const { return pivots_.size(); }
  std::size_t cols() const { return cols_; }
  // pivot column -> its row of the RREF
  const std::map<std::uint32_t, SparseRow>& pivots() const { return pivots_; }

 private:
  FieldSpec field_;
  std::size_t cols_;
  std::map<std::uint32_t, SparseRow> pivots_;
  // scratch for remainder(); makes a RowEchelon unsafe to share between threads
  mutable std::vector<Scalar> scratch_;
  mutable std::vector<char> used_;
  mutable std::vector<std::uint32_t> touched_;
};

SparseRow to_sparse(const Vector& v);
Vector to_dense(const FieldSpec& f, const SparseRow& r, std::size_t n);

RowEchelon row_echelon(const Matrix& m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}, one vector per free column, in increasing column order.
std::vector<Vector> kernel_basis(const Matrix& m);
// Columns of m at the pivot positions of its RREF.
std::vector<Vector> image_basis(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);
bool in_span(const std::vector<Vector>& vs, const Vector& v, std::size_t ambient_dim);

// span(big)/span(sub) with an explicit complement. class_basis() extends an
// independent subset of sub to a basis of span(big); reduce(v) returns the
// coordinates of v on the class basis after discarding its sub component.
class QuotientMap {
 public:
  QuotientMap() = default;
  QuotientMap(const FieldSpec& f, std::size_t ambient_dim, std::vector<Vector> sub_basis,
              std::vector<Vector> class_basis);

  const std::vector<Vector>& class_basis() const { return class_basis_; }
  const std::vector<Vector>& sub_basis() const { return sub_basis_; }
  std::size_t dim() const { return class_basis_.size(); }
  std::size_t ambient_dim() const { return ambient_; }
  Vector reduce(const Vector& v) const;

 private:
  FieldSpec field_;
  std::size_t ambient_ = 0;
  std::vector<Vector> sub_basis_, class_basis_;
  std::vector<std::size_t> rows_;  // rows of [sub | class] forming an invertible block
  Matrix inverse_;                 // inverse of that block
};

QuotientMap quotient_with_projection(const std::vector<Vector>& sub, const std::vector<Vector>& big,
                                     std::size_t ambient_dim);

}  // namespace entwine::exactla
