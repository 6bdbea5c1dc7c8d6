#include "entwine/exactla/matrix.hpp"

#include <algorithm>
#include <string>

#include "entwine/errors.hpp"

namespace entwine::exactla {

namespace {

void require_field(const FieldSpec& a, const FieldSpec& b) {
  if (!(a == b)) throw FieldMismatchError("field mismatch: " + a.to_string() + " vs " + b.to_string());
}

std::string dims(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

// Dense scratch row with a list of touched slots, reused across rows.
struct Accumulator {
  std::vector<Scalar> vals;
  std::vector<char> used;
  std::vector<std::uint32_t> touched;

  Accumulator(const FieldSpec& f, std::size_t n) : vals(n, Scalar::zero(f)), used(n, 0) {}

  Scalar& slot(std::uint32_t c) {
    if (!used[c]) {
      used[c] = 1;
      touched.push_back(c);
    }
    return vals[c];
  }

  SparseRow drain(const FieldSpec& f) {
    std::sort(touched.begin(), touched.end());
    SparseRow out;
    out.reserve(touched.size());
    for (auto c : touched) {
      if (!vals[c].is_zero()) out.push_back({c, vals[c]});
      vals[c] = Scalar::zero(f);
      used[c] = 0;
    }
    touched.clear();
    return out;
  }
};

}  // namespace

Vector zero_vector(const FieldSpec& f, std::size_t n) { return Vector(n, Scalar::zero(f)); }

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector lengths differ");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

Vector subtract(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw ShapeError("vector lengths differ");
  Vector r(a);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

Vector scale(const Scalar& s, const Vector& v) {
  Vector r(v);
  for (auto& x : r) x *= s;
  return r;
}

Matrix::Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), data_(rows) {
  if (cols > UINT32_MAX) throw ShapeError("too many columns");
}

Matrix Matrix::identity(const FieldSpec& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i].push_back({static_cast<std::uint32_t>(i), Scalar::one(f)});
  return m;
}

Matrix Matrix::from_dense(const FieldSpec& f, std::size_t rows, std::size_t cols,
                          const std::vector<Scalar>& row_major) {
  if (row_major.size() != rows * cols) throw ShapeError("dense data does not match " + dims(rows, cols));
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) {
      const Scalar& v = row_major[i * cols + j];
      require_field(f, v.field());
      if (!v.is_zero()) m.data_[i].push_back({static_cast<std::uint32_t>(j), v});
    }
  return m;
}

Matrix Matrix::from_ints(const FieldSpec& f, const std::vector<std::vector<long>>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows[0].size();
  std::vector<Scalar> flat;
  for (const auto& r : rows) {
    if (r.size() != cols) throw ShapeError("ragged integer matrix");
    for (long v : r) flat.emplace_back(f, v);
  }
  return from_dense(f, rows.size(), cols, flat);
}

Matrix Matrix::from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw ShapeError("column length differs from row count");
    for (std::size_t i = 0; i < rows; ++i)
      if (!cols[j][i].is_zero()) m.data_[i].push_back({static_cast<std::uint32_t>(j), cols[j][i]});
  }
  return m;
}

std::size_t Matrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw ShapeError("index out of range");
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), c, [](const Entry& e, std::size_t k) { return e.col < k; });
  return (it != row.end() && it->col == c) ? it->value : Scalar::zero(field_);
}

void Matrix::set_row(std::size_t r, SparseRow row) {
  if (r >= rows_) throw ShapeError("row out of range");
  std::erase_if(row, [](const Entry& e) { return e.value.is_zero(); });
  std::sort(row.begin(), row.end(), [](const Entry& a, const Entry& b) { return a.col < b.col; });
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i].col >= cols_) throw ShapeError("column out of range");
    if (i && row[i].col == row[i - 1].col) throw ShapeError("duplicate column in row");
    require_field(field_, row[i].value.field());
  }
  data_[r] = std::move(row);
}

Vector Matrix::column(std::size_t c) const {
  if (c >= cols_) throw ShapeError("column out of range");
  Vector v = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

std::vector<SparseRow> Matrix::columns() const {
  std::vector<SparseRow> out(cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) out[e.col].push_back({static_cast<std::uint32_t>(i), e.value});
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("apply: vector length " + std::to_string(v.size()) + " vs " + dims(rows_, cols_));
  Vector out = zero_vector(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& e : data_[i]) out[i].add_product(e.value, v[e.col]);
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  auto cs = columns();
  for (std::size_t j = 0; j < cols_; ++j) t.data_[j] = std::move(cs[j]);
  return t;
}

Matrix Matrix::scaled(const Scalar& s) const {
  require_field(field_, s.field());
  if (s.is_zero()) return Matrix(field_, rows_, cols_);
  Matrix m(*this);
  for (auto& r : m.data_)
    for (auto& e : r) e.value *= s;
  return m;
}

Matrix Matrix::to_field(const FieldSpec& f) const {
  if (f == field_) return *this;
  if (!field_.is_rational()) throw FieldMismatchError("can only move matrices out of Q");
  Matrix m(f, rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    SparseRow r;
    for (const auto& e : data_[i]) {
      Scalar v = Scalar::from_rational(f, e.value.rational());
      if (!v.is_zero()) r.push_back({e.col, v});
    }
    m.data_[i] = std::move(r);
  }
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_);
  if (a.cols_ != b.rows_) throw ShapeError("product of " + dims(a.rows_, a.cols_) + " and " + dims(b.rows_, b.cols_));
  Matrix m(a.field_, a.rows_, b.cols_);
  Accumulator acc(a.field_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (const auto& ea : a.data_[i])
      for (const auto& eb : b.data_[ea.col]) acc.slot(eb.col).add_product(ea.value, eb.value);
    m.data_[i] = acc.drain(a.field_);
  }
  return m;
}

namespace {

Matrix combine(const Matrix& a, const Matrix& b, bool subtract_b) {
  require_field(a.field(), b.field());
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw ShapeError("sum of " + dims(a.rows(), a.cols()) + " and " + dims(b.rows(), b.cols()));
  Matrix m(a.field(), a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    const auto& ra = a.row(i);
    const auto& rb = b.row(i);
    SparseRow out;
    std::size_t p = 0, q = 0;
    while (p < ra.size() || q < rb.size()) {
      if (q == rb.size() || (p < ra.size() && ra[p].col < rb[q].col)) {
        out.push_back(ra[p++]);
      } else if (p == ra.size() || rb[q].col < ra[p].col) {
        out.push_back({rb[q].col, subtract_b ? -rb[q].value : rb[q].value});
        ++q;
      } else {
        Scalar v = subtract_b ? ra[p].value - rb[q].value : ra[p].value + rb[q].value;
        if (!v.is_zero()) out.push_back({ra[p].col, v});
        ++p;
        ++q;
      }
    }
    m.set_row(i, std::move(out));
  }
  return m;
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) { return combine(a, b, false); }
Matrix operator-(const Matrix& a, const Matrix& b) { return combine(a, b, true); }

bool operator==(const Matrix& a, const Matrix& b) {
  require_field(a.field_, b.field_);
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (std::size_t i = 0; i < a.rows_; ++i) {
    const auto& ra = a.data_[i];
    const auto& rb = b.data_[i];
    if (ra.size() != rb.size()) return false;
    for (std::size_t k = 0; k < ra.size(); ++k)
      if (ra[k].col != rb[k].col || !(ra[k].value == rb[k].value)) return false;
  }
  return true;
}

MatrixBuilder::MatrixBuilder(const FieldSpec& f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols) {
  if (cols > UINT32_MAX) throw ShapeError("too many columns");
}

void MatrixBuilder::add(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows_ || c >= cols_) throw ShapeError("builder index out of range");
  if (v.is_zero()) return;
  require_field(field_, v.field());
  triplets_.emplace_back(static_cast<std::uint64_t>(r) * cols_ + c, v);
}

Matrix MatrixBuilder::build() {
  std::stable_sort(triplets_.begin(), triplets_.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  Matrix m(field_, rows_, cols_);
  std::vector<SparseRow> rows(rows_);
  for (std::size_t k = 0; k < triplets_.size();) {
    std::uint64_t key = triplets_[k].first;
    Scalar v = triplets_[k].second;
    for (++k; k < triplets_.size() && triplets_[k].first == key; ++k) v += triplets_[k].second;
    if (!v.is_zero()) rows[key / cols_].push_back({static_cast<std::uint32_t>(key % cols_), v});
  }
  for (std::size_t i = 0; i < rows_; ++i) m.set_row(i, std::move(rows[i]));
  triplets_.clear();
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_field(a.field(), b.field());
  Matrix m(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1)
    for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
      SparseRow r;
      r.reserve(a.row(i1).size() * b.row(i2).size());
      for (const auto& ea : a.row(i1))
        for (const auto& eb : b.row(i2))
          r.push_back({static_cast<std::uint32_t>(ea.col * b.cols() + eb.col), ea.value * eb.value});
      m.set_row(i1 * b.rows() + i2, std::move(r));
    }
  return m;
}

Matrix hstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw ShapeError("hstack of nothing");
  const auto& f = blocks[0].field();
  std::size_t rows = blocks[0].rows(), cols = 0;
  for (const auto& b : blocks) {
    require_field(f, b.field());
    if (b.rows() != rows) throw ShapeError("hstack row counts differ");
    cols += b.cols();
  }
  Matrix m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    SparseRow r;
    std::size_t off = 0;
    for (const auto& b : blocks) {
      for (const auto& e : b.row(i)) r.push_back({static_cast<std::uint32_t>(e.col + off), e.value});
      off += b.cols();
    }
    m.set_row(i, std::move(r));
  }
  return m;
}

Matrix vstack(const std::vector<Matrix>& blocks) {
  if (blocks.empty()) throw ShapeError("vstack of nothing");
  const auto& f = blocks[0].field();
  std::size_t cols = blocks[0].cols(), rows = 0;
  for (const auto& b : blocks) {
    require_field(f, b.field());
    if (b.cols() != cols) throw ShapeError("vstack column counts differ");
    rows += b.rows();
  }
  Matrix m(f, rows, cols);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i) m.set_row(off + i, b.row(i));
    off += b.rows();
  }
  return m;
}

std::optional<std::pair<std::size_t, std::size_t>> first_difference(const Matrix& a, const Matrix& b) {
  Matrix d = a - b;
  std::optional<std::pair<std::size_t, std::size_t>> best;
  for (std::size_t i = 0; i < d.rows(); ++i)
    if (!d.row(i).empty() && (!best || d.row(i).front().col < best->second)) best = {{i, d.row(i).front().col}};
  return best;
}

}  // namespace entwine::exactla
