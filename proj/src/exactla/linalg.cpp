#include "entwine/exactla/linalg.hpp"

#include <algorithm>
#include <string>

#include "entwine/errors.hpp"

namespace entwine::exactla {

namespace {

// r -= s * p, both sorted sparse rows
void axpy_row(SparseRow& r, const Scalar& s, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].col < p[j].col)) {
      out.push_back(std::move(r[i++]));
    } else if (i == r.size() || p[j].col < r[i].col) {
      out.push_back({p[j].col, -(s * p[j].value)});
      ++j;
    } else {
      Scalar v = r[i].value - s * p[j].value;
      if (!v.is_zero()) out.push_back({r[i].col, std::move(v)});
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

const Scalar* lookup(const SparseRow& r, std::uint32_t c) {
  auto it = std::lower_bound(r.begin(), r.end(), c, [](const Entry& e, std::uint32_t k) { return e.col < k; });
  return (it != r.end() && it->col == c) ? &it->value : nullptr;
}

}  // namespace

SparseRow to_sparse(const Vector& v) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) r.push_back({static_cast<std::uint32_t>(i), v[i]});
  return r;
}

Vector to_dense(const FieldSpec& f, const SparseRow& r, std::size_t n) {
  Vector v = zero_vector(f, n);
  for (const auto& e : r) v[e.col] = e.value;
  return v;
}

RowEchelon::RowEchelon(const FieldSpec& f, std::size_t cols) : field_(f), cols_(cols) {}

SparseRow RowEchelon::remainder(const SparseRow& row) const {
  // Pivot rows vanish on every other pivot column, so the coefficient needed for
  // pivot c is just the original entry of row at c.
  if (scratch_.size() != cols_) {
    scratch_.assign(cols_, Scalar::zero(field_));
    used_.assign(cols_, 0);
  }
  auto touch = [&](std::uint32_t c) -> Scalar& {
    if (!used_[c]) {
      used_[c] = 1;
      touched_.push_back(c);
    }
    return scratch_[c];
  };
  for (const auto& e : row) touch(e.col) += e.value;
  for (const auto& e : row) {
    auto it = pivots_.find(e.col);
    if (it == pivots_.end()) continue;
    Scalar s = -e.value;
    for (const auto& p : it->second) touch(p.col).add_product(s, p.value);
  }
  std::sort(touched_.begin(), touched_.end());
  SparseRow r;
  for (auto c : touched_) {
    if (!scratch_[c].is_zero()) r.push_back({c, scratch_[c]});
    scratch_[c] = Scalar::zero(field_);
    used_[c] = 0;
  }
  touched_.clear();
  return r;
}

bool RowEchelon::insert(const SparseRow& row) {
  for (const auto& e : row) {
    if (e.col >= cols_) throw ShapeError("row longer than echelon width");
    if (!(e.value.field() == field_)) throw FieldMismatchError("echelon field mismatch");
  }
  SparseRow r = remainder(row);
  if (r.empty()) return false;
  Scalar inv = r.front().value.inverse();
  for (auto& e : r) e.value *= inv;
  std::uint32_t c = r.front().col;
  for (auto& [pc, prow] : pivots_) {
    if (const Scalar* s = lookup(prow, c)) {
      Scalar f = *s;
      axpy_row(prow, f, r);
    }
  }
  pivots_.emplace(c, std::move(r));
  return true;
}

bool RowEchelon::insert(const Vector& v) {
  if (v.size() != cols_) throw ShapeError("vector length differs from echelon width");
  return insert(to_sparse(v));
}

bool RowEchelon::in_span(const Vector& v) const {
  if (v.size() != cols_) throw ShapeError("vector length differs from echelon width");
  return remainder(to_sparse(v)).empty();
}

RowEchelon row_echelon(const Matrix& m) {
  RowEchelon e(m.field(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) e.insert(m.row(i));
  return e;
}

std::size_t rank(const Matrix& m) {
  // eliminate along the shorter side
  return m.rows() <= m.cols() ? row_echelon(m).rank() : row_echelon(m.transpose()).rank();
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<Vector> out;
  for (std::uint32_t f = 0; f < m.cols(); ++f) {
    if (e.pivots().count(f)) continue;
    Vector v = zero_vector(m.field(), m.cols());
    v[f] = Scalar::one(m.field());
    for (const auto& [pc, prow] : e.pivots())
      if (const Scalar* s = lookup(prow, f)) v[pc] = -*s;
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Vector> image_basis(const Matrix& m) {
  RowEchelon e = row_echelon(m);
  std::vector<Vector> out;
  for (const auto& [pc, prow] : e.pivots()) out.push_back(m.column(pc));
  return out;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side has wrong length");
  const auto n = static_cast<std::uint32_t>(m.cols());
  RowEchelon e(m.field(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow r = m.row(i);
    if (!b[i].is_zero()) r.push_back({n, b[i]});
    e.insert(r);
  }
  if (e.pivots().count(n)) return std::nullopt;
  Vector x = zero_vector(m.field(), m.cols());
  for (const auto& [pc, prow] : e.pivots())
    if (const Scalar* s = lookup(prow, n)) x[pc] = *s;
  return x;
}

bool in_span(const std::vector<Vector>& vs, const Vector& v, std::size_t ambient_dim) {
  RowEchelon e(v.empty() ? FieldSpec() : v[0].field(), ambient_dim);
  for (const auto& w : vs) e.insert(w);
  return e.in_span(v);
}

QuotientMap::QuotientMap(const FieldSpec& f, std::size_t ambient_dim, std::vector<Vector> sub_basis,
                         std::vector<Vector> class_basis)
    : field_(f), ambient_(ambient_dim), sub_basis_(std::move(sub_basis)), class_basis_(std::move(class_basis)) {
  const std::size_t k = sub_basis_.size() + class_basis_.size();
  // pick k rows of K = [sub | class] that are independent
  RowEchelon rowsel(f, k);
  for (std::size_t i = 0; i < ambient_ && rows_.size() < k; ++i) {
    SparseRow r;
    std::uint32_t j = 0;
    for (const auto* part : {&sub_basis_, &class_basis_})
      for (const auto& v : *part) {
        if (!v[i].is_zero()) r.push_back({j, v[i]});
        ++j;
      }
    if (rowsel.insert(r)) rows_.push_back(i);
  }
  if (rows_.size() != k) throw InternalConsistencyError("quotient basis is not independent");
  // invert the k x k block by eliminating [block | I]
  RowEchelon inv(f, 2 * k);
  for (std::size_t a = 0; a < k; ++a) {
    SparseRow r;
    std::uint32_t j = 0;
    for (const auto* part : {&sub_basis_, &class_basis_})
      for (const auto& v : *part) {
        if (!v[rows_[a]].is_zero()) r.push_back({j, v[rows_[a]]});
        ++j;
      }
    r.push_back({static_cast<std::uint32_t>(k + a), Scalar::one(f)});
    inv.insert(r);
  }
  MatrixBuilder b(f, k, k);
  for (const auto& [pc, prow] : inv.pivots())
    for (const auto& e : prow)
      if (e.col >= k) b.add(pc, e.col - k, e.value);
  inverse_ = b.build();
}

Vector QuotientMap::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw ShapeError("reduce: vector has wrong length");
  const std::size_t k = rows_.size();
  Vector picked = zero_vector(field_, k);
  for (std::size_t a = 0; a < k; ++a) picked[a] = v[rows_[a]];
  Vector x = k ? inverse_.apply(picked) : Vector{};
  // v must be reproduced exactly, otherwise it was outside span(big)
  Vector back = zero_vector(field_, ambient_);
  std::size_t j = 0;
  for (const auto* part : {&sub_basis_, &class_basis_})
    for (const auto& w : *part) {
      if (!x[j].is_zero())
        for (std::size_t i = 0; i < ambient_; ++i) back[i].add_product(x[j], w[i]);
      ++j;
    }
  for (std::size_t i = 0; i < ambient_; ++i)
    if (!(back[i] == v[i])) throw InconsistentQuotientError("reduce: vector is not in the spanning space");
  return Vector(x.begin() + static_cast<std::ptrdiff_t>(sub_basis_.size()), x.end());
}

QuotientMap quotient_with_projection(const std::vector<Vector>& sub, const std::vector<Vector>& big,
                                     std::size_t ambient_dim) {
  FieldSpec f;
  for (const auto* part : {&sub, &big})
    if (!part->empty() && !(*part)[0].empty()) f = (*part)[0][0].field();
  for (const auto* part : {&sub, &big})
    for (const auto& v : *part) {
      if (v.size() != ambient_dim) throw ShapeError("quotient: vector has wrong length");
      if (!v.empty() && !(v[0].field() == f)) throw FieldMismatchError("quotient: mixed fields");
    }
  RowEchelon eb(f, ambient_dim);
  for (const auto& v : big) eb.insert(v);
  for (std::size_t i = 0; i < sub.size(); ++i)
    if (!eb.in_span(sub[i]))
      throw InconsistentQuotientError("quotient: sub vector " + std::to_string(i) + " is not in span(big)");
  RowEchelon e(f, ambient_dim);
  std::vector<Vector> sub_basis, class_basis;
  for (const auto& v : sub)
    if (e.insert(v)) sub_basis.push_back(v);
  for (const auto& v : big)
    if (e.insert(v)) class_basis.push_back(v);
  return QuotientMap(f, ambient_dim, std::move(sub_basis), std::move(class_basis));
}

}  // namespace entwine::exactla
