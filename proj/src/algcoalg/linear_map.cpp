#include "entwine/algcoalg/linear_map.hpp"

#include "entwine/errors.hpp"

namespace entwine::algcoalg {

using exactla::MatrixBuilder;

std::size_t shape_size(const Shape& s) {
  std::size_t n = 1;
  for (auto d : s) n *= d;
  return n;
}

Shape concat(std::initializer_list<Shape> parts) {
  Shape out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

Shape power(const Shape& s, std::size_t n) {
  Shape out;
  for (std::size_t i = 0; i < n; ++i) out.insert(out.end(), s.begin(), s.end());
  return out;
}

std::vector<std::size_t> unflatten(std::size_t index, const Shape& s) {
  std::vector<std::size_t> d(s.size());
  for (std::size_t k = s.size(); k-- > 0;) {
    d[k] = index % s[k];
    index /= s[k];
  }
  return d;
}

std::size_t flatten(const std::vector<std::size_t>& digits, const Shape& s) {
  if (digits.size() != s.size()) throw ShapeError("flatten: digit count differs from shape");
  std::size_t idx = 0;
  for (std::size_t k = 0; k < s.size(); ++k) idx = idx * s[k] + digits[k];
  return idx;
}

std::string shape_string(const Shape& s) {
  if (s.empty()) return "k";
  std::string out;
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? "x" : "") + std::to_string(s[k]);
  return out;
}

LinearMap::LinearMap(Shape domain, Shape codomain, Matrix m)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), m_(std::move(m)) {
  if (m_.cols() != shape_size(domain_) || m_.rows() != shape_size(codomain_))
    throw ShapeError("linear map " + shape_string(domain_) + " -> " + shape_string(codomain_) +
                     " given a " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()) + " matrix");
}

LinearMap LinearMap::identity(const FieldSpec& f, const Shape& s) {
  return LinearMap(s, s, Matrix::identity(f, shape_size(s)));
}

LinearMap LinearMap::zero(const FieldSpec& f, const Shape& domain, const Shape& codomain) {
  return LinearMap(domain, codomain, Matrix(f, shape_size(codomain), shape_size(domain)));
}

LinearMap LinearMap::from_vector(const Shape& codomain, const Vector& v) {
  if (v.empty()) throw ShapeError("from_vector: empty vector");
  return LinearMap({}, codomain, Matrix::from_columns(v[0].field(), v.size(), {v}));
}

LinearMap LinearMap::reshaped(Shape domain, Shape codomain) const { return LinearMap(domain, codomain, m_); }

LinearMap LinearMap::to_field(const FieldSpec& f) const { return LinearMap(domain_, codomain_, m_.to_field(f)); }

Vector LinearMap::flat() const {
  const std::size_t cols = m_.cols();
  Vector v = exactla::zero_vector(m_.field(), m_.rows() * cols);
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (const auto& e : m_.row(i)) v[i * cols + e.col] = e.value;
  return v;
}

LinearMap LinearMap::from_flat(const Shape& domain, const Shape& codomain, const Vector& v) {
  const std::size_t r = shape_size(codomain), c = shape_size(domain);
  if (v.size() != r * c) throw ShapeError("from_flat: vector length does not match the hom space");
  if (v.empty()) return LinearMap(domain, codomain, Matrix(FieldSpec(), r, c));
  return LinearMap(domain, codomain, Matrix::from_dense(v[0].field(), r, c, v));
}

bool operator==(const LinearMap& a, const LinearMap& b) {
  return shape_size(a.domain_) == shape_size(b.domain_) && shape_size(a.codomain_) == shape_size(b.codomain_) &&
         a.m_ == b.m_;
}

LinearMap compose(const LinearMap& f, const LinearMap& g) {
  if (shape_size(f.domain()) != shape_size(g.codomain()))
    throw ShapeError("compose: " + shape_string(f.domain()) + " after " + shape_string(g.codomain()));
  return LinearMap(g.domain(), f.codomain(), f.matrix() * g.matrix());
}

LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  return LinearMap(concat({f.domain(), g.domain()}), concat({f.codomain(), g.codomain()}),
                   exactla::kron(f.matrix(), g.matrix()));
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  return LinearMap(a.domain(), a.codomain(), a.matrix() + b.matrix());
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) {
  return LinearMap(a.domain(), a.codomain(), a.matrix() - b.matrix());
}

LinearMap scaled(const Scalar& s, const LinearMap& f) { return LinearMap(f.domain(), f.codomain(), f.matrix().scaled(s)); }

LinearMap permutation(const FieldSpec& f, const Shape& factors, const std::vector<std::size_t>& perm) {
  if (perm.size() != factors.size()) throw ShapeError("permutation length differs from factor count");
  Shape out(factors.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[perm[i]] = factors[i];
  const std::size_t n = shape_size(factors);
  MatrixBuilder b(f, n, n);
  std::vector<std::size_t> dst(factors.size());
  for (std::size_t x = 0; x < n; ++x) {
    auto src = unflatten(x, factors);
    for (std::size_t i = 0; i < perm.size(); ++i) dst[perm[i]] = src[i];
    b.add(flatten(dst, out), x, Scalar::one(f));
  }
  return LinearMap(factors, out, b.build());
}

LinearMap flip(const FieldSpec& f, const Shape& x, const Shape& y) {
  const std::size_t nx = shape_size(x), ny = shape_size(y);
  MatrixBuilder b(f, nx * ny, nx * ny);
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j) b.add(j * nx + i, i * ny + j, Scalar::one(f));
  return LinearMap(concat({x, y}), concat({y, x}), b.build());
}

}  // namespace entwine::algcoalg
