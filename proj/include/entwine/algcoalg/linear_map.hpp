#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "entwine/exactla/matrix.hpp"

namespace entwine::algcoalg {

using exactla::FieldSpec;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Vector;

// Dimensions of the tensor factors, leftmost most significant. {} is the ground field.
using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& s);
Shape concat(std::initializer_list<Shape> parts);
// s repeated n times
Shape power(const Shape& s, std::size_t n);
std::vector<std::size_t> unflatten(std::size_t index, const Shape& s);
std::size_t flatten(const std::vector<std::size_t>& digits, const Shape& s);
std::string shape_string(const Shape& s);

class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(Shape domain, Shape codomain, Matrix m);

  static LinearMap identity(const FieldSpec& f, const Shape& s);
  static LinearMap zero(const FieldSpec& f, const Shape& domain, const Shape& codomain);
  // k -> V picking out v
  static LinearMap from_vector(const Shape& codomain, const Vector& v);

  const Shape& domain() const { return domain_; }
  const Shape& codomain() const { return codomain_; }
  const Matrix& matrix() const { return m_; }
  const FieldSpec& field() const { return m_.field(); }
  std::size_t domain_dim() const { return m_.cols(); }
  std::size_t codomain_dim() const { return m_.rows(); }

  // Same matrix, different bracketing of the factors (sizes must agree).
  LinearMap reshaped(Shape domain, Shape codomain) const;
  LinearMap to_field(const FieldSpec& f) const;

  // Row-major flattening of the matrix; this is how cochains become vectors.
  Vector flat() const;
  static LinearMap from_flat(const Shape& domain, const Shape& codomain, const Vector& v);

  friend bool operator==(const LinearMap& a, const LinearMap& b);

 private:
  Shape domain_, codomain_;
  Matrix m_;
};

// f ∘ g
LinearMap compose(const LinearMap& f, const LinearMap& g);
// f ∘ g ∘ h ∘ ...
template <class... Rest>
LinearMap compose(const LinearMap& f, const LinearMap& g, const LinearMap& h, const Rest&... rest) {
  return compose(f, compose(g, h, rest...));
}
LinearMap tensor(const LinearMap& f, const LinearMap& g);
template <class... Rest>
LinearMap tensor(const LinearMap& f, const LinearMap& g, const LinearMap& h, const Rest&... rest) {
  return tensor(tensor(f, g), h, rest...);
}
LinearMap operator+(const LinearMap& a, const LinearMap& b);
LinearMap operator-(const LinearMap& a, const LinearMap& b);
LinearMap scaled(const Scalar& s, const LinearMap& f);

// Reorders tensor factors: factor i of the domain lands at position perm[i].
LinearMap permutation(const FieldSpec& f, const Shape& factors, const std::vector<std::size_t>& perm);
// X⊗Y -> Y⊗X
LinearMap flip(const FieldSpec& f, const Shape& x, const Shape& y);

}  // namespace entwine::algcoalg
