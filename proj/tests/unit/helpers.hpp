#pragma once

#include <random>

#include "entwine/zoo/zoo.hpp"

namespace testing_util {

using namespace entwine;
using algcoalg::LinearMap;
using algcoalg::Shape;
using exactla::FieldSpec;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Vector;

inline const FieldSpec Q;

inline Vector ints(std::initializer_list<long> xs, const FieldSpec& f = Q) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

inline Vector unit_vector(std::size_t n, std::size_t i, const FieldSpec& f = Q) {
  Vector v = exactla::zero_vector(f, n);
  v[i] = Scalar::one(f);
  return v;
}

// Image of the basis vector with the given digits, as a vector in the codomain.
inline Vector eval(const LinearMap& m, const std::vector<std::size_t>& digits) {
  return m.matrix().column(algcoalg::flatten(digits, m.domain()));
}

inline Vector at_digits(const Shape& s, const std::vector<std::size_t>& digits, const FieldSpec& f = Q) {
  return unit_vector(algcoalg::shape_size(s), algcoalg::flatten(digits, s), f);
}

inline LinearMap random_map(std::mt19937_64& rng, const Shape& dom, const Shape& cod, const FieldSpec& f = Q) {
  std::vector<Scalar> xs;
  std::size_t n = algcoalg::shape_size(dom) * algcoalg::shape_size(cod);
  for (std::size_t i = 0; i < n; ++i) xs.emplace_back(f, static_cast<long>(rng() % 5) - 2);
  return LinearMap(dom, cod, Matrix::from_dense(f, algcoalg::shape_size(cod), algcoalg::shape_size(dom), xs));
}

// Every basis element of Hom(dom, cod) as a map.
inline std::vector<LinearMap> hom_basis(const Shape& dom, const Shape& cod, const FieldSpec& f = Q) {
  std::vector<LinearMap> out;
  std::size_t n = algcoalg::shape_size(dom) * algcoalg::shape_size(cod);
  for (std::size_t i = 0; i < n; ++i) out.push_back(LinearMap::from_flat(dom, cod, unit_vector(n, i, f)));
  return out;
}

}  // namespace testing_util
