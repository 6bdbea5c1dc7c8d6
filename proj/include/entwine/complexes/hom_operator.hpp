#pragma once

#include "entwine/algcoalg/linear_map.hpp"

namespace entwine::complexes {

using algcoalg::LinearMap;
using algcoalg::Shape;
using exactla::FieldSpec;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Vector;

// Matrix of the linear map f ↦ post ∘ (X ⊗ f ⊗ Y) ∘ pre on Hom(U, V), with
// cochains flattened row-major (index = out * dim(domain) + in).
//   pre  : U' -> X⊗U⊗Y
//   post : X⊗V⊗Y -> V'
// Result has shape (dim V'·dim U') × (dim V·dim U).
Matrix hom_operator(const LinearMap& post, std::size_t x, std::size_t u, std::size_t v, std::size_t y,
                    const LinearMap& pre);

// f ↦ f ∘ pre
Matrix precompose(const LinearMap& pre, std::size_t v);
// f ↦ post ∘ f
Matrix postcompose(const LinearMap& post, std::size_t u);

}  // namespace entwine::complexes
