#include "entwine/complexes/hom_operator.hpp"

#include "entwine/errors.hpp"

namespace entwine::complexes {

Matrix hom_operator(const LinearMap& post, std::size_t x, std::size_t u, std::size_t v, std::size_t y,
                    const LinearMap& pre) {
  if (pre.codomain_dim() != x * u * y) throw ShapeError("hom_operator: pre does not land in X⊗U⊗Y");
  if (post.domain_dim() != x * v * y) throw ShapeError("hom_operator: post does not start at X⊗V⊗Y");
  const FieldSpec& f = post.field();
  const std::size_t u_out = pre.domain_dim(), v_out = post.codomain_dim();
  const Matrix& q = pre.matrix();
  const auto post_cols = post.matrix().columns();  // entry.col holds the row index here
  exactla::MatrixBuilder b(f, v_out * u_out, v * u);
  Scalar prod = Scalar::zero(f);
  for (std::size_t xi = 0; xi < x; ++xi)
    for (std::size_t yi = 0; yi < y; ++yi)
      for (std::size_t ui = 0; ui < u; ++ui) {
        const auto& qrow = q.row((xi * u + ui) * y + yi);
        if (qrow.empty()) continue;
        for (std::size_t vi = 0; vi < v; ++vi) {
          const auto& pcol = post_cols[(xi * v + vi) * y + yi];
          for (const auto& pe : pcol)
            for (const auto& qe : qrow) {
              prod = pe.value;
              prod *= qe.value;
              b.add(pe.col * u_out + qe.col, vi * u + ui, prod);
            }
        }
      }
  return b.build();
}

Matrix precompose(const LinearMap& pre, std::size_t v) {
  return hom_operator(LinearMap::identity(pre.field(), {v}), 1, pre.codomain_dim(), v, 1, pre);
}

Matrix postcompose(const LinearMap& post, std::size_t u) {
  return hom_operator(post, 1, u, post.domain_dim(), 1, LinearMap::identity(post.field(), {u}));
}

}  // namespace entwine::complexes
