#pragma once

#include <string>
#include <vector>

#include "entwine/algcoalg/linear_map.hpp"

namespace entwine::algcoalg {

// e_i · e_j has coefficient `coeff` on e_k (algebra), or Δ(e_i) has `coeff` on e_j⊗e_k.
struct StructureTriple {
  std::size_t i, j, k;
  Scalar coeff;
};

std::vector<std::string> default_labels(const std::string& stem, std::size_t n);

struct FiniteAlgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  LinearMap mult;  // A⊗A -> A
  Vector unit;     // 1 in the basis

  static FiniteAlgebra from_triples(const FieldSpec& f, std::size_t dim, std::vector<std::string> labels,
                                    const std::vector<StructureTriple>& mult, Vector unit);
  Shape shape() const { return {dim}; }
  LinearMap unit_map() const;  // k -> A
  FiniteAlgebra to_field(const FieldSpec& f) const;
};

struct FiniteCoalgebra {
  FieldSpec field;
  std::size_t dim = 0;
  std::vector<std::string> labels;
  LinearMap comult;  // C -> C⊗C
  Vector counit;     // ε(e_i)

  static FiniteCoalgebra from_triples(const FieldSpec& f, std::size_t dim, std::vector<std::string> labels,
                                      const std::vector<StructureTriple>& comult, Vector counit);
  Shape shape() const { return {dim}; }
  LinearMap counit_map() const;  // C -> k
  FiniteCoalgebra to_field(const FieldSpec& f) const;
};

struct Bimodule {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  LinearMap left;   // A⊗M -> M
  LinearMap right;  // M⊗A -> M
};

struct Bicomodule {
  std::size_t dim = 0;
  std::vector<std::string> labels;
  LinearMap left;   // V -> C⊗V
  LinearMap right;  // V -> V⊗C
};

Bimodule regular_bimodule(const FiniteAlgebra& a);
// A⊗A with a·(x⊗y)·b = ax⊗yb
Bimodule free_bimodule(const FiniteAlgebra& a);
Bicomodule regular_bicomodule(const FiniteCoalgebra& c);
// C⊗C with coactions Δ⊗C and C⊗Δ
Bicomodule free_bicomodule(const FiniteCoalgebra& c);

}  // namespace entwine::algcoalg
