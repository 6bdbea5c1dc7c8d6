#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entwine/compalg/compalg.hpp"
#include "entwine/complexes/complexes.hpp"

namespace entwine::deform {

using algcoalg::LinearMap;
using compalg::CheckResult;
using compalg::Report;
using complexes::CochainComplex;
using complexes::CohomologyResult;
using entwining::EntwiningStructure;
using exactla::Matrix;
using exactla::Vector;

// C^{m,n} = Hom(C⊗Aᵐ, A⊗Cⁿ) for 0 <= m <= m_max, 0 <= n <= n_max.
// horizontal(m, n) : C^{m,n} -> C^{m+1,n} (needs m < m_max), vertical(m, n) : C^{m,n} -> C^{m,n+1}.
struct DoubleComplexGrid {
  std::size_t m_max = 0, n_max = 0;
  std::vector<std::vector<std::size_t>> dims;
  std::vector<std::vector<Matrix>> d, dbar;

  std::size_t dim(std::size_t m, std::size_t n) const { return dims.at(m).at(n); }
  const Matrix& horizontal(std::size_t m, std::size_t n) const { return d.at(m).at(n); }
  const Matrix& vertical(std::size_t m, std::size_t n) const { return dbar.at(m).at(n); }
};

// Throws InternalConsistencyError if d², d̄² or dd̄ - d̄d is nonzero somewhere. Caps <= 3.
DoubleComplexGrid build_double_complex(const EntwiningStructure& e, std::size_t m_max, std::size_t n_max);

// One summand of C_H^N.
struct Block {
  enum class Kind { Hochschild, Interior, Cartier } kind;
  std::size_t m, n;  // grid position, m + n = N
  std::size_t offset, dim;
};

struct TotalComplex {
  CochainComplex complex;                 // spaces 0..n_max+1, D^0..D^{n_max}
  std::vector<std::vector<Block>> blocks;  // blocks[N] in the order Hochschild, (N-1,1), ..., Cartier

  std::size_t dim(std::size_t n) const { return complex.dim(n); }
  const Matrix& D(std::size_t n) const { return complex.differential(n); }
};

// C_H: Hochschild complex of A on the bottom row, Cartier complex of C on the left
// column, the grid elsewhere, D = d + (-1)^m d̄. C_H^0 = 0. Needs n_max <= 3;
// cohomology is then available up to degree n_max. Throws InternalConsistencyError if D² ≠ 0.
TotalComplex build_CH(const EntwiningStructure& e, std::size_t n_max);
// dim Hom(Aⁿ,A) + Σ_{k=1}^{n-1} dim Hom(C⊗A^{n-k}, A⊗C^k) + dim Hom(C,Cⁿ), zero for n = 0.
std::size_t CH_dimension_formula(const EntwiningStructure& e, std::size_t n);

CohomologyResult total_cohomology(const TotalComplex& tc, std::size_t n);

struct InfinitesimalDeformation {
  LinearMap mu1;     // A⊗A -> A
  LinearMap delta1;  // C -> C⊗C
  LinearMap psi1;    // C⊗A -> A⊗C
};

// z = (z_μ, z_ψ, z_Δ) ∈ C_H² gives μ¹ = z_μ, ψ¹ = -z_ψ, Δ¹ = -z_Δ.
InfinitesimalDeformation deformation_from_cochain(const EntwiningStructure& e, const TotalComplex& tc,
                                                  const Vector& z);
// First-order parts of associativity, unit, coassociativity, counit and the four
// bow-tie relations. Unit and counit are allowed to move: 1 + t·u¹ with u¹ = -μ¹(1⊗1),
// ε + t·ε¹ with ε¹ = -(ε⊗ε)Δ¹.
Report first_order_checks(const EntwiningStructure& e, const InfinitesimalDeformation& d);
// deformation_from_cochain plus first_order_checks; throws CocycleViolationError on failure.
InfinitesimalDeformation deformation_from_cocycle(const EntwiningStructure& e, const TotalComplex& tc,
                                                  const Vector& z);

struct Equivalence {
  LinearMap alpha1;  // A -> A
  LinearMap gamma1;  // C -> C
  Report checks;
};
// Some w ∈ C_H¹ with D w = z, or nothing.
std::optional<Vector> coboundary_witness(const TotalComplex& tc, const Vector& z);
// Needs D w = z (PreconditionError otherwise). α_t = id + tα¹, γ_t = id + tγ¹ with
// (α¹, γ¹) = w, checked to first order to carry the z-deformation onto e.
Equivalence coboundary_equivalence(const EntwiningStructure& e, const TotalComplex& tc, const Vector& z,
                                   const Vector& w);

}  // namespace entwine::deform
