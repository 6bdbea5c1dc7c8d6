#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entwine/complexes/hom_operator.hpp"
#include "entwine/entwining/entwining.hpp"
#include "entwine/exactla/linalg.hpp"

namespace entwine::complexes {

using algcoalg::Bicomodule;
using algcoalg::Bimodule;
using algcoalg::FiniteAlgebra;
using algcoalg::FiniteCoalgebra;
using entwining::EntwiningStructure;

// Degree-n cochains are maps domain(n) -> codomain(n), flattened row-major.
struct CochainShape {
  Shape domain, codomain;
  std::size_t dim() const { return algcoalg::shape_size(domain) * algcoalg::shape_size(codomain); }
};

class CochainComplex {
 public:
  CochainComplex() = default;
  // differentials[n] maps degree n to degree n+1. Throws InternalConsistencyError if some d∘d ≠ 0.
  CochainComplex(FieldSpec f, std::vector<CochainShape> shapes, std::vector<Matrix> differentials,
                 std::string name = "");

  const std::string& name() const { return name_; }
  const FieldSpec& field() const { return field_; }
  // highest degree with a stored space
  std::size_t max_degree() const { return shapes_.size() - 1; }
  std::size_t dim(std::size_t n) const { return shapes_.at(n).dim(); }
  const CochainShape& shape(std::size_t n) const { return shapes_.at(n); }
  const Matrix& differential(std::size_t n) const;
  std::size_t num_differentials() const { return d_.size(); }

  LinearMap as_map(std::size_t n, const Vector& v) const;
  Vector apply(std::size_t n, const Vector& v) const { return differential(n).apply(v); }

 private:
  FieldSpec field_;
  std::string name_;
  std::vector<CochainShape> shapes_;
  std::vector<Matrix> d_;
};

struct CohomologyResult {
  std::size_t degree = 0;
  std::size_t betti = 0;
  std::vector<Vector> cocycle_basis;
  std::vector<Vector> coboundary_basis;
  std::vector<Vector> class_reps;
  exactla::QuotientMap quotient;
  Matrix previous;  // d^{n-1}, zero for n = 0

  // Class coordinates of a cocycle; throws InconsistentQuotientError for non-cocycles.
  Vector reduce(const Vector& z) const { return quotient.reduce(z); }
  // Some x with d^{n-1} x = v, or nothing.
  std::optional<Vector> coboundary_preimage(const Vector& v) const { return exactla::solve(previous, v); }
};

// Hⁿ = ker dⁿ / im dⁿ⁻¹. Needs n < cx.num_differentials().
CohomologyResult cohomology(const CochainComplex& cx, std::size_t n);

// ---- C_ψ(A, M): Hom(C⊗Aⁿ, M) ----

// dⁿf(c, a¹..aⁿ⁺¹) = a¹_α f(c^α, a²..) + Σ (-1)^i f(.., aⁱaⁱ⁺¹, ..) + (-1)ⁿ⁺¹ f(c, a¹..aⁿ)aⁿ⁺¹
Matrix differential_CpsiAM(const EntwiningStructure& e, const Bimodule& m, std::size_t n);
CochainShape shape_CpsiAM(const EntwiningStructure& e, const Bimodule& m, std::size_t n);
// Spaces 0..n_max, differentials 0..n_max-1.
CochainComplex build_CpsiAM(const EntwiningStructure& e, const Bimodule& m, std::size_t n_max);

// ---- A_ψ(C, V): Hom(V, A⊗Cⁿ) ----

// d̄ⁿf = (ψ⊗Cⁿ)(C⊗f)ᵛρ + Σ (-1)^k (A⊗C^{k-1}⊗Δ⊗C^{n-k}) f + (-1)ⁿ⁺¹ (f⊗C)ρᵛ
Matrix differential_ApsiCV(const EntwiningStructure& e, const Bicomodule& v, std::size_t n);
CochainShape shape_ApsiCV(const EntwiningStructure& e, const Bicomodule& v, std::size_t n);
CochainComplex build_ApsiCV(const EntwiningStructure& e, const Bicomodule& v, std::size_t n_max);

// ---- classical complexes ----

// Hom(Aⁿ, M) with the Hochschild differential
Matrix hochschild_differential(const FiniteAlgebra& a, const Bimodule& m, std::size_t n);
CochainComplex hochschild_complex(const FiniteAlgebra& a, const Bimodule& m, std::size_t n_max);
// Hom(V, Cⁿ) with the Cartier differential
Matrix cartier_differential(const FiniteCoalgebra& c, const Bicomodule& v, std::size_t n);
CochainComplex cartier_complex(const FiniteCoalgebra& c, const Bicomodule& v, std::size_t n_max);

// jⁿ: Hom(Aⁿ, M) -> Hom(C⊗Aⁿ, M), f ↦ ε⊗f
LinearMap hochschild_inclusion(const EntwiningStructure& e, const LinearMap& f);
Matrix hochschild_inclusion_matrix(const EntwiningStructure& e, std::size_t m_dim, std::size_t n);
// j̄ⁿ: Hom(V, Cⁿ) -> Hom(V, A⊗Cⁿ), f ↦ 1⊗f
LinearMap cartier_inclusion(const EntwiningStructure& e, const LinearMap& f);
Matrix cartier_inclusion_matrix(const EntwiningStructure& e, std::size_t v_dim, std::size_t n);

// χ: C -> A⊗A with d⁰χ = 0 in C_ψ(A, A⊗A) (outer actions) and μ∘χ = 1∘ε.
std::optional<LinearMap> projectivity_witness(const EntwiningStructure& e);

// Hom(C, M) with (a·f)(c) = a_α f(c^α) and (f·a)(c) = f(c)a. Flattened like a cochain.
Bimodule hom_CM_bimodule(const EntwiningStructure& e, const Bimodule& m);

// hⁿ(f)(c, a¹..aⁿ⁻¹) = c⁽¹⁾1₍₀₎ · f(1₍₁₎, c⁽²⁾, a¹..aⁿ⁻¹), degree n -> n-1, n >= 1.
// Needs the Galois data (coaction and translation map). Throws PreconditionError otherwise.
Matrix hopf_contracting_homotopy(const EntwiningStructure& e, const Bimodule& m, std::size_t n);

// Basis of {φ ∈ Hom(C, A) : a_α φ(c^α) = φ(c) a}, solved directly from structure constants.
std::vector<Vector> h0_characterization(const EntwiningStructure& e);

// ---- ψ-twisted bar and cobar resolutions ----

// Bar_n = A⊗C⊗Aⁿ⁺¹, δ_n : Bar_n -> Bar_{n-1} (n >= 1)
LinearMap bar_psi_differential(const EntwiningStructure& e, std::size_t n);
// h_n = (-1)ⁿ (x ↦ x⊗1) : Bar_n -> Bar_{n+1}
LinearMap bar_psi_homotopy(const EntwiningStructure& e, std::size_t n);
// Cob^n = C⊗A⊗Cⁿ⁺¹, δ̄^n : Cob^n -> Cob^{n+1}
LinearMap cobar_psi_differential(const EntwiningStructure& e, std::size_t n);
// h^n = (-1)ⁿ⁺¹ (C⊗A⊗Cⁿ⊗ε) : Cob^n -> Cob^{n-1} (n >= 1)
LinearMap cobar_psi_homotopy(const EntwiningStructure& e, std::size_t n);

}  // namespace entwine::complexes
