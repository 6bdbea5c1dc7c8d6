#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <utility>

#include "entwine/algcoalg/structures.hpp"
#include "entwine/algcoalg/validate.hpp"

namespace entwine::entwining {

using algcoalg::Bicomodule;
using algcoalg::Bimodule;
using algcoalg::FiniteAlgebra;
using algcoalg::FiniteCoalgebra;
using algcoalg::LinearMap;
using algcoalg::Shape;
using exactla::FieldSpec;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Vector;

inline constexpr const char* kLeftPentagon = "left pentagon";
inline constexpr const char* kLeftTriangle = "left triangle";
inline constexpr const char* kRightPentagon = "right pentagon";
inline constexpr const char* kRightTriangle = "right triangle";

struct BowTieReport {
  std::array<algcoalg::AxiomCheck, 4> relations;  // in the order of the constants above
  bool ok() const;
  const algcoalg::AxiomCheck* first_failure() const;
};

// psi : C⊗A -> A⊗C, checked against
//   ψ(C⊗μ) = (μ⊗C)(A⊗ψ)(ψ⊗A)        ψ(c⊗1) = 1⊗c
//   (A⊗Δ)ψ = (ψ⊗C)(C⊗ψ)(Δ⊗A)        (A⊗ε)ψ = ε⊗A
BowTieReport check_bowtie(const FiniteAlgebra& a, const FiniteCoalgebra& c, const LinearMap& psi);

// Extra data carried by Hopf-Galois examples: a right C-coaction on A and the
// translation map τ: C -> A⊗A, written τ(c) = c⁽¹⁾⊗c⁽²⁾.
struct GaloisData {
  LinearMap coaction;     // A -> A⊗C
  LinearMap translation;  // C -> A⊗A
};

// Identities τ must satisfy, plus the formula recovering ψ from (ρ, τ).
algcoalg::ValidationReport validate_galois(const FiniteAlgebra& a, const FiniteCoalgebra& c, const LinearMap& psi,
                                           const GaloisData& g);

// A validated entwining structure. Derived maps are cached and shared between copies.
class EntwiningStructure {
 public:
  // Throws ValidationError for a bad algebra/coalgebra/Galois datum, BowTieError for a bad ψ.
  EntwiningStructure(FiniteAlgebra a, FiniteCoalgebra c, LinearMap psi, std::optional<GaloisData> galois = {});
  // Skips the bow-tie check. Diagnostics only: lets check_lemma_system and friends
  // be pointed at a broken psi to see which identity gives way.
  static EntwiningStructure unchecked(FiniteAlgebra a, FiniteCoalgebra c, LinearMap psi);

  const FiniteAlgebra& algebra() const { return a_; }
  const FiniteCoalgebra& coalgebra() const { return c_; }
  const LinearMap& psi() const { return psi_; }
  const std::optional<GaloisData>& galois() const { return galois_; }
  const FieldSpec& field() const { return a_.field; }
  std::size_t dim_a() const { return a_.dim; }
  std::size_t dim_c() const { return c_.dim; }

  // ψ^n : C⊗Aⁿ -> Aⁿ⊗C (n >= 1)
  const LinearMap& psi_up(std::size_t n) const;
  // ψ_n : Cⁿ⊗A -> A⊗Cⁿ (n >= 1)
  const LinearMap& psi_down(std::size_t n) const;
  // ρ^n_R = (C⊗ψ^n)(Δ⊗Aⁿ) : C⊗Aⁿ -> C⊗Aⁿ⊗C, with ρ^0_R = Δ
  const LinearMap& right_coaction(std::size_t n) const;
  // ρ_n^R = (μ⊗Cⁿ)(A⊗ψ_n) : A⊗Cⁿ⊗A -> A⊗Cⁿ, with ρ_0^R = μ
  const LinearMap& right_action(std::size_t n) const;

  EntwiningStructure over_field(const FieldSpec& f) const;

 private:
  struct Cache;
  FiniteAlgebra a_;
  FiniteCoalgebra c_;
  LinearMap psi_;
  std::optional<GaloisData> galois_;
  std::shared_ptr<Cache> cache_;
};

LinearMap psi_up(const EntwiningStructure& e, std::size_t n);
LinearMap psi_down(const EntwiningStructure& e, std::size_t n);

// A⊗Cⁿ with a·(b⊗x) = ab⊗x and (b⊗x)·a = ρ_n^R(b⊗x⊗a). n = 0 gives the regular bimodule.
// The result is validated; a failure means psi is broken.
Bimodule bimodule_on_A_Cn(const EntwiningStructure& e, std::size_t n);
// C⊗Aⁿ with coactions Δ⊗Aⁿ and ρ^n_R. n = 0 gives the regular bicomodule.
Bicomodule bicomodule_on_C_An(const EntwiningStructure& e, std::size_t n);

// The two compatibility squares between ρ^n_R, ρ_n^R and the face maps at position j.
// first: ρ^n_R∘(C⊗A^j⊗μ⊗A^{n-j-1}) = ((C⊗A^j⊗μ⊗A^{n-j-1})⊗C)∘ρ^{n+1}_R, for j < n
// second: ρ_{n+1}^R∘(A⊗C^j⊗Δ⊗C^{n-j-1}⊗A) = (A⊗C^j⊗Δ⊗C^{n-j-1})∘ρ_n^R, for j < n
std::pair<bool, bool> check_lemma_system(const EntwiningStructure& e, std::size_t n, std::size_t j);

// (f *ψ g)(c) = f(c₂)_α g(c₁^α); unit 1∘ε
LinearMap convolution_psi(const EntwiningStructure& e, const LinearMap& f, const LinearMap& g);
LinearMap convolution_unit(const EntwiningStructure& e);

}  // namespace entwine::entwining
