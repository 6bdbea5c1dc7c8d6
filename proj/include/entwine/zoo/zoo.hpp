#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entwine/entwining/entwining.hpp"

namespace entwine::zoo {

using algcoalg::FiniteAlgebra;
using algcoalg::FiniteCoalgebra;
using algcoalg::LinearMap;
using entwining::EntwiningStructure;
using entwining::GaloisData;
using exactla::FieldSpec;

struct HopfAlgebra {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  LinearMap antipode;
};

// Throws ValidationError unless algebra, coalgebra, bialgebra and antipode axioms hold.
void validate_hopf(const HopfAlgebra& h);

FiniteAlgebra ground_algebra(const FieldSpec& f);
FiniteCoalgebra ground_coalgebra(const FieldSpec& f);
HopfAlgebra ground_hopf(const FieldSpec& f);
// kℤ_n, basis 1, g, g^2, ..., group-like
HopfAlgebra cyclic_group_algebra(const FieldSpec& f, std::size_t n);
// basis 1, g, x, gx; g²=1, x²=0, xg=-gx, Δx = x⊗1 + g⊗x, S(x) = -gx. Needs char ≠ 2.
HopfAlgebra sweedler_h4(const FieldSpec& f);
// k[x]/(x²), basis 1, x
FiniteAlgebra dual_numbers(const FieldSpec& f);

// ψ = flip, C⊗A -> A⊗C
LinearMap trivial_entwining_map(const FiniteAlgebra& a, const FiniteCoalgebra& c);
EntwiningStructure trivial_entwining(const FiniteAlgebra& a, const FiniteCoalgebra& c);

// ψ(c⊗a) = a₁ ⊗ c·a₂ on a space carrying both structures. The map is built for any
// input; the bow-tie holds iff the pair is a bialgebra.
LinearMap self_entwining_map(const FiniteAlgebra& a, const FiniteCoalgebra& c);
EntwiningStructure bialgebra_self_entwining(const FiniteAlgebra& a, const FiniteCoalgebra& c);
// Same ψ, with the Galois data (ρ = Δ, τ(c) = S(c₁)⊗c₂) attached.
EntwiningStructure hopf_self_entwining(const HopfAlgebra& h);

// τ(c) = S(c₁)⊗c₂ : H -> H⊗H
LinearMap translation_map(const HopfAlgebra& h);

// ψ(c⊗a) = a₍₀₎ ⊗ c·a₍₁₎ for a right comodule algebra (A, ρ) over the bialgebra (B, B).
EntwiningStructure comodule_algebra_entwining(const FiniteAlgebra& b_alg, const FiniteCoalgebra& b_coalg,
                                              const FiniteAlgebra& a, const LinearMap& coaction);

// The shipped examples, by name.
std::vector<std::string> fixture_names();
EntwiningStructure fixture(const std::string& name);
std::string fixture_description(const std::string& name);

}  // namespace entwine::zoo
