#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entwine/complexes/complexes.hpp"
#include "entwine/entwining/entwining.hpp"

namespace entwine::compalg {

using algcoalg::LinearMap;
using algcoalg::Shape;
using entwining::EntwiningStructure;
using exactla::FieldSpec;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Vector;

// algebra: Hom(C⊗Aᵐ, A) with π = ε⊗μ.  coalgebra: Hom(C, A⊗Cᵐ) with π = 1⊗Δ.
enum class Side : std::uint8_t { Algebra, Coalgebra };
const char* side_name(Side s);

struct Cochain {
  Side side = Side::Algebra;
  std::size_t degree = 0;
  LinearMap map;

  Vector flat() const { return map.flat(); }
};

class CompContext {
 public:
  // Checks π◇₀π = π◇₁π and throws InternalConsistencyError if it fails.
  CompContext(EntwiningStructure e, Side side);

  const EntwiningStructure& entwining() const { return e_; }
  Side side() const { return side_; }
  const FieldSpec& field() const { return e_.field(); }
  const Cochain& pi() const { return pi_; }

  Shape domain(std::size_t m) const;
  Shape codomain(std::size_t m) const;
  std::size_t dim(std::size_t m) const;  // of the cochain space

  Cochain zero(std::size_t m) const;
  Cochain from_flat(std::size_t m, const Vector& v) const;
  Cochain basis(std::size_t m, std::size_t k) const;
  // Wraps a map, checking its shape against the side and degree.
  Cochain wrap(std::size_t m, const LinearMap& f) const;

  // Differential of C_ψ(A,A) (regular bimodule) or A_ψ(C,C) (regular bicomodule), cached.
  const Matrix& complex_differential(std::size_t m) const;

 private:
  struct Cache;
  EntwiningStructure e_;
  Side side_;
  Cochain pi_;
  std::shared_ptr<Cache> cache_;
};

// Throws PreconditionError when the side of a cochain differs from the context.
Cochain comp_i(const CompContext& ctx, const Cochain& f, std::size_t i, const Cochain& g);
// Σ_{i<m} (-1)^{i(n-1)} f◇ᵢg. For m = 0 this is the zero cochain of degree n-1.
Cochain diamond(const CompContext& ctx, const Cochain& f, const Cochain& g);

// Both routes are computed; InternalConsistencyError if they disagree.
Cochain cup(const CompContext& ctx, const Cochain& f, const Cochain& g);
Cochain sqcup(const CompContext& ctx, const Cochain& f, const Cochain& g);
// The closed formulas alone.
Cochain cup_direct(const CompContext& ctx, const Cochain& f, const Cochain& g);
Cochain sqcup_direct(const CompContext& ctx, const Cochain& f, const Cochain& g);

// (-1)^{m-1} π◇f - f◇π, checked against the complex differential.
Cochain coboundary(const CompContext& ctx, const Cochain& f);

// ---- reports ----

struct CheckResult {
  CheckResult() = default;
  explicit CheckResult(std::string n) : name(std::move(n)) {}

  std::string name;
  bool ok = true;
  std::size_t cases = 0;  // tuples or monomials covered
  std::string witness;    // first violation
};

struct Report {
  std::vector<CheckResult> checks;
  bool ok() const;
  const CheckResult* first_failure() const;
};

// Definition of a weak comp algebra, conditions (1)-(4), for all degrees <= degree_cap (<= 3).
// Condition (3) uses `special` in place of π when given, which is how one sees it is
// a genuine restriction.
Report verify_weak_comp(const CompContext& ctx, std::size_t degree_cap,
                        const std::optional<Cochain>& special = {});

// The associator formula when one of f, g, h is π, the π-associator symmetry and
// the homotopy formula relating ◇, d and the two cups.
Report check_prelie_identities(const CompContext& ctx, const Cochain& f, const Cochain& g, const Cochain& h);

// d(f∪g) = df∪g + (-1)^m f∪dg and the same for ⊔, every pair of basis cochains with m+n <= max_total.
Report check_derivation_exhaustive(const CompContext& ctx, std::size_t max_total);
// The homotopy formula for every basis pair with m+n <= max_total.
Report check_homotopy_formula_exhaustive(const CompContext& ctx, std::size_t max_total);

struct PairResult {
  std::size_t m = 0, n = 0, xi = 0, eta = 0;  // degrees and class indices
  bool ok = false;
};
struct CommutativityReport {
  std::vector<PairResult> pairs;
  bool ok() const;
};
// For class representatives ξ ∈ Hᵐ, η ∈ Hⁿ of the complex attached to ctx, solves
// d x = ξ∪η - (-1)^{mn} η⊔ξ. Needs cohomology up to degree m+n.
CommutativityReport graded_commutativity(const CompContext& ctx, const complexes::CochainComplex& cx,
                                         std::size_t m, std::size_t n);

// ---- equivariant cochains (algebra side) ----

// f ↦ (f⊗C)ρⁿ_R - ψ(C⊗f)(Δ⊗Aⁿ)
Matrix equivariance_operator(const CompContext& ctx, std::size_t n);
std::vector<Cochain> equivariant_basis(const CompContext& ctx, std::size_t n);
bool is_equivariant(const CompContext& ctx, const Cochain& f);

// f ↦ f∪τ - τ*f with values in the bimodule A⊗A. Needs the translation map.
Matrix translation_criterion_operator(const CompContext& ctx, std::size_t n);
// Both solution spaces have the same dimension and contain each other, degrees 0..n_max.
Report translation_criterion_check(const CompContext& ctx, std::size_t n_max);

// Closure under ◇ᵢ and d, ∪ = ⊔, commutativity of equivariant classes.
Report equivariant_checks(const CompContext& ctx, std::size_t degree_cap);

}  // namespace entwine::compalg
