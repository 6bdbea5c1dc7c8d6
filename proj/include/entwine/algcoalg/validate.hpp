#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entwine/algcoalg/structures.hpp"

namespace entwine::algcoalg {

struct AxiomCheck {
  std::string axiom;
  bool passed = true;
  std::string witness;  // first failing basis tensor, e.g. "g⊗g⊗x"
};

struct ValidationReport {
  std::string subject;
  std::vector<AxiomCheck> checks;

  bool ok() const;
  const AxiomCheck* first_failure() const;
  std::string summary() const;
};

// Compares lhs and rhs; on mismatch names the first differing domain basis element.
AxiomCheck compare_maps(const std::string& axiom, const LinearMap& lhs, const LinearMap& rhs,
                        const std::vector<std::vector<std::string>>& factor_labels);
std::string basis_label(std::size_t index, const Shape& shape, const std::vector<std::vector<std::string>>& labels);

ValidationReport validate_algebra(const FiniteAlgebra& a);
ValidationReport validate_coalgebra(const FiniteCoalgebra& c);
ValidationReport validate_bimodule(const FiniteAlgebra& a, const Bimodule& m);
ValidationReport validate_bicomodule(const FiniteCoalgebra& c, const Bicomodule& v);
// Δ and ε are algebra maps (for zoo's Hopf algebras).
ValidationReport validate_bialgebra(const FiniteAlgebra& a, const FiniteCoalgebra& c);
ValidationReport validate_antipode(const FiniteAlgebra& a, const FiniteCoalgebra& c, const LinearMap& s);

// Throws ValidationError carrying the summary if the report has a failure.
void require(const ValidationReport& r);

}  // namespace entwine::algcoalg
