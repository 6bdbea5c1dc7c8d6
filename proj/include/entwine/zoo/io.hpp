#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "entwine/zoo/zoo.hpp"
#include "json.hpp"

namespace entwine::zoo {

// Everything a structure file holds, before the bow-tie is checked.
struct StructureData {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  LinearMap psi;
  std::optional<GaloisData> galois;
};

// File layout (JSON):
//   field      "Q" or "Fp:<p>"
//   algebra    {dim, labels, mult: [[i, j, k, "c"], ...], unit: ["c", ...]}     e_i e_j = Σ c e_k
//   coalgebra  {dim, labels, comult: [[i, j, k, "c"], ...], counit: ["c", ...]} Δ e_i = Σ c e_j⊗e_k
//   psi        [[row, col, "c"], ...]  row indexes A⊗C, col indexes C⊗A, leftmost factor most significant
//   galois     optional {coaction: [[row, col, "c"]], translation: [[row, col, "c"]]}
// Coefficients are strings "a" or "a/b".

// Syntax, shapes, indices and coefficients only; no axiom is checked.
// ParseError carries a location: "line L, column C" for syntax, a JSON pointer for content.
StructureData parse_structure_raw(const std::string& text);
// parse_structure_raw plus full validation: ValidationError for the algebra, coalgebra
// or Galois data, BowTieError naming the failing relation.
EntwiningStructure parse_structure(const std::string& text);

// Canonical form: fixed key order, entries sorted, zeros dropped, coefficients in lowest terms.
std::string to_text(const StructureData& s);
std::string to_text(const EntwiningStructure& e);

// File errors are ParseErrors located at the path.
StructureData load_raw(const std::filesystem::path& path);
EntwiningStructure load(const std::filesystem::path& path);
void save(const EntwiningStructure& e, const std::filesystem::path& path);

// Coefficient modules for cohomology, {dim, labels?, left: [[row, col, "c"]], right: [...]}.
// A bimodule's left is A⊗M -> M and right M⊗A -> M; a bicomodule's left is V -> C⊗V and
// right V -> V⊗C. Validated against the given (co)algebra (ValidationError).
algcoalg::Bimodule parse_bimodule(const std::string& text, const FiniteAlgebra& a);
algcoalg::Bicomodule parse_bicomodule(const std::string& text, const FiniteCoalgebra& c);
std::string read_text_file(const std::filesystem::path& path);

// Indented JSON with arrays of scalars kept on one line; used for structure files and reports.
std::string render_json(const nlohmann::ordered_json& v);

}  // namespace entwine::zoo
