#include "entwine/algcoalg/structures.hpp"

#include "entwine/errors.hpp"

namespace entwine::algcoalg {

using exactla::MatrixBuilder;

std::vector<std::string> default_labels(const std::string& stem, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
  return out;
}

namespace {

void check_labels(std::vector<std::string>& labels, std::size_t dim, const std::string& stem) {
  if (labels.empty()) labels = default_labels(stem, dim);
  if (labels.size() != dim) throw ShapeError("expected " + std::to_string(dim) + " labels");
}

void check_vector(const Vector& v, std::size_t dim, const FieldSpec& f, const char* what) {
  if (v.size() != dim) throw ShapeError(std::string(what) + " has the wrong length");
  for (const auto& s : v)
    if (!(s.field() == f)) throw FieldMismatchError(std::string(what) + " lives over another field");
}

Vector vector_to_field(const Vector& v, const FieldSpec& f) {
  Vector out;
  for (const auto& s : v) out.push_back(s.field() == f ? s : Scalar::from_rational(f, s.rational()));
  return out;
}

}  // namespace

FiniteAlgebra FiniteAlgebra::from_triples(const FieldSpec& f, std::size_t dim, std::vector<std::string> labels,
                                          const std::vector<StructureTriple>& mult, Vector unit) {
  check_labels(labels, dim, "e");
  check_vector(unit, dim, f, "unit");
  MatrixBuilder b(f, dim, dim * dim);
  for (const auto& t : mult) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) throw ShapeError("multiplication triple out of range");
    b.add(t.k, t.i * dim + t.j, t.coeff);
  }
  return FiniteAlgebra{f, dim, std::move(labels), LinearMap({dim, dim}, {dim}, b.build()), std::move(unit)};
}

LinearMap FiniteAlgebra::unit_map() const { return LinearMap::from_vector({dim}, unit); }

FiniteAlgebra FiniteAlgebra::to_field(const FieldSpec& f) const {
  return FiniteAlgebra{f, dim, labels, mult.to_field(f), vector_to_field(unit, f)};
}

FiniteCoalgebra FiniteCoalgebra::from_triples(const FieldSpec& f, std::size_t dim, std::vector<std::string> labels,
                                              const std::vector<StructureTriple>& comult, Vector counit) {
  check_labels(labels, dim, "c");
  check_vector(counit, dim, f, "counit");
  MatrixBuilder b(f, dim * dim, dim);
  for (const auto& t : comult) {
    if (t.i >= dim || t.j >= dim || t.k >= dim) throw ShapeError("comultiplication triple out of range");
    b.add(t.j * dim + t.k, t.i, t.coeff);
  }
  return FiniteCoalgebra{f, dim, std::move(labels), LinearMap({dim}, {dim, dim}, b.build()), std::move(counit)};
}

LinearMap FiniteCoalgebra::counit_map() const {
  return LinearMap({dim}, {}, Matrix::from_dense(field, 1, dim, counit));
}

FiniteCoalgebra FiniteCoalgebra::to_field(const FieldSpec& f) const {
  return FiniteCoalgebra{f, dim, labels, comult.to_field(f), vector_to_field(counit, f)};
}

Bimodule regular_bimodule(const FiniteAlgebra& a) { return Bimodule{a.dim, a.labels, a.mult, a.mult}; }

Bimodule free_bimodule(const FiniteAlgebra& a) {
  const auto& f = a.field;
  LinearMap idA = LinearMap::identity(f, a.shape());
  LinearMap left = tensor(a.mult, idA).reshaped({a.dim, a.dim * a.dim}, {a.dim * a.dim});
  LinearMap right = tensor(idA, a.mult).reshaped({a.dim * a.dim, a.dim}, {a.dim * a.dim});
  std::vector<std::string> labels;
  for (const auto& x : a.labels)
    for (const auto& y : a.labels) labels.push_back(x + "⊗" + y);
  return Bimodule{a.dim * a.dim, labels, left, right};
}

Bicomodule regular_bicomodule(const FiniteCoalgebra& c) { return Bicomodule{c.dim, c.labels, c.comult, c.comult}; }

Bicomodule free_bicomodule(const FiniteCoalgebra& c) {
  const auto& f = c.field;
  LinearMap idC = LinearMap::identity(f, c.shape());
  LinearMap left = tensor(c.comult, idC).reshaped({c.dim * c.dim}, {c.dim, c.dim * c.dim});
  LinearMap right = tensor(idC, c.comult).reshaped({c.dim * c.dim}, {c.dim * c.dim, c.dim});
  std::vector<std::string> labels;
  for (const auto& x : c.labels)
    for (const auto& y : c.labels) labels.push_back(x + "⊗" + y);
  return Bicomodule{c.dim * c.dim, labels, left, right};
}

}  // namespace entwine::algcoalg
