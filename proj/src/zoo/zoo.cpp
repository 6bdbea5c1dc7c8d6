#include "entwine/zoo/zoo.hpp"

#include <map>

#include "entwine/algcoalg/validate.hpp"
#include "entwine/errors.hpp"

namespace entwine::zoo {

using algcoalg::compose;
using algcoalg::Shape;
using algcoalg::StructureTriple;
using algcoalg::tensor;
using exactla::MatrixBuilder;
using exactla::Scalar;
using exactla::Vector;

void validate_hopf(const HopfAlgebra& h) {
  algcoalg::require(algcoalg::validate_algebra(h.algebra));
  algcoalg::require(algcoalg::validate_coalgebra(h.coalgebra));
  algcoalg::require(algcoalg::validate_bialgebra(h.algebra, h.coalgebra));
  algcoalg::require(algcoalg::validate_antipode(h.algebra, h.coalgebra, h.antipode));
}

FiniteAlgebra ground_algebra(const FieldSpec& f) {
  return FiniteAlgebra::from_triples(f, 1, {"1"}, {{0, 0, 0, Scalar::one(f)}}, {Scalar::one(f)});
}

FiniteCoalgebra ground_coalgebra(const FieldSpec& f) {
  return FiniteCoalgebra::from_triples(f, 1, {"1"}, {{0, 0, 0, Scalar::one(f)}}, {Scalar::one(f)});
}

HopfAlgebra ground_hopf(const FieldSpec& f) {
  return HopfAlgebra{ground_algebra(f), ground_coalgebra(f), LinearMap::identity(f, {1})};
}

HopfAlgebra cyclic_group_algebra(const FieldSpec& f, std::size_t n) {
  if (n == 0) throw PreconditionError("cyclic group of order 0");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g^" + std::to_string(i));
  std::vector<StructureTriple> mult, comult;
  Vector unit = exactla::zero_vector(f, n), counit(n, Scalar::one(f));
  unit[0] = Scalar::one(f);
  MatrixBuilder s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) mult.push_back({i, j, (i + j) % n, Scalar::one(f)});
    comult.push_back({i, i, i, Scalar::one(f)});
    s.add((n - i) % n, i, Scalar::one(f));
  }
  HopfAlgebra h{FiniteAlgebra::from_triples(f, n, labels, mult, unit),
                FiniteCoalgebra::from_triples(f, n, labels, comult, counit), LinearMap({n}, {n}, s.build())};
  validate_hopf(h);
  return h;
}

HopfAlgebra sweedler_h4(const FieldSpec& f) {
  if (f.characteristic() == 2) throw PreconditionError("Sweedler's algebra needs characteristic other than 2");
  // index = 2*x_power + g_power: 1, g, x, gx
  auto idx = [](int gp, int xp) { return static_cast<std::size_t>(2 * xp + gp); };
  std::vector<StructureTriple> mult;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c)
        for (int d = 0; d < 2; ++d) {
          // (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}
          if (b + d >= 2) continue;
          mult.push_back({idx(a, b), idx(c, d), idx((a + c) % 2, b + d), Scalar(f, (b * c) ? -1 : 1)});
        }
  const Scalar one = Scalar::one(f), m1 = Scalar(f, -1);
  std::vector<StructureTriple> comult = {
      {0, 0, 0, one},                            // Δ1 = 1⊗1
      {1, 1, 1, one},                            // Δg = g⊗g
      {2, 2, 0, one}, {2, 1, 2, one},            // Δx = x⊗1 + g⊗x
      {3, 3, 1, one}, {3, 0, 3, one},            // Δ(gx) = gx⊗g + 1⊗gx
  };
  Vector unit = {one, Scalar::zero(f), Scalar::zero(f), Scalar::zero(f)};
  Vector counit = {one, one, Scalar::zero(f), Scalar::zero(f)};
  MatrixBuilder s(f, 4, 4);
  s.add(0, 0, one);  // S1 = 1
  s.add(1, 1, one);  // Sg = g
  s.add(3, 2, m1);   // Sx = -gx
  s.add(2, 3, one);  // S(gx) = x
  std::vector<std::string> labels = {"1", "g", "x", "gx"};
  HopfAlgebra h{FiniteAlgebra::from_triples(f, 4, labels, mult, unit),
                FiniteCoalgebra::from_triples(f, 4, labels, comult, counit), LinearMap({4}, {4}, s.build())};
  validate_hopf(h);
  return h;
}

FiniteAlgebra dual_numbers(const FieldSpec& f) {
  const Scalar one = Scalar::one(f);
  return FiniteAlgebra::from_triples(f, 2, {"1", "x"}, {{0, 0, 0, one}, {0, 1, 1, one}, {1, 0, 1, one}},
                                     {one, Scalar::zero(f)});
}

LinearMap trivial_entwining_map(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  return algcoalg::flip(a.field, {c.dim}, {a.dim});
}

EntwiningStructure trivial_entwining(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  return EntwiningStructure(a, c, trivial_entwining_map(a, c));
}

LinearMap self_entwining_map(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  if (a.dim != c.dim) throw ShapeError("self-entwining needs one underlying space");
  const auto& f = a.field;
  const std::size_t d = a.dim;
  LinearMap id = LinearMap::identity(f, {d});
  LinearMap mu = a.mult.reshaped({d, d}, {d});
  LinearMap delta = c.comult.reshaped({d}, {d, d});
  // c⊗a -> c⊗a₁⊗a₂ -> a₁⊗c⊗a₂ -> a₁⊗c·a₂
  LinearMap swap = tensor(algcoalg::flip(f, {d}, {d}), id);
  return compose(tensor(id, mu), swap, tensor(id, delta));
}

EntwiningStructure bialgebra_self_entwining(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  return EntwiningStructure(a, c, self_entwining_map(a, c));
}

LinearMap translation_map(const HopfAlgebra& h) {
  const std::size_t d = h.algebra.dim;
  LinearMap id = LinearMap::identity(h.algebra.field, {d});
  return compose(tensor(h.antipode.reshaped({d}, {d}), id), h.coalgebra.comult.reshaped({d}, {d, d}));
}

EntwiningStructure hopf_self_entwining(const HopfAlgebra& h) {
  validate_hopf(h);
  GaloisData g{h.coalgebra.comult, translation_map(h)};
  return EntwiningStructure(h.algebra, h.coalgebra, self_entwining_map(h.algebra, h.coalgebra), g);
}

EntwiningStructure comodule_algebra_entwining(const FiniteAlgebra& b_alg, const FiniteCoalgebra& b_coalg,
                                              const FiniteAlgebra& a, const LinearMap& coaction) {
  algcoalg::require(algcoalg::validate_bialgebra(b_alg, b_coalg));
  const auto& f = a.field;
  const std::size_t da = a.dim, dc = b_coalg.dim;
  LinearMap rho = coaction.reshaped({da}, {da, dc});
  LinearMap idA = LinearMap::identity(f, {da}), idC = LinearMap::identity(f, {dc});
  LinearMap muA = a.mult.reshaped({da, da}, {da});
  LinearMap muB = b_alg.mult.reshaped({dc, dc}, {dc});
  LinearMap deltaB = b_coalg.comult.reshaped({dc}, {dc, dc});
  LinearMap uA = a.unit_map(), uB = b_alg.unit_map();
  algcoalg::ValidationReport r{"comodule algebra", {}};
  r.checks.push_back(algcoalg::compare_maps("coassociativity", compose(tensor(rho, idC), rho),
                                            compose(tensor(idA, deltaB), rho), {a.labels}));
  r.checks.push_back(algcoalg::compare_maps(
      "counit", compose(tensor(idA, b_coalg.counit_map()), rho).reshaped({da}, {da}), idA, {a.labels}));
  LinearMap mid = algcoalg::permutation(f, {da, dc, da, dc}, {0, 2, 1, 3});
  r.checks.push_back(algcoalg::compare_maps("multiplicative", compose(rho, muA),
                                            compose(tensor(muA, muB), mid, tensor(rho, rho)), {a.labels, a.labels}));
  r.checks.push_back(algcoalg::compare_maps("unital", compose(rho, uA), tensor(uA, uB), {}));
  algcoalg::require(r);
  // c⊗a -> c⊗a₀⊗a₁ -> a₀⊗c⊗a₁ -> a₀⊗c·a₁
  LinearMap psi = compose(tensor(idA, muB), tensor(algcoalg::flip(f, {dc}, {da}), idC), tensor(idC, rho));
  return EntwiningStructure(a, b_coalg, psi);
}

namespace {

struct FixtureInfo {
  std::string description;
  EntwiningStructure (*make)();
};

const std::map<std::string, FixtureInfo>& registry() {
  static const std::map<std::string, FixtureInfo> r = {
      {"k", {"ground field Q entwined with itself", [] { return hopf_self_entwining(ground_hopf(FieldSpec())); }}},
      {"z2", {"kZ2 with its canonical Hopf self-entwining",
              [] { return hopf_self_entwining(cyclic_group_algebra(FieldSpec(), 2)); }}},
      {"z3", {"kZ3 with its canonical Hopf self-entwining",
              [] { return hopf_self_entwining(cyclic_group_algebra(FieldSpec(), 3)); }}},
      {"sweedler", {"Sweedler's 4-dimensional Hopf algebra with its canonical self-entwining",
                    [] { return hopf_self_entwining(sweedler_h4(FieldSpec())); }}},
      {"trivial-z2", {"A = C = kZ2 with the flip",
                      [] {
                        auto h = cyclic_group_algebra(FieldSpec(), 2);
                        return trivial_entwining(h.algebra, h.coalgebra);
                      }}},
      {"dual-numbers", {"k[x]/(x^2) with C = k and the flip",
                        [] { return trivial_entwining(dual_numbers(FieldSpec()), ground_coalgebra(FieldSpec())); }}},
      {"graded-dual", {"k[x]/(x^2) as a kZ2-comodule algebra with x odd",
                       [] {
                         FieldSpec f;
                         auto h = cyclic_group_algebra(f, 2);
                         auto a = dual_numbers(f);
                         MatrixBuilder b(f, 4, 2);
                         b.add(0 * 2 + 0, 0, Scalar::one(f));  // 1 -> 1⊗1
                         b.add(1 * 2 + 1, 1, Scalar::one(f));  // x -> x⊗g
                         return comodule_algebra_entwining(h.algebra, h.coalgebra, a, LinearMap({2}, {2, 2}, b.build()));
                       }}},
  };
  return r;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [name, info] : registry()) out.push_back(name);
  return out;
}

EntwiningStructure fixture(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown example '" + name + "'");
  return it->second.make();
}

std::string fixture_description(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw PreconditionError("unknown example '" + name + "'");
  return it->second.description;
}

}  // namespace entwine::zoo
