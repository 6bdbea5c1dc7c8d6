#include "entwine/algcoalg/validate.hpp"

#include "entwine/errors.hpp"

namespace entwine::algcoalg {

bool ValidationReport::ok() const { return first_failure() == nullptr; }

const AxiomCheck* ValidationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::string ValidationReport::summary() const {
  std::string s = subject + ":";
  for (const auto& c : checks) {
    s += " " + c.axiom + (c.passed ? " ok" : " FAILED at " + c.witness);
    s += ";";
  }
  return s;
}

void require(const ValidationReport& r) {
  if (!r.ok()) throw ValidationError(r.summary());
}

std::string basis_label(std::size_t index, const Shape& shape, const std::vector<std::vector<std::string>>& labels) {
  if (shape.empty()) return "1";
  auto digits = unflatten(index, shape);
  std::string out;
  for (std::size_t k = 0; k < digits.size(); ++k) {
    if (k) out += "⊗";
    out += k < labels.size() && digits[k] < labels[k].size() ? labels[k][digits[k]] : std::to_string(digits[k]);
  }
  return out;
}

AxiomCheck compare_maps(const std::string& axiom, const LinearMap& lhs, const LinearMap& rhs,
                        const std::vector<std::vector<std::string>>& factor_labels) {
  if (lhs.domain_dim() != rhs.domain_dim() || lhs.codomain_dim() != rhs.codomain_dim())
    throw ShapeError(axiom + ": the two sides have different shapes");
  AxiomCheck c{axiom, true, ""};
  if (auto d = exactla::first_difference(lhs.matrix(), rhs.matrix())) {
    c.passed = false;
    c.witness = basis_label(d->second, lhs.domain(), factor_labels);
  }
  return c;
}

namespace {

std::vector<std::vector<std::string>> rep(const std::vector<std::string>& l, std::size_t n) {
  return std::vector<std::vector<std::string>>(n, l);
}

}  // namespace

ValidationReport validate_algebra(const FiniteAlgebra& a) {
  if (a.mult.domain_dim() != a.dim * a.dim || a.mult.codomain_dim() != a.dim || a.unit.size() != a.dim)
    throw ShapeError("algebra structure maps do not match dim " + std::to_string(a.dim));
  const auto& f = a.field;
  LinearMap id = LinearMap::identity(f, a.shape());
  LinearMap m = a.mult.reshaped({a.dim, a.dim}, {a.dim});
  LinearMap u = a.unit_map();
  ValidationReport r{"algebra", {}};
  r.checks.push_back(compare_maps("associativity", compose(m, tensor(m, id)), compose(m, tensor(id, m)),
                                  rep(a.labels, 3)));
  r.checks.push_back(compare_maps("left unit", compose(m, tensor(u, id)).reshaped({a.dim}, {a.dim}), id,
                                  rep(a.labels, 1)));
  r.checks.push_back(compare_maps("right unit", compose(m, tensor(id, u)).reshaped({a.dim}, {a.dim}), id,
                                  rep(a.labels, 1)));
  return r;
}

ValidationReport validate_coalgebra(const FiniteCoalgebra& c) {
  if (c.comult.domain_dim() != c.dim || c.comult.codomain_dim() != c.dim * c.dim || c.counit.size() != c.dim)
    throw ShapeError("coalgebra structure maps do not match dim " + std::to_string(c.dim));
  const auto& f = c.field;
  LinearMap id = LinearMap::identity(f, c.shape());
  LinearMap d = c.comult.reshaped({c.dim}, {c.dim, c.dim});
  LinearMap e = c.counit_map();
  ValidationReport r{"coalgebra", {}};
  r.checks.push_back(compare_maps("coassociativity", compose(tensor(d, id), d), compose(tensor(id, d), d),
                                  rep(c.labels, 1)));
  r.checks.push_back(compare_maps("left counit", compose(tensor(e, id), d).reshaped({c.dim}, {c.dim}), id,
                                  rep(c.labels, 1)));
  r.checks.push_back(compare_maps("right counit", compose(tensor(id, e), d).reshaped({c.dim}, {c.dim}), id,
                                  rep(c.labels, 1)));
  return r;
}

ValidationReport validate_bimodule(const FiniteAlgebra& a, const Bimodule& m) {
  const std::size_t n = m.dim, d = a.dim;
  if (m.left.domain_dim() != d * n || m.left.codomain_dim() != n || m.right.domain_dim() != n * d ||
      m.right.codomain_dim() != n)
    throw ShapeError("bimodule actions do not match dimensions");
  const auto& f = a.field;
  LinearMap idA = LinearMap::identity(f, {d}), idM = LinearMap::identity(f, {n});
  LinearMap l = m.left.reshaped({d, n}, {n}), rt = m.right.reshaped({n, d}, {n});
  LinearMap mu = a.mult.reshaped({d, d}, {d});
  LinearMap u = a.unit_map();
  std::vector<std::string> ml = m.labels.size() == n ? m.labels : default_labels("m", n);
  ValidationReport r{"bimodule", {}};
  r.checks.push_back(compare_maps("left associativity", compose(l, tensor(mu, idM)), compose(l, tensor(idA, l)),
                                  {a.labels, a.labels, ml}));
  r.checks.push_back(compare_maps("left unit", compose(l, tensor(u, idM)).reshaped({n}, {n}), idM, {ml}));
  r.checks.push_back(compare_maps("right associativity", compose(rt, tensor(idM, mu)), compose(rt, tensor(rt, idA)),
                                  {ml, a.labels, a.labels}));
  r.checks.push_back(compare_maps("right unit", compose(rt, tensor(idM, u)).reshaped({n}, {n}), idM, {ml}));
  r.checks.push_back(compare_maps("actions commute", compose(l, tensor(idA, rt)), compose(rt, tensor(l, idA)),
                                  {a.labels, ml, a.labels}));
  return r;
}

ValidationReport validate_bicomodule(const FiniteCoalgebra& c, const Bicomodule& v) {
  const std::size_t n = v.dim, d = c.dim;
  if (v.left.domain_dim() != n || v.left.codomain_dim() != d * n || v.right.domain_dim() != n ||
      v.right.codomain_dim() != n * d)
    throw ShapeError("bicomodule coactions do not match dimensions");
  const auto& f = c.field;
  LinearMap idC = LinearMap::identity(f, {d}), idV = LinearMap::identity(f, {n});
  LinearMap l = v.left.reshaped({n}, {d, n}), rt = v.right.reshaped({n}, {n, d});
  LinearMap delta = c.comult.reshaped({d}, {d, d});
  LinearMap e = c.counit_map();
  std::vector<std::string> vl = v.labels.size() == n ? v.labels : default_labels("v", n);
  ValidationReport r{"bicomodule", {}};
  r.checks.push_back(compare_maps("left coassociativity", compose(tensor(delta, idV), l), compose(tensor(idC, l), l),
                                  {vl}));
  r.checks.push_back(compare_maps("left counit", compose(tensor(e, idV), l).reshaped({n}, {n}), idV, {vl}));
  r.checks.push_back(compare_maps("right coassociativity", compose(tensor(rt, idC), rt),
                                  compose(tensor(idV, delta), rt), {vl}));
  r.checks.push_back(compare_maps("right counit", compose(tensor(idV, e), rt).reshaped({n}, {n}), idV, {vl}));
  r.checks.push_back(compare_maps("coactions commute", compose(tensor(l, idC), rt), compose(tensor(idC, rt), l),
                                  {vl}));
  return r;
}

ValidationReport validate_bialgebra(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  if (a.dim != c.dim) throw ShapeError("bialgebra: algebra and coalgebra dimensions differ");
  const std::size_t d = a.dim;
  const auto& f = a.field;
  LinearMap mu = a.mult.reshaped({d, d}, {d});
  LinearMap delta = c.comult.reshaped({d}, {d, d});
  LinearMap e = c.counit_map();
  LinearMap u = a.unit_map();
  LinearMap mid = permutation(f, {d, d, d, d}, {0, 2, 1, 3});
  ValidationReport r{"bialgebra", {}};
  r.checks.push_back(compare_maps("comultiplication is multiplicative", compose(delta, mu),
                                  compose(tensor(mu, mu), mid, tensor(delta, delta)),
                                  {a.labels, a.labels}));
  r.checks.push_back(compare_maps("comultiplication is unital", compose(delta, u), tensor(u, u), {}));
  r.checks.push_back(compare_maps("counit is multiplicative", compose(e, mu), tensor(e, e), {a.labels, a.labels}));
  r.checks.push_back(compare_maps("counit is unital", compose(e, u), LinearMap::identity(f, {}), {}));
  return r;
}

ValidationReport validate_antipode(const FiniteAlgebra& a, const FiniteCoalgebra& c, const LinearMap& s) {
  const std::size_t d = a.dim;
  const auto& f = a.field;
  LinearMap id = LinearMap::identity(f, {d});
  LinearMap mu = a.mult.reshaped({d, d}, {d});
  LinearMap delta = c.comult.reshaped({d}, {d, d});
  LinearMap ue = compose(a.unit_map(), c.counit_map());
  LinearMap sd = s.reshaped({d}, {d});
  ValidationReport r{"antipode", {}};
  r.checks.push_back(compare_maps("S*id = 1ε", compose(mu, tensor(sd, id), delta), ue, {a.labels}));
  r.checks.push_back(compare_maps("id*S = 1ε", compose(mu, tensor(id, sd), delta), ue, {a.labels}));
  return r;
}

}  // namespace entwine::algcoalg
