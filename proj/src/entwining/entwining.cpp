#include "entwine/entwining/entwining.hpp"

#include <map>
#include <mutex>

#include "entwine/errors.hpp"

namespace entwine::entwining {

using algcoalg::compare_maps;
using algcoalg::compose;
using algcoalg::tensor;

struct EntwiningStructure::Cache {
  std::mutex mu;
  // node-based maps: references handed out stay valid while entries are added
  std::map<std::size_t, LinearMap> up, down, coaction, action;
};

bool BowTieReport::ok() const { return first_failure() == nullptr; }

const algcoalg::AxiomCheck* BowTieReport::first_failure() const {
  for (const auto& r : relations)
    if (!r.passed) return &r;
  return nullptr;
}

BowTieReport check_bowtie(const FiniteAlgebra& a, const FiniteCoalgebra& c, const LinearMap& psi) {
  const std::size_t da = a.dim, dc = c.dim;
  if (psi.domain_dim() != dc * da || psi.codomain_dim() != da * dc)
    throw ShapeError("psi must be a (dim C * dim A) square map C⊗A -> A⊗C");
  if (!(a.field == c.field) || !(psi.field() == a.field)) throw FieldMismatchError("bow-tie: mixed fields");
  const auto& f = a.field;
  LinearMap p = psi.reshaped({dc, da}, {da, dc});
  LinearMap idA = LinearMap::identity(f, {da}), idC = LinearMap::identity(f, {dc});
  LinearMap mu = a.mult.reshaped({da, da}, {da});
  LinearMap delta = c.comult.reshaped({dc}, {dc, dc});
  LinearMap u = a.unit_map(), eps = c.counit_map();

  BowTieReport r;
  r.relations[0] = compare_maps(kLeftPentagon, compose(p, tensor(idC, mu)),
                                compose(tensor(mu, idC), tensor(idA, p), tensor(p, idA)), {c.labels, a.labels, a.labels});
  r.relations[1] = compare_maps(kLeftTriangle, compose(p, tensor(idC, u)), tensor(u, idC), {c.labels});
  r.relations[2] = compare_maps(kRightPentagon, compose(tensor(idA, delta), p),
                                compose(tensor(p, idC), tensor(idC, p), tensor(delta, idA)), {c.labels, a.labels});
  r.relations[3] = compare_maps(kRightTriangle, compose(tensor(idA, eps), p).reshaped({dc, da}, {da}),
                                tensor(eps, idA).reshaped({dc, da}, {da}), {c.labels, a.labels});
  return r;
}

algcoalg::ValidationReport validate_galois(const FiniteAlgebra& a, const FiniteCoalgebra& c, const LinearMap& psi,
                                           const GaloisData& g) {
  const std::size_t da = a.dim, dc = c.dim;
  if (g.coaction.domain_dim() != da || g.coaction.codomain_dim() != da * dc || g.translation.domain_dim() != dc ||
      g.translation.codomain_dim() != da * da)
    throw ShapeError("Galois data has the wrong shape");
  const auto& f = a.field;
  LinearMap idA = LinearMap::identity(f, {da}), idC = LinearMap::identity(f, {dc});
  LinearMap mu = a.mult.reshaped({da, da}, {da});
  LinearMap rho = g.coaction.reshaped({da}, {da, dc});
  LinearMap tau = g.translation.reshaped({dc}, {da, da});
  LinearMap u = a.unit_map();
  algcoalg::ValidationReport r{"Galois data", {}};
  // c⁽¹⁾c⁽²⁾₍₀₎ ⊗ c⁽²⁾₍₁₎ = 1⊗c
  r.checks.push_back(compare_maps("translation then coaction", compose(tensor(mu, idC), tensor(idA, rho), tau),
                                  tensor(u, idC), {c.labels}));
  // a₍₀₎a₍₁₎⁽¹⁾ ⊗ a₍₁₎⁽²⁾ = 1⊗a
  r.checks.push_back(compare_maps("coaction then translation", compose(tensor(mu, idA), tensor(idA, tau), rho),
                                  tensor(u, idA), {a.labels}));
  // ψ(c⊗a) = c⁽¹⁾(c⁽²⁾a)₍₀₎ ⊗ (c⁽²⁾a)₍₁₎
  LinearMap rebuilt = compose(tensor(mu, idC), tensor(idA, rho), tensor(idA, mu), tensor(tau, idA));
  r.checks.push_back(compare_maps("psi from translation", rebuilt, psi.reshaped({dc, da}, {da, dc}),
                                  {c.labels, a.labels}));
  return r;
}

EntwiningStructure::EntwiningStructure(FiniteAlgebra a, FiniteCoalgebra c, LinearMap psi,
                                       std::optional<GaloisData> galois)
    : a_(std::move(a)), c_(std::move(c)), galois_(std::move(galois)), cache_(std::make_shared<Cache>()) {
  algcoalg::require(algcoalg::validate_algebra(a_));
  algcoalg::require(algcoalg::validate_coalgebra(c_));
  psi_ = psi.reshaped({c_.dim, a_.dim}, {a_.dim, c_.dim});
  BowTieReport r = check_bowtie(a_, c_, psi_);
  if (auto* bad = r.first_failure())
    throw BowTieError(bad->axiom, "psi violates the " + bad->axiom + " at " + bad->witness);
  if (galois_) {
    galois_->coaction = galois_->coaction.reshaped({a_.dim}, {a_.dim, c_.dim});
    galois_->translation = galois_->translation.reshaped({c_.dim}, {a_.dim, a_.dim});
    algcoalg::require(validate_galois(a_, c_, psi_, *galois_));
  }
}

EntwiningStructure EntwiningStructure::unchecked(FiniteAlgebra a, FiniteCoalgebra c, LinearMap psi) {
  // route through a trivially valid psi, then swap the real one in
  LinearMap flip = algcoalg::flip(a.field, {c.dim}, {a.dim});
  EntwiningStructure e(std::move(a), std::move(c), flip);
  e.psi_ = psi.reshaped({e.c_.dim, e.a_.dim}, {e.a_.dim, e.c_.dim});
  return e;
}

const LinearMap& EntwiningStructure::psi_up(std::size_t n) const {
  if (n == 0) throw PreconditionError("psi_up needs n >= 1");
  std::lock_guard lock(cache_->mu);
  auto& up = cache_->up;
  if (up.empty()) up.emplace(1, psi_);
  const std::size_t da = a_.dim, dc = c_.dim;
  for (std::size_t k = up.rbegin()->first; k < n; ++k) {
    // ψ^{k+1} = (A^k⊗ψ)(ψ^k⊗A)
    Shape ak = algcoalg::power({da}, k);
    LinearMap step = compose(tensor(LinearMap::identity(a_.field, ak), psi_), tensor(up.at(k), LinearMap::identity(a_.field, {da})));
    up.emplace(k + 1, step.reshaped(algcoalg::concat({{dc}, algcoalg::power({da}, k + 1)}),
                                    algcoalg::concat({algcoalg::power({da}, k + 1), {dc}})));
  }
  return up.at(n);
}

const LinearMap& EntwiningStructure::psi_down(std::size_t n) const {
  if (n == 0) throw PreconditionError("psi_down needs n >= 1");
  std::lock_guard lock(cache_->mu);
  auto& down = cache_->down;
  if (down.empty()) down.emplace(1, psi_);
  const std::size_t da = a_.dim, dc = c_.dim;
  for (std::size_t k = down.rbegin()->first; k < n; ++k) {
    // ψ_{k+1} = (ψ⊗C^k)(C⊗ψ_k): ψ meets the last c first
    Shape ck = algcoalg::power({dc}, k);
    LinearMap step = compose(tensor(psi_, LinearMap::identity(a_.field, ck)), tensor(LinearMap::identity(a_.field, {dc}), down.at(k)));
    down.emplace(k + 1, step.reshaped(algcoalg::concat({algcoalg::power({dc}, k + 1), {da}}),
                                      algcoalg::concat({{da}, algcoalg::power({dc}, k + 1)})));
  }
  return down.at(n);
}

const LinearMap& EntwiningStructure::right_coaction(std::size_t n) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->coaction.find(n);
    if (it != cache_->coaction.end()) return it->second;
  }
  const std::size_t da = a_.dim, dc = c_.dim;
  const Shape an = algcoalg::power({da}, n);
  LinearMap delta = c_.comult.reshaped({dc}, {dc, dc});
  LinearMap m = n == 0 ? delta
                       : compose(tensor(LinearMap::identity(a_.field, {dc}), psi_up(n)),
                                 tensor(delta, LinearMap::identity(a_.field, an)));
  m = m.reshaped(algcoalg::concat({{dc}, an}), algcoalg::concat({{dc}, an, {dc}}));
  std::lock_guard lock(cache_->mu);
  return cache_->coaction.emplace(n, std::move(m)).first->second;
}

const LinearMap& EntwiningStructure::right_action(std::size_t n) const {
  {
    std::lock_guard lock(cache_->mu);
    auto it = cache_->action.find(n);
    if (it != cache_->action.end()) return it->second;
  }
  const std::size_t da = a_.dim, dc = c_.dim;
  const Shape cn = algcoalg::power({dc}, n);
  LinearMap mu = a_.mult.reshaped({da, da}, {da});
  LinearMap m = n == 0 ? mu
                       : compose(tensor(mu, LinearMap::identity(a_.field, cn)),
                                 tensor(LinearMap::identity(a_.field, {da}), psi_down(n)));
  m = m.reshaped(algcoalg::concat({{da}, cn, {da}}), algcoalg::concat({{da}, cn}));
  std::lock_guard lock(cache_->mu);
  return cache_->action.emplace(n, std::move(m)).first->second;
}

EntwiningStructure EntwiningStructure::over_field(const FieldSpec& f) const {
  if (f == field()) return *this;
  std::optional<GaloisData> g;
  if (galois_) g = GaloisData{galois_->coaction.to_field(f), galois_->translation.to_field(f)};
  return EntwiningStructure(a_.to_field(f), c_.to_field(f), psi_.to_field(f), g);
}

LinearMap psi_up(const EntwiningStructure& e, std::size_t n) { return e.psi_up(n); }
LinearMap psi_down(const EntwiningStructure& e, std::size_t n) { return e.psi_down(n); }

Bimodule bimodule_on_A_Cn(const EntwiningStructure& e, std::size_t n) {
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const std::size_t dm = da * algcoalg::shape_size(algcoalg::power({dc}, n));
  LinearMap left = tensor(e.algebra().mult, LinearMap::identity(e.field(), algcoalg::power({dc}, n)))
                       .reshaped({da, dm}, {dm});
  LinearMap right = e.right_action(n).reshaped({dm, da}, {dm});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dm; ++i) {
    auto digits = algcoalg::unflatten(i, algcoalg::concat({{da}, algcoalg::power({dc}, n)}));
    std::string s = e.algebra().labels[digits[0]];
    for (std::size_t k = 1; k < digits.size(); ++k) s += "⊗" + e.coalgebra().labels[digits[k]];
    labels.push_back(s);
  }
  Bimodule m{dm, labels, left, right};
  algcoalg::require(algcoalg::validate_bimodule(e.algebra(), m));
  return m;
}

Bicomodule bicomodule_on_C_An(const EntwiningStructure& e, std::size_t n) {
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const std::size_t dv = dc * algcoalg::shape_size(algcoalg::power({da}, n));
  LinearMap left = tensor(e.coalgebra().comult, LinearMap::identity(e.field(), algcoalg::power({da}, n)))
                       .reshaped({dv}, {dc, dv});
  LinearMap right = e.right_coaction(n).reshaped({dv}, {dv, dc});
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dv; ++i) {
    auto digits = algcoalg::unflatten(i, algcoalg::concat({{dc}, algcoalg::power({da}, n)}));
    std::string s = e.coalgebra().labels[digits[0]];
    for (std::size_t k = 1; k < digits.size(); ++k) s += "⊗" + e.algebra().labels[digits[k]];
    labels.push_back(s);
  }
  Bicomodule v{dv, labels, left, right};
  algcoalg::require(algcoalg::validate_bicomodule(e.coalgebra(), v));
  return v;
}

std::pair<bool, bool> check_lemma_system(const EntwiningStructure& e, std::size_t n, std::size_t j) {
  if (j >= n) throw PreconditionError("check_lemma_system needs j < n");
  const auto& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  auto id = [&](const Shape& s) { return LinearMap::identity(f, s); };
  LinearMap mu = e.algebra().mult.reshaped({da, da}, {da});
  LinearMap delta = e.coalgebra().comult.reshaped({dc}, {dc, dc});

  // face map C⊗A^{n+1} -> C⊗Aⁿ multiplying positions j, j+1
  LinearMap face = tensor(id(algcoalg::concat({{dc}, algcoalg::power({da}, j)})), mu, id(algcoalg::power({da}, n - j - 1)));
  bool first = compose(e.right_coaction(n), face) == compose(tensor(face, id({dc})), e.right_coaction(n + 1));

  // coface A⊗Cⁿ -> A⊗C^{n+1} splitting position j
  LinearMap coface = tensor(id(algcoalg::concat({{da}, algcoalg::power({dc}, j)})), delta, id(algcoalg::power({dc}, n - j - 1)));
  bool second = compose(e.right_action(n + 1), tensor(coface, id({da}))) == compose(coface, e.right_action(n));
  return {first, second};
}

LinearMap convolution_psi(const EntwiningStructure& e, const LinearMap& f, const LinearMap& g) {
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  if (f.domain_dim() != dc || f.codomain_dim() != da || g.domain_dim() != dc || g.codomain_dim() != da)
    throw ShapeError("convolution_psi takes two maps C -> A");
  const auto& fs = e.field();
  LinearMap ff = f.reshaped({dc}, {da}), gg = g.reshaped({dc}, {da});
  LinearMap mu = e.algebra().mult.reshaped({da, da}, {da});
  LinearMap delta = e.coalgebra().comult.reshaped({dc}, {dc, dc});
  // c -> c₁⊗f(c₂) -> f(c₂)_α⊗c₁^α -> f(c₂)_α g(c₁^α)
  return compose(mu, tensor(LinearMap::identity(fs, {da}), gg), e.psi(), tensor(LinearMap::identity(fs, {dc}), ff), delta);
}

LinearMap convolution_unit(const EntwiningStructure& e) {
  return compose(e.algebra().unit_map(), e.coalgebra().counit_map()).reshaped({e.dim_c()}, {e.dim_a()});
}

}  // namespace entwine::entwining
