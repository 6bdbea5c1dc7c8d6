#include "entwine/compalg/compalg.hpp"

#include <mutex>
#include <unordered_map>

#include "entwine/errors.hpp"
#include "entwine/exactla/linalg.hpp"

namespace entwine::compalg {

using algcoalg::concat;
using algcoalg::power;
using algcoalg::shape_size;

namespace {

LinearMap id(const FieldSpec& f, std::size_t d, std::size_t n = 1) { return LinearMap::identity(f, power({d}, n)); }

Scalar sign(const FieldSpec& f, std::size_t k) { return Scalar(f, k % 2 == 0 ? 1 : -1); }

void same_side(const CompContext& ctx, const Cochain& f) {
  if (f.side != ctx.side())
    throw PreconditionError(std::string("cochain lives on the ") + side_name(f.side) + " side, context is " +
                            side_name(ctx.side()));
}

Cochain combine(const CompContext& ctx, std::size_t degree, const std::vector<std::pair<Scalar, Cochain>>& terms) {
  Matrix acc = ctx.zero(degree).map.matrix();
  for (const auto& [s, c] : terms) {
    if (c.degree != degree) throw InternalConsistencyError("combine: degree mismatch");
    acc = acc + c.map.matrix().scaled(s);
  }
  return ctx.wrap(degree, LinearMap(ctx.domain(degree), ctx.codomain(degree), acc));
}

}  // namespace

const char* side_name(Side s) { return s == Side::Algebra ? "algebra" : "coalgebra"; }

// ---- context ----

struct CompContext::Cache {
  std::mutex mu;
  std::unordered_map<std::size_t, Matrix> d;
};

CompContext::CompContext(EntwiningStructure e, Side side)
    : e_(std::move(e)), side_(side), cache_(std::make_shared<Cache>()) {
  const auto& a = e_.algebra();
  const auto& c = e_.coalgebra();
  LinearMap p = side_ == Side::Algebra ? tensor(c.counit_map(), a.mult) : tensor(a.unit_map(), c.comult);
  pi_ = wrap(2, p);
  Cochain l = comp_i(*this, pi_, 0, pi_), r = comp_i(*this, pi_, 1, pi_);
  if (!(l.map == r.map)) throw InternalConsistencyError("pi∘0 pi differs from pi∘1 pi");
}

Shape CompContext::domain(std::size_t m) const {
  if (side_ == Side::Algebra) return concat({{e_.dim_c()}, power({e_.dim_a()}, m)});
  return {e_.dim_c()};
}

Shape CompContext::codomain(std::size_t m) const {
  if (side_ == Side::Algebra) return {e_.dim_a()};
  return concat({{e_.dim_a()}, power({e_.dim_c()}, m)});
}

std::size_t CompContext::dim(std::size_t m) const { return shape_size(domain(m)) * shape_size(codomain(m)); }

Cochain CompContext::zero(std::size_t m) const {
  return {side_, m, LinearMap::zero(field(), domain(m), codomain(m))};
}

Cochain CompContext::from_flat(std::size_t m, const Vector& v) const {
  if (v.size() != dim(m)) throw ShapeError("cochain vector has the wrong length");
  return {side_, m, LinearMap::from_flat(domain(m), codomain(m), v)};
}

Cochain CompContext::basis(std::size_t m, std::size_t k) const {
  Vector v = exactla::zero_vector(field(), dim(m));
  v.at(k) = Scalar::one(field());
  return from_flat(m, v);
}

Cochain CompContext::wrap(std::size_t m, const LinearMap& f) const {
  if (f.domain_dim() != shape_size(domain(m)) || f.codomain_dim() != shape_size(codomain(m)))
    throw ShapeError(std::string("not a degree ") + std::to_string(m) + " cochain on the " + side_name(side_) +
                     " side");
  if (!(f.field() == field())) throw FieldMismatchError("cochain over a different field");
  return {side_, m, f.reshaped(domain(m), codomain(m))};
}

const Matrix& CompContext::complex_differential(std::size_t m) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto it = cache_->d.find(m);
  if (it == cache_->d.end()) {
    Matrix d = side_ == Side::Algebra
                   ? complexes::differential_CpsiAM(e_, algcoalg::regular_bimodule(e_.algebra()), m)
                   : complexes::differential_ApsiCV(e_, algcoalg::regular_bicomodule(e_.coalgebra()), m);
    it = cache_->d.emplace(m, std::move(d)).first;
  }
  return it->second;
}

// ---- operations ----

Cochain comp_i(const CompContext& ctx, const Cochain& f, std::size_t i, const Cochain& g) {
  same_side(ctx, f);
  same_side(ctx, g);
  const std::size_t m = f.degree, n = g.degree;
  if (m + n == 0) throw PreconditionError("comp of two degree 0 cochains has degree -1");
  const std::size_t deg = m + n - 1;
  if (i >= m) return ctx.zero(deg);
  const auto& e = ctx.entwining();
  const FieldSpec& fs = ctx.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  LinearMap r;
  if (ctx.side() == Side::Algebra) {
    LinearMap pre = tensor(e.right_coaction(i), id(fs, da, deg - i));
    LinearMap mid = tensor(id(fs, dc), id(fs, da, i), g.map, id(fs, da, m - i - 1));
    r = compose(f.map, mid, pre);
  } else {
    LinearMap post = tensor(e.right_action(i), id(fs, dc, deg - i));
    LinearMap mid = tensor(id(fs, da), id(fs, dc, i), g.map, id(fs, dc, m - i - 1));
    r = compose(post, mid, f.map);
  }
  return ctx.wrap(deg, r);
}

Cochain diamond(const CompContext& ctx, const Cochain& f, const Cochain& g) {
  const std::size_t m = f.degree, n = g.degree;
  same_side(ctx, f);
  same_side(ctx, g);
  if (m + n == 0) throw PreconditionError("diamond of two degree 0 cochains has degree -1");
  std::vector<std::pair<Scalar, Cochain>> terms;
  for (std::size_t i = 0; i < m; ++i)
    terms.emplace_back(sign(ctx.field(), i * (n + 1)), comp_i(ctx, f, i, g));  // (n-1) ≡ (n+1) mod 2
  return combine(ctx, m + n - 1, terms);
}

Cochain cup_direct(const CompContext& ctx, const Cochain& f, const Cochain& g) {
  same_side(ctx, f);
  same_side(ctx, g);
  const auto& e = ctx.entwining();
  const FieldSpec& fs = ctx.field();
  const std::size_t m = f.degree, n = g.degree, da = e.dim_a(), dc = e.dim_c();
  LinearMap r;
  if (ctx.side() == Side::Algebra) {
    r = compose(e.algebra().mult, tensor(f.map, g.map), tensor(e.right_coaction(m), id(fs, da, n)));
  } else {
    r = compose(tensor(e.right_action(m), id(fs, dc, n)), tensor(f.map, g.map), e.coalgebra().comult);
  }
  return ctx.wrap(m + n, r);
}

Cochain sqcup_direct(const CompContext& ctx, const Cochain& f, const Cochain& g) {
  same_side(ctx, f);
  same_side(ctx, g);
  const auto& e = ctx.entwining();
  const FieldSpec& fs = ctx.field();
  const std::size_t m = f.degree, n = g.degree, da = e.dim_a(), dc = e.dim_c();
  LinearMap r;
  if (ctx.side() == Side::Algebra) {
    r = compose(e.algebra().mult, tensor(id(fs, da), g.map), tensor(e.psi(), id(fs, da, n)),
                tensor(id(fs, dc), f.map, id(fs, da, n)), tensor(e.coalgebra().comult, id(fs, da, m + n)));
  } else {
    r = compose(tensor(e.algebra().mult, id(fs, dc, m + n)), tensor(id(fs, da), f.map, id(fs, dc, n)),
                tensor(e.psi(), id(fs, dc, n)), tensor(id(fs, dc), g.map), e.coalgebra().comult);
  }
  return ctx.wrap(m + n, r);
}

Cochain cup(const CompContext& ctx, const Cochain& f, const Cochain& g) {
  Cochain via = comp_i(ctx, comp_i(ctx, ctx.pi(), 0, f), f.degree, g);
  Cochain direct = cup_direct(ctx, f, g);
  if (!(via.map == direct.map)) throw InternalConsistencyError("cup: comp route and closed formula disagree");
  return direct;
}

Cochain sqcup(const CompContext& ctx, const Cochain& f, const Cochain& g) {
  Cochain via = comp_i(ctx, comp_i(ctx, ctx.pi(), 1, g), 0, f);
  Cochain direct = sqcup_direct(ctx, f, g);
  if (!(via.map == direct.map)) throw InternalConsistencyError("sqcup: comp route and closed formula disagree");
  return direct;
}

Cochain coboundary(const CompContext& ctx, const Cochain& f) {
  same_side(ctx, f);
  const std::size_t m = f.degree;
  const FieldSpec& fs = ctx.field();
  // (-1)^{m-1} = (-1)^{m+1}
  Cochain df = combine(ctx, m + 1, {{sign(fs, m + 1), diamond(ctx, ctx.pi(), f)},
                                    {Scalar(fs, -1), diamond(ctx, f, ctx.pi())}});
  if (!(ctx.complex_differential(m).apply(f.flat()) == df.flat()))
    throw InternalConsistencyError("coboundary from pi disagrees with the complex differential in degree " +
                                   std::to_string(m));
  return df;
}

// ---- reports ----

bool Report::ok() const { return first_failure() == nullptr; }

const CheckResult* Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.ok) return &c;
  return nullptr;
}

bool CommutativityReport::ok() const {
  for (const auto& p : pairs)
    if (!p.ok) return false;
  return true;
}

}  // namespace entwine::compalg
