#include <sstream>

#include "entwine/compalg/compalg.hpp"
#include "entwine/complexes/hom_operator.hpp"
#include "entwine/errors.hpp"
#include "entwine/exactla/linalg.hpp"

namespace entwine::compalg {

using algcoalg::power;
using complexes::hom_operator;

namespace {

LinearMap id(const FieldSpec& f, std::size_t d, std::size_t n = 1) { return LinearMap::identity(f, power({d}, n)); }

Scalar sign(const FieldSpec& f, std::size_t k) { return Scalar(f, k % 2 == 0 ? 1 : -1); }

void algebra_side(const CompContext& ctx) {
  if (ctx.side() != Side::Algebra) throw PreconditionError("equivariant cochains live on the algebra side");
}

Matrix columns_of(const CompContext& ctx, std::size_t n, const std::vector<Vector>& basis) {
  return Matrix::from_columns(ctx.field(), ctx.dim(n), basis);
}

void fail(CheckResult& r, const std::string& w) {
  if (r.ok) {
    r.ok = false;
    r.witness = w;
  }
}

}  // namespace

Matrix equivariance_operator(const CompContext& ctx, std::size_t n) {
  algebra_side(ctx);
  const auto& e = ctx.entwining();
  const FieldSpec& f = ctx.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c(), u = ctx.dim(n) / da;
  Matrix lhs = hom_operator(id(f, da * dc), 1, u, da, dc, e.right_coaction(n));
  Matrix rhs = hom_operator(e.psi(), dc, u, da, 1, tensor(e.coalgebra().comult, id(f, da, n)));
  return lhs - rhs;
}

std::vector<Cochain> equivariant_basis(const CompContext& ctx, std::size_t n) {
  std::vector<Cochain> out;
  for (const auto& v : exactla::kernel_basis(equivariance_operator(ctx, n))) out.push_back(ctx.from_flat(n, v));
  return out;
}

bool is_equivariant(const CompContext& ctx, const Cochain& f) {
  return exactla::is_zero(equivariance_operator(ctx, f.degree).apply(f.flat()));
}

Matrix translation_criterion_operator(const CompContext& ctx, std::size_t n) {
  algebra_side(ctx);
  const auto& e = ctx.entwining();
  if (!e.galois()) throw PreconditionError("translation criterion needs a translation map");
  const FieldSpec& f = ctx.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c(), u = ctx.dim(n) / da;
  const LinearMap& tau = e.galois()->translation;
  const LinearMap& mu = e.algebra().mult;
  // f∪τ = (μ⊗A)(f⊗τ)ρⁿ_R
  Matrix left = hom_operator(tensor(mu, id(f, da)), 1, u, da, da * da,
                             compose(tensor(id(f, u), tau), e.right_coaction(n)));
  // τ*f = (A⊗μ)(τ⊗f)(Δ⊗Aⁿ)
  Matrix right = hom_operator(tensor(id(f, da), mu), da * da, u, da, 1,
                              compose(tensor(tau, id(f, u)), tensor(e.coalgebra().comult, id(f, da, n))));
  (void)dc;
  return left - right;
}

Report translation_criterion_check(const CompContext& ctx, std::size_t n_max) {
  CheckResult r{"equivariant iff f∪τ = τ*f"};
  for (std::size_t n = 0; n <= n_max; ++n) {
    const Matrix eq = equivariance_operator(ctx, n), tr = translation_criterion_operator(ctx, n);
    const auto ke = exactla::kernel_basis(eq), kt = exactla::kernel_basis(tr);
    ++r.cases;
    std::ostringstream w;
    w << "degree " << n << ": ";
    if (ke.size() != kt.size()) fail(r, w.str() + std::to_string(ke.size()) + " vs " + std::to_string(kt.size()));
    for (const auto& v : ke)
      if (!exactla::is_zero(tr.apply(v))) fail(r, w.str() + "equivariant cochain fails the criterion");
    for (const auto& v : kt)
      if (!exactla::is_zero(eq.apply(v))) fail(r, w.str() + "criterion solution is not equivariant");
  }
  return Report{{r}};
}

Report equivariant_checks(const CompContext& ctx, std::size_t degree_cap) {
  algebra_side(ctx);
  const FieldSpec& fs = ctx.field();
  std::vector<std::vector<Vector>> basis;
  std::vector<Matrix> op;
  for (std::size_t n = 0; n <= degree_cap + 1; ++n) {
    op.push_back(equivariance_operator(ctx, n));
    basis.push_back(exactla::kernel_basis(op.back()));
  }
  auto equivariant = [&](const Cochain& c) { return exactla::is_zero(op.at(c.degree).apply(c.flat())); };

  CheckResult closure{"closed under comp_i"}, cups{"cup = sqcup"}, dclosed{"closed under d"},
      commut{"equivariant classes commute"};

  for (std::size_t m = 0; m <= degree_cap; ++m)
    for (std::size_t n = 0; n <= degree_cap; ++n) {
      if (m + n == 0 || m + n - 1 > degree_cap + 1) continue;
      for (std::size_t a = 0; a < basis[m].size(); ++a)
        for (std::size_t b = 0; b < basis[n].size(); ++b) {
          const Cochain f = ctx.from_flat(m, basis[m][a]), g = ctx.from_flat(n, basis[n][b]);
          for (std::size_t i = 0; i < m; ++i) {
            ++closure.cases;
            if (!equivariant(comp_i(ctx, f, i, g)))
              fail(closure, "m=" + std::to_string(m) + " n=" + std::to_string(n) + " i=" + std::to_string(i));
          }
        }
    }

  for (std::size_t m = 0; m <= degree_cap; ++m)
    for (std::size_t n = 0; m + n <= degree_cap; ++n)
      for (const auto& x : basis[m])
        for (const auto& y : basis[n]) {
          const Cochain f = ctx.from_flat(m, x), g = ctx.from_flat(n, y);
          ++cups.cases;
          if (!(cup(ctx, f, g).map == sqcup(ctx, f, g).map))
            fail(cups, "m=" + std::to_string(m) + " n=" + std::to_string(n));
        }

  std::vector<Matrix> dres;  // d restricted to equivariant cochains, ambient coordinates
  for (std::size_t n = 0; n <= degree_cap; ++n) {
    const Matrix& d = ctx.complex_differential(n);
    dres.push_back(d * columns_of(ctx, n, basis[n]));
    ++dclosed.cases;
    if (!(op[n + 1] * dres.back()).is_zero()) fail(dclosed, "degree " + std::to_string(n));
  }

  // Equivariant cohomology: cocycles inside the subcomplex modulo images of equivariant cochains.
  std::vector<std::vector<Vector>> reps;
  for (std::size_t n = 0; n <= degree_cap; ++n) {
    std::vector<Vector> cocycles;
    const Matrix bn = columns_of(ctx, n, basis[n]);
    for (const auto& z : exactla::kernel_basis(dres[n])) cocycles.push_back(bn.apply(z));
    std::vector<Vector> bounds;
    if (n > 0) bounds = exactla::image_basis(dres[n - 1]);
    reps.push_back(exactla::quotient_with_projection(bounds, cocycles, ctx.dim(n)).class_basis());
  }
  for (std::size_t m = 0; m <= degree_cap; ++m)
    for (std::size_t n = 0; m + n <= degree_cap; ++n)
      for (const auto& x : reps[m])
        for (const auto& y : reps[n]) {
          const Cochain xi = ctx.from_flat(m, x), eta = ctx.from_flat(n, y);
          const Vector diff =
              exactla::subtract(cup(ctx, xi, eta).flat(), exactla::scale(sign(fs, m * n), cup(ctx, eta, xi).flat()));
          ++commut.cases;
          const std::string where = "m=" + std::to_string(m) + " n=" + std::to_string(n);
          if (m + n == 0) {
            if (!exactla::is_zero(diff)) fail(commut, where);
          } else if (!exactla::solve(dres[m + n - 1], diff)) {
            fail(commut, where);
          }
        }

  return Report{{closure, cups, dclosed, commut}};
}

}  // namespace entwine::compalg
