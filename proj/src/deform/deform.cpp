#include "entwine/deform/deform.hpp"

#include <map>

#include "entwine/errors.hpp"
#include "entwine/exactla/linalg.hpp"

namespace entwine::deform {

using algcoalg::compose;
using algcoalg::power;
using algcoalg::Shape;
using algcoalg::tensor;
using exactla::FieldSpec;
using exactla::Scalar;

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

Scalar sign(const FieldSpec& f, std::size_t k) { return Scalar(f, k % 2 == 0 ? 1 : -1); }

std::size_t cell_dim(const EntwiningStructure& e, std::size_t m, std::size_t n) {
  return e.dim_c() * ipow(e.dim_a(), m) * e.dim_a() * ipow(e.dim_c(), n);
}

// Horizontal and vertical differentials of the full grid, computed once per cell.
class CellMaps {
 public:
  explicit CellMaps(const EntwiningStructure& e) : e_(e) {}

  const Matrix& d(std::size_t m, std::size_t n) {
    auto it = d_.find({m, n});
    if (it == d_.end())
      it = d_.emplace(std::make_pair(m, n),
                      complexes::differential_CpsiAM(e_, entwining::bimodule_on_A_Cn(e_, n), m))
               .first;
    return it->second;
  }
  const Matrix& dbar(std::size_t m, std::size_t n) {
    auto it = dbar_.find({m, n});
    if (it == dbar_.end())
      it = dbar_.emplace(std::make_pair(m, n),
                         complexes::differential_ApsiCV(e_, entwining::bicomodule_on_C_An(e_, m), n))
               .first;
    return it->second;
  }

 private:
  const EntwiningStructure& e_;
  std::map<std::pair<std::size_t, std::size_t>, Matrix> d_, dbar_;
};

void place(exactla::MatrixBuilder& b, const Matrix& m, std::size_t row0, std::size_t col0, const Scalar& s) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& entry : m.row(r)) b.add(row0 + r, col0 + entry.col, entry.value * s);
}

std::vector<Block> layout(const EntwiningStructure& e, std::size_t N) {
  std::vector<Block> out;
  if (N == 0) return out;
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  std::size_t off = 0;
  auto push = [&](Block::Kind k, std::size_t m, std::size_t n, std::size_t dim) {
    out.push_back({k, m, n, off, dim});
    off += dim;
  };
  push(Block::Kind::Hochschild, N, 0, da * ipow(da, N));
  for (std::size_t k = 1; k < N; ++k) push(Block::Kind::Interior, N - k, k, cell_dim(e, N - k, k));
  push(Block::Kind::Cartier, 0, N, ipow(dc, N) * dc);
  return out;
}

std::size_t total(const std::vector<Block>& bs) {
  std::size_t s = 0;
  for (const auto& b : bs) s += b.dim;
  return s;
}

LinearMap id(const FieldSpec& f, std::size_t d, std::size_t n = 1) { return LinearMap::identity(f, power({d}, n)); }

CheckResult zero_check(const std::string& name, const LinearMap& residual) {
  CheckResult r(name);
  r.cases = 1;
  if (!residual.matrix().is_zero()) {
    r.ok = false;
    const auto pos = exactla::first_difference(residual.matrix(), Matrix(residual.field(), residual.codomain_dim(),
                                                                          residual.domain_dim()));
    r.witness = "first-order residual nonzero at row " + std::to_string(pos->first) + ", column " +
                std::to_string(pos->second);
  }
  return r;
}

}  // namespace

DoubleComplexGrid build_double_complex(const EntwiningStructure& e, std::size_t m_max, std::size_t n_max) {
  if (m_max > 3 || n_max > 3) throw PreconditionError("double complex caps above 3");
  DoubleComplexGrid g;
  g.m_max = m_max;
  g.n_max = n_max;
  CellMaps maps(e);
  g.dims.assign(m_max + 1, std::vector<std::size_t>(n_max + 1));
  g.d.assign(m_max + 1, std::vector<Matrix>(n_max + 1));
  g.dbar.assign(m_max + 1, std::vector<Matrix>(n_max + 1));
  for (std::size_t m = 0; m <= m_max; ++m)
    for (std::size_t n = 0; n <= n_max; ++n) {
      g.dims[m][n] = cell_dim(e, m, n);
      if (m < m_max) g.d[m][n] = maps.d(m, n);
      if (n < n_max) g.dbar[m][n] = maps.dbar(m, n);
    }
  auto where = [](std::size_t m, std::size_t n) {
    return " at (" + std::to_string(m) + "," + std::to_string(n) + ")";
  };
  for (std::size_t m = 0; m <= m_max; ++m)
    for (std::size_t n = 0; n <= n_max; ++n) {
      if (m + 2 <= m_max && !(g.d[m + 1][n] * g.d[m][n]).is_zero())
        throw InternalConsistencyError("d∘d ≠ 0" + where(m, n));
      if (n + 2 <= n_max && !(g.dbar[m][n + 1] * g.dbar[m][n]).is_zero())
        throw InternalConsistencyError("d̄∘d̄ ≠ 0" + where(m, n));
      if (m < m_max && n < n_max && !(g.dbar[m + 1][n] * g.d[m][n] == g.d[m][n + 1] * g.dbar[m][n]))
        throw InternalConsistencyError("d d̄ ≠ d̄ d" + where(m, n));
    }
  return g;
}

std::size_t CH_dimension_formula(const EntwiningStructure& e, std::size_t n) {
  if (n == 0) return 0;
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  std::size_t s = ipow(da, n) * da + dc * ipow(dc, n);
  for (std::size_t k = 1; k < n; ++k) s += (dc * ipow(da, n - k)) * (da * ipow(dc, k));
  return s;
}

TotalComplex build_CH(const EntwiningStructure& e, std::size_t n_max) {
  if (n_max > 3) throw PreconditionError("build_CH: n_max above 3");
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const auto& a = e.algebra();
  const auto& c = e.coalgebra();
  CellMaps maps(e);
  TotalComplex tc;
  std::vector<complexes::CochainShape> shapes;
  for (std::size_t N = 0; N <= n_max + 1; ++N) {
    tc.blocks.push_back(layout(e, N));
    shapes.push_back({{total(tc.blocks.back())}, {}});
  }
  std::vector<Matrix> ds;
  const Scalar one = Scalar::one(f);
  for (std::size_t N = 0; N <= n_max; ++N) {
    const auto& src = tc.blocks[N];
    const auto& dst = tc.blocks[N + 1];
    exactla::MatrixBuilder b(f, total(dst), total(src));
    // dst has the same kind order, shifted by one grid position
    auto find = [&](std::size_t m, std::size_t n) -> const Block& {
      for (const auto& x : dst)
        if (x.m == m && x.n == n) return x;
      throw InternalConsistencyError("C_H layout: missing block");
    };
    for (const auto& s : src) {
      switch (s.kind) {
        case Block::Kind::Hochschild: {
          const Block& h = find(N + 1, 0);
          place(b, complexes::hochschild_differential(a, algcoalg::regular_bimodule(a), N), h.offset, s.offset, one);
          const Block& in = find(N, 1);
          Matrix j = complexes::hochschild_inclusion_matrix(e, da, N);
          place(b, maps.dbar(N, 0) * j, in.offset, s.offset, sign(f, N));
          break;
        }
        case Block::Kind::Interior: {
          place(b, maps.d(s.m, s.n), find(s.m + 1, s.n).offset, s.offset, one);
          place(b, maps.dbar(s.m, s.n), find(s.m, s.n + 1).offset, s.offset, sign(f, s.m));
          break;
        }
        case Block::Kind::Cartier: {
          const Block& col = find(0, N + 1);
          place(b, complexes::cartier_differential(c, algcoalg::regular_bicomodule(c), N), col.offset, s.offset, one);
          Matrix jbar = complexes::cartier_inclusion_matrix(e, dc, N);
          place(b, maps.d(0, N) * jbar, find(1, N).offset, s.offset, one);
          break;
        }
      }
    }
    ds.push_back(b.build());
  }
  tc.complex = CochainComplex(f, std::move(shapes), std::move(ds), "C_H");
  return tc;
}

CohomologyResult total_cohomology(const TotalComplex& tc, std::size_t n) { return complexes::cohomology(tc.complex, n); }

InfinitesimalDeformation deformation_from_cochain(const EntwiningStructure& e, const TotalComplex& tc,
                                                  const Vector& z) {
  if (tc.blocks.size() < 3 || z.size() != tc.dim(2)) throw ShapeError("not a 2-cochain of C_H");
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const auto& bs = tc.blocks[2];  // Hochschild (2,0), interior (1,1), Cartier (0,2)
  auto part = [&](const Block& b) { return Vector(z.begin() + b.offset, z.begin() + b.offset + b.dim); };
  const Scalar minus(e.field(), -1);
  InfinitesimalDeformation d;
  d.mu1 = LinearMap::from_flat({da, da}, {da}, part(bs[0]));
  d.psi1 = LinearMap::from_flat({dc, da}, {da, dc}, exactla::scale(minus, part(bs[1])));
  d.delta1 = LinearMap::from_flat({dc}, {dc, dc}, exactla::scale(minus, part(bs[2])));
  return d;
}

Report first_order_checks(const EntwiningStructure& e, const InfinitesimalDeformation& d) {
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const LinearMap& mu = e.algebra().mult;
  const LinearMap& delta = e.coalgebra().comult;
  const LinearMap& psi = e.psi();
  const LinearMap eta = e.algebra().unit_map(), eps = e.coalgebra().counit_map();
  const LinearMap A = id(f, da), C = id(f, dc);
  const LinearMap& mu1 = d.mu1;
  const LinearMap& delta1 = d.delta1;
  const LinearMap& psi1 = d.psi1;
  const Scalar minus(f, -1);
  const LinearMap u1 = algcoalg::scaled(minus, compose(mu1, tensor(eta, eta)));            // k -> A
  const LinearMap eps1 = algcoalg::scaled(minus, compose(tensor(eps, eps), delta1));       // C -> k

  Report r;
  r.checks.push_back(zero_check("associativity", compose(mu1, tensor(mu, A)) + compose(mu, tensor(mu1, A)) -
                                                     compose(mu1, tensor(A, mu)) - compose(mu, tensor(A, mu1))));
  r.checks.push_back(zero_check("unit", tensor(compose(mu1, tensor(eta, A)) + compose(mu, tensor(u1, A)),
                                               compose(mu1, tensor(A, eta)) + compose(mu, tensor(A, u1)))));
  r.checks.push_back(zero_check("coassociativity", compose(tensor(delta1, C), delta) + compose(tensor(delta, C), delta1) -
                                                       compose(tensor(C, delta1), delta) -
                                                       compose(tensor(C, delta), delta1)));
  r.checks.push_back(zero_check("counit", tensor(compose(tensor(eps, C), delta1) + compose(tensor(eps1, C), delta),
                                                 compose(tensor(C, eps), delta1) + compose(tensor(C, eps1), delta))));
  {
    LinearMap lhs = compose(psi1, tensor(C, mu)) + compose(psi, tensor(C, mu1));
    LinearMap rhs = compose(tensor(mu1, C), tensor(A, psi), tensor(psi, A)) +
                    compose(tensor(mu, C), tensor(A, psi1), tensor(psi, A)) +
                    compose(tensor(mu, C), tensor(A, psi), tensor(psi1, A));
    r.checks.push_back(zero_check(entwining::kLeftPentagon, lhs - rhs));
  }
  r.checks.push_back(zero_check(entwining::kLeftTriangle,
                                compose(psi1, tensor(C, eta)) + compose(psi, tensor(C, u1)) - tensor(u1, C)));
  {
    LinearMap lhs = compose(tensor(A, delta1), psi) + compose(tensor(A, delta), psi1);
    LinearMap rhs = compose(tensor(psi1, C), tensor(C, psi), tensor(delta, A)) +
                    compose(tensor(psi, C), tensor(C, psi1), tensor(delta, A)) +
                    compose(tensor(psi, C), tensor(C, psi), tensor(delta1, A));
    r.checks.push_back(zero_check(entwining::kRightPentagon, lhs - rhs));
  }
  r.checks.push_back(zero_check(entwining::kRightTriangle,
                                compose(tensor(A, eps), psi1) + compose(tensor(A, eps1), psi) - tensor(eps1, A)));
  return r;
}

InfinitesimalDeformation deformation_from_cocycle(const EntwiningStructure& e, const TotalComplex& tc,
                                                  const Vector& z) {
  InfinitesimalDeformation d = deformation_from_cochain(e, tc, z);
  Report r = first_order_checks(e, d);
  if (const auto* bad = r.first_failure())
    throw CocycleViolationError("first-order " + bad->name + " fails: " + bad->witness);
  return d;
}

std::optional<Vector> coboundary_witness(const TotalComplex& tc, const Vector& z) {
  return exactla::solve(tc.D(1), z);
}

Equivalence coboundary_equivalence(const EntwiningStructure& e, const TotalComplex& tc, const Vector& z,
                                   const Vector& w) {
  if (w.size() != tc.dim(1)) throw ShapeError("not a 1-cochain of C_H");
  if (!(tc.D(1).apply(w) == z)) throw PreconditionError("coboundary_equivalence: D w differs from z");
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const auto& bs = tc.blocks[1];  // Hom(A,A), Hom(C,C)
  Equivalence q;
  q.alpha1 = LinearMap::from_flat({da}, {da}, Vector(w.begin(), w.begin() + bs[0].dim));
  q.gamma1 = LinearMap::from_flat({dc}, {dc}, Vector(w.begin() + bs[1].offset, w.end()));

  const InfinitesimalDeformation d = deformation_from_cochain(e, tc, z);
  const LinearMap& mu = e.algebra().mult;
  const LinearMap& delta = e.coalgebra().comult;
  const LinearMap& psi = e.psi();
  const LinearMap A = id(f, da), C = id(f, dc);
  const LinearMap& al = q.alpha1;
  const LinearMap& ga = q.gamma1;
  const Scalar minus(f, -1);
  const LinearMap eta = e.algebra().unit_map(), eps = e.coalgebra().counit_map();
  const LinearMap u1 = algcoalg::scaled(minus, compose(d.mu1, tensor(eta, eta)));
  const LinearMap eps1 = algcoalg::scaled(minus, compose(tensor(eps, eps), d.delta1));

  // α_t μ_t = μ(α_t⊗α_t)
  q.checks.checks.push_back(zero_check("algebra map", compose(al, mu) + d.mu1 - compose(mu, tensor(al, A)) -
                                                          compose(mu, tensor(A, al))));
  // α_t(1_t) = 1
  q.checks.checks.push_back(zero_check("unit preserved", compose(al, eta) + u1));
  // (γ_t⊗γ_t)Δ_t = Δγ_t
  q.checks.checks.push_back(zero_check("coalgebra map", compose(tensor(ga, C), delta) + compose(tensor(C, ga), delta) +
                                                            d.delta1 - compose(delta, ga)));
  // ε γ_t = ε_t
  q.checks.checks.push_back(zero_check("counit preserved", compose(eps, ga) - eps1));
  // ψ(γ_t⊗α_t) = (α_t⊗γ_t)ψ_t
  q.checks.checks.push_back(zero_check("entwining map", compose(psi, tensor(ga, A)) + compose(psi, tensor(C, al)) -
                                                            compose(tensor(al, C), psi) - compose(tensor(A, ga), psi) -
                                                            d.psi1));
  return q;
}

}  // namespace entwine::deform
