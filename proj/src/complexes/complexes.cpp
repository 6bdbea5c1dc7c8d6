#include "entwine/complexes/complexes.hpp"

#include "entwine/errors.hpp"

namespace entwine::complexes {

using algcoalg::compose;
using algcoalg::power;
using algcoalg::shape_size;
using algcoalg::tensor;

namespace {

LinearMap id(const FieldSpec& f, std::size_t d, std::size_t times = 1) {
  return LinearMap::identity(f, power({d}, times));
}

Scalar sign(const FieldSpec& f, std::size_t k) { return Scalar(f, k % 2 ? -1 : 1); }

std::size_t ipow(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

LinearMap left_action(const FiniteAlgebra& a, const Bimodule& m) { return m.left.reshaped({a.dim, m.dim}, {m.dim}); }
LinearMap right_action(const FiniteAlgebra& a, const Bimodule& m) {
  return m.right.reshaped({m.dim, a.dim}, {m.dim});
}

}  // namespace

CochainComplex::CochainComplex(FieldSpec f, std::vector<CochainShape> shapes, std::vector<Matrix> differentials,
                               std::string name)
    : field_(std::move(f)), name_(std::move(name)), shapes_(std::move(shapes)), d_(std::move(differentials)) {
  if (shapes_.empty()) throw ShapeError("cochain complex without spaces");
  if (d_.size() + 1 > shapes_.size()) throw ShapeError("more differentials than spaces");
  for (std::size_t n = 0; n < d_.size(); ++n) {
    if (d_[n].cols() != dim(n) || d_[n].rows() != dim(n + 1))
      throw ShapeError(name_ + ": differential " + std::to_string(n) + " has the wrong size");
    if (d_[n].field() != field_) throw FieldMismatchError(name_ + ": differential over another field");
  }
  for (std::size_t n = 0; n + 1 < d_.size(); ++n)
    if (!(d_[n + 1] * d_[n]).is_zero())
      throw InternalConsistencyError(name_ + ": d∘d ≠ 0 in degree " + std::to_string(n));
}

const Matrix& CochainComplex::differential(std::size_t n) const {
  if (n >= d_.size()) throw PreconditionError(name_ + ": no differential in degree " + std::to_string(n));
  return d_[n];
}

LinearMap CochainComplex::as_map(std::size_t n, const Vector& v) const {
  return LinearMap::from_flat(shape(n).domain, shape(n).codomain, v);
}

CohomologyResult cohomology(const CochainComplex& cx, std::size_t n) {
  if (n >= cx.num_differentials())
    throw PreconditionError("cohomology in degree " + std::to_string(n) + " needs d^" + std::to_string(n) +
                            "; complex stops at degree " + std::to_string(cx.max_degree()));
  CohomologyResult r;
  r.degree = n;
  r.cocycle_basis = exactla::kernel_basis(cx.differential(n));
  r.previous = n == 0 ? Matrix(cx.field(), cx.dim(0), 0) : cx.differential(n - 1);
  r.coboundary_basis = exactla::image_basis(r.previous);
  r.quotient = exactla::quotient_with_projection(r.coboundary_basis, r.cocycle_basis, cx.dim(n));
  r.class_reps = r.quotient.class_basis();
  r.betti = r.cocycle_basis.size() - r.coboundary_basis.size();
  return r;
}

// ---- C_ψ(A, M) ----

CochainShape shape_CpsiAM(const EntwiningStructure& e, const Bimodule& m, std::size_t n) {
  return {algcoalg::concat({{e.dim_c()}, power({e.dim_a()}, n)}), {m.dim}};
}

Matrix differential_CpsiAM(const EntwiningStructure& e, const Bimodule& m, std::size_t n) {
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c(), dm = m.dim;
  const std::size_t u = dc * ipow(da, n);
  const auto& a = e.algebra();
  Matrix d = hom_operator(left_action(a, m), da, u, dm, 1, tensor(e.psi(), id(f, da, n)));
  for (std::size_t i = 1; i <= n; ++i) {
    LinearMap face = tensor(id(f, dc), id(f, da, i - 1), a.mult, id(f, da, n - i));
    d = d + precompose(face, dm).scaled(sign(f, i));
  }
  d = d + hom_operator(right_action(a, m), 1, u, dm, da, id(f, u * da)).scaled(sign(f, n + 1));
  return d;
}

CochainComplex build_CpsiAM(const EntwiningStructure& e, const Bimodule& m, std::size_t n_max) {
  std::vector<CochainShape> shapes;
  std::vector<Matrix> ds;
  for (std::size_t n = 0; n <= n_max; ++n) shapes.push_back(shape_CpsiAM(e, m, n));
  for (std::size_t n = 0; n < n_max; ++n) ds.push_back(differential_CpsiAM(e, m, n));
  return CochainComplex(e.field(), std::move(shapes), std::move(ds), "C_psi(A,M)");
}

// ---- A_ψ(C, V) ----

CochainShape shape_ApsiCV(const EntwiningStructure& e, const Bicomodule& v, std::size_t n) {
  return {{v.dim}, algcoalg::concat({{e.dim_a()}, power({e.dim_c()}, n)})};
}

Matrix differential_ApsiCV(const EntwiningStructure& e, const Bicomodule& v, std::size_t n) {
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c(), dv = v.dim;
  const std::size_t w = da * ipow(dc, n);
  const auto& c = e.coalgebra();
  LinearMap left = v.left.reshaped({dv}, {dc, dv});
  LinearMap right = v.right.reshaped({dv}, {dv, dc});
  Matrix d = hom_operator(tensor(e.psi(), id(f, dc, n)), dc, dv, w, 1, left);
  for (std::size_t k = 1; k <= n; ++k) {
    LinearMap coface = tensor(id(f, da), id(f, dc, k - 1), c.comult, id(f, dc, n - k));
    d = d + postcompose(coface, dv).scaled(sign(f, k));
  }
  d = d + hom_operator(id(f, w * dc), 1, dv, w, dc, right).scaled(sign(f, n + 1));
  return d;
}

CochainComplex build_ApsiCV(const EntwiningStructure& e, const Bicomodule& v, std::size_t n_max) {
  std::vector<CochainShape> shapes;
  std::vector<Matrix> ds;
  for (std::size_t n = 0; n <= n_max; ++n) shapes.push_back(shape_ApsiCV(e, v, n));
  for (std::size_t n = 0; n < n_max; ++n) ds.push_back(differential_ApsiCV(e, v, n));
  return CochainComplex(e.field(), std::move(shapes), std::move(ds), "A_psi(C,V)");
}

// ---- Hochschild and Cartier ----

Matrix hochschild_differential(const FiniteAlgebra& a, const Bimodule& m, std::size_t n) {
  const FieldSpec& f = a.field;
  const std::size_t da = a.dim, dm = m.dim, u = ipow(da, n);
  Matrix d = hom_operator(left_action(a, m), da, u, dm, 1, id(f, da, n + 1));
  for (std::size_t i = 1; i <= n; ++i)
    d = d + precompose(tensor(id(f, da, i - 1), a.mult, id(f, da, n - i)), dm).scaled(sign(f, i));
  d = d + hom_operator(right_action(a, m), 1, u, dm, da, id(f, da, n + 1)).scaled(sign(f, n + 1));
  return d;
}

CochainComplex hochschild_complex(const FiniteAlgebra& a, const Bimodule& m, std::size_t n_max) {
  std::vector<CochainShape> shapes;
  std::vector<Matrix> ds;
  for (std::size_t n = 0; n <= n_max; ++n) shapes.push_back({power({a.dim}, n), {m.dim}});
  for (std::size_t n = 0; n < n_max; ++n) ds.push_back(hochschild_differential(a, m, n));
  return CochainComplex(a.field, std::move(shapes), std::move(ds), "Hochschild");
}

Matrix cartier_differential(const FiniteCoalgebra& c, const Bicomodule& v, std::size_t n) {
  const FieldSpec& f = c.field;
  const std::size_t dc = c.dim, dv = v.dim, w = ipow(dc, n);
  LinearMap left = v.left.reshaped({dv}, {dc, dv});
  LinearMap right = v.right.reshaped({dv}, {dv, dc});
  Matrix d = hom_operator(id(f, dc, n + 1), dc, dv, w, 1, left);
  for (std::size_t k = 1; k <= n; ++k)
    d = d + postcompose(tensor(id(f, dc, k - 1), c.comult, id(f, dc, n - k)), dv).scaled(sign(f, k));
  d = d + hom_operator(id(f, dc, n + 1), 1, dv, w, dc, right).scaled(sign(f, n + 1));
  return d;
}

CochainComplex cartier_complex(const FiniteCoalgebra& c, const Bicomodule& v, std::size_t n_max) {
  std::vector<CochainShape> shapes;
  std::vector<Matrix> ds;
  for (std::size_t n = 0; n <= n_max; ++n) shapes.push_back({{v.dim}, power({c.dim}, n)});
  for (std::size_t n = 0; n < n_max; ++n) ds.push_back(cartier_differential(c, v, n));
  return CochainComplex(c.field, std::move(shapes), std::move(ds), "Cartier");
}

// ---- inclusions ----

LinearMap hochschild_inclusion(const EntwiningStructure& e, const LinearMap& f) {
  if (f.codomain().size() != 1) throw ShapeError("hochschild_inclusion expects f : Aⁿ -> M");
  for (std::size_t d : f.domain())
    if (d != e.dim_a()) throw ShapeError("hochschild_inclusion: domain is not a power of A");
  return compose(f, tensor(e.coalgebra().counit_map(), LinearMap::identity(e.field(), f.domain())));
}

Matrix hochschild_inclusion_matrix(const EntwiningStructure& e, std::size_t m_dim, std::size_t n) {
  return precompose(tensor(e.coalgebra().counit_map(), id(e.field(), e.dim_a(), n)), m_dim);
}

LinearMap cartier_inclusion(const EntwiningStructure& e, const LinearMap& f) {
  if (f.domain().size() != 1) throw ShapeError("cartier_inclusion expects f : V -> Cⁿ");
  for (std::size_t d : f.codomain())
    if (d != e.dim_c()) throw ShapeError("cartier_inclusion: codomain is not a power of C");
  return compose(tensor(e.algebra().unit_map(), LinearMap::identity(e.field(), f.codomain())), f);
}

Matrix cartier_inclusion_matrix(const EntwiningStructure& e, std::size_t v_dim, std::size_t n) {
  return postcompose(tensor(e.algebra().unit_map(), id(e.field(), e.dim_c(), n)), v_dim);
}

// ---- projectivity ----

std::optional<LinearMap> projectivity_witness(const EntwiningStructure& e) {
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  Bimodule free = algcoalg::free_bimodule(e.algebra());
  Matrix d0 = differential_CpsiAM(e, free, 0);
  Matrix mu = postcompose(e.algebra().mult.reshaped({da, da}, {da}), dc);
  Vector rhs = exactla::zero_vector(f, d0.rows() + mu.rows());
  const auto& unit = e.algebra().unit;
  const auto& counit = e.coalgebra().counit;
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t c = 0; c < dc; ++c) rhs[d0.rows() + a * dc + c] = unit[a] * counit[c];
  auto x = exactla::solve(exactla::vstack({d0, mu}), rhs);
  if (!x) return std::nullopt;
  return LinearMap::from_flat({dc}, {da, da}, *x);
}

Bimodule hom_CM_bimodule(const EntwiningStructure& e, const Bimodule& m) {
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c(), dm = m.dim, dh = dc * dm;
  const auto left_cols = left_action(e.algebra(), m).matrix().columns();
  const LinearMap right_map = right_action(e.algebra(), m);
  const Matrix& right = right_map.matrix();
  const Matrix& psi = e.psi().matrix();  // rows a''·dc + c'', cols c'·da + a

  // (a·E_{m,c})(c') = Σ ψ[(a'',c),(c',a)] a''·m
  exactla::MatrixBuilder lb(f, dh, da * dh);
  Scalar prod = Scalar::zero(f);
  for (std::size_t row = 0; row < psi.rows(); ++row) {
    const std::size_t a2 = row / dc, c = row % dc;
    for (const auto& pe : psi.row(row)) {
      const std::size_t c1 = pe.col / da, a = pe.col % da;
      for (std::size_t mi = 0; mi < dm; ++mi)
        for (const auto& le : left_cols[a2 * dm + mi]) {
          prod = pe.value;
          prod *= le.value;
          lb.add(le.col * dc + c1, a * dh + mi * dc + c, prod);
        }
    }
  }
  // (E_{m,c}·a)(c') = δ_{c,c'} m·a
  exactla::MatrixBuilder rb(f, dh, dh * da);
  for (std::size_t out = 0; out < dm; ++out)
    for (const auto& re : right.row(out)) {
      const std::size_t mi = re.col / da, a = re.col % da;
      for (std::size_t c = 0; c < dc; ++c) rb.add(out * dc + c, (mi * dc + c) * da + a, re.value);
    }
  Bimodule h;
  h.dim = dh;
  h.labels = algcoalg::default_labels("f", dh);
  h.left = LinearMap({da, dh}, {dh}, lb.build());
  h.right = LinearMap({dh, da}, {dh}, rb.build());
  algcoalg::require(algcoalg::validate_bimodule(e.algebra(), h));
  return h;
}

// ---- Hopf-Galois homotopy ----

Matrix hopf_contracting_homotopy(const EntwiningStructure& e, const Bimodule& m, std::size_t n) {
  if (!e.galois()) throw PreconditionError("contracting homotopy needs a translation map");
  if (n == 0) throw PreconditionError("contracting homotopy starts in degree 1");
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const auto& g = *e.galois();
  // c ↦ c⁽¹⁾1₍₀₎ ⊗ 1₍₁₎ ⊗ c⁽²⁾
  LinearMap one_coacted = compose(g.coaction.reshaped({da}, {da, dc}), e.algebra().unit_map());
  LinearMap spread = tensor(id(f, da), one_coacted, id(f, da));
  LinearMap q0 = compose(tensor(e.algebra().mult.reshaped({da, da}, {da}), id(f, dc), id(f, da)), spread,
                         g.translation.reshaped({dc}, {da, da}));
  LinearMap pre = tensor(q0, id(f, da, n - 1));
  return hom_operator(left_action(e.algebra(), m), da, dc * ipow(da, n), m.dim, 1, pre);
}

std::vector<Vector> h0_characterization(const EntwiningStructure& e) {
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const Matrix& psi = e.psi().matrix();
  const Matrix& mu = e.algebra().mult.matrix();
  // unknown φ: coordinate a'·dc + c' means φ(c') ∋ a'
  exactla::MatrixBuilder b(f, da * dc * da, da * dc);
  for (std::size_t a = 0; a < da; ++a)
    for (std::size_t c = 0; c < dc; ++c) {
      const std::size_t base = (a * dc + c) * da;
      for (std::size_t a2 = 0; a2 < da; ++a2)
        for (std::size_t c2 = 0; c2 < dc; ++c2) {
          Scalar p = psi.at(a2 * dc + c2, c * da + a);
          if (p.is_zero()) continue;
          for (std::size_t a1 = 0; a1 < da; ++a1)
            for (std::size_t out = 0; out < da; ++out) {
              Scalar s = mu.at(out, a2 * da + a1);
              if (!s.is_zero()) b.add(base + out, a1 * dc + c2, p * s);
            }
        }
      for (std::size_t a1 = 0; a1 < da; ++a1)
        for (std::size_t out = 0; out < da; ++out) {
          Scalar s = mu.at(out, a1 * da + a);
          if (!s.is_zero()) b.add(base + out, a1 * dc + c, -s);
        }
    }
  return exactla::kernel_basis(b.build());
}

// ---- resolutions ----

LinearMap bar_psi_differential(const EntwiningStructure& e, std::size_t n) {
  if (n == 0) throw PreconditionError("bar differential starts at degree 1");
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const auto& mu = e.algebra().mult;
  LinearMap d = compose(tensor(mu, id(f, dc), id(f, da, n)), tensor(id(f, da), e.psi(), id(f, da, n)));
  for (std::size_t k = 1; k <= n; ++k)
    d = d + algcoalg::scaled(sign(f, k), tensor(id(f, da), id(f, dc), id(f, da, k - 1), mu, id(f, da, n - k)));
  return d;
}

LinearMap bar_psi_homotopy(const EntwiningStructure& e, std::size_t n) {
  const FieldSpec& f = e.field();
  LinearMap h = tensor(id(f, e.dim_a()), id(f, e.dim_c()), id(f, e.dim_a(), n + 1), e.algebra().unit_map());
  return algcoalg::scaled(sign(f, n), h);
}

LinearMap cobar_psi_differential(const EntwiningStructure& e, std::size_t n) {
  const FieldSpec& f = e.field();
  const std::size_t da = e.dim_a(), dc = e.dim_c();
  const auto& delta = e.coalgebra().comult;
  LinearMap d =
      compose(tensor(id(f, dc), e.psi(), id(f, dc, n + 1)), tensor(delta, id(f, da), id(f, dc, n + 1)));
  for (std::size_t k = 1; k <= n + 1; ++k)
    d = d + algcoalg::scaled(sign(f, k),
                             tensor(id(f, dc), id(f, da), id(f, dc, k - 1), delta, id(f, dc, n + 1 - k)));
  return d;
}

LinearMap cobar_psi_homotopy(const EntwiningStructure& e, std::size_t n) {
  if (n == 0) throw PreconditionError("cobar homotopy starts at degree 1");
  const FieldSpec& f = e.field();
  LinearMap h = tensor(id(f, e.dim_c()), id(f, e.dim_a()), id(f, e.dim_c(), n), e.coalgebra().counit_map());
  return algcoalg::scaled(sign(f, n + 1), h);
}

}  // namespace entwine::complexes
