#include <optional>
#include <sstream>

#include "entwine/compalg/compalg.hpp"
#include "entwine/errors.hpp"
#include "entwine/exactla/linalg.hpp"
#include "symbolic.hpp"

namespace entwine::compalg {

namespace {

using detail::Evaluator;

Scalar sign(const FieldSpec& f, std::size_t k) { return Scalar(f, k % 2 == 0 ? 1 : -1); }

// Folds one sub-check into an aggregate, keeping the first witness.
void absorb(CheckResult& into, const CheckResult& part, const std::string& where, std::size_t cases) {
  into.cases += cases;
  if (!part.ok && into.ok) {
    into.ok = false;
    into.witness = where + ": " + part.witness;
  }
}

std::string tuple(std::initializer_list<std::pair<const char*, std::size_t>> kv) {
  std::ostringstream s;
  bool first = true;
  for (const auto& [k, v] : kv) {
    s << (first ? "" : " ") << k << "=" << v;
    first = false;
  }
  return s.str();
}

// Cochains where degree -1 (the zero space) is represented by nullopt.
using Opt = std::optional<Cochain>;

Opt comp_opt(const CompContext& ctx, const Opt& a, std::size_t i, const Opt& b) {
  if (!a || !b || a->degree + b->degree == 0) return std::nullopt;
  return comp_i(ctx, *a, i, *b);
}

Opt dia(const CompContext& ctx, const Opt& a, const Opt& b) {
  if (!a || !b || a->degree + b->degree == 0) return std::nullopt;
  return diamond(ctx, *a, *b);
}

Opt dee(const CompContext& ctx, const Opt& a) {
  if (!a) return std::nullopt;
  return coboundary(ctx, *a);
}

Opt lin(const CompContext& ctx, const std::vector<std::pair<Scalar, Opt>>& terms) {
  std::optional<Matrix> acc;
  std::size_t deg = 0;
  for (const auto& [s, c] : terms) {
    if (!c) continue;
    if (acc && c->degree != deg) throw InternalConsistencyError("identity mixes degrees");
    deg = c->degree;
    Matrix m = c->map.matrix().scaled(s);
    acc = acc ? *acc + m : m;
  }
  if (!acc) return std::nullopt;
  return ctx.wrap(deg, LinearMap(ctx.domain(deg), ctx.codomain(deg), *acc));
}

bool same(const Opt& a, const Opt& b) {
  if (!a && !b) return true;
  if (!a) return b->map.matrix().is_zero();
  if (!b) return a->map.matrix().is_zero();
  return a->degree == b->degree && a->map == b->map;
}

bool is_pi(const CompContext& ctx, const Cochain& f) { return f.degree == 2 && f.map == ctx.pi().map; }

// Dense deterministic cochain with entries in {-2..2}; enough to exercise the
// vanishing rule without relying on a sparse pattern.
Cochain filled(const CompContext& ctx, std::size_t m) {
  Vector v;
  v.reserve(ctx.dim(m));
  for (std::size_t k = 0; k < ctx.dim(m); ++k) v.emplace_back(ctx.field(), static_cast<long>((k * 7 + 3) % 5) - 2);
  return ctx.from_flat(m, v);
}

bool homotopy_formula_holds(const CompContext& ctx, const Cochain& f, const Cochain& g) {
  const FieldSpec& fs = ctx.field();
  const std::size_t m = f.degree, n = g.degree;
  const Scalar sn = sign(fs, n + 1);  // (-1)^{n-1}
  Opt lhs = lin(ctx, {{Scalar::one(fs), dia(ctx, f, dee(ctx, g))},
                      {Scalar(fs, -1), dee(ctx, dia(ctx, f, g))},
                      {sn, dia(ctx, dee(ctx, f), g)}});
  Opt rhs = lin(ctx, {{sn, sqcup(ctx, g, f)}, {-(sn * sign(fs, m * n)), cup(ctx, f, g)}});
  return same(lhs, rhs);
}

}  // namespace

Report verify_weak_comp(const CompContext& ctx, std::size_t degree_cap, const std::optional<Cochain>& special) {
  if (degree_cap > 3) throw PreconditionError("verify_weak_comp: degree_cap above 3");
  const std::vector<std::string> names{"f", "g", "h"};
  Report rep;

  CheckResult c1{"(1) f∘i g = 0 for i > m-1"};
  for (std::size_t m = 0; m <= degree_cap; ++m)
    for (std::size_t n = 0; n <= degree_cap; ++n) {
      if (m + n == 0) continue;
      const Cochain f = filled(ctx, m), g = filled(ctx, n);
      for (std::size_t i = m; i < m + 2; ++i) {
        ++c1.cases;
        if (!comp_i(ctx, f, i, g).map.matrix().is_zero() && c1.ok) {
          c1.ok = false;
          c1.witness = tuple({{"m", m}, {"n", n}, {"i", i}});
        }
      }
    }
  rep.checks.push_back(c1);

  CheckResult c2{"(2) (f∘i g)∘j h = f∘i (g∘(j-i) h), i <= j < n+i"};
  for (std::size_t m = 1; m <= degree_cap; ++m)
    for (std::size_t n = 1; n <= degree_cap; ++n)
      for (std::size_t p = 0; p <= degree_cap; ++p) {
        Evaluator ev(ctx);
        const int f = ev.var(0, m), g = ev.var(1, n), h = ev.var(2, p);
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t j = i; j < n + i; ++j) {
            const int lhs = ev.comp(ev.comp(f, i, g), j, h);
            const int rhs = ev.comp(f, i, ev.comp(g, j - i, h));
            absorb(c2, ev.check_zero(ev.difference(lhs, rhs), c2.name, names),
                   tuple({{"m", m}, {"n", n}, {"p", p}, {"i", i}, {"j", j}}), ctx.dim(m) * ctx.dim(n) * ctx.dim(p));
          }
      }
  rep.checks.push_back(c2);

  const Cochain& s = special ? *special : ctx.pi();
  if (s.side != ctx.side()) throw PreconditionError("special cochain on the wrong side");
  const std::string sname = special ? "s" : "pi";
  CheckResult c3{"(3) (f∘i g)∘j h = (f∘j h)∘(i+p-1) g, j < i, g or h = " + sname};
  const std::size_t q = s.degree;
  for (std::size_t m = 1; m <= degree_cap; ++m)
    for (std::size_t n = 0; n <= degree_cap; ++n) {
      Evaluator ev(ctx);
      const int f = ev.var(0, m), x = ev.var(2, n), sp = ev.leaf(s);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < i; ++j) {
          // g = s, h = x of degree n
          int lhs = ev.comp(ev.comp(f, i, sp), j, x);
          int rhs = ev.comp(ev.comp(f, j, x), i + n - 1, sp);  // i >= 1 here
          absorb(c3, ev.check_zero(ev.difference(lhs, rhs), c3.name, names),
                 tuple({{"m", m}, {"g=s, p", n}, {"i", i}, {"j", j}}), ctx.dim(m) * ctx.dim(n));
          // h = s, g = x of degree n
          lhs = ev.comp(ev.comp(f, i, x), j, sp);
          rhs = ev.comp(ev.comp(f, j, sp), i + q - 1, x);
          absorb(c3, ev.check_zero(ev.difference(lhs, rhs), c3.name, names),
                 tuple({{"m", m}, {"h=s, n", n}, {"i", i}, {"j", j}}), ctx.dim(m) * ctx.dim(n));
        }
    }
  rep.checks.push_back(c3);

  CheckResult c4{"(4) pi∘0 pi = pi∘1 pi"};
  c4.cases = 1;
  if (!(comp_i(ctx, ctx.pi(), 0, ctx.pi()).map == comp_i(ctx, ctx.pi(), 1, ctx.pi()).map)) {
    c4.ok = false;
    c4.witness = "matrices differ";
  }
  rep.checks.push_back(c4);
  return rep;
}

Report check_prelie_identities(const CompContext& ctx, const Cochain& f, const Cochain& g, const Cochain& h) {
  const FieldSpec& fs = ctx.field();
  const Cochain& pi = ctx.pi();
  const std::size_t m = f.degree, n = g.degree, p = h.degree;
  Report rep;

  if (is_pi(ctx, f) || is_pi(ctx, g) || is_pi(ctx, h)) {
    CheckResult r{"associator with pi"};
    r.cases = 1;
    Opt lhs = lin(ctx, {{Scalar::one(fs), dia(ctx, dia(ctx, f, g), h)}, {Scalar(fs, -1), dia(ctx, f, dia(ctx, g, h))}});
    std::vector<std::pair<Scalar, Opt>> terms;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j + 2 <= m + n; ++j) {
        if (!(j < i || j >= n + i)) continue;
        terms.emplace_back(sign(fs, i * (n + 1) + j * (p + 1)), comp_opt(ctx, comp_opt(ctx, f, i, g), j, h));
      }
    if (!same(lhs, lin(ctx, terms))) {
      r.ok = false;
      r.witness = tuple({{"m", m}, {"n", n}, {"p", p}});
    }
    rep.checks.push_back(r);
  }

  CheckResult r2{"pi-associator symmetry"};
  r2.cases = 1;
  {
    Opt lhs = lin(ctx, {{Scalar::one(fs), dia(ctx, dia(ctx, f, g), pi)}, {Scalar(fs, -1), dia(ctx, f, dia(ctx, g, pi))}});
    Opt rhs = lin(ctx, {{sign(fs, n + 1), dia(ctx, dia(ctx, f, pi), g)},
                        {-sign(fs, n + 1), dia(ctx, f, dia(ctx, pi, g))}});
    if (!same(lhs, rhs)) {
      r2.ok = false;
      r2.witness = tuple({{"m", m}, {"n", n}});
    }
  }
  rep.checks.push_back(r2);

  CheckResult r3{"homotopy formula"};
  r3.cases = 1;
  if (!homotopy_formula_holds(ctx, f, g)) {
    r3.ok = false;
    r3.witness = tuple({{"m", m}, {"n", n}});
  }
  rep.checks.push_back(r3);
  return rep;
}

Report check_derivation_exhaustive(const CompContext& ctx, std::size_t max_total) {
  const FieldSpec& fs = ctx.field();
  CheckResult rc{"d derivation for cup"}, rs{"d derivation for sqcup"};
  for (std::size_t m = 0; m <= max_total; ++m) {
    std::vector<Cochain> fb, dfb;
    for (std::size_t k = 0; k < ctx.dim(m); ++k) {
      fb.push_back(ctx.basis(m, k));
      dfb.push_back(coboundary(ctx, fb.back()));
    }
    for (std::size_t n = 0; m + n <= max_total; ++n)
      for (std::size_t l = 0; l < ctx.dim(n); ++l) {
        const Cochain g = ctx.basis(n, l), dg = coboundary(ctx, g);
        for (std::size_t k = 0; k < fb.size(); ++k) {
          const Cochain& f = fb[k];
          const std::string where = tuple({{"m", m}, {"n", n}, {"f=e", k}, {"g=e", l}});
          Opt lc = coboundary(ctx, cup(ctx, f, g));
          Opt rc_ = lin(ctx, {{Scalar::one(fs), cup(ctx, dfb[k], g)}, {sign(fs, m), cup(ctx, f, dg)}});
          ++rc.cases;
          if (!same(lc, rc_) && rc.ok) {
            rc.ok = false;
            rc.witness = where;
          }
          Opt ls = coboundary(ctx, sqcup(ctx, f, g));
          Opt rs_ = lin(ctx, {{Scalar::one(fs), sqcup(ctx, dfb[k], g)}, {sign(fs, m), sqcup(ctx, f, dg)}});
          ++rs.cases;
          if (!same(ls, rs_) && rs.ok) {
            rs.ok = false;
            rs.witness = where;
          }
        }
      }
  }
  return Report{{rc, rs}};
}

Report check_homotopy_formula_exhaustive(const CompContext& ctx, std::size_t max_total) {
  CheckResult r{"homotopy formula"};
  for (std::size_t m = 0; m <= max_total; ++m)
    for (std::size_t n = 0; m + n <= max_total; ++n)
      for (std::size_t k = 0; k < ctx.dim(m); ++k)
        for (std::size_t l = 0; l < ctx.dim(n); ++l) {
          ++r.cases;
          if (!homotopy_formula_holds(ctx, ctx.basis(m, k), ctx.basis(n, l)) && r.ok) {
            r.ok = false;
            r.witness = tuple({{"m", m}, {"n", n}, {"f=e", k}, {"g=e", l}});
          }
        }
  return Report{{r}};
}

CommutativityReport graded_commutativity(const CompContext& ctx, const complexes::CochainComplex& cx,
                                         std::size_t m, std::size_t n) {
  const FieldSpec& fs = ctx.field();
  for (std::size_t k : {m, n, m + n})
    if (k <= cx.max_degree() && cx.dim(k) != ctx.dim(k))
      throw PreconditionError("graded_commutativity: complex does not match the context");
  const auto hm = complexes::cohomology(cx, m);
  const auto hn = complexes::cohomology(cx, n);
  CommutativityReport rep;
  for (std::size_t a = 0; a < hm.class_reps.size(); ++a)
    for (std::size_t b = 0; b < hn.class_reps.size(); ++b) {
      const Cochain xi = ctx.from_flat(m, hm.class_reps[a]), eta = ctx.from_flat(n, hn.class_reps[b]);
      const Vector diff =
          exactla::subtract(cup(ctx, xi, eta).flat(), exactla::scale(sign(fs, m * n), sqcup(ctx, eta, xi).flat()));
      PairResult pr{m, n, a, b, false};
      if (m + n == 0) pr.ok = exactla::is_zero(diff);
      else pr.ok = exactla::solve(cx.differential(m + n - 1), diff).has_value();
      rep.pairs.push_back(pr);
    }
  return rep;
}

}  // namespace entwine::compalg
