// Acceptance suite: one line per criterion, plus a structured report (--report PATH).

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <string>

#include "entwine/compalg/compalg.hpp"
#include "entwine/complexes/complexes.hpp"
#include "entwine/deform/deform.hpp"
#include "entwine/exactla/linalg.hpp"
#include "entwine/zoo/io.hpp"
#include "entwine/zoo/zoo.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace entwine;
using Json = nlohmann::ordered_json;
using algcoalg::LinearMap;
using compalg::CompContext;
using compalg::Side;
using exactla::FieldSpec;
using exactla::Matrix;
using exactla::Scalar;
using exactla::Vector;

namespace {

const FieldSpec Q;

struct Outcome {
  bool ok = true;
  Json data = Json::object();
  std::string note;  // first failure, for the console line

  void require(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0: no limit
  std::function<Outcome()> run;
};

std::vector<std::size_t> bettis(const complexes::CochainComplex& cx, std::size_t upto) {
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= upto; ++n) out.push_back(complexes::cohomology(cx, n).betti);
  return out;
}

std::size_t ipow(std::size_t b, std::size_t e) { return e == 0 ? 1 : b * ipow(b, e - 1); }

Outcome bowtie_suite() {
  Outcome o;
  auto ga = zoo::ground_algebra(Q);
  auto gc = zoo::ground_coalgebra(Q);
  auto z2 = zoo::cyclic_group_algebra(Q, 2);
  struct Case {
    std::string name;
    algcoalg::FiniteAlgebra a;
    algcoalg::FiniteCoalgebra c;
    LinearMap psi;
  };
  std::vector<Case> cases = {
      {"trivial (k, k)", ga, gc, zoo::trivial_entwining_map(ga, gc)},
      {"trivial (kZ2, kZ2)", z2.algebra, z2.coalgebra, zoo::trivial_entwining_map(z2.algebra, z2.coalgebra)},
  };
  for (auto [name, h] : {std::pair<std::string, zoo::HopfAlgebra>{"self kZ2", z2},
                         {"self kZ3", zoo::cyclic_group_algebra(Q, 3)},
                         {"self H4", zoo::sweedler_h4(Q)}})
    cases.push_back({name, h.algebra, h.coalgebra, zoo::self_entwining_map(h.algebra, h.coalgebra)});
  for (const auto& c : cases) {
    const bool ok = entwining::check_bowtie(c.a, c.c, c.psi).ok();
    o.data[c.name] = ok;
    o.require(ok, c.name + " fails the bow-tie");
  }
  const auto bad = zoo::load_raw(std::string(ENTWINE_DATA_DIR) + "/corrupted.json");
  const auto r = entwining::check_bowtie(bad.algebra, bad.coalgebra, bad.psi);
  const std::string named = r.first_failure() ? r.first_failure()->axiom : "";
  o.data["corrupted"] = named;
  o.require(named == entwining::kLeftPentagon, "corrupted fixture: expected left pentagon, got '" + named + "'");
  return o;
}

Outcome d_squared() {
  Outcome o;
  std::size_t products = 0;
  for (const auto& name : zoo::fixture_names()) {
    const auto e = zoo::fixture(name);
    const auto reg = algcoalg::regular_bimodule(e.algebra());
    const auto hom = complexes::hom_CM_bimodule(e, reg);
    const auto creg = algcoalg::regular_bicomodule(e.coalgebra());
    for (std::size_t n = 0; n + 1 <= 3; ++n) {
      auto check = [&](const Matrix& lo, const Matrix& hi, const std::string& which) {
        ++products;
        o.require((hi * lo).is_zero(), name + ": " + which + " d^" + std::to_string(n + 1) + "d^" + std::to_string(n));
      };
      check(complexes::differential_CpsiAM(e, reg, n), complexes::differential_CpsiAM(e, reg, n + 1), "C_psi(A, A)");
      check(complexes::differential_CpsiAM(e, hom, n), complexes::differential_CpsiAM(e, hom, n + 1),
            "C_psi(A, Hom(C, A))");
      check(complexes::differential_ApsiCV(e, creg, n), complexes::differential_ApsiCV(e, creg, n + 1), "A_psi(C, C)");
    }
  }
  o.data["products"] = products;
  return o;
}

Outcome hochschild_cartier_oracle() {
  Outcome o;
  std::size_t compared = 0;
  for (std::size_t order : {1, 2, 3}) {
    const auto h = zoo::cyclic_group_algebra(Q, order);
    const auto alg_side = zoo::trivial_entwining(h.algebra, zoo::ground_coalgebra(Q));
    const auto co_side = zoo::trivial_entwining(zoo::ground_algebra(Q), h.coalgebra);
    const auto reg = algcoalg::regular_bimodule(h.algebra);
    const auto creg = algcoalg::regular_bicomodule(h.coalgebra);
    for (std::size_t n = 0; n <= 4; ++n) {
      const std::string at = "order " + std::to_string(order) + ", n = " + std::to_string(n);
      o.require(complexes::differential_CpsiAM(alg_side, reg, n) == oracles::hochschild_oracle(h.algebra, reg, n),
                "Hochschild mismatch, " + at);
      o.require(complexes::differential_ApsiCV(co_side, creg, n) == oracles::cartier_oracle(h.coalgebra, creg, n),
                "Cartier mismatch, " + at);
      compared += 2;
    }
  }
  o.data["matrices_compared"] = compared;
  return o;
}

Outcome hopf_acyclicity() {
  Outcome o;
  const auto z2 = zoo::fixture("z2");
  const auto bz = bettis(complexes::build_CpsiAM(z2, algcoalg::regular_bimodule(z2.algebra()), 3), 2);
  o.data["z2"] = bz;
  o.require(bz == std::vector<std::size_t>{2, 0, 0}, "kZ2 betti differs from (2, 0, 0)");
  const auto sw = zoo::fixture("sweedler");
  const auto bq = bettis(complexes::build_CpsiAM(sw, algcoalg::regular_bimodule(sw.algebra()), 3), 2);
  o.data["sweedler_Q"] = bq;
  o.require(bq == std::vector<std::size_t>{4, 0, 0}, "H4 betti over Q differs from (4, 0, 0)");
  const auto swp = sw.over_field(FieldSpec::prime(10007));
  const auto bp = bettis(complexes::build_CpsiAM(swp, algcoalg::regular_bimodule(swp.algebra()), 3), 2);
  o.data["sweedler_F10007"] = bp;
  o.require(bp[0] == bq[0] && bp[1] == bq[1], "H4 betti over F_10007 differs from Q in degree <= 1");
  return o;
}

Outcome contracting_homotopy() {
  Outcome o;
  for (auto [name, n] : {std::pair<std::string, std::size_t>{"z2", 1}, {"z2", 2}, {"sweedler", 1}}) {
    const auto e = zoo::fixture(name);
    const auto m = algcoalg::regular_bimodule(e.algebra());
    const Matrix lhs = complexes::hopf_contracting_homotopy(e, m, n + 1) * complexes::differential_CpsiAM(e, m, n) +
                       complexes::differential_CpsiAM(e, m, n - 1) * complexes::hopf_contracting_homotopy(e, m, n);
    const bool ok = lhs == Matrix::identity(e.field(), lhs.rows());
    o.data[name + " n=" + std::to_string(n)] = ok;
    o.require(ok, name + ", n = " + std::to_string(n));
  }
  return o;
}

Outcome projectivity() {
  Outcome o;
  for (const std::string name : {"z2", "sweedler"}) {
    const auto e = zoo::fixture(name);
    const auto chi = complexes::projectivity_witness(e);
    o.require(chi.has_value(), name + ": no witness");
    if (!chi) continue;
    const std::size_t da = e.dim_a();
    o.require(algcoalg::compose(e.algebra().mult.reshaped({da, da}, {da}), *chi) ==
                  algcoalg::compose(e.algebra().unit_map(), e.coalgebra().counit_map()),
              name + ": witness does not split");
    const auto reg = algcoalg::regular_bimodule(e.algebra());
    const std::size_t b_reg = complexes::cohomology(complexes::build_CpsiAM(e, reg, 2), 1).betti;
    const std::size_t b_hom =
        complexes::cohomology(complexes::build_CpsiAM(e, complexes::hom_CM_bimodule(e, reg), 2), 1).betti;
    o.data[name] = {{"betti1_A", b_reg}, {"betti1_HomCA", b_hom}};
    o.require(b_reg == 0 && b_hom == 0, name + ": betti(1) nonzero");
  }
  return o;
}

Outcome weak_comp() {
  Outcome o;
  for (const auto& name : zoo::fixture_names())
    for (auto side : {Side::Algebra, Side::Coalgebra}) {
      CompContext ctx(zoo::fixture(name), side);
      const auto r = compalg::verify_weak_comp(ctx, 2);
      std::size_t cases = 0;
      for (const auto& c : r.checks) cases += c.cases;
      o.data[name + " " + compalg::side_name(side)] = cases;
      if (const auto* bad = r.first_failure())
        o.require(false, name + " " + compalg::side_name(side) + ": " + bad->name + ", " + bad->witness);
    }
  return o;
}

Outcome pi_identities() {
  Outcome o;
  for (const auto& name : zoo::fixture_names()) {
    const auto e = zoo::fixture(name);
    CompContext alg(e, Side::Algebra);
    const auto eps = alg.wrap(1, algcoalg::tensor(e.coalgebra().counit_map(), LinearMap::identity(e.field(), {e.dim_a()})));
    o.require(compalg::coboundary(alg, eps).map == alg.pi().map, name + ": pi != d(eps⊗A)");
    o.require(compalg::diamond(alg, alg.pi(), alg.pi()).map.matrix().is_zero(), name + ": pi◇pi != 0");
    CompContext co(e, Side::Coalgebra);
    const auto one = co.wrap(1, algcoalg::tensor(e.algebra().unit_map(), LinearMap::identity(e.field(), {e.dim_c()})));
    o.require(compalg::coboundary(co, one).map == co.pi().map, name + ": coalgebra side pi != d(1⊗C)");
    o.require(compalg::diamond(co, co.pi(), co.pi()).map.matrix().is_zero(), name + ": coalgebra side pi◇pi != 0");
  }
  o.data["fixtures"] = zoo::fixture_names().size();
  return o;
}

Outcome derivation_and_homotopy() {
  Outcome o;
  CompContext ctx(zoo::fixture("z2"), Side::Algebra);
  for (const auto& rep : {compalg::check_derivation_exhaustive(ctx, 3), compalg::check_homotopy_formula_exhaustive(ctx, 3)})
    for (const auto& c : rep.checks) {
      o.data[c.name] = c.cases;
      o.require(c.ok, c.name + ": " + c.witness);
    }
  return o;
}

Outcome commutativity_residual() {
  Outcome o;
  for (const auto& name : zoo::fixture_names()) {
    const auto e = zoo::fixture(name);
    CompContext ctx(e, Side::Algebra);
    const auto cx = complexes::build_CpsiAM(e, algcoalg::regular_bimodule(e.algebra()), 4);
    std::size_t pairs = 0;
    for (std::size_t m = 0; m <= 3; ++m)
      for (std::size_t n = 0; m + n <= 3; ++n) {
        const auto r = compalg::graded_commutativity(ctx, cx, m, n);
        pairs += r.pairs.size();
        o.require(r.ok(), name + ": (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) + ")");
      }
    o.data[name] = pairs;
  }
  return o;
}

Outcome equivariant_suite() {
  Outcome o;
  CompContext ctx(zoo::fixture("z2"), Side::Algebra);
  Json dims = Json::array();
  for (std::size_t n = 0; n <= 2; ++n) {
    const std::size_t d = compalg::equivariant_basis(ctx, n).size();
    dims.push_back(d);
    // equivariant cochains on kZ2 are f(c, a) ∈ k·a¹⋯aⁿ: one free value per c and per group element
    o.require(d == 2 * ipow(2, n), "equivariant dimension in degree " + std::to_string(n));
  }
  o.data["dims"] = dims;
  for (const auto& rep : {compalg::equivariant_checks(ctx, 2), compalg::translation_criterion_check(ctx, 2)})
    for (const auto& c : rep.checks) {
      o.data[c.name] = c.cases;
      o.require(c.ok, c.name + ": " + c.witness);
    }
  return o;
}

Outcome double_complex() {
  Outcome o;
  for (const auto& name : zoo::fixture_names()) {
    const auto e = zoo::fixture(name);
    try {
      const auto g = deform::build_double_complex(e, 2, 2);
      for (std::size_t m = 0; m <= 2; ++m)
        for (std::size_t n = 0; n <= 2; ++n) {
          if (m < 2 && n < 2)
            o.require(g.vertical(m + 1, n) * g.horizontal(m, n) == g.horizontal(m, n + 1) * g.vertical(m, n),
                      name + ": d d̄ != d̄ d at (" + std::to_string(m) + ", " + std::to_string(n) + ")");
          if (m == 0) o.require((g.horizontal(1, n) * g.horizontal(0, n)).is_zero(), name + ": d² != 0");
          if (n == 0) o.require((g.vertical(m, 1) * g.vertical(m, 0)).is_zero(), name + ": d̄² != 0");
        }
      const auto tc = deform::build_CH(e, 3);
      Json dims = Json::array();
      const std::size_t da = e.dim_a(), dc = e.dim_c();
      for (std::size_t N = 0; N <= 3; ++N) {
        if (N + 1 <= 3) o.require((tc.D(N + 1) * tc.D(N)).is_zero(), name + ": D² != 0 at " + std::to_string(N));
        std::size_t expect = 0;
        if (N > 0) {
          expect = ipow(da, N) * da + dc * ipow(dc, N);
          for (std::size_t k = 1; k < N; ++k) expect += dc * ipow(da, N - k) * da * ipow(dc, k);
        }
        o.require(tc.dim(N) == expect, name + ": C_H dimension in degree " + std::to_string(N));
        dims.push_back(tc.dim(N));
      }
      o.data[name] = dims;
    } catch (const std::exception& ex) {
      o.require(false, name + ": " + ex.what());
    }
  }
  return o;
}

Outcome deformation_round_trip() {
  Outcome o;
  const auto e = zoo::fixture("z2");
  const auto tc = deform::build_CH(e, 2);
  const auto h2 = deform::total_cohomology(tc, 2);
  for (std::size_t i = 0; i < h2.cocycle_basis.size(); ++i) {
    const auto r = deform::first_order_checks(e, deform::deformation_from_cochain(e, tc, h2.cocycle_basis[i]));
    if (const auto* bad = r.first_failure()) o.require(false, "cocycle " + std::to_string(i) + ": " + bad->name);
  }
  for (std::size_t i = 0; i < h2.coboundary_basis.size(); ++i) {
    const auto w = deform::coboundary_witness(tc, h2.coboundary_basis[i]);
    o.require(w.has_value(), "coboundary " + std::to_string(i) + " has no preimage");
    if (!w) continue;
    const auto q = deform::coboundary_equivalence(e, tc, h2.coboundary_basis[i], *w);
    if (const auto* bad = q.checks.first_failure()) o.require(false, "coboundary " + std::to_string(i) + ": " + bad->name);
  }
  std::mt19937_64 rng(0);
  Vector z;
  for (std::size_t i = 0; i < tc.dim(2); ++i) z.emplace_back(e.field(), static_cast<long>(rng() % 7) - 3);
  const bool cocycle = exactla::is_zero(tc.D(2).apply(z));
  const auto r = deform::first_order_checks(e, deform::deformation_from_cochain(e, tc, z));
  o.require(!cocycle, "the seed-0 sample is a cocycle");
  o.require(!r.ok(), "the seed-0 non-cocycle passes every first-order check");
  o.data = {{"Z2", h2.cocycle_basis.size()},
            {"B2", h2.coboundary_basis.size()},
            {"H2", h2.betti},
            {"non_cocycle_fails", r.first_failure() ? r.first_failure()->name : ""}};
  return o;
}

std::vector<Criterion> criteria() {
  return {
      {1, "bow-tie suite", 1, bowtie_suite},
      {2, "d∘d = 0 for C_psi(A, M) and A_psi(C, V)", 30, d_squared},
      {3, "Hochschild and Cartier oracles", 0, hochschild_cartier_oracle},
      {4, "Hopf acyclicity", 300, hopf_acyclicity},
      {5, "contracting homotopy", 0, contracting_homotopy},
      {6, "projectivity witness", 0, projectivity},
      {7, "weak comp axioms, both sides", 120, weak_comp},
      {8, "pi = d(eps⊗A) and pi◇pi = 0", 0, pi_identities},
      {9, "derivation and homotopy formula on kZ2", 0, derivation_and_homotopy},
      {10, "graded commutativity residual", 0, commutativity_residual},
      {11, "equivariant suite", 0, equivariant_suite},
      {12, "double complex and C_H", 0, double_complex},
      {13, "deformation round trip on kZ2", 300, deformation_round_trip},
  };
}

struct SuiteRun {
  Json report;
  std::vector<std::pair<bool, std::string>> lines;
};

SuiteRun run_suite(bool print) {
  SuiteRun s;
  s.report["schema"] = "entwine-report/1";
  s.report["suite"] = "acceptance";
  Json results = Json::array();
  for (const auto& c : criteria()) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = o.ok;
    std::string note = o.note;
    if (c.limit_seconds > 0 && secs > c.limit_seconds) {
      ok = false;
      if (note.empty()) note = "over the time limit of " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    results.push_back({{"criterion", c.id}, {"title", c.title}, {"ok", o.ok}, {"data", o.data}});
    if (print) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.2f s", secs);
      std::cout << "criterion " << (c.id < 10 ? " " : "") << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title
                << " (" << buf << ")" << (note.empty() ? "" : "  " + note) << std::endl;
    }
    s.lines.push_back({ok, note});
  }
  s.report["criteria"] = results;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  std::string report_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--report") report_path = argv[i + 1];

  const SuiteRun first = run_suite(true);
  bool all = true;
  for (const auto& [ok, note] : first.lines) all = all && ok;

  // criterion 14: a second full run must give the same bytes
  const auto t0 = std::chrono::steady_clock::now();
  const std::string a = zoo::render_json(first.report);
  const std::string b = zoo::render_json(run_suite(false).report);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f s", secs);
  const bool same = a == b;
  std::cout << "criterion 14: " << (same ? "PASS" : "FAIL") << "  two runs give byte-identical reports (" << buf << ")"
            << (same ? "" : "  reports differ") << std::endl;
  all = all && same;

  if (!report_path.empty()) std::ofstream(report_path, std::ios::binary) << a;
  return all ? 0 : 1;
}
