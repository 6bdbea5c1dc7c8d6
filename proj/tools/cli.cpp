#include "entwine/cli/cli.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "entwine/algcoalg/validate.hpp"
#include "entwine/compalg/compalg.hpp"
#include "entwine/complexes/complexes.hpp"
#include "entwine/deform/deform.hpp"
#include "entwine/errors.hpp"
#include "entwine/exactla/linalg.hpp"
#include "entwine/zoo/io.hpp"
#include "json.hpp"

namespace entwine::cli {

using Json = nlohmann::ordered_json;
using entwining::EntwiningStructure;
using exactla::Vector;

namespace {

constexpr std::size_t kDefaultDegree = 3;
constexpr std::size_t kHardDegree = 4;

// Usage problems that CLI11 cannot see (degree caps, bad --values).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A structure that parsed but failed validation; carries the report-ready message.
struct InvalidStructure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json coeffs(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

std::string join(const Json& arr) {
  std::string s;
  for (std::size_t i = 0; i < arr.size(); ++i) s += (i ? " " : "") + (arr[i].is_string() ? arr[i].get<std::string>() : arr[i].dump());
  return s;
}

class Session {
 public:
  Session(std::ostream& out, const std::string& command, const std::vector<std::string>& args) : out_(out) {
    doc_["schema"] = kReportSchema;
    doc_["command"] = {{"name", command}, {"args", args}};
    out_ << "entwine";
    for (const auto& a : args) out_ << ' ' << a;
    out_ << '\n';
  }

  void structure(const zoo::StructureData& s, const std::string& source) {
    doc_["structure"] = {{"source", source},
                         {"field", s.algebra.field.to_string()},
                         {"dim_A", s.algebra.dim},
                         {"dim_C", s.coalgebra.dim},
                         {"galois", s.galois.has_value()}};
    out_ << "structure " << source << ": field " << s.algebra.field.to_string() << ", dim A = " << s.algebra.dim
         << ", dim C = " << s.coalgebra.dim << (s.galois ? ", with translation map" : "") << '\n';
  }

  void check(const std::string& name, bool ok, std::size_t cases, const std::string& witness = "",
             const std::string& detail = "") {
    Json c = {{"name", name}, {"ok", ok}, {"cases", cases}};
    if (!ok && !witness.empty()) c["witness"] = witness;
    if (!detail.empty()) c["detail"] = detail;
    checks_.push_back(std::move(c));
    ok_ = ok_ && ok;
    out_ << "  [" << (ok ? "pass" : "FAIL") << "] " << name << " (" << cases << (cases == 1 ? " case" : " cases") << ")";
    if (!ok && !witness.empty()) out_ << ": " << witness;
    if (!detail.empty()) out_ << " - " << detail;
    out_ << '\n';
  }

  void check(const compalg::CheckResult& r, const std::string& prefix = "") {
    check(prefix + r.name, r.ok, r.cases, r.witness);
  }

  void table(const std::string& key, Json value, const std::string& text) {
    tables_[key] = std::move(value);
    out_ << text;
  }

  void line(const std::string& text) { out_ << text << '\n'; }

  bool ok() const { return ok_; }

  Json finish(std::optional<double> seconds) {
    doc_["checks"] = checks_;
    doc_["tables"] = tables_;
    doc_["result"] = ok_ ? "pass" : "fail";
    out_ << "result: " << (ok_ ? "PASS" : "FAIL") << '\n';
    if (seconds) {
      std::ostringstream s;
      s << std::fixed << std::setprecision(3) << *seconds;
      doc_["timing"] = {{"seconds", s.str()}};
      out_ << "time: " << s.str() << " s\n";
    }
    return doc_;
  }

 private:
  std::ostream& out_;
  Json doc_;
  Json checks_ = Json::array();
  Json tables_ = Json::object();
  bool ok_ = true;
};

struct Options {
  std::string json_path;
  std::uint64_t seed = 0;
  bool timing = false;
  bool unsafe_degree = false;
};

void cap_degree(const Options& o, std::size_t n, const std::string& what) {
  if (n > kHardDegree && !o.unsafe_degree)
    throw UsageError(what + " " + std::to_string(n) + " is above " + std::to_string(kHardDegree) +
                     "; pass --unsafe-degree to allow it");
}

// Loads and fully validates; validation failures become a failed "structure valid" check.
EntwiningStructure load_checked(Session& s, const std::string& path) {
  zoo::StructureData raw = zoo::load_raw(path);
  s.structure(raw, path);
  try {
    return EntwiningStructure(raw.algebra, raw.coalgebra, raw.psi, raw.galois);
  } catch (const BowTieError& e) {
    s.check("structure valid", false, 1, e.relation() + ": " + e.what());
    throw InvalidStructure(std::string("bow-tie relation fails: ") + e.relation());
  } catch (const ValidationError& e) {
    s.check("structure valid", false, 1, e.what());
    throw InvalidStructure(e.what());
  }
}

// ---- commands ----

void cmd_verify(Session& s, const std::string& path) {
  zoo::StructureData raw = zoo::load_raw(path);
  s.structure(raw, path);
  auto report = [&](const algcoalg::ValidationReport& r, const std::string& prefix) {
    for (const auto& c : r.checks) s.check(prefix + c.axiom, c.passed, 1, c.witness);
  };
  report(algcoalg::validate_algebra(raw.algebra), "algebra: ");
  report(algcoalg::validate_coalgebra(raw.coalgebra), "coalgebra: ");
  const auto bowtie = entwining::check_bowtie(raw.algebra, raw.coalgebra, raw.psi);
  for (const auto& c : bowtie.relations) s.check(c.axiom, c.passed, 1, c.witness);
  if (raw.galois) report(entwining::validate_galois(raw.algebra, raw.coalgebra, raw.psi, *raw.galois), "galois: ");
  if (const auto* bad = bowtie.first_failure()) s.line("bow-tie fails: " + bad->axiom);
}

void cmd_cohom(Session& s, const Options& o, const std::string& path, const std::string& side,
               const std::string& values, const std::string& values_file, std::size_t n) {
  cap_degree(o, n, "--max-degree");
  if (n == 0) throw UsageError("--max-degree must be at least 1");
  if (values == "file" && values_file.empty()) throw UsageError("--values file needs --values-file PATH");
  if (values != "file" && !values_file.empty()) throw UsageError("--values-file only goes with --values file");
  EntwiningStructure e = load_checked(s, path);

  complexes::CochainComplex cx;
  std::string coeff;
  if (side == "A") {
    algcoalg::Bimodule m;
    if (values == "self") {
      m = algcoalg::regular_bimodule(e.algebra());
      coeff = "M = A";
    } else if (values == "regular") {
      m = algcoalg::free_bimodule(e.algebra());
      coeff = "M = A⊗A";
    } else {
      m = zoo::parse_bimodule(zoo::read_text_file(values_file), e.algebra());
      coeff = "M from " + values_file;
    }
    cx = complexes::build_CpsiAM(e, m, n);
  } else {
    algcoalg::Bicomodule v;
    if (values == "self") {
      v = algcoalg::regular_bicomodule(e.coalgebra());
      coeff = "V = C";
    } else if (values == "regular") {
      v = algcoalg::free_bicomodule(e.coalgebra());
      coeff = "V = C⊗C";
    } else {
      v = zoo::parse_bicomodule(zoo::read_text_file(values_file), e.coalgebra());
      coeff = "V from " + values_file;
    }
    cx = complexes::build_ApsiCV(e, v, n);
  }
  s.line("complex " + std::string(side == "A" ? "C_psi(A, M)" : "A_psi(C, V)") + ", " + coeff);
  // the complex constructor refuses anything with d∘d ≠ 0
  s.check("d∘d = 0", true, cx.num_differentials() > 0 ? cx.num_differentials() - 1 : 0);

  Json dims = Json::array(), betti = Json::array();
  for (std::size_t k = 0; k <= n; ++k) dims.push_back(cx.dim(k));
  for (std::size_t k = 0; k < n; ++k) betti.push_back(complexes::cohomology(cx, k).betti);
  s.table("cochain_dims", dims, "cochain dims (degrees 0.." + std::to_string(n) + "): " + join(dims) + "\n");
  s.table("betti", betti, "betti (degrees 0.." + std::to_string(n - 1) + "): " + join(betti) + "\n");
}

void cmd_cup(Session& s, const Options& o, const std::string& path, std::size_t m, std::size_t n) {
  cap_degree(o, m + n + 1, "--deg needs cochains of degree");
  EntwiningStructure e = load_checked(s, path);
  compalg::CompContext ctx(e, compalg::Side::Algebra);
  const auto cx = complexes::build_CpsiAM(e, algcoalg::regular_bimodule(e.algebra()), m + n + 1);
  const auto hm = complexes::cohomology(cx, m), hn = complexes::cohomology(cx, n), hmn = complexes::cohomology(cx, m + n);
  const exactla::Scalar sgn(e.field(), (m * n) % 2 == 0 ? 1 : -1);

  Json rows = Json::array();
  std::ostringstream text;
  text << "H^" << m << " x H^" << n << " -> H^" << m + n << " (dims " << hm.betti << ", " << hn.betti << ", "
       << hmn.betti << "), class coordinates:\n";
  for (std::size_t a = 0; a < hm.class_reps.size(); ++a)
    for (std::size_t b = 0; b < hn.class_reps.size(); ++b) {
      const auto xi = ctx.from_flat(m, hm.class_reps[a]), eta = ctx.from_flat(n, hn.class_reps[b]);
      const Json c = coeffs(hmn.reduce(compalg::cup(ctx, xi, eta).flat()));
      const Json q = coeffs(hmn.reduce(exactla::scale(sgn, compalg::sqcup(ctx, eta, xi).flat())));
      rows.push_back({{"xi", a}, {"eta", b}, {"cup", c}, {"signed_sqcup_swapped", q}});
      text << "  xi" << a << " ∪ eta" << b << " = [" << join(c) << "],  (-1)^mn eta" << b << " ⊔ xi" << a << " = ["
           << join(q) << "]\n";
    }
  s.table("cup", rows, text.str());

  const auto rep = compalg::graded_commutativity(ctx, cx, m, n);
  std::string witness;
  for (const auto& p : rep.pairs)
    if (!p.ok && witness.empty()) witness = "xi" + std::to_string(p.xi) + ", eta" + std::to_string(p.eta);
  s.check("ξ∪η - (-1)^mn η⊔ξ is a coboundary", rep.ok(), rep.pairs.size(), witness);
}

void cmd_equivariant(Session& s, const Options& o, const std::string& path, std::size_t n) {
  cap_degree(o, n, "--max-degree");
  if (n == 0) throw UsageError("--max-degree must be at least 1");
  EntwiningStructure e = load_checked(s, path);
  compalg::CompContext ctx(e, compalg::Side::Algebra);
  Json dims = Json::array();
  for (std::size_t k = 0; k <= n; ++k) dims.push_back(compalg::equivariant_basis(ctx, k).size());
  s.table("equivariant_dims", dims, "dim of equivariant cochains (degrees 0.." + std::to_string(n) + "): " + join(dims) + "\n");
  for (const auto& c : compalg::equivariant_checks(ctx, n - 1).checks) s.check(c);
  if (e.galois()) {
    for (const auto& c : compalg::translation_criterion_check(ctx, n).checks) s.check(c);
  } else {
    s.line("no translation map: the f∪τ = τ*f criterion is skipped");
  }
}

void cmd_deform(Session& s, const Options& o, const std::string& path, std::size_t n) {
  if (n < 2) throw UsageError("--max-degree must be at least 2 for deformations");
  if (n > 3) throw UsageError("the total complex is built up to degree 3 (--max-degree <= 3)");
  EntwiningStructure e = load_checked(s, path);
  const auto tc = deform::build_CH(e, n);
  s.check("D∘D = 0", true, n);

  Json dims = Json::array(), betti = Json::array();
  bool formula = true;
  for (std::size_t k = 0; k <= n + 1; ++k) {
    dims.push_back(tc.dim(k));
    formula = formula && tc.dim(k) == deform::CH_dimension_formula(e, k);
  }
  s.check("C_H dimensions match the direct-sum formula", formula, n + 2);
  for (std::size_t k = 0; k <= n; ++k) betti.push_back(deform::total_cohomology(tc, k).betti);
  s.table("CH_dims", dims, "C_H dims (degrees 0.." + std::to_string(n + 1) + "): " + join(dims) + "\n");
  s.table("betti", betti, "total betti (degrees 0.." + std::to_string(n) + "): " + join(betti) + "\n");

  const auto h2 = deform::total_cohomology(tc, 2);
  Json basis = Json::array();
  std::ostringstream text;
  text << "H^2_H basis (" << h2.class_reps.size() << (h2.class_reps.size() == 1 ? " class" : " classes") << "):\n";
  for (const auto& r : h2.class_reps) {
    basis.push_back(coeffs(r));
    text << "  [" << join(basis.back()) << "]\n";
  }
  s.table("H2_basis", basis, text.str());

  std::string witness;
  for (std::size_t i = 0; i < h2.cocycle_basis.size(); ++i) {
    const auto r = deform::first_order_checks(e, deform::deformation_from_cochain(e, tc, h2.cocycle_basis[i]));
    if (const auto* bad = r.first_failure(); bad && witness.empty())
      witness = "cocycle " + std::to_string(i) + ": " + bad->name + ", " + bad->witness;
  }
  s.check("every Z^2 basis cocycle is a first-order deformation", witness.empty(), h2.cocycle_basis.size(), witness);

  {
    const auto d = deform::deformation_from_cocycle(e, tc, exactla::zero_vector(e.field(), tc.dim(2)));
    const bool trivial = d.mu1.matrix().is_zero() && d.psi1.matrix().is_zero() && d.delta1.matrix().is_zero();
    s.check("z = 0 gives the trivial deformation", trivial && deform::first_order_checks(e, d).ok(), 1);
  }

  witness.clear();
  for (std::size_t i = 0; i < h2.coboundary_basis.size(); ++i) {
    const auto w = deform::coboundary_witness(tc, h2.coboundary_basis[i]);
    if (!w) {
      if (witness.empty()) witness = "coboundary " + std::to_string(i) + ": no preimage";
      continue;
    }
    const auto q = deform::coboundary_equivalence(e, tc, h2.coboundary_basis[i], *w);
    if (const auto* bad = q.checks.first_failure(); bad && witness.empty())
      witness = "coboundary " + std::to_string(i) + ": " + bad->name;
  }
  s.check("every B^2 basis coboundary is equivalent to the trivial deformation", witness.empty(),
          h2.coboundary_basis.size(), witness);

  // Entries in [-3, 3] from the seed; redraw in the unlikely event of a cocycle.
  std::mt19937_64 rng(o.seed);
  Vector z;
  std::size_t draws = 0;
  do {
    z.clear();
    for (std::size_t i = 0; i < tc.dim(2); ++i) z.emplace_back(e.field(), static_cast<long>(rng() % 7) - 3);
    ++draws;
  } while (exactla::is_zero(tc.D(2).apply(z)) && draws < 100);
  const bool cocycle = exactla::is_zero(tc.D(2).apply(z));
  const auto r = deform::first_order_checks(e, deform::deformation_from_cochain(e, tc, z));
  const auto* bad = r.first_failure();
  s.check("a pseudorandom non-cocycle fails a first-order check", !cocycle && bad != nullptr, 1,
          cocycle ? "no non-cocycle drawn" : "all first-order checks passed",
          bad ? "first failure: " + bad->name : "");
}

void cmd_example(Session& s, const std::string& name, const std::string& out_path, std::ostream& out) {
  const EntwiningStructure e = zoo::fixture(name);
  s.structure(zoo::StructureData{e.algebra(), e.coalgebra(), e.psi(), e.galois()}, name);
  Json info = {{"name", name}, {"description", zoo::fixture_description(name)}};
  if (out_path.empty()) {
    out << zoo::to_text(e);
  } else {
    zoo::save(e, out_path);
    info["path"] = out_path;
  }
  s.table("example", info, name + ": " + zoo::fixture_description(name) + (out_path.empty() ? "" : ", written to " + out_path) + "\n");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with entwining structures", "entwine"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--json", o.json_path, "write the structured report to this path");
  app.add_option("--seed", o.seed, "seed for pseudorandom sampling")->default_val(0);
  app.add_flag("--timing", o.timing, "report wall-clock time");
  app.add_flag("--unsafe-degree", o.unsafe_degree, "allow degrees above 4");

  std::string path, side = "A", values = "self", values_file, name, out_path;
  std::size_t max_degree = kDefaultDegree;
  std::vector<std::size_t> deg;

  auto* verify = app.add_subcommand("verify", "validate a structure file: algebra, coalgebra, bow-tie");
  verify->add_option("path", path, "structure file")->required();

  auto* cohom = app.add_subcommand("cohom", "betti numbers of the entwined cohomology");
  cohom->add_option("path", path, "structure file")->required();
  cohom->add_option("--side", side, "A: C_psi(A, M), C: A_psi(C, V)")->check(CLI::IsMember({"A", "C"}));
  cohom->add_option("--values", values, "coefficients: self (A or C), regular (A⊗A or C⊗C), file")
      ->check(CLI::IsMember({"self", "regular", "file"}));
  cohom->add_option("--values-file", values_file, "coefficient module for --values file");
  cohom->add_option("--max-degree", max_degree, "cochain degrees 0..N, cohomology 0..N-1");

  auto* cupc = app.add_subcommand("cup", "cup products of class representatives and graded commutativity");
  cupc->add_option("path", path, "structure file")->required();
  cupc->add_option("--deg", deg, "degrees m n")->expected(2)->required();

  auto* equiv = app.add_subcommand("equivariant", "the equivariant subcomplex and its checks");
  equiv->add_option("path", path, "structure file")->required();
  equiv->add_option("--max-degree", max_degree, "degrees 0..N");

  auto* deformc = app.add_subcommand("deform", "total cohomology and infinitesimal deformations");
  deformc->add_option("path", path, "structure file")->required();
  deformc->add_option("--max-degree", max_degree, "total degrees 0..N (2 or 3)");

  auto* example = app.add_subcommand("example", "write a built-in example as a structure file");
  example->add_option("name", name, "one of: " + [] {
    std::string s;
    for (const auto& n : zoo::fixture_names()) s += (s.empty() ? "" : ", ") + n;
    return s;
  }())->required();
  example->add_option("--out", out_path, "output path (default: standard output)");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "entwine: " << e.what() << '\n';
    return kInputError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  // example writes the structure itself to stdout when there is no --out
  std::ostringstream sink;
  std::ostream& text = (command == "example" && out_path.empty()) ? static_cast<std::ostream&>(sink) : out;
  Session s(text, command, args);
  int code = kPass;
  try {
    if (command == "verify") cmd_verify(s, path);
    else if (command == "cohom") cmd_cohom(s, o, path, side, values, values_file, max_degree);
    else if (command == "cup") cmd_cup(s, o, path, deg.at(0), deg.at(1));
    else if (command == "equivariant") cmd_equivariant(s, o, path, max_degree);
    else if (command == "deform") cmd_deform(s, o, path, max_degree);
    else cmd_example(s, name, out_path, out);
    code = s.ok() ? kPass : kCheckFailed;
  } catch (const InvalidStructure& e) {
    err << "entwine: " << e.what() << '\n';
    code = kCheckFailed;
  } catch (const ParseError& e) {
    err << "entwine: " << e.what() << '\n';
    return kInputError;
  } catch (const UsageError& e) {
    err << "entwine: " << e.what() << '\n';
    return kInputError;
  } catch (const ValidationError& e) {  // a coefficient module from --values-file
    err << "entwine: " << e.what() << '\n';
    return kInputError;
  } catch (const PreconditionError& e) {
    err << "entwine: " << e.what() << '\n';
    return kInputError;
  } catch (const std::exception& e) {
    err << "entwine: internal error: " << e.what() << '\n';
    return kCheckFailed;
  }

  std::optional<double> seconds;
  if (o.timing) seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Json doc = s.finish(seconds);
  if (!o.json_path.empty()) {
    std::ofstream f(o.json_path, std::ios::binary);
    if (!(f << zoo::render_json(doc))) {
      err << "entwine: cannot write " << o.json_path << '\n';
      return kInputError;
    }
  }
  return code;
}

}  // namespace entwine::cli
