#include "entwine/zoo/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "entwine/algcoalg/validate.hpp"
#include "entwine/errors.hpp"
#include "json.hpp"

namespace entwine::zoo {

using algcoalg::StructureTriple;
using exactla::Matrix;
using exactla::MatrixBuilder;
using exactla::Scalar;
using exactla::Vector;
using Json = nlohmann::ordered_json;

namespace {

std::string ptr(const std::string& base, const std::string& key) { return base + "/" + key; }
std::string ptr(const std::string& base, std::size_t i) { return base + "/" + std::to_string(i); }

const Json& member(const Json& obj, const std::string& key, const std::string& at) {
  if (!obj.is_object()) throw ParseError(at, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(ptr(at, key), "missing field");
  return *it;
}

std::size_t index(const Json& v, const std::string& at, std::size_t bound) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw ParseError(at, "expected a nonnegative integer");
  const auto x = v.get<std::size_t>();
  if (x >= bound) throw ParseError(at, "index " + std::to_string(x) + " out of range (< " + std::to_string(bound) + ")");
  return x;
}

Scalar coefficient(const FieldSpec& f, const Json& v, const std::string& at) {
  if (!v.is_string()) throw ParseError(at, "coefficient must be a string such as \"3/2\"");
  try {
    return Scalar::parse(f, v.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError(at, "bad coefficient \"" + v.get<std::string>() + "\": " + e.what());
  }
}

std::size_t dimension(const Json& obj, const std::string& at) {
  const Json& d = member(obj, "dim", at);
  if (!d.is_number_integer() || d.get<long long>() <= 0) throw ParseError(ptr(at, "dim"), "expected a positive integer");
  return d.get<std::size_t>();
}

std::vector<std::string> labels(const Json& obj, const std::string& at, std::size_t dim) {
  auto it = obj.find("labels");
  if (it == obj.end()) return {};
  const std::string here = ptr(at, "labels");
  if (!it->is_array() || it->size() != dim) throw ParseError(here, "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) {
    if (!(*it)[i].is_string()) throw ParseError(ptr(here, i), "label must be a string");
    out.push_back((*it)[i].get<std::string>());
  }
  return out;
}

Vector vector_field(const FieldSpec& f, const Json& obj, const std::string& key, const std::string& at, std::size_t dim) {
  const Json& v = member(obj, key, at);
  const std::string here = ptr(at, key);
  if (!v.is_array() || v.size() != dim) throw ParseError(here, "expected " + std::to_string(dim) + " coefficients");
  Vector out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back(coefficient(f, v[i], ptr(here, i)));
  return out;
}

std::vector<StructureTriple> triples(const FieldSpec& f, const Json& obj, const std::string& key, const std::string& at,
                                     std::size_t dim) {
  const Json& v = member(obj, key, at);
  const std::string here = ptr(at, key);
  if (!v.is_array()) throw ParseError(here, "expected an array of [i, j, k, \"coeff\"]");
  std::vector<StructureTriple> out;
  std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < v.size(); ++n) {
    const std::string at_n = ptr(here, n);
    if (!v[n].is_array() || v[n].size() != 4) throw ParseError(at_n, "expected [i, j, k, \"coeff\"]");
    StructureTriple t{index(v[n][0], ptr(at_n, 0), dim), index(v[n][1], ptr(at_n, 1), dim),
                      index(v[n][2], ptr(at_n, 2), dim), coefficient(f, v[n][3], ptr(at_n, 3))};
    if (!seen.insert({t.i, t.j, t.k}).second) throw ParseError(at_n, "duplicate entry");
    out.push_back(std::move(t));
  }
  return out;
}

Matrix entries(const FieldSpec& f, const Json& v, const std::string& at, std::size_t rows, std::size_t cols) {
  if (!v.is_array()) throw ParseError(at, "expected an array of [row, col, \"coeff\"]");
  MatrixBuilder b(f, rows, cols);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t n = 0; n < v.size(); ++n) {
    const std::string at_n = ptr(at, n);
    if (!v[n].is_array() || v[n].size() != 3) throw ParseError(at_n, "expected [row, col, \"coeff\"]");
    const std::size_t r = index(v[n][0], ptr(at_n, 0), rows), c = index(v[n][1], ptr(at_n, 1), cols);
    if (!seen.insert({r, c}).second) throw ParseError(at_n, "duplicate entry");
    b.add(r, c, coefficient(f, v[n][2], ptr(at_n, 2)));
  }
  return b.build();
}

Json coeff_json(const Scalar& s) { return s.to_string(); }

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(coeff_json(x));
  return out;
}

Json entries_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& e : m.row(r))
      if (!e.value.is_zero()) out.push_back(Json::array({r, e.col, coeff_json(e.value)}));
  return out;
}

Json labels_json(const std::vector<std::string>& ls) {
  Json out = Json::array();
  for (const auto& l : ls) out.push_back(l);
  return out;
}

std::string line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const std::string what = e.what();
    throw ParseError(line_column(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON: " + what.substr(what.find(':') + 2));
  }
}

struct ModuleParts {
  std::size_t dim;
  std::vector<std::string> labels;
  const Json* left;
  const Json* right;
};

ModuleParts module_parts(const Json& doc) {
  const std::size_t dim = dimension(doc, "");
  auto ls = labels(doc, "", dim);
  if (ls.empty()) ls = algcoalg::default_labels("m", dim);
  return {dim, std::move(ls), &member(doc, "left", ""), &member(doc, "right", "")};
}

bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

// Like dump(2), except arrays of scalars stay on one line: one triple per line reads far
// better than five.
void render(const Json& v, std::size_t depth, std::string& out) {
  const std::string pad(2 * depth + 2, ' '), close(2 * depth, ' ');
  if (flat(v)) {
    if (!v.is_array()) {
      out += v.dump();
      return;
    }
    out += "[";
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
    out += "]";
    return;
  }
  if (v.empty()) {
    out += v.is_array() ? "[]" : "{}";
    return;
  }
  out += v.is_array() ? "[\n" : "{\n";
  std::size_t i = 0;
  for (auto it = v.begin(); it != v.end(); ++it, ++i) {
    out += pad;
    if (v.is_object()) out += Json(it.key()).dump() + ": ";
    render(*it, depth + 1, out);
    out += i + 1 < v.size() ? ",\n" : "\n";
  }
  out += close + (v.is_array() ? "]" : "}");
}

}  // namespace

std::string render_json(const nlohmann::ordered_json& v) {
  std::string out;
  render(v, 0, out);
  return out + "\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), "cannot open file");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

algcoalg::Bimodule parse_bimodule(const std::string& text, const FiniteAlgebra& a) {
  const Json doc = parse_json(text);
  const auto p = module_parts(doc);
  const std::size_t da = a.dim, d = p.dim;
  algcoalg::Bimodule m{d, p.labels, LinearMap({da, d}, {d}, entries(a.field, *p.left, "/left", d, da * d)),
                       LinearMap({d, da}, {d}, entries(a.field, *p.right, "/right", d, d * da))};
  algcoalg::require(algcoalg::validate_bimodule(a, m));
  return m;
}

algcoalg::Bicomodule parse_bicomodule(const std::string& text, const FiniteCoalgebra& c) {
  const Json doc = parse_json(text);
  const auto p = module_parts(doc);
  const std::size_t dc = c.dim, d = p.dim;
  algcoalg::Bicomodule v{d, p.labels, LinearMap({d}, {dc, d}, entries(c.field, *p.left, "/left", dc * d, d)),
                         LinearMap({d}, {d, dc}, entries(c.field, *p.right, "/right", d * dc, d))};
  algcoalg::require(algcoalg::validate_bicomodule(c, v));
  return v;
}

StructureData parse_structure_raw(const std::string& text) {
  const Json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError("", "top level must be an object");

  const Json& fj = member(doc, "field", "");
  if (!fj.is_string()) throw ParseError("/field", "expected \"Q\" or \"Fp:<p>\"");
  FieldSpec f;
  try {
    f = FieldSpec::parse(fj.get<std::string>());
  } catch (const std::exception& e) {
    throw ParseError("/field", e.what());
  }

  const Json& aj = member(doc, "algebra", "");
  const std::size_t da = dimension(aj, "/algebra");
  auto a = FiniteAlgebra::from_triples(f, da, labels(aj, "/algebra", da), triples(f, aj, "mult", "/algebra", da),
                                       vector_field(f, aj, "unit", "/algebra", da));
  const Json& cj = member(doc, "coalgebra", "");
  const std::size_t dc = dimension(cj, "/coalgebra");
  auto c = FiniteCoalgebra::from_triples(f, dc, labels(cj, "/coalgebra", dc), triples(f, cj, "comult", "/coalgebra", dc),
                                         vector_field(f, cj, "counit", "/coalgebra", dc));

  StructureData s{a, c, LinearMap({dc, da}, {da, dc}, entries(f, member(doc, "psi", ""), "/psi", da * dc, dc * da)), {}};
  if (auto g = doc.find("galois"); g != doc.end()) {
    s.galois = GaloisData{
        LinearMap({da}, {da, dc}, entries(f, member(*g, "coaction", "/galois"), "/galois/coaction", da * dc, da)),
        LinearMap({dc}, {da, da}, entries(f, member(*g, "translation", "/galois"), "/galois/translation", da * da, dc))};
  }
  return s;
}

EntwiningStructure parse_structure(const std::string& text) {
  StructureData s = parse_structure_raw(text);
  return EntwiningStructure(std::move(s.algebra), std::move(s.coalgebra), std::move(s.psi), std::move(s.galois));
}

std::string to_text(const StructureData& s) {
  Json doc;
  doc["field"] = s.algebra.field.to_string();
  auto triple_list = [](const Matrix& m, bool mult, std::size_t dim) {
    std::vector<std::tuple<std::size_t, std::size_t, std::size_t, Scalar>> ts;
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (const auto& e : m.row(r)) {
        if (e.value.is_zero()) continue;
        if (mult)
          ts.emplace_back(e.col / dim, e.col % dim, r, e.value);
        else
          ts.emplace_back(e.col, r / dim, r % dim, e.value);
      }
    std::sort(ts.begin(), ts.end(), [](const auto& x, const auto& y) {
      return std::tie(std::get<0>(x), std::get<1>(x), std::get<2>(x)) <
             std::tie(std::get<0>(y), std::get<1>(y), std::get<2>(y));
    });
    Json out = Json::array();
    for (const auto& [i, j, k, c] : ts) out.push_back(Json::array({i, j, k, coeff_json(c)}));
    return out;
  };
  const auto& a = s.algebra;
  const auto& c = s.coalgebra;
  doc["algebra"] = {{"dim", a.dim},
                    {"labels", labels_json(a.labels)},
                    {"mult", triple_list(a.mult.matrix(), true, a.dim)},
                    {"unit", vector_json(a.unit)}};
  doc["coalgebra"] = {{"dim", c.dim},
                      {"labels", labels_json(c.labels)},
                      {"comult", triple_list(c.comult.matrix(), false, c.dim)},
                      {"counit", vector_json(c.counit)}};
  doc["psi"] = entries_json(s.psi.matrix());
  if (s.galois)
    doc["galois"] = {{"coaction", entries_json(s.galois->coaction.matrix())},
                     {"translation", entries_json(s.galois->translation.matrix())}};
  return render_json(doc);
}

std::string to_text(const EntwiningStructure& e) {
  return to_text(StructureData{e.algebra(), e.coalgebra(), e.psi(), e.galois()});
}

StructureData load_raw(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return parse_structure_raw(text);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + (e.location().empty() ? "" : ": " + e.location()),
                     std::string(e.what()).substr(e.location().empty() ? 0 : e.location().size() + 2));
  }
}

EntwiningStructure load(const std::filesystem::path& path) {
  StructureData s = load_raw(path);
  return EntwiningStructure(std::move(s.algebra), std::move(s.coalgebra), std::move(s.psi), std::move(s.galois));
}

void save(const EntwiningStructure& e, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError(path.string(), "cannot open file for writing");
  out << to_text(e);
  if (!out) throw ParseError(path.string(), "write failed");
}

}  // namespace entwine::zoo
