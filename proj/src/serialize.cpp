#include "deltader/serialize.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "deltader/errors.hpp"
#include "deltader/polynomial.hpp"

#ifndef DELTADER_DEFAULT_FIXTURES
#define DELTADER_DEFAULT_FIXTURES "fixtures"
#endif

namespace deltader {

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::size_t as_index(const json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

json field_to_json(const Field& f) {
  switch (f.kind()) {
    case FieldKind::Rationals:
      return {{"kind", "Q"}};
    case FieldKind::PrimeField:
      return {{"kind", "GFp"}, {"p", f.characteristic()}};
    case FieldKind::QuotientRing: {
      json mod = json::array();
      for (const auto& c : f.modulus().coefficients()) mod.push_back(element_to_json(c));
      return {{"kind", "quot"}, {"base", field_to_json(f.base())}, {"modulus", mod}};
    }
  }
  return {};
}

Field field_from_json(const json& j) {
  const std::string kind = require(j, "kind").get<std::string>();
  if (kind == "Q") return Field::rationals();
  if (kind == "GFp") {
    const json& p = require(j, "p");
    if (!p.is_number_integer() || p.get<long long>() <= 0) throw InputError("\"p\" must be a positive integer");
    return Field::prime_field(p.get<std::uint64_t>());
  }
  if (kind == "quot") {
    Field base = field_from_json(require(j, "base"));
    const json& mod = require(j, "modulus");
    if (!mod.is_array()) throw InputError("\"modulus\" must be a coefficient list");
    std::vector<FieldElement> cs;
    for (const auto& c : mod) cs.push_back(element_from_json(base, c));
    return Field::quotient_ring(base, Polynomial(base, cs));
  }
  throw InputError("unknown field kind \"" + kind + "\"");
}

json element_to_json(const FieldElement& x) {
  if (x.field().kind() == FieldKind::QuotientRing) {
    json a = json::array();
    for (const auto& c : x.coefficients()) a.push_back(c.to_string());
    return a;
  }
  return x.to_string();
}

FieldElement element_from_json(const Field& f, const json& j) {
  if (j.is_string()) return f.parse(j.get<std::string>());
  if (j.is_number_integer()) return f.from_int(j.get<long long>());
  if (j.is_number_float()) throw InputError("decimal numbers are not accepted; use exact fractions");
  if (j.is_array() && f.kind() == FieldKind::QuotientRing) {
    std::vector<FieldElement> cs;
    for (const auto& c : j) cs.push_back(element_from_json(f.base(), c));
    return FieldElement::from_coefficients(f, cs);
  }
  throw InputError("cannot read a scalar from " + j.dump());
}

json map_to_json(const LinearMap& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.domain_dim(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.codomain_dim(); ++j) r.push_back(element_to_json(m(i, j)));
    rows.push_back(r);
  }
  return rows;
}

LinearMap map_from_json(const Field& f, const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError("a map must be a non-empty list of rows");
  const std::size_t rows = j.size(), cols = j[0].size();
  LinearMap m(f, rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw InputError("map rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = element_from_json(f, j[i][k]);
  }
  return m;
}

json algebra_to_json(const Algebra& A) {
  json j;
  j["field"] = field_to_json(A.field());
  j["dim"] = A.dim();
  j["flavor"] = to_string(A.flavor());
  j["basis"] = A.names();
  if (A.has_grading()) j["grading"] = A.grading();
  json prods = json::array();
  for (auto [i, k] : A.stored_pairs()) {
    json terms = json::array();
    for (const auto& [l, c] : A.product(i, k)) terms.push_back(json::array({l, element_to_json(c)}));
    prods.push_back({{"i", i}, {"j", k}, {"terms", terms}});
  }
  j["products"] = prods;
  if (A.has_form()) j["form"] = map_to_json(LinearMap(A.form()));
  return j;
}

Algebra algebra_from_json(const json& j) {
  Field f = field_from_json(require(j, "field"));
  const std::size_t n = as_index(require(j, "dim"), "\"dim\"");
  const std::string fl = require(j, "flavor").get<std::string>();
  Flavor flavor;
  if (fl == "lie")
    flavor = Flavor::Lie;
  else if (fl == "assoc")
    flavor = Flavor::Assoc;
  else if (fl == "superlie")
    flavor = Flavor::SuperLie;
  else
    throw InputError("unknown flavor \"" + fl + "\"");
  AlgebraBuilder b(f, n, flavor);
  if (j.contains("basis")) b.names(j.at("basis").get<std::vector<std::string>>());
  if (j.contains("grading")) b.grading(j.at("grading").get<std::vector<int>>());
  const json& prods = require(j, "products");
  if (!prods.is_array()) throw InputError("\"products\" must be a list");
  for (const auto& p : prods) {
    const std::size_t i = as_index(require(p, "i"), "\"i\""), k = as_index(require(p, "j"), "\"j\"");
    for (const auto& t : require(p, "terms")) {
      if (!t.is_array() || t.size() != 2) throw InputError("each term must be [k, coefficient]");
      b.add(i, k, as_index(t[0], "term index"), element_from_json(f, t[1]));
    }
  }
  if (j.contains("form")) {
    LinearMap m = map_from_json(f, j.at("form"));
    if (m.domain_dim() != n || m.codomain_dim() != n) throw InputError("form must be dim x dim");
    b.form(m.matrix());
  }
  return b.build();
}

json solution_to_json(const SolutionSpace& s) {
  json j;
  j["kind"] = to_string(s.kind);
  j["dim"] = s.dim();
  if (s.kind == SolutionKind::DeltaDer || s.kind == SolutionKind::DeltaSuperDer || s.kind == SolutionKind::ModuleValued)
    j["delta"] = element_to_json(s.delta);
  if (s.kind == SolutionKind::DeltaSuperDer || s.kind == SolutionKind::SuperCentroid) j["parity"] = s.parity;
  json basis = json::array();
  for (const auto& m : s.basis) basis.push_back(map_to_json(m));
  j["basis"] = basis;
  if (s.kind == SolutionKind::QuasiDer) {
    json partners = json::array();
    for (const auto& m : s.partners) partners.push_back(map_to_json(m));
    j["partners"] = partners;
    j["projection_dim"] = quasiderivation_projection_dim(s);
  }
  return j;
}

std::vector<LinearMap> maps_from_json(const Field& f, const json& j) {
  std::vector<LinearMap> out;
  if (j.is_object()) return maps_from_json(f, require(j, "basis"));
  if (!j.is_array()) throw InputError("expected a list of maps");
  if (!j.empty() && j[0].is_array() && !j[0].empty() && j[0][0].is_array() &&
      !(f.kind() == FieldKind::QuotientRing && !j[0][0].empty() && !j[0][0][0].is_array())) {
    for (const auto& m : j) out.push_back(map_from_json(f, m));
  } else if (!j.empty()) {
    out.push_back(map_from_json(f, j));
  }
  return out;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

Algebra load_algebra(const std::string& path) {
  Algebra A;
  try {
    A = algebra_from_json(read_json_file(path));
  } catch (const json::exception& e) {
    throw InputError("malformed algebra file " + path + ": " + e.what());
  }
  ValidationReport rep = validate(A, default_law(A));
  if (!rep.ok()) {
    const auto& v = rep.violations.front();
    std::ostringstream os;
    os << path << " fails " << v.kind << " at basis triple (";
    for (std::size_t k = 0; k < v.indices.size(); ++k) os << (k ? ", " : "") << A.names()[v.indices[k]];
    os << ")";
    throw InputError(os.str());
  }
  if (A.has_form() && !validate_form(A).ok()) throw InputError(path + ": the bilinear form is not invariant");
  return A;
}

std::string fixtures_dir() {
  if (const char* env = std::getenv("DELTA_DER_FIXTURES"); env && *env) return env;
  return DELTADER_DEFAULT_FIXTURES;
}

Algebra load_fixture(const std::string& name) {
  std::string file = name;
  if (file.size() < 5 || file.substr(file.size() - 5) != ".json") file += ".json";
  return load_algebra(fixtures_dir() + "/" + file);
}

}  // namespace deltader
