#include "alphadet/json_io.hpp"

#include "alphadet/error.hpp"

namespace alphadet {

namespace {

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(BigInt(std::to_string(j.get<long long>())));
  throw_input("expected a rational string, got " + j.dump());
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array()) throw_input(std::string(what) + " must be a JSON array");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw_input(std::string(what) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

json monomial_json(const Monomial& m) {
  json mono = json::array();
  for (const auto& f : m.factors()) mono.push_back({f.row, f.col, f.exp});
  return mono;
}

}  // namespace

json to_json(const AlphaPoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(to_string(c));
  return json{{"coeffs", coeffs}};
}

AlphaPoly alpha_poly_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array()) throw_input("AlphaPoly JSON needs a coeffs array");
  std::vector<Rational> c;
  for (const auto& x : j["coeffs"]) c.push_back(rational_from_json(x));
  return AlphaPoly(std::move(c));
}

json to_json(const MatPoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back(json{{"monomial", monomial_json(m)}, {"coeff", to_json(c)}});
  return out;
}

json to_json(const RatMatPoly& f) {
  json out = json::array();
  for (const auto& [m, c] : f.terms()) out.push_back(json{{"monomial", monomial_json(m)}, {"coeff", to_string(c)}});
  return out;
}

MatPoly mat_poly_from_json(const json& j, int n) {
  if (!j.is_array()) throw_input("MatPoly JSON must be an array of terms");
  MatPoly f(n);
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("monomial") || !term.contains("coeff"))
      throw_input("MatPoly term needs monomial and coeff");
    std::vector<Factor> fs;
    for (const auto& triple : term["monomial"]) {
      auto v = int_list(triple, "monomial factor");
      if (v.size() != 3) throw_input("monomial factor must be [row, col, exp]");
      fs.push_back({v[0], v[1], v[2]});
    }
    f.add_term(Monomial(n, std::move(fs)), alpha_poly_from_json(term["coeff"]));
  }
  return f;
}

json to_json(const Partition& p) { return json(p.parts()); }

Partition partition_from_json(const json& j) { return Partition(int_list(j, "partition")); }

json to_json(const Permutation& p) { return json(p.one_line()); }

Permutation permutation_from_json(const json& j) { return Permutation(int_list(j, "permutation")); }

json to_json(const Numbering& t) { return json{{"shape", to_json(t.shape())}, {"rows", t.rows()}}; }

Numbering numbering_from_json(const json& j) {
  const json& rows = (j.is_object() && j.contains("rows")) ? j["rows"] : j;
  if (!rows.is_array()) throw_input("tableau JSON must be {\"rows\": [[...], ...]} or an array of rows");
  std::vector<std::vector<int>> r;
  for (const auto& row : rows) r.push_back(int_list(row, "tableau row"));
  Numbering t(std::move(r));
  if (j.is_object() && j.contains("shape") && partition_from_json(j["shape"]) != t.shape())
    throw_input("tableau shape field does not match its rows");
  return t;
}

json to_json(const SemiStandardTableau& s) { return json{{"shape", to_json(s.shape())}, {"rows", s.rows()}}; }

json to_json(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

std::vector<std::vector<Rational>> matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw_input("matrix must be a nonempty array of rows");
  std::vector<std::vector<Rational>> m;
  for (const auto& row : j) {
    if (!row.is_array()) throw_input("matrix rows must be arrays");
    std::vector<Rational> r;
    for (const auto& x : row) r.push_back(rational_from_json(x));
    m.push_back(std::move(r));
  }
  for (const auto& r : m)
    if (r.size() != m.size()) throw_input("matrix must be square");
  return m;
}

}  // namespace alphadet
