#include "alphadet/commands.hpp"

#include <cctype>
#include <sstream>

#include "alphadet/characters.hpp"
#include "alphadet/cyclic_module.hpp"
#include "alphadet/error.hpp"
#include "alphadet/ewens.hpp"
#include "alphadet/json_io.hpp"
#include "alphadet/tableaux.hpp"

namespace alphadet {

namespace {

// ---------------------------------------------------------------------------
// argument parsing

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  const bool separated = s.find_first_of(", ") != std::string::npos;
  std::string token;
  auto flush = [&] {
    if (token.empty()) return;
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw_input(what + ": '" + token + "' is not an integer");
    }
    token.clear();
  };
  for (char c : s) {
    if (c == '(' || c == ')' || c == '[' || c == ']') continue;
    if (c == ',' || c == ' ') {
      flush();
    } else if (!separated) {
      token = c;
      flush();
    } else {
      token += c;
    }
  }
  flush();
  return out;
}

bool has(const json& config, const char* key) { return config.contains(key) && !config[key].is_null(); }

int get_int(const json& config, const char* key) {
  if (!has(config, key)) throw_input(std::string("missing required field '") + key + "'");
  const json& v = config[key];
  if (v.is_number_integer()) return v.get<int>();
  if (v.is_string()) {
    auto parts = parse_int_list(v.get<std::string>(), key);
    if (parts.size() == 1) return parts[0];
  }
  throw_input(std::string("field '") + key + "' must be an integer");
}

int get_int(const json& config, const char* key, int fallback) { return has(config, key) ? get_int(config, key) : fallback; }

std::uint64_t get_u64(const json& config, const char* key, std::uint64_t fallback) {
  if (!has(config, key)) return fallback;
  const json& v = config[key];
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<long long>() >= 0) return static_cast<std::uint64_t>(v.get<long long>());
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (!s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
      try {
        return std::stoull(s);
      } catch (const std::exception&) {
      }
    }
  }
  throw_input(std::string("field '") + key + "' must be a non-negative integer");
}

std::string get_string(const json& config, const char* key, const std::string& fallback) {
  if (!has(config, key)) return fallback;
  if (!config[key].is_string()) throw_input(std::string("field '") + key + "' must be a string");
  return config[key].get<std::string>();
}

bool alpha_is_symbolic(const json& config) {
  return !has(config, "alpha") || (config["alpha"].is_string() && config["alpha"].get<std::string>() == "symbolic");
}

AlphaValue get_alpha(const json& config) {
  if (!has(config, "alpha")) throw_input("missing required field 'alpha'");
  const json& v = config["alpha"];
  if (v.is_number_integer()) return AlphaValue(Rational(BigInt(std::to_string(v.get<long long>()))));
  if (v.is_string()) {
    if (v.get<std::string>() == "symbolic") throw_input("this command needs a numeric alpha, not 'symbolic'");
    return AlphaValue::parse(v.get<std::string>());
  }
  throw_input("field 'alpha' must be a rational string such as \"1/2\", \"inf\", or an integer");
}

AlphaValue get_alpha(const json& config, const std::string& fallback) {
  return has(config, "alpha") ? get_alpha(config) : AlphaValue::parse(fallback);
}

Rational get_finite_alpha(const json& config, const std::string& fallback) {
  AlphaValue a = get_alpha(config, fallback);
  if (a.is_infinite()) throw_unsupported("alpha = inf is not supported here");
  return a.finite();
}

Partition get_partition(const json& config) {
  if (!has(config, "lambda")) throw_input("missing required field 'lambda'");
  const json& v = config["lambda"];
  if (v.is_string()) return Partition(parse_int_list(v.get<std::string>(), "lambda"));
  return partition_from_json(v);
}

Numbering get_tableau(const json& config) {
  if (!has(config, "tableau")) throw_input("missing required field 'tableau'");
  const json& v = config["tableau"];
  if (!v.is_string()) return numbering_from_json(v);
  std::vector<std::vector<int>> rows;
  std::stringstream ss(v.get<std::string>());
  std::string row;
  while (std::getline(ss, row, '/')) rows.push_back(parse_int_list(row, "tableau"));
  return Numbering(std::move(rows));
}

Permutation get_sigma(const json& config) {
  if (!has(config, "sigma")) throw_input("missing required field 'sigma'");
  const json& v = config["sigma"];
  if (!v.is_string()) return permutation_from_json(v);
  const std::string s = v.get<std::string>();
  if (s.find('(') == std::string::npos) return Permutation(parse_int_list(s, "sigma"));
  if (!has(config, "n")) throw_input("sigma in cycle notation needs 'n'");
  std::vector<std::vector<int>> cycles;
  std::size_t pos = 0;
  while ((pos = s.find('(', pos)) != std::string::npos) {
    auto end = s.find(')', pos);
    if (end == std::string::npos) throw_input("sigma: unbalanced parentheses in '" + s + "'");
    cycles.push_back(parse_int_list(s.substr(pos + 1, end - pos - 1), "sigma"));
    pos = end + 1;
  }
  return Permutation::from_cycles(get_int(config, "n"), cycles);
}

IndexVector get_ivec(const json& config) {
  if (!has(config, "ivec")) throw_input("missing required field 'ivec'");
  const json& v = config["ivec"];
  if (v.is_string()) return parse_int_list(v.get<std::string>(), "ivec");
  if (!v.is_array()) throw_input("field 'ivec' must be an array of integers");
  IndexVector out;
  for (const auto& x : v) {
    if (!x.is_number_integer()) throw_input("field 'ivec' must be an array of integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<std::vector<Rational>> get_matrix(const json& config) {
  if (!has(config, "matrix")) throw_input("missing required field 'matrix'");
  return matrix_from_json(config["matrix"]);
}

void require_positive(int n, const char* what) {
  if (n < 1) throw_input(std::string(what) + ": n must be positive");
}

// ---------------------------------------------------------------------------
// rendering

std::string indent_details(const json& details) {
  std::string out;
  for (const auto& [k, v] : details.items()) out += "  " + k + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
  return out;
}

std::string reproduce_command(const std::string& suite, const json& config) {
  std::string cmd = "alphadet verify " + suite;
  for (const char* key : {"n", "alpha", "lambda", "tableau", "sigma", "ivec", "matrix", "seed", "count"}) {
    if (!has(config, key)) continue;
    const json& v = config[key];
    cmd += std::string(" --") + key + " '" + (v.is_string() ? v.get<std::string>() : v.dump()) + "'";
  }
  return cmd;
}

CommandResult from_report(Report report, const json& config) {
  const std::string suite = report.suite;
  for (auto& cx : report.counterexamples)
    if (!cx.contains("reproduce")) cx["reproduce"] = reproduce_command(suite, config);
  CommandResult res;
  res.status = report.passed ? 0 : 1;
  json doc{{"schema", 1}, {"command", "verify"}};
  const json body = report.to_json();
  for (const auto& [k, v] : body.items()) doc[k] = v;
  res.document = std::move(doc);
  std::ostringstream os;
  os << "verify " << suite << ": " << (report.passed ? "PASS" : "FAIL") << " (cases " << report.cases << ", failures "
     << report.failures << ")\n";
  os << indent_details(report.details);
  for (const auto& cx : report.counterexamples) os << "counterexample: " << cx.dump() << "\n";
  res.text = os.str();
  return res;
}

json span_document(const SpanReport& rep) {
  json doc{{"schema", 1}, {"command", "decompose"}};
  const json body = rep.to_json();
  for (const auto& [k, v] : body.items())
    if (k != "schema") doc[k] = v;
  return doc;
}

std::string span_csv(const SpanReport& rep) {
  std::ostringstream os;
  os << "lambda,multiplicity,weyl_dim,content_value,included\n";
  for (const auto& r : rep.per_lambda)
    os << "\"" << r.lambda.to_string() << "\"," << r.multiplicity << "," << r.weyl_dim << ","
       << (rep.generator.empty() ? to_string(r.content_value) : "") << "," << (r.included ? "true" : "false") << "\n";
  return os.str();
}

// ---------------------------------------------------------------------------
// commands

CommandResult cmd_eval(const json& config) {
  const auto x = get_matrix(config);
  const int n = static_cast<int>(x.size());
  const Limits limits = limits_from_config(config);
  const AlphaPoly p = alpha_det_of_matrix(x, limits);
  CommandResult res;
  std::string value;
  std::string alpha_label = "symbolic";
  if (alpha_is_symbolic(config)) {
    value = p.to_string();
  } else {
    AlphaValue a = get_alpha(config);
    alpha_label = a.to_string();
    value = to_string(a.is_infinite() ? p.limit_coefficient(n - 1) : p.evaluate(a.finite()));
  }
  res.document = json{{"schema", 1}, {"command", "eval"}, {"n", n}, {"alpha", alpha_label}, {"value", value}};
  if (alpha_label == "symbolic") res.document["coeffs"] = to_json(p)["coeffs"];
  res.text = value + "\n";
  return res;
}

CommandResult cmd_symbolic(const json& config) {
  const std::string kind = get_string(config, "kind", "det");
  const Limits limits = limits_from_config(config);
  const bool symbolic = alpha_is_symbolic(config);
  CommandResult res;
  json doc{{"schema", 1}, {"command", "symbolic"}, {"kind", kind}};
  auto emit_mat = [&](const MatPoly& f) {
    if (symbolic) {
      doc["alpha"] = "symbolic";
      doc["terms"] = f.size();
      doc["poly"] = to_json(f);
      res.text = to_string(f) + "\n";
    } else {
      const Rational a = get_finite_alpha(config, "0");
      const RatMatPoly g = specialize(f, a);
      doc["alpha"] = to_string(a);
      doc["terms"] = g.size();
      doc["poly"] = to_json(g);
      res.text = to_string(g) + "\n";
    }
  };
  if (kind == "det") {
    const int n = get_int(config, "n");
    require_positive(n, "symbolic det");
    doc["n"] = n;
    emit_mat(alpha_determinant(n, limits));
  } else if (kind == "D") {
    const IndexVector iv = get_ivec(config);
    doc["ivec"] = iv;
    emit_mat(make_D(iv, limits));
  } else if (kind == "vT") {
    const Numbering t = get_tableau(config);
    const IndexVector iv = get_ivec(config);
    auto v = make_vT(t, iv, limits);
    doc["tableau"] = t.rows();
    doc["ivec"] = iv;
    json tensor = json::array();
    for (const auto& [label, c] : v.tensor.terms()) tensor.push_back(json{{"D", label}, {"coeff", c.to_string()}});
    doc["tensor"] = tensor;
    doc["factor"] = content_polynomial(t.shape()).to_string();
    emit_mat(v.poly);
  } else if (kind == "immanant") {
    const Partition lambda = get_partition(config);
    const int n = lambda.weight();
    doc["lambda"] = to_json(lambda);
    const RatMatPoly f = specialize(immanant(lambda, n, limits), Rational(0));
    doc["terms"] = f.size();
    doc["poly"] = to_json(f);
    res.text = to_string(f) + "\n";
  } else if (kind == "det-infinity") {
    const int n = get_int(config, "n");
    require_positive(n, "symbolic det-infinity");
    doc["n"] = n;
    const RatMatPoly f = det_infinity(n, limits);
    doc["terms"] = f.size();
    doc["poly"] = to_json(f);
    res.text = to_string(f) + "\n";
  } else if (kind == "quantum") {
    const int n = get_int(config, "n");
    require_positive(n, "symbolic quantum");
    doc["n"] = n;
    QMatPoly f = quantum_alpha_det(n, limits);
    if (!symbolic) {
      const Rational a = get_finite_alpha(config, "0");
      f = quantum_at_alpha(f, a);
      doc["alpha"] = to_string(a);
    } else {
      doc["alpha"] = "symbolic";
    }
    doc["terms"] = f.size();
    doc["poly"] = to_json(f);
    res.text = to_string(f) + "\n";
  } else {
    throw_input("symbolic: unknown kind '" + kind + "' (expected det, D, vT, immanant, det-infinity, quantum)");
  }
  res.document = std::move(doc);
  return res;
}

std::string factor_string(const FrobeniusCoordinates& fc) {
  std::string out;
  auto factor = [&](int k, char sign) {
    out += "(1" + std::string(1, sign) + (k == 1 ? std::string() : std::to_string(k) + "*") + "alpha)";
  };
  for (std::size_t i = 0; i < fc.arms.size(); ++i) {
    for (int k = 1; k <= fc.arms[i]; ++k) factor(k, '+');
    for (int k = 1; k <= fc.legs[i]; ++k) factor(k, '-');
  }
  return out.empty() ? "1" : out;
}

CommandResult cmd_content(const json& config) {
  const Partition lambda = get_partition(config);
  const AlphaPoly f = content_polynomial(lambda);
  const auto fc = frobenius_coordinates(lambda);
  const auto zeros = content_zero_set(lambda);
  json doc{{"schema", 1}, {"command", "content"}, {"lambda", to_json(lambda)}};
  doc["frobenius"] = json{{"arms", fc.arms}, {"legs", fc.legs}};
  doc["content_polynomial"] = f.to_string();
  doc["coeffs"] = to_json(f)["coeffs"];
  doc["factored"] = factor_string(fc);
  doc["zero_set"] = to_json(zeros);
  doc["f_std"] = count_standard_tableaux(lambda);
  std::ostringstream os;
  os << "lambda: " << lambda.to_string() << "\n";
  os << "frobenius: (";
  for (std::size_t i = 0; i < fc.arms.size(); ++i) os << (i ? "," : "") << fc.arms[i];
  os << "|";
  for (std::size_t i = 0; i < fc.legs.size(); ++i) os << (i ? "," : "") << fc.legs[i];
  os << ")\n";
  os << "f_lambda(alpha) = " << f.to_string() << " = " << factor_string(fc) << "\n";
  os << "zero set: {";
  for (std::size_t i = 0; i < zeros.size(); ++i) os << (i ? ", " : "") << to_string(zeros[i]);
  os << "}\n";
  os << "f^lambda = " << count_standard_tableaux(lambda) << "\n";
  if (has(config, "n")) {
    const int n = get_int(config, "n");
    doc["n"] = n;
    doc["weyl_dim"] = weyl_dimension(lambda, n);
    os << "dim E^lambda (n = " << n << ") = " << weyl_dimension(lambda, n) << "\n";
  }
  if (has(config, "alpha") && !alpha_is_symbolic(config)) {
    const AlphaValue a = get_alpha(config);
    const Rational v = a.is_infinite() ? f.limit_coefficient(lambda.weight() - 1) : f.evaluate(a.finite());
    doc["alpha"] = a.to_string();
    doc["value"] = to_string(v);
    os << (a.is_infinite() ? "lim alpha^(1-n) f_lambda(alpha) = " : "f_lambda(" + a.to_string() + ") = ")
       << to_string(v) << "\n";
  }
  CommandResult res;
  res.document = std::move(doc);
  res.text = os.str();
  return res;
}

CommandResult cmd_decompose(const json& config) {
  const int n = get_int(config, "n");
  require_positive(n, "decompose");
  const Limits limits = limits_from_config(config);
  const AlphaValue a = get_alpha(config);
  const SpanReport rep = a.is_infinite() ? infinity_module_dimension(n, limits) : module_dimension(n, a, limits);
  CommandResult res;
  res.status = rep.computed_dim && !rep.matches() ? 1 : 0;
  res.document = span_document(rep);
  res.text = rep.to_text();
  res.csv = span_csv(rep);
  return res;
}

Report basis_suite(const json& config, const Limits& limits) {
  std::vector<Numbering> tableaux;
  Partition lambda;
  if (has(config, "tableau")) {
    tableaux.push_back(get_tableau(config));
    lambda = tableaux.front().shape();
  } else {
    lambda = get_partition(config);
    tableaux = enumerate_standard_tableaux(lambda, limits);
  }
  const int n = get_int(config, "n", lambda.weight());
  const Rational alpha = get_finite_alpha(config, "1/3");
  Report r;
  r.suite = "basis";
  json runs = json::array();
  std::vector<Rational> alphas{alpha};
  for (const auto& z : content_zero_set(lambda))
    if (z != alpha) alphas.push_back(z);
  for (const auto& t : tableaux)
    for (const auto& a : alphas) {
      Report one = verify_basis(t, n, a, limits);
      for (auto& cx : one.counterexamples)
        if (!cx.contains("reproduce"))
          cx["reproduce"] = "alphadet verify basis --tableau '" + json(t.rows()).dump() + "' --n " + std::to_string(n) +
                            " --alpha " + to_string(a);
      r.absorb(one);
      runs.push_back(one.details);
    }
  r.details = json{{"lambda", to_json(lambda)}, {"n", n}, {"alpha", to_string(alpha)}, {"runs", runs}};
  return r;
}

CommandResult cmd_verify(const json& config) {
  if (!has(config, "suite")) throw_input("verify: missing suite name");
  const std::string suite = get_string(config, "suite", "");
  const Limits limits = limits_from_config(config);
  const std::uint64_t seed = get_u64(config, "seed", 0);
  Report r;
  if (suite == "cycle-formula") {
    if (has(config, "tableau") && has(config, "sigma")) {
      r = verify_cycle_formula_case(get_tableau(config), get_sigma(config));
    } else {
      const int n = get_int(config, "n");
      require_positive(n, "verify cycle-formula");
      r = verify_cycle_formula(n, limits);
    }
  } else if (suite == "factorization") {
    if (has(config, "tableau") && has(config, "ivec")) {
      const Numbering t = get_tableau(config);
      const IndexVector iv = get_ivec(config);
      auto fc = verify_factorization(t, iv, limits);
      r.suite = "factorization";
      ++r.cases;
      if (!fc.passed) r.fail(json{{"tableau", t.rows()}, {"ivec", iv}});
      r.details = json{{"tableau", t.rows()}, {"ivec", iv}, {"factor", fc.factor.to_string()},
                       {"v_T", to_string(fc.lhs)}, {"v_T_at_zero", to_string(specialize(fc.lhs, Rational(0)))}};
    } else {
      const int n = get_int(config, "n");
      require_positive(n, "verify factorization");
      r = verify_factorization_suite(n, get_int(config, "count", 200), seed, limits);
    }
  } else if (suite == "fcf") {
    r = verify_fcf(get_int(config, "n"), limits);
  } else if (suite == "young") {
    if (has(config, "tableau")) {
      const Numbering t = get_tableau(config);
      r = verify_young_relation(has(config, "lambda") ? get_partition(config) : t.shape(), t);
    } else {
      r = verify_young_suite(get_int(config, "n"), limits);
    }
  } else if (suite == "immanant") {
    r = verify_immanant_expansion(get_int(config, "n"), limits);
  } else if (suite == "basis") {
    r = basis_suite(config, limits);
  } else if (suite == "closure") {
    const int n = get_int(config, "n");
    require_positive(n, "verify closure");
    r = closure_from_seed(n, get_alpha(config), limits);
  } else if (suite == "mean-value") {
    const auto x = has(config, "matrix")
                       ? get_matrix(config)
                       : std::vector<std::vector<Rational>>(get_int(config, "n"),
                                                            std::vector<Rational>(get_int(config, "n"), Rational(1)));
    r = verify_mean_value(static_cast<int>(x.size()), get_alpha(config), x, limits);
  } else if (suite == "det2") {
    r = det_squared_identity_n2(alpha_is_symbolic(config) ? std::nullopt
                                                          : std::optional<Rational>(get_finite_alpha(config, "0")));
  } else if (suite == "homomorphism") {
    const int n = get_int(config, "n");
    require_positive(n, "verify homomorphism");
    r = verify_homomorphism(n, get_int(config, "count", 20), seed, limits);
  } else if (suite == "stanley") {
    r = verify_stanley(get_int(config, "n"), limits);
  } else if (suite == "orthogonality") {
    r = verify_character_orthogonality(get_int(config, "n"), limits);
  } else if (suite == "normalization") {
    r = verify_pmf_normalization(EwensSpec{get_int(config, "n"), get_alpha(config), seed}, limits);
  } else if (suite == "sampler") {
    const int count = get_int(config, "count", 100000);
    if (count < 1) throw_input("verify sampler: count must be positive");
    r = verify_sampler_marginal(EwensSpec{get_int(config, "n"), get_alpha(config), seed},
                                static_cast<std::size_t>(count), limits.jobs, limits);
  } else {
    throw_input("verify: unknown suite '" + suite +
                "' (expected cycle-formula, factorization, fcf, young, immanant, basis, closure, mean-value, det2, "
                "homomorphism, stanley, orthogonality, normalization, sampler)");
  }
  return from_report(std::move(r), config);
}

CommandResult cmd_ewens(const json& config) {
  const std::string kind = get_string(config, "kind", "pmf");
  const Limits limits = limits_from_config(config);
  EwensSpec spec{get_int(config, "n"), get_alpha(config), get_u64(config, "seed", 0)};
  spec.validate();
  CommandResult res;
  json doc{{"schema", 1}, {"command", "ewens"}, {"kind", kind}, {"n", spec.n}, {"alpha", spec.alpha.to_string()}};
  if (kind == "pmf") {
    limits.check_enum(spec.n, "ewens pmf");
    json rows = json::array();
    std::ostringstream os;
    for (const auto& sigma : cached_symmetric_group(spec.n)) {
      const Rational p = ewens_pmf(spec, sigma);
      rows.push_back(json{{"sigma", sigma.one_line()}, {"cycles", sigma.cycle_count()}, {"pmf", to_string(p)}});
      os << sigma.cycle_string() << "  " << to_string(p) << "\n";
    }
    doc["rows"] = rows;
    res.text = os.str();
    res.csv = ewens_pmf_csv(spec, limits);
  } else if (kind == "marginal") {
    const auto m = ewens_cycle_marginal(spec, limits);
    doc["marginal"] = to_json(m);
    std::ostringstream os;
    os << "cycles,probability\n";
    for (std::size_t i = 0; i < m.size(); ++i) os << i + 1 << "," << to_string(m[i]) << "\n";
    res.csv = os.str();
    res.text = res.csv;
  } else if (kind == "sample") {
    const int count = get_int(config, "count", 1000);
    if (count < 1) throw_input("ewens sample: count must be positive");
    const auto samples = ewens_sample(spec, static_cast<std::size_t>(count), limits.jobs);
    doc["seed"] = spec.seed;
    doc["count"] = count;
    res.json_lines = samples_to_json_lines(samples);
    std::string text;
    for (const auto& s : samples) text += s.cycle_string() + "\n";
    res.text = text;
  } else {
    throw_input("ewens: unknown kind '" + kind + "' (expected pmf, marginal, sample)");
  }
  res.document = std::move(doc);
  return res;
}

CommandResult cmd_characters(const json& config) {
  const Limits limits = limits_from_config(config);
  const CharacterTable table = character_table(get_int(config, "n"), limits);
  CommandResult res;
  res.document = table.to_json();
  res.document["command"] = "characters";
  res.csv = table.to_csv();
  std::size_t width = 6;
  for (const auto& p : table.shapes) width = std::max(width, p.to_string().size() + 2);
  std::ostringstream os;
  auto pad = [&](const std::string& s) { return s + std::string(width > s.size() ? width - s.size() : 1, ' '); };
  os << pad("");
  for (const auto& mu : table.classes) os << pad(mu.to_string());
  os << "\n";
  for (std::size_t i = 0; i < table.shapes.size(); ++i) {
    os << pad(table.shapes[i].to_string());
    for (long long v : table.values[i]) os << pad(std::to_string(v));
    os << "\n";
  }
  res.text = os.str();
  return res;
}

}  // namespace

CommandResult verify_result(Report report, const json& config) { return from_report(std::move(report), config); }

std::string CommandResult::render(const std::string& format) const {
  if (format == "json") return json_lines.empty() ? document.dump(2) + "\n" : json_lines;
  if (format == "jsonl") {
    if (json_lines.empty()) return document.dump() + "\n";
    return json_lines;
  }
  if (format == "text") return text;
  if (format == "csv") {
    if (csv.empty()) throw_input("format 'csv' is not available for this command");
    return csv;
  }
  throw_input("unknown format '" + format + "' (expected json, text, csv, jsonl)");
}

Limits limits_from_config(const json& config) {
  Limits limits;
  if (!has(config, "limits")) return limits;
  const json& l = config["limits"];
  if (!l.is_object()) throw_input("field 'limits' must be an object");
  if (has(l, "max_n")) {
    limits.max_enum_n = get_int(l, "max_n");
    limits.max_tableau_size = std::max(limits.max_tableau_size, limits.max_enum_n);
  }
  if (has(l, "max_tableau_size")) limits.max_tableau_size = get_int(l, "max_tableau_size");
  if (has(l, "max_rank_n")) limits.max_rank_n = get_int(l, "max_rank_n");
  if (has(l, "allow_large")) {
    if (!l["allow_large"].is_boolean()) throw_input("field 'allow_large' must be a boolean");
    limits.allow_large = l["allow_large"].get<bool>();
  }
  if (has(l, "jobs")) limits.jobs = get_int(l, "jobs");
  limits.validate();
  return limits;
}

CommandResult run_command(const std::string& command, const json& config) {
  if (!config.is_object()) throw_input("config must be a JSON object");
  if (command == "eval") return cmd_eval(config);
  if (command == "symbolic") return cmd_symbolic(config);
  if (command == "content") return cmd_content(config);
  if (command == "decompose") return cmd_decompose(config);
  if (command == "verify") return cmd_verify(config);
  if (command == "ewens") return cmd_ewens(config);
  if (command == "characters") return cmd_characters(config);
  throw_input("unknown command '" + command + "' (expected eval, symbolic, content, decompose, verify, ewens, characters)");
}

}  // namespace alphadet
