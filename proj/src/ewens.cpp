#include "alphadet/ewens.hpp"

#include <cmath>
#include <sstream>

#include "alphadet/error.hpp"
#include "alphadet/json_io.hpp"
#include "alphadet/parallel.hpp"
#include "alphadet/random.hpp"
#include "alphadet/tableaux.hpp"

namespace alphadet {

void QPoly::add_term(int deg_alpha, int deg_q, const Rational& c) {
  if (alphadet::is_zero(c)) return;
  Key key{deg_alpha, deg_q};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (alphadet::is_zero(it->second)) terms_.erase(it);
}

Rational QPoly::coefficient(int deg_alpha, int deg_q) const {
  auto it = terms_.find({deg_alpha, deg_q});
  return it == terms_.end() ? Rational(0) : it->second;
}

AlphaPoly QPoly::at_q_one() const {
  AlphaPoly out;
  for (const auto& [key, c] : terms_) out.add_monomial(c, key.first);
  return out;
}

QPoly QPoly::at_alpha(const Rational& alpha) const {
  QPoly out;
  for (const auto& [key, c] : terms_) {
    Rational power(1);
    for (int k = 0; k < key.first; ++k) power *= alpha;
    out.add_term(0, key.second, c * power);
  }
  return out;
}

std::string QPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [key, c] : terms_) {
    Rational mag = abs(c);
    const bool neg = c < 0;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string factors;
    auto push = [&](const std::string& var, int d) {
      if (d == 0) return;
      if (!factors.empty()) factors += "*";
      factors += var + (d > 1 ? "^" + std::to_string(d) : "");
    };
    push("alpha", key.first);
    push("q", key.second);
    if (factors.empty())
      os << alphadet::to_string(mag);
    else if (mag == 1)
      os << factors;
    else
      os << alphadet::to_string(mag) << "*" << factors;
  }
  return os.str();
}

QMatPoly quantum_alpha_det(int n, const Limits& limits) {
  if (n < 1) throw_input("quantum_alpha_det: n must be positive");
  limits.check_enum(n, "quantum_alpha_det");
  QMatPoly out;
  for (const auto& sigma : cached_symmetric_group(n)) {
    // column k carries row sigma(k)
    auto& coeff = out[Monomial::from_column_rows(sigma.one_line())];
    coeff.add_term(n - sigma.cycle_count(), sigma.inversions(), Rational(1));
  }
  return out;
}

MatPoly quantum_at_q_one(const QMatPoly& f, int n) {
  MatPoly out(n);
  for (const auto& [m, c] : f) out.add_term(m, c.at_q_one());
  return out;
}

QMatPoly quantum_at_alpha(const QMatPoly& f, const Rational& alpha) {
  QMatPoly out;
  for (const auto& [m, c] : f) {
    QPoly v = c.at_alpha(alpha);
    if (!v.is_zero()) out.emplace(m, std::move(v));
  }
  return out;
}

std::string to_string(const QMatPoly& f) {
  if (f.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : f) {
    std::string coeff = c.to_string();
    std::string term;
    if (coeff == "1")
      term = m.to_string();
    else if (coeff == "-1")
      term = "-" + m.to_string();
    else
      term = (coeff.find(' ') == std::string::npos ? coeff : "(" + coeff + ")") + "*" + m.to_string();
    if (out.empty())
      out = term;
    else if (term.front() == '-')
      out += " - " + term.substr(1);
    else
      out += " + " + term;
  }
  return out;
}

json to_json(const QMatPoly& f) {
  json terms = json::array();
  for (const auto& [m, c] : f) {
    json coeff = json::array();
    for (const auto& [key, v] : c.terms()) coeff.push_back(json{{"alpha", key.first}, {"q", key.second}, {"coeff", to_string(v)}});
    json factors = json::array();
    for (const auto& fac : m.factors()) factors.push_back(json::array({fac.row, fac.col, fac.exp}));
    terms.push_back(json{{"monomial", factors}, {"coeff", coeff}});
  }
  return terms;
}

RatMatPoly det_infinity(int n, const Limits& limits) {
  if (n < 1) throw_input("det_infinity: n must be positive");
  limits.check_enum(n, "det_infinity");
  RatMatPoly out(n);
  for (const auto& sigma : cached_symmetric_group(n))
    if (sigma.cycle_count() == 1) out.add_term(Monomial::from_column_rows(sigma.one_line()), Rational(1));
  return out;
}

SpanReport infinity_module_dimension(int n, const Limits& limits) {
  if (n < 1) throw_input("infinity_module_dimension: n must be positive");
  SpanReport rep;
  rep.ambient_n = n;
  rep.alpha = AlphaValue::infinity();
  rep.per_lambda = predicted_decomposition(n, rep.alpha, limits);
  for (const auto& r : rep.per_lambda)
    if (r.included) rep.predicted_dim += r.multiplicity * r.weyl_dim;
  if (n <= limits.effective_rank_n()) rep.computed_dim = closure(det_infinity(n, limits)).dim;
  return rep;
}

// ---------------------------------------------------------------------------
// Ewens measure

void EwensSpec::validate() const {
  if (n < 1) throw_input("ewens: n must be positive");
  if (!alpha.is_infinite() && alpha.finite() <= 0)
    throw_input("ewens: alpha must be positive or infinity (got " + alpha.to_string() + ")");
}

Rational ewens_pmf(const EwensSpec& spec, const Permutation& sigma) {
  spec.validate();
  if (sigma.degree() != spec.n) throw_input("ewens_pmf: permutation degree does not match n");
  const int nu = sigma.cycle_count();
  if (spec.alpha.is_infinite())
    return nu == 1 ? Rational(1) / Rational(BigInt(std::to_string(factorial(spec.n - 1)))) : Rational(0);
  const Rational& a = spec.alpha.finite();
  Rational num(1), den(1);
  for (int k = 0; k < spec.n - nu; ++k) num *= a;
  for (int j = 1; j < spec.n; ++j) den *= Rational(1) + Rational(j) * a;
  return num / den;
}

Rational ewens_pmf_limit_zero(const Permutation& sigma) { return sigma.is_identity() ? Rational(1) : Rational(0); }

std::vector<Rational> ewens_cycle_marginal(const EwensSpec& spec, const Limits& limits) {
  spec.validate();
  limits.check_enum(spec.n, "ewens_cycle_marginal");
  std::vector<Rational> out(spec.n, Rational(0));
  for (const auto& sigma : cached_symmetric_group(spec.n)) out[sigma.cycle_count() - 1] += ewens_pmf(spec, sigma);
  return out;
}

std::string ewens_pmf_csv(const EwensSpec& spec, const Limits& limits) {
  spec.validate();
  limits.check_enum(spec.n, "ewens_pmf");
  std::ostringstream os;
  os << "sigma,cycles,inversions,pmf\n";
  for (const auto& sigma : cached_symmetric_group(spec.n)) {
    std::string line;
    for (int v : sigma.one_line()) line += (line.empty() ? "" : " ") + std::to_string(v);
    os << line << "," << sigma.cycle_count() << "," << sigma.inversions() << "," << to_string(ewens_pmf(spec, sigma))
       << "\n";
  }
  return os.str();
}

namespace {

struct CrpWeights {
  bool single_cycle = false;  // alpha = infinity, theta = 0
  std::uint64_t a = 1, b = 1;  // alpha = a/b; new cycle at step k with probability b/(b + k a)
};

CrpWeights crp_weights(const EwensSpec& spec) {
  CrpWeights w;
  if (spec.alpha.is_infinite()) {
    w.single_cycle = true;
    return w;
  }
  const Rational& alpha = spec.alpha.finite();
  const BigInt& num = alpha.get_num();
  const BigInt& den = alpha.get_den();
  const BigInt bound = BigInt(den) + BigInt(num) * (spec.n - 1);
  // keep the integer draw bound in 63 bits
  if (bound.get_str(2).size() > 63)
    throw_input("ewens_sample: alpha = " + spec.alpha.to_string() + " has numerator/denominator too large for the sampler");
  w.a = std::stoull(num.get_str());
  w.b = std::stoull(den.get_str());
  return w;
}

Permutation crp_draw(int n, const CrpWeights& w, SeededRng& rng) {
  std::vector<int> image(n);
  image[0] = 1;
  for (int k = 1; k < n; ++k) {
    const int element = k + 1;
    bool fresh = false;
    if (!w.single_cycle) fresh = rng.below(w.b + static_cast<std::uint64_t>(k) * w.a) < w.b;
    if (fresh) {
      image[k] = element;
    } else {
      const int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(k)));
      // insert after j in its cycle
      image[k] = image[j - 1];
      image[j - 1] = element;
    }
  }
  return Permutation(std::move(image));
}

}  // namespace

std::vector<Permutation> ewens_sample(const EwensSpec& spec, std::size_t count, int jobs) {
  spec.validate();
  if (count == 0) throw_input("ewens_sample: count must be positive");
  const CrpWeights w = crp_weights(spec);
  const std::size_t blocks = (count + kSampleBlock - 1) / kSampleBlock;
  auto shards = parallel_map(blocks, jobs, [&](std::size_t b) {
    SeededRng rng(derive_seed(spec.seed, b));
    const std::size_t size = std::min(kSampleBlock, count - b * kSampleBlock);
    std::vector<Permutation> out;
    out.reserve(size);
    for (std::size_t i = 0; i < size; ++i) out.push_back(crp_draw(spec.n, w, rng));
    return out;
  });
  std::vector<Permutation> out;
  out.reserve(count);
  for (auto& s : shards)
    for (auto& p : s) out.push_back(std::move(p));
  return out;
}

std::string samples_to_json_lines(const std::vector<Permutation>& samples) {
  std::string out;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    json j{{"index", i}, {"sigma", samples[i].one_line()}, {"cycles", samples[i].cycle_count()}};
    out += j.dump();
    out += "\n";
  }
  return out;
}

Report verify_pmf_normalization(const EwensSpec& spec, const Limits& limits) {
  spec.validate();
  limits.check_enum(spec.n, "verify_pmf_normalization");
  Rational total(0);
  for (const auto& sigma : cached_symmetric_group(spec.n)) total += ewens_pmf(spec, sigma);
  Report r;
  r.suite = "ewens-normalization";
  ++r.cases;
  if (total != 1) r.fail(json{{"n", spec.n}, {"alpha", spec.alpha.to_string()}, {"sum", to_string(total)}});
  r.details = json{{"n", spec.n}, {"alpha", spec.alpha.to_string()}, {"sum", to_string(total)}};
  return r;
}

Report verify_mean_value(int n, const AlphaValue& alpha, const std::vector<std::vector<Rational>>& x,
                         const Limits& limits) {
  EwensSpec spec{n, alpha, 0};
  spec.validate();
  limits.check_enum(n, "verify_mean_value");
  if (static_cast<int>(x.size()) != n) throw_input("verify_mean_value: matrix must be n x n");
  for (const auto& row : x)
    if (static_cast<int>(row.size()) != n) throw_input("verify_mean_value: matrix must be n x n");

  Rational mean(0);
  for (const auto& sigma : cached_symmetric_group(n)) {
    Rational x_sigma(1);
    for (int i = 1; i <= n; ++i) x_sigma *= x[i - 1][sigma(i) - 1];
    mean += x_sigma * ewens_pmf(spec, sigma);
  }
  Rational lhs, scale(1);
  if (alpha.is_infinite()) {
    lhs = det_infinity(n, limits).substitute(x);
    scale = Rational(BigInt(std::to_string(factorial(n - 1))));
  } else {
    lhs = specialize(alpha_determinant(n, limits), alpha.finite()).substitute(x);
    scale = rising_content_product(n).evaluate(alpha.finite());
  }
  const Rational rhs = scale * mean;
  Report r;
  r.suite = "mean-value";
  ++r.cases;
  json matrix = json::array();
  for (const auto& row : x) {
    json jr = json::array();
    for (const auto& v : row) jr.push_back(to_string(v));
    matrix.push_back(jr);
  }
  if (lhs != rhs)
    r.fail(json{{"n", n}, {"alpha", alpha.to_string()}, {"matrix", matrix}, {"lhs", to_string(lhs)},
                {"rhs", to_string(rhs)},
                {"reproduce", "alphadet verify mean-value --n " + std::to_string(n) + " --alpha " + alpha.to_string() +
                                  " --matrix '" + matrix.dump() + "'"}});
  r.details = json{{"n", n}, {"alpha", alpha.to_string()}, {"det", to_string(lhs)}, {"mean", to_string(mean)},
                   {"scale", to_string(scale)}};
  return r;
}

Report verify_sampler_marginal(const EwensSpec& spec, std::size_t count, int jobs, const Limits& limits) {
  const auto exact = ewens_cycle_marginal(spec, limits);
  const auto samples = ewens_sample(spec, count, jobs);
  std::vector<std::size_t> hits(spec.n, 0);
  for (const auto& s : samples) ++hits[s.cycle_count() - 1];
  Report r;
  r.suite = "ewens-sampler";
  json rows = json::array();
  const double total = static_cast<double>(count);
  for (int m = 1; m <= spec.n; ++m) {
    const double p = exact[m - 1].get_d();
    const double freq = static_cast<double>(hits[m - 1]) / total;
    const double se = std::sqrt(p * (1 - p) / total);
    const double z = se > 0 ? (freq - p) / se : (freq == p ? 0.0 : INFINITY);
    ++r.cases;
    if (std::abs(z) > 4.0)
      r.fail(json{{"cycles", m}, {"expected", p}, {"observed", freq}, {"z", z}, {"seed", spec.seed}});
    rows.push_back(json{{"cycles", m}, {"exact", to_string(exact[m - 1])}, {"observed", hits[m - 1]}, {"z", z}});
  }
  r.details = json{{"n", spec.n}, {"alpha", spec.alpha.to_string()}, {"seed", spec.seed}, {"samples", count}, {"marginal", rows}};
  return r;
}

}  // namespace alphadet
