#include "alphadet/characters.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <sstream>

#include "alphadet/error.hpp"
#include "alphadet/group_algebra.hpp"
#include "alphadet/json_io.hpp"
#include "alphadet/parallel.hpp"

namespace alphadet {

namespace {

using MemoKey = std::pair<std::vector<int>, std::vector<int>>;

std::shared_mutex memo_mutex;
std::map<MemoKey, long long> memo;

std::vector<int> beta_numbers(const std::vector<int>& lambda) {
  const int len = static_cast<int>(lambda.size());
  std::vector<int> beta(len);
  for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
  return beta;  // strictly decreasing
}

std::vector<int> from_beta(std::vector<int> beta) {
  std::sort(beta.rbegin(), beta.rend());
  const int len = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < len; ++i) {
    int part = beta[i] - (len - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return parts;
}

// mu is consumed from the front; parts are in decreasing order.
long long mn(const std::vector<int>& lambda, const std::vector<int>& mu) {
  if (mu.empty()) return lambda.empty() ? 1 : 0;
  MemoKey key{lambda, mu};
  {
    std::shared_lock lock(memo_mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  const int r = mu.front();
  const std::vector<int> rest(mu.begin() + 1, mu.end());
  const std::vector<int> beta = beta_numbers(lambda);
  const std::set<int> present(beta.begin(), beta.end());
  long long total = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int b = beta[i];
    const int target = b - r;
    if (target < 0 || present.count(target)) continue;
    // height of the removed border strip = beta numbers strictly between target and b
    int between = 0;
    for (int x : beta)
      if (x > target && x < b) ++between;
    std::vector<int> next = beta;
    next[i] = target;
    const long long sub = mn(from_beta(std::move(next)), rest);
    total += (between % 2 == 0) ? sub : -sub;
  }
  std::unique_lock lock(memo_mutex);
  memo.emplace(std::move(key), total);
  return total;
}

std::string csv_field(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

long long character_value(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw_input("character_value: |lambda| = " + std::to_string(lambda.weight()) + " but |mu| = " +
                std::to_string(mu.weight()));
  if (lambda.weight() > Limits::kHardTableauCap)
    throw Error(ErrorKind::SizeLimit, "character_value: size " + std::to_string(lambda.weight()) +
                                          " exceeds the hard cap " + std::to_string(Limits::kHardTableauCap));
  return mn(lambda.parts(), mu.parts());
}

long long character_value(const Partition& lambda, const Permutation& sigma) {
  return character_value(lambda, permutation_statistics(sigma).cycle_type);
}

BigInt centralizer_order(const Partition& mu) {
  std::map<int, int> mult;
  for (int p : mu.parts()) ++mult[p];
  BigInt z = 1;
  for (const auto& [part, m] : mult)
    for (int k = 1; k <= m; ++k) z *= BigInt(part) * k;
  return z;
}

long long CharacterTable::at(const Partition& lambda, const Partition& mu) const {
  auto row = std::find(shapes.begin(), shapes.end(), lambda);
  auto col = std::find(classes.begin(), classes.end(), mu);
  if (row == shapes.end() || col == classes.end()) throw_input("character table: no entry for " + lambda.to_string() + ", " + mu.to_string());
  return values[row - shapes.begin()][col - classes.begin()];
}

std::string CharacterTable::to_csv() const {
  std::ostringstream os;
  os << "lambda";
  for (const auto& mu : classes) os << "," << csv_field(mu.to_string());
  os << "\n";
  for (std::size_t i = 0; i < shapes.size(); ++i) {
    os << csv_field(shapes[i].to_string());
    for (long long v : values[i]) os << "," << v;
    os << "\n";
  }
  return os.str();
}

json CharacterTable::to_json() const {
  json rows = json::array();
  for (std::size_t i = 0; i < shapes.size(); ++i)
    rows.push_back(json{{"lambda", alphadet::to_json(shapes[i])}, {"values", values[i]}});
  json cls = json::array();
  for (const auto& mu : classes) cls.push_back(alphadet::to_json(mu));
  return json{{"schema", 1}, {"kind", "character_table"}, {"n", n}, {"classes", cls}, {"rows", rows}};
}

CharacterTable character_table(int n, const Limits& limits) {
  if (n < 1) throw_input("character_table: n must be positive");
  limits.check_tableau(n, "character_table");
  CharacterTable t;
  t.n = n;
  t.shapes = enumerate_partitions(n);
  t.classes = t.shapes;
  for (const auto& lambda : t.shapes) {
    std::vector<long long> row;
    for (const auto& mu : t.classes) row.push_back(character_value(lambda, mu));
    t.values.push_back(std::move(row));
  }
  return t;
}

Report verify_character_orthogonality(int n, const Limits& limits) {
  const CharacterTable table = character_table(n, limits);
  Report r;
  r.suite = "characters";
  const std::size_t k = table.shapes.size();
  const BigInt nfact(std::to_string(factorial(n)));
  std::vector<BigInt> z(k);
  for (std::size_t j = 0; j < k; ++j) z[j] = centralizer_order(table.classes[j]);
  const std::size_t identity_col = k - 1;  // (1^n) is last in reverse lexicographic order

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a; b < k; ++b) {
      BigInt row_sum = 0, col_sum = 0;
      for (std::size_t j = 0; j < k; ++j) {
        row_sum += nfact / z[j] * BigInt(std::to_string(table.values[a][j])) * BigInt(std::to_string(table.values[b][j]));
        col_sum += BigInt(std::to_string(table.values[j][a])) * BigInt(std::to_string(table.values[j][b]));
      }
      r.cases += 2;
      if (row_sum != (a == b ? nfact : BigInt(0)))
        r.fail(json{{"relation", "row orthogonality"}, {"lambda", to_json(table.shapes[a])}, {"rho", to_json(table.shapes[b])},
                    {"got", row_sum.get_str()}});
      if (col_sum != (a == b ? z[a] : BigInt(0)))
        r.fail(json{{"relation", "column orthogonality"}, {"mu", to_json(table.classes[a])}, {"nu", to_json(table.classes[b])},
                    {"got", col_sum.get_str()}});
    }
  for (std::size_t i = 0; i < k; ++i) {
    ++r.cases;
    const auto f = count_standard_tableaux(table.shapes[i]);
    if (table.values[i][identity_col] != static_cast<long long>(f))
      r.fail(json{{"relation", "chi(1) = f^lambda"}, {"lambda", to_json(table.shapes[i])},
                  {"chi", table.values[i][identity_col]}, {"f", f}});
  }
  r.details = json{{"n", n}, {"classes", k}};
  return r;
}

MatPoly immanant(const Partition& lambda, int n, const Limits& limits) {
  if (lambda.weight() != n) throw_input("immanant: |lambda| must equal n");
  limits.check_enum(n, "immanant");
  MatPoly out(n);
  std::vector<int> rows(n);
  for (const auto& sigma : cached_symmetric_group(n)) {
    const long long chi = character_value(lambda, sigma);
    if (chi == 0) continue;
    for (int i = 1; i <= n; ++i) rows[sigma(i) - 1] = i;
    out.add_term(Monomial::from_column_rows(rows), AlphaPoly(Rational(BigInt(std::to_string(chi)))));
  }
  return out;
}

namespace {

// (f^lambda / n!) f_lambda(alpha) for each lambda |- n.
std::vector<std::pair<Partition, AlphaPoly>> fcf_weights(int n) {
  std::vector<std::pair<Partition, AlphaPoly>> out;
  const Rational nfact(BigInt(std::to_string(factorial(n))));
  for (const auto& lambda : enumerate_partitions(n)) {
    const Rational w = Rational(BigInt(std::to_string(count_standard_tableaux(lambda)))) / nfact;
    out.emplace_back(lambda, content_polynomial(lambda) * w);
  }
  return out;
}

}  // namespace

Report verify_fcf(int n, const Limits& limits) {
  if (n < 1) throw_input("verify_fcf: n must be positive");
  limits.check_enum(n, "verify_fcf");
  const auto weights = fcf_weights(n);
  Report r;
  r.suite = "fcf";
  std::map<Partition, AlphaPoly> by_class;
  for (const auto& sigma : cached_symmetric_group(n)) {
    const auto stats = permutation_statistics(sigma);
    AlphaPoly rhs;
    for (const auto& [lambda, w] : weights) {
      const long long chi = character_value(lambda, stats.cycle_type);
      if (chi != 0) rhs += w * Rational(BigInt(std::to_string(chi)));
    }
    const AlphaPoly lhs = AlphaPoly::monomial(Rational(1), n - stats.cycles);
    ++r.cases;
    if (lhs != rhs)
      r.fail(json{{"sigma", sigma.one_line()}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()},
                  {"reproduce", "alphadet verify fcf --n " + std::to_string(n)}});
    auto [it, fresh] = by_class.emplace(stats.cycle_type, rhs);
    if (!fresh && it->second != rhs)
      r.fail(json{{"sigma", sigma.one_line()}, {"reason", "right-hand side is not a class function"}});
  }
  r.details = json{{"n", n}, {"permutations", factorial(n)}, {"classes", by_class.size()}};
  return r;
}

Report verify_young_relation(const Partition& lambda, const Numbering& t) {
  if (!t.is_standard()) throw_input("verify_young_relation: T must be standard");
  const int n = t.size();
  if (lambda.weight() != n) throw_input("verify_young_relation: |lambda| must equal the size of T");
  Limits{}.check_enum(n, "verify_young_relation");
  GroupAlgElem chi(n);
  for (const auto& sigma : cached_symmetric_group(n)) {
    const long long v = character_value(lambda, sigma);
    if (v != 0) chi.add_term(sigma, AlphaPoly(Rational(BigInt(std::to_string(v)))));
  }
  const GroupAlgElem c_t = young_symmetrizer(t);
  const GroupAlgElem product = chi * c_t;
  const bool same = lambda == t.shape();
  const Rational scale = same ? Rational(BigInt(std::to_string(factorial(n) / count_standard_tableaux(lambda))))
                              : Rational(0);
  const GroupAlgElem expected = same ? c_t.scaled(AlphaPoly(scale)) : GroupAlgElem(n);
  Report r;
  r.suite = "young";
  ++r.cases;
  if (!(product == expected))
    r.fail(json{{"lambda", to_json(lambda)}, {"tableau", t.rows()}, {"product_terms", product.size()},
                {"reproduce", "alphadet verify young --lambda '" + to_json(lambda).dump() + "' --tableau '" +
                                  json(t.rows()).dump() + "'"}});
  r.details = json{{"lambda", to_json(lambda)}, {"tableau", t.rows()}, {"scale", to_string(scale)},
                   {"c_T_terms", c_t.size()}};
  return r;
}

Report verify_young_suite(int n, const Limits& limits) {
  if (n < 1) throw_input("verify_young: n must be positive");
  limits.check_enum(n, "verify_young");
  std::vector<std::pair<Partition, Numbering>> cases;
  const auto shapes = enumerate_partitions(n);
  for (const auto& shape : shapes)
    for (const auto& t : enumerate_standard_tableaux(shape, limits))
      for (const auto& lambda : shapes) cases.emplace_back(lambda, t);
  auto shards = parallel_map(cases.size(), limits.jobs,
                             [&](std::size_t i) { return verify_young_relation(cases[i].first, cases[i].second); });
  Report r;
  r.suite = "young";
  for (const auto& s : shards) r.absorb(s);
  r.details = json{{"n", n}, {"pairs", cases.size()}};
  return r;
}

Report verify_immanant_expansion(int n, const Limits& limits) {
  if (n < 1) throw_input("verify_immanant_expansion: n must be positive");
  limits.check_enum(n, "verify_immanant_expansion");
  MatPoly rhs(n);
  for (const auto& [lambda, w] : fcf_weights(n)) rhs += immanant(lambda, n, limits).scaled(w);
  const MatPoly lhs = alpha_determinant(n, limits);
  Report r;
  r.suite = "immanant";
  ++r.cases;
  if (lhs != rhs)
    r.fail(json{{"n", n}, {"difference_terms", (lhs - rhs).size()},
                {"reproduce", "alphadet verify immanant --n " + std::to_string(n)}});
  r.details = json{{"n", n}, {"terms", lhs.size()}};
  return r;
}

SpanReport immanant_module_dimension(const Partition& lambda, int n, const Limits& limits) {
  if (lambda.weight() != n) throw_input("immanant_module_dimension: |lambda| must equal n");
  limits.check_rank(n, "immanant_module_dimension");
  SpanReport rep;
  rep.ambient_n = n;
  rep.generator = "Imm_" + lambda.to_string();
  for (const auto& mu : enumerate_partitions(n)) {
    LambdaRow row;
    row.lambda = mu;
    row.multiplicity = count_standard_tableaux(mu);
    row.weyl_dim = weyl_dimension(mu, n);
    row.included = mu == lambda;
    if (row.included) rep.predicted_dim = row.multiplicity * row.weyl_dim;
    rep.per_lambda.push_back(std::move(row));
  }
  rep.computed_dim = closure(specialize(immanant(lambda, n, limits), Rational(0))).dim;
  return rep;
}

}  // namespace alphadet
