#include "alphadet/cyclic_module.hpp"

#include <deque>
#include <sstream>
#include <unordered_map>

#include "alphadet/error.hpp"
#include "alphadet/json_io.hpp"
#include "alphadet/parallel.hpp"
#include "alphadet/random.hpp"

namespace alphadet {

namespace {

// Packs a column -> row map into base-(n+1) digits.
std::uint64_t pack_rows(const std::vector<int>& rows, int n) {
  std::uint64_t code = 0;
  for (int c = n - 1; c >= 0; --c) code = code * static_cast<std::uint64_t>(n + 1) + static_cast<std::uint64_t>(rows[c]);
  return code;
}

std::vector<int> unpack_rows(std::uint64_t code, int n) {
  std::vector<int> rows(n);
  for (int c = 0; c < n; ++c) {
    rows[c] = static_cast<int>(code % static_cast<std::uint64_t>(n + 1));
    code /= static_cast<std::uint64_t>(n + 1);
  }
  return rows;
}

std::string rows_json(const Numbering& t) { return json(t.rows()).dump(); }

std::string ivec_json(const IndexVector& iv) { return json(iv).dump(); }

void check_ivec(const IndexVector& ivec, int n) {
  if (static_cast<int>(ivec.size()) != n) throw_input("index vector must have length n");
  for (int i : ivec)
    if (i < 1 || i > n) throw_input("index " + std::to_string(i) + " outside [1.." + std::to_string(n) + "]");
}

}  // namespace

MatPoly phi(const TensorElem& v, const Limits& limits) {
  const int n = v.ambient();
  if (v.is_zero()) return MatPoly(n);
  limits.check_enum(n, "phi");
  const auto& group = cached_symmetric_group(n);
  std::unordered_map<std::uint64_t, AlphaPoly> acc;
  std::vector<int> rows(n);
  const Rational one(1);
  for (const auto& sigma : group) {
    const int shift = n - sigma.cycle_count();
    for (const auto& [iv, c] : v.terms()) {
      // position k contributes x_{i_k, sigma(k)}
      for (int k = 1; k <= n; ++k) rows[sigma(k) - 1] = iv[k - 1];
      acc[pack_rows(rows, n)].add_scaled(c, one, shift);
    }
  }
  MatPoly out(n);
  for (const auto& [code, c] : acc) out.add_term(Monomial::from_column_rows(unpack_rows(code, n)), c);
  return out;
}

MatPoly make_D(const IndexVector& ivec, const Limits& limits) {
  if (ivec.empty()) throw_input("make_D: empty index vector");
  check_ivec(ivec, static_cast<int>(ivec.size()));
  return phi(TensorElem::basis(ivec), limits);
}

MatPoly alpha_determinant(int n, const Limits& limits) {
  IndexVector iv(n);
  for (int k = 0; k < n; ++k) iv[k] = k + 1;
  return make_D(iv, limits);
}

AlphaPoly alpha_det_of_matrix(const std::vector<std::vector<Rational>>& x, const Limits& limits) {
  const int n = static_cast<int>(x.size());
  if (n == 0) throw_input("alpha determinant: empty matrix");
  for (const auto& row : x)
    if (static_cast<int>(row.size()) != n) throw_input("alpha determinant: matrix is not square");
  limits.check_enum(n, "alpha determinant");
  std::vector<Rational> by_degree(n, Rational(0));
  for (const auto& sigma : cached_symmetric_group(n)) {
    Rational prod(1);
    for (int i = 1; i <= n && !is_zero(prod); ++i) prod *= x[i - 1][sigma(i) - 1];
    by_degree[n - sigma.cycle_count()] += prod;
  }
  return AlphaPoly(std::move(by_degree));
}

Report verify_stanley(int n, const Limits& limits) {
  if (n < 1) throw_input("verify_stanley: n must be positive");
  limits.check_enum(n, "verify_stanley");
  Report r;
  r.suite = "stanley";
  json sums = json::array();
  for (int m = 1; m <= n; ++m) {
    AlphaPoly lhs;
    std::vector<long long> counts(m, 0);
    for (const auto& sigma : cached_symmetric_group(m)) ++counts[m - sigma.cycle_count()];
    for (int d = 0; d < m; ++d) lhs.add_monomial(Rational(BigInt(std::to_string(counts[d]))), d);
    const AlphaPoly rhs = rising_content_product(m);
    ++r.cases;
    if (lhs != rhs)
      r.fail(json{{"n", m}, {"lhs", lhs.to_string()}, {"rhs", rhs.to_string()},
                  {"reproduce", "alphadet verify stanley --n " + std::to_string(m)}});
    sums.push_back(json{{"n", m}, {"sum", lhs.to_string()}});
  }
  r.details = json{{"n", n}, {"sums", sums}};
  return r;
}

TensorElem apply_Epq(int p, int q, const TensorElem& v) { return v.apply_Epq(p, q); }
MatPoly apply_Epq(int p, int q, const MatPoly& f) { return f.polarize(p, q); }
RatMatPoly apply_Epq(int p, int q, const RatMatPoly& f) { return f.polarize(p, q); }

TensorElem right_action(const TensorElem& v, const Permutation& sigma) { return v.right_action(sigma); }

MatPoly right_action(const MatPoly& f, const Permutation& sigma) {
  if (sigma.degree() != f.ambient()) throw_input("right action: permutation degree does not match n");
  return f.relabel_columns(sigma.inverse().one_line());
}

// ---------------------------------------------------------------------------
// cycle formula

namespace {

struct SignedProducts {
  std::vector<std::pair<Permutation, int>> pq;  // (p q, sgn q)
  std::map<Permutation, std::pair<Permutation, Permutation>> qp;  // q p -> (q, p)
};

SignedProducts signed_products(const Numbering& t) {
  const auto g = row_column_groups(t);
  SignedProducts sp;
  sp.pq.reserve(g.rows.size() * g.columns.size());
  for (const auto& q : g.columns)
    for (const auto& p : g.rows) {
      sp.pq.emplace_back(p * q, q.sign());
      sp.qp.emplace(q * p, std::make_pair(q, p));
    }
  return sp;
}

CycleFormulaValue evaluate_cycle_formula(const SignedProducts& sp, const Permutation& sigma) {
  const int n = sigma.degree();
  std::vector<long long> counts(n, 0);
  for (const auto& [pq, s] : sp.pq) counts[n - (pq * sigma).cycle_count()] += s;
  CycleFormulaValue out;
  std::vector<Rational> coeffs;
  for (long long c : counts) coeffs.emplace_back(BigInt(std::to_string(c)));
  out.value = AlphaPoly(std::move(coeffs));
  if (auto it = sp.qp.find(sigma); it != sp.qp.end()) {
    out.factors = true;
    out.q0 = it->second.first;
    out.p0 = it->second.second;
    out.sign = out.q0.sign();
  }
  return out;
}

void check_cycle_case(const Numbering& t, const Permutation& sigma, const CycleFormulaValue& got,
                      const AlphaPoly& content, Report& r) {
  ++r.cases;
  AlphaPoly expected = got.factors ? content * Rational(got.sign) : AlphaPoly();
  if (got.value == expected) return;
  r.fail(json{{"tableau", t.rows()},
              {"sigma", sigma.one_line()},
              {"got", got.value.to_string()},
              {"expected", expected.to_string()},
              {"reproduce", "alphadet verify cycle-formula --tableau '" + rows_json(t) + "' --sigma '" +
                                json(sigma.one_line()).dump() + "'"}});
}

}  // namespace

CycleFormulaValue cycle_formula_sum(const Numbering& t, const Permutation& sigma) {
  if (sigma.degree() != t.size()) throw_input("cycle_formula_sum: permutation degree does not match the numbering");
  return evaluate_cycle_formula(signed_products(t), sigma);
}

Report verify_cycle_formula(int n, const Limits& limits) {
  limits.check_enum(n, "verify_cycle_formula");
  std::vector<Numbering> tableaux;
  for (const auto& lambda : enumerate_partitions(n))
    for (auto& t : enumerate_standard_tableaux(lambda, limits)) tableaux.push_back(std::move(t));
  const auto& group = cached_symmetric_group(n);
  auto shards = parallel_map(tableaux.size(), limits.jobs, [&](std::size_t i) {
    const Numbering& t = tableaux[i];
    const auto sp = signed_products(t);
    const AlphaPoly content = content_polynomial(t.shape());
    Report r;
    for (const auto& sigma : group) check_cycle_case(t, sigma, evaluate_cycle_formula(sp, sigma), content, r);
    return r;
  });
  Report report;
  report.suite = "cycle-formula";
  for (const auto& s : shards) report.absorb(s);
  report.details = json{{"n", n}, {"tableaux", tableaux.size()}, {"permutations", group.size()}};
  return report;
}

Report verify_cycle_formula_case(const Numbering& t, const Permutation& sigma) {
  Report r;
  r.suite = "cycle-formula";
  auto got = cycle_formula_sum(t, sigma);
  check_cycle_case(t, sigma, got, content_polynomial(t.shape()), r);
  r.details = json{{"tableau", t.rows()},
                   {"sigma", sigma.one_line()},
                   {"value", to_json(got.value)},
                   {"factors", got.factors},
                   {"sign", got.sign}};
  return r;
}

// ---------------------------------------------------------------------------
// Young-symmetrizer images

VTElement make_vT(const Numbering& t, const IndexVector& ivec, const Limits& limits) {
  const int n = t.size();
  check_ivec(ivec, n);
  const TensorElem e = TensorElem::basis(ivec);
  TensorElem tensor(n);
  const GroupAlgElem c_t = young_symmetrizer(t);
  for (const auto& [g, c] : c_t.terms()) tensor += e.right_action(g).scaled(c);
  MatPoly poly = phi(tensor, limits);
  return {std::move(tensor), std::move(poly)};
}

VTElement make_vST(const SemiStandardTableau& s, const Numbering& t, const Limits& limits) {
  return make_vT(t, sequence_from_pair(s, t), limits);
}

RatMatPoly make_vT_at_zero(const Numbering& t, const IndexVector& ivec) {
  const int n = t.size();
  check_ivec(ivec, n);
  const auto g = row_column_groups(t);
  RatMatPoly out(n);
  std::vector<int> rows(n);
  for (const auto& q : g.columns)
    for (const auto& p : g.rows) {
      const Permutation qp = q * p;
      for (int k = 1; k <= n; ++k) rows[k - 1] = ivec[qp(k) - 1];
      out.add_term(Monomial::from_column_rows(rows), Rational(q.sign()));
    }
  return out;
}

FactorizationCheck verify_factorization(const Numbering& t, const IndexVector& ivec, const Limits& limits) {
  FactorizationCheck fc;
  fc.factor = content_polynomial(t.shape());
  fc.lhs = make_vT(t, ivec, limits).poly;
  fc.rhs = to_alpha(make_vT_at_zero(t, ivec)).scaled(fc.factor);
  fc.passed = fc.lhs == fc.rhs;
  return fc;
}

Report verify_factorization_suite(int n, int random_per_tableau, std::uint64_t seed, const Limits& limits) {
  limits.check_enum(n, "verify_factorization");
  std::vector<Numbering> tableaux;
  for (const auto& lambda : enumerate_partitions(n))
    for (auto& t : enumerate_standard_tableaux(lambda, limits)) tableaux.push_back(std::move(t));
  const bool exhaustive = n <= 3;
  const auto all = exhaustive ? all_index_vectors(n) : std::vector<IndexVector>{};
  auto shards = parallel_map(tableaux.size(), limits.jobs, [&](std::size_t i) {
    const Numbering& t = tableaux[i];
    std::vector<IndexVector> cases = all;
    if (!exhaustive) {
      SeededRng rng(derive_seed(seed, i));
      for (int r = 0; r < random_per_tableau; ++r) {
        IndexVector iv(n);
        for (auto& x : iv) x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
        cases.push_back(std::move(iv));
      }
    }
    Report r;
    for (const auto& iv : cases) {
      ++r.cases;
      auto fc = verify_factorization(t, iv, limits);
      if (!fc.passed)
        r.fail(json{{"tableau", t.rows()},
                    {"ivec", iv},
                    {"reproduce", "alphadet verify factorization --tableau '" + rows_json(t) + "' --ivec '" +
                                      ivec_json(iv) + "'"}});
    }
    return r;
  });
  Report report;
  report.suite = "factorization";
  for (const auto& s : shards) report.absorb(s);
  report.details = json{{"n", n},
                        {"tableaux", tableaux.size()},
                        {"mode", exhaustive ? "exhaustive" : "random"},
                        {"seed", seed},
                        {"per_tableau", exhaustive ? static_cast<int>(all.size()) : random_per_tableau}};
  return report;
}

// ---------------------------------------------------------------------------
// dimensions

json SpanReport::to_json() const {
  json rows = json::array();
  for (const auto& r : per_lambda)
  {
    json row{{"lambda", alphadet::to_json(r.lambda)}, {"multiplicity", r.multiplicity}, {"weyl_dim", r.weyl_dim}};
    if (generator.empty()) row["content_value"] = alphadet::to_string(r.content_value);
    row["included"] = r.included;
    rows.push_back(std::move(row));
  }
  json j;
  j["schema"] = 1;
  j["kind"] = "span_report";
  j["ambient_n"] = ambient_n;
  if (generator.empty()) {
    j["alpha"] = alpha.to_string();
  } else {
    j["generator"] = generator;
  }
  j["computed_dim"] = computed_dim ? json(*computed_dim) : json(nullptr);
  j["predicted_dim"] = predicted_dim;
  j["match"] = matches();
  j["per_lambda"] = rows;
  return j;
}

std::string SpanReport::to_text() const {
  const bool det_mode = generator.empty();
  auto pad = [](const std::string& cell, std::size_t width) {
    return cell + std::string(cell.size() < width ? width - cell.size() : 1, ' ');
  };
  const std::string value_header = alpha.is_infinite() ? "lim alpha^(1-n) f_lambda" : "f_lambda(alpha)";
  const std::size_t value_width = value_header.size() + 2;
  std::ostringstream os;
  std::string module;
  if (det_mode) {
    module = "V_" + std::to_string(ambient_n) + "^(alpha)";
    os << module << " at alpha = " << alpha.to_string() << "\n";
  } else {
    module = "U(gl_" + std::to_string(ambient_n) + ") " + generator;
    os << module << "\n";
  }
  os << "  " << pad("lambda", 14) << pad("f^lambda", 10) << pad("dim E^lambda", 14)
     << (det_mode ? pad(value_header, value_width) : "") << "included\n";
  std::string decomposition;
  for (const auto& r : per_lambda) {
    const std::string lam = r.lambda.to_string();
    os << "  " << pad(lam, 14) << pad(std::to_string(r.multiplicity), 10) << pad(std::to_string(r.weyl_dim), 14)
       << (det_mode ? pad(alphadet::to_string(r.content_value), value_width) : "") << (r.included ? "yes" : "no")
       << "\n";
    if (!r.included) continue;
    std::string term = "E^" + lam;
    if (r.multiplicity == 2) term += " (+) " + term;
    if (r.multiplicity > 2) term = "(" + term + ")^(+" + std::to_string(r.multiplicity) + ")";
    decomposition += (decomposition.empty() ? "" : " (+) ") + term;
  }
  os << module << " = " << (decomposition.empty() ? "0" : decomposition) << "\n";
  os << "predicted dim " << predicted_dim << ", computed dim ";
  if (computed_dim)
    os << *computed_dim << (matches() ? ": match" : ": MISMATCH");
  else
    os << "not computed (above rank bound)";
  os << "\n";
  return os.str();
}

std::vector<LambdaRow> predicted_decomposition(int n, const AlphaValue& alpha, const Limits& limits) {
  limits.check_tableau(n, "predicted_decomposition");
  std::vector<LambdaRow> rows;
  for (const auto& lambda : enumerate_partitions(n)) {
    LambdaRow r;
    r.lambda = lambda;
    r.multiplicity = count_standard_tableaux(lambda);
    r.weyl_dim = weyl_dimension(lambda, n);
    const AlphaPoly f = content_polynomial(lambda);
    r.content_value = alpha.is_infinite() ? f.limit_coefficient(n - 1) : f.evaluate(alpha.finite());
    r.included = !is_zero(r.content_value);
    rows.push_back(std::move(r));
  }
  return rows;
}

SpanReport module_dimension(int n, const AlphaValue& alpha, const Limits& limits) {
  if (alpha.is_infinite()) throw_unsupported("module_dimension: alpha = infinity; use infinity_module_dimension");
  if (n < 1) throw_input("module_dimension: n must be positive");
  limits.check_rank(n, "module_dimension");
  SpanReport rep;
  rep.ambient_n = n;
  rep.alpha = alpha;
  rep.per_lambda = predicted_decomposition(n, alpha, limits);
  for (const auto& r : rep.per_lambda)
    if (r.included) rep.predicted_dim += r.multiplicity * r.weyl_dim;
  std::vector<RatMatPoly> vectors;
  for (const auto& iv : all_index_vectors(n)) vectors.push_back(specialize(make_D(iv, limits), alpha.finite()));
  rep.computed_dim = exact_rank(std::span<const RatMatPoly>(vectors));
  return rep;
}

ClosureResult closure(const RatMatPoly& seed) {
  ClosureResult res;
  const int n = seed.ambient();
  std::deque<RatMatPoly> queue;
  if (res.span.insert(seed)) queue.push_back(seed);
  while (!queue.empty()) {
    RatMatPoly v = std::move(queue.front());
    queue.pop_front();
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        RatMatPoly w = v.polarize(p, q);
        ++res.operator_applications;
        if (res.span.insert(w)) queue.push_back(std::move(w));
      }
  }
  res.dim = res.span.rank();
  return res;
}

Report closure_from_seed(int n, const AlphaValue& alpha, const Limits& limits) {
  if (alpha.is_infinite()) throw_unsupported("closure_from_seed: alpha = infinity; use infinity_module_dimension");
  limits.check_rank(n, "closure_from_seed");
  const Rational& a = alpha.finite();
  Report r;
  r.suite = "closure";
  auto cl = closure(specialize(alpha_determinant(n, limits), a));
  std::vector<RatMatPoly> all;
  std::size_t outside = 0;
  for (const auto& iv : all_index_vectors(n)) {
    all.push_back(specialize(make_D(iv, limits), a));
    ++r.cases;
    if (!cl.span.contains(all.back())) {
      ++outside;
      r.fail(json{{"ivec", iv}, {"alpha", alpha.to_string()}, {"reason", "D(ivec) not in U(gl_n) det^(alpha)"}});
    }
  }
  const std::size_t span_dim = exact_rank(std::span<const RatMatPoly>(all));
  ++r.cases;
  if (span_dim != cl.dim)
    r.fail(json{{"n", n}, {"alpha", alpha.to_string()}, {"closure_dim", cl.dim}, {"span_dim", span_dim}});
  r.details = json{{"n", n},
                   {"alpha", alpha.to_string()},
                   {"closure_dim", cl.dim},
                   {"span_dim", span_dim},
                   {"not_contained", outside},
                   {"operator_applications", cl.operator_applications}};
  return r;
}

Report verify_homomorphism(int n, int random_cases, std::uint64_t seed, const Limits& limits) {
  limits.check_enum(n, "verify_homomorphism");
  std::vector<IndexVector> cases;
  if (n <= 3) {
    cases = all_index_vectors(n);
  } else {
    SeededRng rng(seed);
    for (int i = 0; i < random_cases; ++i) {
      IndexVector iv(n);
      for (auto& x : iv) x = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(n)));
      cases.push_back(std::move(iv));
    }
  }
  const auto& group = cached_symmetric_group(n);
  auto shards = parallel_map(cases.size(), limits.jobs, [&](std::size_t i) {
    Report r;
    const TensorElem e = TensorElem::basis(cases[i]);
    const MatPoly image = phi(e, limits);
    for (int p = 1; p <= n; ++p)
      for (int q = 1; q <= n; ++q) {
        ++r.cases;
        if (phi(e.apply_Epq(p, q), limits) != image.polarize(p, q))
          r.fail(json{{"ivec", cases[i]}, {"p", p}, {"q", q}, {"relation", "Phi(E_pq v) = E_pq Phi(v)"}});
      }
    for (const auto& sigma : group) {
      ++r.cases;
      if (phi(e.right_action(sigma), limits) != right_action(image, sigma))
        r.fail(json{{"ivec", cases[i]}, {"sigma", sigma.one_line()}, {"relation", "Phi(v.sigma) = Phi(v).sigma"}});
    }
    return r;
  });
  Report report;
  report.suite = "homomorphism";
  for (const auto& s : shards) report.absorb(s);
  report.details = json{{"n", n}, {"mode", n <= 3 ? "exhaustive" : "random"}, {"basis_tensors", cases.size()}};
  return report;
}

// ---------------------------------------------------------------------------
// weights and bases

WeightCheck weight_and_highest_check(const TensorElem& v) {
  if (v.is_zero()) throw_input("weight check: vector is zero");
  auto w = v.weight();
  if (!w) throw_input("weight check: vector is not weight-homogeneous");
  const int n = v.ambient();
  WeightCheck wc{*w, true, true};
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      if (p == q) continue;
      bool zero = v.apply_Epq(p, q).is_zero();
      if (p < q && !zero) wc.is_highest = false;
      if (p > q && !zero) wc.is_lowest = false;
    }
  return wc;
}

WeightCheck weight_and_highest_check(const RatMatPoly& f) {
  if (f.is_zero()) throw_input("weight check: polynomial is zero");
  auto w = f.row_weight();
  if (!w) throw_input("weight check: polynomial is not weight-homogeneous");
  const int n = f.ambient();
  WeightCheck wc{*w, true, true};
  for (int p = 1; p <= n; ++p)
    for (int q = 1; q <= n; ++q) {
      if (p == q) continue;
      bool zero = f.polarize(p, q).is_zero();
      if (p < q && !zero) wc.is_highest = false;
      if (p > q && !zero) wc.is_lowest = false;
    }
  return wc;
}

Report verify_basis(const Numbering& t, int n, const Rational& alpha, const Limits& limits) {
  if (!t.is_standard()) throw_input("verify_basis: T must be a standard tableau");
  const Partition& lambda = t.shape();
  if (lambda.weight() != n) throw_input("verify_basis: T must have n boxes");
  limits.check_rank(n, "verify_basis");
  Report r;
  r.suite = "basis";
  const auto ssyt = enumerate_ssyt(lambda, n, limits);
  const std::uint64_t expected = weyl_dimension(lambda, n);
  const bool critical = in_content_zero_set(lambda, alpha);
  const std::string tag = "T=" + t.to_string();

  std::vector<RatMatPoly> basis;
  for (const auto& s : ssyt) basis.push_back(specialize(make_vST(s, t, limits).poly, alpha));

  json details{{"lambda", to_json(lambda)}, {"tableau", t.rows()}, {"n", n}, {"alpha", to_string(alpha)},
               {"ssyt", ssyt.size()}, {"weyl_dim", expected}, {"critical", critical}};
  if (critical) {
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      ++r.cases;
      if (!basis[i].is_zero()) {
        ++nonzero;
        r.fail(json{{"S", ssyt[i].rows()}, {"T", t.rows()}, {"reason", "v_{S,T} nonzero at a root of f_lambda"}});
      }
    }
    details["vanishing"] = nonzero == 0;
    r.details = details;
    return r;
  }

  WeightedSpan span;
  for (const auto& v : basis) span.insert(v);
  ++r.cases;
  if (span.rank() != expected || ssyt.size() != expected)
    r.fail(json{{"T", t.rows()}, {"rank", span.rank()}, {"weyl_dim", expected}, {"reason", "rank of v_{S,T} != weyl_dim"}});

  std::size_t outside = 0;
  for (const auto& iv : all_index_vectors(n)) {
    ++r.cases;
    if (!span.contains(specialize(make_vT(t, iv, limits).poly, alpha))) {
      ++outside;
      r.fail(json{{"T", t.rows()}, {"ivec", iv}, {"reason", "D(ivec).c_T outside span of v_{S,T}"}});
    }
  }

  // Highest / lowest weight vectors named by the theorem, checked on both sides.
  auto flags = [&](const SemiStandardTableau& s) {
    auto vst = make_vST(s, t, limits);
    auto tw = weight_and_highest_check(vst.tensor);
    auto pw = weight_and_highest_check(specialize(vst.poly, alpha));
    return std::make_pair(tw, pw);
  };
  auto [ht, hp] = flags(SemiStandardTableau::row_constant(lambda, n));
  auto [lt, lp] = flags(SemiStandardTableau::lowest(lambda, n));
  r.cases += 2;
  if (!(ht.is_highest && hp.is_highest)) r.fail(json{{"T", t.rows()}, {"reason", "row-constant v_{S,T} is not highest weight"}});
  if (!(lt.is_lowest && lp.is_lowest)) r.fail(json{{"T", t.rows()}, {"reason", "lowest filling v_{S,T} is not lowest weight"}});

  details["rank"] = span.rank();
  details["outside_span"] = outside;
  details["highest_weight"] = hp.weight;
  details["highest_ok"] = ht.is_highest && hp.is_highest;
  details["lowest_weight"] = lp.weight;
  details["lowest_ok"] = lt.is_lowest && lp.is_lowest;
  details["context"] = tag;
  r.details = details;
  return r;
}

Report det_squared_identity_n2(const std::optional<Rational>& alpha) {
  Report r;
  r.suite = "det2";
  MatPoly det(2);
  det.add_term(Monomial(2, {{1, 1, 1}, {2, 2, 1}}), AlphaPoly(1));
  det.add_term(Monomial(2, {{1, 2, 1}, {2, 1, 1}}), AlphaPoly(-1));
  const AlphaPoly one_plus = AlphaPoly::linear(1);
  MatPoly lhs = (det * det).scaled(one_plus * one_plus);
  const MatPoly v = make_D({1, 2}) + make_D({2, 1});
  MatPoly rhs = v * v - (make_D({1, 1}) * make_D({2, 2})).scaled(AlphaPoly(4));
  ++r.cases;
  bool ok;
  if (alpha) {
    ok = specialize(lhs, *alpha) == specialize(rhs, *alpha);
  } else {
    ok = lhs == rhs;
  }
  if (!ok) r.fail(json{{"alpha", alpha ? to_string(*alpha) : "symbolic"}, {"lhs", to_json(lhs)}, {"rhs", to_json(rhs)}});
  r.details = json{{"alpha", alpha ? to_string(*alpha) : "symbolic"},
                   {"lhs", alpha ? to_string(specialize(lhs, *alpha)) : to_string(lhs)},
                   {"terms", lhs.size()}};
  return r;
}

}  // namespace alphadet
