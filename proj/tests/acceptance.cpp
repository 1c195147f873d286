// Acceptance run: one PASS/FAIL line per criterion, each with its wall-clock budget.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "alphadet/characters.hpp"
#include "alphadet/cyclic_module.hpp"
#include "alphadet/ewens.hpp"
#include "alphadet/tableaux.hpp"

using namespace alphadet;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

Rational r(long num, long den = 1) { return ratio(num, den); }

using Combo = std::vector<std::pair<long, IndexVector>>;

TensorElem tensor_of(const Combo& terms) {
  TensorElem out(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, label] : terms) out.add_term(label, AlphaPoly(r(c)));
  return out;
}

MatPoly d_combination(const Combo& terms) {
  MatPoly out(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, label] : terms) out += make_D(label).scaled(AlphaPoly(r(c)));
  return out;
}

// sum c * prod_k x_{rows_k, k}, times `factor`
MatPoly column_monomials(const Combo& terms, const AlphaPoly& factor) {
  MatPoly out(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, rows] : terms) out.add_term(Monomial::from_column_rows(rows), factor * AlphaPoly(r(c)));
  return out;
}

AlphaPoly one_minus_alpha_sq() { return AlphaPoly::linear(r(1)) * AlphaPoly::linear(r(-1)); }

void criterion1(Check& c) {
  const Partition p3({3}), p21({2, 1}), p111({1, 1, 1});
  struct Row {
    Rational alpha;
    std::vector<Partition> included;
    std::uint64_t dim;
  };
  const std::vector<Row> rows{{r(1), {p3}, 10},
                              {r(1, 2), {p3, p21}, 26},
                              {r(-1), {p111}, 1},
                              {r(-1, 2), {p21, p111}, 17},
                              {r(2), {p3, p21, p111}, 27}};
  const std::map<Partition, std::uint64_t> mult{{p3, 1}, {p21, 2}, {p111, 1}};
  for (const auto& row : rows) {
    const auto rep = module_dimension(3, row.alpha);
    const std::string tag = "alpha=" + to_string(row.alpha);
    std::vector<Partition> inc;
    for (const auto& l : rep.per_lambda) {
      if (l.included) inc.push_back(l.lambda);
      c.expect(l.multiplicity == mult.at(l.lambda), tag + ": multiplicity of " + l.lambda.to_string());
    }
    c.expect(inc == row.included, tag + ": included set");
    c.expect(rep.predicted_dim == row.dim, tag + ": predicted dim");
    c.expect(rep.computed_dim && *rep.computed_dim == row.dim, tag + ": computed rank");
  }
}

void criterion2(Check& c) {
  for (int n = 1; n <= 5; ++n) {
    const auto rep = verify_cycle_formula(n);
    std::uint64_t tableaux = 0;
    for (const auto& l : enumerate_partitions(n)) tableaux += count_standard_tableaux(l);
    c.expect(rep.passed && rep.failures == 0, "cycle formula n=" + std::to_string(n));
    c.expect(rep.cases == tableaux * factorial(n), "cycle formula covers every (T, sigma) at n=" + std::to_string(n));
  }
}

void criterion3(Check& c) {
  const auto rep = verify_stanley(8);
  c.expect(rep.passed, "Stanley identity n<=8");
}

void criterion4(Check& c) {
  for (int n = 1; n <= 3; ++n) c.expect(verify_factorization_suite(n, 0, 0).passed, "factorization n=" + std::to_string(n));
  const auto r4 = verify_factorization_suite(4, 200, 20240601);
  c.expect(r4.passed && r4.cases == 200 * 10, "factorization n=4, 200 random ivec per T");

  const auto f = one_minus_alpha_sq();
  {
    const Combo combo{{2, {1, 2, 1}}, {-1, {2, 1, 1}}, {-1, {1, 1, 2}}};
    const auto v = make_vT(Numbering({{1, 3}, {2}}), {1, 2, 1});
    c.expect(v.tensor == tensor_of(combo), "13/2 tensor terms");
    c.expect(v.poly == d_combination(combo), "13/2 D-expansion");
    c.expect(v.poly == column_monomials(combo, f), "13/2 factor (1+alpha)(1-alpha) v^(0)");
  }
  {
    const Combo combo{{1, {1, 2, 2, 4}}, {1, {1, 2, 4, 2}}, {-2, {1, 4, 2, 2}}, {1, {2, 1, 2, 4}},
                      {1, {2, 1, 4, 2}}, {-2, {2, 2, 1, 4}}, {-2, {2, 2, 4, 1}}, {1, {2, 4, 1, 2}},
                      {1, {2, 4, 2, 1}}, {-2, {4, 1, 2, 2}}, {1, {4, 2, 1, 2}}, {1, {4, 2, 2, 1}}};
    const auto v = make_vT(Numbering({{1, 2}, {3, 4}}), {1, 2, 2, 4});
    c.expect(v.tensor == tensor_of(combo), "12/34 tensor terms");
    c.expect(v.poly == column_monomials(combo, f), "12/34 twelve monomials times (1+alpha)(1-alpha)");
  }
  {
    const Numbering t({{1, 3}, {2}});
    const std::vector<std::pair<std::vector<std::vector<int>>, Combo>> cases{
        {{{1, 1}, {2}}, {{2, {1, 2, 1}}, {-1, {2, 1, 1}}, {-1, {1, 1, 2}}}},
        {{{1, 2}, {3}}, {{1, {1, 3, 2}}, {-1, {3, 1, 2}}, {1, {2, 3, 1}}, {-1, {2, 1, 3}}}},
        {{{1, 3}, {2}}, {{1, {1, 2, 3}}, {-1, {2, 1, 3}}, {1, {3, 2, 1}}, {-1, {3, 1, 2}}}}};
    for (const auto& [s, combo] : cases) {
      const auto v = make_vST(SemiStandardTableau(s, 3), t);
      const std::string tag = "v_{S,T} S=" + SemiStandardTableau(s, 3).to_string();
      c.expect(v.tensor == tensor_of(combo), tag + " tensor");
      c.expect(v.poly == d_combination(combo), tag + " D-expansion");
      c.expect(v.poly == to_alpha(make_vT_at_zero(t, sequence_from_pair(SemiStandardTableau(s, 3), t))).scaled(f),
               tag + " factorization");
    }
  }
}

void criterion5(Check& c) {
  const std::vector<std::pair<Partition, int>> cases{{Partition({2, 1}), 3}, {Partition({2, 2}), 4}, {Partition({3, 1}), 4}};
  for (const auto& [lambda, n] : cases) {
    const std::string tag = lambda.to_string() + " n=" + std::to_string(n);
    for (const auto& t : enumerate_standard_tableaux(lambda)) {
      const auto rep = verify_basis(t, n, r(1, 3));
      c.expect(rep.passed, tag + " T=" + t.to_string() + " basis at 1/3");
      c.expect(rep.details.value("rank", std::uint64_t{0}) == weyl_dimension(lambda, n), tag + " rank = weyl_dim");
      c.expect(rep.details.value("highest_ok", false) && rep.details.value("lowest_ok", false),
               tag + " highest/lowest weight flags");
      for (const auto& a : content_zero_set(lambda)) {
        const auto z = verify_basis(t, n, a);
        c.expect(z.passed && z.details.value("vanishing", false), tag + " vanishing at " + to_string(a));
      }
    }
  }
}

void criterion6(Check& c) {
  for (int n = 1; n <= 4; ++n)
    for (const Rational& a : {r(0), r(1), r(-1), r(1, 2), r(-1, 2), r(2)}) {
      const auto rep = closure_from_seed(n, a);
      c.expect(rep.passed && rep.details["closure_dim"] == rep.details["span_dim"],
               "closure n=" + std::to_string(n) + " alpha=" + to_string(a));
    }
  const auto h = verify_homomorphism(3, 0, 0);
  c.expect(h.passed && h.details["mode"] == "exhaustive", "Phi intertwines E_pq at n=3");
}

void criterion7(Check& c) {
  for (int n = 1; n <= 6; ++n) {
    const auto rep = verify_fcf(n);
    c.expect(rep.passed && rep.cases >= factorial(n), "Frobenius specialization n=" + std::to_string(n));
  }
  for (int n = 1; n <= 5; ++n) c.expect(verify_young_suite(n).passed, "Young relation n=" + std::to_string(n));
  for (int n = 1; n <= 5; ++n) c.expect(verify_immanant_expansion(n).passed, "immanant expansion n=" + std::to_string(n));
}

void criterion8(Check& c) {
  RatMatPoly expected(3);
  expected.add_term(Monomial(3, {{2, 1, 1}, {3, 2, 1}, {1, 3, 1}}), r(1));
  expected.add_term(Monomial(3, {{3, 1, 1}, {1, 2, 1}, {2, 3, 1}}), r(1));
  c.expect(det_infinity(3) == expected, "det^(inf) n=3 two monomials");
  const auto r5 = infinity_module_dimension(5);
  std::vector<std::uint64_t> mult;
  for (int k = 5; k >= 1; --k) {
    std::vector<int> parts{k};
    parts.resize(static_cast<std::size_t>(5 - k + 1), 1);
    for (const auto& row : r5.per_lambda)
      if (row.lambda == Partition(parts)) mult.push_back(row.included ? row.multiplicity : 0);
  }
  c.expect(mult == std::vector<std::uint64_t>{1, 4, 6, 4, 1}, "V_5^(inf) hook multiplicities");
  std::uint64_t non_hooks = 0;
  for (const auto& row : r5.per_lambda) non_hooks += row.included && !row.lambda.is_hook();
  c.expect(non_hooks == 0, "V_5^(inf) has only hooks");
  const auto r4 = infinity_module_dimension(4);
  c.expect(r4.matches(), "V_4^(inf) computed rank = hook prediction");
  c.expect(det_squared_identity_n2().passed, "n=2 det^2 identity, symbolic alpha");
}

void criterion9(Check& c) {
  for (int n = 1; n <= 7; ++n)
    for (const Rational& a : {r(1, 2), r(1), r(3)})
      c.expect(verify_pmf_normalization(EwensSpec{n, a, 0}).passed, "pmf sums to 1 n=" + std::to_string(n));
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  for (int n = 1; n <= 6; ++n) {
    std::vector<std::vector<Rational>> x(n, std::vector<Rational>(n));
    for (auto& row : x)
      for (auto& v : row) v = r(num(rng), den(rng));
    const std::vector<std::vector<Rational>> ones(n, std::vector<Rational>(n, r(1)));
    for (const AlphaValue& a : {AlphaValue(r(1, 2)), AlphaValue(r(1)), AlphaValue(r(3)), AlphaValue::infinity()}) {
      c.expect(verify_mean_value(n, a, x).passed, "mean value n=" + std::to_string(n) + " alpha=" + a.to_string());
      c.expect(verify_mean_value(n, a, ones).passed, "mean value (all ones) n=" + std::to_string(n));
    }
  }
  const auto s = verify_sampler_marginal(EwensSpec{5, r(1, 2), 20240601}, 100000, 1);
  c.expect(s.passed, "sampler nu-marginal n=5 alpha=1/2, 1e5 samples");
}

void criterion10(Check& c) {
  for (int n = 1; n <= 8; ++n) {
    BigInt sum_sq = 0;
    for (const auto& l : enumerate_partitions(n)) {
      const BigInt f(std::to_string(count_standard_tableaux(l)));
      sum_sq += f * f;
    }
    c.expect(sum_sq == BigInt(std::to_string(factorial(n))), "sum (f^lambda)^2 = n! n=" + std::to_string(n));
  }
  for (int n = 1; n <= 5; ++n) {
    std::uint64_t sum = 0, power = 1;
    for (int k = 0; k < n; ++k) power *= n;
    for (const auto& l : enumerate_partitions(n)) sum += count_standard_tableaux(l) * weyl_dimension(l, n);
    c.expect(sum == power, "sum f^lambda weyl_dim = n^n n=" + std::to_string(n));
  }
  for (int n = 1; n <= 8; ++n)
    for (const auto& l : enumerate_partitions(n)) {
      const auto f = content_polynomial(l);
      const auto g = content_polynomial(l.conjugate());
      std::vector<Rational> mirrored;
      for (int k = 0; k <= g.degree(); ++k) mirrored.push_back(k % 2 ? Rational(-g.coeff(k)) : g.coeff(k));
      c.expect(f == AlphaPoly(mirrored), "f_lambda(alpha) = f_lambda'(-alpha) for " + l.to_string());
    }
  for (int n = 1; n <= 6; ++n)
    c.expect(verify_character_orthogonality(n).passed, "character orthogonality n=" + std::to_string(n));
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "n=3 decomposition table at alpha in {1, 1/2, -1, -1/2, 2}", 10, criterion1},
      {2, "cycle formula, every standard T and sigma, n<=5", 120, criterion2},
      {3, "Stanley identity n<=8", 5, criterion3},
      {4, "factorization through f_lambda, term-for-term examples", 60, criterion4},
      {5, "bases v_{S,T} and vanishing on the zero set", 120, criterion5},
      {6, "closure of det^(alpha) equals the D-span; Phi intertwines", 300, criterion6},
      {7, "Frobenius specialization, Young relation, immanant expansion", 180, criterion7},
      {8, "alpha = infinity: det^(inf), hook decomposition; n=2 det^2", 120, criterion8},
      {9, "Ewens measure: normalization, mean value, sampler", 60, criterion9},
      {10, "combinatorial self-consistency", 30, criterion10},
  };
  int failed = 0;
  for (const auto& cr : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      cr.run(check);
    } catch (const std::exception& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > cr.limit_s) check.failures.push_back("time limit exceeded");
    const bool ok = check.failures.empty();
    failed += !ok;
    std::printf("criterion %2d: %s  %.2fs / %.0fs  %s\n", cr.id, ok ? "PASS" : "FAIL", secs, cr.limit_s, cr.title);
    for (std::size_t i = 0; i < check.failures.size() && i < 10; ++i) std::printf("    failed: %s\n", check.failures[i].c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
