#include <doctest.h>

#include "alphadet/cyclic_module.hpp"
#include "alphadet/error.hpp"
#include "alphadet/group_algebra.hpp"
#include "support.hpp"

using namespace alphadet;
using test::mono;
using test::poly;
using test::q;

namespace {

MatPoly from_rows(const std::vector<std::pair<long, IndexVector>>& terms, const AlphaPoly& factor) {
  const int n = static_cast<int>(terms.front().second.size());
  MatPoly out(n);
  for (const auto& [c, rows] : terms) out.add_term(Monomial::from_column_rows(rows), factor * q(c));
  return out;
}

TensorElem tensor_of(const std::vector<std::pair<long, IndexVector>>& terms) {
  TensorElem out(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, label] : terms) out.add_term(label, AlphaPoly(q(c)));
  return out;
}

MatPoly d_combination(const std::vector<std::pair<long, IndexVector>>& terms) {
  MatPoly out(static_cast<int>(terms.front().second.size()));
  for (const auto& [c, label] : terms) out += make_D(label).scaled(AlphaPoly(q(c)));
  return out;
}

// Leibniz expansion with explicit signs: sum_sigma coeff(sigma) prod_i x_{i, sigma(i)}.
RatMatPoly leibniz(int n, bool signed_terms) {
  RatMatPoly out(n);
  for (const auto& sigma : symmetric_group(n)) {
    std::vector<Factor> fs;
    for (int i = 1; i <= n; ++i) fs.push_back({i, sigma(i), 1});
    out.add_term(Monomial(n, fs), q(signed_terms ? sigma.sign() : 1));
  }
  return out;
}

TensorElem random_tensor(int n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> idx(1, n);
  TensorElem v(n);
  for (int t = 0; t < 3; ++t) {
    IndexVector iv(n);
    for (auto& x : iv) x = idx(rng);
    v.add_term(iv, test::random_poly(rng, 2));
  }
  return v;
}

}  // namespace

TEST_SUITE("cyclicmod") {
  TEST_CASE("D generators at n = 2") {
    MatPoly d12(2);
    d12.add_term(mono(2, {{1, 1}, {2, 2}}), AlphaPoly(1));
    d12.add_term(mono(2, {{1, 2}, {2, 1}}), AlphaPoly::alpha());
    CHECK(make_D({1, 2}) == d12);
    MatPoly d11(2);
    d11.add_term(mono(2, {{1, 1}, {1, 2}}), poly({1, 1}));
    CHECK(make_D({1, 1}) == d11);
    CHECK_THROWS_AS(make_D({1, 3}), Error);
    CHECK_THROWS_AS(make_D({0, 1}), Error);
  }

  TEST_CASE("determinant and permanent specializations") {
    for (int n = 1; n <= 5; ++n) {
      const auto det = alpha_determinant(n);
      CHECK(specialize(det, q(-1)) == leibniz(n, true));
      CHECK(specialize(det, q(1)) == leibniz(n, false));
    }
  }

  TEST_CASE("row- and column-indexed builds agree") {
    for (int n = 1; n <= 5; ++n) {
      MatPoly column_indexed(n);
      for (const auto& sigma : symmetric_group(n))
        column_indexed.add_term(Monomial::from_column_rows(sigma.one_line()),
                                AlphaPoly::monomial(q(1), n - sigma.cycle_count()));
      CHECK(column_indexed == alpha_determinant(n));
    }
  }

  TEST_CASE("Stanley identity") {
    CHECK(verify_stanley(8).passed);
  }

  TEST_CASE("E_pq on D(4,1,2,1)") {
    const auto d = make_D({4, 1, 2, 1});
    CHECK(apply_Epq(2, 1, d) == make_D({4, 2, 2, 1}) + make_D({4, 1, 2, 2}));
    CHECK(apply_Epq(1, 1, d) == d.scaled(AlphaPoly(2)));
    CHECK(apply_Epq(4, 3, d).is_zero());
    const auto e = TensorElem::basis({4, 1, 2, 1});
    CHECK(apply_Epq(2, 1, e) == TensorElem::basis({4, 2, 2, 1}) + TensorElem::basis({4, 1, 2, 2}));
  }

  TEST_CASE("phi") {
    RatMatPoly x11x22(2);
    x11x22.add_term(mono(2, {{1, 1}, {2, 2}}), q(1));
    CHECK(specialize(phi(TensorElem::basis({1, 2})), q(0)) == x11x22);
    CHECK(phi(TensorElem(2)).is_zero());
    const auto v = TensorElem::basis({1, 1});
    CHECK(phi(v.apply_Epq(2, 1)) == apply_Epq(2, 1, phi(v)));
    // linear with polynomial coefficients
    const auto w = TensorElem::basis({1, 2}, poly({0, 1})) + TensorElem::basis({2, 2}, poly({3}));
    CHECK(phi(w) == make_D({1, 2}).scaled(poly({0, 1})) + make_D({2, 2}).scaled(poly({3})));
  }

  TEST_CASE("phi intertwines gl_n and S_n") {
    CHECK(verify_homomorphism(2, 0, 0).passed);
    const auto r3 = verify_homomorphism(3, 0, 0);
    CHECK(r3.passed);
    CHECK(r3.cases == 27 * (9 + 6));
    CHECK(verify_homomorphism(4, 6, 42).passed);
  }

  TEST_CASE("right action on polynomials") {
    for (const auto& sigma : symmetric_group(3)) {
      CHECK(right_action(make_D({1, 2, 3}), sigma) == make_D(sigma.one_line()));
      CHECK(right_action(make_D({1, 1, 2}), sigma) == phi(TensorElem::basis({1, 1, 2}).right_action(sigma)));
    }
    CHECK(right_action(TensorElem::basis({1, 2, 3}), Permutation::transposition(3, 1, 2)) == TensorElem::basis({2, 1, 3}));
  }

  TEST_CASE("gl_n and S_n actions commute; bracket relations") {
    std::mt19937_64 rng(23);
    const int n = 3;
    for (int trial = 0; trial < 10; ++trial) {
      const auto v = random_tensor(n, rng);
      for (const auto& sigma : symmetric_group(n))
        for (int p = 1; p <= n; ++p)
          for (int qq = 1; qq <= n; ++qq) CHECK(v.right_action(sigma).apply_Epq(p, qq) == v.apply_Epq(p, qq).right_action(sigma));
      for (int p = 1; p <= n; ++p)
        for (int qq = 1; qq <= n; ++qq)
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) {
              const auto lhs = v.apply_Epq(r, s).apply_Epq(p, qq) - v.apply_Epq(p, qq).apply_Epq(r, s);
              TensorElem rhs(n);
              if (qq == r) rhs += v.apply_Epq(p, s);
              if (s == p) rhs -= v.apply_Epq(r, qq);
              CHECK(lhs == rhs);
            }
    }
  }

  TEST_CASE("cycle formula for 12/3") {
    const Numbering t({{1, 2}, {3}});
    const auto f = test::one_minus_alpha_sq();
    auto value = [&](const std::vector<std::vector<int>>& cycles) {
      return cycle_formula_sum(t, Permutation::from_cycles(3, cycles));
    };
    CHECK(value({}).value == f);
    CHECK(value({{1, 2}}).value == f);
    CHECK(value({{1, 3}}).value == -f);
    CHECK(value({{1, 2, 3}}).value == -f);
    CHECK(value({{2, 3}}).value.is_zero());
    CHECK(value({{1, 3, 2}}).value.is_zero());
    const auto fac = value({{1, 2, 3}});
    CHECK(fac.factors);
    CHECK(fac.sign == -1);
    CHECK(fac.q0 * fac.p0 == Permutation::from_cycles(3, {{1, 2, 3}}));
    CHECK(!value({{2, 3}}).factors);
  }

  TEST_CASE("cycle formula, exhaustive") {
    for (int n = 1; n <= 4; ++n) CHECK(verify_cycle_formula(n).passed);
    Limits two_jobs;
    two_jobs.jobs = 2;
    const auto a = verify_cycle_formula(4, two_jobs);
    const auto b = verify_cycle_formula(4);
    CHECK(a.to_json() == b.to_json());
  }

  TEST_CASE("v_T for 13/2 at (1,2,1)") {
    const Numbering t({{1, 3}, {2}});
    const auto v = make_vT(t, {1, 2, 1});
    const std::vector<std::pair<long, IndexVector>> combo{{2, {1, 2, 1}}, {-1, {2, 1, 1}}, {-1, {1, 1, 2}}};
    CHECK(v.tensor == tensor_of(combo));
    CHECK(v.poly == d_combination(combo));
    CHECK(v.poly == from_rows(combo, test::one_minus_alpha_sq()));
    // 2 x11 x22 x13 - x21 x12 x13 - x11 x12 x23
    MatPoly expected(3);
    const auto f = test::one_minus_alpha_sq();
    expected.add_term(mono(3, {{1, 1}, {2, 2}, {1, 3}}), f * q(2));
    expected.add_term(mono(3, {{2, 1}, {1, 2}, {1, 3}}), -f);
    expected.add_term(mono(3, {{1, 1}, {1, 2}, {2, 3}}), -f);
    CHECK(v.poly == expected);
  }

  TEST_CASE("v_T for 12/34 at (1,2,2,4)") {
    const Numbering t({{1, 2}, {3, 4}});
    const std::vector<std::pair<long, IndexVector>> combo{
        {1, {1, 2, 2, 4}},  {1, {1, 2, 4, 2}}, {-2, {1, 4, 2, 2}}, {1, {2, 1, 2, 4}},
        {1, {2, 1, 4, 2}},  {-2, {2, 2, 1, 4}}, {-2, {2, 2, 4, 1}}, {1, {2, 4, 1, 2}},
        {1, {2, 4, 2, 1}},  {-2, {4, 1, 2, 2}}, {1, {4, 2, 1, 2}}, {1, {4, 2, 2, 1}}};
    const auto v = make_vT(t, {1, 2, 2, 4});
    CHECK(v.tensor == tensor_of(combo));
    CHECK(v.poly.size() == 12);
    CHECK(v.poly == from_rows(combo, test::one_minus_alpha_sq()));
  }

  TEST_CASE("v_{S,T} for T = 13/2") {
    const Numbering t({{1, 3}, {2}});
    auto vst = [&](std::vector<std::vector<int>> s) { return make_vST(SemiStandardTableau(std::move(s), 3), t); };
    CHECK(vst({{1, 1}, {2}}).tensor == tensor_of({{2, {1, 2, 1}}, {-1, {2, 1, 1}}, {-1, {1, 1, 2}}}));
    CHECK(vst({{1, 2}, {3}}).tensor == tensor_of({{1, {1, 3, 2}}, {-1, {3, 1, 2}}, {1, {2, 3, 1}}, {-1, {2, 1, 3}}}));
    CHECK(vst({{1, 3}, {2}}).tensor == tensor_of({{1, {1, 2, 3}}, {-1, {2, 1, 3}}, {1, {3, 2, 1}}, {-1, {3, 1, 2}}}));
    CHECK(vst({{1, 3}, {2}}).poly ==
          d_combination({{1, {1, 2, 3}}, {-1, {2, 1, 3}}, {1, {3, 2, 1}}, {-1, {3, 1, 2}}}));
    CHECK_THROWS_AS(make_vST(SemiStandardTableau({{1, 2, 3}}, 3), t), Error);
  }

  TEST_CASE("column tableau gives prod (1 - j alpha) det") {
    for (int n = 2; n <= 4; ++n) {
      std::vector<std::vector<int>> col;
      for (int k = 1; k <= n; ++k) col.push_back({k});
      const Numbering t(col);
      IndexVector iv(n);
      for (int k = 0; k < n; ++k) iv[k] = k + 1;
      AlphaPoly factor(1);
      for (int j = 1; j < n; ++j) factor *= AlphaPoly::linear(q(-j));
      CHECK(make_vT(t, iv).poly == to_alpha(leibniz(n, true)).scaled(factor));
    }
  }

  TEST_CASE("factorization through the content polynomial") {
    const auto check = verify_factorization(Numbering({{1, 3}, {2}}), {1, 2, 1});
    CHECK(check.passed);
    CHECK(check.factor == test::one_minus_alpha_sq());
    // repeated entries in a column kill v_T^(0)
    const auto zero = verify_factorization(Numbering({{1, 3}, {2}}), {1, 1, 1});
    CHECK(zero.passed);
    CHECK(zero.lhs.is_zero());
    for (int n = 1; n <= 3; ++n) CHECK(verify_factorization_suite(n, 0, 0).passed);
    const auto r4 = verify_factorization_suite(4, 50, 9);
    CHECK(r4.passed);
    CHECK(r4.cases == 500);
  }

  TEST_CASE("v_T^(0) matches the alpha = 0 specialization") {
    for (const auto& t : enumerate_standard_tableaux(Partition({2, 1, 1})))
      for (const IndexVector& iv : {IndexVector{1, 2, 3, 4}, IndexVector{2, 1, 1, 3}, IndexVector{4, 4, 1, 2}})
        CHECK(make_vT_at_zero(t, iv) == specialize(make_vT(t, iv).poly, q(0)));
  }

  TEST_CASE("module dimensions at n = 3") {
    CHECK(module_dimension(3, q(-1)).computed_dim == 1u);
    const auto half = module_dimension(3, q(1, 2));
    CHECK(half.computed_dim == 26u);
    CHECK(half.predicted_dim == 26);
    CHECK(half.matches());
    CHECK(module_dimension(3, q(2)).computed_dim == 27u);
    CHECK_THROWS_AS(module_dimension(3, AlphaValue::infinity()), Error);
    CHECK_THROWS_AS(module_dimension(5, q(1)), Error);
  }

  TEST_CASE("rank drops exactly on the critical set") {
    const std::vector<Rational> candidates{q(0), q(1), q(-1), q(1, 2), q(-1, 2), q(1, 3), q(-1, 3), q(2), q(3), q(-5, 7)};
    for (int n = 2; n <= 4; ++n) {
      std::uint64_t full = 1;
      for (int k = 0; k < n; ++k) full *= n;
      for (const auto& a : candidates) {
        CAPTURE(n);
        CAPTURE(to_string(a));
        bool critical = false;
        for (int k = 1; k < n; ++k) critical = critical || a == q(1, k) || a == q(-1, k);
        const auto rep = module_dimension(n, a);
        CHECK(rep.matches());
        CHECK((*rep.computed_dim == full) == !critical);
        CHECK(*rep.computed_dim <= full);
      }
    }
  }

  TEST_CASE("closure of the alpha-determinant") {
    auto c21 = closure(specialize(alpha_determinant(2), q(1)));
    CHECK(c21.dim == 3);
    CHECK(closure(specialize(alpha_determinant(3), q(-1))).dim == 1);
    CHECK(closure(specialize(alpha_determinant(3), q(2, 5))).dim == 27);
    const auto r = closure_from_seed(3, q(-1, 2));
    CHECK(r.passed);
    CHECK(r.details["closure_dim"] == 17);
  }

  TEST_CASE("weight vectors") {
    const auto v = TensorElem::basis({1, 2}) - TensorElem::basis({2, 1});
    const auto w = weight_and_highest_check(v);
    CHECK(w.weight == std::vector<int>{1, 1});
    CHECK(w.is_highest);
    CHECK(w.is_lowest);
    CHECK_THROWS_AS(weight_and_highest_check(TensorElem::basis({1, 1}) + TensorElem::basis({1, 2})), Error);
    CHECK_THROWS_AS(weight_and_highest_check(TensorElem(2)), Error);
    const auto e11 = weight_and_highest_check(TensorElem::basis({1, 1}));
    CHECK(e11.is_highest);
    CHECK(!e11.is_lowest);

    const Numbering t({{1, 2}, {3}});
    const auto hi = make_vST(SemiStandardTableau::row_constant(Partition({2, 1}), 3), t);
    const auto hw = weight_and_highest_check(hi.tensor);
    CHECK(hw.weight == std::vector<int>{2, 1, 0});
    CHECK(hw.is_highest);
    const auto lo = make_vST(SemiStandardTableau::lowest(Partition({2, 1}), 3), t);
    CHECK(weight_and_highest_check(specialize(lo.poly, q(1, 3))).is_lowest);
  }

  TEST_CASE("bases of W_T") {
    const Numbering t({{1, 2}, {3}});
    const auto r = verify_basis(t, 3, q(1, 3));
    CHECK(r.passed);
    CHECK(r.details["rank"] == 8);
    const auto crit = verify_basis(t, 3, q(1));
    CHECK(crit.passed);
    CHECK(crit.details["critical"] == true);
    CHECK(crit.details["vanishing"] == true);
    const auto col = verify_basis(Numbering({{1}, {2}}), 2, q(0));
    CHECK(col.passed);
    CHECK(col.details["rank"] == 1);
    CHECK_THROWS_AS(verify_basis(Numbering({{2, 1}, {3}}), 3, q(1, 3)), Error);
  }

  TEST_CASE("det squared identity at n = 2") {
    CHECK(det_squared_identity_n2().passed);
    CHECK(det_squared_identity_n2(q(-1)).passed);
    CHECK(det_squared_identity_n2(q(7, 3)).passed);
    // alpha = 0: det^2 = (x11 x22 + x21 x12)^2 - 4 x11 x12 x21 x22
    RatMatPoly det(2), plus(2), cross(2);
    det.add_term(mono(2, {{1, 1}, {2, 2}}), q(1));
    det.add_term(mono(2, {{1, 2}, {2, 1}}), q(-1));
    plus.add_term(mono(2, {{1, 1}, {2, 2}}), q(1));
    plus.add_term(mono(2, {{2, 1}, {1, 2}}), q(1));
    cross.add_term(mono(2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}), q(4));
    CHECK(det * det == plus * plus - cross);
    const auto d12 = specialize(make_D({1, 2}) + make_D({2, 1}), q(0));
    CHECK(d12 == plus);
  }

  TEST_CASE("span report rendering") {
    const auto rep = module_dimension(3, q(1, 2));
    const auto j = rep.to_json();
    CHECK(j["schema"] == 1);
    CHECK(j["computed_dim"] == 26);
    CHECK(j["per_lambda"].size() == 3);
    CHECK(j["per_lambda"][1]["multiplicity"] == 2);
    const auto text = rep.to_text();
    CHECK(text.find("V_3^(alpha) = E^(3) (+) E^(2,1) (+) E^(2,1)") != std::string::npos);
    CHECK(text.find("computed dim 26: match") != std::string::npos);
  }

  TEST_CASE("alpha-determinant of a numeric matrix") {
    const std::vector<std::vector<Rational>> x{{q(1), q(2)}, {q(3), q(4)}};
    CHECK(alpha_det_of_matrix(x) == poly({4, 6}));
    const std::vector<std::vector<Rational>> ones(3, std::vector<Rational>(3, q(1)));
    CHECK(alpha_det_of_matrix(ones) == rising_content_product(3));
  }
}
