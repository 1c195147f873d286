#include <doctest.h>

#include "alphadet/error.hpp"
#include "alphadet/group_algebra.hpp"
#include "alphadet/json_io.hpp"
#include "alphadet/mat_poly.hpp"
#include "alphadet/rank.hpp"
#include "alphadet/tensor.hpp"
#include "support.hpp"

using namespace alphadet;
using test::mono;
using test::poly;
using test::q;

TEST_SUITE("exactalg") {
  TEST_CASE("rational parsing") {
    CHECK(parse_rational("3/6") == q(1, 2));
    CHECK(parse_rational("-0.25") == q(-1, 4));
    CHECK(parse_rational("7") == q(7));
    CHECK(parse_rational(" -4/8 ") == q(-1, 2));
    CHECK(to_string(q(-2, 4)) == "-1/2");
    for (const char* bad : {"", "1/0", "x", "1.2.3", "1/", "/2", "0x10", "1e5", "4/-8"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(parse_rational(bad), Error);
    }
  }

  TEST_CASE("alpha values") {
    CHECK(AlphaValue::parse("inf").is_infinite());
    CHECK(AlphaValue::parse("-1/2").finite() == q(-1, 2));
    CHECK(AlphaValue::parse("oo").to_string() == "inf");
    CHECK_THROWS_AS(AlphaValue::infinity().finite(), Error);
  }

  TEST_CASE("AlphaPoly ring axioms on random elements") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const auto a = test::random_poly(rng), b = test::random_poly(rng), c = test::random_poly(rng);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == AlphaPoly());
      CHECK(a * AlphaPoly(1) == a);
      const Rational x = test::random_rational(rng);
      CHECK((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
      if (!b.is_zero()) {
        auto [quo, rem] = divmod(a, b);
        CHECK(quo * b + rem == a);
        CHECK(rem.degree() < b.degree());
        CHECK(exact_div(a * b, b) == a);
      }
    }
  }

  TEST_CASE("AlphaPoly printing, limits and errors") {
    CHECK(test::one_minus_alpha_sq().to_string() == "1 - alpha^2");
    CHECK(poly({0, 2, 0, -1}).to_string() == "2*alpha - alpha^3");
    CHECK(AlphaPoly().to_string() == "0");
    CHECK(AlphaPoly(q(-1, 2)).to_string() == "-1/2");
    CHECK(AlphaPoly().degree() == -1);
    CHECK(poly({1, 3, 2}).limit_coefficient(2) == q(2));
    CHECK(poly({1, 3}).limit_coefficient(2) == q(0));
    CHECK_THROWS_AS(poly({1, 3, 2}).limit_coefficient(1), Error);
    CHECK_THROWS_AS(exact_div(poly({1, 0, 1}), poly({1, 1})), Error);
    CHECK_THROWS_AS(poly({1}).evaluate(AlphaValue::infinity()), Error);
    CHECK(rising_content_product(3) == poly({1, 3, 2}));
  }

  TEST_CASE("monomials are canonical") {
    const Monomial a(3, {{2, 1, 1}, {1, 3, 1}, {2, 1, 1}});
    const Monomial b(3, {{1, 3, 1}, {2, 1, 2}});
    CHECK(a == b);
    CHECK(a.degree() == 3);
    CHECK(a.exponent(2, 1) == 2);
    CHECK(a.to_string() == "x13*x21^2");
    CHECK(a.row_weight() == std::vector<int>{1, 2, 0});
    CHECK(Monomial::from_column_rows(std::vector<int>{2, 1, 1}) == Monomial(3, {{2, 1, 1}, {1, 2, 1}, {1, 3, 1}}));
    CHECK_THROWS_AS(Monomial(2, {{3, 1, 1}}), Error);
  }

  TEST_CASE("polarization is a derivation and satisfies the gl_n brackets") {
    std::mt19937_64 rng(5);
    const int n = 3;
    auto random_poly_in_x = [&] {
      RatMatPoly f(n);
      std::uniform_int_distribution<int> idx(1, n), e(0, 2);
      for (int t = 0; t < 4; ++t) {
        std::vector<Factor> fs;
        for (int k = 0; k < 3; ++k) fs.push_back({idx(rng), idx(rng), e(rng)});
        f.add_term(Monomial(n, fs), test::random_rational(rng));
      }
      return f;
    };
    for (int trial = 0; trial < 40; ++trial) {
      const auto f = random_poly_in_x(), g = random_poly_in_x();
      for (int p = 1; p <= n; ++p)
        for (int qq = 1; qq <= n; ++qq) {
          CHECK((f * g).polarize(p, qq) == f.polarize(p, qq) * g + f * g.polarize(p, qq));
          for (int r = 1; r <= n; ++r)
            for (int s = 1; s <= n; ++s) {
              const auto lhs = f.polarize(r, s).polarize(p, qq) - f.polarize(p, qq).polarize(r, s);
              RatMatPoly rhs(n);
              if (qq == r) rhs += f.polarize(p, s);
              if (s == p) rhs -= f.polarize(r, qq);
              CHECK(lhs == rhs);
            }
        }
    }
  }

  TEST_CASE("substitution and relabeling") {
    RatMatPoly f(2);
    f.add_term(mono(2, {{1, 1}, {2, 2}}), q(1));
    f.add_term(mono(2, {{1, 2}, {2, 1}}), q(-1));
    CHECK(f.substitute({{q(1), q(2)}, {q(3), q(4)}}) == q(-2));
    const std::vector<int> swap{2, 1};
    CHECK(f.relabel_columns(swap) == f.scaled(q(-1)));
    CHECK_THROWS_AS(f.substitute({{q(1)}}), Error);
    RatMatPoly g(3);
    CHECK_THROWS_AS(f + g, Error);
  }

  TEST_CASE("tensor operations") {
    const auto e = TensorElem::basis({1, 2, 3});
    CHECK(e.right_action(Permutation::transposition(3, 1, 2)) == TensorElem::basis({2, 1, 3}));
    CHECK(e.apply_Epq(1, 2) == TensorElem::basis({1, 1, 3}));
    CHECK(e.apply_Epq(2, 1).is_zero() == false);
    CHECK(TensorElem::basis({1, 1}).apply_Epq(2, 1) == TensorElem::basis({2, 1}) + TensorElem::basis({1, 2}));
    CHECK(e.weight() == std::vector<int>{1, 1, 1});
    CHECK(!(TensorElem::basis({1, 1}) + TensorElem::basis({1, 2})).weight());
    CHECK_THROWS_AS(TensorElem::basis({1, 4, 1}), Error);
    CHECK(all_index_vectors(3).size() == 27);
    // (v.s).t = v.(st)
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const auto s = test::random_perm(4, rng), t = test::random_perm(4, rng);
      const auto v = TensorElem::basis({1, 2, 2, 4}) + TensorElem::basis({3, 1, 4, 4}, AlphaPoly::alpha());
      CHECK(v.right_action(s).right_action(t) == v.right_action(s * t));
    }
  }

  TEST_CASE("group algebra") {
    const auto s = GroupAlgElem::element(Permutation::transposition(3, 1, 2));
    const auto t = GroupAlgElem::element(Permutation::transposition(3, 1, 3));
    CHECK((s * t) == GroupAlgElem::element(Permutation::from_cycles(3, {{1, 3, 2}})));
    const auto sum = GroupAlgElem::element(Permutation::identity(3)) + s;
    // (1 + s)^2 = 2(1 + s)
    CHECK(sum * sum == sum.scaled(AlphaPoly(2)));
  }

  TEST_CASE("exact rank") {
    std::vector<SparseRow<Rational>> rows{{{0, q(1)}, {1, q(2)}}, {{0, q(2)}, {1, q(4)}}, {{2, q(1, 3)}}};
    CHECK(rank_of_rows(rows) == 2);
    CHECK(rank_of_rows({}) == 0);
    // a 3x3 matrix with determinant zero, entries chosen so blocks interact
    std::vector<SparseRow<Rational>> m{{{0, q(1)}, {1, q(2)}, {2, q(3)}},
                                       {{0, q(4)}, {1, q(5)}, {2, q(6)}},
                                       {{0, q(7)}, {1, q(8)}, {2, q(9)}}};
    CHECK(rank_of_rows(m) == 2);
  }

  TEST_CASE("rank is invariant under random row operations") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<RatMatPoly> vs;
      std::uniform_int_distribution<int> idx(1, 3);
      for (int k = 0; k < 4; ++k) {
        RatMatPoly f(3);
        for (int t = 0; t < 3; ++t)
          f.add_term(Monomial(3, {{idx(rng), idx(rng), 1}, {idx(rng), idx(rng), 1}}), test::random_rational(rng, 3));
        vs.push_back(f);
      }
      const auto base = exact_rank(std::span<const RatMatPoly>(vs));
      auto mixed = vs;
      mixed.push_back(vs[0].scaled(q(3)) - vs[1].scaled(q(1, 2)));
      mixed[2] += mixed[3].scaled(q(-5));
      CHECK(exact_rank(std::span<const RatMatPoly>(mixed)) == base);
      CHECK(base <= vs.size());
    }
  }

  TEST_CASE("generic rank agrees with rank at random alpha") {
    // rows [1, alpha], [alpha, 1]: generic rank 2, drops to 1 at alpha = +-1
    std::vector<SparseRow<AlphaPoly>> rows{{{0, AlphaPoly(1)}, {1, AlphaPoly::alpha()}},
                                           {{0, AlphaPoly::alpha()}, {1, AlphaPoly(1)}}};
    CHECK(generic_rank_of_rows(rows) == 2);
    std::vector<MatPoly> vs;
    MatPoly a(2), b(2);
    a.add_term(mono(2, {{1, 1}}), AlphaPoly(1));
    a.add_term(mono(2, {{1, 2}}), AlphaPoly::alpha());
    b.add_term(mono(2, {{1, 1}}), AlphaPoly::alpha());
    b.add_term(mono(2, {{1, 2}}), AlphaPoly(1));
    vs = {a, b};
    CHECK(generic_rank(std::span<const MatPoly>(vs)) == 2);
    CHECK(exact_rank(std::span<const MatPoly>(vs), AlphaValue(q(1))) == 1);
    CHECK(exact_rank(std::span<const MatPoly>(vs), AlphaValue(q(2, 7))) == 2);
    CHECK_THROWS_AS(exact_rank(std::span<const MatPoly>(vs), AlphaValue::infinity()), Error);
  }

  TEST_CASE("incremental spans") {
    RationalSpan<int> span;
    CHECK(span.insert(std::map<int, Rational>{{1, q(1)}, {2, q(1)}}));
    CHECK(!span.insert(std::map<int, Rational>{{1, q(2)}, {2, q(2)}}));
    CHECK(span.contains(std::map<int, Rational>{{1, q(-3)}, {2, q(-3)}}));
    CHECK(!span.contains(std::map<int, Rational>{{3, q(1)}}));
    CHECK(span.insert(std::map<int, Rational>{{2, q(1)}, {3, q(1)}}));
    CHECK(span.rank() == 2);

    WeightedSpan ws;
    RatMatPoly f(2), g(2);
    f.add_term(mono(2, {{1, 1}}), q(1));
    g.add_term(mono(2, {{2, 1}}), q(1));
    CHECK(ws.insert(f));
    CHECK(ws.insert(g));
    CHECK(ws.contains(f + g));
    CHECK_THROWS_AS(ws.insert(f + g), Error);
    CHECK(ws.rank() == 2);
  }

  TEST_CASE("json round trips") {
    const auto p = poly({1, 0, -1});
    CHECK(alpha_poly_from_json(to_json(p)) == p);
    MatPoly f(2);
    f.add_term(mono(2, {{1, 1}, {2, 2}}), p);
    f.add_term(mono(2, {{1, 2}, {2, 1}}), AlphaPoly::alpha());
    CHECK(mat_poly_from_json(to_json(f), 2) == f);
    CHECK(partition_from_json(to_json(Partition({3, 1}))) == Partition({3, 1}));
    CHECK(matrix_from_json(json::parse(R"([["1/2", 3], ["0", "-4"]])"))[0][0] == q(1, 2));
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([[1.5, 2], [3, 4]])")), Error);
    CHECK_THROWS_AS(matrix_from_json(json::parse(R"([["1", "2"]])")), Error);
  }
}
