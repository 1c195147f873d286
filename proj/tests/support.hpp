#pragma once

#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/mat_poly.hpp"
#include "alphadet/permutation.hpp"
#include "alphadet/rational.hpp"

namespace test {

using alphadet::AlphaPoly;
using alphadet::Rational;

inline Rational q(long num, long den = 1) { return alphadet::ratio(num, den); }

// Polynomial in alpha from integer coefficients, constant term first.
inline AlphaPoly poly(std::initializer_list<long> coeffs) {
  std::vector<Rational> c;
  for (long v : coeffs) c.push_back(q(v));
  return AlphaPoly(std::move(c));
}

// (1 + alpha)(1 - alpha), the content polynomial of (2,1).
inline AlphaPoly one_minus_alpha_sq() { return poly({1, 0, -1}); }

inline alphadet::Monomial mono(int n, std::initializer_list<std::pair<int, int>> entries) {
  std::vector<alphadet::Factor> fs;
  for (auto [r, c] : entries) fs.push_back({r, c, 1});
  return alphadet::Monomial(n, fs);
}

inline alphadet::Permutation perm(std::vector<int> one_line) { return alphadet::Permutation(std::move(one_line)); }

inline alphadet::Permutation random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  std::shuffle(v.begin(), v.end(), rng);
  return alphadet::Permutation(v);
}

inline Rational random_rational(std::mt19937_64& rng, long span = 7) {
  std::uniform_int_distribution<long> num(-span, span), den(1, span);
  return q(num(rng), den(rng));
}

inline AlphaPoly random_poly(std::mt19937_64& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::vector<Rational> c;
  for (int k = deg(rng); k >= 0; --k) c.push_back(random_rational(rng));
  return AlphaPoly(std::move(c));
}

}  // namespace test
