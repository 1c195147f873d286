#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "alphadet/cyclic_module.hpp"
#include "alphadet/limits.hpp"
#include "alphadet/mat_poly.hpp"
#include "alphadet/partition.hpp"
#include "alphadet/permutation.hpp"
#include "alphadet/report.hpp"
#include "alphadet/tableaux.hpp"

namespace alphadet {

// chi^lambda at cycle type mu, by the Murnaghan-Nakayama rule. Memoized;
// safe to call from several threads.
long long character_value(const Partition& lambda, const Partition& mu);
long long character_value(const Partition& lambda, const Permutation& sigma);

// z_mu = prod_i i^{m_i} m_i!, the centralizer order of the class mu.
BigInt centralizer_order(const Partition& mu);

struct CharacterTable {
  int n = 0;
  std::vector<Partition> shapes;  // rows, reverse lexicographic
  std::vector<Partition> classes;  // columns, same order
  std::vector<std::vector<long long>> values;

  long long at(const Partition& lambda, const Partition& mu) const;
  std::string to_csv() const;
  json to_json() const;
};

CharacterTable character_table(int n, const Limits& limits = {});

// Row and column orthogonality plus chi^lambda(1^n) = f^lambda.
Report verify_character_orthogonality(int n, const Limits& limits = {});

// Imm_lambda(X) = sum_sigma chi^lambda(sigma) prod_i x_{i, sigma(i)}.
MatPoly immanant(const Partition& lambda, int n, const Limits& limits = {});

// alpha^{n - nu(sigma)} = sum_lambda (f^lambda / n!) f_lambda(alpha) chi^lambda(sigma), all sigma.
Report verify_fcf(int n, const Limits& limits = {});

// chi^lambda . c_T = delta_{lambda, sh(T)} (n! / f^lambda) c_T in Q S_n.
Report verify_young_relation(const Partition& lambda, const Numbering& t);
// Every lambda against every standard T of size n.
Report verify_young_suite(int n, const Limits& limits = {});

// det^(alpha)(X) = sum_lambda (f^lambda / n!) f_lambda(alpha) Imm_lambda(X).
Report verify_immanant_expansion(int n, const Limits& limits = {});

// U(gl_n) Imm_lambda(X) against (E^lambda)^{f^lambda}.
SpanReport immanant_module_dimension(const Partition& lambda, int n, const Limits& limits = {});

}  // namespace alphadet
