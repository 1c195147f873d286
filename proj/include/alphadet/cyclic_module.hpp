#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/limits.hpp"
#include "alphadet/mat_poly.hpp"
#include "alphadet/rank.hpp"
#include "alphadet/report.hpp"
#include "alphadet/tableaux.hpp"
#include "alphadet/tensor.hpp"

namespace alphadet {

// D(i_1..i_n) = sum_sigma alpha^{n - nu(sigma)} prod_k x_{i_k, sigma(k)}.
MatPoly make_D(const IndexVector& ivec, const Limits& limits = {});
// D(1..n) = det^(alpha)(X).
MatPoly alpha_determinant(int n, const Limits& limits = {});

// det^(alpha)(X) for a numeric X as a polynomial in alpha, by direct enumeration.
AlphaPoly alpha_det_of_matrix(const std::vector<std::vector<Rational>>& x, const Limits& limits = {});

// sum_sigma alpha^{n - nu(sigma)} = prod_{j=1}^{n-1} (1 + j alpha), for every m <= n.
Report verify_stanley(int n, const Limits& limits = {});

// Phi(e_{i_1} (x) ... (x) e_{i_n}) = D(i_1..i_n), extended linearly.
MatPoly phi(const TensorElem& v, const Limits& limits = {});

TensorElem apply_Epq(int p, int q, const TensorElem& v);
// Polarization operator sum_j x_{pj} d/dx_{qj}.
MatPoly apply_Epq(int p, int q, const MatPoly& f);
RatMatPoly apply_Epq(int p, int q, const RatMatPoly& f);

TensorElem right_action(const TensorElem& v, const Permutation& sigma);
// Right S_n action on the polynomial side: x_{r,c} -> x_{r, sigma^{-1}(c)}.
// Agrees with D(i).sigma = D(i_{sigma(1)}, ..., i_{sigma(n)}).
MatPoly right_action(const MatPoly& f, const Permutation& sigma);

struct CycleFormulaValue {
  AlphaPoly value;  // sum_{q in C(T)} sgn(q) sum_{p in R(T)} alpha^{n - nu(p q sigma)}
  bool factors = false;  // sigma = q0 p0 with q0 in C(T), p0 in R(T)
  int sign = 0;          // sgn(q0) when factors
  Permutation q0, p0;
};

CycleFormulaValue cycle_formula_sum(const Numbering& t, const Permutation& sigma);
// Every standard tableau of every shape of n, every sigma in S_n.
Report verify_cycle_formula(int n, const Limits& limits = {});
// Single case (tableau, sigma); used to replay a counterexample.
Report verify_cycle_formula_case(const Numbering& t, const Permutation& sigma);

struct VTElement {
  TensorElem tensor;  // e_ivec . c_T
  MatPoly poly;       // Phi(tensor) = v_T^(alpha)(ivec)
};

VTElement make_vT(const Numbering& t, const IndexVector& ivec, const Limits& limits = {});
VTElement make_vST(const SemiStandardTableau& s, const Numbering& t, const Limits& limits = {});
// v_T^(0)(ivec) = sum sgn(q) prod_k x_{i_{qp(k)}, k}, built directly from R(T), C(T).
RatMatPoly make_vT_at_zero(const Numbering& t, const IndexVector& ivec);

struct FactorizationCheck {
  bool passed = false;
  AlphaPoly factor;  // f_lambda(alpha)
  MatPoly lhs;       // v_T^(alpha)(ivec)
  MatPoly rhs;       // f_lambda(alpha) * v_T^(0)(ivec)
};

FactorizationCheck verify_factorization(const Numbering& t, const IndexVector& ivec, const Limits& limits = {});
// n <= 3: every standard T and every ivec. Larger n: `random_per_tableau` ivecs per T.
Report verify_factorization_suite(int n, int random_per_tableau, std::uint64_t seed, const Limits& limits = {});

struct LambdaRow {
  Partition lambda;
  std::uint64_t multiplicity = 0;  // f^lambda
  std::uint64_t weyl_dim = 0;      // dim E^lambda
  Rational content_value;          // f_lambda(alpha), or the alpha^{1-n} limit at infinity
  bool included = false;
};

struct SpanReport {
  int ambient_n = 0;
  AlphaValue alpha;
  std::string generator;  // empty for det^(alpha); otherwise the seed, e.g. "Imm_(2,1)"
  std::optional<std::size_t> computed_dim;  // empty when above the rank bound
  std::uint64_t predicted_dim = 0;
  std::vector<LambdaRow> per_lambda;

  bool matches() const { return computed_dim && *computed_dim == predicted_dim; }
  json to_json() const;
  std::string to_text() const;
};

// Prediction rows for V_n^(alpha): lambda included iff f_lambda(alpha) != 0.
std::vector<LambdaRow> predicted_decomposition(int n, const AlphaValue& alpha, const Limits& limits = {});
SpanReport module_dimension(int n, const AlphaValue& alpha, const Limits& limits = {});

struct ClosureResult {
  WeightedSpan span;
  std::size_t dim = 0;
  std::size_t operator_applications = 0;
};

// Smallest E_pq-stable subspace containing a weight-homogeneous seed.
ClosureResult closure(const RatMatPoly& seed);
// U(gl_n) det^(alpha)(X) against span{D(ivec)} at a finite alpha.
Report closure_from_seed(int n, const AlphaValue& alpha, const Limits& limits = {});

// Phi(E_pq v) = E_pq Phi(v) and Phi(v.sigma) = Phi(v).sigma; exhaustive over
// basis tensors for n <= 3, `random_cases` random basis tensors otherwise.
Report verify_homomorphism(int n, int random_cases, std::uint64_t seed, const Limits& limits = {});

struct WeightCheck {
  std::vector<int> weight;
  bool is_highest = false;  // E_pq v = 0 for all p < q
  bool is_lowest = false;   // E_pq v = 0 for all p > q
};

// Throws Input if v is zero or not weight-homogeneous.
WeightCheck weight_and_highest_check(const TensorElem& v);
WeightCheck weight_and_highest_check(const RatMatPoly& f);

// Basis of W_T^(alpha): the v_{S,T} over SSYT(lambda, n).
Report verify_basis(const Numbering& t, int n, const Rational& alpha, const Limits& limits = {});

// (1+alpha)^2 det(X)^2 = (D(1,2)+D(2,1))^2 - 4 D(1,1) D(2,2); symbolic when alpha is empty.
Report det_squared_identity_n2(const std::optional<Rational>& alpha = std::nullopt);

}  // namespace alphadet
