#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/cyclic_module.hpp"
#include "alphadet/limits.hpp"
#include "alphadet/mat_poly.hpp"
#include "alphadet/permutation.hpp"
#include "alphadet/report.hpp"

namespace alphadet {

// Sparse polynomial in alpha and q: (deg_alpha, deg_q) -> coefficient.
class QPoly {
 public:
  using Key = std::pair<int, int>;
  QPoly() = default;

  const std::map<Key, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(int deg_alpha, int deg_q, const Rational& c);
  Rational coefficient(int deg_alpha, int deg_q) const;
  AlphaPoly at_q_one() const;
  // Substitutes alpha; the result only has deg_alpha = 0 keys.
  QPoly at_alpha(const Rational& alpha) const;
  friend bool operator==(const QPoly&, const QPoly&) = default;
  std::string to_string() const;

 private:
  std::map<Key, Rational> terms_;
};

using QMatPoly = std::map<Monomial, QPoly>;

// sum_sigma q^{inv(sigma)} alpha^{n - nu(sigma)} x_{sigma(1) 1} ... x_{sigma(n) n}.
QMatPoly quantum_alpha_det(int n, const Limits& limits = {});
MatPoly quantum_at_q_one(const QMatPoly& f, int n);
QMatPoly quantum_at_alpha(const QMatPoly& f, const Rational& alpha);
std::string to_string(const QMatPoly& f);
json to_json(const QMatPoly& f);

// sum over full cycles of x_{sigma(1) 1} ... x_{sigma(n) n}.
RatMatPoly det_infinity(int n, const Limits& limits = {});
// Prediction rows are hooks; computed by closure of det^(inf) when n is within the rank bound.
SpanReport infinity_module_dimension(int n, const Limits& limits = {});

struct EwensSpec {
  int n = 1;
  AlphaValue alpha = AlphaValue(Rational(1));
  std::uint64_t seed = 0;

  // Throws Input unless n >= 1 and alpha > 0 or alpha = infinity.
  void validate() const;
};

// alpha^{n - nu(sigma)} / prod_{j=1}^{n-1} (1 + j alpha); at infinity 1/(n-1)! on full cycles.
Rational ewens_pmf(const EwensSpec& spec, const Permutation& sigma);
// The alpha -> 0 limit: the point mass at the identity.
Rational ewens_pmf_limit_zero(const Permutation& sigma);
// P(nu = m) for m = 1..n (index m-1), by enumeration.
std::vector<Rational> ewens_cycle_marginal(const EwensSpec& spec, const Limits& limits = {});
// CSV: sigma, cycles, inversions, pmf; one row per permutation.
std::string ewens_pmf_csv(const EwensSpec& spec, const Limits& limits = {});

// Chinese-restaurant construction with theta = 1/alpha. Samples are drawn in
// blocks of kSampleBlock; block b uses derive_seed(seed, b), so the output does
// not depend on `jobs`.
inline constexpr std::size_t kSampleBlock = 4096;
std::vector<Permutation> ewens_sample(const EwensSpec& spec, std::size_t count, int jobs = 1);
// One JSON object per line: {"index":i,"sigma":[...],"cycles":nu}.
std::string samples_to_json_lines(const std::vector<Permutation>& samples);

// sum_sigma pmf(sigma) = 1 exactly.
Report verify_pmf_normalization(const EwensSpec& spec, const Limits& limits = {});
// det^(alpha)(X) = prod(1 + j alpha) E[X_sigma]; det^(inf)(X) = (n-1)! E[X_sigma].
Report verify_mean_value(int n, const AlphaValue& alpha, const std::vector<std::vector<Rational>>& x,
                         const Limits& limits = {});
// Frequencies of nu over `count` samples against the exact marginal, 4 standard errors.
Report verify_sampler_marginal(const EwensSpec& spec, std::size_t count, int jobs = 1,
                               const Limits& limits = {});

}  // namespace alphadet
