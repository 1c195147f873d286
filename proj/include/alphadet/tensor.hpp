#pragma once

#include <map>
#include <optional>
#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/permutation.hpp"

namespace alphadet {

// (i_1, ..., i_n) with entries in [1..n], 1-based.
using IndexVector = std::vector<int>;

// Finite combination of basis tensors e_{i_1} (x) ... (x) e_{i_n} with
// AlphaPoly coefficients.
class TensorElem {
 public:
  using Terms = std::map<IndexVector, AlphaPoly>;

  TensorElem() = default;
  explicit TensorElem(int n) : n_(n) {}
  // Throws Input if ivec has the wrong length or entries outside [1..n].
  static TensorElem basis(const IndexVector& ivec, const AlphaPoly& coeff = AlphaPoly(1));

  int ambient() const { return n_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  void add_term(const IndexVector& ivec, const AlphaPoly& c);
  AlphaPoly coefficient(const IndexVector& ivec) const;

  TensorElem& operator+=(const TensorElem& o);
  TensorElem& operator-=(const TensorElem& o);
  friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
  friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }
  TensorElem scaled(const AlphaPoly& c) const;
  friend bool operator==(const TensorElem&, const TensorElem&) = default;

  // E_pq acting factorwise: sum_k delta_{i_k,q} e_{..., p at k, ...}.
  TensorElem apply_Epq(int p, int q) const;
  // (e_{i_1} (x) ... ) . sigma = e_{i_sigma(1)} (x) ... (x) e_{i_sigma(n)}.
  TensorElem right_action(const Permutation& sigma) const;

  // Common content vector of all labels, or nullopt if not homogeneous.
  std::optional<std::vector<int>> weight() const;

 private:
  void check_label(const IndexVector& ivec) const;
  int n_ = 0;
  Terms terms_;
};

std::vector<int> index_weight(const IndexVector& ivec, int n);

// Every vector in [1..n]^n in lexicographic order.
std::vector<IndexVector> all_index_vectors(int n);

}  // namespace alphadet
