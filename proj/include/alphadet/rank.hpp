#pragma once

#include <map>
#include <span>
#include <utility>
#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/mat_poly.hpp"
#include "alphadet/rational.hpp"
#include "alphadet/tensor.hpp"

namespace alphadet {

template <class Coeff>
using SparseRow = std::vector<std::pair<int, Coeff>>;

// Rank over Q. Rows are split into blocks with disjoint column support and
// each block is eliminated densely.
std::size_t rank_of_rows(const std::vector<SparseRow<Rational>>& rows);
// Generic rank over Q(alpha) by fraction-free (Bareiss) elimination over Q[alpha].
// Reports the rank at generic alpha only; the finite set of alpha where it
// drops is not computed.
std::size_t generic_rank_of_rows(const std::vector<SparseRow<AlphaPoly>>& rows);

// Rank of the coefficient matrix (rows = vectors, columns = monomials present).
std::size_t exact_rank(std::span<const RatMatPoly> vectors);
// Specializes at a finite alpha first; Infinity throws Unsupported.
std::size_t exact_rank(std::span<const MatPoly> vectors, const AlphaValue& alpha);
std::size_t exact_rank(std::span<const TensorElem> vectors, const AlphaValue& alpha);
std::size_t generic_rank(std::span<const MatPoly> vectors);
std::size_t generic_rank(std::span<const TensorElem> vectors);

// Incrementally grown subspace of Q^(Key). Rows are kept in echelon order with
// distinct pivot columns, so reduction is a single forward pass.
template <class Key>
class RationalSpan {
 public:
  template <class Terms>
  bool insert(const Terms& terms) {
    for (const auto& [k, c] : terms)
      if (!is_zero(c)) cols_.try_emplace(k, static_cast<int>(cols_.size()));
    auto v = densify(terms);
    reduce(v);
    auto pivot = first_nonzero(v);
    if (pivot < 0) return false;
    Rational inv = 1 / v[pivot];
    for (auto& x : v) x *= inv;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }

  template <class Terms>
  bool contains(const Terms& terms) const {
    for (const auto& [k, c] : terms)
      if (!is_zero(c) && !cols_.contains(k)) return false;
    auto v = densify(terms);
    reduce(v);
    return first_nonzero(v) < 0;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  template <class Terms>
  std::vector<Rational> densify(const Terms& terms) const {
    std::vector<Rational> v(cols_.size());
    for (const auto& [k, c] : terms) {
      auto it = cols_.find(k);
      if (it != cols_.end()) v[it->second] = c;
    }
    return v;
  }

  void reduce(std::vector<Rational>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const int p = pivots_[r];
      if (is_zero(v[p])) continue;
      Rational f = v[p];
      const auto& row = rows_[r];
      for (std::size_t c = 0; c < row.size(); ++c)
        if (!is_zero(row[c])) v[c] -= f * row[c];
    }
  }

  static int first_nonzero(const std::vector<Rational>& v) {
    for (std::size_t c = 0; c < v.size(); ++c)
      if (!is_zero(v[c])) return static_cast<int>(c);
    return -1;
  }

  std::map<Key, int> cols_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<int> pivots_;
};

// One RationalSpan per gl_n weight; valid for weight-graded subspaces
// (every inserted vector must be weight-homogeneous).
class WeightedSpan {
 public:
  // Throws Input if f is not weight-homogeneous.
  bool insert(const RatMatPoly& f);
  bool contains(const RatMatPoly& f) const;
  std::size_t rank() const;

 private:
  std::map<std::vector<int>, RationalSpan<Monomial>> blocks_;
};

}  // namespace alphadet
