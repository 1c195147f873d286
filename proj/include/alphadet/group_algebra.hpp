#pragma once

#include <map>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/permutation.hpp"

namespace alphadet {

// Element of Q[alpha] S_n: sparse map permutation -> coefficient.
class GroupAlgElem {
 public:
  using Terms = std::map<Permutation, AlphaPoly>;

  GroupAlgElem() = default;
  explicit GroupAlgElem(int n) : n_(n) {}
  static GroupAlgElem element(const Permutation& sigma, const AlphaPoly& c = AlphaPoly(1));

  int degree() const { return n_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Permutation& sigma, const AlphaPoly& c);
  AlphaPoly coefficient(const Permutation& sigma) const;

  GroupAlgElem& operator+=(const GroupAlgElem& o);
  friend GroupAlgElem operator+(GroupAlgElem a, const GroupAlgElem& b) { return a += b; }
  GroupAlgElem scaled(const AlphaPoly& c) const;
  // Convolution product; permutations multiply as (sigma tau)(k) = sigma(tau(k)).
  friend GroupAlgElem operator*(const GroupAlgElem& a, const GroupAlgElem& b);
  friend bool operator==(const GroupAlgElem&, const GroupAlgElem&) = default;

  std::string to_string() const;

 private:
  int n_ = 0;
  Terms terms_;
};

}  // namespace alphadet
