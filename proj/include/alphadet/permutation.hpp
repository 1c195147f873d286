#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "alphadet/limits.hpp"
#include "alphadet/partition.hpp"

namespace alphadet {

// Element of S_n in one-line form, 1-based: image[k-1] = sigma(k).
//
// Products follow (sigma * tau)(k) = sigma(tau(k)) everywhere in the library.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // Cycles given as lists of 1-based points; unlisted points are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int k) const { return image_[k - 1]; }
  const std::vector<int>& one_line() const { return image_; }

  Permutation inverse() const;
  int cycle_count() const;
  int inversions() const;
  int sign() const { return ((degree() - cycle_count()) % 2 == 0) ? 1 : -1; }
  Partition cycle_type() const;
  bool is_identity() const;

  // Cycle notation, e.g. "(1 3 2)"; identity prints as "(1)".
  std::string cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend auto operator<=>(const Permutation&, const Permutation&) = default;
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

struct PermutationStats {
  int cycles = 0;
  int inversions = 0;
  Partition cycle_type;
};

PermutationStats permutation_statistics(const Permutation& sigma);

// Checked product; throws Input on degree mismatch.
Permutation compose(const Permutation& sigma, const Permutation& tau);

std::uint64_t factorial(int n);

// All n! permutations in lexicographic one-line order.
std::vector<Permutation> symmetric_group(int n, const Limits& limits = {});

// Shared immutable copy of symmetric_group(n) for the hot loops (n <= hard cap).
const std::vector<Permutation>& cached_symmetric_group(int n);

// Stream form: calls fn for each permutation in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn,
                          const Limits& limits = {});

// rank-th permutation (0-based) in lexicographic order; lets callers shard
// enumeration into index ranges.
Permutation unrank_permutation(int n, std::uint64_t rank);

}  // namespace alphadet
