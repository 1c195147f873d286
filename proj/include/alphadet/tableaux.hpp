#pragma once

#include <cstdint>
#include <vector>

#include "alphadet/alpha_poly.hpp"
#include "alphadet/group_algebra.hpp"
#include "alphadet/limits.hpp"
#include "alphadet/partition.hpp"
#include "alphadet/permutation.hpp"
#include "alphadet/tensor.hpp"

namespace alphadet {

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

struct FrobeniusCoordinates {
  std::vector<int> arms;  // a_i = lambda_i - i
  std::vector<int> legs;  // b_i = lambda'_i - i
};

struct PartitionStats {
  Partition conjugate;
  FrobeniusCoordinates frobenius;
  std::vector<std::vector<int>> hooks;  // hooks[i-1][j-1] = h(i,j)
  std::uint64_t f_std = 0;              // number of standard tableaux
  std::uint64_t weyl_dim = 0;           // dim E^lambda for gl_n
};

FrobeniusCoordinates frobenius_coordinates(const Partition& lambda);
std::vector<std::vector<int>> hook_lengths(const Partition& lambda);
// f^lambda = |lambda|! / prod h(i,j)
std::uint64_t count_standard_tableaux(const Partition& lambda);
// Hook-content formula prod (n + j - i) / h(i,j); 0 when lambda has more than n rows.
std::uint64_t weyl_dimension(const Partition& lambda, int n);
PartitionStats partition_stats(const Partition& lambda, int n);

// f_lambda(alpha) as the product over Frobenius coordinates.
AlphaPoly content_polynomial(const Partition& lambda);
// Roots of f_lambda: {1/k : k < lambda'_1} and {-1/k : k < lambda_1}, ascending.
std::vector<Rational> content_zero_set(const Partition& lambda);
bool in_content_zero_set(const Partition& lambda, const Rational& alpha);

// Bijective filling of a Young diagram by [1..n]; rows()[r-1][c-1] is the box (r, c).
class Numbering {
 public:
  Numbering() = default;
  // Throws Input unless row lengths form a partition and entries are a bijection onto [1..n].
  explicit Numbering(std::vector<std::vector<int>> rows);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.weight(); }
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }
  // (row, col) of the box holding value k.
  std::pair<int, int> position(int k) const;
  bool is_standard() const;
  // Row-reading word.
  std::vector<int> reading_word() const;
  std::string to_string() const;  // "12/3"

  friend auto operator<=>(const Numbering&, const Numbering&) = default;
  friend bool operator==(const Numbering&, const Numbering&) = default;

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

// Filling with [1..bound]: rows weakly increase, columns strictly increase.
class SemiStandardTableau {
 public:
  SemiStandardTableau() = default;
  // Throws Input if the semistandard conditions or the entry bound fail.
  SemiStandardTableau(std::vector<std::vector<int>> rows, int bound);

  const Partition& shape() const { return shape_; }
  int bound() const { return bound_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }
  std::string to_string() const;

  // Row r filled with r: the highest-weight filling.
  static SemiStandardTableau row_constant(const Partition& shape, int bound);
  // Column r read top-down as bound - lambda'_r + 1, ..., bound: the lowest-weight filling.
  static SemiStandardTableau lowest(const Partition& shape, int bound);

  friend auto operator<=>(const SemiStandardTableau&, const SemiStandardTableau&) = default;
  friend bool operator==(const SemiStandardTableau&, const SemiStandardTableau&) = default;

 private:
  Partition shape_;
  int bound_ = 0;
  std::vector<std::vector<int>> rows_;
};

// Standard tableaux of shape lambda, lexicographic in the row-reading word.
std::vector<Numbering> enumerate_standard_tableaux(const Partition& lambda, const Limits& limits = {});
// Semistandard tableaux with entries in [1..n], lexicographic in the row-reading word.
std::vector<SemiStandardTableau> enumerate_ssyt(const Partition& lambda, int n, const Limits& limits = {});

struct RowColumnGroups {
  std::vector<Permutation> rows;     // R(T), lexicographic
  std::vector<Permutation> columns;  // C(T), lexicographic
};

RowColumnGroups row_column_groups(const Numbering& t);

// c_T = sum_{q in C(T)} sgn(q) sum_{p in R(T)} q p
GroupAlgElem young_symmetrizer(const Numbering& t);

// i_k = entry of S in the box that holds k in T. Throws Input on shape mismatch.
IndexVector sequence_from_pair(const SemiStandardTableau& s, const Numbering& t);

}  // namespace alphadet
