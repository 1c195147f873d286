#pragma once

#include <compare>
#include <string>
#include <vector>

namespace alphadet {

// Weakly decreasing list of positive parts.
class Partition {
 public:
  Partition() = default;
  // Trailing zeros are dropped; throws Input if parts are negative or increase.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // lambda_i with 1-based i; 0 past the last part.
  int part(int i) const { return i >= 1 && i <= length() ? parts_[i - 1] : 0; }

  Partition conjugate() const;
  bool is_hook() const { return length() == 0 || part(2) <= 1; }
  // Durfee size d: number of diagonal cells.
  int diagonal() const;

  std::string to_string() const;  // "(2,1)"

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace alphadet
