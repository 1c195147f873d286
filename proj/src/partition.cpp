#include "alphadet/partition.hpp"

#include <numeric>

#include "alphadet/error.hpp"

namespace alphadet {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw_input("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1]) throw_input("partition parts must be weakly decreasing: " + to_string());
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> conj(parts_.empty() ? 0 : parts_[0], 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++conj[j];
  return Partition(std::move(conj));
}

int Partition::diagonal() const {
  int d = 0;
  while (d < length() && parts_[d] > d) ++d;
  return d;
}

std::string Partition::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

}  // namespace alphadet
