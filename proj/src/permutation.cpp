#include "alphadet/permutation.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <numeric>

#include "alphadet/error.hpp"

namespace alphadet {

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int n = degree();
  if (n < 1) throw_input("permutation degree must be at least 1");
  std::vector<char> seen(n + 1, 0);
  for (int v : image_) {
    if (v < 1 || v > n || seen[v]) throw_input("one-line form is not a bijection of [1..n]");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n || a == b) throw_input("transposition points out of range");
  Permutation p = identity(n);
  std::swap(p.image_[a - 1], p.image_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  std::vector<char> used(n + 1, 0);
  for (const auto& c : cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      int a = c[i];
      if (a < 1 || a > n || used[a]) throw_input("invalid cycle list");
      used[a] = 1;
      img[a - 1] = c[(i + 1) % c.size()];
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int k = 1; k <= degree(); ++k) inv[image_[k - 1] - 1] = k;
  Permutation p;
  p.image_ = std::move(inv);
  return p;
}

int Permutation::cycle_count() const {
  const int n = degree();
  std::array<char, 64> small{};
  std::vector<char> big;
  char* seen = small.data();
  if (n > 63) {
    big.assign(n + 1, 0);
    seen = big.data();
  }
  int cycles = 0;
  for (int k = 1; k <= n; ++k) {
    if (seen[k]) continue;
    ++cycles;
    for (int j = k; !seen[j]; j = image_[j - 1]) seen[j] = 1;
  }
  return cycles;
}

int Permutation::inversions() const {
  int inv = 0;
  for (int i = 0; i < degree(); ++i)
    for (int j = i + 1; j < degree(); ++j)
      if (image_[i] > image_[j]) ++inv;
  return inv;
}

Partition Permutation::cycle_type() const {
  const int n = degree();
  std::vector<char> seen(n + 1, 0);
  std::vector<int> lengths;
  for (int k = 1; k <= n; ++k) {
    if (seen[k]) continue;
    int len = 0;
    for (int j = k; !seen[j]; j = image_[j - 1]) {
      seen[j] = 1;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return Partition(std::move(lengths));
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= degree(); ++k)
    if (image_[k - 1] != k) return false;
  return true;
}

std::string Permutation::cycle_string() const {
  const int n = degree();
  std::vector<char> seen(n + 1, 0);
  std::string out;
  for (int k = 1; k <= n; ++k) {
    if (seen[k] || image_[k - 1] == k) continue;
    out += "(";
    bool first = true;
    for (int j = k; !seen[j]; j = image_[j - 1]) {
      seen[j] = 1;
      if (!first) out += " ";
      out += std::to_string(j);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "(1)" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation p;
  p.image_.resize(b.image_.size());
  for (std::size_t k = 0; k < b.image_.size(); ++k) p.image_[k] = a.image_[b.image_[k] - 1];
  return p;
}

PermutationStats permutation_statistics(const Permutation& sigma) {
  return {sigma.cycle_count(), sigma.inversions(), sigma.cycle_type()};
}

Permutation compose(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree())
    throw_input("cannot compose permutations of degree " + std::to_string(sigma.degree()) + " and " +
                std::to_string(tau.degree()));
  return sigma * tau;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::vector<Permutation> symmetric_group(int n, const Limits& limits) {
  std::vector<Permutation> out;
  out.reserve(factorial(std::min(n, limits.max_enum_n)));
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, limits);
  return out;
}

const std::vector<Permutation>& cached_symmetric_group(int n) {
  static std::array<std::once_flag, Limits::kHardEnumCap + 1> flags;
  static std::array<std::vector<Permutation>, Limits::kHardEnumCap + 1> groups;
  if (n < 1 || n > Limits::kHardEnumCap)
    throw Error(ErrorKind::SizeLimit, "symmetric group degree " + std::to_string(n) + " outside [1, " +
                                          std::to_string(Limits::kHardEnumCap) + "]");
  std::call_once(flags[n], [n] {
    Limits lim;
    lim.max_enum_n = Limits::kHardEnumCap;
    groups[n] = symmetric_group(n, lim);
  });
  return groups[n];
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& fn, const Limits& limits) {
  if (n < 1) throw_input("symmetric group degree must be at least 1");
  limits.check_enum(n, "enumerate_symmetric_group");
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 1);
  do {
    fn(Permutation(img));
  } while (std::next_permutation(img.begin(), img.end()));
}

Permutation unrank_permutation(int n, std::uint64_t rank) {
  if (n < 1 || n > 20) throw_input("unrank_permutation: degree out of range");
  if (rank >= factorial(n)) throw_input("unrank_permutation: rank out of range");
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> img;
  img.reserve(n);
  for (int k = n; k >= 1; --k) {
    std::uint64_t block = factorial(k - 1);
    auto idx = static_cast<std::size_t>(rank / block);
    rank %= block;
    img.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(img));
}

}  // namespace alphadet
