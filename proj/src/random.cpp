#include "alphadet/random.hpp"

#include "alphadet/error.hpp"

namespace alphadet {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(seed + (index + 1) * 0x9E3779B97F4A7C15ULL);
}

std::uint64_t SeededRng::below(std::uint64_t bound) {
  if (bound == 0) throw_input("SeededRng::below: bound must be positive");
  // Largest multiple of bound that fits; draws at or above it are rejected.
  const std::uint64_t limit = (~std::uint64_t{0}) - ((~std::uint64_t{0}) % bound + 1) % bound;
  while (true) {
    std::uint64_t x = engine_();
    if (x <= limit) return x % bound;
  }
}

}  // namespace alphadet
