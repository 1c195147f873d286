#include "alphadet/limits.hpp"

#include "alphadet/error.hpp"

namespace alphadet {

namespace {

[[noreturn]] void size_error(const std::string& what, int got, int bound, const char* flag) {
  throw Error(ErrorKind::SizeLimit, what + ": size " + std::to_string(got) + " exceeds the bound " +
                                        std::to_string(bound) + " (" + flag + ")");
}

}  // namespace

void Limits::check_enum(int n, const std::string& what) const {
  if (n > max_enum_n) size_error(what, n, max_enum_n, "max_enum_n");
}

void Limits::check_tableau(int size, const std::string& what) const {
  if (size > max_tableau_size) size_error(what, size, max_tableau_size, "max_tableau_size");
}

void Limits::check_rank(int n, const std::string& what) const {
  int bound = effective_rank_n();
  if (n > bound) {
    std::string msg = what + ": rank over [n]^n with n = " + std::to_string(n) + " exceeds the bound " +
                      std::to_string(bound) + " (estimated " + std::to_string(n) + "^" +
                      std::to_string(n) + " vectors)";
    if (!allow_large && n <= kHardRankCap) msg += "; pass --allow-large to enable n = 5";
    throw Error(ErrorKind::SizeLimit, msg);
  }
}

void Limits::validate() const {
  if (max_enum_n < 1 || max_enum_n > kHardEnumCap)
    throw_input("max_enum_n must be in [1, " + std::to_string(kHardEnumCap) + "]");
  if (max_tableau_size < 1 || max_tableau_size > kHardTableauCap)
    throw_input("max_tableau_size must be in [1, " + std::to_string(kHardTableauCap) + "]");
  if (max_rank_n < 1 || max_rank_n > kHardRankCap)
    throw_input("max_rank_n must be in [1, " + std::to_string(kHardRankCap) + "]");
  if (jobs < 1 || jobs > 256) throw_input("jobs must be in [1, 256]");
}

}  // namespace alphadet
