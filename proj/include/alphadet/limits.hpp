#pragma once

#include <string>

namespace alphadet {

// Size bounds shared by the enumerating operations. Defaults keep every
// brute-force sum at desk scale; the hard caps cannot be overridden.
struct Limits {
  static constexpr int kHardEnumCap = 10;
  static constexpr int kHardTableauCap = 12;
  static constexpr int kHardRankCap = 5;

  int max_enum_n = 8;        // symmetric-group enumeration
  int max_tableau_size = 9;  // |lambda| for tableau enumeration
  int max_rank_n = 4;        // rank computations over [n]^n
  bool allow_large = false;  // lifts max_rank_n to kHardRankCap
  int jobs = 1;              // worker threads for sharded suites

  int effective_rank_n() const { return allow_large ? kHardRankCap : max_rank_n; }

  // Throws SizeLimit if n exceeds the enumeration bound.
  void check_enum(int n, const std::string& what) const;
  void check_tableau(int size, const std::string& what) const;
  void check_rank(int n, const std::string& what) const;
  // Throws Input if any bound is above its hard cap.
  void validate() const;
};

}  // namespace alphadet
