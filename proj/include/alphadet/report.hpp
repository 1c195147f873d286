#pragma once

#include <json.hpp>

#include <string>
#include <vector>

namespace alphadet {

using json = nlohmann::ordered_json;

// Outcome of a verification suite. Failures are data, not errors.
struct Report {
  static constexpr std::size_t kMaxCounterexamples = 20;

  std::string suite;
  bool passed = true;
  std::size_t cases = 0;
  std::size_t failures = 0;
  json details = json::object();
  std::vector<json> counterexamples;

  // Records a failing case; only the first kMaxCounterexamples are kept.
  void fail(json counterexample);
  // Appends another shard's outcome (cases, failures, counterexamples).
  void absorb(const Report& other);
  json to_json() const;
};

}  // namespace alphadet
