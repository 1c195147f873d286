#include "alphadet/report.hpp"

namespace alphadet {

void Report::fail(json counterexample) {
  passed = false;
  ++failures;
  if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(std::move(counterexample));
}

void Report::absorb(const Report& other) {
  cases += other.cases;
  failures += other.failures;
  if (!other.passed) passed = false;
  for (const auto& c : other.counterexamples)
    if (counterexamples.size() < kMaxCounterexamples) counterexamples.push_back(c);
}

json Report::to_json() const {
  json j;
  j["suite"] = suite;
  j["passed"] = passed;
  j["cases"] = cases;
  j["failures"] = failures;
  j["details"] = details;
  j["counterexamples"] = counterexamples;
  return j;
}

}  // namespace alphadet
