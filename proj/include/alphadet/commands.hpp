#pragma once

#include <string>

#include "alphadet/limits.hpp"
#include "alphadet/report.hpp"

namespace alphadet {

struct CommandResult {
  int status = 0;  // 0 success, 1 a verification suite failed
  json document;   // carries "schema": 1
  std::string text;
  std::string csv;         // empty when the command has no table form
  std::string json_lines;  // sample streams

  // format is json, text, csv or jsonl; throws Input if the command has no such form.
  std::string render(const std::string& format) const;
};

// Reads {"limits": {"max_n", "max_rank_n", "allow_large", "jobs"}} over the defaults.
Limits limits_from_config(const json& config);

// Wraps a verification report as a command result. Counterexamples without a
// "reproduce" field get a follow-up CLI command built from `config`.
CommandResult verify_result(Report report, const json& config);

// Commands: eval, symbolic, content, decompose, verify, ewens, characters.
// Throws alphadet::Error for bad input, size limits, and unsupported requests.
CommandResult run_command(const std::string& command, const json& config);

}  // namespace alphadet
