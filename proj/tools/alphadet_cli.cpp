// alphadet command-line driver. Builds a JSON config from flags and runs it
// through the C interface.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "alphadet/alphadet.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

struct Options {
  std::optional<int> n;
  std::optional<std::string> alpha, lambda, tableau, sigma, ivec, matrix, kind;
  std::optional<std::uint64_t> seed;
  std::optional<int> count, jobs, max_n, max_rank_n;
  bool allow_large = false;
  std::string format = "json";
  std::string output;
  std::string config_path;
  std::string suite;
};

// Values that look like JSON arrays are passed as JSON; anything else as a string.
json loose_value(const std::string& s) {
  if (!s.empty() && (s.front() == '[' || s.front() == '{')) {
    json parsed = json::parse(s, nullptr, false);
    if (!parsed.is_discarded()) return parsed;
  }
  return s;
}

json read_json_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + what + " file '" + path + "'");
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) throw std::runtime_error(what + " file '" + path + "' is not valid JSON");
  return j;
}

json matrix_value(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '[') {
    json parsed = json::parse(arg, nullptr, false);
    if (parsed.is_discarded()) throw std::runtime_error("--matrix: inline value is not valid JSON");
    return parsed;
  }
  return read_json_file(arg, "matrix");
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "Size n");
  sub->add_option("--alpha", o.alpha, "Rational alpha (e.g. 1/2), 'inf', or 'symbolic'");
  sub->add_option("--lambda", o.lambda, "Partition, e.g. 2,1 or [2,1]");
  sub->add_option("--tableau", o.tableau, "Numbering, e.g. 12/3 or [[1,2],[3]]");
  sub->add_option("--sigma", o.sigma, "Permutation in one-line form (e.g. 2,1,3) or cycles '(1 3)'");
  sub->add_option("--ivec", o.ivec, "Index vector, e.g. 1,2,1");
  sub->add_option("--matrix", o.matrix, "Matrix JSON file, or inline JSON array of rational strings");
  sub->add_option("--seed", o.seed, "Random seed");
  sub->add_option("--count", o.count, "Sample count / random cases");
  sub->add_option("--kind", o.kind, "Variant selector (symbolic: det|D|vT|immanant|det-infinity|quantum; "
                                    "ewens: pmf|marginal|sample)");
  sub->add_option("--format", o.format, "Output format: json, text, csv, jsonl")
      ->check(CLI::IsMember({"json", "text", "csv", "jsonl"}));
  sub->add_option("--output", o.output, "Write output to this path instead of stdout");
  sub->add_option("--jobs", o.jobs, "Worker threads for sharded suites");
  sub->add_flag("--allow-large", o.allow_large, "Allow rank computations at n = 5");
  sub->add_option("--max-n", o.max_n, "Enumeration bound override (up to the hard cap)");
  sub->add_option("--max-rank-n", o.max_rank_n, "Rank bound override (up to the hard cap)");
  sub->add_option("--config", o.config_path, "JSON config file; flags override its fields");
}

json build_config(const Options& o) {
  json config = o.config_path.empty() ? json::object() : read_json_file(o.config_path, "config");
  if (!config.is_object()) throw std::runtime_error("config file must hold a JSON object");
  if (o.n) config["n"] = *o.n;
  if (o.alpha) config["alpha"] = *o.alpha;
  if (o.lambda) config["lambda"] = loose_value(*o.lambda);
  if (o.tableau) config["tableau"] = loose_value(*o.tableau);
  if (o.sigma) config["sigma"] = loose_value(*o.sigma);
  if (o.ivec) config["ivec"] = loose_value(*o.ivec);
  if (o.matrix) config["matrix"] = matrix_value(*o.matrix);
  if (o.seed) config["seed"] = *o.seed;
  if (o.count) config["count"] = *o.count;
  if (o.kind) config["kind"] = *o.kind;
  if (!o.suite.empty()) config["suite"] = o.suite;
  json limits = config.contains("limits") && config["limits"].is_object() ? config["limits"] : json::object();
  if (o.jobs) limits["jobs"] = *o.jobs;
  if (o.max_n) limits["max_n"] = *o.max_n;
  if (o.max_rank_n) limits["max_rank_n"] = *o.max_rank_n;
  if (o.allow_large) limits["allow_large"] = true;
  if (!limits.empty()) config["limits"] = limits;
  return config;
}

int exit_code(ad_status s) {
  switch (s) {
    case AD_OK:
      return kExitOk;
    case AD_VERIFY_FAILED:
      return kExitVerifyFailed;
    default:
      return kExitBadInput;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"alphadet: exact computations with the alpha-determinant cyclic module"};
  app.require_subcommand(1);
  Options opts;
  std::string command;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"eval", "alpha-determinant of a matrix"},
      {"symbolic", "print D(ivec), det^(alpha), v_T, immanants, det^(inf), or the quantum alpha-determinant"},
      {"content", "content polynomial f_lambda and its zero set"},
      {"decompose", "dimension report for V_n^(alpha)"},
      {"verify", "run a named verification suite"},
      {"ewens", "Ewens measure: pmf table, nu-marginal, or sample stream"},
      {"characters", "character table of S_n"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common(sub, opts);
    if (name == "verify")
      sub->add_option("suite", opts.suite,
                      "cycle-formula | factorization | fcf | young | immanant | basis | closure | mean-value | det2 | "
                      "homomorphism | stanley | orthogonality | normalization | sampler")
          ->required();
    sub->callback([&command, name = name] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  json config;
  try {
    config = build_config(opts);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  ad_context* ctx = nullptr;
  if (ad_context_new(&ctx) != AD_OK) {
    std::cerr << "error: cannot allocate context\n";
    return kExitBadInput;
  }
  ad_report* report = nullptr;
  const std::string config_text = config.dump();
  ad_status status = ad_run(ctx, command.c_str(), config_text.c_str(), &report);
  if (!report) {
    std::cerr << "error (" << ad_status_name(status) << "): " << ad_last_error(ctx) << "\n";
    ad_context_free(ctx);
    return exit_code(status);
  }
  const char* rendered = nullptr;
  ad_status render_status = ad_report_render(ctx, report, opts.format.c_str(), &rendered);
  int rc = exit_code(status);
  if (render_status != AD_OK) {
    std::cerr << "error (" << ad_status_name(render_status) << "): " << ad_last_error(ctx) << "\n";
    rc = exit_code(render_status);
  } else if (opts.output.empty()) {
    std::fwrite(rendered, 1, std::strlen(rendered), stdout);
  } else {
    std::ofstream out(opts.output, std::ios::binary);
    out << rendered;
    if (!out) {
      std::cerr << "error: cannot write '" << opts.output << "'\n";
      rc = kExitBadInput;
    }
  }
  ad_report_free(report);
  ad_context_free(ctx);
  return rc;
}
