#include "alphadet/alphadet.h"

#include <cstring>
#include <string>

#include "alphadet/commands.hpp"
#include "alphadet/cyclic_module.hpp"
#include "alphadet/error.hpp"
#include "alphadet/json_io.hpp"
#include "alphadet/tableaux.hpp"

struct ad_context {
  alphadet::Limits limits;
  std::string last_error;
};

struct ad_report {
  alphadet::CommandResult result;
  std::string json;
  std::string rendered;
};

struct ad_alphapoly {
  alphadet::AlphaPoly poly;
  std::string text;
};

namespace {

template <class Fn>
ad_status guarded(ad_context* ctx, Fn&& fn) {
  if (!ctx) return AD_ERR_INPUT;
  ctx->last_error.clear();
  try {
    return fn();
  } catch (const alphadet::Error& e) {
    ctx->last_error = e.what();
    switch (e.kind()) {
      case alphadet::ErrorKind::Input:
        return AD_ERR_INPUT;
      case alphadet::ErrorKind::SizeLimit:
        return AD_ERR_SIZE_LIMIT;
      case alphadet::ErrorKind::Unsupported:
        return AD_ERR_UNSUPPORTED;
    }
    return AD_ERR_INTERNAL;
  } catch (const alphadet::json::exception& e) {
    ctx->last_error = std::string("malformed JSON: ") + e.what();
    return AD_ERR_INPUT;
  } catch (const std::bad_alloc&) {
    ctx->last_error = "out of memory";
    return AD_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = std::string("internal error: ") + e.what();
    return AD_ERR_INTERNAL;
  }
}

ad_status copy_out(ad_context* ctx, const std::string& s, char* buf, size_t buflen, size_t* needed) {
  if (needed) *needed = s.size() + 1;
  if (!buf || buflen < s.size() + 1) {
    ctx->last_error = "buffer too small: need " + std::to_string(s.size() + 1) + " bytes";
    return AD_ERR_INPUT;
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return AD_OK;
}

alphadet::json limits_json(const alphadet::Limits& l) {
  return alphadet::json{{"max_n", l.max_enum_n},
                        {"max_tableau_size", l.max_tableau_size},
                        {"max_rank_n", l.max_rank_n},
                        {"allow_large", l.allow_large},
                        {"jobs", l.jobs}};
}

}  // namespace

extern "C" {

const char* ad_version(void) { return "1.0.0"; }

const char* ad_status_name(ad_status status) {
  switch (status) {
    case AD_OK:
      return "ok";
    case AD_VERIFY_FAILED:
      return "verification failed";
    case AD_ERR_INPUT:
      return "input error";
    case AD_ERR_SIZE_LIMIT:
      return "size limit exceeded";
    case AD_ERR_UNSUPPORTED:
      return "unsupported";
    case AD_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

ad_status ad_context_new(ad_context** out) {
  if (!out) return AD_ERR_INPUT;
  *out = new (std::nothrow) ad_context();
  return *out ? AD_OK : AD_ERR_INTERNAL;
}

void ad_context_free(ad_context* ctx) { delete ctx; }

ad_status ad_context_set_limit(ad_context* ctx, const char* name, long long value) {
  return guarded(ctx, [&] {
    if (!name) alphadet::throw_input("limit name is NULL");
    alphadet::Limits next = ctx->limits;
    const std::string key = name;
    const int v = static_cast<int>(value);
    if (value < 0 || value > 1 << 20) alphadet::throw_input("limit value out of range");
    if (key == "max_n") {
      next.max_enum_n = v;
      next.max_tableau_size = std::max(next.max_tableau_size, v);
    } else if (key == "max_tableau_size") {
      next.max_tableau_size = v;
    } else if (key == "max_rank_n") {
      next.max_rank_n = v;
    } else if (key == "allow_large") {
      next.allow_large = value != 0;
    } else if (key == "jobs") {
      next.jobs = v;
    } else {
      alphadet::throw_input("unknown limit '" + key + "'");
    }
    next.validate();
    ctx->limits = next;
    return AD_OK;
  });
}

const char* ad_last_error(const ad_context* ctx) { return ctx ? ctx->last_error.c_str() : "context is NULL"; }

ad_status ad_run(ad_context* ctx, const char* command, const char* config_json, ad_report** out) {
  return guarded(ctx, [&] {
    if (!command || !out) alphadet::throw_input("ad_run: command and out must be non-NULL");
    *out = nullptr;
    alphadet::json config = config_json && *config_json ? alphadet::json::parse(config_json) : alphadet::json::object();
    if (!config.is_object()) alphadet::throw_input("config must be a JSON object");
    if (!config.contains("limits")) config["limits"] = limits_json(ctx->limits);
    auto report = std::make_unique<ad_report>();
    report->result = alphadet::run_command(command, config);
    report->json = report->result.document.dump(2) + "\n";
    const ad_status status = report->result.status == 0 ? AD_OK : AD_VERIFY_FAILED;
    *out = report.release();
    return status;
  });
}

int ad_report_passed(const ad_report* report) { return report && report->result.status == 0 ? 1 : 0; }

const char* ad_report_json(const ad_report* report) { return report ? report->json.c_str() : ""; }

ad_status ad_report_render(ad_context* ctx, ad_report* report, const char* format, const char** out) {
  return guarded(ctx, [&] {
    if (!report || !format || !out) alphadet::throw_input("ad_report_render: NULL argument");
    report->rendered = report->result.render(format);
    *out = report->rendered.c_str();
    return AD_OK;
  });
}

void ad_report_free(ad_report* report) { delete report; }

ad_status ad_content_polynomial(ad_context* ctx, const int* parts, size_t len, ad_alphapoly** out) {
  return guarded(ctx, [&] {
    if (!out || (len > 0 && !parts)) alphadet::throw_input("ad_content_polynomial: NULL argument");
    *out = nullptr;
    alphadet::Partition lambda(std::vector<int>(parts, parts + len));
    auto p = std::make_unique<ad_alphapoly>();
    p->poly = alphadet::content_polynomial(lambda);
    p->text = p->poly.to_string();
    *out = p.release();
    return AD_OK;
  });
}

int ad_alphapoly_degree(const ad_alphapoly* p) { return p ? p->poly.degree() : -1; }

const char* ad_alphapoly_string(const ad_alphapoly* p) { return p ? p->text.c_str() : ""; }

ad_status ad_alphapoly_coefficient(ad_context* ctx, const ad_alphapoly* p, int k, char* buf, size_t buflen,
                                   size_t* needed) {
  return guarded(ctx, [&] {
    if (!p) alphadet::throw_input("ad_alphapoly_coefficient: NULL polynomial");
    if (k < 0) alphadet::throw_input("coefficient index must be non-negative");
    return copy_out(ctx, alphadet::to_string(p->poly.coeff(k)), buf, buflen, needed);
  });
}

ad_status ad_alphapoly_eval(ad_context* ctx, const ad_alphapoly* p, const char* alpha, char* buf, size_t buflen,
                            size_t* needed) {
  return guarded(ctx, [&] {
    if (!p || !alpha) alphadet::throw_input("ad_alphapoly_eval: NULL argument");
    return copy_out(ctx, alphadet::to_string(p->poly.evaluate(alphadet::AlphaValue::parse(alpha))), buf, buflen,
                    needed);
  });
}

void ad_alphapoly_free(ad_alphapoly* p) { delete p; }

ad_status ad_permutation_stats(ad_context* ctx, const int* one_line, size_t n, int* cycles, int* inversions,
                               int* sign) {
  return guarded(ctx, [&] {
    if (!one_line && n > 0) alphadet::throw_input("ad_permutation_stats: NULL permutation");
    alphadet::Permutation sigma(std::vector<int>(one_line, one_line + n));
    const auto stats = alphadet::permutation_statistics(sigma);
    if (cycles) *cycles = stats.cycles;
    if (inversions) *inversions = stats.inversions;
    if (sign) *sign = sigma.sign();
    return AD_OK;
  });
}

ad_status ad_alpha_det_eval(ad_context* ctx, const char* matrix_json, const char* alpha, char* buf, size_t buflen,
                            size_t* needed) {
  return guarded(ctx, [&] {
    if (!matrix_json || !alpha) alphadet::throw_input("ad_alpha_det_eval: NULL argument");
    const auto x = alphadet::matrix_from_json(alphadet::json::parse(matrix_json));
    const alphadet::AlphaPoly p = alphadet::alpha_det_of_matrix(x, ctx->limits);
    const std::string a = alpha;
    std::string value;
    if (a == "symbolic") {
      value = p.to_string();
    } else {
      const auto av = alphadet::AlphaValue::parse(a);
      value = alphadet::to_string(av.is_infinite() ? p.limit_coefficient(static_cast<int>(x.size()) - 1)
                                                   : p.evaluate(av.finite()));
    }
    return copy_out(ctx, value, buf, buflen, needed);
  });
}

}  // extern "C"
