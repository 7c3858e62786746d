// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "isprime_fast/isprime_fast.h"

#include <algorithm>
#include <limits>
#include <new>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dispatch.hpp"
#include "errors.hpp"
#include "millerrabin.hpp"
#include "modmath.hpp"
#include "sieve.hpp"

struct ipf_context {
  ipf::Config config;
};

namespace {

thread_local std::string g_last_error;

ipf_status fail(ipf_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

ipf_input_fault to_c(ipf::InputFault fault) {
  switch (fault) {
    case ipf::InputFault::Negative: return IPF_FAULT_NEGATIVE;
    case ipf::InputFault::NonInteger: return IPF_FAULT_NON_INTEGER;
    case ipf::InputFault::OutOfRange: return IPF_FAULT_OUT_OF_RANGE;
    case ipf::InputFault::NotANumber: return IPF_FAULT_NOT_A_NUMBER;
  }
  return IPF_FAULT_NONE;
}

ipf_path_kind to_c(ipf::PathKind kind) {
  switch (kind) {
    case ipf::PathKind::SmallScalar: return IPF_PATH_SMALL_SCALAR;
    case ipf::PathKind::MediumScalar: return IPF_PATH_MEDIUM_SCALAR;
    case ipf::PathKind::LargeScalar: return IPF_PATH_LARGE_SCALAR;
    case ipf::PathKind::ArraySqrt: return IPF_PATH_ARRAY_SQRT;
    case ipf::PathKind::ArrayBinarySearch: return IPF_PATH_ARRAY_BINSEARCH;
  }
  return IPF_PATH_NONE;
}

void to_c(const std::optional<ipf::PathDecision>& in, ipf_decision* out) {
  *out = ipf_decision{};
  if (!in) {
    out->kind = IPF_PATH_NONE;
    return;
  }
  const auto& why = in->rationale;
  constexpr ipf::int128 lo = std::numeric_limits<std::int64_t>::min();
  constexpr ipf::int128 hi = std::numeric_limits<std::int64_t>::max();
  out->kind = to_c(in->kind);
  out->element_count = why.element_count;
  out->survivor_count = why.survivor_count;
  out->large_count = why.large_count;
  out->max_value = why.max_value;
  out->formula_value = static_cast<std::int64_t>(std::clamp(why.formula_value, lo, hi));
  out->large_regime = why.large_regime ? 1 : 0;
  out->forced = why.forced ? 1 : 0;
  out->fell_back = why.fell_back ? 1 : 0;
}

// Runs body, translating library exceptions into status codes.
template <typename Body>
ipf_status guarded(Body&& body) noexcept {
  try {
    g_last_error.clear();
    body();
    return IPF_OK;
  } catch (const ipf::InputDomainError& e) {
    return fail(IPF_ERR_INPUT_DOMAIN, e.what());
  } catch (const ipf::ContractError& e) {
    return fail(IPF_ERR_CONTRACT, e.what());
  } catch (const ipf::ResourceLimitError& e) {
    return fail(IPF_ERR_RESOURCE_LIMIT, e.what());
  } catch (const std::overflow_error& e) {
    return fail(IPF_ERR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(IPF_ERR_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(IPF_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(IPF_ERR_INTERNAL, "unknown error");
  }
}

template <typename Input>
ipf_status validate_into(const Input* values, std::size_t n, uint64_t* out,
                         size_t* bad_index, ipf_input_fault* fault) {
  if (fault) *fault = IPF_FAULT_NONE;
  if (n > 0 && (values == nullptr || out == nullptr)) {
    return fail(IPF_ERR_NULL_ARGUMENT, "validate: null buffer");
  }
  return guarded([&] {
    std::vector<std::uint64_t> parsed;
    try {
      if constexpr (std::is_same_v<Input, double>) {
        parsed = ipf::validate(std::span<const double>(values, n));
      } else {
        std::vector<std::string_view> tokens;
        tokens.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          tokens.emplace_back(values[i] ? values[i] : "");
        }
        parsed = ipf::validate(std::span<const std::string_view>(tokens));
      }
    } catch (const ipf::InputDomainError& e) {
      if (bad_index) *bad_index = e.index();
      if (fault) *fault = to_c(e.fault());
      throw;
    }
    std::copy(parsed.begin(), parsed.end(), out);
  });
}

}  // namespace

extern "C" {

const char* ipf_version(void) { return "1.0.0"; }

const char* ipf_status_string(ipf_status status) {
  switch (status) {
    case IPF_OK: return "ok";
    case IPF_ERR_NULL_ARGUMENT: return "null argument";
    case IPF_ERR_CONTRACT: return "contract violation";
    case IPF_ERR_INPUT_DOMAIN: return "input domain error";
    case IPF_ERR_RESOURCE_LIMIT: return "resource limit exceeded";
    case IPF_ERR_OVERFLOW: return "overflow";
    case IPF_ERR_OUT_OF_MEMORY: return "out of memory";
    case IPF_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* ipf_path_name(ipf_path_kind kind) {
  switch (kind) {
    case IPF_PATH_SMALL_SCALAR: return ipf::to_string(ipf::PathKind::SmallScalar);
    case IPF_PATH_MEDIUM_SCALAR: return ipf::to_string(ipf::PathKind::MediumScalar);
    case IPF_PATH_LARGE_SCALAR: return ipf::to_string(ipf::PathKind::LargeScalar);
    case IPF_PATH_ARRAY_SQRT: return ipf::to_string(ipf::PathKind::ArraySqrt);
    case IPF_PATH_ARRAY_BINSEARCH: return ipf::to_string(ipf::PathKind::ArrayBinarySearch);
    case IPF_PATH_NONE: return "none";
  }
  return "unknown";
}

const char* ipf_last_error(void) { return g_last_error.c_str(); }

ipf_status ipf_context_create(ipf_context** out) {
  if (out == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "context_create: null out");
  *out = nullptr;
  return guarded([&] { *out = new ipf_context{}; });
}

void ipf_context_destroy(ipf_context* ctx) { delete ctx; }

ipf_status ipf_get_heuristic(const ipf_context* ctx, ipf_heuristic* out) {
  if (ctx == nullptr || out == nullptr) {
    return fail(IPF_ERR_NULL_ARGUMENT, "get_heuristic: null argument");
  }
  const auto& m = ctx->config.model;
  *out = ipf_heuristic{m.regime_split, m.small_slope, m.small_intercept,
                       m.large_slope, m.large_intercept};
  return IPF_OK;
}

ipf_status ipf_set_heuristic(ipf_context* ctx, const ipf_heuristic* model) {
  if (ctx == nullptr || model == nullptr) {
    return fail(IPF_ERR_NULL_ARGUMENT, "set_heuristic: null argument");
  }
  return guarded([&] {
    ipf::HeuristicModel m;
    m.regime_split = model->regime_split;
    m.small_slope = model->small_slope;
    m.small_intercept = model->small_intercept;
    m.large_slope = model->large_slope;
    m.large_intercept = model->large_intercept;
    m.validate();
    ctx->config.model = m;
  });
}

ipf_status ipf_set_sieve_ceiling(ipf_context* ctx, uint64_t ceiling) {
  if (ctx == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "set_sieve_ceiling: null context");
  ctx->config.sieve_ceiling = ceiling;
  return IPF_OK;
}

ipf_status ipf_get_sieve_ceiling(const ipf_context* ctx, uint64_t* out) {
  if (ctx == nullptr || out == nullptr) {
    return fail(IPF_ERR_NULL_ARGUMENT, "get_sieve_ceiling: null argument");
  }
  *out = ctx->config.sieve_ceiling;
  return IPF_OK;
}

ipf_status ipf_set_force_path(ipf_context* ctx, ipf_force_path force) {
  if (ctx == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "set_force_path: null context");
  switch (force) {
    case IPF_FORCE_AUTO: ctx->config.force = ipf::ForcePath::Auto; break;
    case IPF_FORCE_SQRT: ctx->config.force = ipf::ForcePath::Sqrt; break;
    case IPF_FORCE_BINSEARCH: ctx->config.force = ipf::ForcePath::BinarySearch; break;
    default: return fail(IPF_ERR_CONTRACT, "set_force_path: unknown path");
  }
  return IPF_OK;
}

ipf_status ipf_set_parallel(ipf_context* ctx, int enabled, unsigned threads) {
  if (ctx == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "set_parallel: null context");
  ctx->config.parallel = enabled != 0;
  ctx->config.threads = threads;
  return IPF_OK;
}

ipf_status ipf_validate_tokens(const char* const* tokens, size_t n, uint64_t* out,
                               size_t* bad_index, ipf_input_fault* fault) {
  return validate_into(tokens, n, out, bad_index, fault);
}

ipf_status ipf_validate_doubles(const double* values, size_t n, uint64_t* out,
                                size_t* bad_index, ipf_input_fault* fault) {
  return validate_into(values, n, out, bad_index, fault);
}

ipf_status ipf_is_prime(const ipf_context* ctx, const uint64_t* values, size_t n,
                        uint8_t* mask, ipf_decision* decision) {
  if (ctx == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "is_prime: null context");
  if (n > 0 && (values == nullptr || mask == nullptr)) {
    return fail(IPF_ERR_NULL_ARGUMENT, "is_prime: null buffer");
  }
  return guarded([&] {
    const ipf::Evaluation result =
        ipf::evaluate(std::span<const std::uint64_t>(values, n), ctx->config);
    std::copy(result.mask.bits.begin(), result.mask.bits.end(), mask);
    if (decision) to_c(result.decision, decision);
  });
}

ipf_status ipf_classify(const ipf_context* ctx, const uint64_t* values, size_t n,
                        ipf_decision* decision) {
  if (ctx == nullptr || decision == nullptr || (n > 0 && values == nullptr)) {
    return fail(IPF_ERR_NULL_ARGUMENT, "classify: null argument");
  }
  return guarded([&] {
    to_c(ipf::classify(std::span<const std::uint64_t>(values, n), ctx->config.model),
         decision);
  });
}

int ipf_is_prime_u64(uint64_t n) { return ipf::is_prime_u64(n) ? 1 : 0; }

ipf_status ipf_mod_add(uint64_t a, uint64_t b, uint64_t m, uint64_t* out) {
  if (out == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "mod_add: null out");
  return guarded([&] { *out = ipf::mod_add(a, b, m); });
}

ipf_status ipf_mod_mul(uint64_t a, uint64_t b, uint64_t m, uint64_t* out) {
  if (out == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "mod_mul: null out");
  return guarded([&] { *out = ipf::mod_mul(a, b, m); });
}

ipf_status ipf_mod_exp(uint64_t base, uint64_t e, uint64_t m, uint64_t* out) {
  if (out == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "mod_exp: null out");
  return guarded([&] { *out = ipf::mod_exp(base, e, m); });
}

ipf_status ipf_division_count(uint64_t n, uint64_t* out) {
  if (out == nullptr) return fail(IPF_ERR_NULL_ARGUMENT, "division_count: null out");
  return guarded([&] { *out = ipf::division_count(n); });
}

}  // extern "C"
