// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "context.hpp"

namespace ipf::cli {

void check(ipf_status status) {
  if (status != IPF_OK) {
    std::string message = ipf_last_error();
    if (message.empty()) message = ipf_status_string(status);
    throw LibraryError(status, message);
  }
}

Context::Context() {
  ipf_context* raw = nullptr;
  check(ipf_context_create(&raw));
  ctx_.reset(raw);
}

void Context::set_force_path(ipf_force_path force) {
  check(ipf_set_force_path(ctx_.get(), force));
}

void Context::set_parallel(bool enabled) {
  check(ipf_set_parallel(ctx_.get(), enabled ? 1 : 0, 0));
}

void Context::set_sieve_ceiling(std::uint64_t ceiling) {
  check(ipf_set_sieve_ceiling(ctx_.get(), ceiling));
}

Context::Result Context::is_prime(std::span<const std::uint64_t> values) const {
  Result result{std::vector<std::uint8_t>(values.size()), ipf_decision{}};
  check(ipf_is_prime(ctx_.get(), values.data(), values.size(), result.mask.data(),
                     &result.decision));
  return result;
}

}  // namespace ipf::cli
