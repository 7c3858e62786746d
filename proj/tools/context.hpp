// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "isprime_fast/isprime_fast.h"

namespace ipf::cli {

// A failed library call, carrying its status and message.
class LibraryError : public std::runtime_error {
 public:
  LibraryError(ipf_status status, const std::string& what)
      : std::runtime_error(what), status_(status) {}
  ipf_status status() const noexcept { return status_; }

 private:
  ipf_status status_;
};

void check(ipf_status status);

// Owning wrapper over ipf_context.
class Context {
 public:
  Context();

  void set_force_path(ipf_force_path force);
  void set_parallel(bool enabled);
  void set_sieve_ceiling(std::uint64_t ceiling);

  struct Result {
    std::vector<std::uint8_t> mask;
    ipf_decision decision;
  };
  Result is_prime(std::span<const std::uint64_t> values) const;

  ipf_context* get() const noexcept { return ctx_.get(); }

 private:
  struct Deleter {
    void operator()(ipf_context* ctx) const noexcept { ipf_context_destroy(ctx); }
  };
  std::unique_ptr<ipf_context, Deleter> ctx_;
};

}  // namespace ipf::cli
