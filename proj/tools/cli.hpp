// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#pragma once

#include <iosfwd>
#include <span>
#include <string>

namespace ipf::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitIoError = 3,
};

// Entry point for `isprime_fast_cli <command> ...`; args excludes argv[0].
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ipf::cli
