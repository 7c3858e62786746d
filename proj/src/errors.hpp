// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace ipf {

// A caller violated a documented precondition (unreduced residue, even input
// to decompose, unsupported wheel basis, ...). Never thrown for valid input.
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class InputFault { Negative, NonInteger, OutOfRange, NotANumber };

const char* to_string(InputFault fault) noexcept;

// User data that cannot be interpreted as an unsigned 64-bit integer.
class InputDomainError : public std::invalid_argument {
 public:
  InputDomainError(std::size_t index, InputFault fault, const std::string& what)
      : std::invalid_argument(what), index_(index), fault_(fault) {}

  std::size_t index() const noexcept { return index_; }
  InputFault fault() const noexcept { return fault_; }

 private:
  std::size_t index_;
  InputFault fault_;
};

// A sieve was requested beyond the configured memory ceiling.
class ResourceLimitError : public std::runtime_error {
 public:
  ResourceLimitError(std::uint64_t requested, std::uint64_t ceiling)
      : std::runtime_error("sieve limit " + std::to_string(requested) +
                           " exceeds the configured ceiling " +
                           std::to_string(ceiling)),
        requested_(requested),
        ceiling_(ceiling) {}

  std::uint64_t requested() const noexcept { return requested_; }
  std::uint64_t ceiling() const noexcept { return ceiling_; }

 private:
  std::uint64_t requested_;
  std::uint64_t ceiling_;
};

}  // namespace ipf
