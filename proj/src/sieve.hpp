// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mask.hpp"

namespace ipf {

inline constexpr std::uint64_t kDefaultSieveCeiling = std::uint64_t{1} << 32;

// Exactly the primes <= limit, strictly increasing.
struct PrimeTable {
  std::uint64_t limit = 0;
  std::vector<std::uint64_t> primes;

  bool contains(std::uint64_t value) const noexcept;
};

// Sieve of Eratosthenes. Throws ResourceLimitError when limit > ceiling.
PrimeTable primes_up_to(std::uint64_t limit,
                        std::uint64_t ceiling = kDefaultSieveCeiling);

// mask[i] is set iff values[i] is in table.primes (binary search per value).
// Throws ContractError if a value exceeds table.limit.
PrimalityMask sorted_membership(std::span<const std::uint64_t> values,
                                const PrimeTable& table);

// Divisions performed by sqrt-bounded prime trial division over 1..n, where
// each k is divided by every prime p <= isqrt(n) with p < k. Requires n >= 1.
std::uint64_t division_count(std::uint64_t n);

}  // namespace ipf
