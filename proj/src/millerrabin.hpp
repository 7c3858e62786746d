// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#pragma once

#include <array>
#include <cstdint>

namespace ipf {

// n - 1 == 2^s * d with d odd.
struct Decomposition {
  unsigned s;
  std::uint64_t d;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Witness bases whose joint verdict is exact for every n < 2^64.
using SprpBaseSet = std::array<std::uint64_t, 7>;
inline constexpr SprpBaseSet kDeterministicBases = {
    2, 325, 9375, 28178, 450775, 9780504, 1795265022};

// Requires n odd and n >= 3; throws ContractError otherwise.
Decomposition decompose(std::uint64_t n);

// Strong probable-prime test of odd n >= 3 to the given base. The base is
// reduced mod n; a reduced base of 0 passes.
bool strong_probable_prime(std::uint64_t n, std::uint64_t base);

// Exact primality over all of uint64, short-circuiting on the first witness.
bool is_prime_u64(std::uint64_t n) noexcept;

}  // namespace ipf
