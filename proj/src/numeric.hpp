// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#pragma once

#include <bit>
#include <cstdint>

namespace ipf {

// Signed 128-bit integer for exact evaluation of the path heuristic.
__extension__ typedef __int128 int128;

// Largest r with r * r <= n. Integer Newton iteration started above the root;
// floating-point sqrt is off by one for some inputs past 2^52.
constexpr std::uint64_t isqrt(std::uint64_t n) noexcept {
  if (n < 2) return n;
  const int half_bits = (std::bit_width(n) + 1) / 2;
  std::uint64_t x = std::uint64_t{1} << half_bits;
  for (;;) {
    const std::uint64_t y = (x + n / x) / 2;
    if (y >= x) return x;
    x = y;
  }
}

inline constexpr std::uint64_t kSmallScalarLimit = std::uint64_t{1} << 18;
inline constexpr std::uint64_t kMediumScalarLimit = std::uint64_t{1} << 49;

}  // namespace ipf
