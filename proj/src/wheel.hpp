// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
//
// Wheel sieves: the integers coprime to a small prime basis, produced by
// cumulatively summing a repeating difference cycle starting from 1.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ipf {

struct WheelSpec {
  std::vector<std::uint64_t> basis;
  // Gaps between consecutive wheel elements over one cycle; sums to
  // cycle_length.
  std::vector<std::uint64_t> diffs;
  std::uint64_t cycle_length = 1;
};

// basis must be a non-empty prefix of {2, 3, 5, 7}; ContractError otherwise.
WheelSpec build_wheel(std::span<const std::uint64_t> basis);

// Shared immutable instances.
const WheelSpec& two_wheel();
const WheelSpec& wheel_2357();

// Calls visit(w) for each wheel element 1 < w <= limit in increasing order,
// stopping early when visit returns false. Returns false iff stopped early.
template <typename Visit>
bool for_each_wheel_element(const WheelSpec& spec, std::uint64_t limit,
                            Visit&& visit) {
  std::uint64_t w = 1;
  for (;;) {
    for (const std::uint64_t gap : spec.diffs) {
      if (w > limit || limit - w < gap) return true;
      w += gap;
      if (!visit(w)) return false;
    }
  }
}

// All wheel elements in (1, limit], strictly increasing.
std::vector<std::uint64_t> wheel_divisors(const WheelSpec& spec,
                                          std::uint64_t limit);

// 2/3/5/7-wheel trial division. Intended for 2^18 <= n < 2^49 (the caller
// owns the range); the raw rule alone misreports squares of wheel elements
// below the range, e.g. 121.
bool trial_division_medium(std::uint64_t n);

// Odd-divisor trial division for 2 <= n < 2^18. Returns false for n < 2.
bool trial_division_small(std::uint64_t n);

}  // namespace ipf
