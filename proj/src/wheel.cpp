// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "wheel.hpp"

#include <algorithm>
#include <array>

#include "errors.hpp"
#include "numeric.hpp"

namespace ipf {

namespace {

constexpr std::array<std::uint64_t, 4> kSupportedBasis = {2, 3, 5, 7};

bool coprime_to_basis(std::uint64_t x, std::span<const std::uint64_t> basis) {
  return std::none_of(basis.begin(), basis.end(),
                      [x](std::uint64_t p) { return x % p == 0; });
}

}  // namespace

WheelSpec build_wheel(std::span<const std::uint64_t> basis) {
  if (basis.empty() || basis.size() > kSupportedBasis.size() ||
      !std::equal(basis.begin(), basis.end(), kSupportedBasis.begin())) {
    throw ContractError(
        "build_wheel: basis must be a non-empty prefix of [2, 3, 5, 7]");
  }

  WheelSpec spec;
  spec.basis.assign(basis.begin(), basis.end());
  for (const std::uint64_t p : basis) spec.cycle_length *= p;

  std::vector<std::uint64_t> elements;
  for (std::uint64_t x = 1; x <= spec.cycle_length; ++x) {
    if (coprime_to_basis(x, basis)) elements.push_back(x);
  }
  // Wrap to the first element of the next cycle.
  elements.push_back(1 + spec.cycle_length);

  spec.diffs.reserve(elements.size() - 1);
  for (std::size_t i = 1; i < elements.size(); ++i) {
    spec.diffs.push_back(elements[i] - elements[i - 1]);
  }
  return spec;
}

const WheelSpec& two_wheel() {
  static const WheelSpec spec = build_wheel(std::span(kSupportedBasis).first(1));
  return spec;
}

const WheelSpec& wheel_2357() {
  static const WheelSpec spec = build_wheel(kSupportedBasis);
  return spec;
}

std::vector<std::uint64_t> wheel_divisors(const WheelSpec& spec,
                                          std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for_each_wheel_element(spec, limit, [&out](std::uint64_t w) {
    out.push_back(w);
    return true;
  });
  return out;
}

bool trial_division_medium(std::uint64_t n) {
  if (n < 2) return false;
  for (const std::uint64_t p : kSupportedBasis) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  // Divisors are streamed cycle by cycle; nothing is materialized.
  return for_each_wheel_element(wheel_2357(), isqrt(n),
                                [n](std::uint64_t w) { return n % w != 0; });
}

bool trial_division_small(std::uint64_t n) {
  if (n < 2) return false;
  if (n == 2) return true;
  if ((n & 1) == 0) return false;
  const std::uint64_t root = isqrt(n);
  for (std::uint64_t d = 3; d <= root; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace ipf
