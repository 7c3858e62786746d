// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "millerrabin.hpp"

#include <bit>
#include <string>

#include "errors.hpp"
#include "modmath.hpp"

namespace ipf {

namespace {

constexpr Decomposition decompose_unchecked(std::uint64_t n) noexcept {
  const std::uint64_t n_minus_1 = n - 1;
  const auto s = static_cast<unsigned>(std::countr_zero(n_minus_1));
  return {s, n_minus_1 >> s};
}

bool sprp_unchecked(std::uint64_t n, std::uint64_t base,
                    Decomposition dec) noexcept {
  const std::uint64_t a = base % n;
  if (a == 0) return true;

  const std::uint64_t minus_one = n - 1;
  std::uint64_t x = detail::pow_reduced(a, dec.d, n);
  if (x == 1 || x == minus_one) return true;

  for (unsigned r = 1; r < dec.s; ++r) {
    x = detail::mul_reduced(x, x, n);
    if (x == minus_one) return true;
    // 1 reached without passing through -1: a nontrivial square root of 1.
    if (x == 1) return false;
  }
  return false;
}

void require_odd_at_least_3(const char* op, std::uint64_t n) {
  if (n < 3 || (n & 1) == 0) {
    throw ContractError(std::string(op) + ": expected odd n >= 3, got " +
                        std::to_string(n));
  }
}

}  // namespace

Decomposition decompose(std::uint64_t n) {
  require_odd_at_least_3("decompose", n);
  return decompose_unchecked(n);
}

bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  require_odd_at_least_3("strong_probable_prime", n);
  return sprp_unchecked(n, base, decompose_unchecked(n));
}

bool is_prime_u64(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n == 2) return true;
  if ((n & 1) == 0) return false;

  const Decomposition dec = decompose_unchecked(n);
  for (const std::uint64_t base : kDeterministicBases) {
    if (!sprp_unchecked(n, base, dec)) return false;
  }
  return true;
}

}  // namespace ipf
