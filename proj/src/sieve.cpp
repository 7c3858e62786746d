// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "sieve.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "errors.hpp"
#include "numeric.hpp"

namespace ipf {

namespace {

// Bits per crossing-off pass; a block of the bitmap this size stays in L1/L2.
constexpr std::uint64_t kBlockBits = std::uint64_t{1} << 18;

std::vector<std::uint64_t> odd_primes_up_to_simple(std::uint64_t limit) {
  std::vector<std::uint8_t> composite(limit + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 3; i <= limit; i += 2) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += 2 * i) composite[j] = 1;
  }
  return out;
}

}  // namespace

bool PrimeTable::contains(std::uint64_t value) const noexcept {
  return std::binary_search(primes.begin(), primes.end(), value);
}

PrimeTable primes_up_to(std::uint64_t limit, std::uint64_t ceiling) {
  if (limit > ceiling) throw ResourceLimitError(limit, ceiling);

  PrimeTable table;
  table.limit = limit;
  if (limit < 2) return table;

  // Odd-only bitmap: bit i stands for 2i + 1; a set bit means composite.
  const std::uint64_t odd_count = (limit + 1) / 2;
  std::vector<std::uint64_t> composite((odd_count + 63) / 64, 0);
  auto mark = [&composite](std::uint64_t i) {
    composite[i >> 6] |= std::uint64_t{1} << (i & 63);
  };
  mark(0);  // 1 is not prime

  const std::vector<std::uint64_t> sieving = odd_primes_up_to_simple(isqrt(limit));
  std::vector<std::uint64_t> next(sieving.size());
  for (std::size_t j = 0; j < sieving.size(); ++j) {
    next[j] = sieving[j] * sieving[j] / 2;
  }

  // Crossing off proceeds block by block over the one bitmap.
  for (std::uint64_t lo = 0; lo < odd_count; lo += kBlockBits) {
    const std::uint64_t hi = std::min(odd_count, lo + kBlockBits);
    for (std::size_t j = 0; j < sieving.size(); ++j) {
      const std::uint64_t step = sieving[j];
      std::uint64_t i = next[j];
      for (; i < hi; i += step) mark(i);
      next[j] = i;
    }
  }

  // Pad bits past odd_count as composite so the popcount is exact.
  if (odd_count % 64 != 0) composite.back() |= ~std::uint64_t{0} << (odd_count % 64);

  std::uint64_t prime_count = 1;  // 2
  for (const std::uint64_t word : composite) {
    prime_count += static_cast<std::uint64_t>(std::popcount(~word));
  }
  table.primes.reserve(prime_count);
  table.primes.push_back(2);
  for (std::uint64_t w = 0; w < composite.size(); ++w) {
    std::uint64_t bits = ~composite[w];
    while (bits != 0) {
      const auto bit = static_cast<std::uint64_t>(std::countr_zero(bits));
      table.primes.push_back(2 * (w * 64 + bit) + 1);
      bits &= bits - 1;
    }
  }
  return table;
}

PrimalityMask sorted_membership(std::span<const std::uint64_t> values,
                                const PrimeTable& table) {
  PrimalityMask mask(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] > table.limit) {
      throw ContractError("sorted_membership: value " +
                          std::to_string(values[i]) + " at index " +
                          std::to_string(i) + " exceeds table limit " +
                          std::to_string(table.limit));
    }
    mask.bits[i] = table.contains(values[i]) ? 1 : 0;
  }
  return mask;
}

std::uint64_t division_count(std::uint64_t n) {
  if (n == 0) throw ContractError("division_count: n must be >= 1");
  // Each prime q <= isqrt(n) divides every k in (q, n]: n - q divisions.
  const PrimeTable table = primes_up_to(isqrt(n), kDefaultSieveCeiling);
  std::uint64_t total = 0;
  for (const std::uint64_t q : table.primes) {
    if (__builtin_add_overflow(total, n - q, &total)) {
      throw std::overflow_error("division_count: total for n = " +
                                std::to_string(n) + " exceeds 64 bits");
    }
  }
  return total;
}

}  // namespace ipf
