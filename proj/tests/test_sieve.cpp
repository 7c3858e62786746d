// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "sieve.hpp"

#include <initializer_list>
#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "errors.hpp"
#include "numeric.hpp"
#include "oracle.hpp"

namespace ipf {
namespace {

using u64s = std::vector<std::uint64_t>;

TEST(PrimesUpTo, Examples) {
  EXPECT_EQ(primes_up_to(10).primes, (u64s{2, 3, 5, 7}));
  EXPECT_EQ(primes_up_to(3).primes, (u64s{2, 3}));
  EXPECT_TRUE(primes_up_to(1).primes.empty());
  EXPECT_TRUE(primes_up_to(0).primes.empty());
  EXPECT_EQ(primes_up_to(2).primes, (u64s{2}));
}

TEST(PrimesUpTo, AgreesWithTrialDivisionForEveryLimitTo10k) {
  u64s expected;
  for (std::uint64_t limit = 0; limit <= 10'000; ++limit) {
    if (limit >= 2 && oracle::smallest_factor(limit) == limit) expected.push_back(limit);
    const PrimeTable table = primes_up_to(limit);
    ASSERT_EQ(table.limit, limit);
    ASSERT_EQ(table.primes, expected) << limit;
  }
}

TEST(PrimesUpTo, LargerLimitsAcrossBlockBoundaries) {
  for (std::uint64_t limit : std::initializer_list<std::uint64_t>{(1ULL << 19) - 1, 1ULL << 19, (1ULL << 19) + 1, 3'000'017ULL}) {
    const auto flags = oracle::sieve_flags(limit + 1);
    u64s expected;
    for (std::uint64_t k = 0; k <= limit; ++k) {
      if (flags[k]) expected.push_back(k);
    }
    EXPECT_EQ(primes_up_to(limit).primes, expected) << limit;
  }
  EXPECT_EQ(primes_up_to(1'000'000).primes.size(), 78498u);
}

TEST(PrimesUpTo, CeilingIsEnforced) {
  try {
    primes_up_to(1001, 1000);
    FAIL() << "expected ResourceLimitError";
  } catch (const ResourceLimitError& e) {
    EXPECT_EQ(e.ceiling(), 1000u);
    EXPECT_EQ(e.requested(), 1001u);
    EXPECT_NE(std::string(e.what()).find("1000"), std::string::npos);
  }
  EXPECT_NO_THROW(primes_up_to(1000, 1000));
  EXPECT_THROW(primes_up_to(kDefaultSieveCeiling + 1), ResourceLimitError);
}

TEST(SortedMembership, Examples) {
  const PrimeTable ten = primes_up_to(10);
  EXPECT_EQ(sorted_membership(u64s{4, 5, 6, 7}, ten).bits,
            (std::vector<std::uint8_t>{0, 1, 0, 1}));
  EXPECT_EQ(sorted_membership(u64s{}, ten).size(), 0u);

  u64s one_to_100(100);
  std::iota(one_to_100.begin(), one_to_100.end(), 1);
  EXPECT_EQ(sorted_membership(one_to_100, primes_up_to(100)).count(), 25u);
}

TEST(SortedMembership, RejectsValuesPastTheTable) {
  EXPECT_THROW(sorted_membership(u64s{3, 11}, primes_up_to(10)), ContractError);
}

TEST(SortedMembership, AgreesWithLinearScan) {
  std::mt19937_64 rng(8);
  const PrimeTable table = primes_up_to(200'000);
  for (int round = 0; round < 20; ++round) {
    u64s values(rng() % 10'000);
    for (auto& v : values) v = rng() % 200'001;
    const PrimalityMask mask = sorted_membership(values, table);
    for (std::size_t i = 0; i < values.size(); ++i) {
      const bool linear =
          std::find(table.primes.begin(), table.primes.end(), values[i]) != table.primes.end();
      ASSERT_EQ(mask[i], linear);
    }
  }
}

// The per-element count, written literally.
std::uint64_t division_count_literal(std::uint64_t n) {
  const PrimeTable p = primes_up_to(isqrt(n));
  std::uint64_t total = 0;
  for (std::uint64_t k = 1; k <= n; ++k) {
    for (const std::uint64_t q : p.primes) total += q < k ? 1 : 0;
  }
  return total;
}

TEST(DivisionCount, TableRows) {
  EXPECT_EQ(division_count(10), 15u);
  EXPECT_EQ(division_count(100), 383u);
  EXPECT_EQ(division_count(1000), 10840u);
  EXPECT_EQ(division_count(10000), 248940u);
  EXPECT_EQ(division_count(100000), 6490794u);
  EXPECT_EQ(division_count(1000000), 167923873u);
  EXPECT_EQ(division_count(10000000), 4459357131u);
  EXPECT_EQ(division_count(100000000), 122894263604u);
}

TEST(DivisionCount, GroupedSumEqualsLiteralLoop) {
  for (std::uint64_t n = 1; n <= 3000; ++n) {
    ASSERT_EQ(division_count(n), division_count_literal(n)) << n;
  }
}

TEST(DivisionCount, EdgeCases) {
  EXPECT_EQ(division_count(1), 0u);
  EXPECT_THROW(division_count(0), ContractError);
}

}  // namespace
}  // namespace ipf
