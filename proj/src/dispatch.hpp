// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
//
// Element-wise primality for arrays of unsigned 64-bit integers, routed per
// input to the cheapest of five strategies:
//
//   single value  < 2^18        odd trial division
//   single value  < 2^49        2/3/5/7-wheel trial division
//   single value >= 2^49        deterministic Miller-Rabin
//   array, sqrt path            sieve to isqrt(max), trial-divide each element
//   array, binary-search path   sieve to max, look each element up
//
// Arrays are first shrunk: multiples of 2, 3, 5, 7 (and 0, 1) are resolved
// without division. Surviving elements >= 2^49 always go to Miller-Rabin.
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mask.hpp"
#include "numeric.hpp"
#include "sieve.hpp"

namespace ipf {

enum class PathKind {
  SmallScalar,
  MediumScalar,
  LargeScalar,
  ArraySqrt,
  ArrayBinarySearch,
};

const char* to_string(PathKind kind) noexcept;

// Linear crossover model between the two array paths. A formula value below
// the maximum element selects the sqrt path; anything else selects binary
// search, except that ties go to sqrt.
struct HeuristicModel {
  std::uint64_t regime_split = 30000;
  std::int64_t small_slope = 275;
  std::int64_t small_intercept = -100000;
  std::int64_t large_slope = 613;
  std::int64_t large_intercept = -200000000;

  // Throws ContractError unless slopes are positive and regime_split >= 1.
  void validate() const;

  bool large_regime(std::uint64_t element_count) const noexcept {
    return element_count >= regime_split;
  }
  // Evaluated exactly; intercepts are negative so the result may be too.
  int128 evaluate(std::uint64_t element_count) const noexcept;
};

enum class ForcePath { Auto, Sqrt, BinarySearch };

struct Config {
  HeuristicModel model;
  std::uint64_t sieve_ceiling = kDefaultSieveCeiling;
  ForcePath force = ForcePath::Auto;
  bool parallel = true;
  unsigned threads = 0;  // 0: hardware concurrency
};

// Numbers behind a routing choice.
struct PathRationale {
  std::uint64_t element_count = 0;    // input elements (heuristic E)
  std::uint64_t survivor_count = 0;   // left after shrinking
  std::uint64_t large_count = 0;      // survivors sent to Miller-Rabin
  std::uint64_t max_value = 0;        // largest survivor on the array path
  int128 formula_value = 0;
  bool large_regime = false;
  bool forced = false;
  bool fell_back = false;             // binary search exceeded the sieve ceiling
};

struct PathDecision {
  PathKind kind = PathKind::SmallScalar;
  PathRationale rationale;
};

// Parses user values into uint64. Throws InputDomainError naming the first
// offending element for negative, fractional, non-numeric, or > 2^64 - 1.
std::vector<std::uint64_t> validate(std::span<const double> values);
std::vector<std::uint64_t> validate(std::span<const std::string_view> tokens);

// Scalar routing for one value.
PathKind classify_scalar(std::uint64_t value) noexcept;

// Sqrt vs binary search for E elements with array maximum M.
PathDecision choose_array_path(std::uint64_t element_count,
                               std::uint64_t max_value,
                               const HeuristicModel& model);

// Routing for a validated, non-empty input (ContractError when empty).
PathDecision classify(std::span<const std::uint64_t> values,
                      const HeuristicModel& model);

struct ShrinkResult {
  std::vector<std::uint64_t> survivors;
  std::vector<std::size_t> positions;  // input index of each survivor
  PrimalityMask resolved;              // final for non-survivors, 0 otherwise
};

ShrinkResult shrink(std::span<const std::uint64_t> values);

struct Evaluation {
  PrimalityMask mask;
  std::optional<PathDecision> decision;  // empty for empty input
};

Evaluation evaluate(std::span<const std::uint64_t> values,
                    const Config& config = {});

// Mask only; the shape overload tags the result with the caller's
// dimensions, whose product must equal values.size().
PrimalityMask is_prime(std::span<const std::uint64_t> values,
                       const Config& config = {});
PrimalityMask is_prime(std::span<const std::uint64_t> values,
                       std::span<const std::size_t> shape,
                       const Config& config = {});
PrimalityMask is_prime(std::span<const double> values,
                       const Config& config = {});

}  // namespace ipf
