// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
//
// Benchmark harness. Every measurement is a BenchRecord; a CSV of them is the
// only on-disk format:
//
//   label,element_count,max_value,path,wall_time_ns,checksum
//
// checksum is the number of primes the timed call reported. Each timed
// configuration emits one row per repeat followed by a "<label>/median" row.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "isprime_fast/isprime_fast.h"

namespace ipf::cli {

struct BenchRecord {
  std::string label;
  std::uint64_t element_count = 0;
  std::uint64_t max_value = 0;
  ipf_path_kind path = IPF_PATH_NONE;
  std::uint64_t wall_time_ns = 0;
  std::uint64_t checksum = 0;

  friend bool operator==(const BenchRecord&, const BenchRecord&) = default;
};

inline constexpr std::string_view kBenchCsvHeader =
    "label,element_count,max_value,path,wall_time_ns,checksum";

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);
// Throws std::invalid_argument on a malformed row.
std::vector<BenchRecord> parse_csv(std::string_view text);

enum class Suite { Scalar, Array, Crossover };

struct BenchOptions {
  Suite suite = Suite::Array;
  unsigned repeats = 5;
  std::uint64_t seed = 42;
  // Array-suite sequence lengths (1:N for each N).
  std::vector<std::uint64_t> array_sizes = {10'000, 100'000, 1'000'000};
  std::vector<unsigned> scalar_bits = {4, 8, 16, 24, 32, 36, 40, 44, 48, 50, 52, 56, 60, 64};
  std::vector<std::uint64_t> crossover_counts = {1'000, 3'000, 10'000, 30'000, 100'000};
  std::vector<unsigned> crossover_max_bits = {12, 16, 20, 24, 28};
};

std::vector<BenchRecord> run_bench(const BenchOptions& options);

// Uniform over [2^(bits-1), 2^bits - 1]; bits in [2, 64].
class BitSampler {
 public:
  explicit BitSampler(std::uint64_t seed);
  std::uint64_t any(unsigned bits);
  std::uint64_t odd(unsigned bits);
  // Rejection-samples any(bits) until the value is prime; bits >= 2.
  std::uint64_t prime(unsigned bits);

 private:
  std::mt19937_64 rng_;
};

}  // namespace ipf::cli
