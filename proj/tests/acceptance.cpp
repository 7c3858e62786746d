// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
//
// Acceptance suite. Runs every release criterion at its fixed tolerance and
// prints one PASS/FAIL line each; exits non-zero if any criterion fails.
#include <initializer_list>
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "dispatch.hpp"
#include "millerrabin.hpp"
#include "modmath.hpp"
#include "oracle.hpp"
#include "sieve.hpp"
#include "wheel.hpp"

namespace {

using Clock = std::chrono::steady_clock;
using u64s = std::vector<std::uint64_t>;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Returns an empty string on success, otherwise what went wrong.
using Criterion = std::function<std::string(std::string& detail)>;

// ---- 1 -------------------------------------------------------------------
std::string exhaustive_small_domain(std::string& detail) {
  constexpr std::uint64_t kLimit = std::uint64_t{1} << 20;
  constexpr double kBudgetSeconds = 30.0;
  const auto flags = oracle::sieve_flags(kLimit);
  const auto start = Clock::now();
  std::uint64_t mismatches = 0;
  for (std::uint64_t x = 0; x < kLimit; ++x) {
    const u64s one{x};
    if (ipf::is_prime(one)[0] != (flags[x] == 1)) ++mismatches;
  }
  const double elapsed = seconds_since(start);
  detail = std::to_string(mismatches) + " mismatches in [0, 2^20), " + std::to_string(elapsed) + " s";
  if (mismatches != 0) return "mismatch against sieve oracle";
  if (elapsed >= kBudgetSeconds) return "exceeded 30 s budget";
  return {};
}

// ---- 2 -------------------------------------------------------------------
std::string division_table(std::string& detail) {
  constexpr double kBudgetSeconds = 10.0;
  const std::pair<std::uint64_t, std::uint64_t> rows[] = {
      {10, 15},
      {100, 383},
      {1000, 10840},
      {10000, 248940},
      {100000, 6490794},
      {1000000, 167923873},
      {10000000, 4459357131ULL},
      {100000000, 122894263604ULL},
  };
  const auto start = Clock::now();
  std::string bad;
  for (const auto& [n, expected] : rows) {
    const std::uint64_t got = ipf::division_count(n);
    if (got != expected) bad += " N=" + std::to_string(n) + "->" + std::to_string(got);
  }
  const double elapsed = seconds_since(start);
  detail = "8 rows, " + std::to_string(elapsed) + " s";
  if (!bad.empty()) return "wrong rows:" + bad;
  if (elapsed >= kBudgetSeconds) return "exceeded 10 s budget";
  return {};
}

// ---- 3 -------------------------------------------------------------------
std::string wheel_cycles(std::string& detail) {
  const u64s eq5 = {10, 2, 4, 2, 4, 6, 2, 6, 4, 2, 4, 6, 6, 2, 6, 4, 2, 6, 4, 6, 8, 4, 2, 4,
                    2,  4, 8, 6, 4, 6, 2, 4, 6, 2, 6, 6, 4, 2, 4, 6, 2, 6, 4, 2, 4, 2, 10, 2};
  const ipf::WheelSpec w = ipf::build_wheel(u64s{2, 3, 5, 7});
  const std::uint64_t sum = std::accumulate(w.diffs.begin(), w.diffs.end(), std::uint64_t{0});
  detail = std::to_string(w.diffs.size()) + " entries, sum " + std::to_string(sum);
  if (w.diffs != eq5) return "2/3/5/7 cycle differs";
  if (sum != 210 || w.cycle_length != 210) return "2/3/5/7 cycle does not sum to 210";
  if (ipf::build_wheel(u64s{2, 3}).diffs != u64s{4, 2}) return "2/3 cycle differs";
  if (ipf::build_wheel(u64s{2, 3, 5}).diffs != u64s{6, 4, 2, 4, 2, 4, 6, 2}) {
    return "2/3/5 cycle differs";
  }
  return {};
}

// ---- 4 -------------------------------------------------------------------
std::string miller_rabin_soundness(std::string& detail) {
  constexpr int kSamples = 20'000;
  std::mt19937_64 rng(20260401);
  int mismatches = 0;
  int primes = 0;
  for (int i = 0; i < kSamples; ++i) {
    std::uint64_t n = rng();
    if (i % 2 == 0) n |= 1;
    if (i % 4 == 0) {
      // Rejection-sample toward primes so both verdicts are well covered.
      while (!oracle::is_prime_wide(n)) n = rng() | 1;
    }
    const bool expected = oracle::is_prime_wide(n);
    primes += expected;
    if (ipf::is_prime_u64(n) != expected) ++mismatches;
  }
  std::string pseudo_bad;
  for (const std::uint64_t n : std::initializer_list<std::uint64_t>{2047ULL, 3277ULL, 4033ULL, 4681ULL, 8321ULL, 3215031751ULL}) {
    const std::uint64_t factor = oracle::smallest_factor(n);
    if (factor == n) pseudo_bad += " " + std::to_string(n) + "(not composite?)";
    if (ipf::is_prime_u64(n)) pseudo_bad += " " + std::to_string(n) + "(accepted)";
  }
  detail = std::to_string(kSamples) + " samples (" + std::to_string(primes) + " prime), " +
           std::to_string(mismatches) + " mismatches";
  if (mismatches != 0) return "disagrees with wide-precision oracle";
  if (!pseudo_bad.empty()) return "pseudoprime check failed:" + pseudo_bad;
  return {};
}

// ---- 5 -------------------------------------------------------------------
std::string largest_prime_smoke(std::string& detail) {
  constexpr double kBudgetMs = 1.0;
  const std::pair<std::uint64_t, bool> cases[] = {{18446744073709551557ULL, true},
                                                  {18446744073709551555ULL, false}};
  std::string bad;
  double worst_ms = 0;
  for (const auto& [n, expected] : cases) {
    for (int run = 0; run < 5; ++run) {
      const auto start = Clock::now();
      const bool got = ipf::is_prime_u64(n);
      const double ms = seconds_since(start) * 1e3;
      worst_ms = std::max(worst_ms, ms);
      if (got != expected) bad += " wrong verdict for " + std::to_string(n);
      if (ms >= kBudgetMs) bad += " " + std::to_string(n) + " took " + std::to_string(ms) + " ms";
    }
  }
  detail = "slowest call " + std::to_string(worst_ms * 1e3) + " us";
  return bad;
}

// ---- 6 -------------------------------------------------------------------
std::string path_equivalence(std::string& detail) {
  constexpr int kArrays = 100;
  constexpr std::uint64_t kMaxElements = 100'000;
  std::mt19937_64 rng(6);
  ipf::Config sqrt_cfg;
  sqrt_cfg.force = ipf::ForcePath::Sqrt;
  ipf::Config bs_cfg;
  bs_cfg.force = ipf::ForcePath::BinarySearch;
  int differing = 0;
  std::uint64_t largest = 0;
  std::uint64_t fallbacks = 0;
  for (int a = 0; a < kArrays; ++a) {
    // Bit widths spread over [8, 32] so both small and 2^32-scale sieves run.
    const unsigned bits = 8 + static_cast<unsigned>(rng() % 25);
    const std::uint64_t bound = std::uint64_t{1} << bits;  // values <= 2^32
    u64s values(rng() % kMaxElements + 1);
    for (auto& v : values) v = rng() % (bound + 1);
    largest = std::max(largest, *std::max_element(values.begin(), values.end()));
    const ipf::Evaluation s = ipf::evaluate(values, sqrt_cfg);
    const ipf::Evaluation b = ipf::evaluate(values, bs_cfg);
    fallbacks += b.decision->rationale.fell_back;
    if (s.mask != b.mask) ++differing;
  }
  detail = std::to_string(kArrays) + " arrays, max value " + std::to_string(largest) + ", " +
           std::to_string(differing) + " differing, " + std::to_string(fallbacks) + " fallbacks";
  if (differing != 0) return "forced paths disagree";
  if (fallbacks != 0) return "binary-search path fell back to sqrt";
  return {};
}

// ---- 7 -------------------------------------------------------------------
std::string binary_search_wins_on_sequence(std::string& detail) {
  constexpr int kRuns = 5;
  u64s values(1'000'000);
  std::iota(values.begin(), values.end(), std::uint64_t{1});
  ipf::Config auto_cfg;
  auto_cfg.parallel = false;
  ipf::Config sqrt_cfg = auto_cfg;
  sqrt_cfg.force = ipf::ForcePath::Sqrt;

  std::vector<double> auto_ns, sqrt_ns;
  ipf::PathKind chosen = ipf::PathKind::ArraySqrt;
  std::size_t auto_count = 0, sqrt_count = 0;
  for (int run = 0; run < kRuns; ++run) {
    auto start = Clock::now();
    const ipf::Evaluation a = ipf::evaluate(values, auto_cfg);
    auto_ns.push_back(seconds_since(start) * 1e9);
    start = Clock::now();
    const ipf::Evaluation s = ipf::evaluate(values, sqrt_cfg);
    sqrt_ns.push_back(seconds_since(start) * 1e9);
    chosen = a.decision->kind;
    auto_count = a.mask.count();
    sqrt_count = s.mask.count();
  }
  std::sort(auto_ns.begin(), auto_ns.end());
  std::sort(sqrt_ns.begin(), sqrt_ns.end());
  const double auto_median = auto_ns[kRuns / 2];
  const double sqrt_median = sqrt_ns[kRuns / 2];
  detail = std::string("auto=") + ipf::to_string(chosen) + " median " +
           std::to_string(auto_median / 1e6) + " ms vs sqrt " + std::to_string(sqrt_median / 1e6) +
           " ms, primes " + std::to_string(auto_count);
  if (chosen != ipf::PathKind::ArrayBinarySearch) return "auto did not pick binary search";
  if (auto_count != 78498 || sqrt_count != 78498) return "wrong prime count";
  if (!(auto_median < sqrt_median)) return "binary search not faster than sqrt";
  return {};
}

// ---- 8 -------------------------------------------------------------------
std::string routing_contract(std::string& detail) {
  const ipf::HeuristicModel model;
  std::string bad;
  const std::pair<std::uint64_t, ipf::PathKind> scalars[] = {
      {(1ULL << 18) - 1, ipf::PathKind::SmallScalar},
      {1ULL << 18, ipf::PathKind::MediumScalar},
      {(1ULL << 49) - 1, ipf::PathKind::MediumScalar},
      {1ULL << 49, ipf::PathKind::LargeScalar},
  };
  for (const auto& [v, kind] : scalars) {
    if (ipf::classify(u64s{v}, model).kind != kind) bad += " scalar " + std::to_string(v);
  }
  if (ipf::choose_array_path(1000, 1'000'000'000, model).kind != ipf::PathKind::ArraySqrt) {
    bad += " (E=1000,M=1e9)";
  }
  if (ipf::choose_array_path(1'000'000, 1'000'000, model).kind !=
      ipf::PathKind::ArrayBinarySearch) {
    bad += " (E=1e6,M=1e6)";
  }
  if (ipf::choose_array_path(1000, 175'000, model).kind != ipf::PathKind::ArraySqrt) {
    bad += " tie";
  }
  detail = "4 scalar boundaries, 2 formula cases, 1 tie";
  return bad.empty() ? std::string{} : "misrouted:" + bad;
}

// ---- 9 -------------------------------------------------------------------
std::string cli_conformance(std::string& detail) {
  auto run = [](std::vector<std::string> args, std::string& out) {
    std::ostringstream o, e;
    const int code = ipf::cli::run(args, o, e);
    out = o.str();
    return code;
  };
  std::string out;
  std::string bad;
  if (run({"check", "1", "2", "3", "4", "5"}, out) != 0 || out != "0 1 1 0 1\n") {
    bad += " check-example";
  }
  const std::string table =
      "10,15,1.5\n100,383,3.8\n1000,10840,10.8\n10000,248940,24.8\n100000,6490794,64.9\n"
      "1000000,167923873,167.9\n10000000,4459357131,445.9\n100000000,122894263604,1228.9\n";
  if (run({"divcount", "--table"}, out) != 0 || out != table) bad += " divcount-table";
  if (run({"divcount", "--n", "0"}, out) != 2) bad += " divcount-zero";
  if (run({"check", "2.5"}, out) != 2) bad += " exit-2-fraction";
  if (run({"check", "--range", "1:x"}, out) != 2) bad += " exit-2-range";
  if (run({"check", "--file", "/nonexistent/ipf.txt"}, out) != 3) bad += " exit-3-file";
  if (run({"bench", "--out", "/nonexistent/dir/o.csv"}, out) != 3) bad += " exit-3-bench";
  if (run({"check", "--range", "1:10", "--format", "csv"}, out) != 0 ||
      std::count(out.begin(), out.end(), '\n') != 10) {
    bad += " csv-format";
  }
  detail = "check, divcount, exit codes 0/2/3";
  return bad.empty() ? std::string{} : "failed:" + bad;
}

// ---- 10 ------------------------------------------------------------------
std::string overflow_totality(std::string& detail) {
  constexpr int kTriples = 1'000'000;
  std::mt19937_64 rng(10);
  std::uint64_t mismatches = 0;
  std::uint64_t aborts = 0;
  for (int i = 0; i < kTriples; ++i) {
    std::uint64_t m;
    switch (i % 4) {
      case 0: m = ~std::uint64_t{0} - rng() % 64; break;
      case 1: m = (rng() >> (rng() % 64)) | 1; break;
      default: m = rng() | (std::uint64_t{1} << 63);
    }
    if (m == 0) m = 1;
    const std::uint64_t a = rng() % m;
    const std::uint64_t b = rng() % m;
    try {
      if (ipf::mod_add(a, b, m) != oracle::add_mod(a, b, m)) ++mismatches;
      if (ipf::mod_mul(a, b, m) != oracle::mul_mod(a, b, m)) ++mismatches;
      if (i % 10 == 0) {
        const std::uint64_t e = rng();
        if (ipf::mod_exp(a, e, m) != oracle::pow_mod(a, e, m)) ++mismatches;
      }
    } catch (...) {
      ++aborts;
    }
  }
  detail = std::to_string(kTriples) + " triples, " + std::to_string(mismatches) +
           " mismatches, " + std::to_string(aborts) + " aborts";
  if (mismatches != 0) return "mismatch against wide oracle";
  if (aborts != 0) return "operation aborted";
  return {};
}

}  // namespace

int main() {
  const std::pair<const char*, Criterion> criteria[] = {
      {"AC1  exhaustive oracle on [0, 2^20) under 30 s", exhaustive_small_domain},
      {"AC2  division-count table, all 8 rows under 10 s", division_table},
      {"AC3  wheel difference cycles", wheel_cycles},
      {"AC4  deterministic Miller-Rabin soundness", miller_rabin_soundness},
      {"AC5  largest 64-bit prime under 1 ms", largest_prime_smoke},
      {"AC6  sqrt / binary-search path equivalence", path_equivalence},
      {"AC7  auto picks binary search on 1:10^6 and beats sqrt", binary_search_wins_on_sequence},
      {"AC8  routing contract", routing_contract},
      {"AC9  CLI conformance", cli_conformance},
      {"AC10 overflow totality fuzz", overflow_totality},
  };
  int failures = 0;
  for (const auto& [name, criterion] : criteria) {
    std::string detail;
    std::string problem;
    try {
      problem = criterion(detail);
    } catch (const std::exception& e) {
      problem = std::string("threw: ") + e.what();
    }
    const bool pass = problem.empty();
    failures += !pass;
    std::printf("[%s] %s -- %s%s%s\n", pass ? "PASS" : "FAIL", name, detail.c_str(),
                pass ? "" : "; ", problem.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
