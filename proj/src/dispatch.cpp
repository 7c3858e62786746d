// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "dispatch.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <string>
#include <thread>

#include "errors.hpp"
#include "millerrabin.hpp"
#include "numeric.hpp"
#include "wheel.hpp"

namespace ipf {

const char* to_string(InputFault fault) noexcept {
  switch (fault) {
    case InputFault::Negative: return "negative value";
    case InputFault::NonInteger: return "non-integer value";
    case InputFault::OutOfRange: return "value exceeds 2^64 - 1";
    case InputFault::NotANumber: return "not a number";
  }
  return "invalid value";
}

const char* to_string(PathKind kind) noexcept {
  switch (kind) {
    case PathKind::SmallScalar: return "small_scalar";
    case PathKind::MediumScalar: return "medium_scalar";
    case PathKind::LargeScalar: return "large_scalar";
    case PathKind::ArraySqrt: return "array_sqrt";
    case PathKind::ArrayBinarySearch: return "array_binsearch";
  }
  return "unknown";
}

void HeuristicModel::validate() const {
  if (small_slope <= 0 || large_slope <= 0) {
    throw ContractError("HeuristicModel: slopes must be positive");
  }
  if (regime_split < 1) {
    throw ContractError("HeuristicModel: regime_split must be >= 1");
  }
}

int128 HeuristicModel::evaluate(std::uint64_t element_count) const noexcept {
  const bool large = large_regime(element_count);
  const int128 slope = large ? large_slope : small_slope;
  const int128 intercept = large ? large_intercept : small_intercept;
  return slope * static_cast<int128>(element_count) + intercept;
}

// ---------------------------------------------------------------------------
// validation

namespace {

// 2^64 as a double; every double >= this is out of range.
constexpr double kTwoPow64 = 18446744073709551616.0;

[[noreturn]] void reject(std::size_t index, InputFault fault,
                         std::string_view shown) {
  throw InputDomainError(index, fault,
                         "invalid input '" + std::string(shown) +
                             "' at position " + std::to_string(index) + ": " +
                             to_string(fault));
}

std::uint64_t from_double(std::size_t index, double v, std::string_view shown) {
  if (std::isnan(v)) reject(index, InputFault::NotANumber, shown);
  if (v < 0) reject(index, InputFault::Negative, shown);
  if (std::isinf(v) || v >= kTwoPow64) reject(index, InputFault::OutOfRange, shown);
  if (std::trunc(v) != v) reject(index, InputFault::NonInteger, shown);
  return static_cast<std::uint64_t>(v);
}

std::uint64_t parse_token(std::size_t index, std::string_view token) {
  std::string_view body = token;
  while (!body.empty() && (body.front() == ' ' || body.front() == '\t')) body.remove_prefix(1);
  while (!body.empty() && (body.back() == ' ' || body.back() == '\t' ||
                           body.back() == '\r')) {
    body.remove_suffix(1);
  }
  if (body.empty()) reject(index, InputFault::NotANumber, token);
  if (body.front() == '+') body.remove_prefix(1);

  // Plain decimal integers are parsed exactly, all the way to 2^64 - 1.
  if (!body.empty() && std::all_of(body.begin(), body.end(), [](char c) {
        return c >= '0' && c <= '9';
      })) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec == std::errc::result_out_of_range) reject(index, InputFault::OutOfRange, token);
    if (ec != std::errc{} || ptr != body.data() + body.size()) {
      reject(index, InputFault::NotANumber, token);
    }
    return value;
  }

  // Anything else must read as a floating-point literal ("3.0", "1e6", "-7").
  double value = 0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (ec == std::errc::result_out_of_range) {
    // Overflow or underflow; the sign decides which complaint applies.
    reject(index, body.front() == '-' ? InputFault::Negative : InputFault::OutOfRange, token);
  }
  if (ec != std::errc{} || ptr != body.data() + body.size()) {
    reject(index, InputFault::NotANumber, token);
  }
  if (value == 0) return 0;  // "-0", "0.0"
  return from_double(index, value, token);
}

}  // namespace

std::vector<std::uint64_t> validate(std::span<const double> values) {
  std::vector<std::uint64_t> out;
  out.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (v == 0) {
      out.push_back(0);
      continue;
    }
    out.push_back(from_double(i, v, std::to_string(v)));
  }
  return out;
}

std::vector<std::uint64_t> validate(std::span<const std::string_view> tokens) {
  std::vector<std::uint64_t> out;
  out.reserve(tokens.size());
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    out.push_back(parse_token(i, tokens[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------
// routing

PathKind classify_scalar(std::uint64_t value) noexcept {
  if (value < kSmallScalarLimit) return PathKind::SmallScalar;
  if (value < kMediumScalarLimit) return PathKind::MediumScalar;
  return PathKind::LargeScalar;
}

PathDecision choose_array_path(std::uint64_t element_count,
                               std::uint64_t max_value,
                               const HeuristicModel& model) {
  model.validate();
  PathDecision decision;
  auto& why = decision.rationale;
  why.element_count = element_count;
  why.max_value = max_value;
  why.large_regime = model.large_regime(element_count);
  why.formula_value = model.evaluate(element_count);
  decision.kind = why.formula_value <= static_cast<int128>(max_value)
                      ? PathKind::ArraySqrt
                      : PathKind::ArrayBinarySearch;
  return decision;
}

namespace {

bool divisible_by_basis(std::uint64_t v) noexcept {
  return v % 2 == 0 || v % 3 == 0 || v % 5 == 0 || v % 7 == 0;
}

struct Partition {
  ShrinkResult shrunk;
  std::vector<std::size_t> large;   // indices into shrunk.survivors
  std::vector<std::size_t> array;   // indices into shrunk.survivors
  std::uint64_t array_max = 0;
};

Partition partition(std::span<const std::uint64_t> values) {
  Partition p{shrink(values), {}, {}, 0};
  const auto& survivors = p.shrunk.survivors;
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    if (survivors[i] >= kMediumScalarLimit) {
      p.large.push_back(i);
    } else {
      p.array.push_back(i);
      p.array_max = std::max(p.array_max, survivors[i]);
    }
  }
  return p;
}

PathDecision decide(std::uint64_t element_count, const Partition& p,
                    const HeuristicModel& model) {
  PathDecision decision = choose_array_path(element_count, p.array_max, model);
  decision.rationale.survivor_count = p.shrunk.survivors.size();
  decision.rationale.large_count = p.large.size();
  return decision;
}

}  // namespace

PathDecision classify(std::span<const std::uint64_t> values,
                      const HeuristicModel& model) {
  if (values.empty()) throw ContractError("classify: empty input");
  if (values.size() == 1) {
    PathDecision decision;
    decision.kind = classify_scalar(values[0]);
    decision.rationale.element_count = 1;
    decision.rationale.max_value = values[0];
    return decision;
  }
  return decide(values.size(), partition(values), model);
}

ShrinkResult shrink(std::span<const std::uint64_t> values) {
  ShrinkResult out;
  out.resolved = PrimalityMask(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const std::uint64_t v = values[i];
    if (v == 2 || v == 3 || v == 5 || v == 7) {
      out.resolved.bits[i] = 1;
    } else if (v < 2 || divisible_by_basis(v)) {
      out.resolved.bits[i] = 0;
    } else {
      out.survivors.push_back(v);
      out.positions.push_back(i);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// evaluation

namespace {

// Below this many items the thread start-up cost dominates.
constexpr std::size_t kParallelGrain = std::size_t{1} << 14;

void for_each_chunk(std::size_t n, const Config& config,
                    const std::function<void(std::size_t, std::size_t)>& body) {
  unsigned workers = config.threads != 0 ? config.threads
                                         : std::max(1u, std::thread::hardware_concurrency());
  if (!config.parallel || workers < 2 || n < kParallelGrain) {
    body(0, n);
    return;
  }
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n / (kParallelGrain / 4) + 1));
  const std::size_t chunk = (n + workers - 1) / workers;
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (std::size_t begin = 0; begin < n; begin += chunk) {
    pool.emplace_back(body, begin, std::min(n, begin + chunk));
  }
}

bool trial_divide(std::uint64_t x, std::span<const std::uint64_t> primes) noexcept {
  for (const std::uint64_t p : primes) {
    if (p > x / p) break;
    if (x % p == 0) return false;
  }
  return true;
}

bool scalar_is_prime(std::uint64_t value) {
  switch (classify_scalar(value)) {
    case PathKind::SmallScalar: return trial_division_small(value);
    case PathKind::MediumScalar: return trial_division_medium(value);
    default: return is_prime_u64(value);
  }
}

}  // namespace

Evaluation evaluate(std::span<const std::uint64_t> values, const Config& config) {
  Evaluation result;
  result.mask = PrimalityMask(values.size());
  if (values.empty()) return result;

  if (values.size() == 1) {
    result.decision = classify(values, config.model);
    result.mask.bits[0] = scalar_is_prime(values[0]) ? 1 : 0;
    return result;
  }

  Partition part = partition(values);
  PathDecision decision = decide(values.size(), part, config.model);
  if (config.force != ForcePath::Auto) {
    decision.kind = config.force == ForcePath::Sqrt ? PathKind::ArraySqrt
                                                    : PathKind::ArrayBinarySearch;
    decision.rationale.forced = true;
  }

  const auto& survivors = part.shrunk.survivors;
  std::vector<std::uint8_t> verdict(survivors.size(), 0);

  for_each_chunk(part.large.size(), config, [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const std::size_t i = part.large[k];
      verdict[i] = is_prime_u64(survivors[i]) ? 1 : 0;
    }
  });

  if (!part.array.empty()) {
    std::optional<PrimeTable> full;
    if (decision.kind == PathKind::ArrayBinarySearch) {
      try {
        full = primes_up_to(part.array_max, config.sieve_ceiling);
      } catch (const ResourceLimitError&) {
        decision.kind = PathKind::ArraySqrt;
        decision.rationale.fell_back = true;
      }
    }

    if (full) {
      for_each_chunk(part.array.size(), config, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
          const std::size_t i = part.array[k];
          verdict[i] = full->contains(survivors[i]) ? 1 : 0;
        }
      });
    } else {
      const PrimeTable small = primes_up_to(isqrt(part.array_max), config.sieve_ceiling);
      // Survivors are coprime to 2, 3, 5, 7 already.
      const auto first = std::upper_bound(small.primes.begin(), small.primes.end(), 7);
      const std::span<const std::uint64_t> divisors(first, small.primes.end());
      for_each_chunk(part.array.size(), config, [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; ++k) {
          const std::size_t i = part.array[k];
          verdict[i] = trial_divide(survivors[i], divisors) ? 1 : 0;
        }
      });
    }
  }

  result.mask = std::move(part.shrunk.resolved);
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    result.mask.bits[part.shrunk.positions[i]] = verdict[i];
  }
  result.decision = decision;
  return result;
}

PrimalityMask is_prime(std::span<const std::uint64_t> values, const Config& config) {
  return evaluate(values, config).mask;
}

PrimalityMask is_prime(std::span<const std::uint64_t> values,
                       std::span<const std::size_t> shape, const Config& config) {
  std::size_t product = 1;
  for (const std::size_t d : shape) product *= d;
  if (product != values.size()) {
    throw ContractError("is_prime: shape does not match element count " +
                        std::to_string(values.size()));
  }
  PrimalityMask mask = evaluate(values, config).mask;
  mask.shape.assign(shape.begin(), shape.end());
  return mask;
}

PrimalityMask is_prime(std::span<const double> values, const Config& config) {
  const std::vector<std::uint64_t> validated = validate(values);
  return evaluate(validated, config).mask;
}

}  // namespace ipf
