// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "bench.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "context.hpp"

namespace ipf::cli {

// ---------------------------------------------------------------------------
// CSV

namespace {

bool needs_quotes(std::string_view s) {
  return s.find_first_of(",\"\n\r") != std::string_view::npos;
}

void write_field(std::ostream& out, std::string_view s) {
  if (!needs_quotes(s)) {
    out << s;
    return;
  }
  out << '"';
  for (const char c : s) {
    if (c == '"') out << '"';
    out << c;
  }
  out << '"';
}

std::vector<std::string> split_row(std::string_view line) {
  std::vector<std::string> fields(1);
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        fields.back() += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        fields.back() += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else {
      fields.back() += c;
    }
  }
  if (quoted) throw std::invalid_argument("unterminated quote in CSV row");
  return fields;
}

std::uint64_t parse_u64(const std::string& field, const char* column) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument(std::string("bad ") + column + " '" + field + "'");
  }
  return v;
}

ipf_path_kind parse_path(const std::string& field) {
  for (int k = IPF_PATH_SMALL_SCALAR; k <= IPF_PATH_NONE; ++k) {
    const auto kind = static_cast<ipf_path_kind>(k);
    if (field == ipf_path_name(kind)) return kind;
  }
  throw std::invalid_argument("unknown path '" + field + "'");
}

}  // namespace

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << kBenchCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    write_field(out, r.label);
    out << ',' << r.element_count << ',' << r.max_value << ',' << ipf_path_name(r.path)
        << ',' << r.wall_time_ns << ',' << r.checksum << '\n';
  }
}

std::vector<BenchRecord> parse_csv(std::string_view text) {
  std::vector<BenchRecord> records;
  bool header_seen = false;
  std::size_t pos = 0;
  while (pos < text.size()) {
    // Labels never contain newlines, so a physical line is a row.
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != kBenchCsvHeader) throw std::invalid_argument("missing CSV header");
      header_seen = true;
      continue;
    }
    const std::vector<std::string> f = split_row(line);
    if (f.size() != 6) throw std::invalid_argument("expected 6 CSV fields");
    records.push_back(BenchRecord{f[0], parse_u64(f[1], "element_count"),
                                  parse_u64(f[2], "max_value"), parse_path(f[3]),
                                  parse_u64(f[4], "wall_time_ns"), parse_u64(f[5], "checksum")});
  }
  return records;
}

// ---------------------------------------------------------------------------
// sampling

BitSampler::BitSampler(std::uint64_t seed) : rng_(seed) {}

std::uint64_t BitSampler::any(unsigned bits) {
  if (bits < 2 || bits > 64) throw std::invalid_argument("bit size must be in [2, 64]");
  const std::uint64_t lo = std::uint64_t{1} << (bits - 1);
  const std::uint64_t hi = bits == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << bits) - 1;
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng_);
}

std::uint64_t BitSampler::odd(unsigned bits) { return any(bits) | 1; }

std::uint64_t BitSampler::prime(unsigned bits) {
  for (;;) {
    const std::uint64_t v = any(bits);
    if (ipf_is_prime_u64(v)) return v;
  }
}

// ---------------------------------------------------------------------------
// timing

namespace {

using Clock = std::chrono::steady_clock;

struct Timed {
  Context::Result result;
  std::uint64_t ns;
};

Timed time_call(const Context& ctx, std::span<const std::uint64_t> values) {
  const auto start = Clock::now();
  Context::Result result = ctx.is_prime(values);
  const auto stop = Clock::now();
  return {std::move(result),
          static_cast<std::uint64_t>(
              std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count())};
}

std::uint64_t count_primes(const std::vector<std::uint8_t>& mask) {
  return static_cast<std::uint64_t>(std::count(mask.begin(), mask.end(), 1));
}

template <typename T>
T median_of(std::vector<T> xs) {
  std::sort(xs.begin(), xs.end());
  const std::size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return xs[n / 2 - 1] + (xs[n / 2] - xs[n / 2 - 1]) / 2;
}

// Appends the median row for the trailing `count` records.
void append_median(std::vector<BenchRecord>& out, std::size_t count, const std::string& label) {
  std::vector<std::uint64_t> times;
  std::vector<std::uint64_t> sums;
  std::vector<std::uint64_t> maxima;
  for (std::size_t i = out.size() - count; i < out.size(); ++i) {
    times.push_back(out[i].wall_time_ns);
    sums.push_back(out[i].checksum);
    maxima.push_back(out[i].max_value);
  }
  BenchRecord median = out.back();
  median.label = label + "/median";
  median.wall_time_ns = median_of(times);
  median.checksum = median_of(sums);
  median.max_value = median_of(maxima);
  out.push_back(median);
}

Context bench_context(ipf_force_path force) {
  Context ctx;
  ctx.set_parallel(false);
  ctx.set_force_path(force);
  return ctx;
}

struct PathVariant {
  const char* name;
  ipf_force_path force;
};
constexpr PathVariant kPathVariants[] = {
    {"sqrt", IPF_FORCE_SQRT}, {"binsearch", IPF_FORCE_BINSEARCH}, {"auto", IPF_FORCE_AUTO}};

void scalar_suite(const BenchOptions& opt, std::vector<BenchRecord>& out) {
  BitSampler sampler(opt.seed);
  const Context ctx = bench_context(IPF_FORCE_AUTO);
  for (const unsigned bits : opt.scalar_bits) {
    for (const char* kind : {"prime", "odd", "random"}) {
      const std::string label = std::string("scalar/") + kind + "/" + std::to_string(bits) + "bit";
      for (unsigned r = 0; r < opt.repeats; ++r) {
        const std::uint64_t v = kind[0] == 'p'   ? sampler.prime(bits)
                                : kind[0] == 'o' ? sampler.odd(bits)
                                                 : sampler.any(bits);
        const std::uint64_t one[] = {v};
        const Timed t = time_call(ctx, one);
        out.push_back({label, 1, v, t.result.decision.kind, t.ns, count_primes(t.result.mask)});
      }
      append_median(out, opt.repeats, label);
    }
  }
}

void array_suite(const BenchOptions& opt, std::vector<BenchRecord>& out) {
  for (const std::uint64_t n : opt.array_sizes) {
    std::vector<std::uint64_t> values(n);
    std::iota(values.begin(), values.end(), std::uint64_t{1});
    for (const PathVariant& variant : kPathVariants) {
      const Context ctx = bench_context(variant.force);
      const std::string label = "array/1:" + std::to_string(n) + "/" + variant.name;
      for (unsigned r = 0; r < opt.repeats; ++r) {
        const Timed t = time_call(ctx, values);
        out.push_back({label, n, n, t.result.decision.kind, t.ns, count_primes(t.result.mask)});
      }
      append_median(out, opt.repeats, label);
    }
  }
}

void crossover_suite(const BenchOptions& opt, std::vector<BenchRecord>& out) {
  std::mt19937_64 rng(opt.seed);
  for (const std::uint64_t count : opt.crossover_counts) {
    for (const unsigned bits : opt.crossover_max_bits) {
      const std::uint64_t max_value = std::uint64_t{1} << bits;
      std::vector<std::uint64_t> values(count);
      std::uniform_int_distribution<std::uint64_t> dist(1, max_value);
      for (auto& v : values) v = dist(rng);
      values.back() = max_value - 1;  // pin the maximum

      const std::string cell =
          "crossover/n=" + std::to_string(count) + "/max=2^" + std::to_string(bits);
      std::uint64_t best_ns = ~std::uint64_t{0};
      BenchRecord winner;
      for (const PathVariant& variant : kPathVariants) {
        const Context ctx = bench_context(variant.force);
        const std::string label = cell + "/" + variant.name;
        for (unsigned r = 0; r < opt.repeats; ++r) {
          const Timed t = time_call(ctx, values);
          out.push_back({label, count, max_value - 1, t.result.decision.kind, t.ns,
                         count_primes(t.result.mask)});
        }
        append_median(out, opt.repeats, label);
        if (variant.force != IPF_FORCE_AUTO && out.back().wall_time_ns < best_ns) {
          best_ns = out.back().wall_time_ns;
          winner = out.back();
        }
      }
      winner.label = cell + "/winner";
      out.push_back(winner);
    }
  }
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchOptions& options) {
  if (options.repeats == 0) throw std::invalid_argument("repeats must be >= 1");
  std::vector<BenchRecord> out;
  switch (options.suite) {
    case Suite::Scalar: scalar_suite(options, out); break;
    case Suite::Array: array_suite(options, out); break;
    case Suite::Crossover: crossover_suite(options, out); break;
  }
  return out;
}

}  // namespace ipf::cli
