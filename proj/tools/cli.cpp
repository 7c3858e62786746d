// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <vector>

#include "bench.hpp"
#include "context.hpp"

namespace ipf::cli {

namespace {

// A bad token on the command line or in an input file.
struct InputError {
  std::string message;
};

struct IoError {
  std::string message;
};

std::uint64_t parse_one(const std::string& token, const std::string& what) {
  const char* raw[] = {token.c_str()};
  std::uint64_t value = 0;
  if (ipf_validate_tokens(raw, 1, &value, nullptr, nullptr) != IPF_OK) {
    throw InputError{"invalid " + what + " '" + token + "': " + ipf_last_error()};
  }
  return value;
}

// A:B or A:B:STEP, inclusive, MATLAB-style (empty when B < A).
std::vector<std::uint64_t> expand_range(const std::string& spec) {
  std::vector<std::string> parts;
  std::stringstream ss(spec);
  for (std::string part; std::getline(ss, part, ':');) parts.push_back(part);
  if (spec.empty() || spec.back() == ':' || (parts.size() != 2 && parts.size() != 3)) {
    throw InputError{"malformed range '" + spec + "' (expected A:B or A:B:STEP)"};
  }
  std::uint64_t first = 0, last = 0, step = 1;
  try {
    first = parse_one(parts[0], "range start");
    last = parse_one(parts[1], "range end");
    if (parts.size() == 3) step = parse_one(parts[2], "range step");
  } catch (const InputError& e) {
    throw InputError{"malformed range '" + spec + "': " + e.message};
  }
  if (step == 0) throw InputError{"malformed range '" + spec + "': step must be >= 1"};

  std::vector<std::uint64_t> values;
  if (last < first) return values;
  values.reserve(static_cast<std::size_t>((last - first) / step + 1));
  for (std::uint64_t v = first;; v += step) {
    values.push_back(v);
    if (last - v < step) break;
  }
  return values;
}

std::vector<std::string> read_tokens(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError{"cannot read '" + path + "'"};
  std::vector<std::string> tokens;
  for (std::string line; std::getline(in, line);) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    tokens.push_back(line.substr(begin, end - begin + 1));
  }
  if (in.bad()) throw IoError{"error reading '" + path + "'"};
  return tokens;
}

std::vector<std::uint64_t> validate_tokens(const std::vector<std::string>& tokens) {
  std::vector<const char*> raw;
  raw.reserve(tokens.size());
  for (const auto& t : tokens) raw.push_back(t.c_str());
  std::vector<std::uint64_t> values(tokens.size());
  std::size_t bad = 0;
  if (ipf_validate_tokens(raw.data(), raw.size(), values.data(), &bad, nullptr) != IPF_OK) {
    throw InputError{ipf_last_error()};
  }
  return values;
}

nlohmann::json decision_json(const ipf_decision& d) {
  return {{"path", ipf_path_name(d.kind)},
          {"element_count", d.element_count},
          {"survivor_count", d.survivor_count},
          {"large_count", d.large_count},
          {"max_value", d.max_value},
          {"formula_value", d.formula_value},
          {"large_regime", d.large_regime != 0},
          {"forced", d.forced != 0},
          {"fell_back", d.fell_back != 0}};
}

// ---- check ----------------------------------------------------------------

struct CheckOptions {
  std::vector<std::string> numbers;
  std::string range;
  std::string file;
  std::string format = "mask";
  std::string force = "auto";
  bool serial = false;
};

int cmd_check(const CheckOptions& opt, std::optional<std::uint64_t> ceiling, std::ostream& out) {
  // Input order: positional numbers, then the range, then the file.
  std::vector<std::uint64_t> values = validate_tokens(opt.numbers);
  if (!opt.range.empty()) {
    const auto expanded = expand_range(opt.range);
    values.insert(values.end(), expanded.begin(), expanded.end());
  }
  if (!opt.file.empty()) {
    const auto from_file = validate_tokens(read_tokens(opt.file));
    values.insert(values.end(), from_file.begin(), from_file.end());
  }

  static const std::map<std::string, ipf_force_path> kForce = {
      {"auto", IPF_FORCE_AUTO}, {"sqrt", IPF_FORCE_SQRT}, {"binsearch", IPF_FORCE_BINSEARCH}};
  Context ctx;
  ctx.set_force_path(kForce.at(opt.force));
  ctx.set_parallel(!opt.serial);
  if (ceiling) ctx.set_sieve_ceiling(*ceiling);
  const Context::Result result = ctx.is_prime(values);

  if (opt.format == "mask") {
    for (std::size_t i = 0; i < result.mask.size(); ++i) {
      out << (i ? " " : "") << static_cast<int>(result.mask[i]);
    }
    out << '\n';
  } else if (opt.format == "csv") {
    for (std::size_t i = 0; i < values.size(); ++i) {
      out << values[i] << ',' << static_cast<int>(result.mask[i]) << '\n';
    }
  } else {
    nlohmann::json mask = nlohmann::json::array();
    for (const auto bit : result.mask) mask.push_back(bit != 0);
    const nlohmann::json doc = {{"values", values},
                                {"mask", mask},
                                {"prime_count", std::count(result.mask.begin(),
                                                           result.mask.end(), 1)},
                                {"decision", decision_json(result.decision)}};
    out << doc.dump() << '\n';
  }
  return kExitOk;
}

// ---- divcount -------------------------------------------------------------

void divcount_row(std::ostream& out, std::uint64_t n) {
  std::uint64_t divisions = 0;
  check(ipf_division_count(n, &divisions));
  // Ratio truncated to one decimal place, as in the published table.
  const auto tenths = static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(divisions) * 10) / n);
  out << n << ',' << divisions << ',' << tenths / 10 << '.' << tenths % 10 << '\n';
}

int cmd_divcount(const std::string& n_token, bool table, bool header, std::ostream& out) {
  if (table == !n_token.empty()) {
    throw InputError{"divcount: give exactly one of --n N or --table"};
  }
  if (header) out << "N,divisions,divisions_per_N\n";
  if (table) {
    std::uint64_t n = 10;
    for (int row = 0; row < 8; ++row, n *= 10) divcount_row(out, n);
    return kExitOk;
  }
  const std::uint64_t n = parse_one(n_token, "N");
  if (n == 0) throw InputError{"divcount: N must be >= 1"};
  divcount_row(out, n);
  return kExitOk;
}

// ---- bench ----------------------------------------------------------------

int cmd_bench(const std::string& suite, unsigned repeats, std::uint64_t seed,
              const std::string& out_path, std::ostream& out) {
  static const std::map<std::string, Suite> kSuites = {
      {"scalar", Suite::Scalar}, {"array", Suite::Array}, {"crossover", Suite::Crossover}};
  BenchOptions options;
  options.suite = kSuites.at(suite);
  options.repeats = repeats;
  options.seed = seed;

  std::ofstream file;
  if (!out_path.empty()) {
    // Fail before spending time on measurements.
    file.open(out_path);
    if (!file) throw IoError{"cannot write '" + out_path + "'"};
  }
  const std::vector<BenchRecord> records = run_bench(options);
  write_csv(out_path.empty() ? out : file, records);
  if (!out_path.empty()) {
    file.close();
    if (!file) throw IoError{"error writing '" + out_path + "'"};
  }
  return kExitOk;
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fast primality testing for unsigned 64-bit integers", "isprime_fast_cli"};
  app.require_subcommand(1);

  std::optional<std::uint64_t> ceiling;
  app.add_option("--sieve-ceiling", ceiling,
                 "Largest limit the binary-search sieve may allocate (default 2^32)")
      ->envname("IPF_SIEVE_CEILING");

  CheckOptions check_opt;
  auto* check_cmd = app.add_subcommand("check", "Report primality of each input value");
  check_cmd->add_option("numbers", check_opt.numbers, "Values to test");
  check_cmd->add_option("--range", check_opt.range, "Inclusive range A:B[:STEP]");
  check_cmd->add_option("--file", check_opt.file, "One integer per line; '#' starts a comment");
  check_cmd->add_option("--format", check_opt.format, "Output format")
      ->check(CLI::IsMember({"mask", "csv", "json"}));
  check_cmd->add_option("--force-path", check_opt.force, "Array strategy")
      ->check(CLI::IsMember({"auto", "sqrt", "binsearch"}));
  check_cmd->add_flag("--serial", check_opt.serial, "Disable parallel evaluation");

  std::string div_n;
  bool div_table = false;
  bool div_header = false;
  auto* div_cmd = app.add_subcommand("divcount", "Trial-division counts for 1:N");
  div_cmd->add_option("--n", div_n, "Sequence length N");
  div_cmd->add_flag("--table", div_table, "Emit rows for N = 10, 100, ..., 10^8");
  div_cmd->add_flag("--header", div_header, "Print a CSV header line first");

  std::string suite = "array";
  unsigned repeats = 5;
  std::uint64_t seed = 42;
  std::string bench_out;
  auto* bench_cmd = app.add_subcommand("bench", "Time the evaluation paths; CSV output");
  bench_cmd->add_option("--suite", suite, "scalar | array | crossover")
      ->check(CLI::IsMember({"scalar", "array", "crossover"}));
  bench_cmd->add_option("--repeats", repeats, "Timed runs per configuration")
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", seed, "Seed for generated inputs");
  bench_cmd->add_option("--out", bench_out, "CSV destination (default stdout)");

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e, out, err);
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  }

  try {
    if (*check_cmd) return cmd_check(check_opt, ceiling, out);
    if (*div_cmd) return cmd_divcount(div_n, div_table, div_header, out);
    return cmd_bench(suite, repeats, seed, bench_out, out);
  } catch (const InputError& e) {
    err << "error: " << e.message << '\n';
    return kExitInputError;
  } catch (const IoError& e) {
    err << "error: " << e.message << '\n';
    return kExitIoError;
  } catch (const LibraryError& e) {
    err << "error: " << e.what() << '\n';
    return e.status() == IPF_ERR_INPUT_DOMAIN ? kExitInputError : 1;
  }
}

}  // namespace ipf::cli
