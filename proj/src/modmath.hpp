// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
//
// Modular add / multiply / exponentiate over the full unsigned 64-bit range.
// No intermediate ever needs more than 64 bits: sums that would overflow are
// rewritten as a - (m - b), and products that would overflow fall back to a
// shift-and-add loop built on that same addition.
#pragma once

#include <cstdint>

namespace ipf {

namespace detail {

// (a + b) mod m for a, b < m. Unchecked.
constexpr std::uint64_t add_reduced(std::uint64_t a, std::uint64_t b,
                                    std::uint64_t m) noexcept {
  // a + b >= m  <=>  a >= m - b, and m - b cannot wrap because b < m.
  if (a >= m - b) return a - (m - b);
  return a + b;
}

// Overflow-safe shift-and-add: every doubling and every accumulation goes
// through add_reduced. Requires a, b < m.
std::uint64_t mul_shift_add(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) noexcept;

// (a * b) mod m for a, b < m. Unchecked; dispatches on the product fitting
// in 64 bits, squaring, doubling, then the general loop.
std::uint64_t mul_reduced(std::uint64_t a, std::uint64_t b,
                          std::uint64_t m) noexcept;

// base^e mod m for base < m, m >= 1. Unchecked.
std::uint64_t pow_reduced(std::uint64_t base, std::uint64_t e,
                          std::uint64_t m) noexcept;

}  // namespace detail

// Checked entry points. Throw ContractError unless m >= 1 and the residue
// arguments are already reduced (a < m, b < m).
std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);

// The base is reduced mod m first; only m == 0 is rejected.
std::uint64_t mod_exp(std::uint64_t base, std::uint64_t e, std::uint64_t m);

/// A value paired with its modulus, value < modulus and modulus >= 1.
class Residue {
 public:
  Residue(std::uint64_t value, std::uint64_t modulus);

  std::uint64_t value() const noexcept { return value_; }
  std::uint64_t modulus() const noexcept { return modulus_; }

  // Operands must share a modulus.
  friend Residue operator+(const Residue& lhs, const Residue& rhs);
  friend Residue operator*(const Residue& lhs, const Residue& rhs);
  Residue pow(std::uint64_t e) const;

  friend bool operator==(const Residue&, const Residue&) = default;

 private:
  struct Unchecked {};
  Residue(Unchecked, std::uint64_t value, std::uint64_t modulus) noexcept
      : value_(value), modulus_(modulus) {}

  std::uint64_t value_;
  std::uint64_t modulus_;
};

}  // namespace ipf
