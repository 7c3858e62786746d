// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#include "modmath.hpp"

#include <algorithm>
#include <string>

#include "errors.hpp"

namespace ipf {

namespace detail {

std::uint64_t mul_shift_add(std::uint64_t a, std::uint64_t b,
                            std::uint64_t m) noexcept {
  // Loop over the narrower operand; the product is symmetric.
  if (b > a) std::swap(a, b);
  std::uint64_t c = 0;
  while (b > 0) {
    if (b & 1) c = add_reduced(c, a, m);
    a = add_reduced(a, a, m);
    b >>= 1;
  }
  return c;
}

std::uint64_t mul_reduced(std::uint64_t a, std::uint64_t b,
                          std::uint64_t m) noexcept {
  std::uint64_t product;
  if (!__builtin_mul_overflow(a, b, &product)) return product % m;

  if (a == b) {
    // a^2 == (m - a)^2 (mod m); square whichever side is smaller.
    const std::uint64_t small = std::min(a, m - a);
    if (small < (std::uint64_t{1} << 32)) return (small * small) % m;
    return mul_shift_add(a, b, m);
  }

  if (a == 2) return add_reduced(b, b, m);

  return mul_shift_add(a, b, m);
}

std::uint64_t pow_reduced(std::uint64_t base, std::uint64_t e,
                          std::uint64_t m) noexcept {
  std::uint64_t result = 1 % m;
  while (e > 0) {
    if (e & 1) result = mul_reduced(result, base, m);
    e >>= 1;
    if (e > 0) base = mul_reduced(base, base, m);
  }
  return result;
}

}  // namespace detail

namespace {

void require_reduced(const char* op, std::uint64_t a, std::uint64_t b,
                     std::uint64_t m) {
  if (m == 0) throw ContractError(std::string(op) + ": modulus must be >= 1");
  if (a >= m || b >= m) {
    throw ContractError(std::string(op) + ": operands " + std::to_string(a) +
                        ", " + std::to_string(b) +
                        " are not reduced modulo " + std::to_string(m));
  }
}

}  // namespace

std::uint64_t mod_add(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  require_reduced("mod_add", a, b, m);
  return detail::add_reduced(a, b, m);
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  require_reduced("mod_mul", a, b, m);
  return detail::mul_reduced(a, b, m);
}

std::uint64_t mod_exp(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  if (m == 0) throw ContractError("mod_exp: modulus must be >= 1");
  return detail::pow_reduced(base % m, e, m);
}

Residue::Residue(std::uint64_t value, std::uint64_t modulus)
    : value_(value), modulus_(modulus) {
  if (modulus == 0) throw ContractError("Residue: modulus must be >= 1");
  if (value >= modulus) {
    throw ContractError("Residue: value " + std::to_string(value) +
                        " is not reduced modulo " + std::to_string(modulus));
  }
}

namespace {

void require_same_modulus(const Residue& lhs, const Residue& rhs) {
  if (lhs.modulus() != rhs.modulus()) {
    throw ContractError("Residue: mismatched moduli " +
                        std::to_string(lhs.modulus()) + " and " +
                        std::to_string(rhs.modulus()));
  }
}

}  // namespace

Residue operator+(const Residue& lhs, const Residue& rhs) {
  require_same_modulus(lhs, rhs);
  return Residue(Residue::Unchecked{},
                 detail::add_reduced(lhs.value_, rhs.value_, lhs.modulus_),
                 lhs.modulus_);
}

Residue operator*(const Residue& lhs, const Residue& rhs) {
  require_same_modulus(lhs, rhs);
  return Residue(Residue::Unchecked{},
                 detail::mul_reduced(lhs.value_, rhs.value_, lhs.modulus_),
                 lhs.modulus_);
}

Residue Residue::pow(std::uint64_t e) const {
  return Residue(Unchecked{}, detail::pow_reduced(value_, e, modulus_),
                 modulus_);
}

}  // namespace ipf
