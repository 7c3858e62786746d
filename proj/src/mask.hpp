// SPDX-License-Identifier: Apache-2.0
// Copyright (c) 2026 isprime-fast contributors
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ipf {

// One primality flag per input element, in input order. The shape is
// presentation metadata (e.g. rows x cols for a matrix input); its product
// always equals bits.size().
struct PrimalityMask {
  std::vector<std::uint8_t> bits;
  std::vector<std::size_t> shape;

  PrimalityMask() = default;
  explicit PrimalityMask(std::size_t n) : bits(n, 0), shape{n} {}

  std::size_t size() const noexcept { return bits.size(); }
  bool operator[](std::size_t i) const noexcept { return bits[i] != 0; }
  std::size_t count() const noexcept {
    return static_cast<std::size_t>(std::count(bits.begin(), bits.end(), 1));
  }

  friend bool operator==(const PrimalityMask&, const PrimalityMask&) = default;
};

}  // namespace ipf
