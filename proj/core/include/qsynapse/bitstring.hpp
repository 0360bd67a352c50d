// Copyright 2026 The qsynapse developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qsynapse {

/// Fixed-size bit vector used for classical qubit assignments. Bit i of a
/// BitString holds the value of qubit i; to_string() prints the highest
/// qubit first, matching the measured-bitstring display convention.
class BitString {
 public:
  BitString() = default;
  explicit BitString(std::uint32_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::uint32_t size() const noexcept { return size_; }

  bool get(std::uint32_t i) const {
    return (words_[i >> 6] >> (i & 63)) & 1U;
  }

  void set(std::uint32_t i, bool value) {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
      words_[i >> 6] |= mask;
    } else {
      words_[i >> 6] &= ~mask;
    }
  }

  void flip(std::uint32_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  /// Reads bits [offset, offset+width) as a little-endian integer
  /// (bit `offset` is the least significant). width must be <= 64.
  std::uint64_t slice_value(std::uint32_t offset, std::uint32_t width) const {
    std::uint64_t value = 0;
    for (std::uint32_t i = 0; i < width; ++i) {
      value |= std::uint64_t{get(offset + i)} << i;
    }
    return value;
  }

  /// Writes the low `width` bits of value into [offset, offset+width).
  void set_slice(std::uint32_t offset, std::uint32_t width,
                 std::uint64_t value) {
    for (std::uint32_t i = 0; i < width; ++i) {
      set(offset + i, (value >> i) & 1U);
    }
  }

  /// Highest qubit first, e.g. a 3-bit string with qubit 0 set is "001".
  std::string to_string() const {
    std::string out(size_, '0');
    for (std::uint32_t i = 0; i < size_; ++i) {
      if (get(i)) out[size_ - 1 - i] = '1';
    }
    return out;
  }

  bool operator==(const BitString&) const = default;

 private:
  std::uint32_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace qsynapse
