// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <string>

namespace cubemap {

/// Bit string of at most 64 positions; bit 0 is the least significant digit
/// and the first one cut by contraction.
using Label = std::uint64_t;

inline constexpr unsigned kLabelCapacity = 64;

constexpr Label low_mask(unsigned width) {
  return width >= 64 ? ~Label{0} : (Label{1} << width) - 1;
}

inline int hamming(Label a, Label b, Label mask = ~Label{0}) {
  return std::popcount((a ^ b) & mask);
}

/// Moves bit j of `x` to position dest[j]. Bits at or above dest.size() must
/// be zero.
inline Label permute_bits(Label x, std::span<const std::uint8_t> dest) {
  Label out = 0;
  while (x != 0) {
    const int j = std::countr_zero(x);
    out |= Label{1} << dest[static_cast<std::size_t>(j)];
    x &= x - 1;
  }
  return out;
}

/// Lower-case hex, most significant nibble first, zero-padded to
/// ceil(width / 4) digits (at least one digit).
std::string to_hex(Label value, unsigned width);
Label from_hex(const std::string &text);

} // namespace cubemap
