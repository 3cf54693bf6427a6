// Copyright Contributors to the cubemap project
// SPDX-License-Identifier: Apache-2.0
#include "cubemap/bits.hpp"

#include <charconv>

#include "cubemap/errors.hpp"

namespace cubemap {

std::string to_hex(Label value, unsigned width) {
  const unsigned digits = width == 0 ? 1 : (width + 3) / 4;
  std::string out(digits, '0');
  for (unsigned i = 0; i < digits; ++i) {
    out[digits - 1 - i] = "0123456789abcdef"[(value >> (4 * i)) & 0xF];
  }
  return out;
}

Label from_hex(const std::string &text) {
  Label value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value, 16);
  if (text.empty() || text.size() > 16 || ec != std::errc() || ptr != text.data() + text.size()) {
    throw ParseError("bad hex label '" + text + "'");
  }
  return value;
}

} // namespace cubemap
