// Copyright 2026 The misgraph Authors
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

#include "misgraph/bigcount.hpp"

#include <cmath>
#include <stdexcept>

namespace misgraph {

BigCount binary_value(std::string_view bits) {
  BigCount value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("binary word contains '" + std::string(1, c) + "'");
    }
    value <<= 1;
    if (c == '1') value |= 1;
  }
  return value;
}

BigCount parse_count(std::string_view text) {
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    return binary_value(text.substr(2));
  }
  if (text.empty()) throw std::invalid_argument("empty number");
  BigCount value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw std::invalid_argument("not a decimal natural: '" + std::string(text) + "'");
    }
    value *= 10;
    value += c - '0';
  }
  return value;
}

std::string to_decimal(const BigCount& value) { return value.str(); }

std::string to_binary(const BigCount& value) {
  const std::size_t n = bit_length(value);
  if (n == 0) return "0";
  std::string out(n, '0');
  for (std::size_t i = 0; i < n; ++i) {
    if (boost::multiprecision::bit_test(value, n - 1 - i)) out[i] = '1';
  }
  return out;
}

std::size_t bit_length(const BigCount& value) {
  if (value.is_zero()) return 0;
  return boost::multiprecision::msb(value) + 1;
}

BigCount pow2(std::size_t exponent) {
  BigCount value = 1;
  value <<= exponent;
  return value;
}

double log2_of(const BigCount& value) {
  if (value <= 0) throw std::domain_error("log2 of a non-positive count");
  const std::size_t n = bit_length(value);
  if (n <= 53) return std::log2(value.convert_to<double>());
  // Keep the top 53 bits; the discarded tail only moves the result below ulp.
  const std::size_t shift = n - 53;
  const BigCount top = value >> shift;
  return std::log2(top.convert_to<double>()) + static_cast<double>(shift);
}

}  // namespace misgraph
