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

#ifndef MISGRAPH_BIGCOUNT_HPP_
#define MISGRAPH_BIGCOUNT_HPP_

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace misgraph {

/// Exact natural number used for every (maximal) independent set count.
using BigCount = boost::multiprecision::cpp_int;

/// Parses a decimal string, or a binary string with a "0b" prefix.
/// Throws std::invalid_argument on anything else (signs, blanks, empty).
BigCount parse_count(std::string_view text);

std::string to_decimal(const BigCount& value);

/// Binary digits without prefix; "0" for zero.
std::string to_binary(const BigCount& value);

/// Value of a {0,1} word; leading zeros allowed. Throws on other characters.
BigCount binary_value(std::string_view bits);

/// Number of significant bits; 0 for zero.
std::size_t bit_length(const BigCount& value);

BigCount pow2(std::size_t exponent);

/// log2 of a positive value, accurate to double precision for any size.
double log2_of(const BigCount& value);

}  // namespace misgraph

#endif  // MISGRAPH_BIGCOUNT_HPP_
