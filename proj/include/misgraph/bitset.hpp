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

#ifndef MISGRAPH_BITSET_HPP_
#define MISGRAPH_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace misgraph {

// Fixed-width bit row. Bits at positions >= size() are always zero.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : size_(bits), words_(word_count(bits), 0) {}

  std::size_t size() const { return size_; }

  void resize(std::size_t bits) {
    words_.resize(word_count(bits), 0);
    size_ = bits;
    trim();
  }

  bool test(std::size_t i) const {
    return i < size_ && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  // Sets bits [first, last).
  void set_range(std::size_t first, std::size_t last) {
    for (std::size_t i = first; i < last; ++i) set(i);
  }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
  }
  bool any() const {
    for (std::uint64_t w : words_) {
      if (w != 0) return true;
    }
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& other) {
    if (other.words_.size() > words_.size()) words_.resize(other.words_.size(), 0);
    for (std::size_t i = 0; i < other.words_.size(); ++i) words_[i] |= other.words_[i];
    if (other.size_ > size_) size_ = other.size_;
    return *this;
  }

  std::span<const std::uint64_t> words() const { return words_; }

  // Low 64 bits, for rows known to fit a single machine word.
  std::uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

  template <class Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        fn(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

  friend bool operator==(const Bitset& a, const Bitset& b) {
    return a.size_ == b.size_ && a.words_ == b.words_;
  }

 private:
  static std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
  void trim() {
    if (size_ % 64 != 0) words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
  }

  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace misgraph

#endif  // MISGRAPH_BITSET_HPP_
