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

#ifndef MISGRAPH_GADGET_SEARCH_HPP_
#define MISGRAPH_GADGET_SEARCH_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "misgraph/gadgets.hpp"

namespace misgraph {

inline constexpr std::size_t kMaxSearchVertices = 14;

class SearchGuardExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SearchOptions {
  std::size_t max_vertices = 0;
  /// Largest allowed part; 0 means no limit beyond max_vertices.
  std::size_t max_part = 0;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Streams every bipartite graph without isolated vertices on at most
/// max_vertices vertices (|L| <= |R|, one representative per class under
/// permutations within each part), once per inequivalent choice of marks
/// U1 in L and U2 in R, with oracle h-values.
///
/// Order is deterministic: by vertex count, then edge count, then
/// canonical matrix, then marks. Throws SearchGuardExceeded above
/// kMaxSearchVertices. Large bounds are slow: the row-multiset
/// enumeration grows roughly like 2^(|L| |R|) / |L|!.
void enumerate_marked_gadgets(const SearchOptions& options,
                              const std::function<void(const MarkedGadget&)>& visit);
std::vector<MarkedGadget> enumerate_marked_gadgets(const SearchOptions& options);

/// Covering families drawn from `pool`, sorted by gamma ascending (ties by
/// size). Each family covers every integer above its n0 <= n0_max with
/// k >= 2, certified modulo lcm(h') and checked exhaustively on
/// (n0, 18 n0_max]. Per distinct (h', h'') only the smallest gadget is kept;
/// families are gamma-ordered prefixes of the pool with redundant members
/// pruned, worst gamma first.
std::vector<GadgetFamily> find_covering_families(const std::vector<MarkedGadget>& pool,
                                                 std::uint64_t n0_max);

}  // namespace misgraph

#endif  // MISGRAPH_GADGET_SEARCH_HPP_
