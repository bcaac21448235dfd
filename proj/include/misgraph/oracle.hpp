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

#ifndef MISGRAPH_ORACLE_HPP_
#define MISGRAPH_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "misgraph/bigcount.hpp"
#include "misgraph/graph.hpp"

namespace misgraph {

// Exact brute-force counting of independent sets in bipartite graphs.
//
// Every routine enumerates the subsets A of the smaller part S. The vertices
// of the other part T that avoid N(A) form B, and A u B is a maximal
// independent set exactly when A is the set of S-vertices with no neighbour
// in B. Cost is 2^|S| times the number of distinct T-neighbourhoods.

class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  /// Largest smaller-part size the oracle accepts.
  std::size_t max_min_part = 26;
  /// Upper bound on the number of sets enumerate_mis may emit.
  std::uint64_t max_enumerated = 1'000'000;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// One maximal independent set, as sorted indices per part.
struct VertexSet {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;
  friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

struct HValues {
  BigCount h_prime;
  BigCount h_dprime;
  friend bool operator==(const HValues&, const HValues&) = default;
};

/// True when min(|L|, |R|) is within the cap.
bool oracle_feasible(const BipartiteGraph& g, const OracleOptions& options = {});

/// Number of maximal independent sets. The empty graph has one.
BigCount count_mis(const BipartiteGraph& g, const OracleOptions& options = {});

/// Number of independent sets, the empty set included.
BigCount count_is(const BipartiteGraph& g, const OracleOptions& options = {});

/// Calls `visit` once per maximal independent set, in increasing order of
/// the smaller-part subset mask. Throws OracleCapExceeded when the count
/// exceeds options.max_enumerated.
void enumerate_mis(const BipartiteGraph& g, const std::function<void(const VertexSet&)>& visit,
                   const OracleOptions& options = {});
std::vector<VertexSet> enumerate_mis(const BipartiteGraph& g, const OracleOptions& options = {});

/// Maximal independent sets meeting both subsets; 0 if either is empty.
BigCount count_mis_hitting(const BipartiteGraph& g, const VertexSubset& u1, const VertexSubset& u2,
                           const OracleOptions& options = {});

/// h' = iota_m(g - (U1 u U2)),
/// h'' = iota_m(g - U1) + iota_m(g - U2) + iota_m(g + U1 + U2) - 2 h'.
HValues h_values(const BipartiteGraph& g, const VertexSubset& u1, const VertexSubset& u2,
                 const OracleOptions& options = {});

}  // namespace misgraph

#endif  // MISGRAPH_ORACLE_HPP_
