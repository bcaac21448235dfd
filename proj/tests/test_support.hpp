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

// Shared helpers for the test binaries: a deliberately naive reference
// counter, a pivoting counter for graphs past the oracle cap, and random
// graph generators.

#ifndef MISGRAPH_TESTS_TEST_SUPPORT_HPP_
#define MISGRAPH_TESTS_TEST_SUPPORT_HPP_

#include <bitset>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "misgraph/graph.hpp"

namespace misgraph::testing {

// Flat adjacency over all nu vertices: left i is vertex i, right j is
// vertex L + j.
inline std::vector<std::uint32_t> flat_adjacency(const BipartiteGraph& g) {
  const std::size_t nu = g.vertex_count();
  if (nu > 24) throw std::invalid_argument("naive counter is limited to 24 vertices");
  std::vector<std::uint32_t> adj(nu, 0);
  for (const auto& [l, r] : g.edges()) {
    const std::size_t rv = g.left_size() + r;
    adj[l] |= 1U << rv;
    adj[rv] |= 1U << l;
  }
  return adj;
}

// Checks every one of the 2^nu vertex sets directly.
struct NaiveCounts {
  std::uint64_t independent = 0;
  std::uint64_t maximal = 0;
};

inline NaiveCounts naive_counts(const BipartiteGraph& g) {
  const auto adj = flat_adjacency(g);
  const std::size_t nu = adj.size();
  NaiveCounts out;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << nu); ++set) {
    bool independent = true;
    std::uint32_t blocked = 0;
    for (std::size_t v = 0; v < nu; ++v) {
      if (!((set >> v) & 1U)) continue;
      if (adj[v] & set) {
        independent = false;
        break;
      }
      blocked |= adj[v];
    }
    if (!independent) continue;
    ++out.independent;
    bool maximal = true;
    for (std::size_t v = 0; v < nu && maximal; ++v) {
      if (!((set >> v) & 1U) && !((blocked >> v) & 1U)) maximal = false;
    }
    if (maximal) ++out.maximal;
  }
  return out;
}

inline std::uint64_t naive_mis(const BipartiteGraph& g) { return naive_counts(g).maximal; }

// Naive count of maximal independent sets meeting both vertex sets,
// given as masks over each part.
inline std::uint64_t naive_mis_hitting(const BipartiteGraph& g, std::uint32_t left_mask,
                                       std::uint32_t right_mask) {
  const auto adj = flat_adjacency(g);
  const std::size_t nu = adj.size();
  const std::uint32_t target_l = left_mask;
  const std::uint32_t target_r = right_mask << g.left_size();
  std::uint64_t count = 0;
  for (std::uint64_t set = 0; set < (std::uint64_t{1} << nu); ++set) {
    bool ok = true;
    std::uint32_t blocked = 0;
    for (std::size_t v = 0; v < nu && ok; ++v) {
      if ((set >> v) & 1U) {
        if (adj[v] & set) ok = false;
        blocked |= adj[v];
      }
    }
    if (!ok) continue;
    for (std::size_t v = 0; v < nu && ok; ++v) {
      if (!((set >> v) & 1U) && !((blocked >> v) & 1U)) ok = false;
    }
    if (ok && (set & target_l) && (set & target_r)) ++count;
  }
  return count;
}

// Counts maximal independent sets as maximal cliques of the complement
// with Tomita-style pivoting. Cost follows the number of sets rather than
// the part sizes, so it reaches graphs the subset oracle refuses.
class PivotCounter {
 public:
  static constexpr std::size_t kMaxVertices = 256;
  using Set = std::bitset<kMaxVertices>;

  explicit PivotCounter(const BipartiteGraph& g) : nu_(g.vertex_count()), compat_(nu_) {
    if (nu_ > kMaxVertices) throw std::invalid_argument("pivot counter is limited to 256 vertices");
    Set all;
    for (std::size_t v = 0; v < nu_; ++v) all.set(v);
    for (std::size_t v = 0; v < nu_; ++v) {
      compat_[v] = all;
      compat_[v].reset(v);
    }
    for (const auto& [l, r] : g.edges()) {
      const std::size_t rv = g.left_size() + r;
      compat_[l].reset(rv);
      compat_[rv].reset(l);
    }
  }

  std::uint64_t count() const {
    Set p;
    for (std::size_t v = 0; v < nu_; ++v) p.set(v);
    return expand(p, Set());
  }

 private:
  std::uint64_t expand(Set p, Set x) const {
    if (p.none()) return x.none() ? 1 : 0;
    const Set px = p | x;
    std::size_t pivot = 0;
    std::size_t best = 0;
    bool first = true;
    for (std::size_t u = 0; u < nu_; ++u) {
      if (!px.test(u)) continue;
      const std::size_t c = (p & compat_[u]).count();
      if (first || c > best) {
        pivot = u;
        best = c;
        first = false;
      }
    }
    const Set branch = p & ~compat_[pivot];
    std::uint64_t total = 0;
    for (std::size_t v = 0; v < nu_; ++v) {
      if (!branch.test(v)) continue;
      total += expand(p & compat_[v], x & compat_[v]);
      p.reset(v);
      x.set(v);
    }
    return total;
  }

  std::size_t nu_;
  std::vector<Set> compat_;
};

inline std::uint64_t pivot_count_mis(const BipartiteGraph& g) { return PivotCounter(g).count(); }

// Each possible edge present with probability `density`.
inline BipartiteGraph random_graph(std::mt19937_64& rng, std::size_t left, std::size_t right,
                                   double density) {
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (std::uint32_t l = 0; l < left; ++l) {
    for (std::uint32_t r = 0; r < right; ++r) {
      if (coin(rng)) edges.emplace_back(l, r);
    }
  }
  return BipartiteGraph(left, right, edges);
}

// Random graph without isolated vertices: every vertex gets at least one
// edge on top of the random ones.
inline BipartiteGraph random_connected_ish(std::mt19937_64& rng, std::size_t left, std::size_t right,
                                           double density) {
  if (left == 0 || right == 0) throw std::invalid_argument("both parts must be non-empty");
  std::bernoulli_distribution coin(density);
  std::uniform_int_distribution<std::uint32_t> pick_l(0, static_cast<std::uint32_t>(left - 1));
  std::uniform_int_distribution<std::uint32_t> pick_r(0, static_cast<std::uint32_t>(right - 1));
  std::vector<std::vector<bool>> m(left, std::vector<bool>(right, false));
  for (auto& row : m) {
    for (std::size_t r = 0; r < right; ++r) row[r] = coin(rng);
  }
  for (std::size_t l = 0; l < left; ++l) m[l][pick_r(rng)] = true;
  for (std::size_t r = 0; r < right; ++r) m[pick_l(rng)][r] = true;
  std::vector<Edge> edges;
  for (std::uint32_t l = 0; l < left; ++l) {
    for (std::uint32_t r = 0; r < right; ++r) {
      if (m[l][r]) edges.emplace_back(l, r);
    }
  }
  return BipartiteGraph(left, right, edges);
}

inline VertexSubset random_subset(std::mt19937_64& rng, Side side, std::size_t size) {
  std::bernoulli_distribution coin(0.4);
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; i < size; ++i) {
    if (coin(rng)) members.push_back(i);
  }
  return VertexSubset(side, std::move(members));
}

inline std::uint32_t subset_mask(const VertexSubset& s) {
  std::uint32_t m = 0;
  for (auto v : s.members()) m |= 1U << v;
  return m;
}

}  // namespace misgraph::testing

#endif  // MISGRAPH_TESTS_TEST_SUPPORT_HPP_
