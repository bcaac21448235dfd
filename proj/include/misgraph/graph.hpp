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

#ifndef MISGRAPH_GRAPH_HPP_
#define MISGRAPH_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "misgraph/bitset.hpp"

namespace misgraph {

enum class Side : std::uint8_t { kLeft = 0, kRight = 1 };

constexpr Side opposite(Side side) {
  return side == Side::kLeft ? Side::kRight : Side::kLeft;
}

const char* side_name(Side side);

/// (left index, right index).
using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// A set of vertices taken from one part of a graph. Members are kept
/// sorted and unique.
class VertexSubset {
 public:
  VertexSubset() = default;
  VertexSubset(Side side, std::vector<std::uint32_t> members);

  /// Every vertex of a part with `part_size` vertices.
  static VertexSubset whole(Side side, std::size_t part_size);

  Side side() const { return side_; }
  const std::vector<std::uint32_t>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(std::uint32_t index) const;

  /// Same members shifted by `offset`, possibly moved to another side.
  VertexSubset relocated(Side side, std::uint32_t offset) const;

  friend bool operator==(const VertexSubset&, const VertexSubset&) = default;

 private:
  Side side_ = Side::kLeft;
  std::vector<std::uint32_t> members_;
};

class GraphBuilder;

/// A bipartite graph with parts L = {0..left_size-1} and R = {0..right_size-1}.
///
/// Bipartiteness is structural: edges only ever join a left index to a
/// right index. Adjacency is kept in both orientations as bit rows over the
/// opposite part. Instances are immutable; every edit produces a new graph.
class BipartiteGraph {
 public:
  /// The empty graph (both parts empty).
  BipartiteGraph() = default;

  /// Throws std::invalid_argument on out-of-range or duplicate edges.
  BipartiteGraph(std::size_t left_size, std::size_t right_size, std::span<const Edge> edges);

  std::size_t left_size() const { return left_adj_.size(); }
  std::size_t right_size() const { return right_adj_.size(); }
  std::size_t part_size(Side side) const {
    return side == Side::kLeft ? left_size() : right_size();
  }
  std::size_t vertex_count() const { return left_size() + right_size(); }
  std::size_t edge_count() const;

  bool has_edge(std::uint32_t left, std::uint32_t right) const {
    return left_adj_[left].test(right);
  }
  const Bitset& neighbors(Side side, std::uint32_t index) const {
    return side == Side::kLeft ? left_adj_[index] : right_adj_[index];
  }
  std::size_t degree(Side side, std::uint32_t index) const {
    return neighbors(side, index).count();
  }

  /// Lexicographically sorted edge list.
  std::vector<Edge> edges() const;

  bool has_isolated_vertices() const;

  /// The same graph with the roles of the two parts exchanged.
  BipartiteGraph swapped() const;

  friend bool operator==(const BipartiteGraph&, const BipartiteGraph&) = default;

 private:
  friend class GraphBuilder;

  std::vector<Bitset> left_adj_;
  std::vector<Bitset> right_adj_;
};

/// Incremental construction. Existing vertices are never renumbered; new
/// vertices are appended to the end of their part.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(BipartiteGraph base);

  std::size_t part_size(Side side) const {
    return side == Side::kLeft ? left_.size() : right_.size();
  }

  /// Appends `count` vertices to a part and returns the index of the first.
  std::uint32_t add_vertices(Side side, std::size_t count);

  /// Idempotent.
  void add_edge(std::uint32_t left, std::uint32_t right);

  /// Adds every edge between two vertex sets lying in opposite parts.
  /// Throws std::invalid_argument if both lie in the same part.
  void join(const VertexSubset& a, const VertexSubset& b);

  /// Appends a copy of `other` (its parts exchanged when `swap_parts`).
  /// Returns the offsets of other's left part and of other's right part,
  /// each counted within the part of this builder it landed in.
  std::pair<std::uint32_t, std::uint32_t> append(const BipartiteGraph& other,
                                                 bool swap_parts = false);

  BipartiteGraph build() &&;

 private:
  std::vector<Bitset> left_;
  std::vector<Bitset> right_;
};

/// Throws std::invalid_argument if a member is outside its part.
void validate_subset(const BipartiteGraph& g, const VertexSubset& subset);

// --- structural edits ------------------------------------------------------

/// Left parts concatenated, right parts concatenated; `b` is offset.
BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b);

/// `g` plus `m` disjoint edges.
BipartiteGraph add_matching(const BipartiteGraph& g, std::size_t m);

/// Disjoint union of `g` and `other` (parts exchanged when `swap_other`)
/// plus every edge between `targets` (in g) and `sources` (in other).
/// Rejects subsets that would end up in the same part of the union.
BipartiteGraph complete_join(const BipartiteGraph& g, const VertexSubset& targets,
                             const BipartiteGraph& other, const VertexSubset& sources,
                             bool swap_other = false);

/// Induced subgraph on the vertices not listed in `removed`; survivors keep
/// their relative order.
BipartiteGraph remove_vertices(const BipartiteGraph& g, std::span<const VertexSubset> removed);

// --- builders --------------------------------------------------------------

/// K_{r,r} minus a perfect matching; r >= 2.
BipartiteGraph corona(std::size_t r);
/// K_{r,s}; r, s >= 1.
BipartiteGraph complete_bipartite(std::size_t r, std::size_t s);
/// P_r with vertex k on the left when k is even; r >= 1.
BipartiteGraph path(std::size_t r);
/// K_{m,1}: m left leaves around one right centre; m >= 1.
BipartiteGraph star(std::size_t m);
/// K_1.
BipartiteGraph single_vertex();

}  // namespace misgraph

#endif  // MISGRAPH_GRAPH_HPP_
