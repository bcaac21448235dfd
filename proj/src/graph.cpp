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

#include "misgraph/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace misgraph {

const char* side_name(Side side) { return side == Side::kLeft ? "left" : "right"; }

// --- VertexSubset ----------------------------------------------------------

VertexSubset::VertexSubset(Side side, std::vector<std::uint32_t> members)
    : side_(side), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSubset VertexSubset::whole(Side side, std::size_t part_size) {
  std::vector<std::uint32_t> members(part_size);
  for (std::size_t i = 0; i < part_size; ++i) members[i] = static_cast<std::uint32_t>(i);
  return VertexSubset(side, std::move(members));
}

bool VertexSubset::contains(std::uint32_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

VertexSubset VertexSubset::relocated(Side side, std::uint32_t offset) const {
  std::vector<std::uint32_t> moved(members_);
  for (auto& m : moved) m += offset;
  return VertexSubset(side, std::move(moved));
}

// --- BipartiteGraph --------------------------------------------------------

BipartiteGraph::BipartiteGraph(std::size_t left_size, std::size_t right_size,
                               std::span<const Edge> edges)
    : left_adj_(left_size, Bitset(right_size)), right_adj_(right_size, Bitset(left_size)) {
  for (const auto& [l, r] : edges) {
    if (l >= left_size || r >= right_size) {
      throw std::invalid_argument("edge (" + std::to_string(l) + "," + std::to_string(r) +
                                  ") outside parts of sizes " + std::to_string(left_size) +
                                  "/" + std::to_string(right_size));
    }
    if (left_adj_[l].test(r)) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(l) + "," +
                                  std::to_string(r) + ")");
    }
    left_adj_[l].set(r);
    right_adj_[r].set(l);
  }
}

std::size_t BipartiteGraph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : left_adj_) total += row.count();
  return total;
}

std::vector<Edge> BipartiteGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (std::uint32_t l = 0; l < left_adj_.size(); ++l) {
    left_adj_[l].for_each([&](std::size_t r) { out.emplace_back(l, static_cast<std::uint32_t>(r)); });
  }
  return out;
}

bool BipartiteGraph::has_isolated_vertices() const {
  auto empty = [](const Bitset& row) { return row.none(); };
  return std::any_of(left_adj_.begin(), left_adj_.end(), empty) ||
         std::any_of(right_adj_.begin(), right_adj_.end(), empty);
}

BipartiteGraph BipartiteGraph::swapped() const {
  BipartiteGraph out;
  out.left_adj_ = right_adj_;
  out.right_adj_ = left_adj_;
  return out;
}

// --- GraphBuilder ----------------------------------------------------------

GraphBuilder::GraphBuilder(BipartiteGraph base)
    : left_(std::move(base.left_adj_)), right_(std::move(base.right_adj_)) {}

std::uint32_t GraphBuilder::add_vertices(Side side, std::size_t count) {
  auto& part = side == Side::kLeft ? left_ : right_;
  const auto first = static_cast<std::uint32_t>(part.size());
  part.resize(part.size() + count);
  return first;
}

void GraphBuilder::add_edge(std::uint32_t left, std::uint32_t right) {
  if (left >= left_.size() || right >= right_.size()) {
    throw std::invalid_argument("builder edge outside current parts");
  }
  Bitset& lrow = left_[left];
  if (lrow.size() <= right) lrow.resize(right_.size());
  Bitset& rrow = right_[right];
  if (rrow.size() <= left) rrow.resize(left_.size());
  lrow.set(right);
  rrow.set(left);
}

void GraphBuilder::join(const VertexSubset& a, const VertexSubset& b) {
  if (a.empty() || b.empty()) return;
  if (a.side() == b.side()) {
    throw std::invalid_argument(std::string("complete join inside the ") + side_name(a.side()) +
                                " part would break bipartiteness");
  }
  const VertexSubset& lefts = a.side() == Side::kLeft ? a : b;
  const VertexSubset& rights = a.side() == Side::kLeft ? b : a;
  for (std::uint32_t l : lefts.members()) {
    for (std::uint32_t r : rights.members()) add_edge(l, r);
  }
}

std::pair<std::uint32_t, std::uint32_t> GraphBuilder::append(const BipartiteGraph& other,
                                                             bool swap_parts) {
  const Side other_left_to = swap_parts ? Side::kRight : Side::kLeft;
  const std::uint32_t left_at = add_vertices(other_left_to, other.left_size());
  const std::uint32_t right_at = add_vertices(opposite(other_left_to), other.right_size());
  for (std::uint32_t l = 0; l < other.left_size(); ++l) {
    other.left_adj_[l].for_each([&](std::size_t r) {
      const auto rr = static_cast<std::uint32_t>(r);
      if (swap_parts) {
        add_edge(right_at + rr, left_at + l);
      } else {
        add_edge(left_at + l, right_at + rr);
      }
    });
  }
  return {left_at, right_at};
}

BipartiteGraph GraphBuilder::build() && {
  for (auto& row : left_) {
    if (row.size() != right_.size()) row.resize(right_.size());
  }
  for (auto& row : right_) {
    if (row.size() != left_.size()) row.resize(left_.size());
  }
  BipartiteGraph g;
  g.left_adj_ = std::move(left_);
  g.right_adj_ = std::move(right_);
  return g;
}

void validate_subset(const BipartiteGraph& g, const VertexSubset& subset) {
  const std::size_t n = g.part_size(subset.side());
  if (!subset.empty() && subset.members().back() >= n) {
    throw std::invalid_argument(std::string("vertex subset member ") +
                                std::to_string(subset.members().back()) + " outside the " +
                                side_name(subset.side()) + " part of size " + std::to_string(n));
  }
}

// --- structural edits ------------------------------------------------------

BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  GraphBuilder builder(a);
  builder.append(b);
  return std::move(builder).build();
}

BipartiteGraph add_matching(const BipartiteGraph& g, std::size_t m) {
  GraphBuilder builder(g);
  const std::uint32_t l0 = builder.add_vertices(Side::kLeft, m);
  const std::uint32_t r0 = builder.add_vertices(Side::kRight, m);
  for (std::uint32_t i = 0; i < m; ++i) builder.add_edge(l0 + i, r0 + i);
  return std::move(builder).build();
}

BipartiteGraph complete_join(const BipartiteGraph& g, const VertexSubset& targets,
                             const BipartiteGraph& other, const VertexSubset& sources,
                             bool swap_other) {
  validate_subset(g, targets);
  validate_subset(other, sources);
  GraphBuilder builder(g);
  const auto [left_at, right_at] = builder.append(other, swap_other);
  Side placed = sources.side();
  if (swap_other) placed = opposite(placed);
  const std::uint32_t offset = sources.side() == Side::kLeft ? left_at : right_at;
  if (!targets.empty() && !sources.empty() && placed == targets.side()) {
    throw std::invalid_argument("complete_join: both subsets land in the same part");
  }
  builder.join(targets, sources.relocated(placed, offset));
  return std::move(builder).build();
}

BipartiteGraph remove_vertices(const BipartiteGraph& g, std::span<const VertexSubset> removed) {
  std::vector<bool> drop_left(g.left_size(), false);
  std::vector<bool> drop_right(g.right_size(), false);
  for (const auto& subset : removed) {
    validate_subset(g, subset);
    auto& drop = subset.side() == Side::kLeft ? drop_left : drop_right;
    for (auto m : subset.members()) drop[m] = true;
  }
  std::vector<std::int64_t> new_right(g.right_size(), -1);
  std::uint32_t kept_right = 0;
  for (std::uint32_t r = 0; r < g.right_size(); ++r) {
    if (!drop_right[r]) new_right[r] = kept_right++;
  }
  std::vector<Edge> edges;
  std::uint32_t kept_left = 0;
  for (std::uint32_t l = 0; l < g.left_size(); ++l) {
    if (drop_left[l]) continue;
    g.neighbors(Side::kLeft, l).for_each([&](std::size_t r) {
      if (new_right[r] >= 0) edges.emplace_back(kept_left, static_cast<std::uint32_t>(new_right[r]));
    });
    ++kept_left;
  }
  return BipartiteGraph(kept_left, kept_right, edges);
}

// --- builders --------------------------------------------------------------

BipartiteGraph corona(std::size_t r) {
  if (r < 2) throw std::invalid_argument("corona(r) needs r >= 2");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = 0; j < r; ++j) {
      if (i != j) edges.emplace_back(i, j);
    }
  }
  return BipartiteGraph(r, r, edges);
}

BipartiteGraph complete_bipartite(std::size_t r, std::size_t s) {
  if (r < 1 || s < 1) throw std::invalid_argument("complete_bipartite needs both parts >= 1");
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < r; ++i) {
    for (std::uint32_t j = 0; j < s; ++j) edges.emplace_back(i, j);
  }
  return BipartiteGraph(r, s, edges);
}

BipartiteGraph path(std::size_t r) {
  if (r < 1) throw std::invalid_argument("path(r) needs r >= 1");
  // Vertex k sits at index k/2 of its part.
  std::vector<Edge> edges;
  for (std::size_t k = 0; k + 1 < r; ++k) {
    const auto a = static_cast<std::uint32_t>(k / 2);
    const auto b = static_cast<std::uint32_t>((k + 1) / 2);
    if (k % 2 == 0) {
      edges.emplace_back(a, b);
    } else {
      edges.emplace_back(b, a);
    }
  }
  return BipartiteGraph((r + 1) / 2, r / 2, edges);
}

BipartiteGraph star(std::size_t m) {
  if (m < 1) throw std::invalid_argument("star(m) needs m >= 1");
  return complete_bipartite(m, 1);
}

BipartiteGraph single_vertex() { return BipartiteGraph(1, 0, {}); }

}  // namespace misgraph
