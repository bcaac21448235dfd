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

#include "misgraph/gadget_search.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>

#include "misgraph/oracle.hpp"

namespace misgraph {
namespace {

// A matrix with `rows` left vertices and `cols` right vertices; row i is a
// bitmask over the columns. Marks are bitmasks over rows / columns.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint32_t> row_masks;
  std::uint32_t u1 = 0;
  std::uint32_t u2 = 0;
};

using Key = std::vector<std::uint32_t>;

// Minimum over row orders of (row marks, sorted columns). Sorting the
// columns is optimal for a fixed row order, so this is a canonical form
// under independent permutations of both parts.
Key canonical_key(const Matrix& m) {
  std::vector<std::size_t> order(m.rows);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Key best;
  Key key(1 + m.cols);
  do {
    std::uint32_t marks = 0;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if ((m.u1 >> order[i]) & 1U) marks |= 1U << (m.rows - 1 - i);
    }
    key[0] = marks;
    for (std::size_t c = 0; c < m.cols; ++c) {
      std::uint32_t col = ((m.u2 >> c) & 1U) << m.rows;
      for (std::size_t i = 0; i < m.rows; ++i) {
        if ((m.row_masks[order[i]] >> c) & 1U) col |= 1U << (m.rows - 1 - i);
      }
      key[1 + c] = col;
    }
    std::sort(key.begin() + 1, key.end());
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

Matrix from_key(const Key& key, std::size_t rows, std::size_t cols) {
  Matrix m{rows, cols, std::vector<std::uint32_t>(rows, 0), 0, 0};
  for (std::size_t i = 0; i < rows; ++i) {
    if ((key[0] >> (rows - 1 - i)) & 1U) m.u1 |= 1U << i;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    const std::uint32_t col = key[1 + c];
    if ((col >> rows) & 1U) m.u2 |= 1U << c;
    for (std::size_t i = 0; i < rows; ++i) {
      if ((col >> (rows - 1 - i)) & 1U) m.row_masks[i] |= 1U << c;
    }
  }
  return m;
}

std::size_t edge_total(const Matrix& m) {
  std::size_t e = 0;
  for (auto r : m.row_masks) e += static_cast<std::size_t>(__builtin_popcount(r));
  return e;
}

BipartiteGraph to_graph(const Matrix& m) {
  std::vector<Edge> edges;
  for (std::uint32_t i = 0; i < m.rows; ++i) {
    for (std::uint32_t c = 0; c < m.cols; ++c) {
      if ((m.row_masks[i] >> c) & 1U) edges.emplace_back(i, c);
    }
  }
  return BipartiteGraph(m.rows, m.cols, edges);
}

VertexSubset mask_subset(Side side, std::uint32_t mask) {
  std::vector<std::uint32_t> members;
  for (std::uint32_t i = 0; mask >> i; ++i) {
    if ((mask >> i) & 1U) members.push_back(i);
  }
  return VertexSubset(side, std::move(members));
}

// Unmarked canonical keys of every graph with the given part sizes and no
// isolated vertex, grouped by edge count.
void collect_graphs(std::size_t rows, std::size_t cols,
                    std::map<std::size_t, std::set<Key>>& by_edges) {
  const std::uint32_t full = (1U << cols) - 1;
  std::vector<std::uint32_t> masks(rows, 1);
  // Non-decreasing sequences of non-zero row masks.
  while (true) {
    std::uint32_t cover = 0;
    for (auto r : masks) cover |= r;
    if (cover == full) {
      Matrix m{rows, cols, masks, 0, 0};
      by_edges[edge_total(m)].insert(canonical_key(m));
    }
    std::size_t i = rows;
    while (i > 0 && masks[i - 1] == full) --i;
    if (i == 0) break;
    ++masks[i - 1];
    for (std::size_t j = i; j < rows; ++j) masks[j] = masks[i - 1];
  }
}

struct Shape {
  std::size_t rows;
  std::size_t cols;
  Key key;
};

// Every inequivalent marking of one graph, in mark order.
std::vector<MarkedGadget> mark_graph(const Shape& shape, const std::string& stem) {
  const Matrix base = from_key(shape.key, shape.rows, shape.cols);
  const BipartiteGraph graph = to_graph(base);
  std::set<Key> seen;
  std::vector<MarkedGadget> out;
  for (std::uint32_t u1 = 0; u1 < (1U << shape.rows); ++u1) {
    for (std::uint32_t u2 = 0; u2 < (1U << shape.cols); ++u2) {
      Matrix marked = base;
      marked.u1 = u1;
      marked.u2 = u2;
      if (!seen.insert(canonical_key(marked)).second) continue;
      MarkedGadget g{stem + "_m" + std::to_string(out.size()), graph,
                     mask_subset(Side::kLeft, u1), mask_subset(Side::kRight, u2), 0, 0};
      const HValues h = h_values(g.graph, g.u1, g.u2);
      g.h_prime = h.h_prime;
      g.h_dprime = h.h_dprime;
      out.push_back(std::move(g));
    }
  }
  return out;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested != 0 ? requested : std::thread::hardware_concurrency();
  n = std::max(1U, n);
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

bool covers_range(const std::vector<MarkedGadget>& members, std::uint64_t lo, std::uint64_t hi) {
  for (std::uint64_t n = lo; n <= hi; ++n) {
    bool hit = false;
    for (const auto& m : members) {
      const BigCount rest = BigCount(n) - m.h_dprime;
      if (rest % m.h_prime == 0 && rest / m.h_prime >= 2) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

// Certified threshold when members cover everything above it within
// n0_max, otherwise nothing.
std::optional<std::uint64_t> family_threshold(const std::vector<MarkedGadget>& members,
                                              std::uint64_t n0_max) {
  if (members.empty()) return std::nullopt;
  const CoverageCertificate cert = coverage_certificate(members);
  if (!cert.covers || cert.threshold > n0_max) return std::nullopt;
  return cert.threshold;
}

}  // namespace

void enumerate_marked_gadgets(const SearchOptions& options,
                              const std::function<void(const MarkedGadget&)>& visit) {
  if (options.max_vertices > kMaxSearchVertices) {
    throw SearchGuardExceeded("gadget search is limited to " + std::to_string(kMaxSearchVertices) +
                              " vertices, asked for " + std::to_string(options.max_vertices));
  }
  const std::size_t part_cap = options.max_part == 0 ? options.max_vertices : options.max_part;
  for (std::size_t nu = 2; nu <= options.max_vertices; ++nu) {
    // Graphs of this order, by edge count; shapes sorted by (rows, key).
    std::map<std::size_t, std::vector<Shape>> chunks;
    for (std::size_t rows = 1; rows <= nu / 2; ++rows) {
      const std::size_t cols = nu - rows;
      if (cols > part_cap) continue;
      std::map<std::size_t, std::set<Key>> by_edges;
      collect_graphs(rows, cols, by_edges);
      for (auto& [edges, keys] : by_edges) {
        for (const auto& key : keys) chunks[edges].push_back({rows, cols, key});
      }
    }
    for (const auto& [edges, shapes] : chunks) {
      std::vector<std::vector<MarkedGadget>> results(shapes.size());
      std::atomic<std::size_t> next{0};
      auto work = [&] {
        for (std::size_t i = next++; i < shapes.size(); i = next++) {
          const std::string stem = "v" + std::to_string(nu) + "e" + std::to_string(edges) + "_" +
                                   std::to_string(i);
          results[i] = mark_graph(shapes[i], stem);
        }
      };
      const unsigned workers = worker_count(options.threads, shapes.size());
      std::vector<std::thread> pool;
      for (unsigned t = 1; t < workers; ++t) pool.emplace_back(work);
      work();
      for (auto& th : pool) th.join();
      for (const auto& batch : results) {
        for (const auto& g : batch) visit(g);
      }
    }
  }
}

std::vector<MarkedGadget> enumerate_marked_gadgets(const SearchOptions& options) {
  std::vector<MarkedGadget> out;
  enumerate_marked_gadgets(options, [&](const MarkedGadget& g) { out.push_back(g); });
  return out;
}

std::vector<GadgetFamily> find_covering_families(const std::vector<MarkedGadget>& pool,
                                                 std::uint64_t n0_max) {
  // Smallest gadget per (h', h''), first one on ties.
  std::map<std::pair<BigCount, BigCount>, const MarkedGadget*> smallest;
  for (const auto& g : pool) {
    if (g.h_prime < 2) continue;
    auto [it, fresh] = smallest.try_emplace({g.h_prime, g.h_dprime}, &g);
    if (!fresh && g.graph.vertex_count() < it->second->graph.vertex_count()) it->second = &g;
  }
  std::vector<const MarkedGadget*> candidates;
  for (const auto& g : pool) {
    if (g.h_prime >= 2 && smallest.at({g.h_prime, g.h_dprime}) == &g) candidates.push_back(&g);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const MarkedGadget* a, const MarkedGadget* b) { return gamma_less(*a, *b); });

  std::set<std::vector<std::pair<BigCount, BigCount>>> seen;
  std::vector<GadgetFamily> families;
  for (std::size_t size = 1; size <= candidates.size(); ++size) {
    std::vector<MarkedGadget> members;
    for (std::size_t i = 0; i < size; ++i) members.push_back(*candidates[i]);
    if (!family_threshold(members, n0_max)) continue;
    // Drop members that are not needed, worst gamma first.
    for (std::size_t i = members.size(); i-- > 0;) {
      std::vector<MarkedGadget> trial = members;
      trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(i));
      if (family_threshold(trial, n0_max)) members = std::move(trial);
    }
    const std::uint64_t n0 = std::max<std::uint64_t>(*family_threshold(members, n0_max), 4);
    if (n0 > n0_max || !covers_range(members, n0 + 1, 18 * n0_max)) continue;
    std::vector<std::pair<BigCount, BigCount>> signature;
    for (const auto& m : members) signature.emplace_back(m.h_prime, m.h_dprime);
    std::sort(signature.begin(), signature.end());
    if (!seen.insert(signature).second) continue;
    families.push_back(make_family(std::move(members), n0));
  }
  std::stable_sort(families.begin(), families.end(), [](const GadgetFamily& a, const GadgetFamily& b) {
    const MarkedGadget& ga = a.members[a.gamma_member];
    const MarkedGadget& gb = b.members[b.gamma_member];
    if (gamma_less(ga, gb)) return true;
    if (gamma_less(gb, ga)) return false;
    return a.members.size() < b.members.size();
  });
  return families;
}

}  // namespace misgraph
