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

#include "misgraph/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <map>
#include <string>
#include <thread>

namespace misgraph {
namespace {

// The graph seen from its smaller part S; T-vertices are reduced to their
// neighbourhood masks over S.
struct Oriented {
  Side s_side = Side::kLeft;
  std::size_t s_size = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> t_masks;     // per T-vertex, by index
  std::vector<std::uint64_t> distinct;    // distinct non-zero masks
  std::vector<std::uint32_t> multiplicity;
  std::uint32_t isolated_t = 0;
};

Oriented orient(const BipartiteGraph& g, const OracleOptions& options) {
  Oriented o;
  o.s_side = g.left_size() <= g.right_size() ? Side::kLeft : Side::kRight;
  o.s_size = g.part_size(o.s_side);
  if (o.s_size > options.max_min_part || o.s_size > 62) {
    throw OracleCapExceeded("graph too large for oracle: smaller part has " +
                            std::to_string(o.s_size) + " vertices, cap is " +
                            std::to_string(std::min<std::size_t>(options.max_min_part, 62)));
  }
  o.full = o.s_size == 0 ? 0 : (~std::uint64_t{0} >> (64 - o.s_size));
  const Side t_side = opposite(o.s_side);
  const std::size_t t_size = g.part_size(t_side);
  o.t_masks.resize(t_size);
  std::map<std::uint64_t, std::uint32_t> counts;
  for (std::uint32_t y = 0; y < t_size; ++y) {
    const std::uint64_t m = g.neighbors(t_side, y).low_word();
    o.t_masks[y] = m;
    if (m == 0) {
      ++o.isolated_t;
    } else {
      ++counts[m];
    }
  }
  for (const auto& [mask, c] : counts) {
    o.distinct.push_back(mask);
    o.multiplicity.push_back(c);
  }
  return o;
}

unsigned thread_count(const OracleOptions& options, std::uint64_t work) {
  if (work < (std::uint64_t{1} << 16)) return 1;
  unsigned n = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
  return std::max(1U, n);
}

// Sums fn(lo, hi) over disjoint chunks of [0, total). The partition does not
// affect the result.
template <class ChunkFn>
std::uint64_t parallel_sum(std::uint64_t total, unsigned threads, ChunkFn chunk_fn) {
  if (threads <= 1) return chunk_fn(std::uint64_t{0}, total);
  const std::uint64_t chunks = std::uint64_t{threads} * 8;
  const std::uint64_t step = (total + chunks - 1) / chunks;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> sum{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&] {
      std::uint64_t local = 0;
      for (;;) {
        const std::uint64_t c = next.fetch_add(1);
        const std::uint64_t lo = c * step;
        if (lo >= total) break;
        local += chunk_fn(lo, std::min(total, lo + step));
      }
      sum += local;
    });
  }
  for (auto& th : pool) th.join();
  return sum.load();
}

inline std::uint64_t covered_by_free(const std::vector<std::uint64_t>& masks, std::uint64_t a) {
  std::uint64_t cov = 0;
  for (std::uint64_t m : masks) cov |= (m & a) == 0 ? m : 0;
  return cov;
}

std::uint64_t count_mis_masks(const Oriented& o, const OracleOptions& options) {
  const std::uint64_t total = std::uint64_t{1} << o.s_size;
  return parallel_sum(total, thread_count(options, total),
                      [&](std::uint64_t lo, std::uint64_t hi) {
                        std::uint64_t count = 0;
                        for (std::uint64_t a = lo; a < hi; ++a) {
                          if ((o.full & ~covered_by_free(o.distinct, a)) == a) ++count;
                        }
                        return count;
                      });
}

template <class Fn>
void for_each_mis_mask(const Oriented& o, Fn&& fn) {
  const std::uint64_t total = std::uint64_t{1} << o.s_size;
  for (std::uint64_t a = 0; a < total; ++a) {
    if ((o.full & ~covered_by_free(o.distinct, a)) == a) fn(a);
  }
}

VertexSet to_vertex_set(const Oriented& o, std::uint64_t a) {
  std::vector<std::uint32_t> s_members;
  for (std::uint64_t bits = a; bits != 0; bits &= bits - 1) {
    s_members.push_back(static_cast<std::uint32_t>(std::countr_zero(bits)));
  }
  std::vector<std::uint32_t> t_members;
  for (std::uint32_t y = 0; y < o.t_masks.size(); ++y) {
    if ((o.t_masks[y] & a) == 0) t_members.push_back(y);
  }
  VertexSet set;
  if (o.s_side == Side::kLeft) {
    set.left = std::move(s_members);
    set.right = std::move(t_members);
  } else {
    set.left = std::move(t_members);
    set.right = std::move(s_members);
  }
  return set;
}

// Tests whether the MIS with S-part `a` meets a subset.
struct HitTest {
  std::uint64_t s_mask = 0;
  std::vector<std::uint64_t> t_masks;
  bool hits(std::uint64_t a) const {
    if ((a & s_mask) != 0) return true;
    return std::any_of(t_masks.begin(), t_masks.end(), [a](std::uint64_t m) { return (m & a) == 0; });
  }
};

HitTest make_hit_test(const Oriented& o, const VertexSubset& u) {
  HitTest test;
  for (std::uint32_t v : u.members()) {
    if (u.side() == o.s_side) {
      test.s_mask |= std::uint64_t{1} << v;
    } else {
      test.t_masks.push_back(o.t_masks[v]);
    }
  }
  return test;
}

}  // namespace

bool oracle_feasible(const BipartiteGraph& g, const OracleOptions& options) {
  const std::size_t s = std::min(g.left_size(), g.right_size());
  return s <= options.max_min_part && s <= 62;
}

BigCount count_mis(const BipartiteGraph& g, const OracleOptions& options) {
  const Oriented o = orient(g, options);
  return BigCount(count_mis_masks(o, options));
}

BigCount count_is(const BipartiteGraph& g, const OracleOptions& options) {
  const Oriented o = orient(g, options);
  const std::size_t t_size = o.t_masks.size();
  const std::uint64_t total = std::uint64_t{1} << o.s_size;
  // histogram[f] = number of S-subsets leaving exactly f free T-vertices.
  std::vector<std::uint64_t> histogram(t_size + 1, 0);
  for (std::uint64_t a = 0; a < total; ++a) {
    std::size_t free = o.isolated_t;
    for (std::size_t i = 0; i < o.distinct.size(); ++i) {
      if ((o.distinct[i] & a) == 0) free += o.multiplicity[i];
    }
    ++histogram[free];
  }
  BigCount result = 0;
  for (std::size_t f = 0; f <= t_size; ++f) {
    if (histogram[f] != 0) result += BigCount(histogram[f]) << f;
  }
  return result;
}

void enumerate_mis(const BipartiteGraph& g, const std::function<void(const VertexSet&)>& visit,
                   const OracleOptions& options) {
  const Oriented o = orient(g, options);
  const std::uint64_t count = count_mis_masks(o, options);
  if (count > options.max_enumerated) {
    throw OracleCapExceeded("graph has " + std::to_string(count) +
                            " maximal independent sets, enumeration cap is " +
                            std::to_string(options.max_enumerated));
  }
  for_each_mis_mask(o, [&](std::uint64_t a) { visit(to_vertex_set(o, a)); });
}

std::vector<VertexSet> enumerate_mis(const BipartiteGraph& g, const OracleOptions& options) {
  std::vector<VertexSet> out;
  enumerate_mis(g, [&](const VertexSet& s) { out.push_back(s); }, options);
  return out;
}

BigCount count_mis_hitting(const BipartiteGraph& g, const VertexSubset& u1, const VertexSubset& u2,
                           const OracleOptions& options) {
  validate_subset(g, u1);
  validate_subset(g, u2);
  const Oriented o = orient(g, options);
  if (u1.empty() || u2.empty()) return 0;
  const HitTest first = make_hit_test(o, u1);
  const HitTest second = make_hit_test(o, u2);
  std::uint64_t count = 0;
  for_each_mis_mask(o, [&](std::uint64_t a) {
    if (first.hits(a) && second.hits(a)) ++count;
  });
  return BigCount(count);
}

HValues h_values(const BipartiteGraph& g, const VertexSubset& u1, const VertexSubset& u2,
                 const OracleOptions& options) {
  const std::array<VertexSubset, 2> both{u1, u2};
  const BigCount without_both = count_mis(remove_vertices(g, both), options);
  const BigCount without_u1 = count_mis(remove_vertices(g, std::span(&u1, 1)), options);
  const BigCount without_u2 = count_mis(remove_vertices(g, std::span(&u2, 1)), options);
  const BigCount hitting = count_mis_hitting(g, u1, u2, options);
  return {without_both, without_u1 + without_u2 + hitting - 2 * without_both};
}

}  // namespace misgraph
