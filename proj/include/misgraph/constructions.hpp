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

#ifndef MISGRAPH_CONSTRUCTIONS_HPP_
#define MISGRAPH_CONSTRUCTIONS_HPP_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "misgraph/bigcount.hpp"
#include "misgraph/gadgets.hpp"
#include "misgraph/graph.hpp"
#include "misgraph/graph_io.hpp"

namespace misgraph {

/// A graph together with its maximal-independent-set count as certified by
/// the ledger (not recomputed).
struct CountedGraph {
  BipartiteGraph graph;
  BigCount mis;
};

enum class StepKind {
  kBase,
  kAttachGadget,
  kAddMatching,
  kDoublePlusOne,
  kPlusTwo,
  kSumGraphs,
  kMultiplyShiftAdd,
  kAppendPeriodic,
};

const char* step_kind_name(StepKind kind);
StepKind step_kind_from_name(std::string_view name);

/// One ledger entry: what was done, with which parameters, and the count
/// and vertex total it produces.
struct ConstructionStep {
  StepKind kind = StepKind::kBase;
  Json params = Json::object();
  BigCount predicted_count = 1;
  std::size_t vertex_count = 0;
};

using Ledger = std::vector<ConstructionStep>;

Json step_to_json(const ConstructionStep& step);
ConstructionStep step_from_json(const Json& j);
/// JSON array of steps; counts are decimal strings.
Json ledger_to_json(const Ledger& ledger);
Ledger ledger_from_json(const Json& j);

struct StepResult {
  CountedGraph out;
  ConstructionStep step;
};

/// Raised when a construction's arguments violate its preconditions.
class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Produces a graph without isolated vertices realising a given count >= 2.
using HelperRealizer = std::function<CountedGraph(const BigCount&)>;

namespace construct {

/// Gadget attachment: U1 joined to every left vertex of g, U2 to every right
/// vertex. Count becomes h' * mis(g) + h''.
StepResult attach_gadget(const CountedGraph& g, const MarkedGadget& gadget);

/// g plus m disjoint edges; count multiplied by 2^m.
StepResult add_matching(const CountedGraph& g, std::size_t m);

/// 4 more vertices, count 2 * mis + 1.
StepResult double_plus_one(const CountedGraph& g);

/// 4 more vertices, count mis + 2.
StepResult plus_two(const CountedGraph& g);

/// nu(g) + nu(h) + 4 vertices, count mis(g) + mis(h).
StepResult sum_graphs(const CountedGraph& g, const CountedGraph& h);

/// 2^{st} mis(g) + (2^{st} - 1)/(2^t - 1) mis(h) with at most
/// nu(g) + nu(h) + 2s(t+1) + 3 vertices.
StepResult multiply_shift_add(const CountedGraph& g, const CountedGraph& h, std::uint64_t s,
                              std::uint64_t t);

/// Extends the binary representation of mis(g) by `word` repeated `reps`
/// times. Helper graphs come from `helper`, or from the default synthesizer
/// when it is empty.
StepResult append_periodic(const CountedGraph& g, std::string_view word, std::uint64_t reps,
                           const HelperRealizer& helper = {});

}  // namespace construct

/// The (s-1) x (t+1) grid: u_{i,j} v_{i,j} for j <= t, and u_{i,j} v_{k,t+1}
/// for i <= k. It has (2^{st} - 1)/(2^t - 1) maximal independent sets.
BipartiteGraph staircase_graph(std::uint64_t s, std::uint64_t t);

/// (2^{st} - 1)/(2^t - 1).
BigCount staircase_count(std::uint64_t s, std::uint64_t t);

/// Disjoint union of K_{2^j,1}, j = 0..t-1: 2^t + t - 1 vertices and
/// 2^{2^t} - 1 independent sets.
BipartiteGraph mersenne_forest(std::uint64_t t);
BigCount mersenne_forest_is_count(std::uint64_t t);

/// Throws ConstructionError when g has an isolated vertex.
void require_no_isolated(const BipartiteGraph& g, const char* what);

}  // namespace misgraph

#endif  // MISGRAPH_CONSTRUCTIONS_HPP_
