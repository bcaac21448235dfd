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

#include "misgraph/constructions.hpp"

#include <array>
#include <cmath>
#include <string>

#include "misgraph/synthesizer.hpp"

namespace misgraph {
namespace {

struct KindName {
  StepKind kind;
  const char* name;
};

constexpr std::array<KindName, 8> kKindNames = {{
    {StepKind::kBase, "base"},
    {StepKind::kAttachGadget, "attach_gadget"},
    {StepKind::kAddMatching, "add_matching"},
    {StepKind::kDoublePlusOne, "double_plus_one"},
    {StepKind::kPlusTwo, "plus_two"},
    {StepKind::kSumGraphs, "sum_graphs"},
    {StepKind::kMultiplyShiftAdd, "multiply_shift_add"},
    {StepKind::kAppendPeriodic, "append_periodic"},
}};

VertexSubset range(Side side, std::uint32_t first, std::size_t count) {
  std::vector<std::uint32_t> members(count);
  for (std::size_t i = 0; i < count; ++i) members[i] = first + static_cast<std::uint32_t>(i);
  return VertexSubset(side, std::move(members));
}

void require_attachable(const CountedGraph& g, const char* what) {
  require_no_isolated(g.graph, what);
  if (g.graph.vertex_count() == 0 || g.mis < 2) {
    throw ConstructionError(std::string(what) + ": needs a non-empty graph with count >= 2, got " +
                            to_decimal(g.mis));
  }
}

// Gadget attachment without any precondition checks or ledger bookkeeping.
BipartiteGraph wire_gadget(const BipartiteGraph& g, const BipartiteGraph& gadget,
                           const VertexSubset& u1, const VertexSubset& u2) {
  const std::size_t left = g.left_size();
  const std::size_t right = g.right_size();
  GraphBuilder builder(g);
  // The gadget goes in with its parts exchanged so that U1 can face L_g.
  const auto [u1_at, u2_at] = builder.append(gadget, /*swap_parts=*/true);
  builder.join(range(Side::kLeft, 0, left), u1.relocated(Side::kRight, u1_at));
  builder.join(range(Side::kRight, 0, right), u2.relocated(Side::kLeft, u2_at));
  return std::move(builder).build();
}

StepResult finish(BipartiteGraph graph, BigCount count, StepKind kind, Json params) {
  ConstructionStep step{kind, std::move(params), count, graph.vertex_count()};
  return {CountedGraph{std::move(graph), std::move(count)}, std::move(step)};
}

void check_vertex_bound(std::size_t actual, double bound, const char* what) {
  if (static_cast<double>(actual) > bound + 1e-9) {
    throw std::logic_error(std::string(what) + ": produced " + std::to_string(actual) +
                           " vertices, bound is " + std::to_string(bound));
  }
}

std::string repeat(std::string_view word, std::uint64_t times) {
  std::string out;
  out.reserve(word.size() * times);
  for (std::uint64_t i = 0; i < times; ++i) out += word;
  return out;
}

// Smallest k >= 2 with k*k*p >= q, i.e. max(ceil(sqrt(q/p)), 2).
std::uint64_t block_factor(std::uint64_t p, std::uint64_t q) {
  auto k = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(q) / p));
  while (k * k * p < q) ++k;
  while (k > 1 && (k - 1) * (k - 1) * p >= q) --k;
  return std::max<std::uint64_t>(k, 2);
}

}  // namespace

const char* step_kind_name(StepKind kind) {
  for (const auto& entry : kKindNames) {
    if (entry.kind == kind) return entry.name;
  }
  return "unknown";
}

StepKind step_kind_from_name(std::string_view name) {
  for (const auto& entry : kKindNames) {
    if (name == entry.name) return entry.kind;
  }
  throw std::invalid_argument("unknown construction step '" + std::string(name) + "'");
}

Json step_to_json(const ConstructionStep& step) {
  Json j;
  j["kind"] = step_kind_name(step.kind);
  j["params"] = step.params;
  j["predicted_count"] = to_decimal(step.predicted_count);
  j["vertex_count"] = step.vertex_count;
  return j;
}

ConstructionStep step_from_json(const Json& j) {
  ConstructionStep step;
  step.kind = step_kind_from_name(j.at("kind").get<std::string>());
  step.params = j.value("params", Json::object());
  step.predicted_count = parse_count(j.at("predicted_count").get<std::string>());
  step.vertex_count = j.at("vertex_count").get<std::size_t>();
  return step;
}

Json ledger_to_json(const Ledger& ledger) {
  Json j = Json::array();
  for (const auto& step : ledger) j.push_back(step_to_json(step));
  return j;
}

Ledger ledger_from_json(const Json& j) {
  if (!j.is_array()) throw GraphParseError("ledger must be a JSON array");
  Ledger ledger;
  for (const auto& s : j) ledger.push_back(step_from_json(s));
  return ledger;
}

void require_no_isolated(const BipartiteGraph& g, const char* what) {
  if (g.has_isolated_vertices()) {
    throw ConstructionError(std::string(what) + ": input graph has an isolated vertex");
  }
}

namespace construct {

StepResult attach_gadget(const CountedGraph& g, const MarkedGadget& gadget) {
  require_attachable(g, "attach_gadget");
  BigCount count = gadget.h_prime * g.mis + gadget.h_dprime;
  Json params;
  params["gadget"] = gadget.name;
  params["h_prime"] = to_decimal(gadget.h_prime);
  params["h_dprime"] = to_decimal(gadget.h_dprime);
  return finish(wire_gadget(g.graph, gadget.graph, gadget.u1, gadget.u2), std::move(count),
                StepKind::kAttachGadget, std::move(params));
}

StepResult add_matching(const CountedGraph& g, std::size_t m) {
  Json params;
  params["m"] = m;
  return finish(misgraph::add_matching(g.graph, m), g.mis << m, StepKind::kAddMatching,
                std::move(params));
}

StepResult double_plus_one(const CountedGraph& g) {
  StepResult r = attach_gadget(g, double_plus_one_gadget());
  r.step.kind = StepKind::kDoublePlusOne;
  r.step.params = Json::object();
  return r;
}

StepResult plus_two(const CountedGraph& g) {
  StepResult r = attach_gadget(g, plus_two_gadget());
  r.step.kind = StepKind::kPlusTwo;
  r.step.params = Json::object();
  return r;
}

StepResult sum_graphs(const CountedGraph& g, const CountedGraph& h) {
  require_attachable(g, "sum_graphs");
  require_attachable(h, "sum_graphs (operand)");
  // Whole parts of h marked: h' = 1, h'' = mis(h) - 2, then +2.
  const MarkedGadget operand{"operand", h.graph, VertexSubset::whole(Side::kLeft, h.graph.left_size()),
                             VertexSubset::whole(Side::kRight, h.graph.right_size()), 1, h.mis - 2};
  const StepResult joined = attach_gadget(g, operand);
  StepResult r = plus_two(joined.out);
  r.step.kind = StepKind::kSumGraphs;
  r.step.params = Json::object();
  r.step.params["operand"] = to_decimal(h.mis);
  r.step.params["operand_vertices"] = h.graph.vertex_count();
  return r;
}

StepResult multiply_shift_add(const CountedGraph& g, const CountedGraph& h, std::uint64_t s,
                              std::uint64_t t) {
  if (s == 0 || t == 0) throw ConstructionError("multiply_shift_add needs s, t >= 1");
  require_attachable(g, "multiply_shift_add");
  require_attachable(h, "multiply_shift_add (operand)");
  const BigCount target = (g.mis << (s * t)) + staircase_count(s, t) * h.mis;
  const double bound = static_cast<double>(g.graph.vertex_count() + h.graph.vertex_count()) +
                       2.0 * static_cast<double>(s) * static_cast<double>(t + 1) + 3.0;
  Json params;
  params["s"] = s;
  params["t"] = t;
  params["operand"] = to_decimal(h.mis);
  params["operand_vertices"] = h.graph.vertex_count();

  StepResult r;
  if (s == 1) {
    const StepResult shifted = add_matching(g, t);
    r = sum_graphs(shifted.out, h);
  } else {
    const std::size_t lg = g.graph.left_size();
    const std::size_t rg = g.graph.right_size();
    const std::size_t lh = h.graph.left_size();
    const std::size_t rh = h.graph.right_size();
    const std::size_t rows = s - 1;
    const std::size_t cols = t + 1;

    GraphBuilder b(g.graph);
    const auto [lh_at, rh_at] = b.append(h.graph);
    const std::uint32_t w = b.add_vertices(Side::kLeft, 1);
    const std::uint32_t ut = b.add_vertices(Side::kLeft, t);
    const std::uint32_t vt = b.add_vertices(Side::kRight, t);
    const std::uint32_t u0 = b.add_vertices(Side::kLeft, rows * cols);
    const std::uint32_t v0 = b.add_vertices(Side::kRight, rows * cols);
    // i in [1, s-1], j in [1, t+1]
    auto u = [&](std::size_t i, std::size_t j) { return u0 + static_cast<std::uint32_t>((i - 1) * cols + (j - 1)); };
    auto v = [&](std::size_t i, std::size_t j) { return v0 + static_cast<std::uint32_t>((i - 1) * cols + (j - 1)); };

    const VertexSubset left_g = range(Side::kLeft, 0, lg);
    const VertexSubset right_g = range(Side::kRight, 0, rg);
    const VertexSubset left_h = range(Side::kLeft, lh_at, lh);
    const VertexSubset right_h = range(Side::kRight, rh_at, rh);

    for (std::uint32_t i = 0; i < t; ++i) b.add_edge(ut + i, vt + i);
    for (std::size_t i = 1; i <= rows; ++i) {
      for (std::size_t j = 1; j <= t; ++j) b.add_edge(u(i, j), v(i, j));
    }
    b.join(left_g, right_h);
    b.join(right_g, left_h);
    const VertexSubset hub(Side::kLeft, {w});
    b.join(hub, right_g);
    b.join(hub, right_h);
    b.join(range(Side::kLeft, ut, t), right_h);
    b.join(left_h, range(Side::kRight, vt, t));
    for (std::size_t i = 1; i <= rows; ++i) {
      b.join(VertexSubset(Side::kLeft, {u(i, cols)}), right_g);
      b.join(left_g, VertexSubset(Side::kRight, {v(i, cols)}));
      for (std::size_t k = i; k <= rows; ++k) {
        for (std::size_t j = 1; j <= cols; ++j) b.add_edge(u(i, j), v(k, cols));
      }
    }
    const CountedGraph inner{std::move(b).build(), target - 2};
    r = plus_two(inner);
  }
  if (r.out.mis != target) throw std::logic_error("multiply_shift_add: ledger arithmetic mismatch");
  check_vertex_bound(r.out.graph.vertex_count(), bound, "multiply_shift_add");
  r.step.kind = StepKind::kMultiplyShiftAdd;
  r.step.params = std::move(params);
  return r;
}

StepResult append_periodic(const CountedGraph& g, std::string_view word, std::uint64_t reps,
                           const HelperRealizer& helper_in) {
  if (word.empty()) throw ConstructionError("append_periodic: empty word");
  if (reps == 0) throw ConstructionError("append_periodic: reps must be >= 1");
  const BigCount word_value = binary_value(word);  // also rejects non-binary characters
  require_attachable(g, "append_periodic");
  const HelperRealizer& helper = helper_in ? helper_in : default_helper_realizer();

  const std::uint64_t p = word.size();
  Json params;
  params["word"] = std::string(word);
  params["reps"] = reps;
  Json helpers = Json::array();

  // Realises the value of a word with a graph free of isolated vertices.
  auto realize_word = [&](const std::string& bits) {
    const BigCount value = binary_value(bits);
    CountedGraph h = helper(value);
    if (h.mis != value) throw std::logic_error("append_periodic: helper realised the wrong count");
    require_no_isolated(h.graph, "append_periodic helper");
    check_vertex_bound(h.graph.vertex_count(), 3.0 * static_cast<double>(bits.size()),
                       "append_periodic helper");
    helpers.push_back(to_decimal(value));
    return h;
  };

  // One copy of a word that is not all zeros.
  auto append_once = [&](const CountedGraph& base, const std::string& w) {
    if (binary_value(w) == 1) {
      const StepResult shifted = add_matching(base, w.size() - 1);
      return double_plus_one(shifted.out).out;
    }
    return multiply_shift_add(base, realize_word(w), 1, w.size()).out;
  };

  CountedGraph current;
  if (word_value == 0) {
    params["case"] = "zeros";
    current = add_matching(g, p * reps).out;
  } else if (reps == 1) {
    params["case"] = word_value == 1 ? "tail_one" : "single";
    current = append_once(g, std::string(word));
  } else {
    const std::uint64_t k = block_factor(p, reps);
    const std::uint64_t r = reps % k;
    const std::uint64_t s = reps / k;
    params["case"] = "blocked";
    params["k"] = k;
    params["r"] = r;
    current = multiply_shift_add(g, realize_word(repeat(word, k)), s, p * k).out;
    if (r == 1) {
      current = append_once(current, std::string(word));
    } else if (r > 1) {
      current = multiply_shift_add(current, realize_word(repeat(word, r)), 1, p * r).out;
    }
  }
  params["helpers"] = std::move(helpers);

  const BigCount expected = (g.mis << (p * reps)) + binary_value(repeat(word, reps));
  if (current.mis != expected) throw std::logic_error("append_periodic: ledger arithmetic mismatch");
  const double pq = static_cast<double>(p) * static_cast<double>(reps);
  check_vertex_bound(current.graph.vertex_count(),
                     static_cast<double>(g.graph.vertex_count()) + 2.0 * pq +
                         20.0 * (static_cast<double>(p) + std::sqrt(pq)),
                     "append_periodic");
  return finish(std::move(current.graph), std::move(current.mis), StepKind::kAppendPeriodic,
                std::move(params));
}

}  // namespace construct

BigCount staircase_count(std::uint64_t s, std::uint64_t t) {
  return (pow2(s * t) - 1) / (pow2(t) - 1);
}

BipartiteGraph staircase_graph(std::uint64_t s, std::uint64_t t) {
  if (s < 2 || t < 1) throw ConstructionError("staircase_graph needs s >= 2 and t >= 1");
  const std::size_t rows = s - 1;
  const std::size_t cols = t + 1;
  std::vector<Edge> edges;
  auto id = [cols](std::size_t i, std::size_t j) { return static_cast<std::uint32_t>((i - 1) * cols + (j - 1)); };
  for (std::size_t i = 1; i <= rows; ++i) {
    for (std::size_t j = 1; j <= t; ++j) edges.emplace_back(id(i, j), id(i, j));
    for (std::size_t k = i; k <= rows; ++k) {
      for (std::size_t j = 1; j <= cols; ++j) edges.emplace_back(id(i, j), id(k, cols));
    }
  }
  return BipartiteGraph(rows * cols, rows * cols, edges);
}

BipartiteGraph mersenne_forest(std::uint64_t t) {
  if (t < 1) throw ConstructionError("mersenne_forest needs t >= 1");
  if (t > 24) throw ConstructionError("mersenne_forest: t > 24 is too large to build");
  BipartiteGraph forest;
  for (std::uint64_t j = 0; j < t; ++j) forest = disjoint_union(forest, star(std::size_t{1} << j));
  return forest;
}

BigCount mersenne_forest_is_count(std::uint64_t t) { return pow2(std::size_t{1} << t) - 1; }

}  // namespace misgraph
