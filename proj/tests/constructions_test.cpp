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

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "misgraph/constructions.hpp"
#include "misgraph/oracle.hpp"
#include "misgraph/synthesizer.hpp"
#include "test_support.hpp"

namespace misgraph {
namespace {

CountedGraph counted(BipartiteGraph g) {
  BigCount n = count_mis(g);
  return {std::move(g), std::move(n)};
}

const MarkedGadget& member(const char* name) {
  static const GadgetFamily f = load_gamma_family();
  for (const auto& m : f.members) {
    if (m.name == name) return m;
  }
  throw std::logic_error("no such member");
}

void expect_sound(const StepResult& r) {
  EXPECT_EQ(count_mis(r.out.graph), r.out.mis);
  EXPECT_EQ(r.step.predicted_count, r.out.mis);
  EXPECT_EQ(r.step.vertex_count, r.out.graph.vertex_count());
  EXPECT_FALSE(r.out.graph.has_isolated_vertices());
}

TEST(AttachGadget, Examples) {
  const StepResult a = construct::attach_gadget(counted(complete_bipartite(1, 1)), member("P4"));
  EXPECT_EQ(a.out.mis, 6);
  EXPECT_EQ(a.out.graph.vertex_count(), 6U);
  expect_sound(a);
  const StepResult b = construct::attach_gadget(counted(corona(3)), member("K11"));
  EXPECT_EQ(b.out.mis, 10);
  expect_sound(b);
  const StepResult c = construct::attach_gadget(counted(path(4)), member("T18_5"));
  EXPECT_EQ(c.out.mis, 59);
  EXPECT_EQ(c.out.graph.vertex_count(), 16U);
  expect_sound(c);
}

TEST(AttachGadget, Preconditions) {
  const BipartiteGraph with_isolated = disjoint_union(complete_bipartite(1, 1), single_vertex());
  EXPECT_THROW(construct::attach_gadget({with_isolated, 2}, member("P4")), ConstructionError);
  EXPECT_THROW(construct::attach_gadget({single_vertex(), 1}, member("P4")), ConstructionError);
}

TEST(AttachGadget, FourTermFormulaOnRandomPairs) {
  std::mt19937_64 rng(101);
  std::uniform_int_distribution<std::size_t> part(1, 4);
  for (int i = 0; i < 200; ++i) {
    const BipartiteGraph g = testing::random_connected_ish(rng, part(rng), part(rng), 0.3);
    const BipartiteGraph h = testing::random_connected_ish(rng, part(rng), part(rng), 0.3);
    const VertexSubset u1 = testing::random_subset(rng, Side::kLeft, h.left_size());
    const VertexSubset u2 = testing::random_subset(rng, Side::kRight, h.right_size());

    const std::vector<VertexSubset> both = {u1, u2};
    const std::vector<VertexSubset> only1 = {u1};
    const std::vector<VertexSubset> only2 = {u2};
    const std::uint64_t k = testing::naive_mis(g);
    const std::uint64_t h_minus_both = testing::naive_mis(remove_vertices(h, both));
    const std::uint64_t h_minus_1 = testing::naive_mis(remove_vertices(h, only1));
    const std::uint64_t h_minus_2 = testing::naive_mis(remove_vertices(h, only2));
    const std::uint64_t hit =
        u1.empty() || u2.empty()
            ? 0
            : testing::naive_mis_hitting(h, testing::subset_mask(u1), testing::subset_mask(u2));
    const std::int64_t formula = (static_cast<std::int64_t>(k) - 2) * static_cast<std::int64_t>(h_minus_both) +
                                 static_cast<std::int64_t>(h_minus_1 + h_minus_2 + hit);

    const MarkedGadget gadget = make_gadget("random", h, u1, u2);
    const StepResult r = construct::attach_gadget({g, k}, gadget);
    ASSERT_EQ(static_cast<std::int64_t>(testing::naive_mis(r.out.graph)), formula)
        << write_json(g) << write_json(h);
    ASSERT_EQ(r.out.mis, formula);
  }
}

TEST(DoublePlusOne, Examples) {
  const StepResult a = construct::double_plus_one(counted(complete_bipartite(1, 1)));
  EXPECT_EQ(a.out.mis, 5);
  EXPECT_EQ(a.out.graph.vertex_count(), 6U);
  expect_sound(a);
  expect_sound(construct::double_plus_one(counted(path(4))));
  EXPECT_EQ(construct::double_plus_one(counted(path(4))).out.mis, 7);
  const StepResult twice = construct::double_plus_one(a.out);
  EXPECT_EQ(twice.out.mis, 11);
  expect_sound(twice);
}

TEST(PlusTwo, Examples) {
  const StepResult a = construct::plus_two(counted(complete_bipartite(1, 1)));
  EXPECT_EQ(a.out.mis, 4);
  expect_sound(a);
  const StepResult b = construct::plus_two(counted(corona(3)));
  EXPECT_EQ(b.out.mis, 7);
  expect_sound(b);
  const StepResult c = construct::plus_two(counted(path(4)));
  EXPECT_EQ(c.out.mis, 5);
  EXPECT_EQ(c.out.graph.vertex_count(), 8U);
  expect_sound(c);
}

TEST(SumGraphs, Examples) {
  const auto k11 = counted(complete_bipartite(1, 1));
  const StepResult a = construct::sum_graphs(k11, counted(path(4)));
  EXPECT_EQ(a.out.mis, 5);
  EXPECT_EQ(a.out.graph.vertex_count(), 10U);
  expect_sound(a);
  EXPECT_EQ(construct::sum_graphs(k11, k11).out.mis, 4);
  const StepResult c = construct::sum_graphs(counted(corona(3)), counted(corona(4)));
  EXPECT_EQ(c.out.mis, 11);
  expect_sound(c);
}

TEST(Staircase, Examples) {
  EXPECT_EQ(count_mis(staircase_graph(2, 1)), 3);
  EXPECT_EQ(count_mis(staircase_graph(3, 2)), 21);
  EXPECT_EQ(count_mis(staircase_graph(2, 3)), 9);
  EXPECT_THROW(staircase_graph(1, 3), ConstructionError);
}

TEST(Staircase, MatchesNaiveCount) {
  for (std::uint64_t s = 2; s <= 3; ++s) {
    for (std::uint64_t t = 1; t <= 3; ++t) {
      const BipartiteGraph g = staircase_graph(s, t);
      if (g.vertex_count() > 20) continue;
      EXPECT_EQ(BigCount(testing::naive_mis(g)), staircase_count(s, t)) << s << "," << t;
    }
  }
}

TEST(MultiplyShiftAdd, Examples) {
  const auto k11 = counted(complete_bipartite(1, 1));
  const auto p4 = counted(path(4));
  const StepResult a = construct::multiply_shift_add(k11, p4, 1, 2);
  EXPECT_EQ(a.out.mis, 11);
  expect_sound(a);
  const StepResult b = construct::multiply_shift_add(k11, k11, 2, 1);
  EXPECT_EQ(b.out.mis, 14);
  expect_sound(b);
  const StepResult c = construct::multiply_shift_add(p4, k11, 2, 2);
  EXPECT_EQ(c.out.mis, 58);
  expect_sound(c);
}

TEST(MultiplyShiftAdd, VertexBoundAndCountOnSmallPool) {
  std::mt19937_64 rng(7);
  std::vector<CountedGraph> pool = {counted(complete_bipartite(1, 1)), counted(path(4)),
                                    counted(testing::random_connected_ish(rng, 2, 3, 0.3))};
  for (const auto& g : pool) {
    for (const auto& h : pool) {
      for (std::uint64_t s = 1; s <= 2; ++s) {
        for (std::uint64_t t = 1; t <= 2; ++t) {
          const StepResult r = construct::multiply_shift_add(g, h, s, t);
          const BigCount want = (g.mis << (s * t)) + staircase_count(s, t) * h.mis;
          ASSERT_EQ(count_mis(r.out.graph), want);
          ASSERT_LE(r.out.graph.vertex_count(),
                    g.graph.vertex_count() + h.graph.vertex_count() + 2 * s * (t + 1) + 3);
        }
      }
    }
  }
}

TEST(MultiplyShiftAdd, Preconditions) {
  const auto k11 = counted(complete_bipartite(1, 1));
  EXPECT_THROW(construct::multiply_shift_add(k11, k11, 0, 1), ConstructionError);
  EXPECT_THROW(construct::multiply_shift_add(k11, k11, 1, 0), ConstructionError);
}

TEST(AppendPeriodic, Examples) {
  const auto k11 = counted(complete_bipartite(1, 1));
  const StepResult a = construct::append_periodic(k11, "0", 3);
  EXPECT_EQ(a.out.mis, 16);
  expect_sound(a);
  const StepResult b = construct::append_periodic(counted(path(4)), "01", 1);
  EXPECT_EQ(b.out.mis, 13);
  expect_sound(b);
  const StepResult c = construct::append_periodic(k11, "1", 4);
  EXPECT_EQ(c.out.mis, 47);
  EXPECT_EQ(c.step.params.at("k"), 2);
  EXPECT_EQ(c.step.params.at("r"), 0);
  expect_sound(c);
}

TEST(AppendPeriodic, EveryCaseAgreesWithTheOracle) {
  const auto k11 = counted(complete_bipartite(1, 1));
  const auto p4 = counted(path(4));
  struct Case {
    const char* word;
    std::uint64_t reps;
  };
  for (const Case& c : {Case{"00", 2}, Case{"001", 1}, Case{"1", 1}, Case{"11", 1}, Case{"10", 1},
                        Case{"1", 2}, Case{"1", 3}, Case{"1", 5}, Case{"01", 3}, Case{"10", 2}}) {
    for (const auto& base : {k11, p4}) {
      const StepResult r = construct::append_periodic(base, c.word, c.reps);
      std::string bits = to_binary(base.mis);
      for (std::uint64_t i = 0; i < c.reps; ++i) bits += c.word;
      EXPECT_EQ(to_binary(r.out.mis), bits) << c.word << "^" << c.reps;
      if (oracle_feasible(r.out.graph)) expect_sound(r);
    }
  }
}

TEST(AppendPeriodic, LongRunsStayWithinTheBound) {
  const auto p4 = counted(path(4));
  for (const auto& [word, reps] : std::vector<std::pair<std::string, std::uint64_t>>{
           {"1", 100}, {"10", 64}, {"0110", 70}, {"1", 1000}}) {
    const StepResult r = construct::append_periodic(p4, word, reps);
    std::string bits = "11";
    for (std::uint64_t i = 0; i < reps; ++i) bits += word;
    EXPECT_EQ(to_binary(r.out.mis), bits);
    const double pq = static_cast<double>(word.size() * reps);
    EXPECT_LE(static_cast<double>(r.out.graph.vertex_count() - 4),
              2 * pq + 20 * (static_cast<double>(word.size()) + std::sqrt(pq)));
  }
}

TEST(AppendPeriodic, Preconditions) {
  const auto k11 = counted(complete_bipartite(1, 1));
  EXPECT_THROW(construct::append_periodic(k11, "", 1), ConstructionError);
  EXPECT_THROW(construct::append_periodic(k11, "1", 0), ConstructionError);
  EXPECT_THROW(construct::append_periodic({single_vertex(), 1}, "1", 1), ConstructionError);
  EXPECT_THROW(construct::append_periodic(k11, "12", 1), std::invalid_argument);
}

TEST(Mersenne, Counts) {
  for (std::uint64_t t = 1; t <= 4; ++t) {
    const BipartiteGraph f = mersenne_forest(t);
    EXPECT_EQ(f.vertex_count(), (std::size_t{1} << t) + t - 1);
    EXPECT_EQ(count_is(f), mersenne_forest_is_count(t));
  }
  EXPECT_EQ(mersenne_forest_is_count(2), 15);
  EXPECT_EQ(mersenne_forest(3).vertex_count(), 10U);
  EXPECT_THROW(mersenne_forest(0), ConstructionError);
}

TEST(Ledger, JsonRoundTrip) {
  const StepResult r = construct::append_periodic(counted(path(4)), "10", 5);
  const Ledger ledger = {r.step};
  const Ledger back = ledger_from_json(ledger_to_json(ledger));
  ASSERT_EQ(back.size(), 1U);
  EXPECT_EQ(back[0].kind, StepKind::kAppendPeriodic);
  EXPECT_EQ(back[0].predicted_count, r.step.predicted_count);
  EXPECT_EQ(back[0].params, r.step.params);
  EXPECT_TRUE(ledger_to_json(ledger)[0]["predicted_count"].is_string());
  EXPECT_THROW(step_kind_from_name("nope"), std::invalid_argument);
}

}  // namespace
}  // namespace misgraph
