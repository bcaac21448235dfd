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

#ifndef MISGRAPH_SYNTHESIZER_HPP_
#define MISGRAPH_SYNTHESIZER_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "misgraph/bigcount.hpp"
#include "misgraph/constructions.hpp"
#include "misgraph/gadgets.hpp"
#include "misgraph/graph.hpp"

namespace misgraph {

/// w_1^(q_1) ... w_k^(q_k).
struct BinaryPattern {
  struct Block {
    std::string word;
    std::uint64_t reps = 1;
    friend bool operator==(const Block&, const Block&) = default;
  };
  std::vector<Block> blocks;

  /// Comma-separated `word^reps` (e.g. "101^3,01^5"); `^reps` may be
  /// omitted for a single copy. Throws std::invalid_argument.
  static BinaryPattern parse(std::string_view spec);

  /// Throws std::invalid_argument unless every word is a non-empty {0,1}
  /// string, every reps >= 1 and the first bit is 1.
  void validate() const;

  std::string expanded() const;
  std::uint64_t bit_count() const;
  BigCount value() const;
  std::string to_string() const;

  friend bool operator==(const BinaryPattern&, const BinaryPattern&) = default;
};

struct VertexCertificate {
  std::size_t vertices = 0;
  /// 2 log2 n.
  double lower_bound = 0.0;
  /// gamma_bound * log2 n + nu0.
  double budget = 0.0;
  /// Pattern targets only: 2 bits + 20 sum(p_i + sqrt(p_i q_i)) + nu0.
  std::optional<double> pattern_budget;
};

struct RealizationResult {
  BipartiteGraph graph;
  Ledger ledger;
  BigCount target;
  VertexCertificate certificate;
};

struct VertexReport {
  std::size_t vertices = 0;
  /// ceil(2 log2 n).
  std::uint64_t lower_bound = 0;
  double budget = 0.0;
  /// nu / log2 n; absent for n = 1.
  std::optional<double> ratio;
  std::optional<double> pattern_budget;
};

class Synthesizer {
 public:
  static constexpr std::size_t kBaseVertices = 100;
  static constexpr double kGammaBound = 2.88;

  /// Uses the shipped family.
  Synthesizer();
  explicit Synthesizer(GadgetFamily family);

  const GadgetFamily& family() const { return family_; }

  /// Ledger for n without building any graph.
  Ledger plan(const BigCount& n) const;

  RealizationResult realize(const BigCount& n) const;
  RealizationResult realize_pattern(const BinaryPattern& pattern) const;

  /// Rebuilds the graph a ledger describes. Every step's count and vertex
  /// total is checked against the ledger; std::logic_error on mismatch.
  CountedGraph replay(const Ledger& ledger) const;

  /// realize(n) as a CountedGraph; the helper used for pattern appends.
  CountedGraph realize_counted(const BigCount& n) const;

 private:
  struct BaseMove {
    StepKind kind;
    std::size_t member;  // family index for kAttachGadget
    BigCount h_prime;
    BigCount h_dprime;
    std::size_t vertices;
  };
  struct BasePlan {
    std::size_t vertices = 0;
    int move = -1;  // -1: the base entry itself
    std::uint64_t from = 0;
  };

  void build_base_plan();
  void plan_small(std::uint64_t n, Ledger& ledger) const;
  VertexCertificate certify(const BigCount& n, std::size_t vertices) const;
  CountedGraph apply_step(const CountedGraph& g, const ConstructionStep& step) const;

  GadgetFamily family_;
  std::vector<BaseMove> moves_;
  std::vector<BasePlan> base_plan_;  // index n, for n in [1, n0]
};

/// The process-wide default synthesizer.
const Synthesizer& default_synthesizer();

VertexReport vertex_report(const RealizationResult& result);
std::string report_to_text(const VertexReport& report);
Json report_to_json(const VertexReport& report);

/// graph + ledger + certificate.
Json result_to_json(const RealizationResult& result);

/// Wraps default_synthesizer().realize_counted.
const HelperRealizer& default_helper_realizer();

}  // namespace misgraph

#endif  // MISGRAPH_SYNTHESIZER_HPP_
