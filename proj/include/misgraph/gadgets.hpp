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

#ifndef MISGRAPH_GADGETS_HPP_
#define MISGRAPH_GADGETS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "misgraph/bigcount.hpp"
#include "misgraph/graph.hpp"
#include "misgraph/graph_io.hpp"

namespace misgraph {

class GadgetValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A bipartite graph with marked sets U1 (left part) and U2 (right part).
/// Attaching it to a graph with k maximal independent sets yields
/// h_prime * k + h_dprime of them.
struct MarkedGadget {
  std::string name;
  BipartiteGraph graph;
  VertexSubset u1{Side::kLeft, {}};
  VertexSubset u2{Side::kRight, {}};
  BigCount h_prime = 0;
  BigCount h_dprime = 0;
};

/// Builds a gadget and fills (h', h'') from the oracle.
MarkedGadget make_gadget(std::string name, BipartiteGraph graph, VertexSubset u1, VertexSubset u2);

/// Re-derives (h', h'') with the oracle and checks the structural
/// requirements. Throws GadgetValidationError naming the gadget.
void validate_gadget(const MarkedGadget& gadget);

/// nu / log2(h'); infinite when h' < 2.
double gamma_of(const MarkedGadget& gadget);

/// Exact comparison of nu/log2(h') between gadgets with h' >= 2.
bool gamma_less(const MarkedGadget& a, const MarkedGadget& b);

/// Residue-class certificate that {h' k + h'' : k >= 2} covers every
/// integer above `threshold`.
struct CoverageCertificate {
  bool covers = false;
  std::uint64_t modulus = 0;
  /// Largest uncovered positive integer (0 when none is uncovered).
  std::uint64_t threshold = 0;
};

/// Members with h' < 2 are ignored. `max_modulus` bounds lcm(h').
CoverageCertificate coverage_certificate(const std::vector<MarkedGadget>& members,
                                         std::uint64_t max_modulus = 10'000'000);

struct GadgetFamily {
  std::vector<MarkedGadget> members;
  std::uint64_t n0 = 0;
  /// max nu/log2(h'), rounded up to the next representable double.
  double gamma = 0.0;
  /// Member attaining gamma (exact comparison).
  std::size_t gamma_member = 0;
  /// Member indices by increasing nu/log2(h'), ties in list order.
  std::vector<std::size_t> gamma_order;
};

/// Validates every member, checks coverage above n0, computes gamma.
GadgetFamily make_family(std::vector<MarkedGadget> members, std::uint64_t n0);

/// The eight-gadget family with pairs (2,0), (3,0), (6,1), (18,5), (18,7),
/// (18,11), (18,13), (18,17) and n0 = 52.
GadgetFamily load_gamma_family();

/// P4 with its central left vertex marked: (h', h'') = (2, 1).
MarkedGadget double_plus_one_gadget();
/// P4 with its whole left part marked: (h', h'') = (1, 2).
MarkedGadget plus_two_gadget();

/// Graphs realising every count in [1, n0]: K1, K1,1, P4, then corona(n-2).
struct BaseTable {
  std::uint64_t n0 = 0;
  std::vector<BipartiteGraph> entries;  // entries[n - 1]
  const BipartiteGraph& at(std::uint64_t n) const;
};

BaseTable load_base_table(std::uint64_t n0);

/// Base-table graph for a single count, n >= 1.
BipartiteGraph base_graph(std::uint64_t n);

struct GadgetChoice {
  std::size_t index = 0;
  BigCount k;
};

/// n = h' k + h'' with k >= 2, minimising nu/log2(h'), ties by list order.
/// Requires n > family.n0.
GadgetChoice select_gadget(const GadgetFamily& family, const BigCount& n);

Json gadget_to_json(const MarkedGadget& gadget);
/// Validates the stored pair against the oracle.
MarkedGadget gadget_from_json(const Json& j);

Json family_to_json(const GadgetFamily& family);
GadgetFamily family_from_json(const Json& j);

}  // namespace misgraph

#endif  // MISGRAPH_GADGETS_HPP_
