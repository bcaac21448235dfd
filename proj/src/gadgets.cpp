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

#include "misgraph/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "misgraph/oracle.hpp"

namespace misgraph {
namespace {

std::vector<std::size_t> order_by_gamma(const std::vector<MarkedGadget>& members) {
  std::vector<std::size_t> order(members.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return gamma_less(members[a], members[b]);
  });
  return order;
}

struct GadgetSpec {
  const char* name;
  std::size_t left;
  std::size_t right;
  std::vector<Edge> edges;
  std::vector<std::uint32_t> u1;
  std::vector<std::uint32_t> u2;
  int h_prime;
  int h_dprime;
};

// Top row of each drawing is the left part; bold vertices are the marks.
const std::vector<GadgetSpec>& gamma_specs() {
  static const std::vector<GadgetSpec> specs = {
      {"K11", 1, 1, {{0, 0}}, {}, {}, 2, 0},
      {"P4", 2, 2, {{0, 0}, {1, 0}, {1, 1}}, {}, {}, 3, 0},
      {"P7", 4, 3, {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {3, 2}}, {1}, {}, 6, 1},
      {"T18_5", 6, 6,
       {{0, 0}, {1, 0}, {1, 1}, {1, 2}, {2, 2}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {5, 3}, {5, 5}},
       {1}, {}, 18, 5},
      {"T18_7", 6, 6,
       {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 4}, {4, 3}, {4, 5}, {5, 5}},
       {2}, {}, 18, 7},
      {"T18_11", 6, 6,
       {{0, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 4}, {3, 5}, {4, 4}, {5, 5}},
       {1}, {}, 18, 11},
      {"T18_13", 6, 6,
       {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {3, 2}, {3, 3}, {4, 3}, {4, 4}, {5, 4}, {5, 5}},
       {0}, {3}, 18, 13},
      {"T18_17", 6, 6,
       {{0, 0}, {1, 0}, {1, 1}, {2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 2}, {4, 3}, {5, 4}, {5, 5}},
       {0}, {4}, 18, 17},
  };
  return specs;
}

std::string pair_text(const BigCount& a, const BigCount& b) {
  return "(" + to_decimal(a) + "," + to_decimal(b) + ")";
}

BigCount read_count(const Json& j, const char* what) {
  if (j.is_number_integer()) return BigCount(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    if (!text.empty() && text[0] == '-') return -parse_count(std::string_view(text).substr(1));
    return parse_count(text);
  }
  throw GraphParseError(std::string(what) + " must be an integer or a decimal string");
}

std::vector<std::uint32_t> read_indices(const Json& j) {
  if (!j.is_array()) throw GraphParseError("marked set must be an array of indices");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) {
    if (!v.is_number_unsigned()) throw GraphParseError("marked index must be a natural");
    out.push_back(v.get<std::uint32_t>());
  }
  return out;
}

}  // namespace

MarkedGadget make_gadget(std::string name, BipartiteGraph graph, VertexSubset u1, VertexSubset u2) {
  MarkedGadget g{std::move(name), std::move(graph), std::move(u1), std::move(u2), 0, 0};
  const HValues h = h_values(g.graph, g.u1, g.u2);
  g.h_prime = h.h_prime;
  g.h_dprime = h.h_dprime;
  return g;
}

void validate_gadget(const MarkedGadget& gadget) {
  const std::string who = "gadget '" + gadget.name + "'";
  if (gadget.u1.side() != Side::kLeft || gadget.u2.side() != Side::kRight) {
    throw GadgetValidationError(who + ": U1 must be a left subset and U2 a right subset");
  }
  try {
    validate_subset(gadget.graph, gadget.u1);
    validate_subset(gadget.graph, gadget.u2);
  } catch (const std::invalid_argument& e) {
    throw GadgetValidationError(who + ": " + e.what());
  }
  if (gadget.graph.vertex_count() == 0 || gadget.graph.has_isolated_vertices()) {
    throw GadgetValidationError(who + ": graph must be non-empty without isolated vertices");
  }
  const HValues h = h_values(gadget.graph, gadget.u1, gadget.u2);
  if (h.h_prime != gadget.h_prime || h.h_dprime != gadget.h_dprime) {
    throw GadgetValidationError(who + ": declared " + pair_text(gadget.h_prime, gadget.h_dprime) +
                                " but the oracle gives " + pair_text(h.h_prime, h.h_dprime));
  }
}

double gamma_of(const MarkedGadget& gadget) {
  if (gadget.h_prime < 2) return std::numeric_limits<double>::infinity();
  return static_cast<double>(gadget.graph.vertex_count()) / log2_of(gadget.h_prime);
}

bool gamma_less(const MarkedGadget& a, const MarkedGadget& b) {
  // nu_a / log h_a < nu_b / log h_b  <=>  h_b^nu_a < h_a^nu_b
  const auto nu_a = static_cast<unsigned>(a.graph.vertex_count());
  const auto nu_b = static_cast<unsigned>(b.graph.vertex_count());
  return boost::multiprecision::pow(b.h_prime, nu_a) < boost::multiprecision::pow(a.h_prime, nu_b);
}

CoverageCertificate coverage_certificate(const std::vector<MarkedGadget>& members,
                                         std::uint64_t max_modulus) {
  struct Progression {
    std::int64_t step;
    std::int64_t offset;
  };
  std::vector<Progression> progs;
  std::uint64_t modulus = 1;
  for (const auto& m : members) {
    if (m.h_prime < 2) continue;
    if (m.h_prime > max_modulus || boost::multiprecision::abs(m.h_dprime) > max_modulus) return {};
    const auto step = m.h_prime.convert_to<std::int64_t>();
    progs.push_back({step, m.h_dprime.convert_to<std::int64_t>()});
    modulus = std::lcm(modulus, static_cast<std::uint64_t>(step));
    if (modulus > max_modulus) return {};
  }
  if (progs.empty()) return {};
  CoverageCertificate cert{true, modulus, 0};
  const auto mod = static_cast<std::int64_t>(modulus);
  for (std::int64_t c = 0; c < mod; ++c) {
    // Smallest member of class c reached with k >= 2.
    std::int64_t first = std::numeric_limits<std::int64_t>::max();
    for (const auto& p : progs) {
      if (((c - p.offset) % p.step + p.step) % p.step != 0) continue;
      std::int64_t start = std::max<std::int64_t>(2 * p.step + p.offset, 1);
      start += ((c - start) % mod + mod) % mod;
      first = std::min(first, start);
    }
    if (first == std::numeric_limits<std::int64_t>::max()) return {false, modulus, 0};
    if (first - mod >= 1) cert.threshold = std::max(cert.threshold, static_cast<std::uint64_t>(first - mod));
  }
  return cert;
}

GadgetFamily make_family(std::vector<MarkedGadget> members, std::uint64_t n0) {
  if (members.empty()) throw GadgetValidationError("gadget family is empty");
  for (const auto& m : members) {
    validate_gadget(m);
    if (m.h_prime < 2) {
      throw GadgetValidationError("gadget '" + m.name + "': h' must be at least 2 in a family");
    }
  }
  const CoverageCertificate cert = coverage_certificate(members);
  if (!cert.covers) throw GadgetValidationError("gadget family leaves a residue class uncovered");
  if (cert.threshold > n0) {
    throw GadgetValidationError("gadget family leaves " + std::to_string(cert.threshold) +
                                " uncovered, above n0 = " + std::to_string(n0));
  }
  GadgetFamily family{std::move(members), n0, 0.0, 0, {}};
  family.gamma_order = order_by_gamma(family.members);
  for (std::size_t i = 1; i < family.members.size(); ++i) {
    if (gamma_less(family.members[family.gamma_member], family.members[i])) family.gamma_member = i;
  }
  family.gamma = std::nextafter(gamma_of(family.members[family.gamma_member]),
                                std::numeric_limits<double>::infinity());
  return family;
}

GadgetFamily load_gamma_family() {
  std::vector<MarkedGadget> members;
  for (const auto& spec : gamma_specs()) {
    members.push_back({spec.name, BipartiteGraph(spec.left, spec.right, spec.edges),
                       VertexSubset(Side::kLeft, spec.u1), VertexSubset(Side::kRight, spec.u2),
                       spec.h_prime, spec.h_dprime});
  }
  return make_family(std::move(members), 52);
}

MarkedGadget double_plus_one_gadget() {
  return {"P4_centre", path(4), VertexSubset(Side::kLeft, {1}), VertexSubset(Side::kRight, {}), 2, 1};
}

MarkedGadget plus_two_gadget() {
  return {"P4_left", path(4), VertexSubset(Side::kLeft, {0, 1}), VertexSubset(Side::kRight, {}), 1, 2};
}

const BipartiteGraph& BaseTable::at(std::uint64_t n) const {
  if (n < 1 || n > n0) {
    throw std::out_of_range("base table covers [1, " + std::to_string(n0) + "], asked for " +
                            std::to_string(n));
  }
  return entries[n - 1];
}

BipartiteGraph base_graph(std::uint64_t n) {
  switch (n) {
    case 0:
      throw std::invalid_argument("no graph has zero maximal independent sets");
    case 1:
      return single_vertex();
    case 2:
      return complete_bipartite(1, 1);
    case 3:
      return path(4);
    default:
      return corona(n - 2);
  }
}

BaseTable load_base_table(std::uint64_t n0) {
  if (n0 < 4) throw std::invalid_argument("base table needs n0 >= 4");
  BaseTable table{n0, {}};
  table.entries.reserve(n0);
  for (std::uint64_t n = 1; n <= n0; ++n) {
    table.entries.push_back(base_graph(n));
    // Larger coronas are past the oracle cap; their count is structural.
    const BipartiteGraph& g = table.entries.back();
    if (oracle_feasible(g) && count_mis(g) != n) {
      throw GadgetValidationError("base table entry " + std::to_string(n) + " fails the oracle");
    }
  }
  return table;
}

GadgetChoice select_gadget(const GadgetFamily& family, const BigCount& n) {
  if (n <= family.n0) {
    throw std::invalid_argument("select_gadget needs n > n0 = " + std::to_string(family.n0));
  }
  std::vector<std::size_t> fallback;
  if (family.gamma_order.size() != family.members.size()) fallback = order_by_gamma(family.members);
  const auto& order = fallback.empty() ? family.gamma_order : fallback;
  for (std::size_t i : order) {
    const MarkedGadget& m = family.members[i];
    if (m.h_prime < 2) continue;
    const BigCount rest = n - m.h_dprime;
    if (rest % m.h_prime != 0) continue;
    BigCount k = rest / m.h_prime;
    if (k >= 2) return {i, std::move(k)};
  }
  throw std::logic_error("no family member applies to n = " + to_decimal(n) +
                         "; the family does not cover this residue");
}

Json gadget_to_json(const MarkedGadget& gadget) {
  Json j;
  j["name"] = gadget.name;
  j["graph"] = graph_to_json(gadget.graph);
  j["u1"] = gadget.u1.members();
  j["u2"] = gadget.u2.members();
  j["h_prime"] = gadget.h_prime.convert_to<std::int64_t>();
  j["h_dprime"] = gadget.h_dprime.convert_to<std::int64_t>();
  return j;
}

MarkedGadget gadget_from_json(const Json& j) {
  if (!j.is_object()) throw GraphParseError("gadget must be a JSON object");
  for (const char* key : {"graph", "u1", "u2", "h_prime", "h_dprime"}) {
    if (!j.contains(key)) throw GraphParseError(std::string("gadget is missing \"") + key + "\"");
  }
  MarkedGadget g{j.value("name", std::string("imported")),
                 graph_from_json(j.at("graph")),
                 VertexSubset(Side::kLeft, read_indices(j.at("u1"))),
                 VertexSubset(Side::kRight, read_indices(j.at("u2"))),
                 read_count(j.at("h_prime"), "h_prime"),
                 read_count(j.at("h_dprime"), "h_dprime")};
  validate_gadget(g);
  return g;
}

Json family_to_json(const GadgetFamily& family) {
  Json members = Json::array();
  for (const auto& m : family.members) members.push_back(gadget_to_json(m));
  Json j;
  j["n0"] = family.n0;
  j["gamma"] = family.gamma;
  j["members"] = std::move(members);
  return j;
}

GadgetFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("members") || !j.at("members").is_array()) {
    throw GraphParseError("gadget family needs a \"members\" array");
  }
  std::vector<MarkedGadget> members;
  for (const auto& m : j.at("members")) members.push_back(gadget_from_json(m));
  std::uint64_t n0 = 0;
  if (j.contains("n0")) {
    n0 = j.at("n0").get<std::uint64_t>();
  } else {
    const CoverageCertificate cert = coverage_certificate(members);
    n0 = std::max<std::uint64_t>(cert.threshold, 4);
  }
  return make_family(std::move(members), n0);
}

}  // namespace misgraph
