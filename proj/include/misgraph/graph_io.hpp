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

#ifndef MISGRAPH_GRAPH_IO_HPP_
#define MISGRAPH_GRAPH_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "misgraph/graph.hpp"

namespace misgraph {

using Json = nlohmann::ordered_json;

class GraphParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// JSON form: {"left": L, "right": R, "edges": [[l, r], ...]}, edges sorted.
Json graph_to_json(const BipartiteGraph& g);
BipartiteGraph graph_from_json(const Json& j);

// Single-line compact JSON followed by '\n'.
std::string write_json(const BipartiteGraph& g);
BipartiteGraph parse_json(std::string_view text);

// "p bip L R E" header then one "e l r" line per edge, 1-based, sorted.
std::string write_dimacs(const BipartiteGraph& g);
// Accepts blank lines and "c ..." comments.
BipartiteGraph parse_dimacs(std::string_view text);

/// Dispatches on the first non-blank character ('{' selects JSON).
BipartiteGraph parse_graph(std::string_view text);

}  // namespace misgraph

#endif  // MISGRAPH_GRAPH_IO_HPP_
