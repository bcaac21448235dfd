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

#include "misgraph/graph_io.hpp"

#include <charconv>
#include <cstdint>
#include <sstream>
#include <vector>

namespace misgraph {
namespace {

std::uint64_t read_natural(const Json& j, const char* what) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw GraphParseError(std::string(what) + " must be a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

BipartiteGraph checked_graph(std::uint64_t left, std::uint64_t right, const std::vector<Edge>& edges) {
  try {
    return BipartiteGraph(left, right, edges);
  } catch (const std::invalid_argument& e) {
    throw GraphParseError(e.what());
  }
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

std::uint64_t to_natural(std::string_view word, std::size_t line_no) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc() || ptr != word.data() + word.size()) {
    throw GraphParseError("line " + std::to_string(line_no) + ": expected a natural, got '" +
                          std::string(word) + "'");
  }
  return value;
}

}  // namespace

Json graph_to_json(const BipartiteGraph& g) {
  Json edges = Json::array();
  for (const auto& [l, r] : g.edges()) edges.push_back(Json::array({l, r}));
  Json j;
  j["left"] = g.left_size();
  j["right"] = g.right_size();
  j["edges"] = std::move(edges);
  return j;
}

BipartiteGraph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("left") || !j.contains("right") || !j.contains("edges")) {
    throw GraphParseError("graph JSON needs \"left\", \"right\" and \"edges\"");
  }
  const auto left = read_natural(j.at("left"), "left");
  const auto right = read_natural(j.at("right"), "right");
  const Json& list = j.at("edges");
  if (!list.is_array()) throw GraphParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (const auto& e : list) {
    if (!e.is_array() || e.size() != 2) throw GraphParseError("each edge must be [l, r]");
    edges.emplace_back(static_cast<std::uint32_t>(read_natural(e[0], "edge endpoint")),
                       static_cast<std::uint32_t>(read_natural(e[1], "edge endpoint")));
  }
  return checked_graph(left, right, edges);
}

std::string write_json(const BipartiteGraph& g) { return graph_to_json(g).dump() + "\n"; }

BipartiteGraph parse_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw GraphParseError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(j);
}

std::string write_dimacs(const BipartiteGraph& g) {
  const auto edges = g.edges();
  std::ostringstream out;
  out << "p bip " << g.left_size() << ' ' << g.right_size() << ' ' << edges.size() << '\n';
  for (const auto& [l, r] : edges) out << "e " << l + 1 << ' ' << r + 1 << '\n';
  return out.str();
}

BipartiteGraph parse_dimacs(std::string_view text) {
  bool have_header = false;
  std::uint64_t left = 0, right = 0, declared = 0;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0] == "c") continue;
    if (words[0] == "p") {
      if (have_header) throw GraphParseError("line " + std::to_string(line_no) + ": second header");
      if (words.size() != 5 || words[1] != "bip") {
        throw GraphParseError("line " + std::to_string(line_no) + ": header must be 'p bip L R E'");
      }
      left = to_natural(words[2], line_no);
      right = to_natural(words[3], line_no);
      declared = to_natural(words[4], line_no);
      have_header = true;
    } else if (words[0] == "e") {
      if (!have_header) throw GraphParseError("line " + std::to_string(line_no) + ": edge before header");
      if (words.size() != 3) throw GraphParseError("line " + std::to_string(line_no) + ": edge must be 'e l r'");
      const auto l = to_natural(words[1], line_no);
      const auto r = to_natural(words[2], line_no);
      if (l == 0 || r == 0) throw GraphParseError("line " + std::to_string(line_no) + ": indices are 1-based");
      edges.emplace_back(static_cast<std::uint32_t>(l - 1), static_cast<std::uint32_t>(r - 1));
    } else {
      throw GraphParseError("line " + std::to_string(line_no) + ": unknown record '" +
                            std::string(words[0]) + "'");
    }
  }
  if (!have_header) throw GraphParseError("missing 'p bip' header");
  if (declared != edges.size()) {
    throw GraphParseError("header declares " + std::to_string(declared) + " edges, found " +
                          std::to_string(edges.size()));
  }
  return checked_graph(left, right, edges);
}

BipartiteGraph parse_graph(std::string_view text) {
  for (char c : text) {
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
    return c == '{' ? parse_json(text) : parse_dimacs(text);
  }
  throw GraphParseError("empty graph file");
}

}  // namespace misgraph
