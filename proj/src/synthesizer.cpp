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

#include "misgraph/synthesizer.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace misgraph {
namespace {

std::uint64_t small_value(const BigCount& n) {
  return n.convert_to<std::uint64_t>();
}

BigCount count_param(const Json& params, const char* key) {
  const Json& v = params.at(key);
  return v.is_string() ? parse_count(v.get<std::string>()) : BigCount(v.get<std::uint64_t>());
}

Json attach_params(const MarkedGadget& gadget) {
  Json params;
  params["gadget"] = gadget.name;
  params["h_prime"] = to_decimal(gadget.h_prime);
  params["h_dprime"] = to_decimal(gadget.h_dprime);
  return params;
}

}  // namespace

// --- BinaryPattern ---------------------------------------------------------

BinaryPattern BinaryPattern::parse(std::string_view spec) {
  if (spec.empty()) throw std::invalid_argument("empty pattern");
  BinaryPattern pattern;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = spec.find(',', pos);
    const std::string_view token =
        spec.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const std::size_t caret = token.find('^');
    Block block;
    block.word = std::string(token.substr(0, caret));
    if (caret != std::string_view::npos) {
      const std::string_view digits = token.substr(caret + 1);
      const char* end = digits.data() + digits.size();
      const auto [ptr, ec] = std::from_chars(digits.data(), end, block.reps);
      if (digits.empty() || ec != std::errc() || ptr != end) {
        throw std::invalid_argument("bad repetition count in pattern block '" + std::string(token) + "'");
      }
    }
    pattern.blocks.push_back(std::move(block));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  pattern.validate();
  return pattern;
}

void BinaryPattern::validate() const {
  if (blocks.empty()) throw std::invalid_argument("pattern has no blocks");
  for (const auto& b : blocks) {
    if (b.word.empty()) throw std::invalid_argument("pattern block with an empty word");
    if (b.word.find_first_not_of("01") != std::string::npos) {
      throw std::invalid_argument("pattern word '" + b.word + "' is not binary");
    }
    if (b.reps == 0) throw std::invalid_argument("pattern block '" + b.word + "' repeated zero times");
  }
  if (blocks.front().word.front() != '1') {
    throw std::invalid_argument("pattern must start with a 1 bit (no leading zero)");
  }
}

std::string BinaryPattern::expanded() const {
  std::string out;
  out.reserve(bit_count());
  for (const auto& b : blocks) {
    for (std::uint64_t i = 0; i < b.reps; ++i) out += b.word;
  }
  return out;
}

std::uint64_t BinaryPattern::bit_count() const {
  std::uint64_t total = 0;
  for (const auto& b : blocks) total += b.word.size() * b.reps;
  return total;
}

BigCount BinaryPattern::value() const { return binary_value(expanded()); }

std::string BinaryPattern::to_string() const {
  std::string out;
  for (const auto& b : blocks) {
    if (!out.empty()) out += ',';
    out += b.word + '^' + std::to_string(b.reps);
  }
  return out;
}

// --- Synthesizer -----------------------------------------------------------

Synthesizer::Synthesizer() : Synthesizer(load_gamma_family()) {}

Synthesizer::Synthesizer(GadgetFamily family) : family_(std::move(family)) { build_base_plan(); }

void Synthesizer::build_base_plan() {
  moves_.clear();
  for (std::size_t i = 0; i < family_.members.size(); ++i) {
    const auto& m = family_.members[i];
    moves_.push_back({StepKind::kAttachGadget, i, m.h_prime, m.h_dprime, m.graph.vertex_count()});
  }
  for (const auto& [kind, gadget] : {std::pair{StepKind::kDoublePlusOne, double_plus_one_gadget()},
                                     std::pair{StepKind::kPlusTwo, plus_two_gadget()}}) {
    moves_.push_back({kind, 0, gadget.h_prime, gadget.h_dprime, gadget.graph.vertex_count()});
  }

  const std::uint64_t n0 = std::max<std::uint64_t>(family_.n0, 1);
  base_plan_.assign(n0 + 1, BasePlan{});
  for (std::uint64_t n = 1; n <= n0; ++n) {
    BasePlan best{base_graph(n).vertex_count(), -1, 0};
    for (std::size_t mi = 0; mi < moves_.size(); ++mi) {
      const BaseMove& m = moves_[mi];
      if (m.h_prime < 1 || m.h_dprime >= n) continue;
      const BigCount rest = BigCount(n) - m.h_dprime;
      if (rest % m.h_prime != 0) continue;
      const std::uint64_t k = small_value(rest / m.h_prime);
      if (k < 2 || k >= n) continue;
      const std::size_t cost = base_plan_[k].vertices + m.vertices;
      if (cost < best.vertices) best = {cost, static_cast<int>(mi), k};
    }
    base_plan_[n] = best;
  }
}

void Synthesizer::plan_small(std::uint64_t n, Ledger& ledger) const {
  std::vector<std::size_t> chain;
  while (base_plan_[n].move >= 0) {
    chain.push_back(static_cast<std::size_t>(base_plan_[n].move));
    n = base_plan_[n].from;
  }
  Json base_params;
  base_params["n"] = n;
  ledger.push_back({StepKind::kBase, std::move(base_params), n, base_plan_[n].vertices});
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
    const BaseMove& m = moves_[*it];
    const ConstructionStep& prev = ledger.back();
    Json params = m.kind == StepKind::kAttachGadget ? attach_params(family_.members[m.member])
                                                     : Json::object();
    ledger.push_back({m.kind, std::move(params), m.h_prime * prev.predicted_count + m.h_dprime,
                      prev.vertex_count + m.vertices});
  }
}

Ledger Synthesizer::plan(const BigCount& n) const {
  if (n < 1) throw std::invalid_argument("cannot realise " + to_decimal(n) + " maximal independent sets");
  std::vector<std::size_t> stack;
  BigCount current = n;
  while (current > family_.n0) {
    GadgetChoice choice = select_gadget(family_, current);
    stack.push_back(choice.index);
    current = std::move(choice.k);
  }
  Ledger ledger;
  plan_small(small_value(current), ledger);
  for (auto it = stack.rbegin(); it != stack.rend(); ++it) {
    const MarkedGadget& m = family_.members[*it];
    const ConstructionStep& prev = ledger.back();
    ledger.push_back({StepKind::kAttachGadget, attach_params(m),
                      m.h_prime * prev.predicted_count + m.h_dprime,
                      prev.vertex_count + m.graph.vertex_count()});
  }
  if (ledger.back().predicted_count != n) throw std::logic_error("plan arithmetic mismatch for " + to_decimal(n));
  return ledger;
}

CountedGraph Synthesizer::apply_step(const CountedGraph& g, const ConstructionStep& step) const {
  const Json& p = step.params;
  switch (step.kind) {
    case StepKind::kBase:
      throw std::logic_error("base step in the middle of a ledger");
    case StepKind::kAttachGadget: {
      const std::string name = p.at("gadget").get<std::string>();
      for (const auto& m : family_.members) {
        if (m.name == name) return construct::attach_gadget(g, m).out;
      }
      throw std::invalid_argument("ledger names gadget '" + name + "' outside the family");
    }
    case StepKind::kAddMatching:
      return construct::add_matching(g, p.at("m").get<std::size_t>()).out;
    case StepKind::kDoublePlusOne:
      return construct::double_plus_one(g).out;
    case StepKind::kPlusTwo:
      return construct::plus_two(g).out;
    case StepKind::kSumGraphs:
      return construct::sum_graphs(g, realize_counted(count_param(p, "operand"))).out;
    case StepKind::kMultiplyShiftAdd:
      return construct::multiply_shift_add(g, realize_counted(count_param(p, "operand")),
                                           p.at("s").get<std::uint64_t>(),
                                           p.at("t").get<std::uint64_t>())
          .out;
    case StepKind::kAppendPeriodic:
      return construct::append_periodic(
                 g, p.at("word").get<std::string>(), p.at("reps").get<std::uint64_t>(),
                 [this](const BigCount& v) { return realize_counted(v); })
          .out;
  }
  throw std::logic_error("unknown step kind");
}

CountedGraph Synthesizer::replay(const Ledger& ledger) const {
  if (ledger.empty() || ledger.front().kind != StepKind::kBase) {
    throw std::invalid_argument("ledger must start with a base step");
  }
  const BigCount seed = count_param(ledger.front().params, "n");
  if (seed < 1) throw std::invalid_argument("base step needs n >= 1");
  CountedGraph current{base_graph(small_value(seed)), seed};
  for (std::size_t i = 0; i < ledger.size(); ++i) {
    const ConstructionStep& step = ledger[i];
    if (i > 0) current = apply_step(current, step);
    if (current.mis != step.predicted_count || current.graph.vertex_count() != step.vertex_count) {
      throw std::logic_error("ledger step " + std::to_string(i) + " (" + step_kind_name(step.kind) +
                             ") replays to count " + to_decimal(current.mis) + " on " +
                             std::to_string(current.graph.vertex_count()) + " vertices, ledger says " +
                             to_decimal(step.predicted_count) + " on " +
                             std::to_string(step.vertex_count));
    }
  }
  return current;
}

VertexCertificate Synthesizer::certify(const BigCount& n, std::size_t vertices) const {
  const double lg = log2_of(n);
  return {vertices, 2.0 * lg, kGammaBound * lg + static_cast<double>(kBaseVertices), std::nullopt};
}

RealizationResult Synthesizer::realize(const BigCount& n) const {
  Ledger ledger = plan(n);
  CountedGraph built = replay(ledger);
  VertexCertificate cert = certify(n, built.graph.vertex_count());
  return {std::move(built.graph), std::move(ledger), n, cert};
}

CountedGraph Synthesizer::realize_counted(const BigCount& n) const {
  return replay(plan(n));
}

RealizationResult Synthesizer::realize_pattern(const BinaryPattern& pattern) const {
  pattern.validate();
  const std::string bits = pattern.expanded();
  const BigCount target = binary_value(bits);

  // Blocks still to append after the seed, as (word, reps).
  std::vector<BinaryPattern::Block> rest;
  std::string seed_bits;
  std::size_t next_block = 1;
  const auto& first = pattern.blocks.front();
  if (bits.size() == 1) {
    seed_bits = "1";
  } else if (first.word != "1") {
    seed_bits = first.word;
    if (first.reps > 1) rest.push_back({first.word, first.reps - 1});
  } else if (first.reps >= 2) {
    seed_bits = "11";
    if (first.reps > 2) rest.push_back({"1", first.reps - 2});
  } else {
    // A lone leading "1" is K1, which has an isolated vertex: borrow the
    // next bit into the seed.
    const auto& second = pattern.blocks[1];
    seed_bits = "1" + second.word.substr(0, 1);
    if (second.word.size() > 1) rest.push_back({second.word.substr(1), 1});
    if (second.reps > 1) rest.push_back({second.word, second.reps - 1});
    next_block = 2;
  }
  for (std::size_t i = next_block; i < pattern.blocks.size(); ++i) rest.push_back(pattern.blocks[i]);

  Ledger ledger = plan(binary_value(seed_bits));
  ledger.back().params["seed_bits"] = seed_bits;
  CountedGraph current = replay(ledger);
  const HelperRealizer helper = [this](const BigCount& v) { return realize_counted(v); };
  for (const auto& block : rest) {
    StepResult r = construct::append_periodic(current, block.word, block.reps, helper);
    ledger.push_back(std::move(r.step));
    current = std::move(r.out);
  }
  if (to_binary(current.mis) != bits) {
    throw std::logic_error("pattern realisation produced " + to_binary(current.mis) +
                           ", expected " + bits);
  }

  VertexCertificate cert = certify(target, current.graph.vertex_count());
  double overhead = 0.0;
  for (const auto& b : pattern.blocks) {
    const double p = static_cast<double>(b.word.size());
    overhead += p + std::sqrt(p * static_cast<double>(b.reps));
  }
  cert.pattern_budget = 2.0 * static_cast<double>(bits.size()) + 20.0 * overhead +
                        static_cast<double>(kBaseVertices);
  return {std::move(current.graph), std::move(ledger), target, cert};
}

const Synthesizer& default_synthesizer() {
  static const Synthesizer instance;
  return instance;
}

const HelperRealizer& default_helper_realizer() {
  static const HelperRealizer helper = [](const BigCount& n) {
    return default_synthesizer().realize_counted(n);
  };
  return helper;
}

// --- reporting -------------------------------------------------------------

VertexReport vertex_report(const RealizationResult& result) {
  VertexReport report;
  report.vertices = result.graph.vertex_count();
  if (result.target > 1) {
    const BigCount square = result.target * result.target;
    report.lower_bound = bit_length(square - 1);
    report.ratio = static_cast<double>(report.vertices) / log2_of(result.target);
  }
  report.budget = result.certificate.budget;
  report.pattern_budget = result.certificate.pattern_budget;
  return report;
}

std::string report_to_text(const VertexReport& report) {
  std::string out = "vertices: " + std::to_string(report.vertices) + "\n";
  out += "lower_bound: " + std::to_string(report.lower_bound) + "\n";
  out += "budget: " + std::to_string(report.budget) + "\n";
  if (report.pattern_budget) out += "pattern_budget: " + std::to_string(*report.pattern_budget) + "\n";
  out += "ratio: " + (report.ratio ? std::to_string(*report.ratio) : std::string("n/a")) + "\n";
  return out;
}

Json report_to_json(const VertexReport& report) {
  Json j;
  j["vertices"] = report.vertices;
  j["lower_bound"] = report.lower_bound;
  j["budget"] = report.budget;
  if (report.pattern_budget) j["pattern_budget"] = *report.pattern_budget;
  j["ratio"] = report.ratio ? Json(*report.ratio) : Json(nullptr);
  return j;
}

Json result_to_json(const RealizationResult& result) {
  Json j;
  j["target"] = to_decimal(result.target);
  j["graph"] = graph_to_json(result.graph);
  j["ledger"] = ledger_to_json(result.ledger);
  Json cert;
  cert["vertices"] = result.certificate.vertices;
  cert["lower_bound"] = result.certificate.lower_bound;
  cert["budget"] = result.certificate.budget;
  if (result.certificate.pattern_budget) cert["pattern_budget"] = *result.certificate.pattern_budget;
  j["certificate"] = std::move(cert);
  return j;
}

}  // namespace misgraph
