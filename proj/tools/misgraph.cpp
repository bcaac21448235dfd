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

// misgraph: build bipartite graphs with a prescribed number of maximal
// independent sets, count them, and search for gadgets.
//
// Exit codes: 0 ok, 1 unexpected failure, 2 bad input, 3 verification
// mismatch, 4 graph too large for the oracle.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "misgraph/bigcount.hpp"
#include "misgraph/constructions.hpp"
#include "misgraph/gadget_search.hpp"
#include "misgraph/gadgets.hpp"
#include "misgraph/graph_io.hpp"
#include "misgraph/oracle.hpp"
#include "misgraph/synthesizer.hpp"

namespace {

using namespace misgraph;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitOracleCap = 4;

struct ExitError {
  int code;
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ExitError{kExitParse, "cannot open " + path};
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw ExitError{kExitFailure, "cannot write " + out_path};
  out << text;
}

// --- realize ---------------------------------------------------------------

struct RealizeArgs {
  std::string n;
  std::string pattern;
  std::string format = "json";
  std::string out;
  std::string family;
  bool verify = false;
  bool report = false;
  bool ledger_only = false;
};

int run_realize(const RealizeArgs& args) {
  if (args.n.empty() == args.pattern.empty()) {
    throw ExitError{kExitParse, "give exactly one of --n and --pattern"};
  }
  std::optional<Synthesizer> custom;
  if (!args.family.empty()) {
    try {
      custom.emplace(family_from_json(Json::parse(read_file(args.family))));
    } catch (const ExitError&) {
      throw;
    } catch (const std::exception& e) {
      throw ExitError{kExitParse, std::string("bad gadget family: ") + e.what()};
    }
  }
  const Synthesizer& synth = custom ? *custom : default_synthesizer();

  RealizationResult result;
  try {
    if (!args.n.empty()) {
      const BigCount n = parse_count(args.n);
      if (n < 1) throw std::invalid_argument("--n must be at least 1");
      result = synth.realize(n);
    } else {
      result = synth.realize_pattern(BinaryPattern::parse(args.pattern));
    }
  } catch (const ConstructionError& e) {
    throw ExitError{kExitParse, e.what()};
  } catch (const std::invalid_argument& e) {
    throw ExitError{kExitParse, e.what()};
  }

  if (args.format == "json") {
    write_output(write_json(result.graph), args.out);
  } else if (args.format == "dimacs") {
    write_output(write_dimacs(result.graph), args.out);
  } else {
    write_output(result_to_json(result).dump() + "\n", args.out);
  }

  if (args.verify) {
    if (oracle_feasible(result.graph)) {
      const BigCount counted = count_mis(result.graph);
      if (counted != result.target) {
        throw ExitError{kExitMismatch, "verification mismatch: oracle counts " + to_decimal(counted) +
                                           ", target " + to_decimal(result.target)};
      }
      std::cerr << "verified: " << to_decimal(counted) << "\n";
    } else if (args.ledger_only) {
      std::cerr << "ledger-certified: " << to_decimal(result.ledger.back().predicted_count) << "\n";
    } else {
      throw ExitError{kExitOracleCap,
                      "graph too large for the oracle; use --force-ledger-only to accept the ledger"};
    }
  }
  if (args.report) std::cerr << report_to_text(vertex_report(result));
  return kExitOk;
}

// --- verify ----------------------------------------------------------------

int run_verify(const std::string& path, bool count_is_too) {
  BipartiteGraph g;
  try {
    g = parse_graph(read_file(path));
  } catch (const GraphParseError& e) {
    throw ExitError{kExitParse, e.what()};
  } catch (const std::invalid_argument& e) {
    throw ExitError{kExitParse, e.what()};
  } catch (const nlohmann::json::exception& e) {
    throw ExitError{kExitParse, e.what()};
  }
  try {
    std::cout << "mis: " << to_decimal(count_mis(g)) << "\n";
    if (count_is_too) std::cout << "is: " << to_decimal(count_is(g)) << "\n";
  } catch (const OracleCapExceeded& e) {
    throw ExitError{kExitOracleCap, std::string("too large for oracle: ") + e.what()};
  }
  return kExitOk;
}

// --- search-gadgets --------------------------------------------------------

int run_search(std::size_t max_vertices, std::size_t max_part, bool emit_families,
               std::uint64_t n0_max) {
  std::vector<MarkedGadget> pool;
  try {
    enumerate_marked_gadgets({max_vertices, max_part, 0}, [&](const MarkedGadget& g) {
      std::cout << gadget_to_json(g).dump() << "\n";
      if (emit_families) pool.push_back(g);
    });
  } catch (const SearchGuardExceeded& e) {
    throw ExitError{kExitParse, e.what()};
  }
  if (emit_families && !pool.empty()) {
    for (const auto& family : find_covering_families(pool, n0_max)) {
      std::cout << family_to_json(family).dump() << "\n";
    }
  }
  return kExitOk;
}

// --- mersenne --------------------------------------------------------------

int run_mersenne(std::uint64_t t, const std::string& format) {
  BipartiteGraph forest;
  try {
    forest = mersenne_forest(t);
  } catch (const ConstructionError& e) {
    throw ExitError{kExitParse, e.what()};
  }
  const BigCount expected = mersenne_forest_is_count(t);
  if (oracle_feasible(forest)) {
    const BigCount counted = count_is(forest);
    if (counted != expected) {
      throw ExitError{kExitMismatch, "oracle counts " + to_decimal(counted) + " independent sets, expected " +
                                         to_decimal(expected)};
    }
  }
  if (format == "dimacs") {
    std::cout << write_dimacs(forest);
  } else {
    Json j;
    j["t"] = t;
    j["vertices"] = forest.vertex_count();
    j["is"] = to_decimal(expected);
    j["graph"] = graph_to_json(forest);
    std::cout << j.dump() << "\n";
  }
  std::cerr << "is: " << to_decimal(expected) << "\n";
  return kExitOk;
}

// --- batch (hidden) --------------------------------------------------------

// Ledger-level sweep over [from, to]: every plan must certify its n within
// the vertex budget.
int run_batch(std::uint64_t from, std::uint64_t to, unsigned threads) {
  if (from < 1 || to < from) throw ExitError{kExitParse, "need 1 <= --from <= --to"};
  const Synthesizer& synth = default_synthesizer();
  std::atomic<std::uint64_t> next{from};
  std::atomic<std::uint64_t> failures{0};
  std::mutex report_mutex;
  double worst_slack = 1e300;
  std::uint64_t worst_n = 0;
  auto work = [&] {
    double local_slack = 1e300;
    std::uint64_t local_n = 0;
    for (std::uint64_t n = next.fetch_add(1024); n <= to; n = next.fetch_add(1024)) {
      for (std::uint64_t m = n; m < n + 1024 && m <= to; ++m) {
        const Ledger ledger = synth.plan(m);
        const double budget = Synthesizer::kGammaBound * std::log2(static_cast<double>(m)) +
                              static_cast<double>(Synthesizer::kBaseVertices);
        const double slack = budget - static_cast<double>(ledger.back().vertex_count);
        if (ledger.back().predicted_count != m || slack < 0) ++failures;
        if (slack < local_slack) {
          local_slack = slack;
          local_n = m;
        }
      }
    }
    std::lock_guard<std::mutex> lock(report_mutex);
    if (local_slack < worst_slack) {
      worst_slack = local_slack;
      worst_n = local_n;
    }
  };
  const unsigned workers = std::max(1U, threads != 0 ? threads : std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  std::cout << "range: " << from << ".." << to << "\n"
            << "failures: " << failures.load() << "\n"
            << "tightest: n=" << worst_n << " slack=" << worst_slack << "\n";
  return failures.load() == 0 ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bipartite graphs with a prescribed number of maximal independent sets"};
  app.require_subcommand(1);

  RealizeArgs realize;
  auto* realize_cmd = app.add_subcommand("realize", "Build a graph with exactly n maximal independent sets");
  realize_cmd->add_option("--n", realize.n, "Target count, decimal or 0b-prefixed binary");
  realize_cmd->add_option("--pattern", realize.pattern, "Binary pattern, e.g. 101^3,01^5");
  realize_cmd->add_option("--format", realize.format, "Output format")
      ->check(CLI::IsMember({"json", "dimacs", "result"}));
  realize_cmd->add_option("--out", realize.out, "Write the output here instead of stdout");
  realize_cmd->add_option("--family", realize.family, "Gadget family JSON to use instead of the shipped one");
  realize_cmd->add_flag("--verify", realize.verify, "Count with the oracle and compare");
  realize_cmd->add_flag("--report", realize.report, "Print the vertex report to stderr");
  realize_cmd->add_flag("--force-ledger-only", realize.ledger_only,
                        "With --verify, accept the ledger when the oracle cannot run");

  std::string verify_path;
  bool verify_is = false;
  auto* verify_cmd = app.add_subcommand("verify", "Count the maximal independent sets of a graph file");
  verify_cmd->add_option("file", verify_path, "JSON or DIMACS graph")->required();
  verify_cmd->add_flag("--count-is", verify_is, "Also count all independent sets");

  std::size_t max_vertices = 0;
  std::size_t max_part = 0;
  bool emit_families = false;
  std::uint64_t n0_max = 52;
  auto* search_cmd = app.add_subcommand("search-gadgets", "Enumerate small marked gadgets");
  search_cmd->add_option("--max-vertices", max_vertices, "Largest gadget order")->required();
  search_cmd->add_option("--max-part", max_part, "Largest part size (0: no limit)");
  search_cmd->add_flag("--emit-families", emit_families, "Also print covering families");
  search_cmd->add_option("--n0-max", n0_max, "Largest base threshold a family may need");

  std::uint64_t t = 0;
  std::string mersenne_format = "json";
  auto* mersenne_cmd = app.add_subcommand("mersenne", "Forest with 2^(2^t) - 1 independent sets");
  mersenne_cmd->add_option("--t", t, "Exponent t >= 1")->required();
  mersenne_cmd->add_option("--format", mersenne_format)->check(CLI::IsMember({"json", "dimacs"}));

  std::uint64_t batch_from = 1;
  std::uint64_t batch_to = 1000;
  unsigned batch_threads = 0;
  auto* batch_cmd = app.add_subcommand("batch", "");
  batch_cmd->group("");
  batch_cmd->add_option("--from", batch_from);
  batch_cmd->add_option("--to", batch_to);
  batch_cmd->add_option("--threads", batch_threads);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*realize_cmd) return run_realize(realize);
    if (*verify_cmd) return run_verify(verify_path, verify_is);
    if (*search_cmd) return run_search(max_vertices, max_part, emit_families, n0_max);
    if (*mersenne_cmd) return run_mersenne(t, mersenne_format);
    if (*batch_cmd) return run_batch(batch_from, batch_to, batch_threads);
  } catch (const ExitError& e) {
    std::cerr << "misgraph: " << e.message << "\n";
    return e.code;
  } catch (const std::exception& e) {
    std::cerr << "misgraph: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
