// Copyright 2026 The hamcheck Authors
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

#include "hamcheck/cli.hpp"

#include "hamcheck/criteria.hpp"
#include "hamcheck/fixed_point.hpp"
#include "hamcheck/report.hpp"
#include "hamcheck/search.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hamcheck::cli {

namespace {

FixedPointData load(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    buffer << in.rdbuf();
  }
  return parse(buffer.str());
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::set<Filter> parse_filters(const std::string& text) {
  if (text == "all") {
    return {Filter::ChiConsistency, Filter::PairingLadder, Filter::AdjacentIndices};
  }
  std::set<Filter> out;
  if (text == "none") return out;
  for (const auto& name : split_commas(text)) {
    if (name == "chi_consistency") {
      out.insert(Filter::ChiConsistency);
    } else if (name == "pairing_ladder") {
      out.insert(Filter::PairingLadder);
    } else if (name == "adjacent_indices") {
      out.insert(Filter::AdjacentIndices);
    } else {
      throw InputError("unknown filter \"" + name + "\"");
    }
  }
  return out;
}

struct CheckOptions {
  std::string file;
  std::string format = "text";
  Exponent oracle_order = -1;
};

int cmd_check(const CheckOptions& opt, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  const FixedPointData data = load(opt.file);
  const Evaluation ev = evaluate_all(data);
  std::optional<OracleCheck> oracle;
  if (opt.oracle_order >= 0) oracle = run_oracle(data, ev.chi, opt.oracle_order);
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  if (opt.format == "json") {
    out << report_document(data, ev, oracle).dump(2) << "\n";
    err << "time: " << ms << " ms\n";
  } else {
    out << render_text(data, ev, oracle) << "time: " << ms << " ms\n";
  }
  if (oracle && oracle->any_disagreement()) {
    err << "error: series oracle disagrees with the exact computation\n";
    return kOracleMismatch;
  }
  return exit_code(ev.verdict);
}

struct CriteriaOptions {
  std::string file;
  std::string only;
  std::string format = "text";
};

int cmd_criteria(const CriteriaOptions& opt, std::ostream& out) {
  const FixedPointData data = load(opt.file);
  const WeightTables tables = build_tables(data);
  const auto results = evaluate_selected(data, tables, split_commas(opt.only));
  if (opt.format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : results) list.push_back(to_json(r));
    nlohmann::json doc = to_json(data);
    doc["report"] = {{"criteria", std::move(list)}};
    out << doc.dump(2) << "\n";
  } else {
    for (const auto& r : results) out << render_text(r) << "\n";
  }
  return 0;
}

struct SearchOptions {
  int dim = 0;
  int points = 0;
  Weight max_weight = 0;
  std::string mode = "all";
  std::string out_file;
  std::uint64_t ceiling = 1'000'000'000;
  std::string filters = "all";
  unsigned threads = 0;
};

int cmd_search(const SearchOptions& opt, std::ostream& out, std::ostream& err) {
  if (opt.dim < 2 || opt.dim % 2 != 0) {
    throw InputError("--dim must be an even integer >= 2, got " + std::to_string(opt.dim));
  }
  SearchSpec spec;
  spec.n = opt.dim / 2;
  spec.points = opt.points;
  spec.max_weight = opt.max_weight;
  spec.mode = opt.mode == "all" ? SearchMode::AllData : SearchMode::NonHamiltonianCandidates;
  spec.filters = parse_filters(opt.filters);
  spec.ceiling = opt.ceiling;
  spec.threads = opt.threads;
  spec.validate();

  SearchResult result;
  try {
    result = enumerate(spec);
  } catch (const CeilingExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kCeilingExceeded;
  }

  std::ofstream file;
  if (!opt.out_file.empty()) {
    file.open(opt.out_file);
    if (!file) throw InputError("cannot write " + opt.out_file);
  }
  std::ostream& sink = opt.out_file.empty() ? out : file;
  for (const auto& s : result.survivors) {
    sink << report_document(s.data, s.evaluation).dump() << "\n";
  }
  nlohmann::json filters = nlohmann::json::array();
  for (Filter f : spec.filters) filters.push_back(to_string(f));
  nlohmann::json summary = {{"search",
                             {{"dim", opt.dim},
                              {"points", spec.points},
                              {"max_weight", spec.max_weight},
                              {"mode", to_string(spec.mode)},
                              {"filters", std::move(filters)}}},
                            {"stats", to_json(result.stats)}};
  sink << summary.dump() << "\n";

  const auto& st = result.stats;
  err << "space " << st.space << ", pruned " << st.pruned_extreme_index + st.pruned_histogram +
             st.pruned_adjacent
      << ", evaluated " << st.evaluated << ", survivors " << st.survivors << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed-point data checker for circle actions with isolated fixed points",
               "hamcheck"};
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "chi identities, criteria and verdict");
  check_cmd->add_option("file", check.file, "input document ('-' for stdin)")->required();
  check_cmd->add_option("--format", check.format)->check(CLI::IsMember({"json", "text"}));
  check_cmd->add_option("--order-oracle", check.oracle_order,
                        "cross-check chi with its power series truncated at this order")
      ->check(CLI::NonNegativeNumber);

  CriteriaOptions criteria;
  auto* criteria_cmd = app.add_subcommand("criteria", "run a subset of the criteria");
  criteria_cmd->add_option("file", criteria.file)->required();
  criteria_cmd->add_option("--only", criteria.only, "comma-separated criterion names");
  criteria_cmd->add_option("--format", criteria.format)->check(CLI::IsMember({"json", "text"}));

  SearchOptions search;
  auto* search_cmd = app.add_subcommand("search", "enumerate canonical candidate data");
  search_cmd->add_option("--dim", search.dim, "manifold dimension 2n")->required();
  search_cmd->add_option("--points", search.points)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--max-weight", search.max_weight)->required()->check(CLI::PositiveNumber);
  search_cmd->add_option("--mode", search.mode)->check(CLI::IsMember({"all", "non-hamiltonian"}));
  search_cmd->add_option("--out", search.out_file);
  search_cmd->add_option("--ceiling", search.ceiling);
  search_cmd->add_option("--filters", search.filters,
                         "all, none, or chi_consistency,pairing_ladder,adjacent_indices");
  search_cmd->add_option("--threads", search.threads);

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }

  try {
    if (*check_cmd) return cmd_check(check, out, err);
    if (*criteria_cmd) return cmd_criteria(criteria, out);
    return cmd_search(search, out, err);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kInputError;
  }
}

}  // namespace hamcheck::cli
