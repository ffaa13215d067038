// Copyright 2026 The rankgrowth Authors.
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

// Command line front end: `rankgrowth run <problem.json>` and
// `rankgrowth selfcheck`.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "rankgrowth/io/problem.hpp"
#include "rankgrowth/io/selfcheck.hpp"

namespace {

std::vector<std::uint32_t> parse_box(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const unsigned long v = std::stoul(item, &used);
    if (used != item.size()) throw std::invalid_argument(item);
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw std::invalid_argument(text);
  return out;
}

int run_command(const std::string& path, const rankgrowth::io::RunOptions& options, const std::string& out_path) {
  using namespace rankgrowth::io;
  std::ifstream in(path);
  if (!in) {
    std::cerr << "input error: cannot read " << path << "\n";
    return kInputError;
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  const RunOutcome outcome = run_problem_text(buffer.str(), options);
  const std::string text = outcome.document.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
      std::cerr << "input error: cannot write " << out_path << "\n";
      return kInputError;
    }
    out << text;
  }
  std::cerr << outcome.message << "\n";
  return outcome.exit_code;
}

int selfcheck_command() {
  int failed = 0;
  const auto results = rankgrowth::io::run_selfcheck();
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name;
    if (!r.passed) std::cout << "  [" << r.detail << "]";
    std::cout << "\n";
    failed += r.passed ? 0 : 1;
  }
  std::cout << (results.size() - failed) << "/" << results.size() << " passed\n";
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Eventual growth polynomials of matroid ranks under commuting operator systems"};
  app.require_subcommand(1);

  auto* run = app.add_subcommand("run", "Solve a problem file and print the result document");
  std::string config_path, out_path, box_text, mode;
  std::size_t window = 0, threads = 0;
  std::uint64_t seed = 0;
  bool timing = false;
  run->add_option("config", config_path, "Problem file (JSON)")->required();
  run->add_option("--box", box_text, "Tabulation box, comma separated per map, e.g. 6,6");
  run->add_option("--window", window, "Verification window width (>= 1)");
  run->add_option("--mode", mode, "Override the problem's mode");
  run->add_option("--out", out_path, "Write the result document here instead of standard output");
  run->add_option("--threads", threads, "Worker threads for tabulation");
  run->add_option("--seed-sample", seed, "Seed for the sampled hypothesis check");
  run->add_flag("--timing", timing, "Add wall-clock timing to the document");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the built-in golden corpus");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rankgrowth::io::kInputError;
  }

  if (selfcheck->parsed()) return selfcheck_command();

  rankgrowth::io::RunOptions options;
  options.timing = timing;
  if (!box_text.empty()) {
    try {
      options.box = parse_box(box_text);
    } catch (const std::exception&) {
      std::cerr << "input error: --box expects comma separated naturals, got " << box_text << "\n";
      return rankgrowth::io::kInputError;
    }
  }
  if (run->count("--window")) options.window = window;
  if (!mode.empty()) options.mode = mode;
  if (run->count("--threads")) options.threads = threads;
  if (run->count("--seed-sample")) options.seed_sample = seed;
  return run_command(config_path, options, out_path);
}
