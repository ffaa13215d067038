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

#ifndef RANKGROWTH_AXIOMS_HPP
#define RANKGROWTH_AXIOMS_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rankgrowth/matroid.hpp"

namespace rankgrowth {

struct AxiomFailure {
  std::string axiom;
  std::string detail;
};

struct AxiomReport {
  std::size_t checks = 0;
  std::vector<AxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// Randomized rank-axiom checks on subsets of `pool`: normalization,
/// unit increase, monotonicity, submodularity, order independence and
/// agreement of `insert` with the rank it reports.
template <Matroid M>
AxiomReport check_rank_axioms(const M& matroid, const std::vector<element_t<M>>& pool, std::size_t trials,
                              std::uint64_t seed) {
  using E = element_t<M>;
  AxiomReport report;
  if (pool.empty()) return report;
  std::mt19937_64 rng(seed);
  auto subset = [&] {
    std::vector<E> out;
    std::bernoulli_distribution pick(std::uniform_real_distribution<double>(0.1, 0.7)(rng));
    for (const auto& x : pool) {
      if (pick(rng)) out.push_back(x);
    }
    return out;
  };
  auto distinct = [](std::vector<E> xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    return xs;
  };
  auto keys = [&](const std::vector<E>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? ", " : "") + matroid.key(xs[i]);
    return s + "}";
  };
  auto fail = [&](const char* axiom, std::string detail) {
    report.failures.push_back(AxiomFailure{axiom, std::move(detail)});
  };
  std::uniform_int_distribution<std::size_t> element(0, pool.size() - 1);

  for (std::size_t t = 0; t < trials; ++t) {
    ++report.checks;
    const std::vector<E> s = distinct(subset());
    std::vector<E> t_set = distinct(subset());
    const E x = pool[element(rng)];

    const std::size_t rs = rank(matroid, s);
    if (rs > s.size()) fail("normalization", "rk" + keys(s) + " = " + std::to_string(rs));

    auto b = matroid.builder();
    for (const auto& e : s) b.insert(e);
    const bool raised = b.insert(x);
    const std::size_t rsx = b.rank();
    if (rsx < rs || rsx > rs + 1) fail("unit increase", "adding " + matroid.key(x) + " to " + keys(s));
    if (raised != (rsx == rs + 1)) fail("insert result", "insert(" + matroid.key(x) + ") over " + keys(s));

    std::vector<E> shuffled = s;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    if (rank(matroid, shuffled) != rs) fail("order independence", keys(s));

    std::vector<E> uni, inter;
    std::set_union(s.begin(), s.end(), t_set.begin(), t_set.end(), std::back_inserter(uni));
    std::set_intersection(s.begin(), s.end(), t_set.begin(), t_set.end(), std::back_inserter(inter));
    const std::size_t rt = rank(matroid, t_set), ru = rank(matroid, uni), ri = rank(matroid, inter);
    if (ru + ri > rs + rt) fail("submodularity", keys(s) + " and " + keys(t_set));
    if (ri > rs || rs > ru) fail("monotonicity", keys(inter) + " within " + keys(s) + " within " + keys(uni));
  }
  return report;
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_AXIOMS_HPP
