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

// Helpers shared by the unit tests and the acceptance binary.

#ifndef RANKGROWTH_TESTS_SUPPORT_HPP
#define RANKGROWTH_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "rankgrowth.hpp"

namespace rankgrowth::testing {

/// A decreasing function on ℕ^m written as a sum of indicators of down-sets.
/// Each down-set is the complement of the up-set generated by `generators`
/// (no generators means all of ℕ^m).
struct StaircaseFunction {
  std::size_t m = 0;
  std::vector<std::vector<MultiIndex>> generators;

  std::size_t operator()(const MultiIndex& u) const {
    std::size_t value = 0;
    for (const auto& gens : generators) {
      bool inside = true;
      for (const auto& g : gens) {
        if (precedes(g, u)) {
          inside = false;
          break;
        }
      }
      value += inside ? 1 : 0;
    }
    return value;
  }
};

inline StaircaseFunction random_staircase(std::mt19937_64& rng, std::size_t m, std::size_t max_value,
                                          std::uint32_t max_entry) {
  StaircaseFunction f;
  f.m = m;
  std::uniform_int_distribution<std::size_t> layers(0, max_value), count(0, 3);
  std::uniform_int_distribution<std::uint32_t> entry(0, max_entry);
  const std::size_t n = layers(rng);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<MultiIndex> gens;
    const std::size_t c = count(rng);
    for (std::size_t j = 0; j < c; ++j) {
      MultiIndex g(m);
      for (std::size_t t = 0; t < m; ++t) g[t] = entry(rng);
      gens.push_back(std::move(g));
    }
    f.generators.push_back(std::move(gens));
  }
  return f;
}

inline Partition random_partition(std::mt19937_64& rng, std::size_t m) {
  std::vector<std::size_t> sizes;
  std::size_t left = m;
  while (left > 0) {
    std::uniform_int_distribution<std::size_t> d(1, left);
    sizes.push_back(d(rng));
    left -= sizes.back();
  }
  return Partition(std::move(sizes));
}

/// Σ_{‖u‖ = s} f(u) by enumeration.
template <class Fn>
Integer slice_sum(const Fn& f, const Partition& p, const MultiIndex& s) {
  Integer total = 0;
  for (const auto& u : words_of_part_degree(p, s)) total += f(u);
  return total;
}

/// Rank of a dense rational matrix by Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const Rational factor = rows[r][c] / rows[rank][c];
      for (std::size_t j = c; j < cols; ++j) rows[r][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

/// b_n of a finite simplicial complex from the ranks of its boundary matrices.
inline Integer dense_betti(const std::set<std::vector<std::int64_t>>& simplices, std::size_t n) {
  auto of_dim = [&](std::size_t d) {
    std::vector<std::vector<std::int64_t>> out;
    for (const auto& s : simplices) {
      if (s.size() == d + 1) out.push_back(s);
    }
    return out;
  };
  auto boundary_rank = [&](std::size_t d) -> std::size_t {
    if (d == 0) return 0;
    const auto top = of_dim(d), low = of_dim(d - 1);
    std::vector<std::vector<Rational>> rows;
    for (const auto& s : top) {
      std::vector<Rational> row(low.size(), Rational(0));
      for (std::size_t i = 0; i < s.size(); ++i) {
        auto face = s;
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
        const auto at = std::find(low.begin(), low.end(), face) - low.begin();
        row[static_cast<std::size_t>(at)] = Rational(i % 2 == 0 ? 1 : -1);
      }
      rows.push_back(std::move(row));
    }
    return dense_rank(std::move(rows));
  };
  return Integer(of_dim(n).size()) - Integer(boundary_rank(n)) - Integer(boundary_rank(n + 1));
}

inline MultiIndex uniform_index(std::size_t n, std::uint32_t value) {
  return MultiIndex(std::vector<std::uint32_t>(n, value));
}

}  // namespace rankgrowth::testing

#endif  // RANKGROWTH_TESTS_SUPPORT_HPP
