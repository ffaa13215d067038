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

#ifndef RANKGROWTH_BACKENDS_CIRCUIT_HPP
#define RANKGROWTH_BACKENDS_CIRCUIT_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankgrowth/backends/ideal_count.hpp"
#include "rankgrowth/errors.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/operators.hpp"

namespace rankgrowth {

using Circuit = std::vector<MultiIndex>;  // sorted, duplicate free

/// The matroid on the monomials of one degree.
struct DegreeRule {
  enum class Kind { free, uniform, explicit_circuits };
  Kind kind = Kind::free;
  std::size_t uniform_rank = 0;
  std::vector<Circuit> circuits;

  static DegreeRule free_matroid() { return {}; }
  static DegreeRule uniform(std::size_t r) { return DegreeRule{Kind::uniform, r, {}}; }
  static DegreeRule explicit_family(std::vector<Circuit> cs) {
    for (auto& c : cs) {
      std::sort(c.begin(), c.end());
      c.erase(std::unique(c.begin(), c.end()), c.end());
    }
    std::sort(cs.begin(), cs.end());
    cs.erase(std::unique(cs.begin(), cs.end()), cs.end());
    return DegreeRule{Kind::explicit_circuits, 0, std::move(cs)};
  }
};

namespace detail {

inline std::string circuit_string(const Circuit& c) {
  std::string s = "{";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? ", " : "") + to_string(c[i]);
  return s + "}";
}

/// Antichain and circuit elimination: for C1 ≠ C2 sharing e, some circuit
/// lies in (C1 ∪ C2) - e.
inline void validate_circuits(const std::vector<Circuit>& cs, const MultiIndex& degree) {
  auto subset = [](const Circuit& a, const Circuit& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); };
  for (const auto& c : cs) {
    if (c.empty()) throw InvalidMatroidError("empty circuit in degree " + to_string(degree));
  }
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = 0; j < cs.size(); ++j) {
      if (i == j) continue;
      if (subset(cs[i], cs[j])) {
        throw InvalidMatroidError("circuits in degree " + to_string(degree) + " are not an antichain: " +
                                  circuit_string(cs[i]) + " ⊆ " + circuit_string(cs[j]));
      }
      if (j < i) continue;
      Circuit common;
      std::set_intersection(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(), std::back_inserter(common));
      Circuit uni;
      std::set_union(cs[i].begin(), cs[i].end(), cs[j].begin(), cs[j].end(), std::back_inserter(uni));
      for (const auto& e : common) {
        Circuit rest;
        std::copy_if(uni.begin(), uni.end(), std::back_inserter(rest), [&](const MultiIndex& x) { return x != e; });
        if (!std::any_of(cs.begin(), cs.end(), [&](const Circuit& c) { return subset(c, rest); })) {
          throw InvalidMatroidError("circuit elimination fails in degree " + to_string(degree) + " for " +
                                    circuit_string(cs[i]) + " and " + circuit_string(cs[j]) + " at " + to_string(e));
        }
      }
    }
  }
}

}  // namespace detail

/// Matroid on N^m whose restriction to each degree ‖r‖ = s (for a partition)
/// is given by a DegreeRule; different degrees are independent of each other.
class CircuitMatroid {
 public:
  using element_type = MultiIndex;

  struct Data {
    std::size_t m;
    Partition partition;
    std::map<MultiIndex, DegreeRule> rules;
    DegreeRule fallback;
    std::map<MultiIndex, std::map<MultiIndex, std::vector<std::size_t>>> by_element;  // degree -> e -> circuits
  };

  class Builder {
   public:
    bool insert(const MultiIndex& x) {
      if (x.size() != data_->m) throw InputError("monomial " + to_string(x) + " has wrong number of variables");
      const MultiIndex deg = part_degree(x, data_->partition);
      auto& chosen = independent_[deg];
      if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) return false;
      const DegreeRule& rule = rule_for(deg);
      bool ok = true;
      switch (rule.kind) {
        case DegreeRule::Kind::free:
          break;
        case DegreeRule::Kind::uniform:
          ok = chosen.size() < rule.uniform_rank;
          break;
        case DegreeRule::Kind::explicit_circuits: {
          // `chosen` is independent, so only circuits through x can appear.
          const auto deg_it = data_->by_element.find(deg);
          if (deg_it == data_->by_element.end()) break;
          const auto it = deg_it->second.find(x);
          if (it == deg_it->second.end()) break;
          for (std::size_t idx : it->second) {
            const Circuit& c = rule.circuits[idx];
            if (std::all_of(c.begin(), c.end(), [&](const MultiIndex& e) {
                  return e == x || std::find(chosen.begin(), chosen.end(), e) != chosen.end();
                })) {
              ok = false;
              break;
            }
          }
          break;
        }
      }
      if (!ok) return false;
      chosen.push_back(x);
      ++rank_;
      return true;
    }
    std::size_t rank() const { return rank_; }

   private:
    friend class CircuitMatroid;
    explicit Builder(std::shared_ptr<const Data> d) : data_(std::move(d)) {}
    const DegreeRule& rule_for(const MultiIndex& deg) const {
      auto it = data_->rules.find(deg);
      return it == data_->rules.end() ? data_->fallback : it->second;
    }
    std::shared_ptr<const Data> data_;
    std::map<MultiIndex, std::vector<MultiIndex>> independent_;
    std::size_t rank_ = 0;
  };

  /// Explicit families are validated completely (antichain and circuit
  /// elimination); InvalidMatroidError carries the failing pair.
  CircuitMatroid(std::size_t m, Partition p, std::map<MultiIndex, DegreeRule> rules,
                 DegreeRule fallback = DegreeRule::free_matroid()) {
    if (p.arity() != m) throw InputError("partition must cover all " + std::to_string(m) + " variables");
    if (fallback.kind == DegreeRule::Kind::explicit_circuits) {
      throw InputError("the default degree rule must be free or uniform");
    }
    auto data = std::make_shared<Data>(Data{m, std::move(p), std::move(rules), std::move(fallback), {}});
    for (const auto& [deg, rule] : data->rules) {
      if (deg.size() != data->partition.parts()) {
        throw InputError("degree " + to_string(deg) + " must have one entry per part");
      }
      if (rule.kind != DegreeRule::Kind::explicit_circuits) continue;
      auto& index = data->by_element[deg];
      for (std::size_t c = 0; c < rule.circuits.size(); ++c) {
        for (const auto& e : rule.circuits[c]) {
          if (e.size() != m || part_degree(e, data->partition) != deg) {
            throw InputError("circuit element " + to_string(e) + " does not have degree " + to_string(deg));
          }
          index[e].push_back(c);
        }
      }
      detail::validate_circuits(rule.circuits, deg);
    }
    data_ = std::move(data);
  }

  Builder builder() const { return Builder(data_); }
  std::string key(const MultiIndex& e) const { return "x^" + to_string(e); }
  const Partition& partition() const { return data_->partition; }
  std::size_t variables() const { return data_->m; }

 private:
  std::shared_ptr<const Data> data_;
};

/// Multiplication by x_i on monomials.
inline OperatorSystem<CircuitMatroid> make_circuit_system(const CircuitMatroid& matroid) {
  std::vector<Operator<MultiIndex>> ops;
  for (std::size_t i = 0; i < matroid.variables(); ++i) ops.push_back(coordinate_increment(i, matroid.variables()));
  return OperatorSystem<CircuitMatroid>(matroid, std::move(ops), matroid.partition());
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_BACKENDS_CIRCUIT_HPP
