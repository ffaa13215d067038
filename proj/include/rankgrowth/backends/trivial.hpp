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

#ifndef RANKGROWTH_BACKENDS_TRIVIAL_HPP
#define RANKGROWTH_BACKENDS_TRIVIAL_HPP

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/operators.hpp"

namespace rankgrowth {

using IntVec = std::vector<std::int64_t>;

inline std::string to_string(const IntVec& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

/// Integer vectors of a fixed dimension; every set is independent, so
/// rank(S) = |S|.
class TrivialMatroid {
 public:
  using element_type = IntVec;

  class Builder {
   public:
    bool insert(const IntVec& x) {
      if (x.size() != dimension_) {
        throw InputError("element " + to_string(x) + " does not have dimension " + std::to_string(dimension_));
      }
      return seen_.insert(x).second;
    }
    std::size_t rank() const { return seen_.size(); }

   private:
    friend class TrivialMatroid;
    explicit Builder(std::size_t d) : dimension_(d) {}
    std::size_t dimension_;
    std::set<IntVec> seen_;
  };

  explicit TrivialMatroid(std::size_t dimension = 1) : dimension_(dimension) {
    if (dimension == 0) throw InputError("trivial matroid needs dimension at least 1");
  }
  std::size_t dimension() const { return dimension_; }
  Builder builder() const { return Builder(dimension_); }
  std::string key(const IntVec& e) const { return to_string(e); }

 private:
  std::size_t dimension_;
};

inline Operator<IntVec> translation(const IntVec& by) {
  return Operator<IntVec>{"+" + to_string(by), [by](const IntVec& x) {
                            if (x.size() != by.size()) {
                              throw InputError("cannot translate " + to_string(x) + " by " + to_string(by));
                            }
                            IntVec y = x;
                            for (std::size_t i = 0; i < y.size(); ++i) y[i] += by[i];
                            return y;
                          }};
}

/// One translation x ↦ x + b per element b of each B_i (duplicates within a
/// set are dropped), parts given by the sets.
inline OperatorSystem<TrivialMatroid> make_sumset_system(const std::vector<std::vector<IntVec>>& sets) {
  if (sets.empty()) throw InputError("sumset system needs at least one set");
  const std::size_t d = sets.front().empty() ? 0 : sets.front().front().size();
  std::vector<Operator<IntVec>> ops;
  std::vector<std::size_t> sizes;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (sets[i].empty()) throw InputError("sumset set " + std::to_string(i + 1) + " is empty");
    std::set<IntVec> distinct;
    for (const auto& b : sets[i]) {
      if (b.size() != d || d == 0) {
        throw InputError("sumset vector " + to_string(b) + " does not have dimension " + std::to_string(d));
      }
      distinct.insert(b);
    }
    for (const auto& b : distinct) ops.push_back(translation(b));
    sizes.push_back(distinct.size());
  }
  return OperatorSystem<TrivialMatroid>(TrivialMatroid(d), std::move(ops), Partition(std::move(sizes)));
}

/// Convenience for subsets of Z.
inline OperatorSystem<TrivialMatroid> make_sumset_system(const std::vector<std::vector<std::int64_t>>& sets) {
  std::vector<std::vector<IntVec>> lifted;
  for (const auto& s : sets) {
    std::vector<IntVec> v;
    for (auto x : s) v.push_back(IntVec{x});
    lifted.push_back(std::move(v));
  }
  return make_sumset_system(lifted);
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_BACKENDS_TRIVIAL_HPP
