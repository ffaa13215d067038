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

#ifndef RANKGROWTH_BACKENDS_IDEAL_COUNT_HPP
#define RANKGROWTH_BACKENDS_IDEAL_COUNT_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/operators.hpp"

namespace rankgrowth {

/// A downward closed I ⊆ N^m, stored as the antichain of minimal elements of
/// its complement.
class DownSet {
 public:
  DownSet(std::size_t m, std::vector<MultiIndex> complement_minima) : m_(m), minima_(std::move(complement_minima)) {
    if (m == 0) throw InputError("ideal lives in N^m with m >= 1");
    for (const auto& g : minima_) {
      if (g.size() != m) throw InputError("antichain element " + to_string(g) + " is not in N^" + std::to_string(m));
    }
    for (std::size_t i = 0; i < minima_.size(); ++i) {
      for (std::size_t j = 0; j < minima_.size(); ++j) {
        if (i != j && precedes(minima_[i], minima_[j])) {
          throw InputError("complement generators are not an antichain: " + to_string(minima_[i]) + " ⪯ " +
                           to_string(minima_[j]));
        }
      }
    }
  }

  std::size_t dimension() const { return m_; }
  const std::vector<MultiIndex>& complement_minima() const { return minima_; }

  bool contains(const MultiIndex& u) const {
    if (u.size() != m_) return false;
    for (const auto& g : minima_) {
      if (precedes(g, u)) return false;
    }
    return true;
  }

 private:
  std::size_t m_;
  std::vector<MultiIndex> minima_;
};

/// rank(S) = |S ∩ I|.
class IdealCountMatroid {
 public:
  using element_type = MultiIndex;

  class Builder {
   public:
    bool insert(const MultiIndex& x) {
      if (!ideal_->contains(x)) return false;
      return seen_.insert(x).second;
    }
    std::size_t rank() const { return seen_.size(); }

   private:
    friend class IdealCountMatroid;
    explicit Builder(const DownSet* ideal) : ideal_(ideal) {}
    const DownSet* ideal_;
    std::set<MultiIndex> seen_;
  };

  explicit IdealCountMatroid(DownSet ideal) : ideal_(std::make_shared<const DownSet>(std::move(ideal))) {}
  const DownSet& ideal() const { return *ideal_; }
  Builder builder() const { return Builder(ideal_.get()); }
  std::string key(const MultiIndex& e) const { return to_string(e); }

 private:
  std::shared_ptr<const DownSet> ideal_;
};

inline Operator<MultiIndex> coordinate_increment(std::size_t i, std::size_t m) {
  return Operator<MultiIndex>{"x" + std::to_string(i + 1), [i, m](const MultiIndex& r) {
                                if (r.size() != m) throw InputError("element " + to_string(r) + " has wrong length");
                                MultiIndex out = r;
                                ++out[i];
                                return out;
                              }};
}

/// Coordinate increments r ↦ r + e_i on N^m.  With A = {0} the graded rank
/// counts {r ∈ I : ‖r‖ = s} and the cumulative rank counts ‖r‖ ⪯ s.
inline OperatorSystem<IdealCountMatroid> make_ideal_system(std::size_t m, std::vector<MultiIndex> complement_minima,
                                                           Partition p) {
  if (p.arity() != m) throw InputError("partition must cover all " + std::to_string(m) + " coordinates");
  std::vector<Operator<MultiIndex>> ops;
  for (std::size_t i = 0; i < m; ++i) ops.push_back(coordinate_increment(i, m));
  return OperatorSystem<IdealCountMatroid>(IdealCountMatroid(DownSet(m, std::move(complement_minima))),
                                           std::move(ops), std::move(p));
}

inline std::vector<MultiIndex> ideal_seed(std::size_t m) { return {MultiIndex(m)}; }

}  // namespace rankgrowth

#endif  // RANKGROWTH_BACKENDS_IDEAL_COUNT_HPP
