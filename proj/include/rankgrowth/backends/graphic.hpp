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

#ifndef RANKGROWTH_BACKENDS_GRAPHIC_HPP
#define RANKGROWTH_BACKENDS_GRAPHIC_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/operators.hpp"

namespace rankgrowth {

/// An undirected edge; `label` distinguishes parallel edges.  Endpoints are
/// stored with u <= v.  u == v is a loop.
struct Edge {
  std::int64_t u = 0;
  std::int64_t v = 0;
  std::int64_t label = 0;

  static Edge make(std::int64_t a, std::int64_t b, std::int64_t label = 0) {
    return a <= b ? Edge{a, b, label} : Edge{b, a, label};
  }
  bool is_loop() const { return u == v; }
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::string default_edge_name(const Edge& e) {
  std::string s = std::to_string(e.u) + "-" + std::to_string(e.v);
  if (e.label != 0) s += "#" + std::to_string(e.label);
  return s;
}

/// Cycle matroid: rank(S) = |V(S)| - #components(S).  Loops have rank 0.
class GraphicMatroid {
 public:
  using element_type = Edge;
  using Namer = std::function<std::string(const Edge&)>;

  class Builder {
   public:
    bool insert(const Edge& e) {
      const std::int64_t a = find(e.u), b = find(e.v);
      if (a == b) return false;
      parent_[std::max(a, b)] = std::min(a, b);
      ++rank_;
      return true;
    }
    std::size_t rank() const { return rank_; }

   private:
    std::int64_t find(std::int64_t x) {
      auto it = parent_.find(x);
      if (it == parent_.end()) {
        parent_.emplace(x, x);
        return x;
      }
      std::int64_t root = x;
      while (parent_[root] != root) root = parent_[root];
      while (parent_[x] != root) x = std::exchange(parent_[x], root);
      return root;
    }

    std::map<std::int64_t, std::int64_t> parent_;
    std::size_t rank_ = 0;
  };

  GraphicMatroid() : namer_(std::make_shared<Namer>(default_edge_name)) {}
  explicit GraphicMatroid(Namer namer) : namer_(std::make_shared<Namer>(std::move(namer))) {}

  Builder builder() const { return Builder(); }
  std::string key(const Edge& e) const { return (*namer_)(e); }

 private:
  std::shared_ptr<const Namer> namer_;
};

/// The edge map induced by a vertex map; labels are kept, collapsed edges
/// become loops.
inline Operator<Edge> induced_edge_map(std::string name, std::function<std::int64_t(std::int64_t)> vertex) {
  return Operator<Edge>{std::move(name), [vertex = std::move(vertex)](const Edge& e) {
                          return Edge::make(vertex(e.u), vertex(e.v), e.label);
                        }};
}

// ---------------------------------------------------------------------------
// The shift graph whose graded ranks alternate 2, 3, 2, 3, ...
//
// Gadget j has hub H_j = 4j and private vertices P_j = 4j+1, Q_j = 4j+2,
// R_j = 4j+3.  Even index 2j: a = H_j H_{j+1}, b = P_j H_j, c = H_{j+1} P_j
// (a triangle).  Odd index 2j+1: a = H_j Q_j, b = Q_j R_j, c = R_j H_{j+1}
// (a path).  The shift sends each edge of index i to the same-letter edge of
// index i + 1.

enum class GadgetEdge { a = 0, b = 1, c = 2 };

inline Edge counterexample_edge(GadgetEdge type, std::int64_t index) {
  if (index < 0) throw InputError("edge index must be nonnegative");
  const std::int64_t j = index / 2;
  const std::int64_t hub = 4 * j, next = 4 * (j + 1);
  const std::int64_t label = 3 * index + static_cast<std::int64_t>(type);
  if (index % 2 == 0) {
    switch (type) {
      case GadgetEdge::a:
        return Edge::make(hub, next, label);
      case GadgetEdge::b:
        return Edge::make(hub + 1, hub, label);
      case GadgetEdge::c:
        return Edge::make(next, hub + 1, label);
    }
  }
  switch (type) {
    case GadgetEdge::a:
      return Edge::make(hub, hub + 2, label);
    case GadgetEdge::b:
      return Edge::make(hub + 2, hub + 3, label);
    case GadgetEdge::c:
      return Edge::make(hub + 3, next, label);
  }
  return {};
}

inline std::string counterexample_name(const Edge& e) {
  static const char letters[] = {'a', 'b', 'c'};
  return std::string(1, letters[e.label % 3]) + std::to_string(e.label / 3);
}

/// The graphic matroid of the shift graph with its single shift map, declared
/// quasi-triangular.  Edges past `index_limit` are not generated: asking for
/// one is a MapError.
inline OperatorSystem<GraphicMatroid> make_counterexample_graph(std::int64_t index_limit = 96) {
  Operator<Edge> shift{"shift", [index_limit](const Edge& e) {
                         const std::int64_t index = e.label / 3;
                         if (index + 1 > index_limit) {
                           throw MapError("shift graph generated up to edge index " + std::to_string(index_limit) +
                                          "; " + counterexample_name(e) + " has no image (enlarge the limit)");
                         }
                         return counterexample_edge(static_cast<GadgetEdge>(e.label % 3), index + 1);
                       }};
  return OperatorSystem<GraphicMatroid>(GraphicMatroid(counterexample_name), {shift}, Partition::trivial(1),
                                        {PartHypothesis::quasi_triangular});
}

inline std::vector<Edge> counterexample_seeds() {
  return {counterexample_edge(GadgetEdge::a, 0), counterexample_edge(GadgetEdge::b, 0),
          counterexample_edge(GadgetEdge::c, 0)};
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_BACKENDS_GRAPHIC_HPP
