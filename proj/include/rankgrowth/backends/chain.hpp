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

#ifndef RANKGROWTH_BACKENDS_CHAIN_HPP
#define RANKGROWTH_BACKENDS_CHAIN_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "rankgrowth/backends/linear.hpp"
#include "rankgrowth/engine.hpp"
#include "rankgrowth/errors.hpp"
#include "rankgrowth/operators.hpp"

namespace rankgrowth {

/// Sorted, duplicate-free vertex list.
using Simplex = std::vector<std::int64_t>;

inline Simplex make_simplex(std::vector<std::int64_t> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

/// An oriented n-cell.  When a vertex map collapses it, `vertices` has fewer
/// than dim + 1 entries and the cell is the zero chain.
struct Cell {
  std::size_t dim = 0;
  Simplex vertices;

  static Cell of(Simplex s) {
    if (s.empty()) throw InputError("empty simplex");
    Cell c{s.size() - 1, make_simplex(std::move(s))};
    if (c.vertices.size() != c.dim + 1) throw InputError("simplex with repeated vertices");
    return c;
  }
  bool degenerate() const { return vertices.size() != dim + 1; }
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

inline std::string to_string(const Cell& c) {
  std::string s = "[";
  for (std::size_t i = 0; i < c.vertices.size(); ++i) s += (i ? "," : "") + std::to_string(c.vertices[i]);
  s += "]";
  if (c.degenerate()) s += "~" + std::to_string(c.dim);
  return s;
}

/// Boundary of a nondegenerate cell in C_{dim-1}, orientation by sorted order.
inline SparseVector boundary(const Cell& c) {
  SparseVector out;
  if (c.degenerate() || c.dim == 0) return out;
  for (std::size_t i = 0; i < c.vertices.size(); ++i) {
    IntVec face;
    for (std::size_t j = 0; j < c.vertices.size(); ++j) {
      if (j != i) face.push_back(c.vertices[j]);
    }
    out.emplace(std::move(face), Rational(i % 2 == 0 ? 1 : -1));
  }
  return out;
}

/// Per dimension n, two matroids on cells: `count` is rk_n (number of distinct
/// nondegenerate n-cells) and `boundary` is rk_n^∂ (rank of their boundaries).
/// Cells of other dimensions are loops.
class ChainMatroid {
 public:
  using element_type = Cell;
  enum class Kind { count, boundary };

  class Builder {
   public:
    bool insert(const Cell& c) {
      if (c.dim != n_ || c.degenerate()) return false;
      if (kind_ == Kind::count) return seen_.insert(c.vertices).second;
      if (n_ == 0) return false;
      return span_.insert(rankgrowth::boundary(c));
    }
    std::size_t rank() const { return kind_ == Kind::count ? seen_.size() : span_.rank(); }

   private:
    friend class ChainMatroid;
    Builder(std::size_t n, Kind kind) : n_(n), kind_(kind) {}
    std::size_t n_;
    Kind kind_;
    std::set<Simplex> seen_;
    LinearMatroid::Builder span_;
  };

  ChainMatroid(std::size_t n, Kind kind) : n_(n), kind_(kind) {}
  std::size_t dimension() const { return n_; }
  Kind kind() const { return kind_; }
  Builder builder() const { return Builder(n_, kind_); }
  std::string key(const Cell& c) const { return to_string(c); }

 private:
  std::size_t n_;
  Kind kind_;
};

/// Membership test for a possibly infinite simplicial complex.
struct SimplicialComplex {
  std::string description;
  std::function<bool(const Simplex&)> contains;

  /// The complex generated by finitely many simplices (closed under faces).
  static SimplicialComplex from_simplices(const std::vector<Simplex>& simplices) {
    auto facets = std::make_shared<std::vector<Simplex>>();
    for (const auto& s : simplices) facets->push_back(make_simplex(s));
    return SimplicialComplex{"finite complex", [facets](const Simplex& s) {
                               return std::any_of(facets->begin(), facets->end(), [&](const Simplex& f) {
                                 return std::includes(f.begin(), f.end(), s.begin(), s.end());
                               });
                             }};
  }

  /// The path graph on Z with edges {i, i+1}.
  static SimplicialComplex integer_path() {
    return SimplicialComplex{"path on Z", [](const Simplex& s) {
                               return s.size() == 1 || (s.size() == 2 && s[1] == s[0] + 1);
                             }};
  }

  /// Everything; for maps known to be simplicial on the complex in use.
  static SimplicialComplex full() {
    return SimplicialComplex{"full simplex on Z", [](const Simplex&) { return true; }};
  }
};

struct VertexMap {
  std::string name;
  std::function<std::int64_t(std::int64_t)> vertex;
};

inline Operator<Cell> cell_map(const VertexMap& f) {
  return Operator<Cell>{f.name, [v = f.vertex](const Cell& c) {
                          Simplex image;
                          for (auto x : c.vertices) image.push_back(v(x));
                          return Cell{c.dim, make_simplex(std::move(image))};
                        }};
}

/// A simplicial complex with commuting simplicial endomorphisms.  The system's
/// matroid is rk_0; `betti_polynomials` swaps in the others.
struct ChainSystem {
  SimplicialComplex complex;
  OperatorSystem<ChainMatroid> system;
};

inline ChainSystem make_chain_system(SimplicialComplex complex, const std::vector<VertexMap>& maps, Partition p) {
  std::vector<Operator<Cell>> ops;
  for (const auto& f : maps) {
    if (!f.vertex) throw InputError("vertex map '" + f.name + "' is empty");
    ops.push_back(cell_map(f));
  }
  return ChainSystem{std::move(complex),
                     OperatorSystem<ChainMatroid>(ChainMatroid(0, ChainMatroid::Kind::count), std::move(ops),
                                                  std::move(p))};
}

/// All faces of the given simplices, as cells.
inline std::vector<Cell> close_under_faces(const std::vector<Simplex>& simplices) {
  std::set<Cell> out;
  for (const auto& raw : simplices) {
    const Simplex s = make_simplex(raw);
    if (s.empty()) throw InputError("empty simplex");
    const std::size_t n = s.size();
    if (n > 20) throw InputError("simplex too large");
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex face;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (1u << i)) face.push_back(s[i]);
      }
      out.insert(Cell{face.size() - 1, face});
    }
  }
  return {out.begin(), out.end()};
}

struct BettiResult {
  std::size_t n = 0;
  GrowthPolynomial betti;
  GrowthResult cells;           // rk_n
  GrowthResult boundaries;      // rk_n^∂
  GrowthResult next_boundaries; // rk_{n+1}^∂
};

namespace detail {

inline GeneratingNumerator numerator_difference(const GrowthResult& x, const GrowthResult& y, const GrowthResult& z) {
  GeneratingNumerator out;
  out.degree_cap = join(join(x.growth.numerator.degree_cap, y.growth.numerator.degree_cap),
                        z.growth.numerator.degree_cap);
  auto add = [&](const GeneratingNumerator& num, int sign) {
    for (const auto& [r, c] : num.coefficients) {
      Integer& slot = out.coefficients[r];
      slot += sign * c;
      if (slot == 0) out.coefficients.erase(r);
    }
  };
  add(x.growth.numerator, 1);
  add(y.growth.numerator, -1);
  add(z.growth.numerator, -1);
  return out;
}

inline Certification worst(std::initializer_list<Certification> cs) {
  Certification out = Certification::certified;
  for (auto c : cs) {
    if (c == Certification::unverified) return c;
    if (c == Certification::box_truncated) out = c;
  }
  return out;
}

}  // namespace detail

/// P with b_n(Φ^{(s)}(A)) = P(s) (or b_n(Φ^{⪯(s)}(A)) in cumulative mode) for s
/// past the threshold, as P_{rk_n} - P_{rk_n^∂} - P_{rk_{n+1}^∂}.  A is closed
/// under faces first.  Vertex maps are checked to be simplicial on the orbit of
/// A up to depth `cfg.check.depth + 1`.
inline BettiResult betti_polynomials(const ChainSystem& chain, const std::vector<Simplex>& a, std::size_t n,
                                     OrbitMode mode, const StabilizationConfig& cfg = {}) {
  const std::vector<Cell> cells = close_under_faces(a);
  const auto& sys = chain.system;
  for (const auto& c : cells) {
    if (!chain.complex.contains(c.vertices)) {
      throw InputError("simplex " + to_string(c) + " is not in the complex (" + chain.complex.description + ")");
    }
  }
  MultiIndex depth(sys.parts());
  for (std::size_t i = 0; i < depth.size(); ++i) depth[i] = static_cast<std::uint32_t>(cfg.check.depth + 1);
  for (const auto& c : cumulative_orbit(sys, cells, depth)) {
    for (std::size_t i = 0; i < sys.arity(); ++i) {
      const Cell image = sys.apply(i, c);
      if (!chain.complex.contains(image.vertices)) {
        throw InputError("vertex map '" + sys.op(i).name + "' is not simplicial: it sends " + to_string(c) + " to " +
                         to_string(image) + ", which is not in the complex (" + chain.complex.description + ")");
      }
    }
  }
  auto run = [&](std::size_t dim, ChainMatroid::Kind kind) {
    const auto s = sys.with_matroid(ChainMatroid(dim, kind));
    return mode == OrbitMode::graded ? dimension_polynomial(s, cells, {}, cfg) : cumulative_polynomial(s, cells, {}, cfg);
  };
  BettiResult out;
  out.n = n;
  out.cells = run(n, ChainMatroid::Kind::count);
  out.boundaries = run(n, ChainMatroid::Kind::boundary);
  out.next_boundaries = run(n + 1, ChainMatroid::Kind::boundary);
  std::vector<std::size_t> sizes = sys.partition().sizes();
  if (mode == OrbitMode::cumulative) {
    for (auto& d : sizes) ++d;
  }
  out.betti = interpolate(detail::numerator_difference(out.cells, out.boundaries, out.next_boundaries), sizes);
  out.betti.status = detail::worst({out.cells.growth.status, out.boundaries.growth.status,
                                    out.next_boundaries.growth.status});
  return out;
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_BACKENDS_CHAIN_HPP
