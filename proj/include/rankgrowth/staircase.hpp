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

#ifndef RANKGROWTH_STAIRCASE_HPP
#define RANKGROWTH_STAIRCASE_HPP

// Decreasing functions N^m -> N on a finite box: staircase detection, the
// numerator of the generating function, and interpolation of the eventual
// polynomial in the binomial basis.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/polynomial.hpp"
#include "rankgrowth/rational.hpp"

namespace rankgrowth {

/// A pair lower ⪯ upper (immediate neighbours) with f(lower) < f(upper).
struct Violation {
  MultiIndex lower;
  MultiIndex upper;
  std::size_t lower_value = 0;
  std::size_t upper_value = 0;
};

inline std::string describe(const Violation& v) {
  return "f" + to_string(v.lower) + " = " + std::to_string(v.lower_value) + " < f" + to_string(v.upper) + " = " +
         std::to_string(v.upper_value);
}

/// Values of a function on the box {u ⪯ bound} ⊂ N^m, together with the
/// partition used to collapse N^m onto N^k and the list of monotonicity
/// violations.
class DecreasingTable {
 public:
  DecreasingTable() = default;
  DecreasingTable(MultiIndex bound, Partition partition)
      : values_(std::move(bound), 0), partition_(std::move(partition)) {
    if (values_.bound().size() != partition_.arity()) {
      throw InputError("table box " + to_string(values_.bound()) + " does not match partition arity " +
                       std::to_string(partition_.arity()));
    }
  }

  const MultiIndex& box() const { return values_.bound(); }
  const Partition& partition() const { return partition_; }
  bool contains(const MultiIndex& u) const { return values_.contains(u); }

  std::size_t at(const MultiIndex& u) const {
    if (!contains(u)) throw InputError("point " + to_string(u) + " outside table box " + to_string(box()));
    return values_[u];
  }
  void set(const MultiIndex& u, std::size_t v) { values_[u] = v; }

  /// Recomputes the violation list from immediate neighbours (enough by
  /// transitivity of ⪯).
  void scan_violations() {
    violations_.clear();
    for_each_in_box(box(), [&](const MultiIndex& u) {
      for (std::size_t j = 0; j < u.size(); ++j) {
        if (u[j] == 0) continue;
        MultiIndex lower = u;
        --lower[j];
        if (values_[lower] < values_[u]) violations_.push_back({lower, u, values_[lower], values_[u]});
      }
    });
  }

  const std::vector<Violation>& violations() const { return violations_; }
  bool decreasing() const { return violations_.empty(); }

  /// Σ_{‖u‖ = s} f(u) when the whole slice lies in the box.
  Integer graded_sum(const MultiIndex& s) const {
    Integer total = 0;
    for (const auto& u : words_of_part_degree(partition_, s)) total += at(u);
    return total;
  }

  /// Largest s such that every u with ‖u‖ ⪯ s lies in the box.
  MultiIndex full_slice_bound() const {
    MultiIndex out(partition_.parts());
    for (std::size_t i = 0; i < partition_.parts(); ++i) {
      std::uint32_t lo = box()[partition_.offset_of(i)];
      for (std::size_t j = 1; j < partition_.size_of(i); ++j) lo = std::min(lo, box()[partition_.offset_of(i) + j]);
      out[i] = lo;
    }
    return out;
  }

 private:
  BoxArray<std::size_t> values_;
  Partition partition_;
  std::vector<Violation> violations_;
};

/// Tabulates an arbitrary function on a box.
template <class Fn>
DecreasingTable tabulate(const MultiIndex& bound, const Partition& partition, Fn&& fn) {
  DecreasingTable table(bound, partition);
  for_each_in_box(bound, [&](const MultiIndex& u) { table.set(u, fn(u)); });
  table.scan_violations();
  return table;
}

enum class StaircaseStatus { window_certified, box_truncated };

inline const char* to_string(StaircaseStatus s) {
  return s == StaircaseStatus::window_certified ? "window-certified" : "box-truncated";
}

struct StaircaseCertificate {
  /// minimal[n] holds the ⪯-minimal points of {u in box : f(u) <= n}, for
  /// n < f(0).
  std::vector<std::vector<MultiIndex>> minimal;
  MultiIndex corner;  // coordinatewise max over every minimal point
  StaircaseStatus status = StaircaseStatus::box_truncated;
  std::size_t window = 0;
  /// Coordinates whose window m_i + 1 .. m_i + w does not fit in the box.
  std::vector<std::size_t> truncated_coordinates;
};

/// Finds the staircase of a decreasing table.  The certificate is
/// window-certified when the box extends `window` past the corner in every
/// coordinate and f is constant along each coordinate in that window.
inline StaircaseCertificate detect_stabilization(const DecreasingTable& table, std::size_t window) {
  if (!table.decreasing()) {
    throw ContractError("detect_stabilization: table is not decreasing (" + describe(table.violations().front()) +
                        ")");
  }
  if (window < 1) throw ContractError("detect_stabilization: window must be at least 1");
  const MultiIndex& box = table.box();
  const std::size_t m = box.size();
  StaircaseCertificate cert;
  cert.window = window;
  cert.corner = MultiIndex(m);
  const std::size_t top = table.at(MultiIndex(m));
  cert.minimal.resize(top);
  for_each_in_box(box, [&](const MultiIndex& u) {
    const std::size_t v = table.at(u);
    // u is minimal in {f <= n} iff f(u) <= n < f(u - e_j) for every j with u_j > 0.
    std::size_t below = top;  // min over predecessors of f(u - e_j)
    bool origin = true;
    for (std::size_t j = 0; j < m; ++j) {
      if (u[j] == 0) continue;
      origin = false;
      MultiIndex p = u;
      --p[j];
      below = std::min(below, table.at(p));
    }
    if (origin) below = top + 1;
    for (std::size_t n = v; n < std::min(below, top); ++n) {
      cert.minimal[n].push_back(u);
      cert.corner = join(cert.corner, u);
    }
  });

  bool fits = true;
  for (std::size_t j = 0; j < m; ++j) {
    if (cert.corner[j] + window > box[j]) {
      fits = false;
      cert.truncated_coordinates.push_back(j);
    }
  }
  bool flat = true;
  if (fits) {
    for_each_in_box(box, [&](const MultiIndex& u) {
      if (!flat) return;
      MultiIndex clamped = u;
      bool in_window = false;
      for (std::size_t j = 0; j < m; ++j) {
        if (u[j] > cert.corner[j] && u[j] <= cert.corner[j] + window) {
          in_window = true;
          clamped[j] = cert.corner[j];
        } else if (u[j] > cert.corner[j] + window) {
          return;
        }
      }
      if (in_window && table.at(u) != table.at(clamped)) flat = false;
    });
  }
  cert.status = fits && flat ? StaircaseStatus::window_certified : StaircaseStatus::box_truncated;
  return cert;
}

/// Numerator R of the generating function of s ↦ Σ_{‖u‖=s} f(u), whose
/// denominator is Π (1 - Y_i)^{d_i}.
struct GeneratingNumerator {
  std::map<MultiIndex, Integer> coefficients;  // nonzero only
  MultiIndex degree_cap;                       // ‖corner‖

  Polynomial as_polynomial() const {
    Polynomial p(degree_cap.size());
    for (const auto& [e, c] : coefficients) p.add_term(e, Rational(c));
    return p;
  }

  Integer value_at_ones() const {
    Integer total = 0;
    for (const auto& [e, c] : coefficients) total += c;
    return total;
  }
};

/// Multiplies the table's generating function by Π_j (1 - Y_j) one coordinate
/// at a time, truncated to exponents ⪯ corner, then substitutes Y_i for every
/// variable of part i.
inline GeneratingNumerator numerator_from_table(const DecreasingTable& table, const MultiIndex& corner,
                                                const Partition& partition) {
  if (corner.size() != table.box().size() || !precedes(corner, table.box())) {
    throw InputError("numerator_from_table: table box " + to_string(table.box()) + " does not cover " +
                     to_string(corner));
  }
  if (partition.arity() != corner.size()) throw InputError("numerator_from_table: partition arity mismatch");
  BoxArray<Integer> h(corner, 0);
  for_each_in_box(corner, [&](const MultiIndex& u) { h[u] = table.at(u); });
  for (std::size_t j = 0; j < corner.size(); ++j) {
    BoxArray<Integer> next = h;
    for_each_in_box(corner, [&](const MultiIndex& u) {
      if (u[j] == 0) return;
      MultiIndex p = u;
      --p[j];
      next[u] = h[u] - h[p];
    });
    h = std::move(next);
  }
  GeneratingNumerator num;
  num.degree_cap = part_degree(corner, partition);
  for_each_in_box(corner, [&](const MultiIndex& u) {
    if (h[u] == 0) return;
    auto& c = num.coefficients[part_degree(u, partition)];
    c += h[u];
  });
  std::erase_if(num.coefficients, [](const auto& kv) { return kv.second == 0; });
  return num;
}

enum class Certification { certified, box_truncated, unverified };

inline const char* to_string(Certification c) {
  switch (c) {
    case Certification::certified:
      return "certified";
    case Certification::box_truncated:
      return "box-truncated";
    case Certification::unverified:
      return "unverified";
  }
  return "unverified";
}

/// An eventual polynomial together with the point from which it is valid.
struct GrowthPolynomial {
  Polynomial polynomial;
  MultiIndex threshold;     // valid for s ⪰ threshold
  MultiIndex degree_bound;  // per-variable degree bound guaranteed by construction
  Certification status = Certification::unverified;
  GeneratingNumerator numerator;

  Rational operator()(const MultiIndex& s) const { return polynomial.evaluate(s); }

  /// R(1, ..., 1).
  Integer numerator_at_ones() const { return numerator.value_at_ones(); }

  /// Coefficient of Y^{degree_bound}.
  Rational leading_coefficient() const { return polynomial.coefficient(degree_bound); }
};

/// P(Y) = Σ_r a_r Π_i C(Y_i - r_i + d_i - 1, d_i - 1); f(s) = P(s) for
/// s ⪰ degree cap of the numerator.
inline GrowthPolynomial interpolate(const GeneratingNumerator& num, const std::vector<std::size_t>& part_sizes) {
  const std::size_t k = part_sizes.size();
  if (num.degree_cap.size() != k) throw InputError("interpolate: numerator has wrong number of variables");
  MultiIndex bound(k);
  for (std::size_t i = 0; i < k; ++i) {
    if (part_sizes[i] < 1) throw InputError("interpolate: part sizes must be positive");
    bound[i] = static_cast<std::uint32_t>(part_sizes[i] - 1);
  }
  Polynomial p(k);
  for (const auto& [r, a] : num.coefficients) {
    Polynomial term = Polynomial::constant(k, Rational(a));
    for (std::size_t i = 0; i < k; ++i) {
      const auto e = bound[i];
      term = term * binomial_polynomial(static_cast<std::int64_t>(e) - static_cast<std::int64_t>(r[i]), e, i, k);
    }
    p += term;
  }
  GrowthPolynomial out;
  out.polynomial = std::move(p);
  out.threshold = num.degree_cap;
  out.degree_bound = bound;
  out.numerator = num;
  return out;
}

// ---------------------------------------------------------------------------
// Monomial modules realizing a decreasing table.

/// I_n = {u : f(u) >= n}, a ⪯-downward closed set.
struct IdealLevel {
  std::size_t level = 0;
  /// Maximal points of I_n inside the box.
  std::vector<MultiIndex> frontier;
  /// Minimal points of the complement inside the box; the module
  /// R/(x^u : u in complement_generators) has I_n as its monomial basis.
  std::vector<MultiIndex> complement_generators;

  /// Membership decided from the frontier alone (valid inside the box).
  bool contains(const MultiIndex& u) const {
    return std::any_of(frontier.begin(), frontier.end(), [&](const MultiIndex& top) { return precedes(u, top); });
  }
};

struct SliceCount {
  MultiIndex degree;
  Integer from_ideals;
  Integer from_table;
};

struct MonomialModuleFamily {
  std::vector<IdealLevel> levels;  // levels[i] is I_{i+1}
  std::vector<SliceCount> checks;
  bool consistent = true;
};

/// Builds the ideals I_1 ⊇ I_2 ⊇ ... and checks that the graded counts of
/// their union reproduce the table's graded sums on every slice inside the box.
inline MonomialModuleFamily realize_monomial_module(const DecreasingTable& table) {
  if (!table.decreasing()) {
    throw ContractError("realize_monomial_module: table is not decreasing (" + describe(table.violations().front()) +
                        ")");
  }
  const MultiIndex& box = table.box();
  const std::size_t m = box.size();
  const std::size_t top = table.at(MultiIndex(m));
  MonomialModuleFamily family;
  for (std::size_t n = 1; n <= top; ++n) {
    IdealLevel level;
    level.level = n;
    for_each_in_box(box, [&](const MultiIndex& u) {
      const std::size_t v = table.at(u);
      if (v >= n) {
        bool maximal = true;
        for (std::size_t j = 0; j < m && maximal; ++j) {
          if (u[j] == box[j]) continue;
          MultiIndex up = u;
          ++up[j];
          if (table.at(up) >= n) maximal = false;
        }
        if (maximal) level.frontier.push_back(u);
      } else {
        bool minimal = true;
        for (std::size_t j = 0; j < m && minimal; ++j) {
          if (u[j] == 0) continue;
          MultiIndex down = u;
          --down[j];
          if (table.at(down) < n) minimal = false;
        }
        if (minimal) level.complement_generators.push_back(u);
      }
    });
    family.levels.push_back(std::move(level));
  }
  for_each_in_box(table.full_slice_bound(), [&](const MultiIndex& s) {
    SliceCount c{s, 0, table.graded_sum(s)};
    for (const auto& u : words_of_part_degree(table.partition(), s)) {
      for (const auto& level : family.levels) {
        if (level.contains(u)) ++c.from_ideals;
      }
    }
    if (c.from_ideals != c.from_table) family.consistent = false;
    family.checks.push_back(std::move(c));
  });
  return family;
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_STAIRCASE_HPP
