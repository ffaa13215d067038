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

#ifndef RANKGROWTH_OPERATORS_HPP
#define RANKGROWTH_OPERATORS_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/matroid.hpp"
#include "rankgrowth/multi_index.hpp"

namespace rankgrowth {

/// Hypothesis a part of the system is declared to satisfy.
enum class PartHypothesis { triangular, quasi_triangular };

inline const char* to_string(PartHypothesis h) {
  return h == PartHypothesis::triangular ? "triangular" : "quasi-triangular";
}

/// A named self-map of the ground set.  Maps must be pure.  Names identify maps
/// when one system is compared with another (subtuple checks).
template <class E>
struct Operator {
  std::string name;
  std::function<E(const E&)> apply;
};

template <class E>
Operator<E> identity_operator() {
  return {"id", [](const E& x) { return x; }};
}

/// m commuting self-maps of a matroid's ground set, grouped by a partition.
template <Matroid M>
class OperatorSystem {
 public:
  using matroid_type = M;
  using element_type = element_t<M>;
  using operator_type = Operator<element_type>;

  OperatorSystem(M matroid, std::vector<operator_type> ops, Partition partition,
                 std::vector<PartHypothesis> declared = {})
      : matroid_(std::move(matroid)), ops_(std::move(ops)), partition_(std::move(partition)),
        declared_(std::move(declared)) {
    if (partition_.arity() != ops_.size()) {
      throw InputError("partition covers " + std::to_string(partition_.arity()) + " maps but the system has " +
                       std::to_string(ops_.size()));
    }
    if (declared_.empty()) declared_.assign(partition_.parts(), PartHypothesis::triangular);
    if (declared_.size() != partition_.parts()) {
      throw InputError("one declared hypothesis per part is required");
    }
    for (const auto& op : ops_) {
      if (!op.apply) throw InputError("operator '" + op.name + "' has no map");
    }
  }

  const M& matroid() const { return matroid_; }
  const Partition& partition() const { return partition_; }
  std::size_t arity() const { return ops_.size(); }
  std::size_t parts() const { return partition_.parts(); }
  const operator_type& op(std::size_t i) const { return ops_.at(i); }
  const std::vector<operator_type>& ops() const { return ops_; }
  PartHypothesis declared(std::size_t part) const { return declared_.at(part); }
  const std::vector<PartHypothesis>& declared() const { return declared_; }

  element_type apply(std::size_t i, const element_type& x) const {
    try {
      return ops_.at(i).apply(x);
    } catch (const MapError&) {
      throw;
    } catch (const std::exception& e) {
      throw MapError("operator '" + ops_.at(i).name + "' failed on " + matroid_.key(x) + ": " + e.what());
    }
  }

  /// Same maps and partition over another matroid with the same ground set.
  template <Matroid M2>
    requires std::same_as<element_t<M2>, element_type>
  OperatorSystem<M2> with_matroid(M2 other) const {
    return OperatorSystem<M2>(std::move(other), ops_, partition_, declared_);
  }

  OperatorSystem with_partition(Partition p, std::vector<PartHypothesis> declared = {}) const {
    return OperatorSystem(matroid_, ops_, std::move(p), std::move(declared));
  }

 private:
  M matroid_;
  std::vector<operator_type> ops_;
  Partition partition_;
  std::vector<PartHypothesis> declared_;
};

/// The augmented system: the identity map is prepended to every part.
template <Matroid M>
OperatorSystem<M> augment(const OperatorSystem<M>& sys) {
  using E = element_t<M>;
  std::vector<Operator<E>> ops;
  std::vector<std::size_t> sizes;
  const Partition& p = sys.partition();
  for (std::size_t part = 0; part < p.parts(); ++part) {
    ops.push_back(identity_operator<E>());
    for (std::size_t j = 0; j < p.size_of(part); ++j) ops.push_back(sys.op(p.offset_of(part) + j));
    sizes.push_back(p.size_of(part) + 1);
  }
  // A quasi-triangular part becomes triangular once augmented, and triangular
  // parts are quasi-triangular.
  return OperatorSystem<M>(sys.matroid(), std::move(ops), Partition(std::move(sizes)),
                           std::vector<PartHypothesis>(p.parts(), PartHypothesis::triangular));
}

/// Memo of (seed, word) -> image.  Tied to a single operator system.
template <class E>
class OrbitCache {
 public:
  std::optional<E> find(const E& seed, const MultiIndex& word) const {
    std::lock_guard lock(mutex_);
    auto it = table_.find(std::pair<MultiIndex, E>(word, seed));
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }

  /// Inserts unless present; returns the stored value.
  E insert(const E& seed, const MultiIndex& word, E value) {
    std::lock_guard lock(mutex_);
    auto [it, inserted] = table_.try_emplace(std::pair<MultiIndex, E>(word, seed), std::move(value));
    return it->second;
  }

  std::size_t size() const {
    std::lock_guard lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::mutex mutex_;
  // Word first: words are cheap to compare, elements may not be.
  std::map<std::pair<MultiIndex, E>, E> table_;
};

/// φ^r(a), computed from the cached image of r - e_i where i is the last
/// nonzero coordinate of r.
template <Matroid M>
element_t<M> apply_word(const OperatorSystem<M>& sys, const element_t<M>& a, const MultiIndex& word,
                        OrbitCache<element_t<M>>& cache) {
  if (word.size() != sys.arity()) {
    throw InputError("apply_word: word " + to_string(word) + " does not match " + std::to_string(sys.arity()) +
                     " maps");
  }
  if (word.is_zero()) return a;
  if (auto hit = cache.find(a, word)) return *hit;
  std::size_t i = word.size();
  while (word[--i] == 0) {
  }
  MultiIndex prev = word;
  --prev[i];
  const auto base = apply_word(sys, a, prev, cache);
  try {
    return cache.insert(a, word, sys.apply(i, base));
  } catch (const MapError& e) {
    throw MapError("while evaluating word " + to_string(word) + ": " + e.what());
  }
}

namespace detail {
template <Matroid M>
std::vector<element_t<M>> sorted_seeds(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds) {
  std::vector<std::pair<std::string, element_t<M>>> keyed;
  keyed.reserve(seeds.size());
  for (const auto& a : seeds) keyed.emplace_back(sys.matroid().key(a), a);
  std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<element_t<M>> out;
  for (auto& [k, a] : keyed) {
    if (out.empty() || !(out.back() == a)) out.push_back(std::move(a));
  }
  return out;
}

template <Matroid M>
std::vector<element_t<M>> orbit_over_words(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                           const std::vector<MultiIndex>& words, OrbitCache<element_t<M>>& cache) {
  std::vector<element_t<M>> out;
  std::set<element_t<M>> seen;
  for (const auto& a : sorted_seeds(sys, seeds)) {
    for (const auto& w : words) {
      auto x = apply_word(sys, a, w, cache);
      if (seen.insert(x).second) out.push_back(std::move(x));
    }
  }
  return out;
}

/// Words r with ‖r‖ ⪯ s, sorted in `lex_compare` order.
inline std::vector<MultiIndex> words_up_to(const Partition& p, const MultiIndex& s) {
  std::vector<MultiIndex> words;
  for_each_in_box(s, [&](const MultiIndex& t) {
    auto w = words_of_part_degree(p, t);
    words.insert(words.end(), w.begin(), w.end());
  });
  std::sort(words.begin(), words.end(), lex_less);
  return words;
}
}  // namespace detail

/// Φ^{(s)}(A): deduplicated, enumerated by (seed key, word in lex order).
template <Matroid M>
std::vector<element_t<M>> graded_orbit(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                       const MultiIndex& s, OrbitCache<element_t<M>>& cache) {
  return detail::orbit_over_words(sys, seeds, words_of_part_degree(sys.partition(), s), cache);
}

template <Matroid M>
std::vector<element_t<M>> graded_orbit(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                       const MultiIndex& s) {
  OrbitCache<element_t<M>> cache;
  return graded_orbit(sys, seeds, s, cache);
}

/// Φ^{⪯(s)}(A).
template <Matroid M>
std::vector<element_t<M>> cumulative_orbit(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                           const MultiIndex& s, OrbitCache<element_t<M>>& cache) {
  if (s.size() != sys.parts()) throw InputError("cumulative_orbit: degree has wrong length " + to_string(s));
  return detail::orbit_over_words(sys, seeds, detail::words_up_to(sys.partition(), s), cache);
}

template <Matroid M>
std::vector<element_t<M>> cumulative_orbit(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                           const MultiIndex& s) {
  OrbitCache<element_t<M>> cache;
  return cumulative_orbit(sys, seeds, s, cache);
}

template <Matroid M>
std::vector<element_t<M>> orbit(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                const MultiIndex& s, OrbitMode mode, OrbitCache<element_t<M>>& cache) {
  return mode == OrbitMode::graded ? graded_orbit(sys, seeds, s, cache) : cumulative_orbit(sys, seeds, s, cache);
}

template <Matroid M>
std::vector<element_t<M>> orbit(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                const MultiIndex& s, OrbitMode mode) {
  OrbitCache<element_t<M>> cache;
  return orbit(sys, seeds, s, mode, cache);
}

// ---------------------------------------------------------------------------
// Sampled verification of the hypotheses.

struct CommutationFailure {
  std::string element;
  std::size_t first = 0;
  std::size_t second = 0;
  std::string first_then_second;
  std::string second_then_first;
};

/// rk(ψ_i(A) | ψ_1(AB)…ψ_{i-1}(AB) ψ_i(B)) > rk(A|B) for the maps ψ of a part.
struct TriangularityFailure {
  std::size_t part = 0;
  std::size_t map = 0;  // position inside the (possibly augmented) part, 0-based
  std::vector<std::string> a;
  std::vector<std::string> b;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
};

struct PartReport {
  bool triangular = true;
  std::optional<TriangularityFailure> triangular_witness;
  bool quasi_triangular = true;
  std::optional<TriangularityFailure> quasi_witness;
};

struct SystemReport {
  bool commutes = true;
  std::optional<CommutationFailure> commutation_witness;
  std::vector<PartReport> parts;
  std::size_t pool_size = 0;
  std::size_t tests_run = 0;

  bool all_triangular() const {
    return std::all_of(parts.begin(), parts.end(), [](const PartReport& p) { return p.triangular; });
  }
  bool all_quasi_triangular() const {
    return std::all_of(parts.begin(), parts.end(), [](const PartReport& p) { return p.quasi_triangular; });
  }
};

inline std::string describe(const CommutationFailure& f) {
  std::ostringstream os;
  os << "maps " << f.first + 1 << " and " << f.second + 1 << " do not commute at " << f.element << ": "
     << f.first_then_second << " != " << f.second_then_first;
  return os.str();
}

inline std::string describe(const TriangularityFailure& f, bool augmented) {
  auto join_keys = [](const std::vector<std::string>& ks) {
    std::string out = "{";
    for (std::size_t i = 0; i < ks.size(); ++i) out += (i ? ", " : "") + ks[i];
    return out + "}";
  };
  std::ostringstream os;
  os << "part " << f.part + 1 << (augmented ? " (augmented by the identity)" : "")
     << " failed the triangularity rank inequality rk(psi_i(A) | psi_1(AB)..psi_{i-1}(AB) psi_i(B)) <= rk(A|B)"
     << " at i = " << f.map + 1 << ", A = " << join_keys(f.a) << ", B = " << join_keys(f.b) << ": " << f.lhs
     << " > " << f.rhs;
  return os.str();
}

struct CheckOptions {
  std::size_t depth = 1;
  std::uint64_t seed = 1;
  /// Pools up to this size are tested against every subset B.
  std::size_t exhaustive_limit = 10;
  /// Random (A, B) pairs per map for larger pools.
  std::size_t samples = 200;
};

namespace detail {

template <Matroid M>
std::optional<TriangularityFailure> check_triangular_tuple(const M& matroid,
                                                           const std::vector<const Operator<element_t<M>>*>& maps,
                                                           const std::vector<element_t<M>>& pool,
                                                           const CheckOptions& opt, std::size_t part,
                                                           std::size_t& tests) {
  using E = element_t<M>;
  std::mt19937_64 rng(opt.seed + 7919 * part + maps.size());
  std::vector<std::pair<std::vector<E>, std::vector<E>>> pairs;
  if (pool.size() <= opt.exhaustive_limit) {
    const std::size_t subsets = std::size_t{1} << pool.size();
    for (const auto& a : pool) {
      for (std::size_t mask = 0; mask < subsets; ++mask) {
        std::vector<E> b;
        for (std::size_t j = 0; j < pool.size(); ++j) {
          if (mask >> j & 1) b.push_back(pool[j]);
        }
        pairs.emplace_back(std::vector<E>{a}, std::move(b));
      }
    }
  } else {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<std::size_t> bsize(0, std::min<std::size_t>(4, pool.size()));
    std::uniform_int_distribution<std::size_t> asize(1, 2);
    for (std::size_t n = 0; n < opt.samples; ++n) {
      std::vector<E> a, b;
      for (std::size_t j = asize(rng); j > 0; --j) a.push_back(pool[pick(rng)]);
      for (std::size_t j = bsize(rng); j > 0; --j) b.push_back(pool[pick(rng)]);
      pairs.emplace_back(std::move(a), std::move(b));
    }
  }

  auto apply_all = [](const Operator<E>& op, const std::vector<E>& xs, std::vector<E>& out) {
    for (const auto& x : xs) out.push_back(op.apply(x));
  };
  for (const auto& [a, b] : pairs) {
    const std::size_t rhs = relative_rank(matroid, a, b);
    std::vector<E> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    std::vector<E> context;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      std::vector<E> image_a, with_b = context;
      apply_all(*maps[i], a, image_a);
      apply_all(*maps[i], b, with_b);
      ++tests;
      const std::size_t lhs = relative_rank(matroid, image_a, with_b);
      if (lhs > rhs) {
        TriangularityFailure f;
        f.part = part;
        f.map = i;
        for (const auto& x : a) f.a.push_back(matroid.key(x));
        for (const auto& x : b) f.b.push_back(matroid.key(x));
        f.lhs = lhs;
        f.rhs = rhs;
        return f;
      }
      apply_all(*maps[i], ab, context);
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Sampled evidence for commutation and for (quasi-)triangularity of every
/// part.  The pool is every image φ^r(x), x in `sample`, |r| <= depth.
template <Matroid M>
SystemReport check_system(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& sample,
                          const CheckOptions& opt = {}) {
  using E = element_t<M>;
  if (opt.depth < 1) throw ContractError("check_system: depth must be at least 1");
  SystemReport report;

  OrbitCache<E> cache;
  const auto all_maps = OperatorSystem<M>(sys.matroid(), sys.ops(), Partition::trivial(sys.arity()));
  const auto pool = cumulative_orbit(all_maps, sample, MultiIndex{static_cast<std::uint32_t>(opt.depth)}, cache);
  report.pool_size = pool.size();

  for (const auto& x : pool) {
    for (std::size_t i = 0; i < sys.arity() && report.commutes; ++i) {
      for (std::size_t j = i + 1; j < sys.arity(); ++j) {
        const E ij = sys.apply(i, sys.apply(j, x));
        const E ji = sys.apply(j, sys.apply(i, x));
        ++report.tests_run;
        if (!(ij == ji)) {
          report.commutes = false;
          report.commutation_witness =
              CommutationFailure{sys.matroid().key(x), i, j, sys.matroid().key(ji), sys.matroid().key(ij)};
          break;
        }
      }
    }
    if (!report.commutes) break;
  }

  const auto id = identity_operator<E>();
  const Partition& p = sys.partition();
  for (std::size_t part = 0; part < p.parts(); ++part) {
    std::vector<const Operator<E>*> maps;
    for (std::size_t j = 0; j < p.size_of(part); ++j) maps.push_back(&sys.op(p.offset_of(part) + j));
    PartReport pr;
    pr.triangular_witness = detail::check_triangular_tuple(sys.matroid(), maps, pool, opt, part, report.tests_run);
    pr.triangular = !pr.triangular_witness;
    maps.insert(maps.begin(), &id);
    pr.quasi_witness = detail::check_triangular_tuple(sys.matroid(), maps, pool, opt, part, report.tests_run);
    pr.quasi_triangular = !pr.quasi_witness;
    report.parts.push_back(std::move(pr));
  }
  return report;
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_OPERATORS_HPP
