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

#ifndef RANKGROWTH_BACKENDS_LINEAR_HPP
#define RANKGROWTH_BACKENDS_LINEAR_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rankgrowth/backends/trivial.hpp"
#include "rankgrowth/errors.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/operators.hpp"
#include "rankgrowth/rational.hpp"
#include "rankgrowth/staircase.hpp"

namespace rankgrowth {

/// Finitely supported vector over Q with basis vectors indexed by IntVec keys;
/// zero coefficients are never stored.
using SparseVector = std::map<IntVec, Rational>;

inline SparseVector basis_vector(IntVec key) { return SparseVector{{std::move(key), Rational(1)}}; }

inline std::string to_string(const SparseVector& v) {
  if (v.empty()) return "0";
  std::string s;
  for (const auto& [k, c] : v) {
    if (!s.empty()) s += " + ";
    s += to_display_string(c) + "*e" + to_string(k);
  }
  return s;
}

/// Rank of a set of vectors = dimension of its span, by incremental exact
/// elimination.
class LinearMatroid {
 public:
  using element_type = SparseVector;

  class Builder {
   public:
    bool insert(const SparseVector& x) {
      SparseVector v = x;
      std::erase_if(v, [](const auto& entry) { return entry.second == 0; });
      // Rows are normalized with pivot = smallest key, so reducing v at its
      // keys in increasing order only touches larger keys.
      auto it = v.begin();
      while (it != v.end()) {
        auto row = rows_.find(it->first);
        if (row == rows_.end()) {
          ++it;
          continue;
        }
        const Rational c = it->second;
        const IntVec pivot = it->first;
        for (const auto& [k, a] : *row->second) {
          auto [slot, inserted] = v.try_emplace(k, 0);
          slot->second -= c * a;
          if (slot->second == 0) v.erase(slot);
        }
        it = v.upper_bound(pivot);
      }
      if (v.empty()) return false;
      const Rational lead = v.begin()->second;
      for (auto& [k, a] : v) a /= lead;
      const IntVec pivot = v.begin()->first;
      rows_.emplace(pivot, std::make_shared<const SparseVector>(std::move(v)));
      return true;
    }
    std::size_t rank() const { return rows_.size(); }

   private:
    // Rows are immutable once added, so copies of a builder share them.
    std::map<IntVec, std::shared_ptr<const SparseVector>> rows_;
  };

  Builder builder() const { return Builder(); }
  std::string key(const SparseVector& e) const { return to_string(e); }
};

/// Linear extension of a map on basis keys; `nullopt` means the basis vector
/// maps to zero.
inline Operator<SparseVector> linear_extension(std::string name,
                                               std::function<std::optional<IntVec>(const IntVec&)> on_basis) {
  return Operator<SparseVector>{std::move(name), [f = std::move(on_basis)](const SparseVector& v) {
                                  SparseVector out;
                                  for (const auto& [k, c] : v) {
                                    if (auto image = f(k)) {
                                      auto [slot, inserted] = out.try_emplace(*image, 0);
                                      slot->second += c;
                                      if (slot->second == 0) out.erase(slot);
                                    }
                                  }
                                  return out;
                                }};
}

/// The monomial x^exponent · g_generator, set to zero in a module quotient.
struct MonomialRelation {
  std::size_t generator = 0;
  MultiIndex exponent;
};

/// ⊕_j K[x_1..x_m] g_j modulo a monomial submodule.  Basis keys are
/// [j, r_1, ..., r_m] for the standard monomials x^r g_j.
class MonomialModule {
 public:
  MonomialModule(std::size_t variables, std::size_t generators, std::vector<MonomialRelation> relations)
      : m_(variables), generators_(generators), relations_(std::move(relations)) {
    if (variables == 0) throw InputError("monomial module needs at least one variable");
    if (generators == 0) throw InputError("monomial module needs at least one generator");
    for (const auto& r : relations_) {
      if (r.generator >= generators_) {
        throw InputError("relation refers to generator " + std::to_string(r.generator + 1) + " of " +
                         std::to_string(generators_));
      }
      if (r.exponent.size() != m_) throw InputError("relation exponent " + to_string(r.exponent) + " has wrong length");
    }
  }

  std::size_t variables() const { return m_; }
  std::size_t generators() const { return generators_; }
  const std::vector<MonomialRelation>& relations() const { return relations_; }

  bool vanishes(std::size_t generator, const MultiIndex& r) const {
    for (const auto& rel : relations_) {
      if (rel.generator == generator && precedes(rel.exponent, r)) return true;
    }
    return false;
  }

  static IntVec key(std::size_t generator, const MultiIndex& r) {
    IntVec k{static_cast<std::int64_t>(generator)};
    for (auto e : r) k.push_back(e);
    return k;
  }

  /// x^r g_j as an element (zero if it lies in the relation submodule).
  SparseVector monomial(std::size_t generator, const MultiIndex& r) const {
    if (generator >= generators_ || r.size() != m_) throw InputError("monomial outside the module");
    if (vanishes(generator, r)) return {};
    return basis_vector(key(generator, r));
  }

  SparseVector generator(std::size_t j) const { return monomial(j, MultiIndex(m_)); }

  /// Multiplication by x_i.
  Operator<SparseVector> multiplication(std::size_t i) const {
    auto self = *this;
    return linear_extension("x" + std::to_string(i + 1), [self, i](const IntVec& k) -> std::optional<IntVec> {
      if (k.size() != self.m_ + 1 || k[0] < 0 || static_cast<std::size_t>(k[0]) >= self.generators_) {
        throw InputError("basis key " + to_string(k) + " is not a module monomial");
      }
      MultiIndex r(self.m_);
      for (std::size_t t = 0; t < self.m_; ++t) r[t] = static_cast<std::uint32_t>(k[t + 1]);
      ++r[i];
      if (self.vanishes(static_cast<std::size_t>(k[0]), r)) return std::nullopt;
      return key(static_cast<std::size_t>(k[0]), r);
    });
  }

 private:
  std::size_t m_;
  std::size_t generators_;
  std::vector<MonomialRelation> relations_;
};

/// Maps x_i· on a monomial module; with A = {generators} the graded rank is the
/// multigraded Hilbert function of the module.
inline OperatorSystem<LinearMatroid> make_monomial_module_system(const MonomialModule& module, Partition p) {
  if (p.arity() != module.variables()) {
    throw InputError("partition must cover all " + std::to_string(module.variables()) + " variables");
  }
  std::vector<Operator<SparseVector>> ops;
  for (std::size_t i = 0; i < module.variables(); ++i) ops.push_back(module.multiplication(i));
  return OperatorSystem<LinearMatroid>(LinearMatroid(), std::move(ops), std::move(p));
}

inline std::vector<SparseVector> module_generators(const MonomialModule& module) {
  std::vector<SparseVector> out;
  for (std::size_t j = 0; j < module.generators(); ++j) out.push_back(module.generator(j));
  return out;
}

/// Graded quotient K[x_1..x_m]/(monomials) with one generator.
inline MonomialModule monomial_quotient(std::size_t variables, const std::vector<MultiIndex>& monomials) {
  std::vector<MonomialRelation> rels;
  for (const auto& r : monomials) rels.push_back(MonomialRelation{0, r});
  return MonomialModule(variables, 1, std::move(rels));
}

/// ⊕_n R g_n / (x^u g_n : u minimal outside I_n) for the levels of a
/// realized decreasing table; its Hilbert function is the table (inside the box).
inline MonomialModule module_from_levels(const MonomialModuleFamily& family, std::size_t variables) {
  std::vector<MonomialRelation> rels;
  for (std::size_t n = 0; n < family.levels.size(); ++n) {
    for (const auto& u : family.levels[n].complement_generators) rels.push_back(MonomialRelation{n, u});
  }
  if (family.levels.empty()) {
    // f ≡ 0: one generator killed by the unit monomial.
    rels.push_back(MonomialRelation{0, MultiIndex(variables)});
  }
  return MonomialModule(variables, std::max<std::size_t>(1, family.levels.size()), std::move(rels));
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_BACKENDS_LINEAR_HPP
