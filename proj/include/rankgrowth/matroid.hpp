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

#ifndef RANKGROWTH_MATROID_HPP
#define RANKGROWTH_MATROID_HPP

#include <concepts>
#include <cstddef>
#include <memory>
#include <ranges>
#include <string>
#include <utility>
#include <vector>

#include "rankgrowth/errors.hpp"

namespace rankgrowth {

/// Incremental rank state.  `insert(x)` adds x to the spanned set and returns
/// true iff the rank strictly increased; `rank()` is the rank of everything
/// inserted so far.  Builders are values: copying one snapshots the state.
template <class B, class E>
concept BasisBuilderFor = std::copy_constructible<B> && requires(B b, const B cb, const E& e) {
  { b.insert(e) } -> std::same_as<bool>;
  { cb.rank() } -> std::convertible_to<std::size_t>;
};

/// A finitary matroid presented through its rank function on finite sets.
///
/// Element identity is the element's total order (equal iff neither is less);
/// `key(e)` is a deterministic serialization that agrees with it.  Rank
/// computations must be pure: two builders fed the same sequence agree.
template <class M>
concept Matroid = std::copy_constructible<M> && requires(const M& m, const typename M::element_type& e) {
  typename M::element_type;
  requires std::totally_ordered<typename M::element_type>;
  requires std::copy_constructible<typename M::element_type>;
  { m.builder() } -> BasisBuilderFor<typename M::element_type>;
  { m.key(e) } -> std::convertible_to<std::string>;
};

template <Matroid M>
using element_t = typename M::element_type;

template <Matroid M>
using builder_t = decltype(std::declval<const M&>().builder());

template <Matroid M, std::ranges::input_range R>
std::size_t rank(const M& matroid, R&& set) {
  auto b = matroid.builder();
  for (const auto& x : set) b.insert(x);
  return b.rank();
}

/// rk(A | B) = rk(A ∪ B) - rk(B).
template <Matroid M, std::ranges::input_range RA, std::ranges::input_range RB>
std::size_t relative_rank(const M& matroid, RA&& a, RB&& b) {
  auto builder = matroid.builder();
  for (const auto& x : b) builder.insert(x);
  const std::size_t base = builder.rank();
  for (const auto& x : a) builder.insert(x);
  return builder.rank() - base;
}

template <Matroid M>
bool in_closure(const M& matroid, const element_t<M>& a, const std::vector<element_t<M>>& base) {
  auto builder = matroid.builder();
  for (const auto& x : base) builder.insert(x);
  return !builder.insert(a);
}

/// Independence of a sequence; repeated elements make it dependent.
template <Matroid M, std::ranges::input_range R>
bool is_independent(const M& matroid, R&& set) {
  auto b = matroid.builder();
  for (const auto& x : set) {
    if (!b.insert(x)) return false;
  }
  return true;
}

/// The matroid S ↦ rk(S | C) for a fixed finite C.
template <Matroid M>
class Localized {
 public:
  using element_type = element_t<M>;

  class Builder {
   public:
    bool insert(const element_type& x) { return inner_.insert(x); }
    std::size_t rank() const { return inner_.rank() - offset_; }

   private:
    friend class Localized;
    Builder(builder_t<M> inner, std::size_t offset) : inner_(std::move(inner)), offset_(offset) {}
    builder_t<M> inner_;
    std::size_t offset_;
  };

  Localized(M base, std::vector<element_type> at) : base_(std::move(base)), at_(std::move(at)) {
    auto b = base_.builder();
    for (const auto& x : at_) b.insert(x);
    seeded_ = std::make_shared<builder_t<M>>(std::move(b));
  }

  Builder builder() const { return Builder(*seeded_, seeded_->rank()); }
  std::string key(const element_type& e) const { return base_.key(e); }

  const M& base() const { return base_; }
  const std::vector<element_type>& localized_at() const { return at_; }

 private:
  M base_;
  std::vector<element_type> at_;
  // Builder state after absorbing `at_`, shared between copies (immutable).
  std::shared_ptr<const builder_t<M>> seeded_;
};

template <Matroid M>
Localized<M> localize(M matroid, std::vector<element_t<M>> at) {
  return Localized<M>(std::move(matroid), std::move(at));
}

/// Extends an independent `basis` greedily by `candidates` in input order,
/// keeping a candidate iff it raises the rank.
template <Matroid M>
std::vector<element_t<M>> extend_basis(const M& matroid, std::vector<element_t<M>> basis,
                                       const std::vector<element_t<M>>& candidates) {
  auto b = matroid.builder();
  for (const auto& x : basis) {
    if (!b.insert(x)) throw ContractError("extend_basis: basis is not independent (at " + matroid.key(x) + ")");
  }
  for (const auto& x : candidates) {
    if (b.insert(x)) basis.push_back(x);
  }
  return basis;
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_MATROID_HPP
