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

#ifndef RANKGROWTH_MULTI_INDEX_HPP
#define RANKGROWTH_MULTI_INDEX_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/rational.hpp"

namespace rankgrowth {

/// A tuple in N^d.  The defaulted ordering is the std::vector ordering and is
/// only meant for use as a container key; the mathematical orders are
/// `lex_compare` and `precedes`.
class MultiIndex {
 public:
  using value_type = std::uint32_t;

  MultiIndex() = default;
  explicit MultiIndex(std::size_t length) : entries_(length, 0) {}
  MultiIndex(std::initializer_list<value_type> entries) : entries_(entries) {}
  explicit MultiIndex(std::vector<value_type> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  value_type operator[](std::size_t i) const { return entries_[i]; }
  value_type& operator[](std::size_t i) { return entries_[i]; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  const std::vector<value_type>& entries() const { return entries_; }

  std::uint64_t total_degree() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::uint64_t{0});
  }
  bool is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](value_type v) { return v == 0; });
  }

  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;
  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<value_type> entries_;
};

inline std::string to_string(const MultiIndex& r) {
  std::string out = "(";
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(r[i]);
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const MultiIndex& r) { return os << to_string(r); }

namespace detail {
inline void require_same_length(const MultiIndex& a, const MultiIndex& b, const char* what) {
  if (a.size() != b.size()) {
    throw InputError(std::string(what) + ": length mismatch " + to_string(a) + " vs " + to_string(b));
  }
}
}  // namespace detail

/// Lexicographic order with emphasis on the last coordinate: r < s iff at the
/// largest index where they differ, r is smaller.
inline std::strong_ordering lex_compare(const MultiIndex& r, const MultiIndex& s) {
  detail::require_same_length(r, s, "lex_compare");
  for (std::size_t i = r.size(); i-- > 0;) {
    if (r[i] != s[i]) return r[i] < s[i] ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

inline bool lex_less(const MultiIndex& r, const MultiIndex& s) { return lex_compare(r, s) < 0; }

/// Product order r ⪯ s.
inline bool precedes(const MultiIndex& r, const MultiIndex& s) {
  detail::require_same_length(r, s, "precedes");
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r[i] > s[i]) return false;
  }
  return true;
}

inline MultiIndex unit_index(std::size_t i, std::size_t length) {
  MultiIndex e(length);
  e[i] = 1;
  return e;
}

inline MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
  detail::require_same_length(a, b, "operator+");
  MultiIndex out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

/// Coordinatewise least upper bound.
inline MultiIndex join(const MultiIndex& a, const MultiIndex& b) {
  detail::require_same_length(a, b, "join");
  MultiIndex out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = std::max(a[i], b[i]);
  return out;
}

/// Consecutive blocks of sizes d_1, ..., d_k covering m = sum d_i coordinates.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<std::size_t> sizes) : sizes_(std::move(sizes)) {
    if (sizes_.empty()) throw InputError("partition must have at least one part");
    offsets_.reserve(sizes_.size() + 1);
    offsets_.push_back(0);
    for (std::size_t d : sizes_) {
      if (d == 0) throw InputError("partition parts must be nonempty");
      offsets_.push_back(offsets_.back() + d);
    }
    part_of_.reserve(offsets_.back());
    for (std::size_t p = 0; p < sizes_.size(); ++p) part_of_.insert(part_of_.end(), sizes_[p], p);
  }

  /// The partition with a single part of size m.
  static Partition trivial(std::size_t m) { return Partition({m}); }
  /// Every map in its own part.
  static Partition singletons(std::size_t m) { return Partition(std::vector<std::size_t>(m, 1)); }

  std::size_t parts() const { return sizes_.size(); }
  std::size_t arity() const { return offsets_.empty() ? 0 : offsets_.back(); }
  std::size_t size_of(std::size_t part) const { return sizes_.at(part); }
  std::size_t offset_of(std::size_t part) const { return offsets_.at(part); }
  std::size_t part_of(std::size_t coordinate) const { return part_of_.at(coordinate); }
  const std::vector<std::size_t>& sizes() const { return sizes_; }

  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<std::size_t> sizes_;
  std::vector<std::size_t> offsets_;
  std::vector<std::size_t> part_of_;
};

/// Per-part total degrees ‖r‖ ∈ N^k.
inline MultiIndex part_degree(const MultiIndex& r, const Partition& p) {
  if (r.size() != p.arity()) {
    throw InputError("part_degree: multi-index " + to_string(r) + " has length " +
                     std::to_string(r.size()) + ", partition expects " + std::to_string(p.arity()));
  }
  MultiIndex out(p.parts());
  for (std::size_t j = 0; j < r.size(); ++j) out[p.part_of(j)] += r[j];
  return out;
}

enum class OrbitMode { graded, cumulative };

/// Number of words of part degree s (graded) or of part degree ⪯ s
/// (cumulative).
inline Integer word_count(const Partition& p, const MultiIndex& s, OrbitMode mode) {
  if (s.size() != p.parts()) throw InputError("word_count: degree has wrong length " + to_string(s));
  Integer count = 1;
  for (std::size_t i = 0; i < p.parts(); ++i) {
    const std::uint64_t d = p.size_of(i);
    count *= mode == OrbitMode::graded ? binomial(s[i] + d - 1, d - 1) : binomial(s[i] + d, d);
  }
  return count;
}

namespace detail {
// All compositions of `total` into `parts` nonnegative summands.
inline void compositions(std::uint32_t total, std::size_t parts,
                         std::vector<std::vector<std::uint32_t>>& out) {
  std::vector<std::uint32_t> current(parts, 0);
  auto rec = [&](auto&& self, std::size_t pos, std::uint32_t remaining) -> void {
    if (pos + 1 == parts) {
      current[pos] = remaining;
      out.push_back(current);
      return;
    }
    for (std::uint32_t v = 0; v <= remaining; ++v) {
      current[pos] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, total);
}
}  // namespace detail

/// All r ∈ N^m with ‖r‖ = s, sorted ascending in `lex_compare` order.
inline std::vector<MultiIndex> words_of_part_degree(const Partition& p, const MultiIndex& s) {
  if (s.size() != p.parts()) throw InputError("words_of_part_degree: degree has wrong length " + to_string(s));
  std::vector<std::vector<std::vector<std::uint32_t>>> per_part(p.parts());
  for (std::size_t i = 0; i < p.parts(); ++i) detail::compositions(s[i], p.size_of(i), per_part[i]);

  std::vector<MultiIndex> words;
  MultiIndex current(p.arity());
  auto rec = [&](auto&& self, std::size_t part) -> void {
    if (part == p.parts()) {
      words.push_back(current);
      return;
    }
    for (const auto& comp : per_part[part]) {
      for (std::size_t j = 0; j < comp.size(); ++j) current[p.offset_of(part) + j] = comp[j];
      self(self, part + 1);
    }
  };
  rec(rec, 0);
  std::sort(words.begin(), words.end(), lex_less);
  return words;
}

/// Visits every point of the box {u : u ⪯ bound} in an order where each
/// point comes after all of its ⪯-predecessors (first coordinate fastest).
template <class Fn>
void for_each_in_box(const MultiIndex& bound, Fn&& fn) {
  MultiIndex u(bound.size());
  while (true) {
    fn(static_cast<const MultiIndex&>(u));
    std::size_t i = 0;
    for (; i < u.size(); ++i) {
      if (u[i] < bound[i]) {
        ++u[i];
        break;
      }
      u[i] = 0;
    }
    if (i == u.size()) return;
  }
}

/// Dense storage over a box, indexed in mixed radix (first coordinate fastest).
template <class T>
class BoxArray {
 public:
  BoxArray() = default;
  BoxArray(MultiIndex bound, T init) : bound_(std::move(bound)) {
    std::size_t n = 1;
    strides_.resize(bound_.size());
    for (std::size_t i = 0; i < bound_.size(); ++i) {
      strides_[i] = n;
      n *= static_cast<std::size_t>(bound_[i]) + 1;
    }
    data_.assign(n, init);
  }

  const MultiIndex& bound() const { return bound_; }
  std::size_t size() const { return data_.size(); }
  bool contains(const MultiIndex& u) const { return u.size() == bound_.size() && precedes(u, bound_); }

  T& operator[](const MultiIndex& u) { return data_[offset(u)]; }
  const T& operator[](const MultiIndex& u) const { return data_[offset(u)]; }

 private:
  std::size_t offset(const MultiIndex& u) const {
    std::size_t o = 0;
    for (std::size_t i = 0; i < u.size(); ++i) o += strides_[i] * u[i];
    return o;
  }

  MultiIndex bound_;
  std::vector<std::size_t> strides_;
  std::vector<T> data_;
};

}  // namespace rankgrowth

#endif  // RANKGROWTH_MULTI_INDEX_HPP
