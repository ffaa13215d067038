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

#ifndef RANKGROWTH_ENGINE_HPP
#define RANKGROWTH_ENGINE_HPP

// Growth polynomials of rk(Φ^{(s)}(A) | Φ^{(s)}(B)).
//
// For u ∈ N^m the marginal rank
//
//   f(u) = rk( φ^u(A) | Θ_u(A) ∪ Φ^{(‖u‖)}(B) ),   Θ_u = { φ^r : ‖r‖ = ‖u‖, r <_lex u },
//
// sums over each slice ‖u‖ = s to the graded rank, and is decreasing when
// every part is triangular.  The pipeline tabulates f on a box, reads off the
// staircase corner, computes the generating-function numerator and
// interpolates; every result is then checked against direct rank evaluation.

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "rankgrowth/errors.hpp"
#include "rankgrowth/matroid.hpp"
#include "rankgrowth/multi_index.hpp"
#include "rankgrowth/operators.hpp"
#include "rankgrowth/polynomial.hpp"
#include "rankgrowth/rational.hpp"
#include "rankgrowth/staircase.hpp"

namespace rankgrowth {

struct StabilizationConfig {
  /// Tabulation box in N^m; defaults to `default_box(m)`.
  std::optional<MultiIndex> box;
  /// Verification window width past the staircase corner.
  std::size_t window = 2;
  std::size_t threads = 1;
  /// Automatic box growth stops at this bound per coordinate...
  std::uint32_t max_box = 32;
  /// ...or when the box would exceed this many points.
  std::size_t max_points = 400000;
  bool check_hypotheses = true;
  CheckOptions check;
};

/// 8 per coordinate for m <= 3, 5 for m <= 5, 3 beyond.
inline MultiIndex default_box(std::size_t m) {
  const std::uint32_t b = m <= 3 ? 8 : (m <= 5 ? 5 : 3);
  return MultiIndex(std::vector<std::uint32_t>(m, b));
}

namespace detail {

inline void validate_config(const StabilizationConfig& cfg, std::size_t m) {
  if (cfg.window < 1) throw InputError("verification window must be at least 1");
  if (cfg.box) {
    if (cfg.box->size() != m) {
      throw InputError("box " + to_string(*cfg.box) + " must have one bound per map (" + std::to_string(m) + ")");
    }
  }
}

inline std::size_t box_points(const MultiIndex& box) {
  std::size_t n = 1;
  for (auto b : box) n *= static_cast<std::size_t>(b) + 1;
  return n;
}

/// f on the words of one slice, in lex order, up to and including words[last].
/// `base` spans the context Φ^{(s)}(B) (or Ψ^{(s)}(B)).
template <Matroid M>
std::vector<std::size_t> slice_values(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& seeds,
                                      const std::vector<element_t<M>>& base, const std::vector<MultiIndex>& words,
                                      std::size_t last, OrbitCache<element_t<M>>& cache) {
  auto builder = sys.matroid().builder();
  for (const auto& x : base) builder.insert(x);
  std::vector<std::size_t> values;
  values.reserve(last + 1);
  for (std::size_t w = 0; w <= last; ++w) {
    std::size_t gained = 0;
    for (const auto& a : seeds) {
      if (builder.insert(apply_word(sys, a, words[w], cache))) ++gained;
    }
    values.push_back(gained);
  }
  return values;
}

template <class Fn>
void parallel_for(std::size_t count, std::size_t threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < std::min(threads, count); ++t) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

/// Tabulates f^{Φ,Ψ}_{A|B} on {u ⪯ box}; Ψ = Φ gives f^Φ_{A|B}.  Violations of
/// monotonicity are recorded in the table, never thrown.
template <Matroid M>
DecreasingTable tabulate_context_f(const OperatorSystem<M>& phi, const OperatorSystem<M>& psi,
                                   const std::vector<element_t<M>>& a, const std::vector<element_t<M>>& b,
                                   const MultiIndex& box, std::size_t threads = 1) {
  using E = element_t<M>;
  if (box.size() != phi.arity()) throw InputError("tabulate_f: box " + to_string(box) + " has wrong length");
  const Partition& p = phi.partition();
  DecreasingTable table(box, p);
  const auto seeds = detail::sorted_seeds(phi, a);
  const MultiIndex degree_box = part_degree(box, p);

  std::vector<MultiIndex> degrees;
  for_each_in_box(degree_box, [&](const MultiIndex& s) { degrees.push_back(s); });

  OrbitCache<E> cache;
  OrbitCache<E> base_cache;
  std::mutex table_mutex;
  detail::parallel_for(degrees.size(), threads, [&](std::size_t idx) {
    const MultiIndex& s = degrees[idx];
    const auto words = words_of_part_degree(p, s);
    std::optional<std::size_t> last;
    for (std::size_t w = 0; w < words.size(); ++w) {
      if (precedes(words[w], box)) last = w;
    }
    if (!last) return;
    const auto base = graded_orbit(psi, b, s, base_cache);
    const auto values = detail::slice_values(phi, seeds, base, words, *last, cache);
    std::lock_guard lock(table_mutex);
    for (std::size_t w = 0; w <= *last; ++w) {
      if (precedes(words[w], box)) table.set(words[w], values[w]);
    }
  });
  table.scan_violations();
  return table;
}

template <Matroid M>
DecreasingTable tabulate_f(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                           const std::vector<element_t<M>>& b, const MultiIndex& box, std::size_t threads = 1) {
  return tabulate_context_f(sys, sys, a, b, box, threads);
}

/// f^Φ_{A|B}(u) at a single point.
template <Matroid M>
std::size_t eval_f(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                   const std::vector<element_t<M>>& b, const MultiIndex& u) {
  const Partition& p = sys.partition();
  const MultiIndex s = part_degree(u, p);
  const auto words = words_of_part_degree(p, s);
  const auto it = std::find(words.begin(), words.end(), u);
  OrbitCache<element_t<M>> cache;
  const auto base = graded_orbit(sys, b, s, cache);
  const auto values = detail::slice_values(sys, detail::sorted_seeds(sys, a), base, words,
                                           static_cast<std::size_t>(it - words.begin()), cache);
  return values.back();
}

// ---------------------------------------------------------------------------
// Verification.

struct VerificationPoint {
  MultiIndex degree;
  Rational predicted;
  Integer direct;
};

struct VerificationReport {
  MultiIndex lo;
  MultiIndex hi;
  std::vector<VerificationPoint> points;
  std::vector<std::size_t> mismatches;  // indices into points
  bool ok() const { return mismatches.empty(); }
};

/// Compares P with `direct(s)` at every s in [lo, hi]; lo must be ⪰ the
/// polynomial's threshold.
template <class DirectRank>
VerificationReport verify_fit_with(const GrowthPolynomial& poly, const MultiIndex& lo, const MultiIndex& hi,
                                   DirectRank&& direct) {
  if (lo.size() != poly.threshold.size() || hi.size() != lo.size()) {
    throw InputError("verify_fit: window has wrong number of coordinates");
  }
  if (!precedes(poly.threshold, lo)) {
    throw ContractError("verify_fit: window start " + to_string(lo) + " is below the threshold " +
                        to_string(poly.threshold));
  }
  if (!precedes(lo, hi)) throw InputError("verify_fit: empty window");
  VerificationReport report{lo, hi, {}, {}};
  MultiIndex extent(lo.size());
  for (std::size_t i = 0; i < lo.size(); ++i) extent[i] = hi[i] - lo[i];
  for_each_in_box(extent, [&](const MultiIndex& offset) {
    const MultiIndex s = lo + offset;
    VerificationPoint pt{s, poly(s), Integer(direct(s))};
    if (pt.predicted != Rational(pt.direct)) report.mismatches.push_back(report.points.size());
    report.points.push_back(std::move(pt));
  });
  return report;
}

template <Matroid M>
VerificationReport verify_fit(const GrowthPolynomial& poly, const OperatorSystem<M>& sys,
                              const std::vector<element_t<M>>& a, const std::vector<element_t<M>>& b,
                              const MultiIndex& lo, const MultiIndex& hi, OrbitMode mode = OrbitMode::graded) {
  OrbitCache<element_t<M>> cache;
  return verify_fit_with(poly, lo, hi, [&](const MultiIndex& s) {
    return relative_rank(sys.matroid(), orbit(sys, a, s, mode, cache), orbit(sys, b, s, mode, cache));
  });
}

// ---------------------------------------------------------------------------
// Pipeline.

struct GrowthResult {
  GrowthPolynomial growth;
  StaircaseCertificate staircase;
  DecreasingTable table;
  VerificationReport verification;
  std::optional<SystemReport> hypotheses;
  std::size_t box_growths = 0;
};

namespace detail {

template <Matroid M>
void require_hypotheses(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& sample,
                        const StabilizationConfig& cfg, bool need_triangular, std::optional<SystemReport>& out,
                        const std::function<std::string()>& extra_witness) {
  if (!cfg.check_hypotheses) return;
  for (std::size_t part = 0; part < sys.parts(); ++part) {
    if (need_triangular && sys.declared(part) != PartHypothesis::triangular) {
      throw HypothesisError("part " + std::to_string(part + 1) +
                            " is only declared quasi-triangular; graded growth needs triangular parts" +
                            extra_witness());
    }
  }
  SystemReport report = check_system(sys, sample, cfg.check);
  if (!report.commutes) throw HypothesisError(describe(*report.commutation_witness));
  for (const auto& pr : report.parts) {
    if (need_triangular && !pr.triangular) {
      throw HypothesisError(describe(*pr.triangular_witness, false) + extra_witness());
    }
    if (!pr.quasi_triangular) throw HypothesisError(describe(*pr.quasi_witness, true) + extra_witness());
  }
  out = std::move(report);
}

inline MultiIndex grow_box(const MultiIndex& box, const StaircaseCertificate& cert, const StabilizationConfig& cfg,
                           bool& grew) {
  MultiIndex next = box;
  grew = false;
  for (std::size_t j : cert.truncated_coordinates) {
    const std::uint32_t want = std::max<std::uint32_t>(2 * box[j], cert.corner[j] + cfg.window);
    const std::uint32_t capped = std::min(want, std::max(cfg.max_box, box[j]));
    if (capped > box[j]) {
      next[j] = capped;
      grew = true;
    }
  }
  if (grew && box_points(next) > cfg.max_points) grew = false;
  return grew ? next : box;
}

inline void finish_status(GrowthResult& r) {
  if (r.staircase.status == StaircaseStatus::box_truncated) {
    r.growth.status = Certification::box_truncated;
  } else {
    r.growth.status = r.verification.ok() ? Certification::certified : Certification::unverified;
  }
}

/// Doubles every coordinate, within the caps.
inline MultiIndex grow_everywhere(const MultiIndex& box, const StabilizationConfig& cfg, bool& grew) {
  MultiIndex next = box;
  grew = false;
  for (std::size_t j = 0; j < box.size(); ++j) {
    const std::uint32_t capped = std::min(2 * box[j], std::max(cfg.max_box, box[j]));
    if (capped > box[j]) {
      next[j] = capped;
      grew = true;
    }
  }
  if (grew && box_points(next) > cfg.max_points) grew = false;
  return grew ? next : box;
}

/// Tabulate with automatic box growth, then numerator, interpolation and
/// verification.  A window-certified staircase whose fit fails is retried in
/// a larger box.
template <Matroid M, class Tabulate, class Verify>
GrowthResult run_pipeline(const OperatorSystem<M>& sys, const StabilizationConfig& cfg, Tabulate&& tab,
                          Verify&& verify) {
  detail::validate_config(cfg, sys.arity());
  MultiIndex box = cfg.box.value_or(default_box(sys.arity()));
  std::size_t growths = 0;
  while (true) {
    DecreasingTable table = tab(box);
    if (!table.decreasing()) {
      throw HypothesisError("marginal rank function is not decreasing: " + describe(table.violations().front()) +
                            " (some part is not triangular)");
    }
    StaircaseCertificate cert = detect_stabilization(table, cfg.window);
    bool grew = false;
    if (cert.status == StaircaseStatus::box_truncated) {
      MultiIndex next = grow_box(box, cert, cfg, grew);
      if (grew) {
        box = std::move(next);
        ++growths;
        continue;
      }
    }
    GrowthPolynomial growth = interpolate(numerator_from_table(table, cert.corner, sys.partition()),
                                          sys.partition().sizes());
    VerificationReport report = verify(growth);
    if (cert.status == StaircaseStatus::window_certified && !report.ok()) {
      MultiIndex next = grow_everywhere(box, cfg, grew);
      if (grew) {
        box = std::move(next);
        ++growths;
        continue;
      }
    }
    GrowthResult r{std::move(growth), std::move(cert), std::move(table), std::move(report), std::nullopt, growths};
    finish_status(r);
    return r;
  }
}

inline MultiIndex window_end(const MultiIndex& lo, std::size_t w) {
  MultiIndex hi = lo;
  for (std::size_t i = 0; i < hi.size(); ++i) hi[i] += static_cast<std::uint32_t>(w);
  return hi;
}

template <Matroid M>
std::string oscillation_note(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                             const std::vector<element_t<M>>& b, const StabilizationConfig& cfg) {
  try {
    MultiIndex box = cfg.box.value_or(default_box(sys.arity()));
    const DecreasingTable t = tabulate_f(sys, a, b, box, cfg.threads);
    if (!t.decreasing()) return "; marginal ranks are not decreasing: " + describe(t.violations().front());
  } catch (const Error&) {
  }
  return "";
}

}  // namespace detail

/// P with rk(Φ^{(s)}(A) | Φ^{(s)}(B)) = P(s) for s ⪰ threshold; degree at most
/// d_i - 1 in Y_i.  Requires triangular parts.
template <Matroid M>
GrowthResult dimension_polynomial(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                                  const std::vector<element_t<M>>& b, const StabilizationConfig& cfg = {}) {
  std::optional<SystemReport> hypotheses;
  std::vector<element_t<M>> sample = a;
  sample.insert(sample.end(), b.begin(), b.end());
  detail::require_hypotheses(sys, sample, cfg, true, hypotheses,
                             [&] { return detail::oscillation_note(sys, a, b, cfg); });
  GrowthResult r = detail::run_pipeline(
      sys, cfg, [&](const MultiIndex& box) { return tabulate_f(sys, a, b, box, cfg.threads); },
      [&](const GrowthPolynomial& g) {
        return verify_fit(g, sys, a, b, g.threshold, detail::window_end(g.threshold, cfg.window), OrbitMode::graded);
      });
  r.hypotheses = std::move(hypotheses);
  return r;
}

/// Q with rk(Φ^{⪯(s)}(A) | Φ^{⪯(s)}(B)) = Q(s) for s ⪰ threshold; degree at
/// most d_i in Y_i.  Computed as the dimension polynomial of the augmented
/// system; verified against cumulative orbits of `sys` itself.
template <Matroid M>
GrowthResult cumulative_polynomial(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                                   const std::vector<element_t<M>>& b, const StabilizationConfig& cfg = {}) {
  std::optional<SystemReport> hypotheses;
  std::vector<element_t<M>> sample = a;
  sample.insert(sample.end(), b.begin(), b.end());
  detail::require_hypotheses(sys, sample, cfg, false, hypotheses, [] { return std::string(); });
  const OperatorSystem<M> aug = augment(sys);
  StabilizationConfig inner = cfg;
  inner.check_hypotheses = false;
  if (cfg.box && cfg.box->size() == sys.arity()) {
    // Box given for the original maps: give each identity the bound of its part.
    std::vector<std::uint32_t> entries;
    for (std::size_t part = 0; part < sys.parts(); ++part) {
      std::uint32_t widest = 0;
      for (std::size_t j = 0; j < sys.partition().size_of(part); ++j) {
        widest = std::max(widest, (*cfg.box)[sys.partition().offset_of(part) + j]);
      }
      entries.push_back(widest);
      for (std::size_t j = 0; j < sys.partition().size_of(part); ++j) {
        entries.push_back((*cfg.box)[sys.partition().offset_of(part) + j]);
      }
    }
    inner.box = MultiIndex(std::move(entries));
  }
  GrowthResult r = detail::run_pipeline(
      aug, inner, [&](const MultiIndex& box) { return tabulate_f(aug, a, b, box, cfg.threads); },
      [&](const GrowthPolynomial& g) {
        return verify_fit(g, sys, a, b, g.threshold, detail::window_end(g.threshold, cfg.window),
                          OrbitMode::cumulative);
      });
  r.hypotheses = std::move(hypotheses);
  return r;
}

/// Ψ-context variant: rk(Φ^{(s)}(A) | Ψ^{(s)}(B)) where each part of Φ is a
/// subtuple (by operator name, in order) of the matching part of Ψ.
template <Matroid M>
GrowthResult context_dimension_polynomial(const OperatorSystem<M>& phi, const OperatorSystem<M>& psi,
                                          const std::vector<element_t<M>>& a, const std::vector<element_t<M>>& b,
                                          const StabilizationConfig& cfg = {}) {
  if (phi.parts() != psi.parts()) throw InputError("context system must have the same number of parts");
  for (std::size_t part = 0; part < phi.parts(); ++part) {
    std::size_t pos = psi.partition().offset_of(part);
    const std::size_t end = pos + psi.partition().size_of(part);
    for (std::size_t j = 0; j < phi.partition().size_of(part); ++j) {
      const std::string& name = phi.op(phi.partition().offset_of(part) + j).name;
      while (pos < end && psi.op(pos).name != name) ++pos;
      if (pos == end) {
        throw InputError("part " + std::to_string(part + 1) + " of the system is not a subtuple of the context " +
                         "system's part (missing or out of order: '" + name + "')");
      }
      ++pos;
    }
  }
  std::optional<SystemReport> hypotheses;
  std::vector<element_t<M>> sample = a;
  sample.insert(sample.end(), b.begin(), b.end());
  detail::require_hypotheses(phi, sample, cfg, true, hypotheses, [] { return std::string(); });
  OrbitCache<element_t<M>> ca, cb;
  GrowthResult r = detail::run_pipeline(
      phi, cfg, [&](const MultiIndex& box) { return tabulate_context_f(phi, psi, a, b, box, cfg.threads); },
      [&](const GrowthPolynomial& g) {
        return verify_fit_with(g, g.threshold, detail::window_end(g.threshold, cfg.window), [&](const MultiIndex& s) {
          return relative_rank(phi.matroid(), graded_orbit(phi, a, s, ca), graded_orbit(psi, b, s, cb));
        });
      });
  r.hypotheses = std::move(hypotheses);
  return r;
}

// ---------------------------------------------------------------------------
// Ranks of the derived matroids.

struct PhiRankResult {
  Integer rank;  // numerator at (1, ..., 1)
  /// leading coefficient × Π (degree_bound_i)! == rank
  bool leading_coefficient_identity = false;
  GrowthResult pipeline;
};

/// Rank of A over B in the Φ-closure matroid (`star == false`, triangular
/// parts, graded orbits) or the Φ*-closure matroid (`star == true`,
/// quasi-triangular parts, cumulative orbits).
template <Matroid M>
PhiRankResult phi_rank(const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                       const std::vector<element_t<M>>& b, bool star, const StabilizationConfig& cfg = {}) {
  GrowthResult r = star ? cumulative_polynomial(sys, a, b, cfg) : dimension_polynomial(sys, a, b, cfg);
  PhiRankResult out{r.growth.numerator_at_ones(), false, {}};
  Rational scaled = r.growth.leading_coefficient();
  for (auto e : r.growth.degree_bound) scaled *= Rational(factorial(e));
  out.leading_coefficient_identity = scaled == Rational(out.rank);
  if (out.rank < 0) throw Error("phi_rank: negative numerator value " + out.rank.str());
  out.pipeline = std::move(r);
  return out;
}

enum class ClosureVerdict { member, not_member, inconclusive };

inline const char* to_string(ClosureVerdict v) {
  switch (v) {
    case ClosureVerdict::member:
      return "member";
    case ClosureVerdict::not_member:
      return "not-member";
    case ClosureVerdict::inconclusive:
      return "inconclusive";
  }
  return "inconclusive";
}

struct ClosureResult {
  ClosureVerdict verdict = ClosureVerdict::inconclusive;
  std::optional<MultiIndex> witness;  // degree s with rk < number of words
  std::string justification;
};

/// Is a in the Φ-closure of B?  `member` always comes with a witness degree
/// checked by direct rank evaluation; `not_member` only when every part is
/// triangular and the pipeline for {a} is window-certified and verified (then
/// the graded rank over the word count tends to 1).  Everything else is
/// `inconclusive`.
template <Matroid M>
ClosureResult phi_closure_member(const OperatorSystem<M>& sys, const element_t<M>& a,
                                 const std::vector<element_t<M>>& b, const StabilizationConfig& cfg = {}) {
  using E = element_t<M>;
  const std::vector<E> single{a};
  OrbitCache<E> cache;
  auto witnessed = [&](const MultiIndex& s) {
    const std::size_t rk =
        relative_rank(sys.matroid(), graded_orbit(sys, single, s, cache), graded_orbit(sys, b, s, cache));
    return Integer(rk) < word_count(sys.partition(), s, OrbitMode::graded);
  };
  ClosureResult out;
  const MultiIndex zero(sys.parts());
  if (witnessed(zero)) {
    out.verdict = ClosureVerdict::member;
    out.witness = zero;
    out.justification = "a depends on B already at degree 0";
    return out;
  }
  detail::validate_config(cfg, sys.arity());
  const MultiIndex box = cfg.box.value_or(default_box(sys.arity()));
  const DecreasingTable table = tabulate_f(sys, single, b, box, cfg.threads);
  std::optional<MultiIndex> found;
  for_each_in_box(box, [&](const MultiIndex& u) {
    if (!found && table.at(u) == 0) found = u;
  });
  if (found) {
    const MultiIndex s = part_degree(*found, sys.partition());
    if (witnessed(s)) {
      out.verdict = ClosureVerdict::member;
      out.witness = s;
      out.justification = "graded rank at degree " + to_string(s) + " is below the number of words";
      return out;
    }
  }
  try {
    StabilizationConfig inner = cfg;
    const GrowthResult r = dimension_polynomial(sys, single, b, inner);
    if (r.growth.status == Certification::certified && r.growth.numerator_at_ones() == 1) {
      out.verdict = ClosureVerdict::not_member;
      out.justification =
          "triangular parts, certified staircase: graded rank equals the word count, ratio tends to 1";
      return out;
    }
    out.justification = std::string("pipeline status ") + to_string(r.growth.status) + ", no witness in box " +
                        to_string(r.table.box());
  } catch (const HypothesisError& e) {
    out.justification = std::string("no witness in box and the triangular hypotheses fail: ") + e.what();
  }
  out.verdict = ClosureVerdict::inconclusive;
  return out;
}

}  // namespace rankgrowth

#endif  // RANKGROWTH_ENGINE_HPP
