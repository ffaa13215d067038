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

// Acceptance run: one PASS/FAIL line per criterion, with its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rankgrowth.hpp"
#include "rankgrowth/io/problem.hpp"
#include "support.hpp"

namespace {

using namespace rankgrowth;
using rankgrowth::testing::dense_betti;
using rankgrowth::testing::uniform_index;

/// Collects the first few problems of a criterion.
class Findings {
 public:
  template <class... Parts>
  void add(const Parts&... parts) {
    ++count_;
    if (count_ > 5) return;
    std::ostringstream os;
    (os << ... << parts);
    if (!text_.empty()) text_ += "; ";
    text_ += os.str();
  }
  bool empty() const { return count_ == 0; }
  std::string summary() const {
    if (count_ <= 5) return text_;
    return text_ + "; ... " + std::to_string(count_ - 5) + " more";
  }

 private:
  std::size_t count_ = 0;
  std::string text_;
};

struct Outcome {
  bool passed = false;
  std::string detail;
};

Outcome from(const Findings& f, std::string ok_note) {
  return f.empty() ? Outcome{true, std::move(ok_note)} : Outcome{false, f.summary()};
}

/// Points s = lo + offset with at least `count` of them, spread over a cube.
std::vector<MultiIndex> points_past(const MultiIndex& lo, std::size_t count) {
  std::uint32_t side = 1;
  while (std::pow(side, lo.size()) < static_cast<double>(count)) ++side;
  std::vector<MultiIndex> out;
  for_each_in_box(uniform_index(lo.size(), side - 1), [&](const MultiIndex& off) { out.push_back(lo + off); });
  return out;
}

Integer product_factorials(const MultiIndex& e) {
  Integer out = 1;
  for (auto x : e) out *= factorial(x);
  return out;
}

// ---------------------------------------------------------------------------

Outcome partition_dependent_rank() {
  Findings f;
  const OperatorSystem<TrivialMatroid> sys(TrivialMatroid(1), {translation({1}), translation({1})},
                                           Partition::trivial(2));
  for (std::int64_t a : {-5, 0, 3, 17}) {
    const auto joint = phi_rank(sys, {{a}}, {}, false);
    const auto split = phi_rank(sys.with_partition(Partition::singletons(2)), {{a}}, {}, false);
    if (joint.rank != 0) f.add("a=", a, ": one part gives ", joint.rank, ", want 0");
    if (split.rank != 1) f.add("a=", a, ": two parts give ", split.rank, ", want 1");
  }
  return from(f, "rank 0 with one part, 1 with two parts");
}

/// Graphic rank of an edge list: vertices minus components.
std::size_t union_find_rank(const std::vector<Edge>& edges) {
  std::map<std::int64_t, std::int64_t> parent;
  std::function<std::int64_t(std::int64_t)> root = [&](std::int64_t v) {
    auto it = parent.find(v);
    if (it == parent.end()) {
      parent[v] = v;
      return v;
    }
    return it->second == v ? v : (it->second = root(it->second));
  };
  std::size_t merges = 0;
  for (const auto& e : edges) {
    const auto a = root(e.u), b = root(e.v);
    if (a != b) {
      parent[a] = b;
      ++merges;
    }
  }
  return merges;
}

Outcome shift_graph() {
  Findings f;
  const auto sys = make_counterexample_graph(256);
  for (std::uint32_t t = 0; t <= 10; ++t) {
    const std::size_t r = union_find_rank(graded_orbit(sys, counterexample_seeds(), MultiIndex{t}));
    const std::size_t want = t % 2 == 0 ? 2 : 3;
    if (r != want) f.add("rank at t=", t, " is ", r, ", want ", want);
  }
  const auto dim = io::run_problem_text(R"({"backend":"graphic","backend_data":"counterexample","mode":"dimension"})");
  if (dim.exit_code != io::kHypothesisFailure) f.add("dimension mode exit ", dim.exit_code, ", want 3");

  const auto cum = cumulative_polynomial(sys, counterexample_seeds(), {});
  if (cum.growth.status != Certification::certified) f.add("cumulative status ", to_string(cum.growth.status));
  const std::uint32_t lo = cum.growth.threshold[0];
  for (std::uint32_t t = lo; t <= lo + 8; ++t) {
    const std::size_t direct = union_find_rank(cumulative_orbit(sys, counterexample_seeds(), MultiIndex{t}));
    if (cum.growth.polynomial.evaluate(MultiIndex{t}) != Rational(direct)) {
      f.add("cumulative t=", t, ": P = ", cum.growth.polynomial.evaluate(MultiIndex{t}), ", union-find ", direct);
    }
  }
  return from(f, "ranks 2/3 for t=0..10, dimension refused, cumulative " + to_string(cum.growth.polynomial) +
                     " on t=" + std::to_string(lo) + ".." + std::to_string(lo + 8));
}

std::size_t sumset_size(const std::vector<std::int64_t>& b, std::size_t t) {
  std::set<std::int64_t> cur{0};
  for (std::size_t i = 0; i < t; ++i) {
    std::set<std::int64_t> next;
    for (auto x : cur) {
      for (auto y : b) next.insert(x + y);
    }
    cur = std::move(next);
  }
  return cur.size();
}

Outcome khovanskii() {
  Findings f;
  std::mt19937_64 rng(4101);
  std::uniform_int_distribution<std::size_t> size(1, 4);
  std::uniform_int_distribution<std::int64_t> entry(0, 10);
  std::size_t certified = 0;
  for (int trial = 0; trial < 50; ++trial) {
    std::set<std::int64_t> chosen;
    const std::size_t n = size(rng);
    while (chosen.size() < n) chosen.insert(entry(rng));
    const std::vector<std::int64_t> b(chosen.begin(), chosen.end());
    const auto r = dimension_polynomial(make_sumset_system(std::vector<std::vector<std::int64_t>>{b}), {{0}}, {});
    certified += r.growth.status == Certification::certified ? 1 : 0;
    const std::uint32_t lo = r.growth.threshold[0];
    for (std::uint32_t t = lo; t < lo + 10; ++t) {
      const Rational p = r.growth.polynomial.evaluate(MultiIndex{t});
      if (p != Rational(sumset_size(b, t))) f.add("B size ", b.size(), " t=", t, ": P = ", p, ", |tB| = ", sumset_size(b, t));
    }
    if (!r.growth.polynomial.is_zero() && r.growth.polynomial.degree_bound()[0] + 1 > b.size()) {
      f.add("degree ", r.growth.polynomial.degree_bound()[0], " for |B| = ", b.size());
    }
  }
  return from(f, "50 sets, 10 points each, " + std::to_string(certified) + " certified");
}

Polynomial univariate_binomial(std::uint32_t m) {
  // C(t + m - 1, m - 1)
  return binomial_polynomial(static_cast<std::int64_t>(m) - 1, m - 1, 0, 1);
}

Outcome hilbert() {
  Findings f;
  for (std::uint32_t m = 1; m <= 3; ++m) {
    const MonomialModule ring = monomial_quotient(m, {});
    const auto r = dimension_polynomial(make_monomial_module_system(ring, Partition::trivial(m)), {ring.generator(0)}, {});
    if (r.growth.polynomial != univariate_binomial(m)) {
      f.add("m=", m, ": ", to_string(r.growth.polynomial), ", want ", to_string(univariate_binomial(m)));
    }
  }
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 12; ++trial) {
    const std::size_t m = 1 + trial % 3;
    std::uniform_int_distribution<std::uint32_t> e(0, 3);
    std::vector<MultiIndex> gens;
    for (int i = 0; i < 3; ++i) {
      MultiIndex g(m);
      for (std::size_t j = 0; j < m; ++j) g[j] = e(rng);
      if (!g.is_zero()) gens.push_back(g);
    }
    const MonomialModule q = monomial_quotient(m, gens);
    const Partition p = Partition::trivial(m);
    const auto r = dimension_polynomial(make_monomial_module_system(q, p), {q.generator(0)}, {});
    const std::uint32_t lo = r.growth.threshold[0];
    for (std::uint32_t t = lo; t < lo + 10; ++t) {
      std::size_t count = 0;
      for (const auto& u : words_of_part_degree(p, MultiIndex{t})) {
        bool alive = true;
        for (const auto& g : gens) alive = alive && !precedes(g, u);
        count += alive ? 1 : 0;
      }
      if (r.growth.polynomial.evaluate(MultiIndex{t}) != Rational(count)) {
        f.add("quotient trial ", trial, " t=", t, ": P = ", r.growth.polynomial.evaluate(MultiIndex{t}), ", count ", count);
      }
    }
  }
  return from(f, "m = 1, 2, 3 closed forms and 12 quotients");
}

Outcome ideal_counts() {
  Findings f;
  std::mt19937_64 rng(303);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> dm(1, 3), dn(0, 4);
    std::uniform_int_distribution<std::uint32_t> de(0, 3);
    const std::size_t m = dm(rng);
    std::vector<MultiIndex> minima;
    for (std::size_t i = dn(rng); i > 0; --i) {
      MultiIndex g(m);
      for (std::size_t j = 0; j < m; ++j) g[j] = de(rng);
      bool comparable = false;
      for (const auto& h : minima) comparable = comparable || precedes(h, g) || precedes(g, h);
      if (!comparable) minima.push_back(g);
    }
    const Partition p = rankgrowth::testing::random_partition(rng, m);
    const auto sys = make_ideal_system(m, minima, p);
    auto inside = [&](const MultiIndex& r) {
      for (const auto& g : minima) {
        if (precedes(g, r)) return false;
      }
      return true;
    };
    const auto h = dimension_polynomial(sys, ideal_seed(m), {});
    const auto hs = cumulative_polynomial(sys, ideal_seed(m), {});
    for (const auto& s : points_past(h.growth.threshold, 10)) {
      std::size_t count = 0;
      for (const auto& r : words_of_part_degree(p, s)) count += inside(r) ? 1 : 0;
      if (h.growth.polynomial.evaluate(s) != Rational(count)) f.add("H trial ", trial, " s=", s);
    }
    for (const auto& s : points_past(hs.growth.threshold, 10)) {
      std::size_t count = 0;
      for_each_in_box(s, [&](const MultiIndex& t) {
        for (const auto& r : words_of_part_degree(p, t)) count += inside(r) ? 1 : 0;
      });
      if (hs.growth.polynomial.evaluate(s) != Rational(count)) f.add("H* trial ", trial, " s=", s);
    }
  }
  return from(f, "30 ideals, H and H* on at least 10 points each");
}

Outcome round_trip() {
  Findings f;
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 200; ++trial) {
    std::uniform_int_distribution<std::size_t> dm(1, 3);
    const std::size_t m = dm(rng);
    Partition p = rankgrowth::testing::random_partition(rng, m);
    if (p.parts() > 2) p = Partition({1, m - 1});
    const auto fn = rankgrowth::testing::random_staircase(rng, m, 5, 3);
    const DecreasingTable table = tabulate(uniform_index(m, 6), p, fn);
    const auto cert = detect_stabilization(table, 2);
    if (cert.status != StaircaseStatus::window_certified) {
      f.add("trial ", trial, " not window-certified");
      continue;
    }
    const auto num = numerator_from_table(table, cert.corner, p);
    const auto g = interpolate(num, p.sizes());
    for_each_in_box(uniform_index(p.parts(), 4), [&](const MultiIndex& off) {
      const MultiIndex s = g.threshold + off;
      if (g.polynomial.evaluate(s) != Rational(rankgrowth::testing::slice_sum(fn, p, s))) {
        f.add("trial ", trial, " s=", s);
      }
    });
    if (g.leading_coefficient() * Rational(product_factorials(g.degree_bound)) != Rational(num.value_at_ones())) {
      f.add("trial ", trial, ": leading coefficient identity fails");
    }
  }
  return from(f, "200 functions");
}

/// A second partition of the same maps, different from `p` when m > 1.
Partition other_partition(const Partition& p, std::size_t m) {
  const Partition one = Partition::trivial(m);
  return p.sizes() == one.sizes() ? Partition::singletons(m) : one;
}

template <Matroid M>
void compare_star_ranks(Findings& f, const OperatorSystem<M>& sys, const std::vector<element_t<M>>& a,
                        const std::vector<element_t<M>>& b, const std::string& label) {
  const Partition q = other_partition(sys.partition(), sys.arity());
  const auto x = phi_rank(sys, a, b, true);
  const auto y = phi_rank(sys.with_partition(q), a, b, true);
  if (x.rank != y.rank) f.add(label, ": ranks ", x.rank, " and ", y.rank);
  for (const auto* r : {&x, &y}) {
    const auto& g = r->pipeline.growth;
    if (g.status != Certification::certified) f.add(label, ": status ", to_string(g.status));
    const Rational scaled = g.leading_coefficient() * Rational(product_factorials(g.degree_bound));
    if (boost::multiprecision::denominator(scaled) != 1 || scaled < 0) f.add(label, ": scaled leading coefficient ", scaled);
    if (scaled != Rational(r->rank)) f.add(label, ": scaled leading coefficient ", scaled, " vs rank ", r->rank);
  }
}

Outcome partition_invariance() {
  Findings f;
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    std::uniform_int_distribution<std::size_t> dm(2, 3), dn(1, 2);
    std::uniform_int_distribution<std::int64_t> de(0, 4);
    const std::size_t m = dm(rng);
    std::vector<Operator<IntVec>> ops;
    for (std::size_t i = 0; i < m; ++i) ops.push_back(translation({de(rng)}));
    const OperatorSystem<TrivialMatroid> sys(TrivialMatroid(1), ops, rankgrowth::testing::random_partition(rng, m));
    std::vector<IntVec> a, b;
    for (std::size_t i = dn(rng); i > 0; --i) a.push_back({de(rng)});
    if (trial % 2) b.push_back({de(rng)});
    compare_star_ranks(f, sys, a, b, "trivial trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 15; ++trial) {
    const std::size_t m = 2 + trial % 2;
    std::uniform_int_distribution<std::uint32_t> de(0, 2);
    std::vector<MonomialRelation> rel;
    for (std::size_t g = 0; g < 2; ++g) {
      MultiIndex e(m);
      for (std::size_t j = 0; j < m; ++j) e[j] = de(rng);
      if (!e.is_zero()) rel.push_back({g, e});
    }
    const MonomialModule mod(m, 2, rel);
    const auto sys = make_monomial_module_system(mod, rankgrowth::testing::random_partition(rng, m));
    std::vector<SparseVector> a{mod.generator(0)};
    std::vector<SparseVector> b;
    if (trial % 2) {
      a.push_back(mod.generator(1));
    } else {
      b.push_back(mod.generator(1));
    }
    compare_star_ranks(f, sys, a, b, "linear trial " + std::to_string(trial));
  }
  return from(f, "15 trivial and 15 linear systems");
}

Outcome loop_closure() {
  Findings f;
  std::mt19937_64 rng(46);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t m = 1 + trial % 3;
    const Partition p = rankgrowth::testing::random_partition(rng, m);
    const auto fn = rankgrowth::testing::random_staircase(rng, m, 4, 2);
    const DecreasingTable table = tabulate(uniform_index(m, 4), p, fn);
    const auto family = realize_monomial_module(table);
    if (!family.consistent) f.add("trial ", trial, ": level counts disagree with the table");
    const MonomialModule module = module_from_levels(family, m);
    const auto sys = make_monomial_module_system(module, p);
    for_each_in_box(table.full_slice_bound(), [&](const MultiIndex& s) {
      const std::size_t dim = rank(sys.matroid(), graded_orbit(sys, module_generators(module), s));
      if (Integer(dim) != table.graded_sum(s)) f.add("trial ", trial, " s=", s, ": module ", dim, ", table ", table.graded_sum(s));
    });
  }
  return from(f, "20 tables");
}

std::set<std::vector<std::int64_t>> orbit_complex(const ChainSystem& chain, const std::vector<Simplex>& a,
                                                  const MultiIndex& s, OrbitMode mode) {
  std::set<std::vector<std::int64_t>> out;
  for (const auto& c : orbit(chain.system, close_under_faces(a), s, mode)) {
    if (!c.degenerate()) out.insert(c.vertices);
  }
  return out;
}

Outcome betti() {
  Findings f;
  struct Family {
    std::string name;
    ChainSystem chain;
    std::vector<Simplex> a;
    OrbitMode mode;
  };
  const std::vector<Family> families{
      {"path shift", make_chain_system(SimplicialComplex::integer_path(), {VertexMap{"shift", [](std::int64_t v) { return v + 1; }}},
                                       Partition::trivial(1)),
       {{0, 1}}, OrbitMode::cumulative},
      {"translated hollow triangles",
       make_chain_system(SimplicialComplex::full(), {VertexMap{"far", [](std::int64_t v) { return v + 10; }}},
                         Partition::trivial(1)),
       {{0, 1}, {1, 2}, {0, 2}}, OrbitMode::cumulative},
      {"ladder of squares",
       make_chain_system(SimplicialComplex::full(), {VertexMap{"up", [](std::int64_t v) { return v + 2; }}},
                         Partition::trivial(1)),
       {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, OrbitMode::cumulative},
  };
  for (const auto& fam : families) {
    for (std::size_t n : {0, 1}) {
      const BettiResult r = betti_polynomials(fam.chain, fam.a, n, fam.mode);
      if (r.betti.status != Certification::certified) f.add(fam.name, " b", n, ": ", to_string(r.betti.status));
      const std::uint32_t lo = r.betti.threshold[0];
      for (std::uint32_t t = lo; t < lo + 8; ++t) {
        const Integer want = dense_betti(orbit_complex(fam.chain, fam.a, MultiIndex{t}, fam.mode), n);
        if (r.betti.polynomial.evaluate(MultiIndex{t}) != Rational(want)) {
          f.add(fam.name, " b", n, " t=", t, ": P = ", r.betti.polynomial.evaluate(MultiIndex{t}), ", oracle ", want);
        }
      }
    }
  }
  return from(f, "3 families, b0 and b1, 8 points each");
}

template <Matroid M>
void fuzz(Findings& f, const std::string& name, const M& matroid, const std::vector<element_t<M>>& pool,
          std::uint64_t seed) {
  const AxiomReport r = check_rank_axioms(matroid, pool, 1000, seed);
  if (r.checks < 1000) f.add(name, ": only ", r.checks, " checks");
  for (const auto& x : r.failures) f.add(name, ": ", x.axiom, " ", x.detail);
}

Outcome axioms() {
  Findings f;
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<std::int64_t> small(0, 5);

  std::vector<IntVec> ints;
  for (int i = 0; i < 12; ++i) ints.push_back({small(rng), small(rng)});
  fuzz(f, "trivial", TrivialMatroid(2), ints, 1);

  std::vector<MultiIndex> monomials;
  for_each_in_box(MultiIndex{3, 3}, [&](const MultiIndex& u) { monomials.push_back(u); });
  fuzz(f, "ideal-count", IdealCountMatroid(DownSet(2, {MultiIndex{2, 1}, MultiIndex{0, 3}})), monomials, 2);

  std::vector<SparseVector> vectors;
  for (int i = 0; i < 12; ++i) {
    SparseVector v;
    for (std::int64_t k = 0; k < 4; ++k) {
      const auto c = small(rng) - 2;
      if (c != 0) v[{k}] = Rational(c);
    }
    vectors.push_back(v);
  }
  fuzz(f, "linear", LinearMatroid(), vectors, 3);

  std::vector<Edge> edges;
  for (std::int64_t i = 0; i < 14; ++i) edges.push_back(Edge::make(small(rng), small(rng), i));
  fuzz(f, "graphic", GraphicMatroid(), edges, 4);

  std::vector<Cell> cells;
  for (const auto& s : close_under_faces({{0, 1, 2}, {1, 2, 3}, {3, 4}, {0, 4}, {2, 4}})) {
    if (s.dim == 1) cells.push_back(s);
  }
  fuzz(f, "chain boundary", ChainMatroid(1, ChainMatroid::Kind::boundary), cells, 5);
  fuzz(f, "chain count", ChainMatroid(1, ChainMatroid::Kind::count), cells, 6);

  std::vector<MultiIndex> deg2{{2, 0}, {1, 1}, {0, 2}};
  std::vector<Circuit> pairs;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = i + 1; j < 3; ++j) pairs.push_back({deg2[i], deg2[j]});
  }
  const CircuitMatroid circuits(2, Partition::trivial(2), {{MultiIndex{2}, DegreeRule::explicit_family(pairs)}},
                                DegreeRule::uniform(2));
  fuzz(f, "circuit", circuits, monomials, 7);
  return from(f, "7 oracles x 1000 checks");
}

struct Criterion {
  const char* name;
  double limit_seconds;
  Outcome (*run)();
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"partition-dependent rank example", 1, partition_dependent_rank},
      {"shift graph oscillation and cumulative growth", 5, shift_graph},
      {"Khovanskii sumset suite", 60, khovanskii},
      {"Hilbert polynomial suite", 10, hilbert},
      {"ideal counting suite", 30, ideal_counts},
      {"engine round trip", 60, round_trip},
      {"partition invariance of the star rank", 60, partition_invariance},
      {"monomial module loop closure", 10, loop_closure},
      {"Betti number suite", 30, betti},
      {"rank axiom fuzzing", 600, axioms},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (out.passed && elapsed > c.limit_seconds) {
      out.passed = false;
      out.detail += " (over the " + std::to_string(static_cast<int>(c.limit_seconds)) + " s limit)";
    }
    failures += out.passed ? 0 : 1;
    std::printf("%s  %-46s %8.3f s  %s\n", out.passed ? "PASS" : "FAIL", c.name, elapsed, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%zu criteria, %d failed\n", criteria.size(), failures);
  return failures == 0 ? 0 : 1;
}
