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

#ifndef RANKGROWTH_IO_SELFCHECK_HPP
#define RANKGROWTH_IO_SELFCHECK_HPP

// The built-in golden corpus.  Every item computes a value through the
// library and compares it with a value fixed by hand or by a brute-force
// count that does not go through the engine.

#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rankgrowth/backends/chain.hpp"
#include "rankgrowth/backends/circuit.hpp"
#include "rankgrowth/backends/graphic.hpp"
#include "rankgrowth/backends/ideal_count.hpp"
#include "rankgrowth/backends/linear.hpp"
#include "rankgrowth/backends/trivial.hpp"
#include "rankgrowth/engine.hpp"
#include "rankgrowth/io/problem.hpp"

namespace rankgrowth::io {

struct SelfcheckItem {
  std::string name;
  /// Empty on success, otherwise what went wrong.
  std::function<std::string()> run;
};

struct SelfcheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace selfcheck_detail {

template <class A, class B>
std::string expect_eq(const A& got, const B& want, const std::string& what) {
  if (got == want) return "";
  std::ostringstream os;
  os << what << ": got " << got << ", want " << want;
  return os.str();
}

inline std::string expect_poly(const GrowthResult& r, const std::string& want) {
  const std::string got = to_string(r.growth.polynomial);
  if (got != want) return "polynomial " + got + ", want " + want;
  if (r.growth.status != Certification::certified) return std::string("status ") + to_string(r.growth.status);
  return "";
}

inline Polynomial univariate(std::initializer_list<Rational> coefficients) {
  Polynomial p(1);
  std::uint32_t e = 0;
  for (const auto& c : coefficients) p.add_term(MultiIndex{e++}, c);
  return p;
}

inline OperatorSystem<LinearMatroid> polynomial_ring(std::size_t m) {
  return make_monomial_module_system(monomial_quotient(m, {}), Partition::trivial(m));
}

inline std::size_t sumset_size(const std::vector<std::int64_t>& b, std::size_t t) {
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

inline std::string cli_expect(const std::string& config, int exit_code, const std::string& message = "") {
  const RunOutcome out = run_problem_text(config);
  if (out.exit_code != exit_code) {
    return "exit " + std::to_string(out.exit_code) + ", want " + std::to_string(exit_code) + " (" + out.message + ")";
  }
  if (!message.empty() && out.message != message) return "message \"" + out.message + "\", want \"" + message + "\"";
  return "";
}

}  // namespace selfcheck_detail

inline std::vector<SelfcheckItem> selfcheck_corpus() {
  using namespace selfcheck_detail;
  std::vector<SelfcheckItem> items;
  auto add = [&](std::string name, std::function<std::string()> fn) { items.push_back({std::move(name), std::move(fn)}); };

  // Ranks.
  add("rank: trivial {7, 9, 7} = 2", [] {
    return expect_eq(rank(TrivialMatroid(1), std::vector<IntVec>{{7}, {9}, {7}}), 2u, "rank");
  });
  add("rank: vectors (1,0), (0,1), (1,1) = 2", [] {
    std::vector<SparseVector> s{basis_vector({0}), basis_vector({1}), {{{0}, 1}, {{1}, 1}}};
    return expect_eq(rank(LinearMatroid(), s), 2u, "rank");
  });
  add("rank: triangle graph = 2", [] {
    return expect_eq(rank(GraphicMatroid(), std::vector<Edge>{Edge::make(0, 1), Edge::make(1, 2), Edge::make(0, 2)}),
                     2u, "rank");
  });
  add("relative rank: trivial {1,2} over {2,3} = 1", [] {
    return expect_eq(relative_rank(TrivialMatroid(1), std::vector<IntVec>{{1}, {2}}, std::vector<IntVec>{{2}, {3}}),
                     1u, "rank");
  });
  add("relative rank: (1,1) over (1,0), (0,1) = 0", [] {
    std::vector<SparseVector> a{{{{0}, 1}, {{1}, 1}}}, b{basis_vector({0}), basis_vector({1})};
    return expect_eq(relative_rank(LinearMatroid(), a, b), 0u, "rank");
  });
  add("localize: trivial at {5}, rank {5, 6} = 1", [] {
    return expect_eq(rank(localize(TrivialMatroid(1), {{5}}), std::vector<IntVec>{{5}, {6}}), 1u, "rank");
  });
  add("extend_basis: (1,0), (2,0), (0,1) keeps (1,0), (0,1)", [] {
    const auto basis = extend_basis(LinearMatroid(), {}, {basis_vector({0}), {{{0}, 2}}, basis_vector({1})});
    return expect_eq(basis.size() == 2 && basis[0] == basis_vector({0}) && basis[1] == basis_vector({1}), true,
                     "basis");
  });

  // Multi-indices and orbits.
  add("part degree (2,0,1) under parts (2,1) = (2,1)", [] {
    return expect_eq(to_string(part_degree(MultiIndex{2, 0, 1}, Partition({2, 1}))), std::string("(2,1)"), "degree");
  });
  add("lex order: (1,0) < (0,1) and (5,1) < (0,2)", [] {
    return expect_eq(lex_less(MultiIndex{1, 0}, MultiIndex{0, 1}) && lex_less(MultiIndex{5, 1}, MultiIndex{0, 2}),
                     true, "order");
  });
  add("apply_word: x+1, x+3 at (2,1) sends 0 to 5", [] {
    const auto sys = make_sumset_system(std::vector<std::vector<std::int64_t>>{{1, 3}});
    OrbitCache<IntVec> cache;
    return expect_eq(apply_word(sys, IntVec{0}, MultiIndex{2, 1}, cache)[0], 5, "image");
  });
  add("graded orbit: shifts {0,1}, degree 2 = {0,1,2}", [] {
    const auto sys = make_sumset_system(std::vector<std::vector<std::int64_t>>{{0, 1}});
    return expect_eq(graded_orbit(sys, {{0}}, MultiIndex{2}) == std::vector<IntVec>{{0}, {1}, {2}}, true, "orbit");
  });
  add("cumulative orbit: shift +1, degree 3 = {0..3}", [] {
    const auto sys = make_sumset_system(std::vector<std::vector<std::int64_t>>{{1}});
    return expect_eq(cumulative_orbit(sys, {{0}}, MultiIndex{3}).size(), 4u, "orbit size");
  });
  add("word counts: (1) graded 1, (2) graded at 3 is 4, (1,1) cumulative at (2,3) is 12", [] {
    const bool ok = word_count(Partition({1}), MultiIndex{7}, OrbitMode::graded) == 1 &&
                    word_count(Partition({2}), MultiIndex{3}, OrbitMode::graded) == 4 &&
                    word_count(Partition({1, 1}), MultiIndex{2, 3}, OrbitMode::cumulative) == 12;
    return expect_eq(ok, true, "counts");
  });

  // Hypothesis checks.
  add("check: shifts on Z commute and are triangular", [] {
    const auto sys = make_sumset_system(std::vector<std::vector<std::int64_t>>{{1, 2}});
    const auto r = check_system(sys, {{0}, {5}}, {});
    return expect_eq(r.commutes && r.all_triangular(), true, "report");
  });
  add("check: shift graph is quasi-triangular but not triangular", [] {
    const auto r = check_system(make_counterexample_graph(), counterexample_seeds(), {});
    return expect_eq(r.commutes && !r.all_triangular() && r.all_quasi_triangular(), true, "report");
  });
  add("check: x+1 and 2x do not commute", [] {
    const OperatorSystem<TrivialMatroid> sys(
        TrivialMatroid(1),
        {translation({1}), Operator<IntVec>{"2x", [](const IntVec& x) { return IntVec{2 * x[0]}; }}},
        Partition::trivial(2));
    return expect_eq(check_system(sys, {{0}}, {}).commutes, false, "commutes");
  });

  // Marginal ranks and the staircase.
  add("eval_f: K[x,y], A = {1}, at (0,1) = 1", [] {
    return expect_eq(eval_f(polynomial_ring(2), {basis_vector({0, 0, 0})}, {}, MultiIndex{0, 1}), 1u, "f");
  });
  add("tabulate_f: shift graph declared triangular has violations", [] {
    const auto g = make_counterexample_graph();
    return expect_eq(tabulate_f(g, counterexample_seeds(), {}, MultiIndex{6}).decreasing(), false, "decreasing");
  });
  add("staircase of (2,1,0,...) has corner (2)", [] {
    const auto t = tabulate(MultiIndex{6}, Partition({1}), [](const MultiIndex& u) { return u[0] >= 2 ? 0 : 2 - u[0]; });
    return expect_eq(to_string(detect_stabilization(t, 2).corner), std::string("(2)"), "corner");
  });
  add("numerator of (2,1,0,...) is 2 - Y - Y^2", [] {
    const auto t = tabulate(MultiIndex{6}, Partition({1}), [](const MultiIndex& u) { return u[0] >= 2 ? 0 : 2 - u[0]; });
    const auto num = numerator_from_table(t, MultiIndex{2}, Partition({1}));
    return expect_eq(num.as_polynomial() == univariate({2, -1, -1}), true, "numerator");
  });
  add("interpolate: {0:1} with d=(2) is Y + 1; {0:3, 1:-2} with d=(1) is 1", [] {
    GeneratingNumerator a{{{MultiIndex{0}, 1}}, MultiIndex{0}};
    GeneratingNumerator b{{{MultiIndex{0}, 3}, {MultiIndex{1}, -2}}, MultiIndex{1}};
    return expect_eq(to_string(interpolate(a, {2}).polynomial) + "; " + to_string(interpolate(b, {1}).polynomial),
                     std::string("Y + 1; 1"), "polynomials");
  });
  add("dominant terms of Y1^2*Y2 + Y1*Y2^2 + Y1*Y2", [] {
    Polynomial p(2);
    p.add_term(MultiIndex{2, 1}, 1);
    p.add_term(MultiIndex{1, 2}, 1);
    p.add_term(MultiIndex{1, 1}, 1);
    return expect_eq(dominant_terms(p).size(), 2u, "count");
  });
  add("monomial module of (2,1,0,...): I_1 = {0,1}, I_2 = {0}", [] {
    const auto t = tabulate(MultiIndex{6}, Partition({1}), [](const MultiIndex& u) { return u[0] >= 2 ? 0 : 2 - u[0]; });
    const auto fam = realize_monomial_module(t);
    const bool ok = fam.consistent && fam.levels.size() == 2 && fam.levels[0].frontier == std::vector<MultiIndex>{{1}} &&
                    fam.levels[1].frontier == std::vector<MultiIndex>{{0}};
    return expect_eq(ok, true, "levels");
  });

  // Growth polynomials.
  add("sumset {0,1}: P = Y + 1", [] {
    return expect_poly(dimension_polynomial(make_sumset_system(std::vector<std::vector<std::int64_t>>{{0, 1}}),
                                            {{0}}, {}),
                       "Y + 1");
  });
  add("sumset {0,1,3}: P matches |tB| past the threshold", [] {
    const auto r = dimension_polynomial(make_sumset_system(std::vector<std::vector<std::int64_t>>{{0, 1, 3}}), {{0}}, {});
    for (std::uint32_t t = r.growth.threshold[0]; t < r.growth.threshold[0] + 10; ++t) {
      if (r.growth(MultiIndex{t}) != Rational(sumset_size({0, 1, 3}, t))) return "mismatch at t = " + std::to_string(t);
    }
    return std::string();
  });
  add("sumset {0,1} x {0,1} on orthogonal axes: P = (Y1 + 1)(Y2 + 1)", [] {
    const auto sys = make_sumset_system(std::vector<std::vector<IntVec>>{{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}});
    return expect_poly(dimension_polynomial(sys, {{0, 0}}, {}), "Y1*Y2 + Y1 + Y2 + 1");
  });
  add("Hilbert: K[x1,x2,x3] gives 1/2*Y^2 + 3/2*Y + 1", [] {
    return expect_poly(dimension_polynomial(polynomial_ring(3), {basis_vector({0, 0, 0, 0})}, {}), "1/2*Y^2 + 3/2*Y + 1");
  });
  add("Hilbert: K[x,y]/(x^2) is eventually 2", [] {
    const MonomialModule mod = monomial_quotient(2, {MultiIndex{2, 0}});
    return expect_poly(dimension_polynomial(make_monomial_module_system(mod, Partition::trivial(2)),
                                            module_generators(mod), {}),
                       "2");
  });
  add("A inside B gives P = 0", [] {
    return expect_poly(dimension_polynomial(make_sumset_system(std::vector<std::vector<std::int64_t>>{{0, 1}}), {{0}},
                                            {{0}}),
                       "0");
  });
  add("cumulative: single shift gives Y + 1", [] {
    return expect_poly(cumulative_polynomial(make_sumset_system(std::vector<std::vector<std::int64_t>>{{1}}), {{0}}, {}),
                       "Y + 1");
  });
  add("ideal count: I = N^2, cumulative gives 1/2*Y^2 + 3/2*Y + 1", [] {
    const auto sys = make_ideal_system(2, {}, Partition::trivial(2));
    return expect_poly(cumulative_polynomial(sys, ideal_seed(2), {}), "1/2*Y^2 + 3/2*Y + 1");
  });
  add("ideal count: u1 <= 1 gives H = 2 and H* = 2*Y + 1", [] {
    const auto sys = make_ideal_system(2, {MultiIndex{2, 0}}, Partition::trivial(2));
    const std::string e = expect_poly(dimension_polynomial(sys, ideal_seed(2), {}), "2");
    return e.empty() ? expect_poly(cumulative_polynomial(sys, ideal_seed(2), {}), "2*Y + 1") : e;
  });
  add("difference sets: A = B = {0}, shifts {0,1} with context = system gives 0", [] {
    const auto sys = make_sumset_system(std::vector<std::vector<std::int64_t>>{{0, 1}});
    return expect_poly(context_dimension_polynomial(sys, sys, {{0}}, {{0}}), "0");
  });
  add("shift graph: graded ranks 2, 3, 2, 3, ...", [] {
    const auto g = make_counterexample_graph();
    for (std::uint32_t t = 0; t <= 10; ++t) {
      const auto r = rank(g.matroid(), graded_orbit(g, counterexample_seeds(), MultiIndex{t}));
      if (r != (t % 2 == 0 ? 2u : 3u)) return "rank " + std::to_string(r) + " at t = " + std::to_string(t);
    }
    return std::string();
  });
  add("shift graph: cumulative polynomial is 2*Y + 2", [] {
    return expect_poly(cumulative_polynomial(make_counterexample_graph(), counterexample_seeds(), {}), "2*Y + 2");
  });

  // Closure ranks.
  add("x+1, x+1 with one part: closure rank 0", [] {
    const OperatorSystem<TrivialMatroid> both(TrivialMatroid(1), {translation({1}), translation({1})},
                                              Partition::trivial(2));
    return expect_eq(phi_rank(both, {{0}}, {}, false).rank, Integer(0), "rank");
  });
  add("x+1, x+1 with two parts: closure rank 1", [] {
    const OperatorSystem<TrivialMatroid> both(TrivialMatroid(1), {translation({1}), translation({1})},
                                              Partition::singletons(2));
    return expect_eq(phi_rank(both, {{0}}, {}, false).rank, Integer(1), "rank");
  });
  add("K[x], A = {1}: augmented closure rank 1", [] {
    return expect_eq(phi_rank(polynomial_ring(1), {basis_vector({0, 0})}, {}, true).rank, Integer(1), "rank");
  });
  add("closure membership: a in B at degree 0; 0 over nothing is certified not a member", [] {
    const auto sys = make_sumset_system(std::vector<std::vector<std::int64_t>>{{1}});
    const bool ok = phi_closure_member(sys, IntVec{3}, {{3}}).verdict == ClosureVerdict::member &&
                    phi_closure_member(sys, IntVec{0}, {}).verdict == ClosureVerdict::not_member;
    return expect_eq(ok, true, "verdicts");
  });

  // Betti numbers.
  add("betti: a 4-cycle with the identity has b0 = b1 = 1", [] {
    ChainSystem chain = make_chain_system(SimplicialComplex::full(), {VertexMap{"id", [](std::int64_t v) { return v; }}},
                                          Partition::trivial(1));
    const std::vector<Simplex> cycle{{0, 1}, {1, 2}, {2, 3}, {0, 3}};
    const auto b0 = betti_polynomials(chain, cycle, 0, OrbitMode::graded);
    const auto b1 = betti_polynomials(chain, cycle, 1, OrbitMode::graded);
    return expect_eq(to_string(b0.betti.polynomial) + " " + to_string(b1.betti.polynomial), std::string("1 1"), "b0 b1");
  });
  add("betti: path on Z, shift, one edge, cumulative: b0 = 1, b1 = 0", [] {
    ChainSystem chain = make_chain_system(SimplicialComplex::integer_path(),
                                          {VertexMap{"shift", [](std::int64_t v) { return v + 1; }}},
                                          Partition::trivial(1));
    const auto b0 = betti_polynomials(chain, {{0, 1}}, 0, OrbitMode::cumulative);
    const auto b1 = betti_polynomials(chain, {{0, 1}}, 1, OrbitMode::cumulative);
    return expect_eq(to_string(b0.betti.polynomial) + " " + to_string(b1.betti.polynomial), std::string("1 0"), "b0 b1");
  });
  add("betti: translating a triangle far away each step, graded: b0 = 1", [] {
    ChainSystem chain = make_chain_system(SimplicialComplex::full(),
                                          {VertexMap{"far", [](std::int64_t v) { return v + 10; }}},
                                          Partition::trivial(1));
    return expect_eq(to_string(betti_polynomials(chain, {{0, 1, 2}}, 0, OrbitMode::graded).betti.polynomial),
                     std::string("1"), "b0");
  });

  // Circuit matroids.
  add("circuits: empty family is free; 2-subsets give rank 1; 3-subsets give rank 2", [] {
    const std::vector<MultiIndex> s{{2, 0}, {1, 1}, {0, 2}};
    const CircuitMatroid free(2, Partition::trivial(2), {});
    const CircuitMatroid one(2, Partition::trivial(2), {}, DegreeRule::uniform(1));
    const CircuitMatroid two(2, Partition::trivial(2),
                             {{MultiIndex{2}, DegreeRule::explicit_family({{{2, 0}, {1, 1}, {0, 2}}})}});
    return expect_eq(std::to_string(rank(free, s)) + std::to_string(rank(one, s)) + std::to_string(rank(two, s)),
                     std::string("312"), "ranks");
  });

  // Problem files.
  add("run: sumset {0,1} exits 0 with Y + 1 and threshold (0)", [] {
    const RunOutcome out =
        run_problem_text(R"({"backend":"trivial","mode":"sumset","backend_data":{"sets":[[0,1]]},"A":[0]})");
    if (out.exit_code != kCertified) return "exit " + std::to_string(out.exit_code);
    return expect_eq(out.document["result"]["polynomial"]["text"].get<std::string>() +
                         out.document["result"]["threshold"].dump(),
                     std::string("Y + 1[0]"), "result");
  });
  add("run: shift graph in dimension mode exits 3", [] {
    return cli_expect(R"({"backend":"graphic","backend_data":"counterexample","mode":"dimension"})", kHypothesisFailure);
  });
  add("run: shift graph in cumulative mode exits 0", [] {
    return cli_expect(R"({"backend":"graphic","backend_data":"counterexample","mode":"cumulative"})", kCertified,
                      "2*Y + 2");
  });
  return items;
}

inline std::vector<SelfcheckResult> run_selfcheck() {
  std::vector<SelfcheckResult> out;
  for (const auto& item : selfcheck_corpus()) {
    SelfcheckResult r{item.name, false, ""};
    try {
      r.detail = item.run();
      r.passed = r.detail.empty();
    } catch (const std::exception& e) {
      r.detail = std::string("threw: ") + e.what();
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace rankgrowth::io

#endif  // RANKGROWTH_IO_SELFCHECK_HPP
