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

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "rankgrowth.hpp"

namespace rankgrowth {
namespace {

std::vector<IntVec> ints(std::initializer_list<std::int64_t> xs) {
  std::vector<IntVec> out;
  for (auto x : xs) out.push_back({x});
  return out;
}

SparseVector vec(std::initializer_list<std::int64_t> coords) {
  SparseVector v;
  std::int64_t i = 0;
  for (auto c : coords) {
    if (c != 0) v.emplace(IntVec{i}, Rational(c));
    ++i;
  }
  return v;
}

TEST(Rational, FractionStringsKeepDenominator) {
  EXPECT_EQ(to_fraction_string(Rational(3)), "3/1");
  EXPECT_EQ(to_fraction_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_display_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_display_string(Rational(3, 2)), "3/2");
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0/1", "7/1", "-5/3", "12345678901234567890123/7"}) {
    EXPECT_EQ(to_fraction_string(parse_rational(s)), s);
  }
  EXPECT_EQ(parse_rational("4/6"), Rational(2, 3));
  EXPECT_EQ(parse_rational("-9"), Rational(-9));
}

TEST(Rational, ParseRejectsGarbage) {
  for (const char* s : {"", "1.5", "1/0", "a/2", "3/-4", "/", "1/"}) {
    EXPECT_THROW(parse_rational(s), InputError) << s;
  }
}

TEST(Rational, BinomialAndFactorial) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(60, 30), Integer("118264581564861424"));
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(20), Integer("2432902008176640000"));
}

TEST(MultiIndex, LexEmphasisOnLastCoordinate) {
  EXPECT_EQ(lex_compare(MultiIndex{1, 0}, MultiIndex{0, 1}), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(MultiIndex{0, 0}, MultiIndex{0, 0}), std::strong_ordering::equal);
  EXPECT_EQ(lex_compare(MultiIndex{5, 1}, MultiIndex{0, 2}), std::strong_ordering::less);
  EXPECT_EQ(lex_compare(MultiIndex{0, 2}, MultiIndex{5, 1}), std::strong_ordering::greater);
  EXPECT_THROW(lex_compare(MultiIndex{1}, MultiIndex{1, 0}), InputError);
}

TEST(MultiIndex, ProductOrderAndArithmetic) {
  EXPECT_TRUE(precedes(MultiIndex{1, 2}, MultiIndex{1, 3}));
  EXPECT_FALSE(precedes(MultiIndex{2, 0}, MultiIndex{1, 3}));
  EXPECT_EQ(MultiIndex({1, 2}) + MultiIndex({3, 4}), MultiIndex({4, 6}));
  EXPECT_EQ(join(MultiIndex{1, 5}, MultiIndex{3, 2}), MultiIndex({3, 5}));
  EXPECT_EQ(unit_index(1, 3), MultiIndex({0, 1, 0}));
  EXPECT_EQ(MultiIndex({2, 0, 1}).total_degree(), 3u);
  EXPECT_EQ(to_string(MultiIndex{4, 0}), "(4,0)");
}

TEST(MultiIndex, LexIsATotalOrderExtendingProductOrder) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::uint32_t> d(0, 3);
  for (int t = 0; t < 500; ++t) {
    const MultiIndex a{d(rng), d(rng), d(rng)}, b{d(rng), d(rng), d(rng)};
    if (precedes(a, b) && a != b) {
      EXPECT_TRUE(lex_less(a, b)) << a << " " << b;
    }
    EXPECT_EQ(lex_less(a, b) + lex_less(b, a) + (a == b), 1);
  }
}

TEST(Partition, DegreesAndLayout) {
  const Partition p({2, 1});
  EXPECT_EQ(part_degree(MultiIndex{2, 0, 1}, p), MultiIndex({2, 1}));
  EXPECT_EQ(part_degree(MultiIndex{0, 0, 0}, p), MultiIndex({0, 0}));
  EXPECT_EQ(part_degree(MultiIndex{3, 4, 5}, Partition::trivial(3)), MultiIndex({12}));
  EXPECT_EQ(p.arity(), 3u);
  EXPECT_EQ(p.parts(), 2u);
  EXPECT_EQ(p.offset_of(1), 2u);
  EXPECT_EQ(p.part_of(1), 0u);
  EXPECT_THROW(part_degree(MultiIndex{1, 2}, p), InputError);
  EXPECT_THROW(Partition({2, 0}), InputError);
}

TEST(Words, CountsMatchClosedForm) {
  EXPECT_EQ(word_count(Partition({1}), MultiIndex{9}, OrbitMode::graded), 1);
  EXPECT_EQ(word_count(Partition({2}), MultiIndex{3}, OrbitMode::graded), 4);
  EXPECT_EQ(word_count(Partition({1, 1}), MultiIndex{2, 3}, OrbitMode::cumulative), 12);
  const Partition p({2, 3});
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) {
      const auto words = words_of_part_degree(p, MultiIndex{a, b});
      EXPECT_EQ(Integer(words.size()), word_count(p, MultiIndex{a, b}, OrbitMode::graded));
      EXPECT_TRUE(std::is_sorted(words.begin(), words.end(), lex_less));
      for (const auto& w : words) EXPECT_EQ(part_degree(w, p), MultiIndex({a, b}));
    }
  }
}

TEST(Words, BoxVisitsPredecessorsFirst) {
  std::set<MultiIndex> seen;
  std::size_t count = 0;
  for_each_in_box(MultiIndex{2, 1, 3}, [&](const MultiIndex& u) {
    ++count;
    for (std::size_t j = 0; j < u.size(); ++j) {
      if (u[j] == 0) continue;
      MultiIndex p = u;
      --p[j];
      EXPECT_TRUE(seen.contains(p));
    }
    seen.insert(u);
  });
  EXPECT_EQ(count, 3u * 2u * 4u);
}

TEST(Polynomial, ArithmeticAndPrinting) {
  const Polynomial y1 = Polynomial::variable(2, 0), y2 = Polynomial::variable(2, 1);
  const Polynomial one = Polynomial::constant(2, 1);
  const Polynomial p = (y1 + one) * (y2 + one);
  EXPECT_EQ(to_string(p), "Y1*Y2 + Y1 + Y2 + 1");
  EXPECT_EQ(p.evaluate(MultiIndex{2, 3}), Rational(12));
  Polynomial q(1);
  q.add_term(MultiIndex{2}, Rational(1, 2));
  q.add_term(MultiIndex{1}, Rational(3, 2));
  q.add_term(MultiIndex{0}, 1);
  EXPECT_EQ(to_string(q), "1/2*Y^2 + 3/2*Y + 1");
  EXPECT_EQ(to_string(q - q), "0");
  EXPECT_EQ(to_string(q * Rational(-2)), "-Y^2 - 3*Y - 2");
}

TEST(Polynomial, BinomialPolynomialsAgreeWithBinomials) {
  for (std::int64_t shift = -2; shift <= 2; ++shift) {
    for (std::uint32_t e = 0; e <= 3; ++e) {
      const Polynomial b = binomial_polynomial(shift, e, 0, 1);
      for (std::uint32_t y = 3; y < 10; ++y) {
        EXPECT_EQ(b.evaluate(MultiIndex{y}), Rational(binomial(y + shift, e)));
      }
    }
  }
}

TEST(Polynomial, DominantTerms) {
  Polynomial p(2);
  p.add_term(MultiIndex{2, 1}, 1);
  p.add_term(MultiIndex{1, 2}, 1);
  p.add_term(MultiIndex{1, 1}, 1);
  const auto d = dominant_terms(p);
  ASSERT_EQ(d.size(), 2u);
  std::set<MultiIndex> exps{d[0].first, d[1].first};
  EXPECT_EQ(exps, (std::set<MultiIndex>{MultiIndex{2, 1}, MultiIndex{1, 2}}));

  Polynomial u(1);
  u.add_term(MultiIndex{2}, 3);
  u.add_term(MultiIndex{1}, 1);
  ASSERT_EQ(dominant_terms(u).size(), 1u);
  EXPECT_EQ(dominant_terms(u)[0].second, Rational(3));

  const auto c = dominant_terms(Polynomial::constant(3, 5));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_EQ(c[0].second, Rational(5));
  EXPECT_TRUE(dominant_terms(Polynomial(2)).empty());
}

TEST(Matroid, RankExamples) {
  EXPECT_EQ(rank(TrivialMatroid(1), ints({7, 9, 7})), 2u);
  EXPECT_EQ(rank(LinearMatroid(), std::vector<SparseVector>{vec({1, 0}), vec({0, 1}), vec({1, 1})}), 2u);
  EXPECT_EQ(rank(GraphicMatroid(), std::vector<Edge>{Edge::make(0, 1), Edge::make(1, 2), Edge::make(2, 0)}), 2u);
  EXPECT_EQ(rank(TrivialMatroid(1), std::vector<IntVec>{}), 0u);
  EXPECT_THROW(rank(TrivialMatroid(2), ints({1})), InputError);
}

TEST(Matroid, RelativeRankExamples) {
  EXPECT_EQ(relative_rank(TrivialMatroid(1), ints({1, 2}), ints({2, 3})), 1u);
  EXPECT_EQ(relative_rank(LinearMatroid(), std::vector<SparseVector>{vec({1, 1})},
                          std::vector<SparseVector>{vec({1, 0}), vec({0, 1})}),
            0u);
  EXPECT_EQ(relative_rank(GraphicMatroid(), std::vector<Edge>{}, std::vector<Edge>{Edge::make(0, 1)}), 0u);
  EXPECT_TRUE(in_closure(LinearMatroid(), vec({2, 2}), {vec({1, 1})}));
  EXPECT_FALSE(is_independent(TrivialMatroid(1), ints({4, 4})));
}

TEST(Matroid, Localization) {
  const auto loc = localize(TrivialMatroid(1), ints({5}));
  EXPECT_EQ(rank(loc, ints({5, 6})), 1u);
  const auto none = localize(LinearMatroid(), {});
  EXPECT_EQ(rank(none, std::vector<SparseVector>{vec({1, 2}), vec({2, 4})}), 1u);

  // Spanning tree of the component {0,1,2,3}: every edge inside it has rank 0.
  const auto tree = localize(GraphicMatroid(), {Edge::make(0, 1), Edge::make(1, 2), Edge::make(2, 3)});
  for (const auto& e : {Edge::make(0, 3), Edge::make(1, 3), Edge::make(0, 2, 7)}) {
    EXPECT_EQ(rank(tree, std::vector<Edge>{e}), 0u);
  }
  EXPECT_EQ(rank(tree, std::vector<Edge>{Edge::make(3, 4)}), 1u);
}

TEST(Matroid, LocalizationComposes) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::int64_t> v(0, 6);
  auto random_edges = [&](int n) {
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i) out.push_back(Edge::make(v(rng), v(rng)));
    return out;
  };
  for (int t = 0; t < 100; ++t) {
    const auto c1 = random_edges(3), c2 = random_edges(3), s = random_edges(4);
    std::vector<Edge> both = c1;
    both.insert(both.end(), c2.begin(), c2.end());
    const auto twice = localize(localize(GraphicMatroid(), c1), c2);
    EXPECT_EQ(rank(twice, s), rank(localize(GraphicMatroid(), both), s));
  }
}

TEST(Matroid, ExtendBasis) {
  const auto b = extend_basis(LinearMatroid(), {}, {vec({1, 0}), vec({2, 0}), vec({0, 1})});
  EXPECT_EQ(b, (std::vector<SparseVector>{vec({1, 0}), vec({0, 1})}));
  EXPECT_EQ(extend_basis(LinearMatroid(), {vec({1, 0})}, {}), (std::vector<SparseVector>{vec({1, 0})}));
  EXPECT_EQ(extend_basis(TrivialMatroid(1), ints({1, 2}), ints({2, 3, 3, 4})), ints({1, 2, 3, 4}));
  EXPECT_THROW(extend_basis(LinearMatroid(), {vec({1, 0}), vec({3, 0})}, {}), ContractError);
}

TEST(Matroid, RelativeRankIsBasisExtensionSize) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<std::int64_t> c(-1, 1);
  auto random_vectors = [&](int n) {
    std::vector<SparseVector> out;
    for (int i = 0; i < n; ++i) out.push_back(vec({c(rng), c(rng), c(rng), c(rng)}));
    return out;
  };
  const LinearMatroid m;
  for (int t = 0; t < 200; ++t) {
    const auto a = random_vectors(3), b = random_vectors(3);
    const auto basis_b = extend_basis(m, {}, b);
    const auto basis_ab = extend_basis(m, basis_b, a);
    EXPECT_EQ(relative_rank(m, a, b), basis_ab.size() - basis_b.size());
  }
}

TEST(Matroid, SteinitzExchangePattern) {
  std::mt19937 rng(8);
  std::uniform_int_distribution<std::int64_t> c(-1, 1);
  const LinearMatroid m;
  int exercised = 0;
  for (int t = 0; t < 2000; ++t) {
    std::vector<SparseVector> base;
    for (int i = 0; i < 2; ++i) base.push_back(vec({c(rng), c(rng), c(rng)}));
    const SparseVector a = vec({c(rng), c(rng), c(rng)}), b = vec({c(rng), c(rng), c(rng)});
    auto with = [&](std::initializer_list<SparseVector> extra) {
      auto s = base;
      s.insert(s.end(), extra.begin(), extra.end());
      return rank(m, s);
    };
    const std::size_t r = rank(m, base);
    // a ∈ cl(B ∪ {b}) \ cl(B) implies b ∈ cl(B ∪ {a}).
    if (with({a}) == r + 1 && with({a, b}) == with({b})) {
      ++exercised;
      EXPECT_EQ(with({a, b}), with({a}));
    }
  }
  EXPECT_GT(exercised, 0);
}

TEST(Axioms, EveryBackendPassesRandomChecks) {
  std::vector<IntVec> ints_pool;
  for (std::int64_t i = 0; i < 12; ++i) ints_pool.push_back({i % 7});
  EXPECT_TRUE(check_rank_axioms(TrivialMatroid(1), ints_pool, 300, 1).ok());

  std::mt19937 rng(2);
  std::uniform_int_distribution<std::int64_t> c(-2, 2), v(0, 6);
  std::vector<SparseVector> vecs;
  for (int i = 0; i < 10; ++i) vecs.push_back(vec({c(rng), c(rng), c(rng), c(rng)}));
  EXPECT_TRUE(check_rank_axioms(LinearMatroid(), vecs, 300, 2).ok());

  std::vector<Edge> edges;
  for (int i = 0; i < 12; ++i) edges.push_back(Edge::make(v(rng), v(rng), i));
  EXPECT_TRUE(check_rank_axioms(GraphicMatroid(), edges, 300, 3).ok());
}

}  // namespace
}  // namespace rankgrowth
