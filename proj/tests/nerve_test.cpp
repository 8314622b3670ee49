// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scissors/scissors.hpp"

namespace scissors {
namespace {

// Δ¹/∂Δ¹ up to degree d, from the pointed-set structure maps.
TruncatedSimplicialSet circle_set(std::size_t d) {
  TruncatedSimplicialSet x;
  x.faces.resize(d + 1);
  x.degeneracies.resize(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    x.counts.push_back(n + 1);
    for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
      std::vector<std::uint32_t> t;
      for (std::size_t e = 0; e <= n; ++e) t.push_back(static_cast<std::uint32_t>(circle_face(n, i, e)));
      x.faces[n].push_back(t);
    }
    for (std::size_t i = 0; n < d && i <= n; ++i) {
      std::vector<std::uint32_t> t;
      for (std::size_t e = 0; e <= n; ++e) t.push_back(static_cast<std::uint32_t>(circle_degeneracy(i, e)));
      x.degeneracies[n].push_back(t);
    }
  }
  return x;
}

TEST(Homology, Circle) {
  TruncatedSimplicialSet s = circle_set(3);
  EXPECT_TRUE(check_simplicial_set(s).holds);
  ChainComplex c = normalized_chains(s);
  EXPECT_EQ(c.ranks, (std::vector<std::size_t>{1, 1, 0, 0}));
  EXPECT_TRUE(boundary_squared_zero(c));
  EXPECT_EQ(homology(s, 0), (AbelianGroup{1, {}}));
  EXPECT_EQ(homology(s, 1), (AbelianGroup{1, {}}));
  EXPECT_EQ(homology(s, 2), AbelianGroup{});
  EXPECT_EQ(homology(s, 1), oracle::homology(s, 1));
  EXPECT_EQ(homology(s, 2), oracle::homology(s, 2));
  EXPECT_THROW(homology(s, 3), InvalidInput);
}

TEST(Nerve, CountsMatchHomPowers) {
  for (const auto& a : {sphere_group(cyclic_group(2)), finite_sets(2), preorder5(), poset_sink()}) {
    Budget budget;
    WCategory w(a, 2, &budget);
    TruncatedSimplicialSet n = truncated_nerve(w, 3, budget);
    auto h = oracle::w_hom_matrix(a, 2);
    for (std::size_t k = 0; k <= 3; ++k) EXPECT_EQ(n.counts[k], oracle::chain_count(h, k));
    EXPECT_TRUE(check_simplicial_set(n).holds);
    EXPECT_TRUE(boundary_squared_zero(normalized_chains(n)));
    EXPECT_EQ(homology(n, 0), (AbelianGroup{oracle::component_count(h), {}}));
    EXPECT_EQ(homology(n, 0).rank, pi0_wcat(w).representatives.size());
  }
}

TEST(Nerve, NormalizedAgreesWithUnnormalized) {
  for (const auto& a : {sphere_group(cyclic_group(2)), preorder5()}) {
    Budget budget;
    WCategory w(a, 2, &budget);
    TruncatedSimplicialSet n = truncated_nerve(w, 3, budget);
    for (std::size_t i = 0; i <= 2; ++i) EXPECT_EQ(homology(n, i), oracle::homology(n, i));
  }
}

TEST(LevelSpace, CountsMatchTupleCombinatorics) {
  for (const auto& a : {sphere_group(trivial_group()), finite_sets(2), open_sets(sierpinski_space())}) {
    const std::size_t d = 2, s = 2;
    Budget budget;
    TruncatedSimplicialSet x = diagonal_level_space(a, 1, d, s, budget);
    auto objs = oracle::w_objects(a, s);
    auto h = oracle::w_hom_matrix(a, s);
    for (std::size_t n = 1; n <= d; ++n) {
      // chains[len] = n-chains whose first object has that length
      std::vector<std::uint64_t> chains(s + 1, 0);
      for (std::size_t o = 0; o < objs.size(); ++o) {
        std::vector<std::uint64_t> v(objs.size(), 0);
        v[o] = 1;
        for (std::size_t step = 0; step < n; ++step) {
          std::vector<std::uint64_t> next(objs.size(), 0);
          for (std::size_t i = 0; i < objs.size(); ++i) {
            for (std::size_t j = 0; j < objs.size(); ++j) next[j] += v[i] * h[i][j];
          }
          v = next;
        }
        for (auto c : v) chains[objs[o].size()] += c;
      }
      // n copies with total length ≤ s
      std::vector<std::uint64_t> ways(s + 1, 0);
      ways[0] = 1;
      for (std::size_t copy = 0; copy < n; ++copy) {
        std::vector<std::uint64_t> next(s + 1, 0);
        for (std::size_t used = 0; used <= s; ++used) {
          for (std::size_t len = 0; used + len <= s; ++len) next[used + len] += ways[used] * chains[len];
        }
        ways = next;
      }
      std::uint64_t total = 0;
      for (auto w : ways) total += w;
      EXPECT_EQ(x.counts[n], total) << "degree " << n;
    }
    EXPECT_EQ(x.counts[0], 1u);
    EXPECT_TRUE(check_simplicial_set(x).holds);
    EXPECT_TRUE(boundary_squared_zero(normalized_chains(x)));
    EXPECT_EQ(homology(x, 0), (AbelianGroup{1, {}}));
    EXPECT_EQ(homology(x, 1), oracle::homology(x, 1));
  }
}

TEST(LevelSpace, LevelZeroIsTheNerve) {
  Assembler a = finite_sets(2);
  Budget budget;
  WCategory w(a, 2, &budget);
  TruncatedSimplicialSet n = truncated_nerve(w, 2, budget);
  TruncatedSimplicialSet l0 = diagonal_level_space(a, 0, 2, 2, budget);
  EXPECT_EQ(n.counts, l0.counts);
  EXPECT_THROW(diagonal_level_space(a, 2, 2, 2, budget), InvalidInput);
}

// Measured at (d, s) = (2, 2); recorded so that regressions show up.
TEST(LevelSpace, FirstHomologyOfSmallFixtures) {
  Budget budget;
  EXPECT_EQ(homology(diagonal_level_space(sphere_group(cyclic_group(2)), 1, 2, 2, budget), 1),
            (AbelianGroup{1, {}}));
  EXPECT_EQ(homology(diagonal_level_space(open_sets(sierpinski_space()), 1, 2, 2, budget), 1),
            (AbelianGroup{2, {}}));
  EXPECT_EQ(homology(diagonal_level_space(trivial_assembler(), 1, 2, 2, budget), 1), AbelianGroup{});
}

TEST(LevelSpace, BudgetIsRespected) {
  Budget tiny(1000);
  EXPECT_THROW(diagonal_level_space(finite_sets(3), 1, 2, 2, tiny), BudgetExceeded);
}

}  // namespace
}  // namespace scissors
