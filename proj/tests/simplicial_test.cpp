// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scissors/scissors.hpp"

namespace scissors {
namespace {

constexpr std::size_t kDepth = 3;

SimplicialMorphism constant_inclusion(const Assembler& sub, const Assembler& ambient) {
  return constant_morphism(inclusion_by_name(sub, ambient), kDepth);
}

TEST(Circle, PointedSetIdentities) {
  // d_i d_j = d_{j-1} d_i (i < j), s_i s_j = s_{j+1} s_i (i ≤ j) and the
  // mixed relations, on every cell of (S¹)_n.
  for (std::size_t n = 2; n <= 5; ++n) {
    for (std::size_t x = 0; x <= n; ++x) {
      for (std::size_t j = 1; j <= n; ++j) {
        for (std::size_t i = 0; i < j; ++i) {
          EXPECT_EQ(circle_face(n - 1, i, circle_face(n, j, x)),
                    circle_face(n - 1, j - 1, circle_face(n, i, x)));
        }
      }
    }
  }
  for (std::size_t n = 0; n <= 4; ++n) {
    for (std::size_t x = 0; x <= n; ++x) {
      for (std::size_t j = 0; j <= n; ++j) {
        for (std::size_t i = 0; i <= j; ++i) {
          EXPECT_EQ(circle_degeneracy(i, circle_degeneracy(j, x)),
                    circle_degeneracy(j + 1, circle_degeneracy(i, x)));
        }
        for (std::size_t i = 0; i <= n + 1; ++i) {
          std::size_t lhs = circle_face(n + 1, i, circle_degeneracy(j, x));
          if (i == j || i == j + 1) {
            EXPECT_EQ(lhs, x);
          } else if (i < j) {
            EXPECT_EQ(lhs, circle_degeneracy(j - 1, circle_face(n, i, x)));
          } else {
            EXPECT_EQ(lhs, circle_degeneracy(j, circle_face(n, i - 1, x)));
          }
        }
      }
    }
  }
}

TEST(Circle, BasepointIsFixed) {
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t i = 0; i <= n; ++i) EXPECT_EQ(circle_face(n, i, 0), 0u);
  }
  EXPECT_EQ(circle_face(1, 0, 1), 0u);
  EXPECT_EQ(circle_face(1, 1, 1), 0u);
}

TEST(Simplicial, ConstantObject) {
  Assembler p = preorder5();
  SimplicialAssembler x = constant_simplicial(p, kDepth);
  EXPECT_EQ(x.depth(), kDepth);
  EXPECT_TRUE(simplicial_identities_check(x).holds);
  Budget budget;
  EXPECT_TRUE(check_structure_maps(x, budget).holds);
  EXPECT_EQ(k0_simplicial(x, budget).group(), k0(p, budget).group());
}

TEST(Simplicial, CircleSmashHasTrivialK0) {
  SimplicialAssembler s = circle_smash(constant_simplicial(finite_sets(2), kDepth), kDepth);
  EXPECT_TRUE(simplicial_identities_check(s).holds);
  EXPECT_EQ(s.levels[2].noninitial_objects().size(), 2u * 3u);
  Budget budget;
  EXPECT_TRUE(k0_simplicial(s, budget).group().trivial());
}

TEST(Cofiber, PreorderMatchesCokernel) {
  Assembler p = preorder5();
  Subassembler d = full_subassembler(p, preorder5_sieve(p));
  Budget budget;
  Cofiber cf = cofiber(constant_simplicial(d.sub, kDepth), constant_simplicial(p, kDepth),
                       constant_inclusion(d.sub, p), kDepth);
  EXPECT_TRUE(simplicial_identities_check(cf.result).holds);
  EXPECT_TRUE(check_structure_maps(cf.result, budget).holds);
  EXPECT_TRUE(check_simplicial_morphism(cf.inclusion, constant_simplicial(p, kDepth), cf.result, budget).holds);
  EXPECT_TRUE(check_simplicial_morphism(cf.projection, cf.result, cf.circle, budget).holds);

  K0Group kc = k0(p, budget);
  K0Group kd = k0(d.sub, budget);
  K0Hom h = k0_map(d.inclusion, kd, kc);
  K0Group kcof = k0_simplicial(cf.result, budget);
  EXPECT_EQ(kcof.group(), h.cokernel);
  // Independent value: Z^4 on A, B, C, D modulo the row for A.
  EXPECT_EQ(kcof.group(), oracle::presented_group({{1, 0, 0, 0}}, 4));
}

TEST(Cofiber, IdentityHasTrivialCofiber) {
  Assembler p = preorder5();
  Subassembler d = full_subassembler(p, preorder5_sieve(p));
  SimplicialAssembler dd = constant_simplicial(d.sub, kDepth);
  Cofiber cf = cofiber(dd, dd, constant_morphism(identity_morphism(d.sub), kDepth), kDepth);
  Budget budget;
  EXPECT_TRUE(k0_simplicial(cf.result, budget).group().trivial());
  EXPECT_EQ(cf.result.levels[2].noninitial_objects().size(), 3u);
}

TEST(Cofiber, DevissageInclusionHasTrivialCofiber) {
  Assembler s = finite_sets(3);
  Subassembler pts = full_subassembler(s, finite_sets_points(s));
  Cofiber cf = cofiber(constant_simplicial(pts.sub, kDepth), constant_simplicial(s, kDepth),
                       constant_inclusion(pts.sub, s), kDepth);
  Budget budget;
  EXPECT_TRUE(k0_simplicial(cf.result, budget).group().trivial());
}

TEST(Cofiber, LevelsAreWedges) {
  Assembler p = preorder5();
  Subassembler d = full_subassembler(p, preorder5_sieve(p));
  Cofiber cf = cofiber(constant_simplicial(d.sub, kDepth), constant_simplicial(p, kDepth),
                       constant_inclusion(d.sub, p), kDepth);
  for (std::size_t n = 0; n <= kDepth; ++n) {
    EXPECT_EQ(cf.result.levels[n].noninitial_objects().size(), 4u + n * 1u);
  }
  EXPECT_TRUE(cf.result.levels[1].cat().find_object("C:D").has_value());
  EXPECT_TRUE(cf.result.levels[1].cat().find_object("1:A").has_value());
}

TEST(Simplicial, SameMap) {
  Assembler p = preorder5();
  EXPECT_TRUE(same_map(identity_morphism(p), identity_morphism(p)));
  Quotient q = quotient(p, preorder5_sieve(p));
  EXPECT_TRUE(same_map(q.projection, compose_morphisms(identity_morphism(p), q.projection)));
}

}  // namespace
}  // namespace scissors
