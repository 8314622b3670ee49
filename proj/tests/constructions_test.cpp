// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scissors/scissors.hpp"

namespace scissors {
namespace {

TEST(Coproduct, TagsAndCounts) {
  Coproduct w = coproduct({preorder5(), finite_sets(2)}, {"p", "s"});
  const auto& c = w.result.cat();
  EXPECT_EQ(c.object_count(), 1u + 4u + 3u);
  EXPECT_TRUE(c.find_object("p:D").has_value());
  EXPECT_TRUE(c.find_object("s:{1,2}").has_value());
  EXPECT_EQ(w.result.name(w.result.initial()), kInitialName);
  Budget budget;
  EXPECT_TRUE(check_axioms(w.result, budget).all_hold());
  for (const auto& inj : w.injections) EXPECT_TRUE(check_assembler_morphism(inj, budget).ok());
}

TEST(Coproduct, K0IsDirectSum) {
  Budget budget;
  std::vector<Assembler> parts{preorder5(), sphere_group(cyclic_group(2)), open_sets(sierpinski_space())};
  Coproduct w = coproduct(parts);
  std::size_t rank = 0;
  for (const auto& p : parts) rank += k0(p, budget).rank();
  EXPECT_EQ(k0(w.result, budget).group(), (AbelianGroup{rank, {}}));
  EXPECT_EQ(k0(w.result, budget).group(), oracle::k0(w.result));
}

TEST(Coproduct, CrossSummandMorphismsAreDisjoint) {
  Coproduct w = coproduct({finite_sets(1), finite_sets(1)});
  const auto& c = w.result.cat();
  EXPECT_TRUE(c.hom(c.object("1:{1}"), c.object("2:{1}")).empty());
}

TEST(Product, CoversIffBothProjectionsCover) {
  Budget budget;
  Assembler a = finite_sets(1);
  Assembler b = finite_sets(2);
  Product p = product(a, b, budget);
  const Assembler& r = p.result;
  EXPECT_TRUE(check_axioms(r, budget).all_hold());
  EXPECT_TRUE(check_assembler_morphism(p.first_projection, budget).ok());
  EXPECT_TRUE(check_assembler_morphism(p.second_projection, budget).ok());
  CoverageEngine engine(r);
  for (ObjIdx z : r.noninitial_objects()) {
    auto pool = r.noninitial_incoming(z);
    const std::size_t n = pool.size();
    ASSERT_LE(n, 14u);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      std::vector<MorIdx> fam, fa, fb;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1)) continue;
        fam.push_back(pool[i]);
        fa.push_back(p.first_projection.map(pool[i]));
        fb.push_back(p.second_projection.map(pool[i]));
      }
      bool expected = oracle::covers(a, p.first_projection(z), fa) &&
                      oracle::covers(b, p.second_projection(z), fb);
      EXPECT_EQ(engine.covers(make_family(z, fam)), expected) << describe(r, make_family(z, fam));
    }
  }
}

TEST(Smash, CopiesPerLabel) {
  Coproduct s = smash_with_pointed_set(3, preorder5());
  EXPECT_EQ(s.result.cat().object_count(), 1u + 3u * 4u);
  EXPECT_EQ(s.injections.size(), 3u);
  Coproduct none = smash_with_pointed_set(0, preorder5());
  EXPECT_EQ(none.result.cat().object_count(), 1u);
}

TEST(Sieve, PreorderLowerSet) {
  Assembler p = preorder5();
  EXPECT_TRUE(is_sieve(p, preorder5_sieve(p)).valid());
  SieveWitness bad = is_sieve(p, object_set(p, {"0", "B"}));
  EXPECT_FALSE(bad.valid());
  EXPECT_NE(bad.closure_violations.front().find("A"), std::string::npos);
  EXPECT_THROW(object_set(p, {"Q"}), InvalidInput);
}

TEST(Quotient, CoverageIsCompletion) {
  for (const auto& [c, d] : {std::pair{preorder5(), preorder5_sieve(preorder5())},
                             std::pair{finite_sets(2), finite_sets_points(finite_sets(2))}}) {
    Quotient q = quotient(c, d);
    CoverageEngine in_c(c), in_q(q.result);
    for (ObjIdx z : q.result.noninitial_objects()) {
      ObjIdx zc = c.cat().object(q.result.name(z));
      auto pool = q.result.noninitial_incoming(z);
      for (std::uint32_t mask = 0; mask < (1u << pool.size()); ++mask) {
        std::vector<MorIdx> fq, fc;
        for (std::size_t i = 0; i < pool.size(); ++i) {
          if (!(mask >> i & 1)) continue;
          fq.push_back(pool[i]);
          fc.push_back(c.cat().morphism_index(q.result.mor_name(pool[i])));
        }
        EXPECT_EQ(in_q.covers(make_family(z, fq)), completes_to_cover(c, d, make_family(zc, fc), in_c))
            << describe(q.result, make_family(z, fq));
      }
    }
  }
}

TEST(Quotient, PreorderQuotient) {
  Assembler p = preorder5();
  Quotient q = quotient(p, preorder5_sieve(p));
  EXPECT_EQ(q.result.noninitial_objects().size(), 3u);
  Budget budget;
  EXPECT_EQ(k0(q.result, budget).group(), (AbelianGroup{2, {}}));
  EXPECT_EQ(oracle::k0(q.result), (AbelianGroup{2, {}}));
  EXPECT_TRUE(check_assembler_morphism(q.projection, budget).ok());
  EXPECT_EQ(q.projection(p.cat().object("A")), q.result.initial());
}

TEST(Quotient, RejectsNonSieve) {
  Assembler p = preorder5();
  EXPECT_THROW(quotient(p, object_set(p, {"0", "B"})), HypothesisFailure);
}

TEST(Complements, IntervalPointsHaveComplements) {
  Assembler iv = intervals(1, 2, IntervalVariant::kTotal);
  Budget budget;
  for (ObjIdx x : interval_points(iv)) {
    if (x == iv.initial()) continue;
    ComplementReport r = has_complements(iv, x, budget);
    EXPECT_TRUE(r.holds) << iv.name(x);
    for (const auto& [f, fam] : r.witnesses) {
      EXPECT_TRUE(std::count(fam.members.begin(), fam.members.end(), f));
      EXPECT_TRUE(oracle::disjoint_covering(iv, fam.target, fam.members));
    }
  }
}

TEST(Complements, PreorderWitness) {
  Assembler p = preorder5();
  Budget budget;
  ComplementReport r = has_complements(p, p.cat().object("A"), budget);
  EXPECT_FALSE(r.holds);
  std::vector<std::string> names;
  for (MorIdx f : r.failures) names.push_back(p.mor_name(f));
  EXPECT_NE(std::find(names.begin(), names.end(), "A<B"), names.end());
}

TEST(Subassembler, PointsOfFiniteSets) {
  Assembler s = finite_sets(3);
  Subassembler pts = full_subassembler(s, finite_sets_points(s));
  EXPECT_EQ(pts.sub.cat().object_count(), 4u);
  Budget budget;
  EXPECT_TRUE(is_subassembler(pts, budget).holds());
}

TEST(Morphisms, IdentityAndComposition) {
  Assembler p = preorder5();
  Quotient q = quotient(p, preorder5_sieve(p));
  AssemblerMorphism id = identity_morphism(p);
  AssemblerMorphism comp = compose_morphisms(id, q.projection);
  EXPECT_EQ(comp.object_map, q.projection.object_map);
  EXPECT_EQ(comp.morphism_map, q.projection.morphism_map);
  Budget budget;
  EXPECT_TRUE(check_assembler_morphism(id, budget).ok());
}

TEST(Morphisms, NonFunctorIsRejected) {
  Assembler p = preorder5();
  // Swapping B and C on objects while keeping morphisms fixed breaks sources.
  AssemblerMorphism m = identity_morphism(p);
  std::swap(m.object_map[p.cat().object("B")], m.object_map[p.cat().object("C")]);
  Budget budget;
  EXPECT_FALSE(check_assembler_morphism(m, budget).ok());
}

}  // namespace
}  // namespace scissors
