// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scissors/scissors.hpp"

namespace scissors {
namespace {

TEST(SinkConditions, SphereGroupsSatisfyAll) {
  for (const auto& g : {trivial_group(), cyclic_group(2), symmetric_group3()}) {
    Assembler a = sphere_group(g);
    Budget budget;
    SinkConditions c = check_sink_conditions(a, budget);
    EXPECT_TRUE(c.all());
    ASSERT_TRUE(c.sink.has_value());
    EXPECT_EQ(a.name(*c.sink), "*");
  }
}

TEST(SinkConditions, PreorderIsNotEpimorphic) {
  Assembler p = preorder5();
  Budget budget;
  SinkConditions c = check_sink_conditions(p, budget);
  EXPECT_FALSE(c.ep);
  bool named = false;
  for (const auto& v : c.violations) named = named || v.starts_with("(Ep)");
  EXPECT_TRUE(named);
  EXPECT_THROW(sink_group(p, budget), HypothesisFailure);
}

TEST(SinkGroup, RecoversTheGroup) {
  for (const auto& g : {trivial_group(), cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
    Assembler a = sphere_group(g);
    Budget budget;
    SinkGroup sg = sink_group(a, budget);
    EXPECT_EQ(sg.order(), g.order());
    EXPECT_TRUE(oracle::group_axioms(sg.table));
    EXPECT_TRUE(find_group_isomorphism(sg.table, g).has_value());
    for (std::size_t x = 0; x < sg.order(); ++x) {
      EXPECT_EQ(sg.table.mul[x][sg.inverse[x]], 0u);
    }
    const auto& c = a.cat();
    ObjIdx star = c.object("*");
    EXPECT_EQ(sg.element_of(Span{star, c.identity(star), c.identity(star)}), 0u);
  }
}

TEST(SinkGroup, IsomorphismSearchRejectsDifferentGroups) {
  EXPECT_FALSE(find_group_isomorphism(cyclic_group(2), cyclic_group(3)).has_value());
  EXPECT_FALSE(find_group_isomorphism(cyclic_group(6), symmetric_group3()).has_value());
  auto iso = find_group_isomorphism(cyclic_group(3), cyclic_group(3));
  ASSERT_TRUE(iso.has_value());
  EXPECT_EQ((*iso)[0], 0u);
}

TEST(SinkGroup, PosetSinkIsTrivial) {
  Budget budget;
  SinkGroup sg = sink_group(poset_sink(), budget);
  EXPECT_EQ(sg.order(), 1u);
  EXPECT_EQ(sg.assembler.name(sg.sink), "S");
}

TEST(SinkGroup, ProjectionIsAnAssemblerMorphism) {
  for (const auto& a : {sphere_group(symmetric_group3()), poset_sink(), sphere_group(cyclic_group(2))}) {
    Budget budget;
    SinkGroup sg = sink_group(a, budget);
    Assembler sphere = sink_sphere(sg);
    EXPECT_TRUE(validate_category(sphere.cat()).ok());
    AssemblerMorphism pi = sink_projection(sg, default_sink_family(sg), sphere);
    EXPECT_TRUE(check_assembler_morphism(pi, budget).ok());
    K0Group ka = k0(a, budget);
    K0Group ks = k0(sphere, budget);
    EXPECT_TRUE(k0_map(pi, ka, ks).is_iso());
  }
}

TEST(SinkGroup, DescribeSpan) {
  Assembler a = sphere_group(cyclic_group(2));
  Budget budget;
  SinkGroup sg = sink_group(a, budget);
  const auto& c = a.cat();
  ObjIdx star = c.object("*");
  EXPECT_EQ(sg.describe(Span{star, c.identity(star), c.identity(star)}), "[*,id:*,id:*]");
}

TEST(SinkGroup, ConjugationByIdentity) {
  Assembler a = sphere_group(symmetric_group3());
  Budget budget;
  SinkGroup sg = sink_group(a, budget);
  SinkFamily f = default_sink_family(sg);
  std::vector<MorIdx> phi(a.cat().object_count());
  for (ObjIdx x = 0; x < a.cat().object_count(); ++x) phi[x] = a.cat().identity(x);
  ConjugationReport r = verify_sink_family_conjugation(sg, f, f, identity_morphism(a), phi);
  EXPECT_TRUE(r.hypothesis);
  EXPECT_TRUE(r.holds);
}

TEST(SinkGroup, RestrictionToAnObject) {
  Assembler a = poset_sink();
  Budget budget;
  SinkGroup sg = sink_group(a, budget);
  RestrictionReport r = restrict_to_object(sg, a.cat().object("A"), budget);
  EXPECT_TRUE(r.holds()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_EQ(r.restricted.sub.noninitial_objects().size(), 2u);
  ASSERT_TRUE(r.group_u.has_value());
  EXPECT_EQ(r.group_u->order(), 1u);
}

}  // namespace
}  // namespace scissors
