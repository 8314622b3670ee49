// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "oracles.hpp"
#include "scissors/scissors.hpp"

namespace scissors {
namespace {

struct Case {
  std::string label;
  Assembler a;
};

std::vector<Case> small_fixtures() {
  return {
      {"trivial", trivial_assembler()},
      {"S_Z2", sphere_group(cyclic_group(2))},
      {"S_S3", sphere_group(symmetric_group3())},
      {"finite_sets(2)", finite_sets(2)},
      {"sierpinski", open_sets(sierpinski_space())},
      {"discrete3", open_sets(discrete_space(3))},
      {"preorder5", preorder5()},
      {"poset_sink", poset_sink()},
      {"intervals(1,1,total)", intervals(1, 1, IntervalVariant::kTotal)},
      {"intervals(2,1,classical)", intervals(2, 1, IntervalVariant::kClassical)},
  };
}

std::vector<MorIdx> into(const Assembler& a, ObjIdx x) {
  auto span = a.noninitial_incoming(x);
  return {span.begin(), span.end()};
}

// Every subset of `pool` with at most `k` members.
void for_each_subset(const std::vector<MorIdx>& pool, std::size_t k,
                     const std::function<void(const std::vector<MorIdx>&)>& fn) {
  std::vector<MorIdx> cur;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    fn(cur);
    if (cur.size() == k) return;
    for (std::size_t i = from; i < pool.size(); ++i) {
      cur.push_back(pool[i]);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

TEST(Coverage, AgreesWithNaiveFixpoint) {
  for (const auto& [label, a] : small_fixtures()) {
    CoverageEngine engine(a);
    for (ObjIdx x = 0; x < a.cat().object_count(); ++x) {
      for_each_subset(into(a, x), 3, [&](const std::vector<MorIdx>& fam) {
        EXPECT_EQ(engine.covers(make_family(x, fam)), oracle::covers(a, x, fam))
            << label << ": " << describe(a, make_family(x, fam));
      });
    }
  }
}

TEST(Coverage, BasicRules) {
  Assembler p = preorder5();
  const auto& c = p.cat();
  ObjIdx d = c.object("D");
  EXPECT_TRUE(is_covering_family(p, make_family(d, {c.identity(d)})));
  EXPECT_FALSE(is_covering_family(p, make_family(d, {})));
  EXPECT_TRUE(is_covering_family(p, make_family(p.initial(), {})));
  EXPECT_TRUE(is_covering_family(p, make_family(d, {c.morphism_index("B<D"), c.morphism_index("C<D")})));
  EXPECT_FALSE(is_covering_family(p, make_family(d, {c.morphism_index("B<D")})));
  EXPECT_FALSE(is_covering_family(p, make_family(d, {c.morphism_index("A<D"), c.morphism_index("B<D")})));
}

TEST(Disjointness, AgreesWithBruteForce) {
  for (const auto& [label, a] : small_fixtures()) {
    const auto& c = a.cat();
    for (MorIdx f = 0; f < c.morphism_count(); ++f) {
      for (MorIdx g = 0; g < c.morphism_count(); ++g) {
        if (c.tgt(f) != c.tgt(g)) continue;
        EXPECT_EQ(are_disjoint(a, f, g), oracle::disjoint(a, f, g))
            << label << ": " << a.mor_name(f) << ", " << a.mor_name(g);
      }
    }
  }
}

TEST(Disjointness, PreorderLegsMeetInA) {
  Assembler p = preorder5();
  const auto& c = p.cat();
  EXPECT_FALSE(are_disjoint(p, c.morphism_index("B<D"), c.morphism_index("C<D")));
  EXPECT_FALSE(is_disjoint_family(p, make_family(c.object("D"), {c.morphism_index("B<D"),
                                                                 c.morphism_index("C<D")})));
}

TEST(Enumeration, FamiliesMatchBruteForce) {
  for (const auto& [label, a] : small_fixtures()) {
    for (ObjIdx x = 0; x < a.cat().object_count(); ++x) {
      Budget budget;
      std::set<std::vector<MorIdx>> got;
      for (const auto& f : enumerate_disjoint_covering_families(a, x, budget)) got.insert(f.members);
      auto expected_list = oracle::disjoint_covering_families(a, x);
      std::set<std::vector<MorIdx>> expected(expected_list.begin(), expected_list.end());
      EXPECT_EQ(got, expected) << label << " object " << a.name(x);
    }
  }
}

TEST(Enumeration, SubobjectFamiliesAreRepresentatives) {
  for (const auto& [label, a] : small_fixtures()) {
    for (ObjIdx x = 0; x < a.cat().object_count(); ++x) {
      Budget budget;
      std::set<std::vector<MorIdx>> got;
      for (const auto& f : enumerate_disjoint_covering_subobjects(a, x, budget)) got.insert(f.members);
      std::set<std::vector<MorIdx>> expected;
      for (auto fam : oracle::disjoint_covering_families(a, x)) {
        for (auto& f : fam) f = a.subobject_rep(f);
        std::sort(fam.begin(), fam.end());
        expected.insert(fam);
      }
      EXPECT_EQ(got, expected) << label << " object " << a.name(x);
    }
  }
}

TEST(Enumeration, FiniteSetsThreeCoverCount) {
  // Set partitions of {1,2,3}; a block of size k is the image of one of
  // C(3,k)·k! injections. 6 + 3·(6·3) + 3·3·3 = 87.
  Assembler s = finite_sets(3);
  ObjIdx top = s.cat().object("{1,2,3}");
  Budget budget;
  auto fams = enumerate_disjoint_covering_families(s, top, budget);
  EXPECT_EQ(fams.size(), 87u);
  EXPECT_EQ(oracle::disjoint_covering_families(s, top, 3).size(), 87u);
  for (const auto& f : fams) EXPECT_TRUE(oracle::disjoint_covering(s, top, f.members));
}

TEST(Axioms, HoldOnFixtures) {
  for (const auto& [label, a] : small_fixtures()) {
    Budget budget;
    AxiomReport r = check_axioms(a, budget);
    EXPECT_TRUE(r.all_hold()) << label;
    EXPECT_EQ(r.holds_R, oracle::refinement_axiom(a)) << label;
  }
  Budget budget;
  EXPECT_TRUE(check_axioms(finite_sets(3), budget).all_hold());
}

TEST(Axioms, RefinementFailureIsReported) {
  AssemblerBuilder b("0");
  for (const char* x : {"B", "C", "D"}) b.add_object(x);
  b.add_morphism("B<D", "B", "D");
  b.add_morphism("C<D", "C", "D");
  b.add_cover("D", {"B<D"});
  b.add_cover("D", {"C<D"});
  Assembler a = b.build();
  Budget budget;
  AxiomReport r = check_axioms(a, budget);
  EXPECT_FALSE(r.holds_R);
  EXPECT_FALSE(r.refinement_failures.empty());
  EXPECT_FALSE(oracle::refinement_axiom(a));
  EXPECT_TRUE(r.holds_M);
  EXPECT_TRUE(r.holds_I);
}

TEST(Axioms, MonomorphismFailureIsReported) {
  AssemblerBuilder b("0");
  for (const char* x : {"X", "Y", "Z"}) b.add_object(x);
  b.add_morphism("g", "X", "Y");
  b.add_morphism("h", "X", "Y");
  b.add_morphism("f", "Y", "Z");
  b.add_morphism("k", "X", "Z");
  b.set_composite("g", "f", "k");
  b.set_composite("h", "f", "k");
  Budget budget;
  AxiomReport r = check_axioms(b.build(), budget);
  EXPECT_FALSE(r.holds_M);
  ASSERT_FALSE(r.mono_violations.empty());
}

TEST(Axioms, NonInitialObjectIsReported) {
  CategoryBuilder b;
  b.add_object("0");
  b.add_object("X");
  FiniteCategory c = b.build();
  Assembler a(c, c.object("0"), {});
  Budget budget;
  AxiomReport r = check_axioms(a, budget);
  EXPECT_FALSE(r.initial_ok);
  EXPECT_FALSE(r.initial_violations.empty());
}

TEST(Refinement, CommonRefinementFactorsThroughBoth) {
  Assembler s = finite_sets(3);
  ObjIdx top = s.cat().object("{1,2,3}");
  Budget budget;
  auto fams = enumerate_disjoint_covering_subobjects(s, top, budget);
  ASSERT_GT(fams.size(), 4u);
  for (std::size_t i = 0; i < fams.size(); i += 3) {
    for (std::size_t j = 0; j < fams.size(); j += 5) {
      auto r = common_refinement(s, fams[i], fams[j], budget);
      ASSERT_TRUE(r.has_value());
      EXPECT_TRUE(oracle::disjoint_covering(s, top, r->family.members));
      for (const auto& w : r->witnesses) {
        EXPECT_EQ(s.cat().compose(w.factor_first, w.through_first), w.member);
        EXPECT_EQ(s.cat().compose(w.factor_second, w.through_second), w.member);
      }
    }
  }
}

TEST(Refinement, RejectsNonCovers) {
  Assembler p = preorder5();
  const auto& c = p.cat();
  ObjIdx d = c.object("D");
  Budget budget;
  EXPECT_THROW(common_refinement(p, make_family(d, {c.morphism_index("B<D")}),
                                 make_family(d, {c.identity(d)}), budget),
               InvalidInput);
}

TEST(Refinement, FactorThrough) {
  Assembler p = preorder5();
  const auto& c = p.cat();
  std::vector<MorIdx> fam{c.morphism_index("B<D")};
  auto hit = factor_through(p, c.morphism_index("A<D"), fam);
  ASSERT_TRUE(hit.has_value());
  EXPECT_EQ(hit->first, c.morphism_index("B<D"));
  EXPECT_EQ(hit->second, c.morphism_index("A<B"));
  EXPECT_FALSE(factor_through(p, c.morphism_index("C<D"), fam).has_value());
}

TEST(Budget, ExhaustionThrows) {
  Budget tiny(10);
  EXPECT_THROW(enumerate_disjoint_covering_families(finite_sets(3), finite_sets(3).cat().object("{1,2,3}"), tiny),
               BudgetExceeded);
}

}  // namespace
}  // namespace scissors
