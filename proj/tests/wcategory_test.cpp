// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "scissors/scissors.hpp"

namespace scissors {
namespace {

// Library hom counts laid out in the oracle's object order.
std::vector<std::vector<std::size_t>> hom_counts(const WCategory& w, const Assembler& a,
                                                 std::size_t max_tuple) {
  auto objs = oracle::w_objects(a, max_tuple);
  std::vector<std::vector<std::size_t>> h(objs.size(), std::vector<std::size_t>(objs.size()));
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      auto x = w.index_of(WObject{objs[i]});
      auto y = w.index_of(WObject{objs[j]});
      h[i][j] = w.hom(*x, *y).size();
    }
  }
  return h;
}

TEST(WCategory, EndomorphismsOfPowersOfAPoint) {
  Assembler s1 = sphere_group(trivial_group());
  WCategory w(s1, 3);
  ObjIdx star = s1.cat().object("*");
  std::size_t factorial = 1;
  for (std::size_t k = 0; k <= 3; ++k) {
    if (k > 0) factorial *= k;
    auto x = w.index_of(WObject{std::vector<ObjIdx>(k, star)});
    ASSERT_TRUE(x.has_value());
    EXPECT_EQ(w.hom(*x, *x).size(), factorial);
  }
}

TEST(WCategory, HomSetsMatchEnumeration) {
  struct Case {
    Assembler a;
    std::size_t max_tuple;
  };
  for (const auto& [a, s] : {Case{sphere_group(cyclic_group(2)), 3}, Case{finite_sets(2), 2},
                             Case{preorder5(), 2}, Case{poset_sink(), 2},
                             Case{open_sets(sierpinski_space()), 2}}) {
    WCategory w(a, s);
    EXPECT_EQ(w.objects().size(), oracle::w_objects(a, s).size());
    auto expected = oracle::w_hom_matrix(a, s);
    EXPECT_EQ(hom_counts(w, a, s), expected);
    EXPECT_EQ(pi0_wcat(w).representatives.size(), oracle::component_count(expected));
  }
}

TEST(WCategory, ObjectsOrderedByLength) {
  WCategory w(finite_sets(2), 2);
  const auto& objs = w.objects();
  EXPECT_TRUE(objs.front().entries.empty());
  for (std::size_t i = 1; i < objs.size(); ++i) {
    EXPECT_TRUE(objs[i - 1].size() < objs[i].size() ||
                (objs[i - 1].size() == objs[i].size() && objs[i - 1] < objs[i]));
  }
}

TEST(WCategory, CompositionIsAssociativeAndUnital) {
  WCategory w(finite_sets(2), 2);
  const std::size_t n = w.objects().size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& f : w.hom(a, b)) {
        EXPECT_EQ(w.compose(w.identity(a), f), f);
        EXPECT_EQ(w.compose(f, w.identity(b)), f);
        for (std::size_t c = 0; c < n; ++c) {
          for (const auto& g : w.hom(b, c)) {
            WMorphism gf = w.compose(f, g);
            EXPECT_TRUE(w.is_morphism(w.objects()[a], w.objects()[c], gf));
            for (std::size_t d = 0; d < n; ++d) {
              for (const auto& h : w.hom(c, d)) {
                EXPECT_EQ(w.compose(gf, h), w.compose(f, w.compose(g, h)));
              }
            }
          }
        }
      }
    }
  }
}

TEST(WCategory, PropertiesHold) {
  Budget budget;
  WCategory s1(sphere_group(trivial_group()), 3);
  WPropertiesReport r = check_w_properties(s1, budget);
  EXPECT_EQ(r.monomorphisms, Verdict::kHolds);
  EXPECT_EQ(r.squares, Verdict::kHolds);
  EXPECT_GT(r.cospans_checked, 0u);
  WCategory sets(finite_sets(2), 2);
  EXPECT_EQ(check_w_properties(sets, budget).monomorphisms, Verdict::kHolds);
}

TEST(WCategory, WedgeDecomposition) {
  Assembler s1 = sphere_group(trivial_group());
  Coproduct wedge = coproduct({s1, s1});
  WCategory w(wedge.result, 3);
  WCategory part(s1, 3);
  DecompositionReport r = check_coproduct_decomposition(w, wedge, {&part, &part});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.pairs_checked, w.objects().size() * w.objects().size());
}

TEST(WCategory, RelativeVersusQuotient) {
  Assembler p = preorder5();
  ObjectSet d = preorder5_sieve(p);
  Quotient q = quotient(p, d);
  WCategory relative(p, d, 3);
  WCategory absolute(q.result, 3);
  auto length_changing = [](const WCategory& w) {
    std::size_t count = 0;
    for (std::size_t a = 0; a < w.objects().size(); ++a) {
      for (std::size_t b = 0; b < w.objects().size(); ++b) {
        if (w.objects()[a].size() != w.objects()[b].size()) count += w.hom(a, b).size();
      }
    }
    return count;
  };
  EXPECT_EQ(length_changing(relative), 0u);
  EXPECT_GT(length_changing(absolute), 0u);
  const auto& qc = q.result.cat();
  auto bc = absolute.index_of(WObject{{qc.object("B"), qc.object("C")}});
  auto dd = absolute.index_of(WObject{{qc.object("D")}});
  ASSERT_TRUE(bc && dd);
  EXPECT_EQ(absolute.hom(*bc, *dd).size(), 1u);
  EXPECT_EQ(absolute.describe(absolute.objects()[*bc]), "(B, C)");
}

TEST(WCategory, RejectsNonMorphisms) {
  Assembler s = finite_sets(2);
  WCategory w(s, 2);
  const auto& c = s.cat();
  WObject one{{c.object("{1}")}};
  WObject top{{c.object("{1,2}")}};
  // A single point does not cover a two-element set.
  WMorphism f{{0}, {c.hom(c.object("{1}"), c.object("{1,2}")).front()}};
  EXPECT_FALSE(w.is_morphism(one, top, f));
  WMorphism wrong_index{{1}, {c.identity(c.object("{1}"))}};
  EXPECT_FALSE(w.is_morphism(one, one, wrong_index));
}

TEST(WCategory, CofilteredPreorder) {
  Preorder chain{{"a", "b"}, {{true, true}, {false, true}}};
  EXPECT_TRUE(is_cofiltered(chain));
  Preorder two{{"a", "b"}, {{true, false}, {false, true}}};
  EXPECT_FALSE(is_cofiltered(two));
  EXPECT_FALSE(is_cofiltered(Preorder{}));
}

TEST(WCategory, CommaOverPoint) {
  Assembler s1 = sphere_group(trivial_group());
  WCategory w(s1, 2);
  auto star = w.index_of(WObject{{s1.cat().object("*")}});
  CommaCategory comma = comma_over(w, *star);
  EXPECT_TRUE(comma.is_preorder);
  EXPECT_EQ(comma_cofiltered(comma), Verdict::kHolds);
}

TEST(WCategory, VerdictText) {
  EXPECT_STREQ(to_string(Verdict::kHolds), "holds");
  EXPECT_STREQ(to_string(Verdict::kFails), "fails");
  EXPECT_STREQ(to_string(Verdict::kInconclusive), "inconclusive at bound");
}

}  // namespace
}  // namespace scissors
