// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "scissors/constructions.hpp"

namespace scissors {

/// A tuple of noninitial objects indexed by {0..k-1}.
struct WObject {
  std::vector<ObjIdx> entries;
  std::size_t size() const { return entries.size(); }
  friend auto operator<=>(const WObject&, const WObject&) = default;
};

/// index_map[i] is the target index of source entry i; components[i] its
/// morphism.
struct WMorphism {
  std::vector<std::uint32_t> index_map;
  std::vector<MorIdx> components;
  friend auto operator<=>(const WMorphism&, const WMorphism&) = default;
};

/// A truncation of W(C) or W(C, D) to tuples of length at most max_tuple.
///
/// In the relative case, objects are tuples of objects outside the sieve D
/// and a family of fibers is admissible when it extends, by morphisms with
/// domains in D, to a finite disjoint covering family of C. With D = {∅}
/// this is W(C). Hom-sets are computed on demand and cached; the cache is
/// guarded, so concurrent readers are safe.
class WCategory {
 public:
  WCategory(Assembler c, std::size_t max_tuple, Budget* budget = nullptr);
  WCategory(Assembler c, ObjectSet d, std::size_t max_tuple, Budget* budget = nullptr);

  WCategory(const WCategory&) = delete;
  WCategory& operator=(const WCategory&) = delete;

  const Assembler& assembler() const { return c_; }
  const ObjectSet& sieve() const { return d_; }
  std::size_t max_tuple() const { return max_tuple_; }

  /// All objects, by length then lexicographically.
  const std::vector<WObject>& objects() const { return objects_; }
  std::optional<std::size_t> index_of(const WObject& a) const;

  /// Complete hom-set, in canonical order.
  const std::vector<WMorphism>& hom(std::size_t a, std::size_t b) const;
  /// Whether a candidate is a morphism a -> b.
  bool is_morphism(const WObject& a, const WObject& b, const WMorphism& f) const;

  WMorphism identity(std::size_t a) const;
  /// second ∘ first.
  WMorphism compose(const WMorphism& first, const WMorphism& second) const;

  std::string describe(const WObject& a) const;
  std::string describe(const WMorphism& f) const;

 private:
  bool admissible_fiber(ObjIdx target, std::vector<MorIdx> fiber) const;

  Assembler c_;
  ObjectSet d_;
  std::size_t max_tuple_;
  Budget* budget_;
  std::vector<WObject> objects_;
  std::map<WObject, std::size_t> index_;
  mutable std::mutex mutex_;
  mutable std::map<std::pair<std::size_t, std::size_t>, std::vector<WMorphism>> homs_;
  mutable std::map<std::pair<ObjIdx, std::vector<MorIdx>>, bool> fibers_;
  mutable std::optional<CoverageEngine> engine_;
};

enum class Verdict { kHolds, kFails, kInconclusive };
const char* to_string(Verdict v);

struct WPropertiesReport {
  Verdict monomorphisms = Verdict::kHolds;
  Verdict squares = Verdict::kHolds;
  std::size_t morphisms_checked = 0;
  std::size_t cospans_checked = 0;
  std::vector<std::string> failures;  // witnesses for kFails / kInconclusive
};

/// Monomorphy of every morphism and completion of every cospan to a
/// commutative square, within the truncation.
WPropertiesReport check_w_properties(const WCategory& w, Budget& budget);

struct DecompositionReport {
  bool holds = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> mismatches;
};

/// For W of a wedge: |Hom(a, b)| equals the product over summands of the
/// hom counts between the summand parts (the parts read off through the
/// injections, in order).
DecompositionReport check_coproduct_decomposition(const WCategory& wedge, const Coproduct& cop,
                                                  const std::vector<const WCategory*>& summands);

/// A finite preorder: leq[i][j] iff i ≤ j.
struct Preorder {
  std::vector<std::string> names;
  std::vector<std::vector<bool>> leq;
};

/// Every pair has a common lower bound (and the preorder is nonempty).
bool is_cofiltered(const Preorder& p);

struct CommaCategory {
  Preorder order;
  std::vector<std::pair<std::size_t, WMorphism>> objects;  // (source object, morphism to y)
  bool is_preorder = true;  // at most one morphism between two objects
};

CommaCategory comma_over(const WCategory& w, std::size_t y);

/// kHolds when cofiltered, kInconclusive otherwise (a larger truncation may
/// supply the missing lower bounds).
Verdict comma_cofiltered(const CommaCategory& comma);

struct Components {
  std::vector<std::size_t> component_of;  // per object
  std::vector<std::size_t> representatives;
};

/// Connected components of the truncation (zigzags of morphisms).
Components pi0_wcat(const WCategory& w);

}  // namespace scissors
