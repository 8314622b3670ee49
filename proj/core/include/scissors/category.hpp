// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace scissors {

using ObjIdx = std::uint32_t;
using MorIdx = std::uint32_t;
inline constexpr std::uint32_t kNoIndex = 0xffffffffu;

struct MorphismInfo {
  std::string id;
  ObjIdx src = 0;
  ObjIdx tgt = 0;
};

/// A finite category given by an explicit composition table.
///
/// Objects and morphisms are indexed in lexicographic order of their ids, so
/// index order is the canonical order used by every report. The table may be
/// incomplete or inconsistent; validate_category() says so. All derived
/// tables are read-only after construction.
class FiniteCategory {
 public:
  FiniteCategory() = default;

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }

  const std::string& object_name(ObjIdx a) const { return objects_[a]; }
  const std::vector<std::string>& object_names() const { return objects_; }
  const MorphismInfo& morphism(MorIdx f) const { return morphisms_[f]; }
  const std::string& morphism_name(MorIdx f) const { return morphisms_[f].id; }
  ObjIdx src(MorIdx f) const { return morphisms_[f].src; }
  ObjIdx tgt(MorIdx f) const { return morphisms_[f].tgt; }

  std::optional<ObjIdx> find_object(std::string_view name) const;
  std::optional<MorIdx> find_morphism(std::string_view id) const;
  /// Throwing lookups (InvalidInput on unknown ids).
  ObjIdx object(std::string_view name) const;
  MorIdx morphism_index(std::string_view id) const;

  MorIdx identity(ObjIdx a) const { return identities_[a]; }
  bool is_identity(MorIdx f) const { return identities_[src(f)] == f; }

  /// `second ∘ first`, when the table defines it.
  std::optional<MorIdx> compose(MorIdx first, MorIdx second) const;
  /// As compose(), throwing InvalidInput when undefined.
  MorIdx compose_checked(MorIdx first, MorIdx second) const;

  /// Morphisms with target `a` (sorted by index).
  std::span<const MorIdx> incoming(ObjIdx a) const { return incoming_[a]; }
  /// Morphisms with source `a` (sorted by index).
  std::span<const MorIdx> outgoing(ObjIdx a) const { return outgoing_[a]; }
  std::span<const MorIdx> hom(ObjIdx a, ObjIdx b) const;

  /// Position of `f` inside incoming(tgt(f)).
  std::uint32_t local_index(MorIdx f) const { return local_index_[f]; }

  /// For f: X -> Y, entry k is the position in incoming(Y) of f ∘ incoming(X)[k]
  /// (kNoIndex where the table has no entry).
  std::span<const std::uint32_t> postcompose_table(MorIdx f) const {
    return postcompose_[f];
  }

  struct CompositeEntry {
    MorIdx first;
    MorIdx second;
    MorIdx result;
  };
  /// Every entry of the table, sorted by (first, second).
  const std::vector<CompositeEntry>& composition_entries() const { return entries_; }

 private:
  friend class CategoryBuilder;
  static std::uint64_t key(MorIdx first, MorIdx second) {
    return (static_cast<std::uint64_t>(first) << 32) | second;
  }
  void index();

  std::vector<std::string> objects_;
  std::vector<MorphismInfo> morphisms_;
  std::vector<MorIdx> identities_;
  std::unordered_map<std::string, ObjIdx> object_lookup_;
  std::unordered_map<std::string, MorIdx> morphism_lookup_;
  std::unordered_map<std::uint64_t, MorIdx> table_;
  std::vector<CompositeEntry> entries_;
  std::vector<std::vector<MorIdx>> incoming_;
  std::vector<std::vector<MorIdx>> outgoing_;
  std::unordered_map<std::uint64_t, std::vector<MorIdx>> homs_;
  std::vector<std::uint32_t> local_index_;
  std::vector<std::vector<std::uint32_t>> postcompose_;
};

/// Accumulates named cells and composites, then freezes them
/// into a FiniteCategory. Identities ("id:<obj>") and their composites are
/// generated automatically.
class CategoryBuilder {
 public:
  static std::string identity_id(std::string_view object) {
    return "id:" + std::string(object);
  }

  void add_object(std::string name);
  void add_morphism(std::string id, std::string_view src, std::string_view tgt);
  /// Records `second ∘ first = result`.
  void set_composite(std::string_view first, std::string_view second,
                     std::string_view result);

  bool has_object(std::string_view name) const;
  bool has_morphism(std::string_view id) const;
  const std::string& source_of(std::string_view id) const;
  const std::string& target_of(std::string_view id) const;

  /// Throws InvalidInput on duplicate or dangling ids.
  FiniteCategory build() const;

 private:
  struct Mor {
    std::string id;
    std::string src;
    std::string tgt;
  };
  struct Composite {
    std::string first;
    std::string second;
    std::string result;
  };
  std::vector<std::string> objects_;
  std::unordered_map<std::string, std::size_t> object_pos_;
  std::vector<Mor> morphisms_;
  std::unordered_map<std::string, std::size_t> morphism_pos_;
  std::vector<Composite> composites_;
};

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

/// Every violated category law, with the offending pair or triple named.
ValidationReport validate_category(const FiniteCategory& cat);

/// f is monic iff postcomposition with f is injective on every hom-set.
bool is_monomorphism(const FiniteCategory& cat, MorIdx f);

/// Returns a witness pair (g, h) with f∘g = f∘h and g ≠ h, if any.
std::optional<std::pair<MorIdx, MorIdx>> monomorphism_violation(
    const FiniteCategory& cat, MorIdx f);

bool is_epimorphism(const FiniteCategory& cat, MorIdx f);

bool is_isomorphism(const FiniteCategory& cat, MorIdx f);

struct PullbackCone {
  ObjIdx apex = 0;
  MorIdx leg_left = 0;   // apex -> src(f)
  MorIdx leg_right = 0;  // apex -> src(g)
  struct Mediation {
    ObjIdx apex;
    MorIdx leg_left;
    MorIdx leg_right;
    MorIdx mediating;  // cone apex -> pullback apex
  };
  std::vector<Mediation> mediating;
};

/// Terminal cone over the cospan f, g (exhaustive). Throws InvalidInput if
/// tgt(f) != tgt(g).
std::optional<PullbackCone> pullback(const FiniteCategory& cat, MorIdx f, MorIdx g);

}  // namespace scissors
