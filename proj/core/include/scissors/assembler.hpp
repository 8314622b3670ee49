// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <boost/dynamic_bitset.hpp>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "scissors/budget.hpp"
#include "scissors/category.hpp"

namespace scissors {

/// A sieve on an object A, stored as a bitset over cat.incoming(A).
using Sieve = boost::dynamic_bitset<std::uint64_t>;

/// A finite set of morphisms into a common target. Members are kept sorted
/// and distinct.
struct CoverFamily {
  ObjIdx target = 0;
  std::vector<MorIdx> members;

  friend bool operator==(const CoverFamily&, const CoverFamily&) = default;
  friend auto operator<=>(const CoverFamily&, const CoverFamily&) = default;
};

/// Sorts and deduplicates members.
CoverFamily make_family(ObjIdx target, std::vector<MorIdx> members);

/// A finite category with an initial object and a coverage. The topology is
/// the saturation of the declared families under:
///   (a) {id_A} covers A;  (b) {u} covers for every isomorphism u;
///   (c) refining every member of a cover by a cover of its domain;
///   (d) sieve-level superset: F covers if every member of some cover
///       factors through a member of F;  (e) the empty family covers ∅.
///
/// Values are immutable and cheap to copy.
class Assembler {
 public:
  /// Throws InvalidInput if the category fails validation or a declared
  /// family is malformed. Axioms I/R/M are checked by check_axioms().
  Assembler(FiniteCategory cat, ObjIdx initial, std::vector<CoverFamily> declared);

  const FiniteCategory& cat() const { return impl_->cat; }
  ObjIdx initial() const { return impl_->initial; }
  bool is_initial(ObjIdx a) const { return a == impl_->initial; }
  const std::vector<CoverFamily>& declared_covers() const { return impl_->declared; }

  /// Noninitial objects in index order.
  const std::vector<ObjIdx>& noninitial_objects() const { return impl_->noninitial; }
  const std::string& name(ObjIdx a) const { return cat().object_name(a); }
  const std::string& mor_name(MorIdx f) const { return cat().morphism_name(f); }

  bool is_iso(MorIdx f) const { return impl_->iso[f]; }
  /// Isomorphisms with target `a`.
  std::span<const MorIdx> isos_into(ObjIdx a) const { return impl_->isos_into[a]; }
  /// Some isomorphism a -> b, if a ≅ b.
  std::optional<MorIdx> find_iso(ObjIdx a, ObjIdx b) const;
  /// Dense id of the isomorphism class of an object.
  std::uint32_t iso_class(ObjIdx a) const { return impl_->iso_class[a]; }

  /// Principal sieve of f inside incoming(tgt f).
  const Sieve& principal_sieve(MorIdx f) const { return impl_->principal[f]; }
  const Sieve& noninitial_mask(ObjIdx a) const { return impl_->noninit_mask[a]; }
  const Sieve& iso_mask(ObjIdx a) const { return impl_->iso_mask[a]; }
  Sieve empty_sieve(ObjIdx a) const { return Sieve(cat().incoming(a).size()); }
  Sieve sieve_of(ObjIdx target, std::span<const MorIdx> family) const;
  /// d^*S for d: X -> A and a sieve S on A.
  Sieve pullback_sieve(MorIdx d, const Sieve& s) const;

  /// Canonical representative of the subobject of f (least index among
  /// f∘φ, φ iso).
  MorIdx subobject_rep(MorIdx f) const { return impl_->rep[f]; }
  /// Subobject representatives into `a` with noninitial domain.
  std::span<const MorIdx> subobjects(ObjIdx a) const { return impl_->subobjects[a]; }
  /// Representatives of subobjects of `a` whose domain has no proper
  /// noninitial subobject.
  std::span<const MorIdx> atoms(ObjIdx a) const { return impl_->atoms[a]; }
  /// Morphisms into `a` with noninitial domain.
  std::span<const MorIdx> noninitial_incoming(ObjIdx a) const {
    return impl_->noninit_incoming[a];
  }
  /// Generating families used by the saturation: declared covers
  /// transported along isomorphisms, without isomorphic or initial members.
  const std::vector<std::vector<MorIdx>>& effective_covers(ObjIdx a) const {
    return impl_->effective[a];
  }

 private:
  struct Impl {
    FiniteCategory cat;
    ObjIdx initial = 0;
    std::vector<CoverFamily> declared;
    std::vector<ObjIdx> noninitial;
    std::vector<bool> iso;
    std::vector<std::vector<MorIdx>> isos_into;
    std::vector<std::uint32_t> iso_class;
    std::vector<Sieve> principal;
    std::vector<Sieve> noninit_mask;
    std::vector<Sieve> iso_mask;
    std::vector<MorIdx> rep;
    std::vector<std::vector<MorIdx>> subobjects;
    std::vector<std::vector<MorIdx>> atoms;
    std::vector<std::vector<MorIdx>> noninit_incoming;
    std::vector<std::vector<std::vector<MorIdx>>> effective;
  };
  std::shared_ptr<const Impl> impl_;
};

/// Collects objects/morphisms/covers by id. The initial object and the
/// morphisms "init:<obj>" out of it are generated, with their composites.
class AssemblerBuilder {
 public:
  static std::string init_id(std::string_view object) { return "init:" + std::string(object); }

  explicit AssemblerBuilder(std::string initial);

  const std::string& initial() const { return initial_; }
  void add_object(std::string name);
  void add_morphism(std::string id, std::string_view src, std::string_view tgt);
  void set_composite(std::string_view first, std::string_view second, std::string_view result);
  void add_cover(std::string_view target, std::vector<std::string> family);
  bool has_object(std::string_view name) const { return cat_.has_object(name); }
  bool has_morphism(std::string_view id) const { return cat_.has_morphism(id); }

  /// Throws InvalidInput on malformed data.
  Assembler build() const;

 private:
  std::string initial_;
  std::vector<std::string> objects_;
  CategoryBuilder cat_;
  std::vector<std::pair<std::string, std::vector<std::string>>> covers_;
};

/// Decides covering families by the saturation rules, memoised per query
/// object. Not shared between threads; create one per operation.
class CoverageEngine {
 public:
  explicit CoverageEngine(const Assembler& assembler, Budget* budget = nullptr);

  bool covers(ObjIdx target, const Sieve& sieve);
  bool covers(const CoverFamily& family);

 private:
  const Assembler& asm_;
  Budget* budget_;
  std::vector<std::unordered_map<Sieve, bool, boost::hash<Sieve>>> memo_;
};

bool are_disjoint(const Assembler& a, MorIdx f, MorIdx g);
bool is_disjoint_family(const Assembler& a, const CoverFamily& family);
bool is_covering_family(const Assembler& a, const CoverFamily& family, Budget& budget);
bool is_covering_family(const Assembler& a, const CoverFamily& family);

/// Options of the disjoint-cover search; every caller that enumerates
/// disjoint families goes through it.
struct CoverSearch {
  std::vector<MorIdx> forced;           // members that must appear
  std::optional<std::vector<MorIdx>> pool;  // candidate members (default below)
  bool subobjects_only = true;          // default pool: subobjects() vs all morphisms
  std::size_t max_size = static_cast<std::size_t>(-1);
  bool first_only = false;
};

/// All pairwise-disjoint covering families of `target` drawn from the pool,
/// in lexicographic order.
std::vector<CoverFamily> search_disjoint_covers(const Assembler& a, ObjIdx target,
                                                const CoverSearch& options,
                                                CoverageEngine& engine, Budget& budget);

/// Every finite disjoint covering family of `target` (members with
/// noninitial domain, deterministic lexicographic order).
std::vector<CoverFamily> enumerate_disjoint_covering_families(const Assembler& a, ObjIdx target,
                                                              Budget& budget);

/// As above, one family per choice of subobjects (members up to
/// precomposition with isomorphisms).
std::vector<CoverFamily> enumerate_disjoint_covering_subobjects(const Assembler& a,
                                                                ObjIdx target, Budget& budget);

struct Refinement {
  CoverFamily family;
  struct Witness {
    MorIdx member;
    MorIdx through_first;   // member of F1
    MorIdx factor_first;    // member = through_first ∘ factor_first
    MorIdx through_second;  // member of F2
    MorIdx factor_second;
  };
  std::vector<Witness> witnesses;
};

/// Returns a factorisation g = f ∘ h with f in family, if one exists.
std::optional<std::pair<MorIdx, MorIdx>> factor_through(const Assembler& a, MorIdx g,
                                                        std::span<const MorIdx> family);

/// A disjoint covering family refining both inputs (coarsest pieces tried
/// first). Throws InvalidInput if an input is not a disjoint covering family.
std::optional<Refinement> common_refinement(const Assembler& a, const CoverFamily& f1,
                                            const CoverFamily& f2, Budget& budget);

struct AxiomReport {
  bool initial_ok = true;
  std::vector<std::string> initial_violations;
  bool holds_I = true;
  bool holds_M = true;
  struct MonoWitness {
    MorIdx f, g, h;  // f∘g = f∘h, g != h
  };
  std::vector<MonoWitness> mono_violations;
  bool holds_R = true;
  struct RefinementFailure {
    CoverFamily first, second;
  };
  std::vector<RefinementFailure> refinement_failures;
  bool budget_exhausted_R = false;

  bool all_hold() const { return initial_ok && holds_I && holds_M && holds_R && !budget_exhausted_R; }
};

AxiomReport check_axioms(const Assembler& a, Budget& budget);

std::string describe(const Assembler& a, const CoverFamily& family);

}  // namespace scissors
