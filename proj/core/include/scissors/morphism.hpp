// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "scissors/assembler.hpp"

namespace scissors {

/// A functor between the underlying categories, given by index tables.
struct AssemblerMorphism {
  Assembler source;
  Assembler target;
  std::vector<ObjIdx> object_map;
  std::vector<MorIdx> morphism_map;

  ObjIdx operator()(ObjIdx a) const { return object_map[a]; }
  MorIdx map(MorIdx f) const { return morphism_map[f]; }
};

struct MorphismReport {
  std::vector<std::string> violations;
  bool budget_exhausted = false;
  bool ok() const { return violations.empty() && !budget_exhausted; }
};

/// Functoriality, initial object, continuity (declared covers and every
/// disjoint covering family of subobjects) and preservation of disjointness.
MorphismReport check_assembler_morphism(const AssemblerMorphism& m, Budget& budget);

AssemblerMorphism identity_morphism(const Assembler& a);

/// second ∘ first.
AssemblerMorphism compose_morphisms(const AssemblerMorphism& first,
                                    const AssemblerMorphism& second);

/// Builds a morphism from an object naming and a naming of the remaining
/// morphisms. Identities go to identities and anything whose source lands
/// on the initial object goes to the corresponding "init" morphism, so
/// `morphism_name` is only asked about the other morphisms.
AssemblerMorphism make_morphism(const Assembler& source, const Assembler& target,
                                const std::function<std::string(ObjIdx)>& object_name,
                                const std::function<std::string(MorIdx)>& morphism_name);

/// Same, from explicit id maps; ids missing from `morphisms` map to the
/// equally named morphism of the target.
AssemblerMorphism morphism_from_maps(const Assembler& source, const Assembler& target,
                                     const std::map<std::string, std::string>& objects,
                                     const std::map<std::string, std::string>& morphisms);

/// Every object and morphism goes to the one with the same id.
AssemblerMorphism inclusion_by_name(const Assembler& source, const Assembler& target);

}  // namespace scissors
