// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>
#include <string>
#include <vector>

#include "scissors/morphism.hpp"

namespace scissors {

/// Name of the shared initial object of every construction.
inline constexpr const char* kInitialName = "0";

struct Coproduct {
  Assembler result;
  std::vector<AssemblerMorphism> injections;
};

/// Wedge along the initial object. Objects and morphisms of summand i are
/// renamed "<tag_i>:<id>".
Coproduct coproduct(const std::vector<Assembler>& summands, const std::vector<std::string>& tags);
/// Tags "1", "2", ...
Coproduct coproduct(const std::vector<Assembler>& summands);

struct Product {
  Assembler result;
  AssemblerMorphism first_projection;
  AssemblerMorphism second_projection;
};

/// Product category; a family covers iff both projections cover. The
/// minimal such families are stored as the generating coverage, which
/// costs one subset scan per object (budgeted).
Product product(const Assembler& a, const Assembler& b, Budget& budget);

/// X ∧ C for X = {*, labels...}: one tagged copy of C per label.
Coproduct smash_with_pointed_set(const std::vector<std::string>& labels, const Assembler& c);
/// Labels "1".."n".
Coproduct smash_with_pointed_set(std::size_t n, const Assembler& c);

using ObjectSet = std::set<ObjIdx>;

/// Object indices for names (InvalidInput on unknown names).
ObjectSet object_set(const Assembler& c, const std::vector<std::string>& names);

struct SieveWitness {
  std::vector<std::string> members;
  std::vector<std::string> closure_violations;
  bool valid() const { return closure_violations.empty(); }
};

SieveWitness is_sieve(const Assembler& c, const ObjectSet& d);

struct ComplementReport {
  bool holds = true;
  std::vector<std::pair<MorIdx, CoverFamily>> witnesses;
  std::vector<MorIdx> failures;  // morphisms out of A lying in no disjoint covering family
};

/// Whether every morphism out of `a` lies in a finite disjoint covering
/// family of its target.
ComplementReport has_complements(const Assembler& c, ObjIdx a, Budget& budget);

struct Subassembler {
  Assembler sub;
  AssemblerMorphism inclusion;
};

/// Full subcategory on `objects` (the initial object is always added) with
/// the declared covers that live inside it.
Subassembler full_subassembler(const Assembler& c, const ObjectSet& objects);

struct SubassemblerReport {
  AxiomReport axioms;
  MorphismReport inclusion;
  std::vector<std::string> reasons;
  bool holds() const { return reasons.empty(); }
};

SubassemblerReport is_subassembler(const Subassembler& s, Budget& budget);

struct Quotient {
  Assembler result;
  AssemblerMorphism projection;  // C -> C∖D, D-objects to the initial object
};

/// C∖D. Throws HypothesisFailure if D is not a sieve.
Quotient quotient(const Assembler& c, const ObjectSet& d);

/// The literal quotient rule: `family` (morphisms of C into a target
/// outside D) covers in C∖D iff some set of D-domained morphisms completes
/// it to a covering family of C.
bool completes_to_cover(const Assembler& c, const ObjectSet& d, const CoverFamily& family,
                        CoverageEngine& engine);

}  // namespace scissors
