// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scissors/constructions.hpp"
#include "scissors/smith.hpp"

namespace scissors {

/// A class in K₀, in the Smith basis: torsion coordinates reduced modulo
/// their invariant factors, then free coordinates.
struct K0Class {
  IntVector torsion;
  IntVector free;

  bool is_zero() const;
  std::string to_string() const;
  friend bool operator==(const K0Class&, const K0Class&) = default;
};

/// One relation [target] = Σ [pieces] of the presentation.
struct K0Relation {
  std::size_t target;               // generator index
  std::vector<std::size_t> pieces;  // generator indices (with repetition)
  std::string origin;               // e.g. "iso u" or "{f, g} -> A"
};

/// Z^generators modulo the relation rows, with Smith data for class
/// computations.
class K0Group {
 public:
  /// Presentation from explicit relation rows.
  K0Group(std::vector<std::string> generator_names, const IntMatrix& relation_rows,
          std::vector<K0Relation> relations = {});

  const std::vector<std::string>& generator_names() const { return names_; }
  std::size_t generator_count() const { return names_.size(); }
  const std::vector<K0Relation>& relations() const { return relations_; }
  std::size_t relation_count() const { return relation_count_; }

  std::size_t rank() const { return group_.rank; }
  const IntVector& torsion() const { return group_.torsion; }
  const AbelianGroup& group() const { return group_; }
  const LatticeBasis& lattice() const { return lattice_; }
  /// Nonzero invariant factors of the reduced relation basis.
  const IntVector& invariant_factors() const { return snf_.diagonal; }
  const SmithForm& smith() const { return snf_; }
  const IntMatrix& basis_rows() const { return basis_; }

  /// Class of an integer combination of generators.
  K0Class class_of_vector(const IntVector& x) const;
  /// Class of the generator with this index.
  K0Class class_of_generator(std::size_t i) const;
  /// Generator index by name, if any.
  std::optional<std::size_t> generator_index(const std::string& name) const;

 private:
  std::vector<std::string> names_;
  std::vector<K0Relation> relations_;
  std::size_t relation_count_ = 0;
  LatticeBasis lattice_;
  IntMatrix basis_;
  SmithForm snf_;
  AbelianGroup group_;
};

/// K₀ of an assembler: generators are the noninitial objects (index order),
/// relations one per disjoint covering family of subobjects plus [Y] = [X]
/// for isomorphic objects.
K0Group k0(const Assembler& a, Budget& budget);
/// Same group from every disjoint covering family of morphisms (slower;
/// used to cross-check k0).
K0Group k0_full(const Assembler& a, Budget& budget);
/// Only the declared covers (and isomorphisms) as relations.
K0Group k0_declared(const Assembler& a);

/// [A] for an object of the assembler k was computed from; [∅] = 0.
K0Class class_of(const Assembler& a, const K0Group& k, ObjIdx obj);

/// A homomorphism Z^n/L -> Z^m/L' given on generators.
struct K0Hom {
  IntMatrix matrix;  // n × m
  bool well_defined = true;
  bool injective = false;
  bool surjective = false;
  IntMatrix kernel;  // vectors mapping into the target relations but not source relations
  AbelianGroup cokernel;

  bool is_iso() const { return well_defined && injective && surjective; }
};

/// Analyses `matrix` as a map between the two presented groups.
K0Hom analyse_hom(const K0Group& source, const K0Group& target, IntMatrix matrix);

/// Induced map of an assembler morphism on K₀.
K0Hom k0_map(const AssemblerMorphism& m, const K0Group& source, const K0Group& target);

/// Quotient of `target` by the image of `hom` (a new presentation on the
/// generators of `target`).
K0Group cokernel_group(const K0Group& target, const IntMatrix& hom_matrix);

struct SCWitness {
  CoverFamily first;
  CoverFamily second;
  std::vector<std::size_t> matching;  // member i of first <-> member matching[i] of second
  std::vector<MorIdx> isos;           // src(first_i) -> src(second_matching[i])
};

/// Searches families of at most `depth` pieces for a piecewise isomorphism.
/// std::nullopt means "not found within depth", never "not congruent".
std::optional<SCWitness> scissors_congruent(const Assembler& a, ObjIdx x, ObjIdx y,
                                            std::size_t depth, Budget& budget);
bool verify_witness(const Assembler& a, const SCWitness& w);

struct DevissageReport {
  bool hypothesis = true;
  std::vector<std::pair<ObjIdx, CoverFamily>> witnesses;  // objects of C covered from D
  std::vector<ObjIdx> failures;
  std::optional<K0Group> k0_sub, k0_ambient;
  std::optional<K0Hom> map;
  bool conclusion() const { return map && map->is_iso(); }
};

DevissageReport devissage_check(const Assembler& c, const Subassembler& d, Budget& budget);

struct LocalizationReport {
  SieveWitness sieve;
  bool complements = true;
  std::vector<std::pair<ObjIdx, MorIdx>> complement_failures;  // (object of D, morphism out of it)
  std::optional<K0Group> k0_sieve, k0_ambient, k0_quotient, k0_cokernel;
  std::optional<K0Hom> induced;  // coker(K₀D -> K₀C) -> K₀(C∖D)
  bool exact() const { return induced && induced->is_iso(); }
};

LocalizationReport localization_check(const Assembler& c, const ObjectSet& d, Budget& budget);

}  // namespace scissors
