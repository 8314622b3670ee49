// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scissors/fixtures.hpp"
#include "scissors/k0.hpp"
#include "scissors/morphism.hpp"

namespace scissors {

/// Conditions (S), (Ep) and (D) for an epimorphic assembler with a sink.
struct SinkConditions {
  std::optional<ObjIdx> sink;
  bool s = true, ep = true, d = true;
  std::vector<std::string> violations;
  bool all() const { return s && ep && d; }
};

SinkConditions check_sink_conditions(const Assembler& a, Budget& budget,
                                     std::optional<ObjIdx> sink = std::nullopt);

/// A span S <- apex -> S.
struct Span {
  ObjIdx apex;
  MorIdx left, right;
  friend bool operator==(const Span&, const Span&) = default;
};

/// Classes of spans with the square-completion product. Element 0 is the
/// identity [S, 1, 1]; table[x][y] = x·y with x the left factor.
struct SinkGroup {
  Assembler assembler;
  ObjIdx sink = 0;
  std::vector<Span> spans;
  std::vector<std::size_t> class_of_span;
  std::vector<Span> representatives;
  GroupTable table;
  std::vector<std::size_t> inverse;

  std::size_t order() const { return representatives.size(); }
  /// Class of a span (throws InvalidInput for non-spans).
  std::size_t element_of(const Span& s) const;
  std::string describe(const Span& s) const;
};

/// Throws HypothesisFailure naming the violated condition, or when a
/// product square cannot be completed.
SinkGroup sink_group(const Assembler& a, Budget& budget,
                     std::optional<ObjIdx> sink = std::nullopt);

/// Some bijection iso with iso[a·b] = iso[a]·iso[b].
std::optional<std::vector<std::size_t>> find_group_isomorphism(const GroupTable& g,
                                                               const GroupTable& h);

/// S_G for the sink group, arranged so that projections are functors.
Assembler sink_sphere(const SinkGroup& g);

/// f_A : A -> S per object (the entry for ∅ is ignored), with f_S = 1.
using SinkFamily = std::vector<MorIdx>;

/// Lexicographically least morphism to the sink per object.
SinkFamily default_sink_family(const SinkGroup& g);

/// π_F(g: A -> B) = [A, f_A, f_B g], into `sphere` = sink_sphere(g).
/// Throws InvalidInput if F is not a sink family.
AssemblerMorphism sink_projection(const SinkGroup& g, const SinkFamily& f,
                                  const Assembler& sphere);

struct ConjugationReport {
  bool hypothesis = true;
  bool holds = false;
  std::vector<std::string> failures;
};

/// With ψ an automorphism fixing S and isomorphisms φ_A: A -> ψ(A) making
/// f'_A = f_ψ(A) φ_A and f_ψ(A) φ_A = φ_S f_A, checks
/// π_F'(g) = s⁻¹ π_F(g) s for s = [S, 1, φ_S].
ConjugationReport verify_sink_family_conjugation(const SinkGroup& g, const SinkFamily& f,
                                                 const SinkFamily& f_prime,
                                                 const AssemblerMorphism& psi,
                                                 const std::vector<MorIdx>& phi);

struct RestrictionReport {
  Subassembler restricted;  // objects with a morphism to U
  SinkFamily family;        // F on C
  SinkFamily family_u;      // F' on C_U, f_A = f_U f'_A
  std::optional<SinkGroup> group_u;
  std::vector<std::size_t> phi;  // element of G_U -> element of G
  bool homomorphism = false;
  bool bijective = false;
  bool square_commutes = false;
  std::vector<std::string> failures;
  bool holds() const { return homomorphism && bijective && square_commutes; }
};

/// φ[A, f, g] = [A, f_U f, f_U g] for the full subassembler over U. When F
/// is omitted, F' is lexicographic and F is extended from f_U F'. Throws
/// HypothesisFailure if a given F does not factor through f_U.
RestrictionReport restrict_to_object(const SinkGroup& g, ObjIdx u, Budget& budget,
                                     std::optional<SinkFamily> f = std::nullopt);

}  // namespace scissors
