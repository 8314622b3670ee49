// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scissors/k0.hpp"
#include "scissors/morphism.hpp"

namespace scissors {

/// Levels 0..depth with faces d_i: X_n -> X_{n-1} (faces[n][i], n ≥ 1) and
/// degeneracies s_i: X_n -> X_{n+1} (degeneracies[n][i], n < depth).
struct SimplicialAssembler {
  std::vector<Assembler> levels;
  std::vector<std::vector<AssemblerMorphism>> faces;
  std::vector<std::vector<AssemblerMorphism>> degeneracies;

  std::size_t depth() const { return levels.size() - 1; }
};

/// One assembler morphism per level.
struct SimplicialMorphism {
  std::vector<AssemblerMorphism> levels;
};

SimplicialAssembler constant_simplicial(const Assembler& a, std::size_t depth);
SimplicialMorphism constant_morphism(const AssemblerMorphism& m, std::size_t depth);

/// Face and degeneracy of S¹ = Δ¹/∂Δ¹ on level n = {∗, 1..n}; 0 is ∗.
std::size_t circle_face(std::size_t n, std::size_t i, std::size_t j);
std::size_t circle_degeneracy(std::size_t i, std::size_t j);

struct IdentityReport {
  bool holds = true;
  std::vector<std::string> failures;
};

/// All simplicial identities among the structure maps, up to the depth.
IdentityReport simplicial_identities_check(const SimplicialAssembler& x);
/// check_assembler_morphism on every face and degeneracy.
IdentityReport check_structure_maps(const SimplicialAssembler& x, Budget& budget);
/// Levelwise validity and commutation with faces and degeneracies.
IdentityReport check_simplicial_morphism(const SimplicialMorphism& f, const SimplicialAssembler& x,
                                         const SimplicialAssembler& y, Budget& budget);

/// Level n is the wedge of n copies of D_n tagged "1".."n".
SimplicialAssembler circle_smash(const SimplicialAssembler& d, std::size_t depth);

struct Cofiber {
  SimplicialAssembler result;   // level n: C_n ∨ n tagged copies of D_n ("C", "1".."n")
  SimplicialAssembler circle;   // S¹ ∧ D
  SimplicialMorphism inclusion;   // C -> C/g
  SimplicialMorphism projection;  // C/g -> S¹ ∧ D
};

/// (C/g)_n = C_n ∨ (S¹)_n ∧ D_n, with d_0 sending the first copy of D
/// through g∘d_0 into C. Throws Error if the identities fail.
Cofiber cofiber(const SimplicialAssembler& d, const SimplicialAssembler& c,
                const SimplicialMorphism& g, std::size_t depth);

/// Coequalizer of d_0, d_1 : K₀(X_1) ⇉ K₀(X_0).
K0Group k0_simplicial(const SimplicialAssembler& x, Budget& budget);

/// Whether two morphisms with the same source and target agree.
bool same_map(const AssemblerMorphism& a, const AssemblerMorphism& b);

}  // namespace scissors
