// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "scissors/simplicial.hpp"
#include "scissors/smith.hpp"
#include "scissors/wcategory.hpp"

namespace scissors {

/// Simplices in degrees 0..degree() with face and degeneracy tables.
struct TruncatedSimplicialSet {
  std::vector<std::size_t> counts;
  std::vector<std::vector<std::vector<std::uint32_t>>> faces;         // faces[n][i][x], n ≥ 1
  std::vector<std::vector<std::vector<std::uint32_t>>> degeneracies;  // degeneracies[n][i][x], n < degree

  std::size_t degree() const { return counts.size() - 1; }
};

/// The simplicial identities on the tables.
IdentityReport check_simplicial_set(const TruncatedSimplicialSet& x);

/// Normalized chains: boundary[n] has one row per nondegenerate n-simplex
/// over the nondegenerate (n-1)-simplices.
struct ChainComplex {
  std::vector<std::size_t> ranks;
  std::vector<std::vector<SparseRow>> boundary;

  std::size_t degree() const { return ranks.size() - 1; }
};

ChainComplex normalized_chains(const TruncatedSimplicialSet& x);
bool boundary_squared_zero(const ChainComplex& c);

/// H_i; needs chains up to degree i + 1 (throws InvalidInput otherwise).
AbelianGroup homology(const ChainComplex& c, std::size_t i);
AbelianGroup homology(const TruncatedSimplicialSet& x, std::size_t i);

/// Composable chains of length ≤ d in the truncation.
TruncatedSimplicialSet truncated_nerve(const WCategory& w, std::size_t d, Budget& budget);

/// Diagonal of [n] ↦ N_n W((S^k)_n ∧ C) for k ∈ {0, 1}. For k = 1 an
/// n-simplex is one n-chain of W(C) per circle cell 1..n, with total source
/// length at most max_tuple; faces merge cells by concatenation.
TruncatedSimplicialSet diagonal_level_space(const Assembler& a, std::size_t k, std::size_t d,
                                            std::size_t max_tuple, Budget& budget);

}  // namespace scissors
