// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace scissors {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;
using IntMatrix = std::vector<IntVector>;  // row-major

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols);
IntVector row_times(const IntVector& x, const IntMatrix& m, std::size_t cols);

/// U·A·V = diag(d_1, …, d_r, 0, …) with d_i | d_{i+1}, d_i > 0, U and V
/// unimodular.
struct SmithForm {
  std::size_t rows = 0, cols = 0;
  IntVector diagonal;  // the r nonzero invariant factors
  IntMatrix u;         // rows × rows (empty unless requested)
  IntMatrix v;         // cols × cols (empty unless requested)
};

SmithForm smith_normal_form(const IntMatrix& a, std::size_t cols, bool with_transforms);

/// Incrementally maintained row-echelon basis of a sublattice of Z^n
/// (Hermite-style: pivots positive, entries above pivots reduced).
class LatticeBasis {
 public:
  explicit LatticeBasis(std::size_t n) : n_(n) {}

  std::size_t dimension() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  /// Adds a vector to the generating set.
  void add(IntVector v);
  /// Whether v lies in the lattice.
  bool contains(IntVector v) const;
  /// Basis rows ordered by pivot column.
  IntMatrix rows() const;

 private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, IntVector>> rows_;  // (pivot, row), sorted by pivot
};

/// All x with x·A = 0 (basis rows), for A with `cols` columns.
IntMatrix left_kernel(const IntMatrix& a, std::size_t cols);

struct AbelianGroup {
  std::size_t rank = 0;
  IntVector torsion;  // invariant factors > 1

  bool trivial() const { return rank == 0 && torsion.empty(); }
  /// "0", "Z", "Z^2 + Z/2".
  std::string to_string() const;
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

/// Z^cols modulo the row span of `relations`.
AbelianGroup cokernel(const IntMatrix& relations, std::size_t cols);

/// A sparse integer matrix stored by rows (column, value).
using SparseRow = std::vector<std::pair<std::uint32_t, std::int64_t>>;

/// Nonzero invariant factors of a sparse matrix: unit pivots are eliminated
/// first, the remainder goes through the dense algorithm.
IntVector sparse_invariant_factors(const std::vector<SparseRow>& rows, std::size_t cols);

}  // namespace scissors
