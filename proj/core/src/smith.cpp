// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/smith.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "scissors/errors.hpp"

namespace scissors {

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix m(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b, std::size_t inner, std::size_t cols) {
  IntMatrix out(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  }
  return out;
}

IntVector row_times(const IntVector& x, const IntMatrix& m, std::size_t cols) {
  IntVector out(cols, 0);
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (x[k] == 0) continue;
    for (std::size_t j = 0; j < cols; ++j) out[j] += x[k] * m[k][j];
  }
  return out;
}

namespace {

// g = s·a + t·b with g = gcd(a, b) >= 0.
void extended_gcd(const Integer& a, const Integer& b, Integer& g, Integer& s, Integer& t) {
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Replaces rows (i, k) by (s·r_i + t·r_k, -(b/g)·r_i + (a/g)·r_k) where a, b
// are the entries of the two rows in column c. Afterwards r_k[c] = 0.
void combine_rows(IntMatrix& m, std::size_t i, std::size_t k, std::size_t c, IntMatrix* track) {
  Integer a = m[i][c], b = m[k][c], g, s, t;
  if (b % a == 0) {
    // Plain elimination; the general branch could swap equal pivots forever.
    g = a;
    s = 1;
    t = 0;
  } else {
    extended_gcd(a, b, g, s, t);
  }
  Integer p = a / g, q = b / g;
  auto apply = [&](IntMatrix& x) {
    for (std::size_t j = 0; j < x[i].size(); ++j) {
      Integer xi = x[i][j], xk = x[k][j];
      x[i][j] = s * xi + t * xk;
      x[k][j] = p * xk - q * xi;
    }
  };
  apply(m);
  if (track) apply(*track);
}

// Column analogue of combine_rows.
void combine_cols(IntMatrix& m, std::size_t j, std::size_t k, std::size_t r, IntMatrix* track) {
  Integer a = m[r][j], b = m[r][k], g, s, t;
  if (b % a == 0) {
    g = a;
    s = 1;
    t = 0;
  } else {
    extended_gcd(a, b, g, s, t);
  }
  Integer p = a / g, q = b / g;
  auto apply = [&](IntMatrix& x) {
    for (auto& row : x) {
      Integer xj = row[j], xk = row[k];
      row[j] = s * xj + t * xk;
      row[k] = p * xk - q * xj;
    }
  };
  apply(m);
  if (track) apply(*track);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& input, std::size_t cols, bool with_transforms) {
  SmithForm out;
  out.rows = input.size();
  out.cols = cols;
  IntMatrix a = input;
  for (const auto& row : a) {
    if (row.size() != cols) throw InvalidInput("ragged matrix");
  }
  IntMatrix u, v;
  if (with_transforms) {
    u = identity_matrix(out.rows);
    v = identity_matrix(cols);
  }
  IntMatrix* ut = with_transforms ? &u : nullptr;
  IntMatrix* vt = with_transforms ? &v : nullptr;
  const std::size_t m = out.rows;
  for (std::size_t t = 0; t < std::min(m, cols); ++t) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    std::size_t pi = m, pj = cols;
    for (std::size_t i = t; i < m; ++i) {
      for (std::size_t j = t; j < cols; ++j) {
        if (a[i][j] != 0 && (pi == m || abs(a[i][j]) < abs(a[pi][pj]))) {
          pi = i;
          pj = j;
        }
      }
    }
    if (pi == m) break;
    if (pi != t) {
      std::swap(a[pi], a[t]);
      if (ut) std::swap(u[pi], u[t]);
    }
    if (pj != t) {
      for (auto& row : a) std::swap(row[pj], row[t]);
      if (vt) {
        for (auto& row : v) std::swap(row[pj], row[t]);
      }
    }
    for (;;) {
      for (std::size_t i = t + 1; i < m; ++i) {
        if (a[i][t] != 0) combine_rows(a, t, i, t, ut);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a[t][j] != 0) combine_cols(a, t, j, t, vt);
      }
      bool column_clear = true;
      for (std::size_t i = t + 1; i < m; ++i) column_clear = column_clear && a[i][t] == 0;
      if (!column_clear) continue;
      // Divisibility: fold in a row holding an entry the pivot does not divide.
      std::size_t bad = m;
      for (std::size_t i = t + 1; i < m && bad == m; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (a[i][j] % a[t][t] != 0) {
            bad = i;
            break;
          }
        }
      }
      if (bad == m) break;
      for (std::size_t j = 0; j < cols; ++j) a[t][j] += a[bad][j];
      if (ut) {
        for (std::size_t j = 0; j < m; ++j) u[t][j] += u[bad][j];
      }
    }
    if (a[t][t] < 0) {
      for (auto& x : a[t]) x = -x;
      if (ut) {
        for (auto& x : u[t]) x = -x;
      }
    }
    out.diagonal.push_back(a[t][t]);
  }
  out.u = std::move(u);
  out.v = std::move(v);
  return out;
}

namespace {

std::size_t leading(const IntVector& v) {
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] != 0) return j;
  }
  return v.size();
}

}  // namespace

void LatticeBasis::add(IntVector v) {
  if (v.size() != n_) throw InvalidInput("lattice vector has the wrong length");
  std::size_t lead = leading(v);
  auto it = rows_.begin();
  while (lead < n_) {
    while (it != rows_.end() && it->first < lead) ++it;
    if (it == rows_.end() || it->first > lead) {
      if (v[lead] < 0) {
        for (auto& x : v) x = -x;
      }
      rows_.insert(it, {lead, std::move(v)});
      return;
    }
    IntVector& b = it->second;
    const std::size_t p = lead;
    if (v[p] % b[p] == 0) {
      Integer q = v[p] / b[p];
      for (std::size_t j = p; j < n_; ++j) {
        if (b[j] != 0) v[j] -= q * b[j];
      }
    } else {
      Integer g, s, t;
      extended_gcd(b[p], v[p], g, s, t);
      Integer bp = b[p] / g, vp = v[p] / g;
      for (std::size_t j = p; j < n_; ++j) {
        Integer bj = b[j], vj = v[j];
        b[j] = s * bj + t * vj;
        v[j] = bp * vj - vp * bj;
      }
    }
    lead = leading(v);
  }
}

bool LatticeBasis::contains(IntVector v) const {
  if (v.size() != n_) throw InvalidInput("lattice vector has the wrong length");
  for (const auto& [p, b] : rows_) {
    std::size_t lead = leading(v);
    if (lead == n_) return true;
    if (lead < p) return false;
    if (lead > p) continue;
    if (v[p] % b[p] != 0) return false;
    Integer q = v[p] / b[p];
    for (std::size_t j = p; j < n_; ++j) v[j] -= q * b[j];
  }
  return leading(v) == n_;
}

IntMatrix LatticeBasis::rows() const {
  IntMatrix out;
  for (const auto& [p, b] : rows_) out.push_back(b);
  // Reduce entries above each pivot into [0, pivot).
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t p = rows_[i].first;
    for (std::size_t k = 0; k < i; ++k) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), out[k][p].get_mpz_t(), out[i][p].get_mpz_t());
      if (q == 0) continue;
      for (std::size_t j = p; j < n_; ++j) out[k][j] -= q * out[i][j];
    }
  }
  return out;
}

IntMatrix left_kernel(const IntMatrix& a, std::size_t cols) {
  const std::size_t m = a.size();
  LatticeBasis basis(cols + m);
  for (std::size_t i = 0; i < m; ++i) {
    IntVector row(cols + m, 0);
    for (std::size_t j = 0; j < cols; ++j) row[j] = a[i][j];
    row[cols + i] = 1;
    basis.add(std::move(row));
  }
  IntMatrix out;
  for (const auto& row : basis.rows()) {
    if (leading(row) < cols) continue;
    out.emplace_back(row.begin() + static_cast<long>(cols), row.end());
  }
  return out;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << "^" << rank;
    first = false;
  }
  for (const auto& t : torsion) {
    out << (first ? "" : " + ") << "Z/" << t.get_str();
    first = false;
  }
  return first ? "0" : out.str();
}

AbelianGroup cokernel(const IntMatrix& relations, std::size_t cols) {
  LatticeBasis basis(cols);
  for (const auto& r : relations) basis.add(r);
  auto snf = smith_normal_form(basis.rows(), cols, false);
  AbelianGroup g;
  g.rank = cols - snf.diagonal.size();
  for (const auto& d : snf.diagonal) {
    if (d > 1) g.torsion.push_back(d);
  }
  return g;
}

namespace {

std::int64_t checked_axpy(std::int64_t x, std::int64_t q, std::int64_t y) {
  std::int64_t prod, sum;
  if (__builtin_mul_overflow(q, y, &prod) || __builtin_sub_overflow(x, prod, &sum)) {
    throw Error("integer overflow in sparse elimination");
  }
  return sum;
}

// row -= q·pivot (both sorted by column).
SparseRow subtract(const SparseRow& row, std::int64_t q, const SparseRow& pivot) {
  SparseRow out;
  out.reserve(row.size() + pivot.size());
  std::size_t i = 0, j = 0;
  while (i < row.size() || j < pivot.size()) {
    if (j == pivot.size() || (i < row.size() && row[i].first < pivot[j].first)) {
      out.push_back(row[i++]);
    } else if (i == row.size() || pivot[j].first < row[i].first) {
      out.emplace_back(pivot[j].first, checked_axpy(0, q, pivot[j].second));
      ++j;
    } else {
      auto v = checked_axpy(row[i].second, q, pivot[j].second);
      if (v != 0) out.emplace_back(row[i].first, v);
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

IntVector sparse_invariant_factors(const std::vector<SparseRow>& input, std::size_t cols) {
  // Unit pivots, kept in echelon form: each pivot row starts at its column
  // with entry 1.
  std::map<std::uint32_t, SparseRow> pivots;
  std::vector<SparseRow> leftover;
  auto reduce = [&](SparseRow row) {
    std::sort(row.begin(), row.end());
    SparseRow merged;
    for (const auto& e : row) {
      if (!merged.empty() && merged.back().first == e.first) {
        merged.back().second += e.second;
      } else {
        merged.push_back(e);
      }
    }
    std::erase_if(merged, [](const auto& e) { return e.second == 0; });
    row = std::move(merged);
    std::size_t pos = 0;
    while (pos < row.size()) {
      auto it = pivots.find(row[pos].first);
      if (it == pivots.end()) {
        ++pos;
        continue;
      }
      auto col = row[pos].first;
      row = subtract(row, row[pos].second, it->second);
      pos = static_cast<std::size_t>(
          std::lower_bound(row.begin(), row.end(), std::pair<std::uint32_t, std::int64_t>{col, 0}) -
          row.begin());
    }
    return row;
  };
  for (const auto& r : input) {
    SparseRow row = reduce(r);
    if (row.empty()) continue;
    if (row.front().second == 1 || row.front().second == -1) {
      if (row.front().second == -1) {
        for (auto& e : row) e.second = -e.second;
      }
      pivots.emplace(row.front().first, std::move(row));
    } else {
      leftover.push_back(std::move(row));
    }
  }
  IntVector factors(pivots.size(), Integer(1));
  if (leftover.empty()) return factors;
  std::map<std::uint32_t, std::size_t> dense_col;
  std::vector<SparseRow> rest;
  for (auto& row : leftover) {
    row = reduce(std::move(row));
    if (row.empty()) continue;
    for (const auto& e : row) dense_col.emplace(e.first, 0);
    rest.push_back(std::move(row));
  }
  std::size_t k = 0;
  for (auto& [c, idx] : dense_col) idx = k++;
  IntMatrix dense(rest.size(), IntVector(k, 0));
  for (std::size_t i = 0; i < rest.size(); ++i) {
    for (const auto& e : rest[i]) dense[i][dense_col[e.first]] = Integer(static_cast<long>(e.second));
  }
  LatticeBasis basis(k);
  for (auto& r : dense) basis.add(std::move(r));
  auto snf = smith_normal_form(basis.rows(), k, false);
  factors.insert(factors.end(), snf.diagonal.begin(), snf.diagonal.end());
  (void)cols;
  return factors;
}

}  // namespace scissors
