// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/nerve.hpp"

#include <functional>
#include <map>

#include "scissors/errors.hpp"

namespace scissors {
namespace {

using Key = std::vector<std::uint32_t>;

// Every morphism of a truncated W, numbered.
class MorphismTable {
 public:
  MorphismTable(const WCategory& w, Budget& budget) : w_(w) {
    const std::size_t n = w.objects().size();
    outgoing_.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& m : w.hom(a, b)) {
          budget.tick("nerve morphisms");
          auto id = static_cast<std::uint32_t>(src_.size());
          src_.push_back(a);
          tgt_.push_back(b);
          mor_.push_back(m);
          ids_.emplace(std::make_tuple(a, b, m), id);
          outgoing_[a].push_back(id);
        }
      }
    }
  }

  std::size_t size() const { return src_.size(); }
  std::size_t src(std::uint32_t f) const { return src_[f]; }
  std::size_t tgt(std::uint32_t f) const { return tgt_[f]; }
  const std::vector<std::uint32_t>& outgoing(std::size_t a) const { return outgoing_[a]; }

  std::uint32_t id(std::size_t a, std::size_t b, const WMorphism& m) const {
    auto it = ids_.find(std::make_tuple(a, b, m));
    if (it == ids_.end()) throw Error("nerve: morphism outside the truncation");
    return it->second;
  }
  std::uint32_t identity(std::size_t a) const { return id(a, a, w_.identity(a)); }
  // second ∘ first
  std::uint32_t compose(std::uint32_t first, std::uint32_t second) const {
    return id(src_[first], tgt_[second], w_.compose(mor_[first], mor_[second]));
  }
  // Disjoint union of tuples and of morphisms, left block first.
  std::uint32_t concat(std::uint32_t f, std::uint32_t g) const {
    const auto& objs = w_.objects();
    auto join = [&](std::size_t x, std::size_t y) {
      WObject o = objs[x];
      o.entries.insert(o.entries.end(), objs[y].entries.begin(), objs[y].entries.end());
      auto i = w_.index_of(o);
      if (!i) throw Error("nerve: concatenation exceeds the truncation");
      return *i;
    };
    WMorphism m = mor_[f];
    const auto shift = static_cast<std::uint32_t>(objs[tgt_[f]].size());
    for (std::size_t i = 0; i < mor_[g].index_map.size(); ++i) {
      m.index_map.push_back(mor_[g].index_map[i] + shift);
      m.components.push_back(mor_[g].components[i]);
    }
    return id(join(src_[f], src_[g]), join(tgt_[f], tgt_[g]), m);
  }

 private:
  const WCategory& w_;
  std::vector<std::size_t> src_, tgt_;
  std::vector<WMorphism> mor_;
  std::map<std::tuple<std::size_t, std::size_t, WMorphism>, std::uint32_t> ids_;
  std::vector<std::vector<std::uint32_t>> outgoing_;
};

// Chain faces and degeneracies. Degree 0 keys are {object}; degree n ≥ 1
// keys list the n morphisms.
Key chain_face(const MorphismTable& t, std::size_t n, std::size_t i, const Key& c) {
  if (n == 1) return {static_cast<std::uint32_t>(i == 0 ? t.tgt(c[0]) : t.src(c[0]))};
  Key out;
  for (std::size_t p = 0; p < n; ++p) {
    if (i == 0 && p == 0) continue;
    if (i == n && p == n - 1) continue;
    if (i > 0 && i < n && p == i - 1) {
      out.push_back(t.compose(c[p], c[p + 1]));
      ++p;
      continue;
    }
    out.push_back(c[p]);
  }
  return out;
}

Key chain_degeneracy(const MorphismTable& t, std::size_t n, std::size_t i, const Key& c) {
  if (n == 0) return {t.identity(c[0])};
  std::size_t obj = i == 0 ? t.src(c[0]) : t.tgt(c[i - 1]);
  Key out = c;
  out.insert(out.begin() + static_cast<std::ptrdiff_t>(i), t.identity(obj));
  return out;
}

std::vector<std::vector<Key>> enumerate_chains(const WCategory& w, const MorphismTable& t,
                                               std::size_t d, Budget& budget) {
  std::vector<std::vector<Key>> out(d + 1);
  for (std::size_t a = 0; a < w.objects().size(); ++a) out[0].push_back({static_cast<std::uint32_t>(a)});
  if (d >= 1) {
    for (std::uint32_t f = 0; f < t.size(); ++f) out[1].push_back({f});
  }
  for (std::size_t n = 2; n <= d; ++n) {
    for (const Key& c : out[n - 1]) {
      for (std::uint32_t g : t.outgoing(t.tgt(c.back()))) {
        budget.tick("nerve chains");
        Key next = c;
        next.push_back(g);
        out[n].push_back(std::move(next));
      }
    }
  }
  return out;
}

using FaceFn = std::function<Key(std::size_t, std::size_t, const Key&)>;

TruncatedSimplicialSet tabulate(const std::vector<std::vector<Key>>& simplices, const FaceFn& face,
                                const FaceFn& degeneracy, Budget& budget) {
  const std::size_t d = simplices.size() - 1;
  std::vector<std::map<Key, std::uint32_t>> index(d + 1);
  TruncatedSimplicialSet x;
  for (std::size_t n = 0; n <= d; ++n) {
    for (std::size_t s = 0; s < simplices[n].size(); ++s) {
      index[n].emplace(simplices[n][s], static_cast<std::uint32_t>(s));
    }
    x.counts.push_back(simplices[n].size());
  }
  auto look = [&](std::size_t n, const Key& k) {
    auto it = index[n].find(k);
    if (it == index[n].end()) throw Error("simplicial set: structure map leaves the truncation");
    return it->second;
  };
  x.faces.resize(d + 1);
  x.degeneracies.resize(d + 1);
  for (std::size_t n = 0; n <= d; ++n) {
    for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
      std::vector<std::uint32_t> table;
      for (const Key& s : simplices[n]) {
        budget.tick("simplicial tables");
        table.push_back(look(n - 1, face(n, i, s)));
      }
      x.faces[n].push_back(std::move(table));
    }
    for (std::size_t i = 0; n < d && i <= n; ++i) {
      std::vector<std::uint32_t> table;
      for (const Key& s : simplices[n]) {
        budget.tick("simplicial tables");
        table.push_back(look(n + 1, degeneracy(n, i, s)));
      }
      x.degeneracies[n].push_back(std::move(table));
    }
  }
  return x;
}

}  // namespace

IdentityReport check_simplicial_set(const TruncatedSimplicialSet& x) {
  IdentityReport r;
  const std::size_t d = x.degree();
  const auto& f = x.faces;
  const auto& s = x.degeneracies;
  auto fail = [&](const std::string& what, std::size_t n) {
    r.holds = false;
    r.failures.push_back(what + " at degree " + std::to_string(n));
  };
  for (std::size_t n = 2; n <= d; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        for (std::size_t e = 0; e < x.counts[n]; ++e) {
          if (f[n - 1][i][f[n][j][e]] != f[n - 1][j - 1][f[n][i][e]]) {
            fail("d" + std::to_string(i) + " d" + std::to_string(j), n);
            break;
          }
        }
      }
    }
  }
  for (std::size_t n = 0; n + 2 <= d; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        for (std::size_t e = 0; e < x.counts[n]; ++e) {
          if (s[n + 1][i][s[n][j][e]] != s[n + 1][j + 1][s[n][i][e]]) {
            fail("s" + std::to_string(i) + " s" + std::to_string(j), n);
            break;
          }
        }
      }
    }
  }
  for (std::size_t n = 0; n + 1 <= d; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= n + 1; ++i) {
        for (std::size_t e = 0; e < x.counts[n]; ++e) {
          std::uint32_t lhs = f[n + 1][i][s[n][j][e]];
          std::uint32_t rhs;
          if (i == j || i == j + 1) {
            rhs = static_cast<std::uint32_t>(e);
          } else if (i < j) {
            rhs = s[n - 1][j - 1][f[n][i][e]];
          } else {
            rhs = s[n - 1][j][f[n][i - 1][e]];
          }
          if (lhs != rhs) {
            fail("d" + std::to_string(i) + " s" + std::to_string(j), n);
            break;
          }
        }
      }
    }
  }
  return r;
}

ChainComplex normalized_chains(const TruncatedSimplicialSet& x) {
  const std::size_t d = x.degree();
  std::vector<std::vector<std::int64_t>> position(d + 1);  // -1 for degenerate
  ChainComplex c;
  for (std::size_t n = 0; n <= d; ++n) {
    std::vector<bool> degenerate(x.counts[n], false);
    for (std::size_t i = 0; n >= 1 && i < x.degeneracies[n - 1].size(); ++i) {
      for (std::uint32_t e : x.degeneracies[n - 1][i]) degenerate[e] = true;
    }
    std::int64_t next = 0;
    for (std::size_t e = 0; e < x.counts[n]; ++e) position[n].push_back(degenerate[e] ? -1 : next++);
    c.ranks.push_back(static_cast<std::size_t>(next));
  }
  c.boundary.resize(d + 1);
  for (std::size_t n = 1; n <= d; ++n) {
    for (std::size_t e = 0; e < x.counts[n]; ++e) {
      if (position[n][e] < 0) continue;
      std::map<std::uint32_t, std::int64_t> acc;
      for (std::size_t i = 0; i <= n; ++i) {
        std::int64_t col = position[n - 1][x.faces[n][i][e]];
        if (col >= 0) acc[static_cast<std::uint32_t>(col)] += (i % 2 == 0) ? 1 : -1;
      }
      SparseRow row;
      for (auto [col, v] : acc) {
        if (v != 0) row.emplace_back(col, v);
      }
      c.boundary[n].push_back(std::move(row));
    }
  }
  return c;
}

bool boundary_squared_zero(const ChainComplex& c) {
  for (std::size_t n = 2; n <= c.degree(); ++n) {
    for (const SparseRow& row : c.boundary[n]) {
      std::map<std::uint32_t, std::int64_t> acc;
      for (auto [col, v] : row) {
        for (auto [col2, w] : c.boundary[n - 1][col]) acc[col2] += v * w;
      }
      for (const auto& entry : acc) {
        if (entry.second != 0) return false;
      }
    }
  }
  return true;
}

AbelianGroup homology(const ChainComplex& c, std::size_t i) {
  if (i + 1 > c.degree()) {
    throw InvalidInput("H_" + std::to_string(i) + " needs simplices up to degree " +
                       std::to_string(i + 1));
  }
  std::size_t rank_out = 0;
  if (i >= 1) rank_out = sparse_invariant_factors(c.boundary[i], c.ranks[i - 1]).size();
  IntVector in = sparse_invariant_factors(c.boundary[i + 1], c.ranks[i]);
  AbelianGroup h;
  h.rank = c.ranks[i] - rank_out - in.size();
  for (const auto& f : in) {
    if (f > 1) h.torsion.push_back(f);
  }
  return h;
}

AbelianGroup homology(const TruncatedSimplicialSet& x, std::size_t i) {
  return homology(normalized_chains(x), i);
}

TruncatedSimplicialSet truncated_nerve(const WCategory& w, std::size_t d, Budget& budget) {
  MorphismTable t(w, budget);
  auto chains = enumerate_chains(w, t, d, budget);
  return tabulate(
      chains, [&](std::size_t n, std::size_t i, const Key& k) { return chain_face(t, n, i, k); },
      [&](std::size_t n, std::size_t i, const Key& k) { return chain_degeneracy(t, n, i, k); },
      budget);
}

TruncatedSimplicialSet diagonal_level_space(const Assembler& a, std::size_t k, std::size_t d,
                                            std::size_t max_tuple, Budget& budget) {
  if (k > 1) throw InvalidInput("diagonal_level_space supports k = 0 and k = 1");
  WCategory w(a, max_tuple, &budget);
  if (k == 0) return truncated_nerve(w, d, budget);

  MorphismTable t(w, budget);
  auto chains = enumerate_chains(w, t, d, budget);
  const std::uint32_t unit = t.identity(0);  // empty tuple
  auto length = [&](const Key& c) { return w.objects()[t.src(c[0])].size(); };
  auto block = [](const Key& k, std::size_t n, std::size_t j) {  // copy j ∈ 1..n
    return Key(k.begin() + static_cast<std::ptrdiff_t>((j - 1) * n),
               k.begin() + static_cast<std::ptrdiff_t>(j * n));
  };

  // n-simplices: n chains of degree n with total source length ≤ max_tuple.
  std::vector<std::vector<Key>> simplices(d + 1);
  simplices[0].push_back({});
  for (std::size_t n = 1; n <= d; ++n) {
    std::vector<std::vector<const Key*>> by_length(max_tuple + 1);
    for (const Key& c : chains[n]) by_length[length(c)].push_back(&c);
    Key cur;
    auto rec = [&](auto&& self, std::size_t j, std::size_t left) -> void {
      if (j > n) {
        budget.tick("level space simplices");
        simplices[n].push_back(cur);
        return;
      }
      for (std::size_t len = 0; len <= left; ++len) {
        for (const Key* c : by_length[len]) {
          cur.insert(cur.end(), c->begin(), c->end());
          self(self, j + 1, left - len);
          cur.resize(cur.size() - n);
        }
      }
    };
    rec(rec, 1, max_tuple);
  }

  auto face = [&](std::size_t n, std::size_t i, const Key& s) -> Key {
    if (n == 1) return {};
    std::vector<Key> merged(n, Key(n - 1, unit));  // copies 1..n-1 (slot 0 unused)
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t target = circle_face(n, i, j);
      if (target == 0) continue;
      Key c = chain_face(t, n, i, block(s, n, j));
      for (std::size_t p = 0; p < n - 1; ++p) merged[target][p] = t.concat(merged[target][p], c[p]);
    }
    Key out;
    for (std::size_t q = 1; q < n; ++q) out.insert(out.end(), merged[q].begin(), merged[q].end());
    return out;
  };
  auto degeneracy = [&](std::size_t n, std::size_t i, const Key& s) -> Key {
    std::vector<Key> blocks(n + 2, Key(n + 1, unit));
    for (std::size_t j = 1; j <= n; ++j) {
      blocks[circle_degeneracy(i, j)] = chain_degeneracy(t, n, i, block(s, n, j));
    }
    Key out;
    for (std::size_t q = 1; q <= n + 1; ++q) out.insert(out.end(), blocks[q].begin(), blocks[q].end());
    return out;
  };
  return tabulate(simplices, face, degeneracy, budget);
}

}  // namespace scissors
