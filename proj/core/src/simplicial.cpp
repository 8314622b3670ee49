// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/simplicial.hpp"

#include "scissors/errors.hpp"

namespace scissors {
namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

// Where each object and morphism of a wedge comes from.
struct WedgeIndex {
  std::vector<std::pair<std::size_t, ObjIdx>> obj;
  std::vector<std::pair<std::size_t, MorIdx>> mor;
};

WedgeIndex index_wedge(const Coproduct& w) {
  const auto& c = w.result.cat();
  WedgeIndex ix{std::vector<std::pair<std::size_t, ObjIdx>>(c.object_count(), {kNone, 0}),
                std::vector<std::pair<std::size_t, MorIdx>>(c.morphism_count(), {kNone, 0})};
  for (std::size_t s = 0; s < w.injections.size(); ++s) {
    const auto& inj = w.injections[s];
    const auto& sc = inj.source.cat();
    for (ObjIdx y = 0; y < sc.object_count(); ++y) {
      if (!inj.source.is_initial(y)) ix.obj[inj(y)] = {s, y};
    }
    for (MorIdx g = 0; g < sc.morphism_count(); ++g) {
      if (!inj.source.is_initial(sc.tgt(g))) ix.mor[inj.map(g)] = {s, g};
    }
  }
  return ix;
}

// Summand s goes through parts[s] = (target summand, morphism), or to ∅.
using Part = std::optional<std::pair<std::size_t, AssemblerMorphism>>;

AssemblerMorphism wedge_map(const Coproduct& src, const Coproduct& tgt, const std::vector<Part>& parts) {
  const WedgeIndex ix = index_wedge(src);
  const Assembler& t = tgt.result;
  const auto& sc = src.result.cat();
  AssemblerMorphism m{src.result, t, {}, {}};
  for (ObjIdx x = 0; x < sc.object_count(); ++x) {
    auto [s, y] = ix.obj[x];
    if (s == kNone || !parts[s]) {
      m.object_map.push_back(t.initial());
    } else {
      const auto& [ts, f] = *parts[s];
      m.object_map.push_back(tgt.injections[ts](f(y)));
    }
  }
  for (MorIdx h = 0; h < sc.morphism_count(); ++h) {
    auto [s, g] = ix.mor[h];
    if (s == kNone || !parts[s]) {
      m.morphism_map.push_back(t.cat().identity(t.initial()));
    } else {
      const auto& [ts, f] = *parts[s];
      m.morphism_map.push_back(tgt.injections[ts].map(f.map(g)));
    }
  }
  return m;
}

std::vector<std::string> tags_for(std::size_t n, bool with_c) {
  std::vector<std::string> tags;
  if (with_c) tags.push_back("C");
  for (std::size_t j = 1; j <= n; ++j) tags.push_back(std::to_string(j));
  return tags;
}

void check_depth(const SimplicialAssembler& x, std::size_t depth) {
  if (x.levels.empty() || x.depth() < depth) throw InvalidInput("simplicial assembler is too shallow");
}

std::string label(const char* what, std::size_t i, std::size_t n) {
  return std::string(what) + std::to_string(i) + " at level " + std::to_string(n);
}

}  // namespace

bool same_map(const AssemblerMorphism& a, const AssemblerMorphism& b) {
  return a.object_map == b.object_map && a.morphism_map == b.morphism_map;
}

SimplicialAssembler constant_simplicial(const Assembler& a, std::size_t depth) {
  SimplicialAssembler x;
  x.levels.assign(depth + 1, a);
  x.faces.resize(depth + 1);
  x.degeneracies.resize(depth + 1);
  AssemblerMorphism id = identity_morphism(a);
  for (std::size_t n = 0; n <= depth; ++n) {
    if (n >= 1) x.faces[n].assign(n + 1, id);
    if (n < depth) x.degeneracies[n].assign(n + 1, id);
  }
  return x;
}

SimplicialMorphism constant_morphism(const AssemblerMorphism& m, std::size_t depth) {
  return SimplicialMorphism{std::vector<AssemblerMorphism>(depth + 1, m)};
}

std::size_t circle_face(std::size_t n, std::size_t i, std::size_t j) {
  if (j == 0) return 0;
  std::size_t r = i < j ? j - 1 : j;
  return r == n ? 0 : r;
}

std::size_t circle_degeneracy(std::size_t i, std::size_t j) {
  if (j == 0) return 0;
  return i < j ? j + 1 : j;
}

IdentityReport simplicial_identities_check(const SimplicialAssembler& x) {
  IdentityReport r;
  const std::size_t depth = x.depth();
  auto fail = [&](std::string what) {
    r.holds = false;
    r.failures.push_back(std::move(what));
  };
  const auto& d = x.faces;
  const auto& s = x.degeneracies;
  for (std::size_t n = 2; n <= depth; ++n) {
    for (std::size_t j = 1; j <= n; ++j) {
      for (std::size_t i = 0; i < j; ++i) {
        if (!same_map(compose_morphisms(d[n][j], d[n - 1][i]),
                      compose_morphisms(d[n][i], d[n - 1][j - 1]))) {
          fail("d" + std::to_string(i) + " d" + std::to_string(j) + " != d" + std::to_string(j - 1) +
               " d" + std::to_string(i) + " at level " + std::to_string(n));
        }
      }
    }
  }
  for (std::size_t n = 0; n + 2 <= depth; ++n) {
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        if (!same_map(compose_morphisms(s[n][j], s[n + 1][i]),
                      compose_morphisms(s[n][i], s[n + 1][j + 1]))) {
          fail("s" + std::to_string(i) + " s" + std::to_string(j) + " != s" + std::to_string(j + 1) +
               " s" + std::to_string(i) + " at level " + std::to_string(n));
        }
      }
    }
  }
  for (std::size_t n = 0; n + 1 <= depth; ++n) {
    const AssemblerMorphism id = identity_morphism(x.levels[n]);
    for (std::size_t j = 0; j <= n; ++j) {
      for (std::size_t i = 0; i <= n + 1; ++i) {
        AssemblerMorphism lhs = compose_morphisms(s[n][j], d[n + 1][i]);
        bool ok;
        if (i == j || i == j + 1) {
          ok = same_map(lhs, id);
        } else if (i < j) {
          ok = same_map(lhs, compose_morphisms(d[n][i], s[n - 1][j - 1]));
        } else {
          ok = same_map(lhs, compose_morphisms(d[n][i - 1], s[n - 1][j]));
        }
        if (!ok) {
          fail("d" + std::to_string(i) + " s" + std::to_string(j) + " identity fails at level " +
               std::to_string(n));
        }
      }
    }
  }
  return r;
}

IdentityReport check_structure_maps(const SimplicialAssembler& x, Budget& budget) {
  IdentityReport r;
  for (std::size_t n = 0; n <= x.depth(); ++n) {
    for (std::size_t i = 0; i < x.faces[n].size(); ++i) {
      for (const auto& v : check_assembler_morphism(x.faces[n][i], budget).violations) {
        r.holds = false;
        r.failures.push_back(label("d", i, n) + ": " + v);
      }
    }
    for (std::size_t i = 0; i < x.degeneracies[n].size(); ++i) {
      for (const auto& v : check_assembler_morphism(x.degeneracies[n][i], budget).violations) {
        r.holds = false;
        r.failures.push_back(label("s", i, n) + ": " + v);
      }
    }
  }
  return r;
}

IdentityReport check_simplicial_morphism(const SimplicialMorphism& f, const SimplicialAssembler& x,
                                         const SimplicialAssembler& y, Budget& budget) {
  IdentityReport r;
  const std::size_t depth = f.levels.size() - 1;
  check_depth(x, depth);
  check_depth(y, depth);
  for (std::size_t n = 0; n <= depth; ++n) {
    for (const auto& v : check_assembler_morphism(f.levels[n], budget).violations) {
      r.holds = false;
      r.failures.push_back("level " + std::to_string(n) + ": " + v);
    }
    if (n >= 1) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (!same_map(compose_morphisms(f.levels[n], y.faces[n][i]),
                      compose_morphisms(x.faces[n][i], f.levels[n - 1]))) {
          r.holds = false;
          r.failures.push_back("does not commute with " + label("d", i, n));
        }
      }
    }
    if (n < depth) {
      for (std::size_t i = 0; i <= n; ++i) {
        if (!same_map(compose_morphisms(f.levels[n], y.degeneracies[n][i]),
                      compose_morphisms(x.degeneracies[n][i], f.levels[n + 1]))) {
          r.holds = false;
          r.failures.push_back("does not commute with " + label("s", i, n));
        }
      }
    }
  }
  return r;
}

namespace {

struct Smash {
  SimplicialAssembler x;
  std::vector<Coproduct> wedges;
};

Smash build_circle_smash(const SimplicialAssembler& d, std::size_t depth) {
  check_depth(d, depth);
  Smash out;
  for (std::size_t n = 0; n <= depth; ++n) {
    out.wedges.push_back(smash_with_pointed_set(tags_for(n, false), d.levels[n]));
    out.x.levels.push_back(out.wedges.back().result);
  }
  out.x.faces.resize(depth + 1);
  out.x.degeneracies.resize(depth + 1);
  for (std::size_t n = 0; n <= depth; ++n) {
    for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
      std::vector<Part> parts;
      for (std::size_t j = 1; j <= n; ++j) {
        std::size_t t = circle_face(n, i, j);
        parts.push_back(t == 0 ? Part{} : Part{{t - 1, d.faces[n][i]}});
      }
      out.x.faces[n].push_back(wedge_map(out.wedges[n], out.wedges[n - 1], parts));
    }
    for (std::size_t i = 0; n < depth && i <= n; ++i) {
      std::vector<Part> parts;
      for (std::size_t j = 1; j <= n; ++j) {
        parts.push_back(Part{{circle_degeneracy(i, j) - 1, d.degeneracies[n][i]}});
      }
      out.x.degeneracies[n].push_back(wedge_map(out.wedges[n], out.wedges[n + 1], parts));
    }
  }
  return out;
}

}  // namespace

SimplicialAssembler circle_smash(const SimplicialAssembler& d, std::size_t depth) {
  return build_circle_smash(d, depth).x;
}

Cofiber cofiber(const SimplicialAssembler& d, const SimplicialAssembler& c,
                const SimplicialMorphism& g, std::size_t depth) {
  check_depth(d, depth);
  check_depth(c, depth);
  if (g.levels.size() < depth + 1) throw InvalidInput("cofiber: morphism is too shallow");
  Smash circle = build_circle_smash(d, depth);
  std::vector<Coproduct> wedges;
  Cofiber out;
  for (std::size_t n = 0; n <= depth; ++n) {
    std::vector<Assembler> summands{c.levels[n]};
    summands.insert(summands.end(), n, d.levels[n]);
    wedges.push_back(coproduct(summands, tags_for(n, true)));
    out.result.levels.push_back(wedges.back().result);
  }
  out.result.faces.resize(depth + 1);
  out.result.degeneracies.resize(depth + 1);
  for (std::size_t n = 0; n <= depth; ++n) {
    for (std::size_t i = 0; n >= 1 && i <= n; ++i) {
      std::vector<Part> parts{Part{{0, c.faces[n][i]}}};
      for (std::size_t j = 1; j <= n; ++j) {
        if (i == 0 && j == 1) {
          parts.push_back(Part{{0, compose_morphisms(d.faces[n][0], g.levels[n - 1])}});
          continue;
        }
        std::size_t t = circle_face(n, i, j);
        parts.push_back(t == 0 ? Part{} : Part{{t, d.faces[n][i]}});
      }
      out.result.faces[n].push_back(wedge_map(wedges[n], wedges[n - 1], parts));
    }
    for (std::size_t i = 0; n < depth && i <= n; ++i) {
      std::vector<Part> parts{Part{{0, c.degeneracies[n][i]}}};
      for (std::size_t j = 1; j <= n; ++j) {
        parts.push_back(Part{{circle_degeneracy(i, j), d.degeneracies[n][i]}});
      }
      out.result.degeneracies[n].push_back(wedge_map(wedges[n], wedges[n + 1], parts));
    }
    out.inclusion.levels.push_back(wedges[n].injections[0]);
    std::vector<Part> proj{Part{}};
    for (std::size_t j = 1; j <= n; ++j) proj.push_back(Part{{j - 1, identity_morphism(d.levels[n])}});
    out.projection.levels.push_back(wedge_map(wedges[n], circle.wedges[n], proj));
  }
  out.circle = std::move(circle.x);
  IdentityReport ids = simplicial_identities_check(out.result);
  if (!ids.holds) throw Error("cofiber: simplicial identities fail: " + ids.failures.front());
  return out;
}

K0Group k0_simplicial(const SimplicialAssembler& x, Budget& budget) {
  if (x.levels.size() < 2) throw InvalidInput("k0_simplicial needs depth at least 1");
  const Assembler& x0 = x.levels[0];
  K0Group base = k0(x0, budget);
  const std::size_t n = base.generator_count();
  auto unit = [&](ObjIdx obj, IntVector& v, int sign) {
    if (x0.is_initial(obj)) return;
    v[*base.generator_index(x0.name(obj))] += sign;
  };
  IntMatrix rows;
  for (ObjIdx y : x.levels[1].noninitial_objects()) {
    IntVector v(n, 0);
    unit(x.faces[1][0](y), v, 1);
    unit(x.faces[1][1](y), v, -1);
    rows.push_back(std::move(v));
  }
  return cokernel_group(base, rows);
}

}  // namespace scissors
