// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/sink.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <map>
#include <numeric>

#include "scissors/errors.hpp"

namespace scissors {
namespace {

MorIdx comp(const Assembler& a, MorIdx first, MorIdx second) {
  return a.cat().compose_checked(first, second);
}

bool is_sink(const Assembler& a, ObjIdx s) {
  const auto& c = a.cat();
  for (ObjIdx x = 0; x < c.object_count(); ++x) {
    if (c.hom(x, s).empty()) return false;
  }
  return true;
}

void check_family(const SinkGroup& g, const SinkFamily& f) {
  const auto& a = g.assembler;
  const auto& c = a.cat();
  if (f.size() != c.object_count()) throw InvalidInput("sink family has the wrong size");
  if (f[g.sink] != c.identity(g.sink)) throw InvalidInput("sink family must send S to 1_S");
  for (ObjIdx x : a.noninitial_objects()) {
    if (f[x] >= c.morphism_count() || c.src(f[x]) != x || c.tgt(f[x]) != g.sink) {
      throw InvalidInput("sink family entry for " + a.name(x) + " is not a morphism to S");
    }
  }
}

}  // namespace

SinkConditions check_sink_conditions(const Assembler& a, Budget& budget,
                                     std::optional<ObjIdx> sink) {
  SinkConditions r;
  const auto& c = a.cat();
  if (sink) {
    if (a.is_initial(*sink) || !is_sink(a, *sink)) {
      r.s = false;
      r.violations.push_back("(S) " + a.name(*sink) + " is not a sink");
    } else {
      r.sink = sink;
    }
  } else {
    for (ObjIdx x : a.noninitial_objects()) {
      if (is_sink(a, x)) {
        r.sink = x;
        break;
      }
    }
    if (!r.sink) {
      r.s = false;
      r.violations.push_back("(S) no object receives a morphism from every object");
    }
  }
  CoverageEngine engine(a, &budget);
  for (MorIdx f = 0; f < c.morphism_count(); ++f) {
    if (a.is_initial(c.src(f))) continue;
    budget.tick("sink conditions");
    if (!is_epimorphism(c, f)) {
      r.ep = false;
      r.violations.push_back("(Ep) " + a.mor_name(f) + " is not an epimorphism");
    }
    if (!engine.covers(make_family(c.tgt(f), {f}))) {
      r.ep = false;
      r.violations.push_back("(Ep) {" + a.mor_name(f) + "} is not a covering family");
    }
  }
  for (ObjIdx x : a.noninitial_objects()) {
    auto in = a.noninitial_incoming(x);
    for (std::size_t i = 0; i < in.size(); ++i) {
      for (std::size_t j = i + 1; j < in.size(); ++j) {
        budget.tick("sink conditions");
        if (are_disjoint(a, in[i], in[j])) {
          r.d = false;
          r.violations.push_back("(D) " + a.mor_name(in[i]) + " and " + a.mor_name(in[j]) +
                                 " are disjoint");
        }
      }
    }
  }
  return r;
}

std::size_t SinkGroup::element_of(const Span& s) const {
  auto it = std::find(spans.begin(), spans.end(), s);
  if (it == spans.end()) throw InvalidInput("not a span to the sink: " + describe(s));
  return class_of_span[static_cast<std::size_t>(it - spans.begin())];
}

std::string SinkGroup::describe(const Span& s) const {
  return "[" + assembler.name(s.apex) + "," + assembler.mor_name(s.left) + "," +
         assembler.mor_name(s.right) + "]";
}

SinkGroup sink_group(const Assembler& a, Budget& budget, std::optional<ObjIdx> sink) {
  SinkConditions cond = check_sink_conditions(a, budget, sink);
  if (!cond.all()) throw HypothesisFailure("sink conditions fail: " + cond.violations.front());
  const auto& c = a.cat();
  SinkGroup g{a, *cond.sink, {}, {}, {}, {}, {}};
  const ObjIdx s = g.sink;
  for (ObjIdx x : a.noninitial_objects()) {
    for (MorIdx l : c.hom(x, s)) {
      for (MorIdx r : c.hom(x, s)) g.spans.push_back({x, l, r});
    }
  }
  const std::size_t n = g.spans.size();
  // Spans are equivalent when some noninitial apex maps compatibly to both.
  auto equivalent = [&](const Span& p, const Span& q) {
    for (ObjIdx z : a.noninitial_objects()) {
      for (MorIdx u : c.hom(z, p.apex)) {
        for (MorIdx v : c.hom(z, q.apex)) {
          budget.tick("span equivalence");
          if (comp(a, u, p.left) == comp(a, v, q.left) &&
              comp(a, u, p.right) == comp(a, v, q.right)) {
            return true;
          }
        }
      }
    }
    return false;
  };
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (std::size_t i = 0; i < n; ++i) sets.make_set(i);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (sets.find_set(i) != sets.find_set(j) && equivalent(g.spans[i], g.spans[j])) {
        sets.union_set(i, j);
      }
    }
  }
  const Span unit{s, c.identity(s), c.identity(s)};
  std::size_t unit_pos = static_cast<std::size_t>(
      std::find(g.spans.begin(), g.spans.end(), unit) - g.spans.begin());
  std::map<std::size_t, std::size_t> ids;
  ids[sets.find_set(unit_pos)] = 0;
  g.representatives.push_back(unit);
  g.class_of_span.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = ids.emplace(sets.find_set(i), g.representatives.size());
    if (fresh) g.representatives.push_back(g.spans[i]);
    g.class_of_span[i] = it->second;
  }
  const std::size_t order = g.representatives.size();
  for (const auto& rep : g.representatives) g.table.names.push_back(g.describe(rep));
  // Products from every pair of representing spans and every completing
  // square; all must agree.
  g.table.mul.assign(order, std::vector<std::size_t>(order, SIZE_MAX));
  for (std::size_t i = 0; i < n; ++i) {
    const Span& p = g.spans[i];
    for (std::size_t j = 0; j < n; ++j) {
      const Span& q = g.spans[j];
      std::size_t& cell = g.table.mul[g.class_of_span[i]][g.class_of_span[j]];
      bool any = false;
      for (ObjIdx x : a.noninitial_objects()) {
        for (MorIdx u : c.hom(x, p.apex)) {
          for (MorIdx v : c.hom(x, q.apex)) {
            budget.tick("sink products");
            if (comp(a, u, p.right) != comp(a, v, q.left)) continue;
            any = true;
            std::size_t k = g.element_of({x, comp(a, u, p.left), comp(a, v, q.right)});
            if (cell == SIZE_MAX) cell = k;
            if (cell != k) {
              throw HypothesisFailure("span product not well defined at " + g.describe(p) +
                                      " * " + g.describe(q));
            }
          }
        }
      }
      if (!any) {
        throw HypothesisFailure("no completing square for " + g.describe(p) + " * " +
                                g.describe(q));
      }
    }
  }
  if (!is_group(g.table)) throw HypothesisFailure("span classes do not form a group");
  g.inverse.resize(order);
  for (std::size_t x = 0; x < order; ++x) {
    const Span& rep = g.representatives[x];
    g.inverse[x] = g.element_of({rep.apex, rep.right, rep.left});
    if (g.table.mul[x][g.inverse[x]] != 0) {
      throw HypothesisFailure("swapped span is not the inverse of " + g.describe(rep));
    }
  }
  return g;
}

std::optional<std::vector<std::size_t>> find_group_isomorphism(const GroupTable& g,
                                                               const GroupTable& h) {
  const std::size_t n = g.order();
  if (n != h.order()) return std::nullopt;
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      for (std::size_t b = 0; b < n && ok; ++b) ok = perm[g.mul[a][b]] == h.mul[perm[a]][perm[b]];
    }
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

Assembler sink_sphere(const SinkGroup& g) {
  // sphere_group composes second ∘ first as mul[second][first]; the
  // projection needs π(h∘g) = π(g)·π(h), so use the opposite table.
  GroupTable op = g.table;
  for (std::size_t x = 0; x < g.order(); ++x) {
    for (std::size_t y = 0; y < g.order(); ++y) op.mul[x][y] = g.table.mul[y][x];
  }
  return sphere_group(op);
}

SinkFamily default_sink_family(const SinkGroup& g) {
  const auto& c = g.assembler.cat();
  SinkFamily f(c.object_count());
  for (ObjIdx x = 0; x < c.object_count(); ++x) f[x] = c.hom(x, g.sink).front();
  f[g.sink] = c.identity(g.sink);
  return f;
}

AssemblerMorphism sink_projection(const SinkGroup& g, const SinkFamily& f,
                                  const Assembler& sphere) {
  check_family(g, f);
  const Assembler& a = g.assembler;
  return make_morphism(
      a, sphere,
      [&](ObjIdx x) { return a.is_initial(x) ? sphere.name(sphere.initial()) : std::string("*"); },
      [&](MorIdx m) {
        ObjIdx src = a.cat().src(m), tgt = a.cat().tgt(m);
        std::size_t k = g.element_of({src, f[src], comp(a, m, f[tgt])});
        return k == 0 ? CategoryBuilder::identity_id("*") : g.table.names[k];
      });
}

ConjugationReport verify_sink_family_conjugation(const SinkGroup& g, const SinkFamily& f,
                                                 const SinkFamily& f_prime,
                                                 const AssemblerMorphism& psi,
                                                 const std::vector<MorIdx>& phi) {
  ConjugationReport r;
  const Assembler& a = g.assembler;
  const auto& c = a.cat();
  check_family(g, f);
  check_family(g, f_prime);
  if (psi.object_map.size() != c.object_count() || psi(g.sink) != g.sink) {
    r.hypothesis = false;
    r.failures.push_back("psi does not fix the sink");
    return r;
  }
  if (phi.size() != c.object_count()) throw InvalidInput("phi needs one entry per object");
  for (ObjIdx x : a.noninitial_objects()) {
    MorIdx p = phi[x];
    if (p >= c.morphism_count() || c.src(p) != x || c.tgt(p) != psi(x) || !a.is_iso(p)) {
      r.hypothesis = false;
      r.failures.push_back("phi_" + a.name(x) + " is not an isomorphism to psi(" + a.name(x) + ")");
      continue;
    }
    if (x == g.sink) continue;
    MorIdx via = comp(a, p, f[psi(x)]);
    if (via != f_prime[x]) {
      r.hypothesis = false;
      r.failures.push_back("square f'_A = f_psi(A) phi_A fails at " + a.name(x));
    }
    if (!a.is_iso(phi[g.sink]) || via != comp(a, f[x], phi[g.sink])) {
      r.hypothesis = false;
      r.failures.push_back("square f_psi(A) phi_A = phi_S f_A fails at " + a.name(x));
    }
  }
  if (!r.hypothesis) return r;
  const auto& mul = g.table.mul;
  std::size_t s = g.element_of({g.sink, c.identity(g.sink), phi[g.sink]});
  r.holds = true;
  for (MorIdx m = 0; m < c.morphism_count(); ++m) {
    ObjIdx src = c.src(m), tgt = c.tgt(m);
    if (a.is_initial(src)) continue;
    std::size_t lhs = g.element_of({src, f_prime[src], comp(a, m, f_prime[tgt])});
    std::size_t base = g.element_of({src, f[src], comp(a, m, f[tgt])});
    std::size_t rhs = mul[mul[g.inverse[s]][base]][s];
    if (lhs != rhs) {
      r.holds = false;
      r.failures.push_back("pi_F' differs from the conjugate of pi_F at " + a.mor_name(m));
    }
  }
  return r;
}

RestrictionReport restrict_to_object(const SinkGroup& g, ObjIdx u, Budget& budget,
                                     std::optional<SinkFamily> f) {
  const Assembler& a = g.assembler;
  const auto& c = a.cat();
  if (a.is_initial(u)) throw InvalidInput("restrict_to_object needs a noninitial object");
  ObjectSet over;
  for (ObjIdx x = 0; x < c.object_count(); ++x) {
    if (!c.hom(x, u).empty()) over.insert(x);
  }
  RestrictionReport r{full_subassembler(a, over), {}, {}, {}, {}, false, false, false, {}};
  const Assembler& sub = r.restricted.sub;
  const auto& incl = r.restricted.inclusion;
  const auto& sc = sub.cat();
  const ObjIdx su = sc.object(a.name(u));

  SinkFamily fam = f ? *f : default_sink_family(g);
  check_family(g, fam);
  const MorIdx fu = fam[u];
  r.family_u.assign(sc.object_count(), 0);
  for (ObjIdx x = 0; x < sc.object_count(); ++x) {
    auto candidates = sc.hom(x, su);
    if (x == su) {
      r.family_u[x] = sc.identity(su);
    } else if (!f) {
      r.family_u[x] = candidates.front();
    } else {
      auto it = std::find_if(candidates.begin(), candidates.end(), [&](MorIdx m) {
        return comp(a, incl.map(m), fu) == fam[incl(x)];
      });
      if (sub.is_initial(x)) it = candidates.begin();
      if (it == candidates.end()) {
        throw HypothesisFailure("family compatibility violation: " + sub.name(x));
      }
      r.family_u[x] = *it;
    }
    if (!f && !sub.is_initial(x)) {
      MorIdx extended = comp(a, incl.map(r.family_u[x]), fu);
      if (incl(x) == g.sink && extended != c.identity(g.sink)) {
        throw HypothesisFailure("family compatibility violation: " + a.name(g.sink));
      }
      fam[incl(x)] = extended;
    }
  }
  r.family = fam;

  r.group_u = sink_group(sub, budget, su);
  const SinkGroup& gu = *r.group_u;
  r.phi.resize(gu.order());
  for (std::size_t x = 0; x < gu.order(); ++x) {
    const Span& rep = gu.representatives[x];
    r.phi[x] = g.element_of({incl(rep.apex), comp(a, incl.map(rep.left), fu),
                             comp(a, incl.map(rep.right), fu)});
  }
  r.homomorphism = true;
  for (std::size_t x = 0; x < gu.order(); ++x) {
    for (std::size_t y = 0; y < gu.order(); ++y) {
      if (r.phi[gu.table.mul[x][y]] != g.table.mul[r.phi[x]][r.phi[y]]) {
        r.homomorphism = false;
        r.failures.push_back("phi is not multiplicative at " + gu.table.names[x] + ", " +
                             gu.table.names[y]);
      }
    }
  }
  std::vector<std::size_t> sorted = r.phi;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = gu.order() == g.order() &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!r.bijective) r.failures.push_back("phi is not a bijection");
  r.square_commutes = true;
  for (MorIdx m = 0; m < sc.morphism_count(); ++m) {
    ObjIdx src = sc.src(m), tgt = sc.tgt(m);
    if (sub.is_initial(src)) continue;
    MorIdx big = incl.map(m);
    std::size_t down_right = g.element_of({incl(src), fam[incl(src)], comp(a, big, fam[incl(tgt)])});
    std::size_t right_down =
        r.phi[gu.element_of({src, r.family_u[src], comp(sub, m, r.family_u[tgt])})];
    if (down_right != right_down) {
      r.square_commutes = false;
      r.failures.push_back("restriction square fails at " + sub.mor_name(m));
    }
  }
  return r;
}

}  // namespace scissors
