// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/constructions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "scissors/errors.hpp"

namespace scissors {
namespace {

enum class OutsideMembers { kDrop, kSkipCover };

bool is_plain(const Assembler& a, MorIdx f) {
  return !a.cat().is_identity(f) && !a.is_initial(a.cat().src(f));
}

// Copies the objects selected by `keep` (renamed with `prefix`), the
// morphisms and composites among them, and the declared covers.
void copy_part(AssemblerBuilder& b, const Assembler& a, const std::string& prefix,
               const std::function<bool(ObjIdx)>& keep, OutsideMembers outside) {
  const auto& c = a.cat();
  auto kept = [&](ObjIdx x) { return !a.is_initial(x) && keep(x); };
  auto name = [&](MorIdx f) {
    if (c.is_identity(f)) return CategoryBuilder::identity_id(prefix + a.name(c.src(f)));
    return prefix + a.mor_name(f);
  };
  for (ObjIdx x : a.noninitial_objects()) {
    if (kept(x)) b.add_object(prefix + a.name(x));
  }
  for (MorIdx f = 0; f < c.morphism_count(); ++f) {
    if (is_plain(a, f) && kept(c.src(f)) && kept(c.tgt(f))) {
      b.add_morphism(prefix + a.mor_name(f), prefix + a.name(c.src(f)),
                     prefix + a.name(c.tgt(f)));
    }
  }
  for (const auto& e : c.composition_entries()) {
    if (!is_plain(a, e.first) || !is_plain(a, e.second)) continue;
    if (!kept(c.src(e.first)) || !kept(c.tgt(e.second))) continue;
    b.set_composite(name(e.first), name(e.second), name(e.result));
  }
  for (const auto& fam : a.declared_covers()) {
    if (!kept(fam.target)) continue;
    std::vector<std::string> members;
    bool skip = false;
    for (MorIdx f : fam.members) {
      ObjIdx src = c.src(f);
      if (a.is_initial(src)) continue;
      if (!kept(src)) {
        skip = outside == OutsideMembers::kSkipCover;
        continue;
      }
      members.push_back(name(f));
    }
    if (!skip) b.add_cover(prefix + a.name(fam.target), std::move(members));
  }
}

}  // namespace

Coproduct coproduct(const std::vector<Assembler>& summands, const std::vector<std::string>& tags) {
  if (summands.size() != tags.size()) throw InvalidInput("coproduct needs one tag per summand");
  AssemblerBuilder b(kInitialName);
  for (std::size_t i = 0; i < summands.size(); ++i) {
    copy_part(b, summands[i], tags[i] + ":", [](ObjIdx) { return true; },
              OutsideMembers::kDrop);
  }
  Coproduct out{b.build(), {}};
  for (std::size_t i = 0; i < summands.size(); ++i) {
    const Assembler& s = summands[i];
    const std::string prefix = tags[i] + ":";
    out.injections.push_back(make_morphism(
        s, out.result, [&](ObjIdx x) { return prefix + s.name(x); },
        [&](MorIdx f) { return prefix + s.mor_name(f); }));
  }
  return out;
}

Coproduct coproduct(const std::vector<Assembler>& summands) {
  std::vector<std::string> tags;
  for (std::size_t i = 1; i <= summands.size(); ++i) tags.push_back(std::to_string(i));
  return coproduct(summands, tags);
}

Product product(const Assembler& a, const Assembler& b, Budget& budget) {
  const auto& ca = a.cat();
  const auto& cb = b.cat();
  auto obj_name = [&](ObjIdx x, ObjIdx y) { return "(" + a.name(x) + "," + b.name(y) + ")"; };
  auto mor_name = [&](MorIdx f, MorIdx g) {
    if (ca.is_identity(f) && cb.is_identity(g)) {
      return CategoryBuilder::identity_id(obj_name(ca.src(f), cb.src(g)));
    }
    return "(" + a.mor_name(f) + "," + b.mor_name(g) + ")";
  };
  auto from_initial = [&](MorIdx f, MorIdx g) {
    return a.is_initial(ca.src(f)) && b.is_initial(cb.src(g));
  };

  AssemblerBuilder builder(obj_name(a.initial(), b.initial()));
  for (ObjIdx x = 0; x < ca.object_count(); ++x) {
    for (ObjIdx y = 0; y < cb.object_count(); ++y) {
      budget.tick("product");
      if (!(a.is_initial(x) && b.is_initial(y))) builder.add_object(obj_name(x, y));
    }
  }
  for (MorIdx f = 0; f < ca.morphism_count(); ++f) {
    for (MorIdx g = 0; g < cb.morphism_count(); ++g) {
      budget.tick("product");
      if (from_initial(f, g) || (ca.is_identity(f) && cb.is_identity(g))) continue;
      builder.add_morphism(mor_name(f, g), obj_name(ca.src(f), cb.src(g)),
                           obj_name(ca.tgt(f), cb.tgt(g)));
    }
  }
  for (const auto& e1 : ca.composition_entries()) {
    for (const auto& e2 : cb.composition_entries()) {
      budget.tick("product");
      if (from_initial(e1.first, e2.first)) continue;
      if (ca.is_identity(e1.first) && cb.is_identity(e2.first)) continue;
      if (ca.is_identity(e1.second) && cb.is_identity(e2.second)) continue;
      builder.set_composite(mor_name(e1.first, e2.first), mor_name(e1.second, e2.second),
                            mor_name(e1.result, e2.result));
    }
  }

  // Minimal covering families, found by a subset scan in increasing size.
  const Assembler bare = builder.build();
  const auto& pc = bare.cat();
  std::vector<std::pair<ObjIdx, ObjIdx>> coords(pc.object_count());
  std::vector<std::pair<MorIdx, MorIdx>> parts(pc.morphism_count());
  for (ObjIdx x = 0; x < ca.object_count(); ++x) {
    for (ObjIdx y = 0; y < cb.object_count(); ++y) coords[pc.object(obj_name(x, y))] = {x, y};
  }
  for (MorIdx f = 0; f < ca.morphism_count(); ++f) {
    for (MorIdx g = 0; g < cb.morphism_count(); ++g) {
      MorIdx p = from_initial(f, g) ? pc.hom(bare.initial(), pc.object(obj_name(ca.tgt(f), cb.tgt(g)))).front()
                                    : pc.morphism_index(mor_name(f, g));
      parts[p] = {f, g};
    }
  }
  CoverageEngine ea(a, &budget), eb(b, &budget);
  constexpr std::size_t kMaxCandidates = 24;
  for (ObjIdx z : bare.noninitial_objects()) {
    std::vector<MorIdx> cand;
    for (MorIdx p : bare.noninitial_incoming(z)) {
      if (!bare.is_iso(p)) cand.push_back(p);
    }
    if (cand.size() > kMaxCandidates) throw BudgetExceeded("product coverage");
    auto [x, y] = coords[z];
    std::vector<std::uint64_t> minimal;
    const std::uint64_t full = std::uint64_t{1} << cand.size();
    std::vector<std::uint64_t> masks(full - 1);
    std::iota(masks.begin(), masks.end(), std::uint64_t{1});
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t l, std::uint64_t r) {
      return __builtin_popcountll(l) < __builtin_popcountll(r);
    });
    for (std::uint64_t mask : masks) {
      budget.tick("product coverage");
      if (std::any_of(minimal.begin(), minimal.end(),
                      [&](std::uint64_t m) { return (m & mask) == m; })) {
        continue;
      }
      Sieve sa = a.empty_sieve(x), sb = b.empty_sieve(y);
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        sa |= a.principal_sieve(parts[cand[i]].first);
        sb |= b.principal_sieve(parts[cand[i]].second);
      }
      if (ea.covers(x, sa) && eb.covers(y, sb)) minimal.push_back(mask);
    }
    for (std::uint64_t mask : minimal) {
      std::vector<std::string> members;
      for (std::size_t i = 0; i < cand.size(); ++i) {
        if (mask >> i & 1) members.push_back(pc.morphism_name(cand[i]));
      }
      builder.add_cover(pc.object_name(z), std::move(members));
    }
  }

  Assembler result = builder.build();
  auto projection = [&](const Assembler& target, bool first) {
    return make_morphism(
        result, target,
        [&](ObjIdx z) {
          auto [x, y] = coords[pc.object(result.name(z))];
          return first ? a.name(x) : b.name(y);
        },
        [&](MorIdx p) {
          auto [f, g] = parts[pc.morphism_index(result.mor_name(p))];
          return first ? a.mor_name(f) : b.mor_name(g);
        });
  };
  AssemblerMorphism p1 = projection(a, true);
  AssemblerMorphism p2 = projection(b, false);
  return Product{std::move(result), std::move(p1), std::move(p2)};
}

Coproduct smash_with_pointed_set(const std::vector<std::string>& labels, const Assembler& c) {
  return coproduct(std::vector<Assembler>(labels.size(), c), labels);
}

Coproduct smash_with_pointed_set(std::size_t n, const Assembler& c) {
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  return smash_with_pointed_set(labels, c);
}

ObjectSet object_set(const Assembler& c, const std::vector<std::string>& names) {
  ObjectSet out;
  for (const auto& n : names) out.insert(c.cat().object(n));
  return out;
}

SieveWitness is_sieve(const Assembler& c, const ObjectSet& d) {
  SieveWitness w;
  const auto& cat = c.cat();
  for (ObjIdx x : d) w.members.push_back(c.name(x));
  if (!d.contains(c.initial())) {
    w.closure_violations.push_back("sieve does not contain the initial object " +
                                   c.name(c.initial()));
  }
  for (MorIdx f = 0; f < cat.morphism_count(); ++f) {
    if (d.contains(cat.tgt(f)) && !d.contains(cat.src(f))) {
      w.closure_violations.push_back(c.mor_name(f) + ": " + c.name(cat.src(f)) + " -> " +
                                     c.name(cat.tgt(f)) + " enters the sieve from outside");
    }
  }
  return w;
}

ComplementReport has_complements(const Assembler& c, ObjIdx a, Budget& budget) {
  if (c.is_initial(a)) throw InvalidInput("complements are asked of a noninitial object");
  ComplementReport report;
  CoverageEngine engine(c, &budget);
  for (MorIdx f : c.cat().outgoing(a)) {
    CoverSearch opt;
    opt.forced = {f};
    opt.first_only = true;
    auto found = search_disjoint_covers(c, c.cat().tgt(f), opt, engine, budget);
    if (found.empty()) {
      report.holds = false;
      report.failures.push_back(f);
    } else {
      report.witnesses.emplace_back(f, std::move(found.front()));
    }
  }
  return report;
}

Subassembler full_subassembler(const Assembler& c, const ObjectSet& objects) {
  AssemblerBuilder b(c.name(c.initial()));
  copy_part(b, c, "", [&](ObjIdx x) { return objects.contains(x); }, OutsideMembers::kSkipCover);
  Assembler sub = b.build();
  AssemblerMorphism inclusion = inclusion_by_name(sub, c);
  return Subassembler{std::move(sub), std::move(inclusion)};
}

SubassemblerReport is_subassembler(const Subassembler& s, Budget& budget) {
  SubassemblerReport report;
  report.axioms = check_axioms(s.sub, budget);
  if (!report.axioms.all_hold()) report.reasons.push_back("subcategory fails the assembler axioms");
  report.inclusion = check_assembler_morphism(s.inclusion, budget);
  for (const auto& v : report.inclusion.violations) report.reasons.push_back("inclusion: " + v);
  if (report.inclusion.budget_exhausted) report.reasons.push_back("inclusion: budget exhausted");
  return report;
}

Quotient quotient(const Assembler& c, const ObjectSet& d) {
  if (auto w = is_sieve(c, d); !w.valid()) {
    throw HypothesisFailure("not a sieve: " + w.closure_violations.front());
  }
  AssemblerBuilder b(c.name(c.initial()));
  copy_part(b, c, "", [&](ObjIdx x) { return !d.contains(x); }, OutsideMembers::kDrop);
  Assembler result = b.build();
  AssemblerMorphism projection = make_morphism(
      c, result,
      [&](ObjIdx x) { return d.contains(x) ? result.name(result.initial()) : c.name(x); },
      [&](MorIdx f) { return c.mor_name(f); });
  return Quotient{std::move(result), std::move(projection)};
}

bool completes_to_cover(const Assembler& c, const ObjectSet& d, const CoverFamily& family,
                        CoverageEngine& engine) {
  // Adding morphisms only enlarges the sieve, so the largest completion
  // decides.
  Sieve s = c.sieve_of(family.target, family.members);
  const auto in = c.cat().incoming(family.target);
  for (std::size_t k = 0; k < in.size(); ++k) {
    if (d.contains(c.cat().src(in[k]))) s.set(k);
  }
  return engine.covers(family.target, s);
}

}  // namespace scissors
