// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/morphism.hpp"

#include "scissors/errors.hpp"

namespace scissors {

MorphismReport check_assembler_morphism(const AssemblerMorphism& m, Budget& budget) {
  MorphismReport report;
  const auto& s = m.source.cat();
  const auto& t = m.target.cat();
  auto& v = report.violations;
  if (m.object_map.size() != s.object_count() || m.morphism_map.size() != s.morphism_count()) {
    v.push_back("object or morphism map is not total");
    return report;
  }
  for (ObjIdx a = 0; a < s.object_count(); ++a) {
    if (m.object_map[a] >= t.object_count()) {
      v.push_back("object " + s.object_name(a) + " maps outside the target");
      return report;
    }
  }
  for (MorIdx f = 0; f < s.morphism_count(); ++f) {
    MorIdx g = m.morphism_map[f];
    if (g >= t.morphism_count()) {
      v.push_back("morphism " + s.morphism_name(f) + " maps outside the target");
      return report;
    }
    if (t.src(g) != m(s.src(f)) || t.tgt(g) != m(s.tgt(f))) {
      v.push_back("morphism " + s.morphism_name(f) + " -> " + t.morphism_name(g) +
                  " does not respect source/target");
    }
  }
  for (ObjIdx a = 0; a < s.object_count(); ++a) {
    if (m.map(s.identity(a)) != t.identity(m(a))) {
      v.push_back("identity of " + s.object_name(a) + " not preserved");
    }
  }
  if (!v.empty()) return report;
  for (const auto& e : s.composition_entries()) {
    auto image = t.compose(m.map(e.first), m.map(e.second));
    if (image != m.map(e.result)) {
      v.push_back("composition (" + s.morphism_name(e.first) + "," + s.morphism_name(e.second) +
                  ") not preserved");
    }
  }
  if (m(m.source.initial()) != m.target.initial()) {
    v.push_back("initial object not preserved");
  }
  if (!v.empty()) return report;

  try {
    CoverageEngine target_engine(m.target, &budget);
    CoverageEngine source_engine(m.source, &budget);
    auto check_family = [&](const CoverFamily& fam) {
      std::vector<MorIdx> image;
      for (MorIdx f : fam.members) image.push_back(m.map(f));
      CoverFamily img = make_family(m(fam.target), std::move(image));
      if (!target_engine.covers(img)) {
        v.push_back("continuity violated: " + describe(m.source, fam) + " maps to " +
                    describe(m.target, img));
      }
    };
    for (const auto& fam : m.source.declared_covers()) check_family(fam);
    for (ObjIdx a : m.source.noninitial_objects()) {
      for (const auto& fam : search_disjoint_covers(m.source, a, CoverSearch{}, source_engine,
                                                    budget)) {
        check_family(fam);
      }
    }
  } catch (const BudgetExceeded&) {
    report.budget_exhausted = true;
  }

  for (ObjIdx a : m.source.noninitial_objects()) {
    auto in = m.source.noninitial_incoming(a);
    for (std::size_t i = 0; i < in.size(); ++i) {
      for (std::size_t j = i + 1; j < in.size(); ++j) {
        if (!are_disjoint(m.source, in[i], in[j])) continue;
        MorIdx fi = m.map(in[i]), fj = m.map(in[j]);
        if (m.target.is_initial(t.src(fi)) || m.target.is_initial(t.src(fj))) continue;
        if (!are_disjoint(m.target, fi, fj)) {
          v.push_back("disjointness violated: (" + s.morphism_name(in[i]) + "," +
                      s.morphism_name(in[j]) + ")");
        }
      }
    }
  }
  return report;
}

AssemblerMorphism identity_morphism(const Assembler& a) {
  AssemblerMorphism m{a, a, {}, {}};
  m.object_map.resize(a.cat().object_count());
  m.morphism_map.resize(a.cat().morphism_count());
  for (ObjIdx x = 0; x < m.object_map.size(); ++x) m.object_map[x] = x;
  for (MorIdx f = 0; f < m.morphism_map.size(); ++f) m.morphism_map[f] = f;
  return m;
}

AssemblerMorphism compose_morphisms(const AssemblerMorphism& first,
                                    const AssemblerMorphism& second) {
  AssemblerMorphism m{first.source, second.target, {}, {}};
  for (ObjIdx x : first.object_map) m.object_map.push_back(second(x));
  for (MorIdx f : first.morphism_map) m.morphism_map.push_back(second.map(f));
  return m;
}

AssemblerMorphism make_morphism(const Assembler& source, const Assembler& target,
                                const std::function<std::string(ObjIdx)>& object_name,
                                const std::function<std::string(MorIdx)>& morphism_name) {
  const auto& s = source.cat();
  const auto& t = target.cat();
  AssemblerMorphism m{source, target, {}, {}};
  for (ObjIdx a = 0; a < s.object_count(); ++a) {
    m.object_map.push_back(source.is_initial(a) ? target.initial() : t.object(object_name(a)));
  }
  for (MorIdx f = 0; f < s.morphism_count(); ++f) {
    ObjIdx src = m.object_map[s.src(f)], tgt = m.object_map[s.tgt(f)];
    if (s.is_identity(f)) {
      m.morphism_map.push_back(t.identity(src));
    } else if (target.is_initial(src)) {
      auto h = t.hom(src, tgt);
      if (h.size() != 1) throw InvalidInput("target has no unique morphism out of its initial object");
      m.morphism_map.push_back(h.front());
    } else {
      m.morphism_map.push_back(t.morphism_index(morphism_name(f)));
    }
  }
  return m;
}

AssemblerMorphism morphism_from_maps(const Assembler& source, const Assembler& target,
                                     const std::map<std::string, std::string>& objects,
                                     const std::map<std::string, std::string>& morphisms) {
  auto lookup = [](const std::map<std::string, std::string>& table, const std::string& key) {
    auto it = table.find(key);
    return it == table.end() ? key : it->second;
  };
  return make_morphism(
      source, target, [&](ObjIdx a) { return lookup(objects, source.name(a)); },
      [&](MorIdx f) { return lookup(morphisms, source.mor_name(f)); });
}

AssemblerMorphism inclusion_by_name(const Assembler& source, const Assembler& target) {
  return make_morphism(
      source, target, [&](ObjIdx a) { return source.name(a); },
      [&](MorIdx f) { return source.mor_name(f); });
}

}  // namespace scissors
