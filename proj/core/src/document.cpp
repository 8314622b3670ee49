// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/document.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "json.hpp"
#include "scissors/errors.hpp"

namespace scissors {
namespace {

using nlohmann::json;

const json& field(const json& j, const char* key, json::value_t type) {
  auto it = j.find(key);
  if (it == j.end()) throw FormatError(std::string("missing key \"") + key + "\"");
  bool ok = it->type() == type ||
            (type == json::value_t::string && it->is_string()) ||
            (type == json::value_t::array && it->is_array());
  if (!ok) throw FormatError(std::string("key \"") + key + "\" has the wrong type");
  return *it;
}

std::string str(const json& j, const char* key) {
  return field(j, key, json::value_t::string).get<std::string>();
}

std::vector<std::string> strings(const json& j, const char* what) {
  if (!j.is_array()) throw FormatError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw FormatError(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::map<std::string, std::string> string_map(const json& j, const char* what) {
  if (!j.is_object()) throw FormatError(std::string(what) + " must be an object");
  std::map<std::string, std::string> out;
  for (const auto& [k, v] : j.items()) {
    if (!v.is_string()) throw FormatError(std::string(what) + " values must be strings");
    out[k] = v.get<std::string>();
  }
  return out;
}

bool is_user_morphism(const Assembler& a, MorIdx f) {
  const auto& c = a.cat();
  return !c.is_identity(f) && !a.is_initial(c.src(f));
}

}  // namespace

AssemblerDocument parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FormatError("document must be a JSON object");
  const std::string initial = str(doc, "initial");
  AssemblerBuilder b(initial);
  for (const auto& name : strings(field(doc, "objects", json::value_t::array), "objects")) {
    if (name != initial) b.add_object(name);
  }
  for (const auto& m : field(doc, "morphisms", json::value_t::array)) {
    if (!m.is_object()) throw FormatError("morphism entries must be objects");
    b.add_morphism(str(m, "id"), str(m, "src"), str(m, "tgt"));
  }
  for (const auto& e : field(doc, "composition", json::value_t::array)) {
    if (!e.is_object()) throw FormatError("composition entries must be objects");
    b.set_composite(str(e, "first"), str(e, "second"), str(e, "result"));
  }
  for (const auto& cov : field(doc, "covers", json::value_t::array)) {
    if (!cov.is_object()) throw FormatError("cover entries must be objects");
    const std::string target = str(cov, "target");
    auto family = strings(field(cov, "family", json::value_t::array), "family");
    for (const auto& id : family) {
      if (!b.has_morphism(id)) {
        throw InvalidInput("cover of " + target + " refers to unknown morphism '" + id + "'");
      }
    }
    b.add_cover(target, std::move(family));
  }
  AssemblerDocument out{b.build(), {}, {}};
  if (auto it = doc.find("sieves"); it != doc.end()) {
    if (!it->is_object()) throw FormatError("\"sieves\" must be an object");
    for (const auto& [name, members] : it->items()) {
      out.sieves[name] = object_set(out.assembler, strings(members, "sieve"));
    }
  }
  if (auto it = doc.find("morphism_maps"); it != doc.end()) {
    if (!it->is_object()) throw FormatError("\"morphism_maps\" must be an object");
    for (const auto& [name, spec] : it->items()) {
      if (!spec.is_object()) throw FormatError("morphism map entries must be objects");
      MorphismMapSpec m;
      if (spec.contains("objects")) m.objects = string_map(spec["objects"], "objects map");
      if (spec.contains("morphisms")) m.morphisms = string_map(spec["morphisms"], "morphisms map");
      out.morphism_maps[name] = std::move(m);
    }
  }
  return out;
}

AssemblerDocument load_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

std::string emit_document(const Assembler& a, const std::map<std::string, ObjectSet>& sieves,
                          const std::map<std::string, MorphismMapSpec>& maps) {
  const auto& c = a.cat();
  json doc = json::object();
  doc["initial"] = a.name(a.initial());
  json objects = json::array();
  for (ObjIdx x = 0; x < c.object_count(); ++x) objects.push_back(a.name(x));
  doc["objects"] = objects;
  json morphisms = json::array();
  for (MorIdx f = 0; f < c.morphism_count(); ++f) {
    if (!is_user_morphism(a, f)) continue;
    morphisms.push_back({{"id", a.mor_name(f)}, {"src", a.name(c.src(f))}, {"tgt", a.name(c.tgt(f))}});
  }
  doc["morphisms"] = morphisms;
  json composition = json::array();
  for (const auto& e : c.composition_entries()) {
    if (!is_user_morphism(a, e.first) || !is_user_morphism(a, e.second)) continue;
    composition.push_back({{"first", a.mor_name(e.first)},
                           {"second", a.mor_name(e.second)},
                           {"result", a.mor_name(e.result)}});
  }
  doc["composition"] = composition;
  json covers = json::array();
  for (const auto& fam : a.declared_covers()) {
    json family = json::array();
    for (MorIdx f : fam.members) {
      if (!a.is_initial(c.src(f))) family.push_back(a.mor_name(f));
    }
    covers.push_back({{"target", a.name(fam.target)}, {"family", family}});
  }
  doc["covers"] = covers;
  if (!sieves.empty()) {
    json s = json::object();
    for (const auto& [name, set] : sieves) {
      json members = json::array();
      for (ObjIdx x : set) members.push_back(a.name(x));
      s[name] = members;
    }
    doc["sieves"] = s;
  }
  if (!maps.empty()) {
    json m = json::object();
    for (const auto& [name, spec] : maps) m[name] = {{"objects", spec.objects}, {"morphisms", spec.morphisms}};
    doc["morphism_maps"] = m;
  }
  return doc.dump(2) + "\n";
}

void save_document(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw FormatError("cannot write " + path);
  out << text;
  if (!out) throw FormatError("cannot write " + path);
}

bool structurally_equal(const Assembler& a, const Assembler& b) {
  const auto& ca = a.cat();
  const auto& cb = b.cat();
  if (ca.object_names() != cb.object_names()) return false;
  if (a.name(a.initial()) != b.name(b.initial())) return false;
  if (ca.morphism_count() != cb.morphism_count()) return false;
  for (MorIdx f = 0; f < ca.morphism_count(); ++f) {
    if (a.mor_name(f) != b.mor_name(f) || ca.src(f) != cb.src(f) || ca.tgt(f) != cb.tgt(f)) {
      return false;
    }
  }
  using Entry = std::tuple<std::string, std::string, std::string>;
  auto entries = [](const Assembler& x) {
    std::set<Entry> out;
    for (const auto& e : x.cat().composition_entries()) {
      out.emplace(x.mor_name(e.first), x.mor_name(e.second), x.mor_name(e.result));
    }
    return out;
  };
  if (entries(a) != entries(b)) return false;
  auto covers = [](const Assembler& x) {
    std::set<std::pair<std::string, std::set<std::string>>> out;
    for (const auto& fam : x.declared_covers()) {
      std::set<std::string> names;
      for (MorIdx f : fam.members) {
        if (!x.is_initial(x.cat().src(f))) names.insert(x.mor_name(f));
      }
      out.emplace(x.name(fam.target), std::move(names));
    }
    return out;
  };
  return covers(a) == covers(b);
}

}  // namespace scissors
