// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/category.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "scissors/errors.hpp"

namespace scissors {

std::optional<ObjIdx> FiniteCategory::find_object(std::string_view name) const {
  auto it = object_lookup_.find(std::string(name));
  if (it == object_lookup_.end()) return std::nullopt;
  return it->second;
}

std::optional<MorIdx> FiniteCategory::find_morphism(std::string_view id) const {
  auto it = morphism_lookup_.find(std::string(id));
  if (it == morphism_lookup_.end()) return std::nullopt;
  return it->second;
}

ObjIdx FiniteCategory::object(std::string_view name) const {
  if (auto a = find_object(name)) return *a;
  throw InvalidInput("unknown object '" + std::string(name) + "'");
}

MorIdx FiniteCategory::morphism_index(std::string_view id) const {
  if (auto f = find_morphism(id)) return *f;
  throw InvalidInput("unknown morphism '" + std::string(id) + "'");
}

std::optional<MorIdx> FiniteCategory::compose(MorIdx first, MorIdx second) const {
  auto it = table_.find(key(first, second));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

MorIdx FiniteCategory::compose_checked(MorIdx first, MorIdx second) const {
  if (auto r = compose(first, second)) return *r;
  throw InvalidInput("no composite for (" + morphism_name(first) + "," +
                     morphism_name(second) + ")");
}

std::span<const MorIdx> FiniteCategory::hom(ObjIdx a, ObjIdx b) const {
  auto it = homs_.find(key(a, b));
  if (it == homs_.end()) return {};
  return it->second;
}

void FiniteCategory::index() {
  const auto n = objects_.size();
  incoming_.assign(n, {});
  outgoing_.assign(n, {});
  homs_.clear();
  local_index_.assign(morphisms_.size(), kNoIndex);
  for (MorIdx f = 0; f < morphisms_.size(); ++f) {
    const auto& m = morphisms_[f];
    local_index_[f] = static_cast<std::uint32_t>(incoming_[m.tgt].size());
    incoming_[m.tgt].push_back(f);
    outgoing_[m.src].push_back(f);
    homs_[key(m.src, m.tgt)].push_back(f);
  }
  postcompose_.assign(morphisms_.size(), {});
  for (MorIdx f = 0; f < morphisms_.size(); ++f) {
    const auto& m = morphisms_[f];
    auto& row = postcompose_[f];
    row.reserve(incoming_[m.src].size());
    for (MorIdx g : incoming_[m.src]) {
      auto r = compose(g, f);
      row.push_back(r && morphisms_[*r].tgt == m.tgt ? local_index_[*r] : kNoIndex);
    }
  }
}

void CategoryBuilder::add_object(std::string name) {
  if (object_pos_.contains(name)) throw InvalidInput("duplicate object '" + name + "'");
  object_pos_.emplace(name, objects_.size());
  std::string id = identity_id(name);
  if (morphism_pos_.contains(id)) throw InvalidInput("duplicate morphism '" + id + "'");
  morphism_pos_.emplace(id, morphisms_.size());
  morphisms_.push_back({id, name, name});
  objects_.push_back(std::move(name));
}

void CategoryBuilder::add_morphism(std::string id, std::string_view src,
                                   std::string_view tgt) {
  if (morphism_pos_.contains(id)) throw InvalidInput("duplicate morphism '" + id + "'");
  if (!has_object(src) || !has_object(tgt)) {
    throw InvalidInput("morphism '" + id + "' refers to an unknown object");
  }
  morphism_pos_.emplace(id, morphisms_.size());
  morphisms_.push_back({std::move(id), std::string(src), std::string(tgt)});
}

void CategoryBuilder::set_composite(std::string_view first, std::string_view second,
                                    std::string_view result) {
  composites_.push_back({std::string(first), std::string(second), std::string(result)});
}

bool CategoryBuilder::has_object(std::string_view name) const {
  return object_pos_.contains(std::string(name));
}

bool CategoryBuilder::has_morphism(std::string_view id) const {
  return morphism_pos_.contains(std::string(id));
}

const std::string& CategoryBuilder::source_of(std::string_view id) const {
  auto it = morphism_pos_.find(std::string(id));
  if (it == morphism_pos_.end()) throw InvalidInput("unknown morphism '" + std::string(id) + "'");
  return morphisms_[it->second].src;
}

const std::string& CategoryBuilder::target_of(std::string_view id) const {
  auto it = morphism_pos_.find(std::string(id));
  if (it == morphism_pos_.end()) throw InvalidInput("unknown morphism '" + std::string(id) + "'");
  return morphisms_[it->second].tgt;
}

FiniteCategory CategoryBuilder::build() const {
  FiniteCategory cat;
  cat.objects_ = objects_;
  std::sort(cat.objects_.begin(), cat.objects_.end());
  for (ObjIdx a = 0; a < cat.objects_.size(); ++a) cat.object_lookup_.emplace(cat.objects_[a], a);

  std::vector<std::size_t> order(morphisms_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return morphisms_[x].id < morphisms_[y].id; });
  cat.morphisms_.reserve(morphisms_.size());
  for (std::size_t pos : order) {
    const auto& m = morphisms_[pos];
    cat.morphism_lookup_.emplace(m.id, static_cast<MorIdx>(cat.morphisms_.size()));
    cat.morphisms_.push_back({m.id, cat.object_lookup_.at(m.src), cat.object_lookup_.at(m.tgt)});
  }
  cat.identities_.resize(cat.objects_.size());
  for (ObjIdx a = 0; a < cat.objects_.size(); ++a) {
    cat.identities_[a] = cat.morphism_lookup_.at(identity_id(cat.objects_[a]));
  }

  auto lookup = [&](const std::string& id) {
    auto it = cat.morphism_lookup_.find(id);
    if (it == cat.morphism_lookup_.end()) {
      throw InvalidInput("composition refers to unknown morphism '" + id + "'");
    }
    return it->second;
  };
  for (const auto& c : composites_) {
    MorIdx first = lookup(c.first), second = lookup(c.second), result = lookup(c.result);
    auto [it, inserted] = cat.table_.emplace(FiniteCategory::key(first, second), result);
    if (!inserted && it->second != result) {
      throw InvalidInput("conflicting composites for (" + c.first + "," + c.second + ")");
    }
  }
  for (MorIdx f = 0; f < cat.morphisms_.size(); ++f) {
    const auto& m = cat.morphisms_[f];
    cat.table_.emplace(FiniteCategory::key(cat.identities_[m.src], f), f);
    cat.table_.emplace(FiniteCategory::key(f, cat.identities_[m.tgt]), f);
  }
  cat.entries_.reserve(cat.table_.size());
  for (const auto& [k, r] : cat.table_) {
    cat.entries_.push_back({static_cast<MorIdx>(k >> 32), static_cast<MorIdx>(k & 0xffffffffu), r});
  }
  std::sort(cat.entries_.begin(), cat.entries_.end(), [](const auto& x, const auto& y) {
    return std::tie(x.first, x.second) < std::tie(y.first, y.second);
  });
  cat.index();
  return cat;
}

ValidationReport validate_category(const FiniteCategory& cat) {
  ValidationReport report;
  auto name = [&](MorIdx f) -> const std::string& { return cat.morphism_name(f); };

  for (ObjIdx a = 0; a < cat.object_count(); ++a) {
    MorIdx id = cat.identity(a);
    if (cat.src(id) != a || cat.tgt(id) != a) {
      report.violations.push_back("identity " + name(id) + " is not an endomorphism of " +
                                  cat.object_name(a));
    }
  }
  for (const auto& e : cat.composition_entries()) {
    if (cat.tgt(e.first) != cat.src(e.second)) {
      report.violations.push_back("composite defined on non-composable pair (" + name(e.first) +
                                  "," + name(e.second) + ")");
    } else if (cat.src(e.result) != cat.src(e.first) || cat.tgt(e.result) != cat.tgt(e.second)) {
      report.violations.push_back("composite of (" + name(e.first) + "," + name(e.second) +
                                  ") has wrong source/target");
    }
  }
  if (!report.ok()) return report;

  for (MorIdx f = 0; f < cat.morphism_count(); ++f) {
    for (MorIdx g : cat.outgoing(cat.tgt(f))) {
      if (!cat.compose(f, g)) {
        report.violations.push_back("incomplete composition (" + name(f) + "," + name(g) + ")");
      }
    }
  }
  if (!report.ok()) return report;

  for (MorIdx f = 0; f < cat.morphism_count(); ++f) {
    if (*cat.compose(cat.identity(cat.src(f)), f) != f ||
        *cat.compose(f, cat.identity(cat.tgt(f))) != f) {
      report.violations.push_back("identity law fails at " + name(f));
    }
  }
  for (MorIdx f = 0; f < cat.morphism_count(); ++f) {
    for (MorIdx g : cat.outgoing(cat.tgt(f))) {
      MorIdx gf = *cat.compose(f, g);
      for (MorIdx h : cat.outgoing(cat.tgt(g))) {
        MorIdx hg = *cat.compose(g, h);
        if (*cat.compose(gf, h) != *cat.compose(f, hg)) {
          report.violations.push_back("associativity fails at (" + name(f) + "," + name(g) +
                                      "," + name(h) + ")");
        }
      }
    }
  }
  return report;
}

std::optional<std::pair<MorIdx, MorIdx>> monomorphism_violation(const FiniteCategory& cat,
                                                                MorIdx f) {
  if (f >= cat.morphism_count()) throw InvalidInput("unknown morphism index");
  const auto row = cat.postcompose_table(f);
  const auto in = cat.incoming(cat.src(f));
  std::unordered_map<std::uint32_t, MorIdx> seen;
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] == kNoIndex) continue;
    auto [it, inserted] = seen.emplace(row[k], in[k]);
    if (!inserted && cat.src(it->second) == cat.src(in[k])) {
      return std::pair{it->second, in[k]};
    }
  }
  return std::nullopt;
}

bool is_monomorphism(const FiniteCategory& cat, MorIdx f) {
  return !monomorphism_violation(cat, f).has_value();
}

bool is_epimorphism(const FiniteCategory& cat, MorIdx f) {
  if (f >= cat.morphism_count()) throw InvalidInput("unknown morphism index");
  std::unordered_map<MorIdx, MorIdx> seen;
  for (MorIdx g : cat.outgoing(cat.tgt(f))) {
    auto gf = cat.compose(f, g);
    if (!gf) continue;
    auto [it, inserted] = seen.emplace(*gf, g);
    if (!inserted) return false;
  }
  return true;
}

bool is_isomorphism(const FiniteCategory& cat, MorIdx f) {
  for (MorIdx g : cat.hom(cat.tgt(f), cat.src(f))) {
    if (cat.compose(f, g) == cat.identity(cat.src(f)) &&
        cat.compose(g, f) == cat.identity(cat.tgt(f))) {
      return true;
    }
  }
  return false;
}

std::optional<PullbackCone> pullback(const FiniteCategory& cat, MorIdx f, MorIdx g) {
  if (cat.tgt(f) != cat.tgt(g)) {
    throw InvalidInput("pullback of non-cospan (" + cat.morphism_name(f) + "," +
                       cat.morphism_name(g) + ")");
  }
  struct Cone {
    ObjIdx apex;
    MorIdx p;
    MorIdx q;
  };
  std::vector<Cone> cones;
  for (ObjIdx x = 0; x < cat.object_count(); ++x) {
    for (MorIdx p : cat.hom(x, cat.src(f))) {
      auto fp = cat.compose(p, f);
      for (MorIdx q : cat.hom(x, cat.src(g))) {
        if (fp && fp == cat.compose(q, g)) cones.push_back({x, p, q});
      }
    }
  }
  for (const Cone& top : cones) {
    PullbackCone result{top.apex, top.p, top.q, {}};
    bool terminal = true;
    for (const Cone& c : cones) {
      std::optional<MorIdx> unique;
      int count = 0;
      for (MorIdx m : cat.hom(c.apex, top.apex)) {
        if (cat.compose(m, top.p) == c.p && cat.compose(m, top.q) == c.q) {
          ++count;
          unique = m;
        }
      }
      if (count != 1) {
        terminal = false;
        break;
      }
      result.mediating.push_back({c.apex, c.p, c.q, *unique});
    }
    if (terminal) return result;
  }
  return std::nullopt;
}

}  // namespace scissors
