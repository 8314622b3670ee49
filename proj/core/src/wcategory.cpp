// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/wcategory.hpp"

#include <algorithm>
#include <boost/pending/disjoint_sets.hpp>
#include <set>

#include "scissors/errors.hpp"

namespace scissors {

WCategory::WCategory(Assembler c, std::size_t max_tuple, Budget* budget)
    : WCategory(c, ObjectSet{c.initial()}, max_tuple, budget) {}

WCategory::WCategory(Assembler c, ObjectSet d, std::size_t max_tuple, Budget* budget)
    : c_(std::move(c)), d_(std::move(d)), max_tuple_(max_tuple), budget_(budget) {
  d_.insert(c_.initial());
  std::vector<ObjIdx> letters;
  for (ObjIdx x : c_.noninitial_objects()) {
    if (!d_.contains(x)) letters.push_back(x);
  }
  std::vector<WObject> layer{WObject{}};
  objects_.push_back(WObject{});
  for (std::size_t len = 1; len <= max_tuple_; ++len) {
    std::vector<WObject> next;
    for (const auto& w : layer) {
      for (ObjIdx x : letters) {
        if (budget_) budget_->tick("W objects");
        WObject v = w;
        v.entries.push_back(x);
        next.push_back(std::move(v));
      }
    }
    objects_.insert(objects_.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  for (std::size_t i = 0; i < objects_.size(); ++i) index_[objects_[i]] = i;
}

std::optional<std::size_t> WCategory::index_of(const WObject& a) const {
  auto it = index_.find(a);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

// Caller holds mutex_.
bool WCategory::admissible_fiber(ObjIdx target, std::vector<MorIdx> fiber) const {
  std::sort(fiber.begin(), fiber.end());
  auto key = std::make_pair(target, fiber);
  if (auto it = fibers_.find(key); it != fibers_.end()) return it->second;
  if (!engine_) engine_.emplace(c_, budget_);
  CoverSearch opt;
  opt.forced = fiber;
  opt.pool.emplace();
  if (d_.size() > 1) {
    for (MorIdx m : c_.subobjects(target)) {
      if (d_.contains(c_.cat().src(m))) opt.pool->push_back(m);
    }
  }
  opt.first_only = true;
  Budget local;
  bool ok = !search_disjoint_covers(c_, target, opt, *engine_, budget_ ? *budget_ : local).empty();
  fibers_.emplace(std::move(key), ok);
  return ok;
}

const std::vector<WMorphism>& WCategory::hom(std::size_t ai, std::size_t bi) const {
  std::lock_guard lock(mutex_);
  if (auto it = homs_.find({ai, bi}); it != homs_.end()) return it->second;
  const WObject& a = objects_.at(ai);
  const WObject& b = objects_.at(bi);
  const auto& cat = c_.cat();
  std::vector<WMorphism> out;
  const std::size_t k = a.size(), l = b.size();
  if (l <= k && (l > 0 || k == 0)) {
    std::vector<std::vector<MorIdx>> fibers(l);
    WMorphism cur{std::vector<std::uint32_t>(k), std::vector<MorIdx>(k)};
    std::size_t empty = l;
    auto rec = [&](auto&& self, std::size_t i) -> void {
      if (budget_) budget_->tick("W hom enumeration");
      if (empty > k - i) return;
      if (i == k) {
        for (std::size_t j = 0; j < l; ++j) {
          if (!admissible_fiber(b.entries[j], fibers[j])) return;
        }
        out.push_back(cur);
        return;
      }
      for (std::uint32_t j = 0; j < l; ++j) {
        for (MorIdx f : cat.hom(a.entries[i], b.entries[j])) {
          bool ok = std::all_of(fibers[j].begin(), fibers[j].end(),
                                [&](MorIdx g) { return are_disjoint(c_, f, g); });
          if (!ok) continue;
          if (fibers[j].empty()) --empty;
          fibers[j].push_back(f);
          cur.index_map[i] = j;
          cur.components[i] = f;
          self(self, i + 1);
          fibers[j].pop_back();
          if (fibers[j].empty()) ++empty;
        }
      }
    };
    rec(rec, 0);
  }
  return homs_.emplace(std::make_pair(ai, bi), std::move(out)).first->second;
}

bool WCategory::is_morphism(const WObject& a, const WObject& b, const WMorphism& f) const {
  const auto& cat = c_.cat();
  if (f.index_map.size() != a.size() || f.components.size() != a.size()) return false;
  std::vector<std::vector<MorIdx>> fibers(b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::uint32_t j = f.index_map[i];
    if (j >= b.size() || f.components[i] >= cat.morphism_count()) return false;
    if (cat.src(f.components[i]) != a.entries[i] || cat.tgt(f.components[i]) != b.entries[j]) {
      return false;
    }
    fibers[j].push_back(f.components[i]);
  }
  std::lock_guard lock(mutex_);
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (!is_disjoint_family(c_, make_family(b.entries[j], fibers[j]))) return false;
    if (fibers[j].size() != make_family(b.entries[j], fibers[j]).members.size()) return false;
    if (!admissible_fiber(b.entries[j], fibers[j])) return false;
  }
  return true;
}

WMorphism WCategory::identity(std::size_t ai) const {
  const WObject& a = objects_.at(ai);
  WMorphism id;
  for (std::size_t i = 0; i < a.size(); ++i) {
    id.index_map.push_back(static_cast<std::uint32_t>(i));
    id.components.push_back(c_.cat().identity(a.entries[i]));
  }
  return id;
}

WMorphism WCategory::compose(const WMorphism& first, const WMorphism& second) const {
  WMorphism out;
  for (std::size_t i = 0; i < first.index_map.size(); ++i) {
    std::uint32_t j = first.index_map[i];
    out.index_map.push_back(second.index_map.at(j));
    out.components.push_back(c_.cat().compose_checked(first.components[i], second.components[j]));
  }
  return out;
}

std::string WCategory::describe(const WObject& a) const {
  std::string s = "(";
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i) s += ", ";
    s += c_.name(a.entries[i]);
  }
  return s + ")";
}

std::string WCategory::describe(const WMorphism& f) const {
  std::string s = "[";
  for (std::size_t i = 0; i < f.index_map.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(i) + "->" + std::to_string(f.index_map[i]) + " " +
         c_.mor_name(f.components[i]);
  }
  return s + "]";
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kHolds: return "holds";
    case Verdict::kFails: return "fails";
    case Verdict::kInconclusive: return "inconclusive at bound";
  }
  return "?";
}

WPropertiesReport check_w_properties(const WCategory& w, Budget& budget) {
  WPropertiesReport r;
  const std::size_t n = w.objects().size();
  // Monomorphy: f∘- is injective on every Hom(x, a).
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (const auto& f : w.hom(a, b)) {
        ++r.morphisms_checked;
        for (std::size_t x = 0; x < n; ++x) {
          std::set<WMorphism> seen;
          for (const auto& g : w.hom(x, a)) {
            budget.tick("W monomorphy");
            if (!seen.insert(w.compose(g, f)).second) {
              r.monomorphisms = Verdict::kFails;
              r.failures.push_back("not monic: " + w.describe(f));
            }
          }
        }
      }
    }
  }
  // Square completion for every cospan a -> c <- b.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        for (const auto& f : w.hom(a, c)) {
          for (const auto& g : w.hom(b, c)) {
            ++r.cospans_checked;
            bool found = false;
            for (std::size_t d = 0; d < n && !found; ++d) {
              std::set<WMorphism> left;
              for (const auto& h : w.hom(d, a)) left.insert(w.compose(h, f));
              if (left.empty()) continue;
              for (const auto& k : w.hom(d, b)) {
                budget.tick("W squares");
                if (left.contains(w.compose(k, g))) {
                  found = true;
                  break;
                }
              }
            }
            if (!found) {
              r.squares = Verdict::kInconclusive;
              r.failures.push_back("no square within bound for " + w.describe(f) + ", " +
                                   w.describe(g));
            }
          }
        }
      }
    }
  }
  return r;
}

DecompositionReport check_coproduct_decomposition(const WCategory& wedge, const Coproduct& cop,
                                                  const std::vector<const WCategory*>& summands) {
  DecompositionReport r;
  const Assembler& big = wedge.assembler();
  // Wedge object -> (summand, object of summand).
  std::vector<std::pair<std::size_t, ObjIdx>> origin(big.cat().object_count(), {SIZE_MAX, 0});
  for (std::size_t s = 0; s < cop.injections.size(); ++s) {
    const auto& inj = cop.injections[s];
    for (ObjIdx x : inj.source.noninitial_objects()) origin[inj(x)] = {s, x};
  }
  auto split = [&](const WObject& a) {
    std::vector<WObject> parts(summands.size());
    for (ObjIdx x : a.entries) parts.at(origin[x].first).entries.push_back(origin[x].second);
    return parts;
  };
  const auto& objs = wedge.objects();
  for (std::size_t a = 0; a < objs.size(); ++a) {
    auto pa = split(objs[a]);
    for (std::size_t b = 0; b < objs.size(); ++b) {
      auto pb = split(objs[b]);
      std::size_t expected = 1;
      for (std::size_t s = 0; s < summands.size(); ++s) {
        auto ia = summands[s]->index_of(pa[s]);
        auto ib = summands[s]->index_of(pb[s]);
        if (!ia || !ib) throw InvalidInput("summand truncation smaller than wedge truncation");
        expected *= summands[s]->hom(*ia, *ib).size();
      }
      ++r.pairs_checked;
      std::size_t actual = wedge.hom(a, b).size();
      if (actual != expected) {
        r.holds = false;
        r.mismatches.push_back(wedge.describe(objs[a]) + " -> " + wedge.describe(objs[b]) +
                               ": " + std::to_string(actual) + " vs " + std::to_string(expected));
      }
    }
  }
  return r;
}

bool is_cofiltered(const Preorder& p) {
  const std::size_t n = p.names.size();
  if (n == 0) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      bool bound = false;
      for (std::size_t k = 0; k < n && !bound; ++k) bound = p.leq[k][i] && p.leq[k][j];
      if (!bound) return false;
    }
  }
  return true;
}

CommaCategory comma_over(const WCategory& w, std::size_t y) {
  CommaCategory out;
  for (std::size_t x = 0; x < w.objects().size(); ++x) {
    for (const auto& f : w.hom(x, y)) {
      out.objects.emplace_back(x, f);
      out.order.names.push_back(w.describe(w.objects()[x]) + " " + w.describe(f));
    }
  }
  const std::size_t n = out.objects.size();
  out.order.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [xi, fi] = out.objects[i];
      const auto& [xj, fj] = out.objects[j];
      std::size_t count = 0;
      for (const auto& h : w.hom(xi, xj)) {
        if (w.compose(h, fj) == fi) ++count;
      }
      out.order.leq[i][j] = count > 0;
      if (count > 1) out.is_preorder = false;
    }
  }
  return out;
}

Verdict comma_cofiltered(const CommaCategory& comma) {
  return is_cofiltered(comma.order) ? Verdict::kHolds : Verdict::kInconclusive;
}

Components pi0_wcat(const WCategory& w) {
  const std::size_t n = w.objects().size();
  std::vector<std::size_t> rank(n), parent(n);
  boost::disjoint_sets<std::size_t*, std::size_t*> sets(rank.data(), parent.data());
  for (std::size_t i = 0; i < n; ++i) sets.make_set(i);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (!w.hom(a, b).empty()) sets.union_set(a, b);
    }
  }
  Components out;
  out.component_of.resize(n);
  std::map<std::size_t, std::size_t> ids;
  for (std::size_t i = 0; i < n; ++i) {
    auto [it, fresh] = ids.emplace(sets.find_set(i), out.representatives.size());
    if (fresh) out.representatives.push_back(i);
    out.component_of[i] = it->second;
  }
  return out;
}

}  // namespace scissors
