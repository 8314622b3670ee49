// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/assembler.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "scissors/errors.hpp"

namespace scissors {

CoverFamily make_family(ObjIdx target, std::vector<MorIdx> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return CoverFamily{target, std::move(members)};
}

namespace {

std::uint32_t find_root(std::vector<std::uint32_t>& parent, std::uint32_t x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

}  // namespace

Assembler::Assembler(FiniteCategory cat, ObjIdx initial, std::vector<CoverFamily> declared) {
  auto impl = std::make_shared<Impl>();
  if (auto report = validate_category(cat); !report.ok()) {
    throw InvalidInput("invalid category: " + report.violations.front());
  }
  if (initial >= cat.object_count()) throw InvalidInput("initial object out of range");
  for (auto& fam : declared) {
    if (fam.target >= cat.object_count()) throw InvalidInput("cover target out of range");
    for (MorIdx f : fam.members) {
      if (f >= cat.morphism_count() || cat.tgt(f) != fam.target) {
        throw InvalidInput("declared cover of " + cat.object_name(fam.target) +
                           " has a member with the wrong target");
      }
    }
    fam = make_family(fam.target, std::move(fam.members));
  }
  std::sort(declared.begin(), declared.end());
  declared.erase(std::unique(declared.begin(), declared.end()), declared.end());

  impl->cat = std::move(cat);
  impl->initial = initial;
  impl->declared = std::move(declared);
  const FiniteCategory& c = impl->cat;
  const auto n_obj = c.object_count();
  const auto n_mor = c.morphism_count();

  for (ObjIdx a = 0; a < n_obj; ++a) {
    if (a != initial) impl->noninitial.push_back(a);
  }

  impl->iso.assign(n_mor, false);
  impl->isos_into.assign(n_obj, {});
  std::vector<std::uint32_t> parent(n_obj);
  std::iota(parent.begin(), parent.end(), 0u);
  for (MorIdx f = 0; f < n_mor; ++f) {
    if (is_isomorphism(c, f)) {
      impl->iso[f] = true;
      impl->isos_into[c.tgt(f)].push_back(f);
      parent[find_root(parent, c.src(f))] = find_root(parent, c.tgt(f));
    }
  }
  impl->iso_class.assign(n_obj, 0);
  {
    std::unordered_map<std::uint32_t, std::uint32_t> dense;
    for (ObjIdx a = 0; a < n_obj; ++a) {
      auto root = find_root(parent, a);
      auto [it, inserted] = dense.emplace(root, static_cast<std::uint32_t>(dense.size()));
      impl->iso_class[a] = it->second;
    }
  }

  impl->principal.resize(n_mor);
  for (MorIdx f = 0; f < n_mor; ++f) {
    Sieve s(c.incoming(c.tgt(f)).size());
    for (auto pos : c.postcompose_table(f)) {
      if (pos != kNoIndex) s.set(pos);
    }
    impl->principal[f] = std::move(s);
  }

  impl->noninit_mask.resize(n_obj);
  impl->iso_mask.resize(n_obj);
  impl->noninit_incoming.assign(n_obj, {});
  for (ObjIdx a = 0; a < n_obj; ++a) {
    const auto in = c.incoming(a);
    Sieve nonint(in.size()), iso(in.size());
    for (std::size_t k = 0; k < in.size(); ++k) {
      if (c.src(in[k]) != initial) {
        nonint.set(k);
        impl->noninit_incoming[a].push_back(in[k]);
      }
      if (impl->iso[in[k]]) iso.set(k);
    }
    impl->noninit_mask[a] = std::move(nonint);
    impl->iso_mask[a] = std::move(iso);
  }

  impl->rep.resize(n_mor);
  for (MorIdx f = 0; f < n_mor; ++f) {
    const auto row = c.postcompose_table(f);
    const auto in_tgt = c.incoming(c.tgt(f));
    MorIdx best = f;
    for (MorIdx phi : impl->isos_into[c.src(f)]) {
      auto pos = row[c.local_index(phi)];
      if (pos != kNoIndex) best = std::min(best, in_tgt[pos]);
    }
    impl->rep[f] = best;
  }

  std::vector<bool> atomic(n_obj, false);
  for (ObjIdx x = 0; x < n_obj; ++x) {
    if (x == initial) continue;
    atomic[x] = std::all_of(impl->noninit_incoming[x].begin(), impl->noninit_incoming[x].end(),
                            [&](MorIdx g) { return impl->iso[g]; });
  }
  impl->subobjects.assign(n_obj, {});
  impl->atoms.assign(n_obj, {});
  for (ObjIdx a = 0; a < n_obj; ++a) {
    std::set<MorIdx> reps;
    for (MorIdx f : impl->noninit_incoming[a]) reps.insert(impl->rep[f]);
    impl->subobjects[a].assign(reps.begin(), reps.end());
    for (MorIdx f : impl->subobjects[a]) {
      if (atomic[c.src(f)]) impl->atoms[a].push_back(f);
    }
  }

  impl->effective.assign(n_obj, {});
  {
    std::vector<std::set<std::vector<MorIdx>>> eff(n_obj);
    for (const auto& fam : impl->declared) {
      for (ObjIdx a = 0; a < n_obj; ++a) {
        for (MorIdx u : impl->isos_into[a]) {
          if (c.src(u) != fam.target) continue;
          std::vector<MorIdx> moved;
          bool has_iso = false;
          for (MorIdx d : fam.members) {
            if (c.src(d) == initial) continue;
            MorIdx ud = c.compose_checked(d, u);
            has_iso = has_iso || impl->iso[ud];
            moved.push_back(ud);
          }
          if (has_iso) continue;
          std::sort(moved.begin(), moved.end());
          moved.erase(std::unique(moved.begin(), moved.end()), moved.end());
          eff[a].insert(std::move(moved));
        }
      }
    }
    for (ObjIdx a = 0; a < n_obj; ++a) impl->effective[a].assign(eff[a].begin(), eff[a].end());
  }
  impl_ = std::move(impl);
}

std::optional<MorIdx> Assembler::find_iso(ObjIdx a, ObjIdx b) const {
  for (MorIdx u : isos_into(b)) {
    if (cat().src(u) == a) return u;
  }
  return std::nullopt;
}

Sieve Assembler::sieve_of(ObjIdx target, std::span<const MorIdx> family) const {
  Sieve s = empty_sieve(target);
  for (MorIdx f : family) {
    if (cat().tgt(f) != target) throw InvalidInput("family member has the wrong target");
    s |= principal_sieve(f);
  }
  return s;
}

Sieve Assembler::pullback_sieve(MorIdx d, const Sieve& s) const {
  const auto row = cat().postcompose_table(d);
  Sieve out(row.size());
  for (std::size_t k = 0; k < row.size(); ++k) {
    if (row[k] != kNoIndex && s.test(row[k])) out.set(k);
  }
  return out;
}

AssemblerBuilder::AssemblerBuilder(std::string initial) : initial_(std::move(initial)) {
  cat_.add_object(initial_);
}

void AssemblerBuilder::add_object(std::string name) {
  objects_.push_back(name);
  cat_.add_object(std::move(name));
}

void AssemblerBuilder::add_morphism(std::string id, std::string_view src, std::string_view tgt) {
  if (id.starts_with("id:") || id.starts_with("init:")) {
    throw InvalidInput("morphism id '" + id + "' uses a reserved prefix");
  }
  cat_.add_morphism(std::move(id), src, tgt);
}

void AssemblerBuilder::set_composite(std::string_view first, std::string_view second,
                                     std::string_view result) {
  cat_.set_composite(first, second, result);
}

void AssemblerBuilder::add_cover(std::string_view target, std::vector<std::string> family) {
  covers_.emplace_back(std::string(target), std::move(family));
}

Assembler AssemblerBuilder::build() const {
  CategoryBuilder cb = cat_;
  auto init_of = [&](const std::string& x) {
    return x == initial_ ? CategoryBuilder::identity_id(initial_) : init_id(x);
  };
  for (const auto& x : objects_) cb.add_morphism(init_id(x), initial_, x);
  FiniteCategory raw = cb.build();
  for (MorIdx f = 0; f < raw.morphism_count(); ++f) {
    const auto& src = raw.object_name(raw.src(f));
    if (src == initial_) continue;
    cb.set_composite(init_of(src), raw.morphism_name(f), init_of(raw.object_name(raw.tgt(f))));
  }
  FiniteCategory cat = cb.build();
  std::vector<CoverFamily> covers;
  covers.reserve(covers_.size());
  for (const auto& [target, family] : covers_) {
    std::vector<MorIdx> members;
    for (const auto& id : family) members.push_back(cat.morphism_index(id));
    covers.push_back(make_family(cat.object(target), std::move(members)));
  }
  ObjIdx init = cat.object(initial_);
  return Assembler(std::move(cat), init, std::move(covers));
}

CoverageEngine::CoverageEngine(const Assembler& assembler, Budget* budget)
    : asm_(assembler), budget_(budget), memo_(assembler.cat().object_count()) {}

bool CoverageEngine::covers(ObjIdx target, const Sieve& sieve) {
  if (asm_.is_initial(target)) return true;
  if (sieve.intersects(asm_.iso_mask(target))) return true;
  auto& memo = memo_[target];
  if (auto it = memo.find(sieve); it != memo.end()) return it->second;
  if (budget_) budget_->tick("covering saturation");
  bool result = false;
  for (const auto& cover : asm_.effective_covers(target)) {
    bool all = true;
    for (MorIdx d : cover) {
      if (!covers(asm_.cat().src(d), asm_.pullback_sieve(d, sieve))) {
        all = false;
        break;
      }
    }
    if (all) {
      result = true;
      break;
    }
  }
  memo.emplace(sieve, result);
  return result;
}

bool CoverageEngine::covers(const CoverFamily& family) {
  return covers(family.target, asm_.sieve_of(family.target, family.members));
}

bool are_disjoint(const Assembler& a, MorIdx f, MorIdx g) {
  const auto& c = a.cat();
  if (c.tgt(f) != c.tgt(g)) {
    throw InvalidInput("disjointness of non-cospan (" + c.morphism_name(f) + "," +
                       c.morphism_name(g) + ")");
  }
  Sieve common = a.principal_sieve(f);
  common &= a.principal_sieve(g);
  return !common.intersects(a.noninitial_mask(c.tgt(f)));
}

bool is_disjoint_family(const Assembler& a, const CoverFamily& family) {
  const auto& m = family.members;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      if (!are_disjoint(a, m[i], m[j])) return false;
    }
  }
  return true;
}

bool is_covering_family(const Assembler& a, const CoverFamily& family, Budget& budget) {
  CoverageEngine engine(a, &budget);
  return engine.covers(family);
}

bool is_covering_family(const Assembler& a, const CoverFamily& family) {
  Budget budget;
  return is_covering_family(a, family, budget);
}

namespace {

class DisjointCoverSearch {
 public:
  DisjointCoverSearch(const Assembler& a, ObjIdx target, const CoverSearch& opt,
                      CoverageEngine& engine, Budget& budget)
      : a_(a), target_(target), opt_(opt), engine_(engine), budget_(budget) {}

  std::vector<CoverFamily> run() {
    std::vector<MorIdx> pool;
    if (opt_.pool) {
      pool = *opt_.pool;
    } else {
      auto src = opt_.subobjects_only ? a_.subobjects(target_) : a_.noninitial_incoming(target_);
      pool.assign(src.begin(), src.end());
    }
    std::vector<MorIdx> forced = opt_.forced;
    std::sort(forced.begin(), forced.end());
    forced.erase(std::unique(forced.begin(), forced.end()), forced.end());
    for (MorIdx f : forced) {
      if (a_.cat().tgt(f) != target_) throw InvalidInput("forced member has the wrong target");
    }
    if (!is_disjoint_family(a_, CoverFamily{target_, forced})) return {};

    Sieve chosen_sieve = a_.empty_sieve(target_);
    for (MorIdx f : forced) chosen_sieve |= a_.principal_sieve(f);

    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    for (MorIdx f : pool) {
      if (a_.cat().tgt(f) != target_) throw InvalidInput("pool member has the wrong target");
      if (a_.is_initial(a_.cat().src(f))) continue;
      if (std::binary_search(forced.begin(), forced.end(), f)) continue;
      bool ok = std::all_of(forced.begin(), forced.end(),
                            [&](MorIdx g) { return are_disjoint(a_, f, g); });
      if (ok) candidates_.push_back(f);
    }
    // Coarsest pieces first, so first_only searches return coarse families.
    std::stable_sort(candidates_.begin(), candidates_.end(), [&](MorIdx x, MorIdx y) {
      auto cx = a_.principal_sieve(x).count(), cy = a_.principal_sieve(y).count();
      return cx > cy;
    });
    const auto n = candidates_.size();
    disjoint_.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        bool d = are_disjoint(a_, candidates_[i], candidates_[j]);
        disjoint_[i][j] = disjoint_[j][i] = d;
      }
    }
    for (MorIdx at : a_.atoms(target_)) atom_bits_.push_back(a_.cat().local_index(at));

    std::vector<std::uint32_t> remaining(n);
    std::iota(remaining.begin(), remaining.end(), 0u);
    chosen_ = forced;
    recurse(chosen_sieve, remaining, a_.empty_sieve(target_));
    std::sort(results_.begin(), results_.end());
    return std::move(results_);
  }

 private:
  void recurse(const Sieve& chosen_sieve, const std::vector<std::uint32_t>& remaining,
               const Sieve& abandoned) {
    if (done_) return;
    budget_.tick("disjoint cover search");
    Sieve reachable = chosen_sieve;
    for (auto r : remaining) reachable |= a_.principal_sieve(candidates_[r]);
    if (!engine_.covers(target_, reachable)) return;

    std::optional<std::uint32_t> pivot;
    for (auto bit : atom_bits_) {
      if (reachable.test(bit) && !chosen_sieve.test(bit) && !abandoned.test(bit)) {
        pivot = bit;
        break;
      }
    }
    if (!pivot) {
      if (engine_.covers(target_, chosen_sieve)) {
        results_.push_back(make_family(target_, chosen_));
        if (opt_.first_only) done_ = true;
      }
      return;
    }
    std::vector<std::uint32_t> hitters, others;
    for (auto r : remaining) {
      (a_.principal_sieve(candidates_[r]).test(*pivot) ? hitters : others).push_back(r);
    }
    if (chosen_.size() < opt_.max_size) {
      for (auto h : hitters) {
        std::vector<std::uint32_t> next;
        for (auto r : remaining) {
          if (r != h && disjoint_[r][h]) next.push_back(r);
        }
        chosen_.push_back(candidates_[h]);
        Sieve s = chosen_sieve;
        s |= a_.principal_sieve(candidates_[h]);
        recurse(s, next, abandoned);
        chosen_.pop_back();
        if (done_) return;
      }
    }
    Sieve skip = abandoned;
    skip.set(*pivot);
    recurse(chosen_sieve, others, skip);
  }

  const Assembler& a_;
  ObjIdx target_;
  const CoverSearch& opt_;
  CoverageEngine& engine_;
  Budget& budget_;
  std::vector<MorIdx> candidates_;
  std::vector<std::vector<bool>> disjoint_;
  std::vector<std::uint32_t> atom_bits_;
  std::vector<MorIdx> chosen_;
  std::vector<CoverFamily> results_;
  bool done_ = false;
};

}  // namespace

std::vector<CoverFamily> search_disjoint_covers(const Assembler& a, ObjIdx target,
                                                const CoverSearch& options,
                                                CoverageEngine& engine, Budget& budget) {
  if (target >= a.cat().object_count()) throw InvalidInput("target out of range");
  return DisjointCoverSearch(a, target, options, engine, budget).run();
}

std::vector<CoverFamily> enumerate_disjoint_covering_families(const Assembler& a, ObjIdx target,
                                                              Budget& budget) {
  CoverageEngine engine(a, &budget);
  CoverSearch opt;
  opt.subobjects_only = false;
  return search_disjoint_covers(a, target, opt, engine, budget);
}

std::vector<CoverFamily> enumerate_disjoint_covering_subobjects(const Assembler& a,
                                                                ObjIdx target, Budget& budget) {
  CoverageEngine engine(a, &budget);
  return search_disjoint_covers(a, target, CoverSearch{}, engine, budget);
}

std::optional<std::pair<MorIdx, MorIdx>> factor_through(const Assembler& a, MorIdx g,
                                                        std::span<const MorIdx> family) {
  const auto& c = a.cat();
  for (MorIdx f : family) {
    for (MorIdx h : c.hom(c.src(g), c.src(f))) {
      if (c.compose(h, f) == g) return std::pair{f, h};
    }
  }
  return std::nullopt;
}

std::optional<Refinement> common_refinement(const Assembler& a, const CoverFamily& f1,
                                            const CoverFamily& f2, Budget& budget) {
  if (f1.target != f2.target) throw InvalidInput("common refinement of different targets");
  CoverageEngine engine(a, &budget);
  for (const auto* f : {&f1, &f2}) {
    if (!is_disjoint_family(a, *f) || !engine.covers(*f)) {
      throw InvalidInput("common refinement input " + describe(a, *f) +
                         " is not a disjoint covering family");
    }
  }
  const ObjIdx target = f1.target;
  Sieve s1 = a.sieve_of(target, f1.members), s2 = a.sieve_of(target, f2.members);
  CoverSearch opt;
  opt.first_only = true;
  opt.pool.emplace();
  for (MorIdx c : a.subobjects(target)) {
    auto bit = a.cat().local_index(c);
    if (s1.test(bit) && s2.test(bit)) opt.pool->push_back(c);
  }
  auto found = search_disjoint_covers(a, target, opt, engine, budget);
  if (found.empty()) return std::nullopt;
  Refinement result{found.front(), {}};
  for (MorIdx g : result.family.members) {
    auto w1 = factor_through(a, g, f1.members);
    auto w2 = factor_through(a, g, f2.members);
    result.witnesses.push_back({g, w1->first, w1->second, w2->first, w2->second});
  }
  return result;
}

AxiomReport check_axioms(const Assembler& a, Budget& budget) {
  AxiomReport report;
  const auto& c = a.cat();
  for (ObjIdx x = 0; x < c.object_count(); ++x) {
    auto h = c.hom(a.initial(), x);
    if (h.size() != 1) {
      report.initial_ok = false;
      report.initial_violations.push_back(std::to_string(h.size()) + " morphisms " +
                                          a.name(a.initial()) + " -> " + a.name(x));
    }
  }
  {
    CoverageEngine engine(a, &budget);
    report.holds_I = report.initial_ok && engine.covers(a.initial(), a.empty_sieve(a.initial()));
  }
  for (MorIdx f = 0; f < c.morphism_count(); ++f) {
    if (auto w = monomorphism_violation(c, f)) {
      report.holds_M = false;
      report.mono_violations.push_back({f, w->first, w->second});
    }
  }
  try {
    CoverageEngine engine(a, &budget);
    for (ObjIdx x : a.noninitial_objects()) {
      auto families = search_disjoint_covers(a, x, CoverSearch{}, engine, budget);
      // A family made of atoms that refines every family settles (R) at x.
      bool settled = false;
      for (const auto& g : families) {
        bool atomic = std::all_of(g.members.begin(), g.members.end(), [&](MorIdx m) {
          return std::find(a.atoms(x).begin(), a.atoms(x).end(), m) != a.atoms(x).end();
        });
        if (!atomic) continue;
        settled = std::all_of(families.begin(), families.end(), [&](const CoverFamily& f) {
          Sieve s = a.sieve_of(x, f.members);
          return std::all_of(g.members.begin(), g.members.end(),
                             [&](MorIdx m) { return s.test(c.local_index(m)); });
        });
        if (settled) break;
      }
      if (settled) continue;
      for (std::size_t i = 0; i < families.size(); ++i) {
        for (std::size_t j = i + 1; j < families.size(); ++j) {
          if (!common_refinement(a, families[i], families[j], budget)) {
            report.holds_R = false;
            report.refinement_failures.push_back({families[i], families[j]});
          }
        }
      }
    }
  } catch (const BudgetExceeded&) {
    report.budget_exhausted_R = true;
  }
  return report;
}

std::string describe(const Assembler& a, const CoverFamily& family) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    if (i) out << ", ";
    out << a.mor_name(family.members[i]);
  }
  out << "} -> " << a.name(family.target);
  return out.str();
}

}  // namespace scissors
