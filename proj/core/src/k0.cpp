// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/k0.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "scissors/errors.hpp"

namespace scissors {

bool K0Class::is_zero() const {
  auto zero = [](const Integer& x) { return x == 0; };
  return std::all_of(torsion.begin(), torsion.end(), zero) &&
         std::all_of(free.begin(), free.end(), zero);
}

std::string K0Class::to_string() const {
  std::ostringstream out;
  out << "(";
  bool first = true;
  for (const auto& x : free) {
    out << (first ? "" : ", ") << x.get_str();
    first = false;
  }
  if (!torsion.empty()) {
    out << (first ? "" : "; ") << "torsion";
    for (const auto& x : torsion) out << " " << x.get_str();
  }
  out << ")";
  return out.str();
}

K0Group::K0Group(std::vector<std::string> generator_names, const IntMatrix& relation_rows,
                 std::vector<K0Relation> relations)
    : names_(std::move(generator_names)),
      relations_(std::move(relations)),
      relation_count_(relation_rows.size()),
      lattice_(names_.size()) {
  for (const auto& r : relation_rows) lattice_.add(r);
  basis_ = lattice_.rows();
  snf_ = smith_normal_form(basis_, names_.size(), true);
  group_.rank = names_.size() - snf_.diagonal.size();
  for (const auto& d : snf_.diagonal) {
    if (d > 1) group_.torsion.push_back(d);
  }
}

K0Class K0Group::class_of_vector(const IntVector& x) const {
  if (x.size() != names_.size()) throw InvalidInput("class vector has the wrong length");
  IntVector y = row_times(x, snf_.v, names_.size());
  K0Class c;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (i < snf_.diagonal.size()) {
      const Integer& d = snf_.diagonal[i];
      if (d == 1) continue;
      Integer r;
      mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), d.get_mpz_t());
      c.torsion.push_back(r);
    } else {
      c.free.push_back(y[i]);
    }
  }
  return c;
}

K0Class K0Group::class_of_generator(std::size_t i) const {
  IntVector x(names_.size(), 0);
  x.at(i) = 1;
  return class_of_vector(x);
}

std::optional<std::size_t> K0Group::generator_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

namespace {

class PresentationBuilder {
 public:
  explicit PresentationBuilder(const Assembler& a) : a_(a) {
    const auto& objs = a.noninitial_objects();
    for (std::size_t i = 0; i < objs.size(); ++i) {
      index_[objs[i]] = i;
      names_.push_back(a.name(objs[i]));
    }
  }

  void add(ObjIdx target, std::vector<ObjIdx> pieces, const std::function<std::string()>& origin) {
    std::vector<std::size_t> idx;
    for (ObjIdx p : pieces) idx.push_back(index_.at(p));
    std::sort(idx.begin(), idx.end());
    std::size_t t = index_.at(target);
    if (idx.size() == 1 && idx[0] == t) return;  // zero relation
    if (!seen_.emplace(t, idx).second) return;
    IntVector row(names_.size(), 0);
    row[t] += 1;
    for (auto i : idx) row[i] -= 1;
    rows_.push_back(std::move(row));
    relations_.push_back({t, std::move(idx), origin()});
  }

  void add_isomorphisms() {
    std::map<std::uint32_t, ObjIdx> first_in_class;
    for (ObjIdx x : a_.noninitial_objects()) {
      auto [it, inserted] = first_in_class.emplace(a_.iso_class(x), x);
      if (inserted) continue;
      MorIdx u = *a_.find_iso(it->second, x);
      add(x, {it->second}, [&] { return "iso " + a_.mor_name(u); });
    }
  }

  void add_family(const CoverFamily& f) {
    std::vector<ObjIdx> pieces;
    for (MorIdx m : f.members) pieces.push_back(a_.cat().src(m));
    add(f.target, std::move(pieces), [&] { return describe(a_, f); });
  }

  K0Group build() { return K0Group(names_, rows_, std::move(relations_)); }

 private:
  const Assembler& a_;
  std::map<ObjIdx, std::size_t> index_;
  std::vector<std::string> names_;
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> seen_;
  IntMatrix rows_;
  std::vector<K0Relation> relations_;
};

}  // namespace

K0Group k0(const Assembler& a, Budget& budget) {
  PresentationBuilder p(a);
  p.add_isomorphisms();
  CoverageEngine engine(a, &budget);
  for (ObjIdx x : a.noninitial_objects()) {
    for (const auto& f : search_disjoint_covers(a, x, CoverSearch{}, engine, budget)) {
      p.add_family(f);
    }
  }
  return p.build();
}

K0Group k0_full(const Assembler& a, Budget& budget) {
  PresentationBuilder p(a);
  for (ObjIdx x : a.noninitial_objects()) {
    for (const auto& f : enumerate_disjoint_covering_families(a, x, budget)) p.add_family(f);
  }
  return p.build();
}

K0Group k0_declared(const Assembler& a) {
  PresentationBuilder p(a);
  p.add_isomorphisms();
  for (const auto& f : a.declared_covers()) {
    if (a.is_initial(f.target) || !is_disjoint_family(a, f)) continue;
    CoverFamily g{f.target, {}};
    for (MorIdx m : f.members) {
      if (!a.is_initial(a.cat().src(m))) g.members.push_back(m);
    }
    p.add_family(g);
  }
  return p.build();
}

K0Class class_of(const Assembler& a, const K0Group& k, ObjIdx obj) {
  if (obj >= a.cat().object_count()) throw InvalidInput("unknown object index");
  IntVector x(k.generator_count(), 0);
  if (!a.is_initial(obj)) {
    const auto& objs = a.noninitial_objects();
    auto it = std::lower_bound(objs.begin(), objs.end(), obj);
    x.at(static_cast<std::size_t>(it - objs.begin())) = 1;
  }
  return k.class_of_vector(x);
}

K0Hom analyse_hom(const K0Group& source, const K0Group& target, IntMatrix matrix) {
  const std::size_t n = source.generator_count(), m = target.generator_count();
  if (matrix.size() != n) throw InvalidInput("homomorphism matrix has the wrong shape");
  K0Hom h;
  for (const auto& row : source.basis_rows()) {
    if (!target.lattice().contains(row_times(row, matrix, m))) h.well_defined = false;
  }
  IntMatrix image = target.basis_rows();
  image.insert(image.end(), matrix.begin(), matrix.end());
  h.cokernel = cokernel(image, m);
  h.surjective = h.cokernel.trivial();
  IntMatrix stacked = matrix;
  for (const auto& row : target.basis_rows()) stacked.push_back(row);
  h.injective = true;
  for (const auto& k : left_kernel(stacked, m)) {
    IntVector x(k.begin(), k.begin() + static_cast<long>(n));
    if (!source.lattice().contains(x)) {
      h.injective = false;
      h.kernel.push_back(std::move(x));
    }
  }
  h.matrix = std::move(matrix);
  return h;
}

K0Hom k0_map(const AssemblerMorphism& mor, const K0Group& source, const K0Group& target) {
  const auto& src_objs = mor.source.noninitial_objects();
  const auto& tgt_objs = mor.target.noninitial_objects();
  if (src_objs.size() != source.generator_count() || tgt_objs.size() != target.generator_count()) {
    throw InvalidInput("K0 groups do not belong to the morphism's assemblers");
  }
  IntMatrix matrix(src_objs.size(), IntVector(tgt_objs.size(), 0));
  for (std::size_t i = 0; i < src_objs.size(); ++i) {
    ObjIdx image = mor(src_objs[i]);
    if (mor.target.is_initial(image)) continue;
    auto it = std::lower_bound(tgt_objs.begin(), tgt_objs.end(), image);
    matrix[i][static_cast<std::size_t>(it - tgt_objs.begin())] = 1;
  }
  return analyse_hom(source, target, std::move(matrix));
}

K0Group cokernel_group(const K0Group& target, const IntMatrix& hom_matrix) {
  IntMatrix rows = target.basis_rows();
  rows.insert(rows.end(), hom_matrix.begin(), hom_matrix.end());
  return K0Group(target.generator_names(), rows);
}

std::optional<SCWitness> scissors_congruent(const Assembler& a, ObjIdx x, ObjIdx y,
                                            std::size_t depth, Budget& budget) {
  CoverageEngine engine(a, &budget);
  CoverSearch opt;
  opt.max_size = depth;
  auto by_size = [](std::vector<CoverFamily> v) {
    std::stable_sort(v.begin(), v.end(), [](const CoverFamily& l, const CoverFamily& r) {
      return l.members.size() < r.members.size();
    });
    return v;
  };
  std::vector<CoverFamily> fx, fy;
  if (a.is_initial(x) || a.is_initial(y)) {
    if (x == y) return SCWitness{{x, {}}, {y, {}}, {}, {}};
    return std::nullopt;
  }
  fx = by_size(search_disjoint_covers(a, x, opt, engine, budget));
  fy = by_size(search_disjoint_covers(a, y, opt, engine, budget));
  for (const auto& f : fx) {
    for (const auto& g : fy) {
      budget.tick("scissors congruence");
      if (f.members.size() != g.members.size()) continue;
      // Match pieces by isomorphism class of their domains.
      std::map<std::uint32_t, std::vector<std::size_t>> pool;
      for (std::size_t j = 0; j < g.members.size(); ++j) {
        pool[a.iso_class(a.cat().src(g.members[j]))].push_back(j);
      }
      SCWitness w{f, g, {}, {}};
      bool ok = true;
      for (MorIdx m : f.members) {
        auto& slot = pool[a.iso_class(a.cat().src(m))];
        if (slot.empty()) {
          ok = false;
          break;
        }
        std::size_t j = slot.front();
        slot.erase(slot.begin());
        w.matching.push_back(j);
        w.isos.push_back(*a.find_iso(a.cat().src(m), a.cat().src(g.members[j])));
      }
      if (ok) return w;
    }
  }
  return std::nullopt;
}

bool verify_witness(const Assembler& a, const SCWitness& w) {
  const auto& c = a.cat();
  const auto n = w.first.members.size();
  if (w.second.members.size() != n || w.matching.size() != n || w.isos.size() != n) return false;
  CoverageEngine engine(a);
  for (const auto* f : {&w.first, &w.second}) {
    if (!is_disjoint_family(a, *f) || !engine.covers(*f)) return false;
  }
  std::vector<bool> used(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t j = w.matching[i];
    if (j >= n || used[j]) return false;
    used[j] = true;
    MorIdx u = w.isos[i];
    if (u >= c.morphism_count() || !a.is_iso(u)) return false;
    if (c.src(u) != c.src(w.first.members[i]) || c.tgt(u) != c.src(w.second.members[j])) return false;
  }
  return true;
}

DevissageReport devissage_check(const Assembler& c, const Subassembler& d, Budget& budget) {
  DevissageReport r;
  std::set<ObjIdx> image;
  for (ObjIdx x : d.inclusion.object_map) image.insert(x);
  CoverageEngine engine(c, &budget);
  for (ObjIdx x : c.noninitial_objects()) {
    CoverSearch opt;
    opt.first_only = true;
    opt.pool.emplace();
    for (MorIdx f : c.noninitial_incoming(x)) {
      if (image.contains(c.cat().src(f))) opt.pool->push_back(f);
    }
    auto found = search_disjoint_covers(c, x, opt, engine, budget);
    if (found.empty()) {
      r.hypothesis = false;
      r.failures.push_back(x);
    } else {
      r.witnesses.emplace_back(x, std::move(found.front()));
    }
  }
  r.k0_sub = k0(d.sub, budget);
  r.k0_ambient = k0(c, budget);
  r.map = k0_map(d.inclusion, *r.k0_sub, *r.k0_ambient);
  return r;
}

LocalizationReport localization_check(const Assembler& c, const ObjectSet& d, Budget& budget) {
  LocalizationReport r;
  r.sieve = is_sieve(c, d);
  if (!r.sieve.valid()) return r;
  for (ObjIdx x : d) {
    if (c.is_initial(x)) continue;
    auto rep = has_complements(c, x, budget);
    if (!rep.holds) {
      r.complements = false;
      for (MorIdx f : rep.failures) r.complement_failures.emplace_back(x, f);
    }
  }
  Subassembler sub = full_subassembler(c, d);
  Quotient q = quotient(c, d);
  r.k0_sieve = k0(sub.sub, budget);
  r.k0_ambient = k0(c, budget);
  r.k0_quotient = k0(q.result, budget);
  K0Hom inc = k0_map(sub.inclusion, *r.k0_sieve, *r.k0_ambient);
  r.k0_cokernel = cokernel_group(*r.k0_ambient, inc.matrix);
  K0Hom proj = k0_map(q.projection, *r.k0_ambient, *r.k0_quotient);
  r.induced = analyse_hom(*r.k0_cokernel, *r.k0_quotient, proj.matrix);
  return r;
}

}  // namespace scissors
