// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#include "scissors/fixtures.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdio>

#include "scissors/errors.hpp"

namespace scissors {

GroupTable trivial_group() { return GroupTable{{"e"}, {{0}}}; }

GroupTable cyclic_group(std::size_t n) {
  if (n == 0) throw InvalidInput("cyclic group of order 0");
  GroupTable g;
  for (std::size_t k = 0; k < n; ++k) g.names.push_back(k == 0 ? "e" : "g^" + std::to_string(k));
  g.mul.assign(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  }
  return g;
}

GroupTable symmetric_group3() {
  using Perm = std::array<int, 3>;
  const std::vector<std::pair<std::string, Perm>> elems = {
      {"e", {0, 1, 2}},     {"(01)", {1, 0, 2}},  {"(02)", {2, 1, 0}},
      {"(12)", {0, 2, 1}},  {"(012)", {1, 2, 0}}, {"(021)", {2, 0, 1}}};
  GroupTable g;
  for (const auto& [name, p] : elems) g.names.push_back(name);
  g.mul.assign(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      Perm ab;  // apply b, then a
      for (int i = 0; i < 3; ++i) ab[i] = elems[a].second[elems[b].second[i]];
      for (std::size_t c = 0; c < 6; ++c) {
        if (elems[c].second == ab) g.mul[a][b] = c;
      }
    }
  }
  return g;
}

bool is_group(const GroupTable& g) {
  const auto n = g.order();
  if (n == 0 || g.mul.size() != n) return false;
  for (const auto& row : g.mul) {
    if (row.size() != n) return false;
    for (auto x : row) {
      if (x >= n) return false;
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (g.mul[0][a] != a || g.mul[a][0] != a) return false;
    bool has_inverse = false;
    for (std::size_t b = 0; b < n; ++b) {
      has_inverse = has_inverse || (g.mul[a][b] == 0 && g.mul[b][a] == 0);
      for (std::size_t c = 0; c < n; ++c) {
        if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) return false;
      }
    }
    if (!has_inverse) return false;
  }
  return true;
}

FiniteSpace sierpinski_space() { return FiniteSpace{{"a", "b"}, {0b00, 0b01, 0b11}}; }

FiniteSpace discrete_space(std::size_t n) {
  FiniteSpace s;
  for (std::size_t i = 0; i < n; ++i) s.points.push_back(std::string(1, static_cast<char>('a' + i)));
  for (std::uint32_t m = 0; m < (1u << n); ++m) s.opens.push_back(m);
  return s;
}

Assembler trivial_assembler() { return AssemblerBuilder(kInitialName).build(); }

Assembler sphere_group(const GroupTable& g) {
  if (!is_group(g)) throw InvalidInput("sphere_group: table is not a group");
  AssemblerBuilder b(kInitialName);
  b.add_object("*");
  auto name = [&](std::size_t k) { return k == 0 ? CategoryBuilder::identity_id("*") : g.names[k]; };
  for (std::size_t k = 1; k < g.order(); ++k) b.add_morphism(g.names[k], "*", "*");
  for (std::size_t a = 1; a < g.order(); ++a) {
    for (std::size_t c = 1; c < g.order(); ++c) b.set_composite(name(a), name(c), name(g.mul[c][a]));
  }
  return b.build();
}

namespace {

std::string subset_name(std::uint32_t mask) {
  std::string out = "{";
  for (int i = 0; mask >> i; ++i) {
    if (!(mask >> i & 1)) continue;
    if (out.size() > 1) out += ",";
    out += std::to_string(i + 1);
  }
  return out + "}";
}

std::vector<int> elements(std::uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask >> i; ++i) {
    if (mask >> i & 1) out.push_back(i);
  }
  return out;
}

}  // namespace

Assembler finite_sets(int n) {
  if (n < 0 || n > 3) throw InvalidInput("finite_sets: n must be in 0..3");
  struct Injection {
    std::uint32_t src, tgt;
    std::vector<int> image;  // image of the i-th element of src
    std::string name;
  };
  std::vector<Injection> maps;
  AssemblerBuilder b(subset_name(0));
  const std::uint32_t full = (1u << n);
  for (std::uint32_t x = 1; x < full; ++x) b.add_object(subset_name(x));
  for (std::uint32_t x = 1; x < full; ++x) {
    const auto xs = elements(x);
    for (std::uint32_t y = 1; y < full; ++y) {
      const auto ys = elements(y);
      if (ys.size() < xs.size()) continue;
      std::vector<int> pick(ys.size(), 0);
      std::fill(pick.begin(), pick.begin() + static_cast<long>(xs.size()), 1);
      std::sort(pick.begin(), pick.end());
      do {
        std::vector<int> chosen;
        for (std::size_t i = 0; i < ys.size(); ++i) {
          if (pick[i]) chosen.push_back(ys[i]);
        }
        do {
          Injection inj{x, y, chosen, {}};
          if (x == y && chosen == xs) {
            inj.name = CategoryBuilder::identity_id(subset_name(x));
          } else {
            inj.name = subset_name(x) + ">" + subset_name(y) + "[";
            for (std::size_t i = 0; i < chosen.size(); ++i) {
              inj.name += (i ? "," : "") + std::to_string(chosen[i] + 1);
            }
            inj.name += "]";
            b.add_morphism(inj.name, subset_name(x), subset_name(y));
          }
          maps.push_back(std::move(inj));
        } while (std::next_permutation(chosen.begin(), chosen.end()));
      } while (std::next_permutation(pick.begin(), pick.end()));
    }
  }
  for (const auto& f : maps) {
    for (const auto& g : maps) {
      if (f.tgt != g.src || f.name.starts_with("id:") || g.name.starts_with("id:")) continue;
      const auto ys = elements(g.src);
      std::vector<int> image;
      for (int v : f.image) {
        auto pos = std::find(ys.begin(), ys.end(), v) - ys.begin();
        image.push_back(g.image[static_cast<std::size_t>(pos)]);
      }
      for (const auto& h : maps) {
        if (h.src == f.src && h.tgt == g.tgt && h.image == image) {
          b.set_composite(f.name, g.name, h.name);
          break;
        }
      }
    }
  }
  for (std::uint32_t y = 1; y < full; ++y) {
    if (std::popcount(y) < 2) continue;
    std::vector<std::string> family;
    for (int e : elements(y)) {
      family.push_back(subset_name(1u << e) + ">" + subset_name(y) + "[" + std::to_string(e + 1) + "]");
    }
    b.add_cover(subset_name(y), family);
  }
  return b.build();
}

ObjectSet finite_sets_points(const Assembler& sets) {
  ObjectSet out{sets.initial()};
  for (ObjIdx a : sets.noninitial_objects()) {
    if (sets.name(a).find(',') == std::string::npos) out.insert(a);
  }
  return out;
}

Assembler open_sets(const FiniteSpace& space) {
  const auto n = space.points.size();
  if (n > 4) throw InvalidInput("open_sets: at most 4 points");
  const std::uint32_t top = (1u << n) - 1;
  std::vector<std::uint32_t> opens = space.opens;
  std::sort(opens.begin(), opens.end());
  opens.erase(std::unique(opens.begin(), opens.end()), opens.end());
  auto is_open = [&](std::uint32_t m) { return std::binary_search(opens.begin(), opens.end(), m); };
  if (!is_open(0) || !is_open(top)) throw InvalidInput("open_sets: ∅ and the whole space must be open");
  for (auto u : opens) {
    if (u > top) throw InvalidInput("open_sets: open set mentions an unknown point");
    for (auto v : opens) {
      if (!is_open(u | v) || !is_open(u & v)) throw InvalidInput("open_sets: not a topology");
    }
  }
  auto name = [&](std::uint32_t m) {
    std::string out = "{";
    for (std::size_t i = 0; i < n; ++i) {
      if (!(m >> i & 1)) continue;
      if (out.size() > 1) out += ",";
      out += space.points[i];
    }
    return out + "}";
  };
  auto arrow = [&](std::uint32_t u, std::uint32_t v) { return name(u) + "<" + name(v); };
  auto proper = [](std::uint32_t u, std::uint32_t v) { return u != v && (u & v) == u; };
  AssemblerBuilder b(name(0));
  for (auto u : opens) {
    if (u) b.add_object(name(u));
  }
  for (auto u : opens) {
    for (auto v : opens) {
      if (u && proper(u, v)) b.add_morphism(arrow(u, v), name(u), name(v));
    }
  }
  for (auto u : opens) {
    for (auto v : opens) {
      for (auto w : opens) {
        if (u && proper(u, v) && proper(v, w)) b.set_composite(arrow(u, v), arrow(v, w), arrow(u, w));
      }
    }
  }
  for (auto v : opens) {
    std::uint32_t covered = 0;
    std::vector<std::string> family;
    for (auto u : opens) {
      if (u && proper(u, v)) {
        covered |= u;
        family.push_back(arrow(u, v));
      }
    }
    if (v && covered == v) b.add_cover(name(v), family);
  }
  return b.build();
}

Assembler preorder5() {
  AssemblerBuilder b(kInitialName);
  for (const char* x : {"A", "B", "C", "D"}) b.add_object(x);
  b.add_morphism("A<B", "A", "B");
  b.add_morphism("A<C", "A", "C");
  b.add_morphism("A<D", "A", "D");
  b.add_morphism("B<D", "B", "D");
  b.add_morphism("C<D", "C", "D");
  b.set_composite("A<B", "B<D", "A<D");
  b.set_composite("A<C", "C<D", "A<D");
  b.add_cover("D", {"B<D", "C<D"});
  return b.build();
}

ObjectSet preorder5_sieve(const Assembler& p) { return object_set(p, {kInitialName, "A"}); }

namespace {

struct Interval {
  int lo, hi;
  bool lc, hc;

  bool contains(const Interval& x) const {
    bool left = lo < x.lo || (lo == x.lo && (lc || !x.lc));
    bool right = x.hi < hi || (x.hi == hi && (hc || !x.hc));
    return left && right;
  }
  Interval shifted(int t) const { return {lo + t, hi + t, lc, hc}; }
  std::string name() const {
    return lo == hi ? point_name(lo) : interval_name(lo, hi, lc, hc);
  }
};

std::string padded(int v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%02d", v);
  return buf;
}

std::string shift_name(const Interval& x, const Interval& y, int t) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%+03d", t);
  return x.name() + ">" + y.name() + "@" + buf;
}

}  // namespace

std::string interval_name(int lo, int hi, bool lo_closed, bool hi_closed) {
  return std::string(lo_closed ? "[" : "(") + padded(lo) + "," + padded(hi) + (hi_closed ? "]" : ")");
}

std::string point_name(int p) { return "{" + padded(p) + "}"; }

Assembler intervals(int n, int m, IntervalVariant variant) {
  if (n < 1 || m < 1 || n * m > 12) throw InvalidInput("intervals: need n, m >= 1 and n*m <= 12");
  const int len = n * m;
  std::vector<Interval> objs;
  for (int a = 0; a <= len; ++a) {
    if (variant == IntervalVariant::kTotal) objs.push_back({a, a, true, true});
    for (int c = a + 1; c <= len; ++c) {
      if (variant == IntervalVariant::kClassical) {
        objs.push_back({a, c, true, true});
      } else {
        for (int k = 0; k < 4; ++k) objs.push_back({a, c, (k & 1) != 0, (k & 2) != 0});
      }
    }
  }
  AssemblerBuilder b(kInitialName);
  for (const auto& x : objs) b.add_object(x.name());

  std::vector<std::vector<std::vector<int>>> shifts(objs.size(),
                                                    std::vector<std::vector<int>>(objs.size()));
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      for (int t = -len; t <= len; ++t) {
        if (!objs[j].contains(objs[i].shifted(t))) continue;
        shifts[i][j].push_back(t);
        if (i != j || t != 0) b.add_morphism(shift_name(objs[i], objs[j], t), objs[i].name(), objs[j].name());
      }
    }
  }
  auto mor = [&](std::size_t i, std::size_t j, int t) {
    return i == j && t == 0 ? CategoryBuilder::identity_id(objs[i].name())
                            : shift_name(objs[i], objs[j], t);
  };
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      for (int t : shifts[i][j]) {
        if (i == j && t == 0) continue;
        for (std::size_t k = 0; k < objs.size(); ++k) {
          for (int s : shifts[j][k]) {
            if (j == k && s == 0) continue;
            b.set_composite(mor(i, j, t), mor(j, k, s), mor(i, k, t + s));
          }
        }
      }
    }
  }
  for (const auto& y : objs) {
    if (y.lo == y.hi) continue;
    auto piece = [&](const Interval& x) { return shift_name(x, y, 0); };
    for (int c = y.lo + 1; c < y.hi; ++c) {
      if (variant == IntervalVariant::kClassical) {
        b.add_cover(y.name(), {piece({y.lo, c, true, true}), piece({c, y.hi, true, true})});
      } else {
        b.add_cover(y.name(), {piece({y.lo, c, y.lc, false}), piece({c, c, true, true}),
                               piece({c, y.hi, false, y.hc})});
      }
    }
    if (variant == IntervalVariant::kTotal) {
      if (y.lc) b.add_cover(y.name(), {piece({y.lo, y.lo, true, true}), piece({y.lo, y.hi, false, y.hc})});
      if (y.hc) b.add_cover(y.name(), {piece({y.lo, y.hi, y.lc, false}), piece({y.hi, y.hi, true, true})});
    }
  }
  return b.build();
}

ObjectSet interval_points(const Assembler& iv) {
  ObjectSet out{iv.initial()};
  for (ObjIdx a : iv.noninitial_objects()) {
    if (iv.name(a).starts_with("{")) out.insert(a);
  }
  return out;
}

Assembler poset_sink() {
  AssemblerBuilder b(kInitialName);
  for (const char* x : {"A", "B", "C", "S"}) b.add_object(x);
  b.add_morphism("C<A", "C", "A");
  b.add_morphism("C<B", "C", "B");
  b.add_morphism("C<S", "C", "S");
  b.add_morphism("A<S", "A", "S");
  b.add_morphism("B<S", "B", "S");
  b.set_composite("C<A", "A<S", "C<S");
  b.set_composite("C<B", "B<S", "C<S");
  for (const char* f : {"C<A", "C<B", "C<S", "A<S", "B<S"}) {
    std::string id = f;
    b.add_cover(id.substr(2), {id});
  }
  return b.build();
}

namespace {

int int_param(const std::vector<std::string>& params, std::size_t i, int fallback) {
  if (i >= params.size()) return fallback;
  try {
    std::size_t used = 0;
    int v = std::stoi(params[i], &used);
    if (used == params[i].size()) return v;
  } catch (const std::exception&) {
  }
  throw InvalidInput("expected an integer parameter, got '" + params[i] + "'");
}

GroupTable group_param(const std::string& g) {
  if (g == "1") return trivial_group();
  if (g == "S3") return symmetric_group3();
  if (g.size() > 1 && g[0] == 'Z') {
    int order = int_param({g.substr(1)}, 0, 0);
    if (order >= 1 && order <= 12) return cyclic_group(static_cast<std::size_t>(order));
  }
  throw InvalidInput("unknown group '" + g + "' (use 1, Z<n>, S3)");
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"trivial", "sphere_group", "finite_sets", "open_sets", "preorder5", "intervals", "poset_sink"};
}

NamedFixture fixture(const std::string& name, const std::vector<std::string>& params) {
  if (name == "trivial") return {name, trivial_assembler(), {}};
  if (name == "sphere_group") {
    return {name, sphere_group(group_param(params.empty() ? "Z2" : params[0])), {}};
  }
  if (name == "finite_sets") {
    Assembler a = finite_sets(int_param(params, 0, 3));
    ObjectSet pts = finite_sets_points(a);
    return {name, a, {{"points", pts}}};
  }
  if (name == "open_sets") {
    const std::string space = params.empty() ? "sierpinski" : params[0];
    if (space == "sierpinski") return {name, open_sets(sierpinski_space()), {}};
    if (space.starts_with("discrete")) {
      int k = int_param({space.substr(8)}, 0, 0);
      if (k >= 1 && k <= 4) return {name, open_sets(discrete_space(static_cast<std::size_t>(k))), {}};
    }
    throw InvalidInput("unknown space '" + space + "' (use sierpinski, discrete<k>)");
  }
  if (name == "preorder5") {
    Assembler a = preorder5();
    ObjectSet d = preorder5_sieve(a);
    return {name, a, {{"D", d}}};
  }
  if (name == "intervals") {
    int n = int_param(params, 0, 2);
    int m = int_param(params, 1, 3);
    std::string v = params.size() > 2 ? params[2] : "total";
    if (v != "total" && v != "classical") throw InvalidInput("unknown interval variant '" + v + "'");
    Assembler a = intervals(n, m, v == "total" ? IntervalVariant::kTotal : IntervalVariant::kClassical);
    ObjectSet pts = interval_points(a);
    return {name, a, {{"points", pts}}};
  }
  if (name == "poset_sink") return {name, poset_sink(), {}};
  throw InvalidInput("unknown fixture '" + name + "'");
}

}  // namespace scissors
