// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <vector>

#include "scissors/constructions.hpp"

namespace scissors {

/// A finite group by its multiplication table; element 0 is the unit.
struct GroupTable {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> mul;  // mul[a][b] = a·b

  std::size_t order() const { return names.size(); }
};

GroupTable trivial_group();
GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group3();
/// Checks the group axioms on the table.
bool is_group(const GroupTable& g);

/// A finite topological space as a list of open sets (bitmasks over the
/// points).
struct FiniteSpace {
  std::vector<std::string> points;
  std::vector<std::uint32_t> opens;
};

FiniteSpace sierpinski_space();
FiniteSpace discrete_space(std::size_t n);

enum class IntervalVariant { kClassical, kTotal };

Assembler trivial_assembler();
/// Objects ∅ and *, Aut(*) = G (composition b∘a = b·a).
Assembler sphere_group(const GroupTable& g);
/// Subsets of {1..n} and all injections; n ≤ 3.
Assembler finite_sets(int n);
/// ∅ and the singletons.
ObjectSet finite_sets_points(const Assembler& sets);
/// Opens ordered by inclusion; families cover when their union is the
/// target. At most 4 points.
Assembler open_sets(const FiniteSpace& space);
/// 0 -> A -> {B, C} -> D with the single declared cover {B->D, C->D}.
Assembler preorder5();
ObjectSet preorder5_sieve(const Assembler& p);
/// Intervals with endpoints in {0..n·m} (units of 1/n) under lattice
/// translations. The total variant has points and all four boundary types.
Assembler intervals(int n, int m, IntervalVariant variant);
/// ∅ and the points (empty in the classical variant).
ObjectSet interval_points(const Assembler& intervals);
/// ∅ < C < {A, B} < S with singleton covers.
Assembler poset_sink();

/// Name of the interval object with the given endpoints (units of 1/n).
std::string interval_name(int lo, int hi, bool lo_closed, bool hi_closed);
std::string point_name(int p);

struct NamedFixture {
  std::string name;
  Assembler assembler;
  std::map<std::string, ObjectSet> sieves;  // named object sets
};

/// Registry used by the command line: "trivial", "sphere_group [1|Z2|Z3|S3]",
/// "finite_sets [n]", "open_sets [sierpinski|discrete2|discrete3]",
/// "preorder5", "intervals [n m classical|total]", "poset_sink".
NamedFixture fixture(const std::string& name, const std::vector<std::string>& params);
std::vector<std::string> fixture_names();

}  // namespace scissors
