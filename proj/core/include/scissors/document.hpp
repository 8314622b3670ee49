// Copyright 2026 The scissors Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>
#include <string_view>

#include "scissors/constructions.hpp"

namespace scissors {

/// Object and morphism id maps of a stored assembler morphism.
struct MorphismMapSpec {
  std::map<std::string, std::string> objects;
  std::map<std::string, std::string> morphisms;
};

/// The JSON assembler format:
///   {"objects": [...], "initial": "...",
///    "morphisms": [{"id", "src", "tgt"}],
///    "composition": [{"first", "second", "result"}],
///    "covers": [{"target", "family": [...]}],
///    "sieves": {"name": [...]}, "morphism_maps": {"name": {"objects", "morphisms"}}}
/// Identities "id:<obj>" and "init:<obj>" are implicit.
struct AssemblerDocument {
  Assembler assembler;
  std::map<std::string, ObjectSet> sieves;
  std::map<std::string, MorphismMapSpec> morphism_maps;
};

/// Throws FormatError for malformed JSON or a wrong shape, InvalidInput when
/// the data does not describe an assembler.
AssemblerDocument parse_document(std::string_view text);
AssemblerDocument load_document(const std::string& path);

/// Canonical text with sorted keys; objects and morphisms keep index order.
std::string emit_document(const Assembler& a, const std::map<std::string, ObjectSet>& sieves = {},
                          const std::map<std::string, MorphismMapSpec>& maps = {});
void save_document(const std::string& path, const std::string& text);

/// Same named data, down to the declared covers.
bool structurally_equal(const Assembler& a, const Assembler& b);

}  // namespace scissors
