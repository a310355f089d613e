// Copyright 2026 The MontiWeb Tools Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MW_CLASSDIAGRAM_AST_H_
#define MW_CLASSDIAGRAM_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mw/core/source.h"

namespace mw::cd {

struct AttributeDef {
  std::string type_name;  // resolved by the linker
  std::string name;
  NodeSpan span;
  bool operator==(const AttributeDef&) const = default;
};

struct ClassDef {
  std::string name;
  std::vector<AttributeDef> attributes;
  NodeSpan span;
  bool operator==(const ClassDef&) const = default;
};

struct EnumDef {
  std::string name;
  std::vector<std::string> literals;
  NodeSpan span;
  bool operator==(const EnumDef&) const = default;
};

// [min, max]; max == nullopt means unbounded.
struct Cardinality {
  std::int64_t min = 1;
  std::optional<std::int64_t> max = 1;

  static Cardinality Exactly(std::int64_t n) { return {n, n}; }
  static Cardinality Many() { return {0, std::nullopt}; }
  bool unbounded() const { return !max.has_value(); }
  bool Admits(std::int64_t count) const {
    return count >= min && (unbounded() || count <= *max);
  }
  bool operator==(const Cardinality&) const = default;
  std::string ToString() const;  // e.g. "[0..*]"
};

enum class RelationKind { kAssociation, kComposition };

// `composition Person (keeper) -> (cars) Car [*];`
struct RelationDef {
  RelationKind kind = RelationKind::kAssociation;
  std::string source_class;
  std::optional<std::string> source_role;
  std::string target_class;
  std::optional<std::string> target_role;
  Cardinality target_cardinality;
  bool directed = true;
  NodeSpan span;
  bool operator==(const RelationDef&) const = default;
};

enum class DeclKind { kClass, kEnum, kRelation };

// Position of a declaration in source order: which list, which index.
struct DeclRef {
  DeclKind kind;
  std::size_t index;
  bool operator==(const DeclRef&) const = default;
};

struct ClassDiagram {
  std::string name;
  std::vector<ClassDef> classes;
  std::vector<EnumDef> enums;
  std::vector<RelationDef> relations;
  std::vector<DeclRef> order;
  NodeSpan span;
  std::string file;

  bool operator==(const ClassDiagram& o) const {
    return name == o.name && classes == o.classes && enums == o.enums &&
           relations == o.relations && order == o.order;
  }
};

const char* RelationKindName(RelationKind kind);

}  // namespace mw::cd

#endif  // MW_CLASSDIAGRAM_AST_H_
