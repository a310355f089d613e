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

#ifndef MW_LINKER_SYMBOLS_H_
#define MW_LINKER_SYMBOLS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mw/activity/ast.h"
#include "mw/classdiagram/ast.h"
#include "mw/classviews/ast.h"
#include "mw/core/annotation.h"
#include "mw/core/date.h"
#include "mw/core/source.h"

namespace mw::link {

// The closed registry of built-in value types.
enum class BaseType { kString, kEmail, kNumber, kDate };

const char* BaseTypeName(BaseType type);
std::optional<BaseType> LookupBaseType(std::string_view name);

struct TypeRef {
  enum class Kind { kBase, kEnum, kClass };

  Kind kind = Kind::kBase;
  std::string name;  // base type, enum or class name
  BaseType base = BaseType::kString;

  bool is_base(BaseType b) const { return kind == Kind::kBase && base == b; }
  bool is_textual() const {
    return is_base(BaseType::kString) || is_base(BaseType::kEmail);
  }
  bool operator==(const TypeRef&) const = default;
};

struct AttributeSymbol {
  std::string name;
  TypeRef type;
  SourceSpan span;
};

struct RelationSymbol {
  cd::RelationKind kind = cd::RelationKind::kAssociation;
  std::string source_class;
  std::optional<std::string> source_role;
  std::string target_class;
  std::optional<std::string> target_role;
  cd::Cardinality target_cardinality;
  bool directed = true;
  // Created from a class-typed attribute rather than written as a relation.
  bool synthetic = false;
  SourceSpan span;
};

// One navigable end of a relation as seen from a class.
struct RoleSymbol {
  std::string name;
  std::size_t relation = 0;  // index into SymbolTable::relations
  std::string target_class;
  cd::Cardinality cardinality;
  cd::RelationKind kind = cd::RelationKind::kAssociation;
  // True on the whole side of a composition: deleting the owner deletes the
  // objects reached through this role.
  bool owns_target = false;
};

struct ClassSymbol {
  std::string name;
  SourceSpan span;
  std::vector<AttributeSymbol> attributes;  // declaration order
  std::map<std::string, RoleSymbol> roles;

  const AttributeSymbol* FindAttribute(std::string_view attr) const;
  const RoleSymbol* FindRole(std::string_view role) const;
};

struct EnumSymbol {
  std::string name;
  std::vector<std::string> literals;
  SourceSpan span;

  bool HasLiteral(std::string_view literal) const;
};

// A view element after include expansion and annotation merging.
struct EffectiveElement {
  enum class Kind { kAttribute, kRole, kStaticText };

  Kind kind = Kind::kAttribute;
  std::string name;                // attribute or role name
  std::optional<TypeRef> type;     // kAttribute
  std::optional<RoleSymbol> role;  // kRole
  std::string text;                // kStaticText
  cv::ViewModifier mode = cv::ViewModifier::kDisplay;
  // Attributes-block annotations first, then the element's own.
  std::vector<Annotation> annotations;
  std::string origin_view;  // view the element was written in
  SourceSpan span;

  bool HasAnnotation(std::string_view annotation) const;
  const Annotation* FindAnnotation(std::string_view annotation) const;
};

struct ViewSymbol {
  std::string owner_class;
  std::optional<std::string> name;
  cv::ViewModifier modifier = cv::ViewModifier::kDisplay;
  std::vector<Annotation> annotations;
  std::vector<EffectiveElement> elements;
  SourceSpan span;

  std::string QualifiedName() const;
  bool HasAnnotation(std::string_view annotation) const;
};

using ViewKey = std::pair<std::string, std::string>;  // (class, view)

struct SymbolTable {
  std::map<std::string, ClassSymbol> classes;
  std::map<std::string, EnumSymbol> enums;
  std::vector<RelationSymbol> relations;
  std::map<ViewKey, ViewSymbol> views;
  std::vector<ViewSymbol> anonymous_views;

  const ClassSymbol* FindClass(std::string_view name) const;
  const EnumSymbol* FindEnum(std::string_view name) const;
  const ViewSymbol* FindView(std::string_view cls, std::string_view view) const;
};

// Guard operand after binding: an attribute of a flow parameter or a typed
// literal.
struct GuardOperand {
  enum class Kind { kAttribute, kInt, kString, kDate, kEnum };

  Kind kind = Kind::kInt;
  std::string param;
  std::string attribute;
  TypeRef type;  // attribute type, or the type the literal takes
  std::int64_t int_value = 0;
  std::string text;  // string literal, enum literal, or ISO date
  CalendarDate date;
  SourceSpan span;
};

struct ResolvedGuard {
  enum class Kind { kCompare, kAnd, kOr };

  Kind kind = Kind::kCompare;
  ad::CompareOp op = ad::CompareOp::kEq;
  GuardOperand lhs;
  GuardOperand rhs;
  std::vector<ResolvedGuard> children;  // two, for kAnd / kOr
  std::string text;                     // canonical printed form
};

struct ResolvedAlternative {
  std::optional<ResolvedGuard> guard;
  ad::Endpoint target;
};

struct ResolvedTransition {
  std::vector<ad::Endpoint> sources;
  std::vector<ResolvedAlternative> alternatives;
  SourceSpan span;
};

struct ResolvedAction {
  std::string name;
  std::optional<ViewKey> view;  // nullopt for code actions
  std::map<std::string, std::string> param_classes;  // param -> class
};

struct ResolvedActivity {
  ad::ActivityDef def;
  std::vector<ResolvedAction> actions;          // parallel to def.actions
  std::vector<ResolvedTransition> transitions;  // parallel to def.transitions
  std::optional<std::size_t> initial_transition;
  std::map<std::string, std::size_t> outgoing;  // action -> transition index

  const ResolvedAction* FindAction(std::string_view name) const;
  const ad::ActionDef* FindActionDef(std::string_view name) const;
};

}  // namespace mw::link

#endif  // MW_LINKER_SYMBOLS_H_
