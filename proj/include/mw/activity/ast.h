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

#ifndef MW_ACTIVITY_AST_H_
#define MW_ACTIVITY_AST_H_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mw/core/box.h"
#include "mw/core/source.h"

namespace mw::ad {

struct ParamDecl {
  std::string type_name;
  std::string name;
  NodeSpan span;
  bool operator==(const ParamDecl&) const = default;
};

// `view : p = Person.registration();` or `view : Person.welcome(p);`
struct ViewCall {
  std::optional<std::string> assign_to;
  std::string class_name;
  std::string view_name;
  std::optional<std::string> argument;
  NodeSpan span;
  bool operator==(const ViewCall&) const = default;
  std::string QualifiedView() const { return class_name + "." + view_name; }
};

// `code { ... }`: carried verbatim, never executed.
struct OpaqueCode {
  std::string text;
  NodeSpan span;
  bool operator==(const OpaqueCode&) const = default;
};

using ActionContent = std::variant<ViewCall, OpaqueCode>;

struct ActionDef {
  std::string name;
  std::vector<ParamDecl> inputs;
  std::vector<ParamDecl> outputs;
  ActionContent content;
  NodeSpan span;
  bool operator==(const ActionDef&) const = default;

  const ParamDecl* FindInput(std::string_view param) const;
  const ParamDecl* FindOutput(std::string_view param) const;
  const ParamDecl* FindParam(std::string_view param) const;
};

struct InitialNode {
  bool operator==(const InitialNode&) const = default;
};
struct FinalNode {
  bool operator==(const FinalNode&) const = default;
};
// `Registration` or, with object flow, `Registration.p`.
struct ActionNode {
  std::string action;
  std::optional<std::string> param;
  bool operator==(const ActionNode&) const = default;
};

struct Endpoint {
  std::variant<InitialNode, FinalNode, ActionNode> node;
  NodeSpan span;
  bool operator==(const Endpoint&) const = default;

  bool is_initial() const { return std::holds_alternative<InitialNode>(node); }
  bool is_final() const { return std::holds_alternative<FinalNode>(node); }
  const ActionNode* action() const { return std::get_if<ActionNode>(&node); }
  std::string ToString() const;
};

// Guard operands. `x.y` is kept as a ParamAttribute at parse time; the
// linker decides whether `x` is a parameter or an enum (`Brand.AUDI`).
struct ParamAttribute {
  std::string param;
  std::string attribute;
  bool operator==(const ParamAttribute&) const = default;
};
struct IntLiteral {
  std::int64_t value = 0;
  bool operator==(const IntLiteral&) const = default;
};
struct StringLiteral {
  std::string value;
  bool operator==(const StringLiteral&) const = default;
};

struct Operand {
  std::variant<ParamAttribute, IntLiteral, StringLiteral> value;
  NodeSpan span;
  bool operator==(const Operand&) const = default;
};

enum class CompareOp { kGe, kLe, kGt, kLt, kEq, kNe };
const char* CompareOpSpelling(CompareOp op);

struct GuardExpr;

struct Compare {
  CompareOp op = CompareOp::kEq;
  Operand lhs;
  Operand rhs;
  bool operator==(const Compare&) const = default;
};

enum class LogicOp { kAnd, kOr };

struct Logical {
  LogicOp op = LogicOp::kAnd;
  Box<GuardExpr> lhs;
  Box<GuardExpr> rhs;
  bool operator==(const Logical&) const = default;
};

struct GuardExpr {
  std::variant<Compare, Logical> node;
  NodeSpan span;
  bool operator==(const GuardExpr&) const = default;
};

struct Alternative {
  std::optional<GuardExpr> guard;
  Endpoint target;
  bool operator==(const Alternative&) const = default;
};

// `A | B -> [g] C | D;`
struct TransitionStmt {
  std::vector<Endpoint> sources;
  std::vector<Alternative> alternatives;
  NodeSpan span;
  bool operator==(const TransitionStmt&) const = default;
};

enum class MemberKind { kAction, kTransition };

struct MemberRef {
  MemberKind kind;
  std::size_t index;
  bool operator==(const MemberRef&) const = default;
};

struct ActivityDef {
  std::string name;
  std::vector<ActionDef> actions;
  std::vector<TransitionStmt> transitions;
  std::vector<MemberRef> order;
  NodeSpan span;
  std::string file;

  bool operator==(const ActivityDef& o) const {
    return name == o.name && actions == o.actions &&
           transitions == o.transitions && order == o.order;
  }

  const ActionDef* FindAction(std::string_view name) const;
};

}  // namespace mw::ad

#endif  // MW_ACTIVITY_AST_H_
