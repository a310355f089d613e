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

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "mw/activity/activity.h"
#include "mw/linker/linker.h"

namespace mw::link {
namespace {

// Comparable families of guard operand types.
enum class Family { kNumber, kText, kDate, kEnum };

struct OperandInfo {
  GuardOperand operand;
  std::optional<Family> family;  // nullopt: string literal, adapts to the other side
};

class ActivityResolver {
 public:
  ActivityResolver(const SymbolTable& table, Diagnostics& diags)
      : table_(table), diags_(diags) {}

  ResolvedActivity Resolve(ad::ActivityDef def) {
    ResolvedActivity out;
    out.def = std::move(def);
    const ad::ActivityDef& a = out.def;
    for (const auto& action : a.actions) out.actions.push_back(ResolveAction(action));
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
      out.transitions.push_back(ResolveTransition(a, a.transitions[i]));
    }
    CheckStructure(out);
    return out;
  }

 private:
  void Error(std::string code, std::string message, const SourceSpan& span) {
    diags_.push_back(Diagnostic::Error(std::move(code), std::move(message), span));
  }

  ResolvedAction ResolveAction(const ad::ActionDef& action) {
    ResolvedAction out;
    out.name = action.name;
    for (const auto* params : {&action.inputs, &action.outputs}) {
      for (const auto& p : *params) {
        if (table_.FindClass(p.type_name) != nullptr) {
          out.param_classes[p.name] = p.type_name;
        } else if (LookupBaseType(p.type_name) || table_.FindEnum(p.type_name)) {
          Error("MW407",
                "parameter '" + p.name + "' must have a class type, not " + p.type_name,
                p.span.value);
        } else {
          Error("MW401", "unknown type '" + p.type_name + "' for parameter '" + p.name + "'",
                p.span.value);
        }
      }
    }
    if (const auto* code = std::get_if<ad::OpaqueCode>(&action.content)) {
      diags_.push_back(Diagnostic::Warning(
          "MW303", "code in action '" + action.name + "' is kept but never executed",
          code->span.value));
      return out;
    }
    const auto& call = std::get<ad::ViewCall>(action.content);
    const SourceSpan& span = call.span.value;
    if (table_.FindClass(call.class_name) == nullptr) {
      Error("MW402", "unknown view '" + call.QualifiedView() + "': no class " + call.class_name,
            span);
      return out;
    }
    const ViewSymbol* view = table_.FindView(call.class_name, call.view_name);
    if (view == nullptr) {
      Error("MW402", "unknown view '" + call.QualifiedView() + "'", span);
      return out;
    }
    if (view->modifier == cv::ViewModifier::kField) {
      Error("MW402",
            "view '" + call.QualifiedView() + "' is a field view and can only be included",
            span);
      return out;
    }
    out.view = ViewKey{call.class_name, call.view_name};
    const std::string& owner = call.class_name;
    auto check_param = [&](const std::string& param, bool want_output) {
      const ad::ParamDecl* decl =
          want_output ? action.FindOutput(param) : action.FindInput(param);
      if (decl == nullptr) {
        Error(action.FindParam(param) != nullptr ? "MW407" : "MW410",
              "'" + param + "' is not " + (want_output ? "an out" : "an in") +
                  "-parameter of action " + action.name,
              span);
        return;
      }
      if (decl->type_name != owner) {
        Error("MW407",
              "parameter '" + param + "' has type " + decl->type_name + " but view " +
                  call.QualifiedView() + " belongs to " + owner,
              span);
      }
    };
    if (view->modifier == cv::ViewModifier::kEditor) {
      if (!call.assign_to) {
        Error("MW407",
              "the result of editor view '" + call.QualifiedView() +
                  "' must be assigned to an out-parameter",
              span);
      } else {
        check_param(*call.assign_to, true);
      }
    } else if (call.assign_to) {
      Error("MW407", "display view '" + call.QualifiedView() + "' does not return an object",
            span);
    }
    if (call.argument) check_param(*call.argument, false);
    return out;
  }

  // Parameters visible to guards leaving `sources`: those every source
  // action declares, with the same type.
  std::map<std::string, std::string> GuardScope(const ad::ActivityDef& a,
                                                const std::vector<ad::Endpoint>& sources) {
    std::optional<std::map<std::string, std::string>> scope;
    for (const auto& src : sources) {
      std::map<std::string, std::string> params;
      if (const auto* node = src.action()) {
        if (const auto* def = a.FindAction(node->action)) {
          for (const auto* list : {&def->inputs, &def->outputs}) {
            for (const auto& p : *list) params[p.name] = p.type_name;
          }
        }
      }
      if (!scope) {
        scope = std::move(params);
      } else {
        for (auto it = scope->begin(); it != scope->end();) {
          auto other = params.find(it->first);
          it = other == params.end() || other->second != it->second ? scope->erase(it)
                                                                    : std::next(it);
        }
      }
    }
    return scope.value_or(std::map<std::string, std::string>{});
  }

  void CheckEndpoint(const ad::ActivityDef& a, const ad::Endpoint& e, bool is_source) {
    const auto* node = e.action();
    if (node == nullptr) return;
    const ad::ActionDef* def = a.FindAction(node->action);
    if (def == nullptr) {
      Error("MW410", "unknown action '" + node->action + "'", e.span.value);
      return;
    }
    if (!node->param) return;
    const ad::ParamDecl* p = is_source ? def->FindParam(*node->param)
                                       : def->FindInput(*node->param);
    if (p == nullptr) {
      Error("MW410",
            "action " + node->action + " has no " + (is_source ? "" : "in-") +
                "parameter '" + *node->param + "'",
            e.span.value);
    }
  }

  const ad::ParamDecl* EndpointParam(const ad::ActivityDef& a, const ad::Endpoint& e) {
    const auto* node = e.action();
    if (node == nullptr || !node->param) return nullptr;
    const ad::ActionDef* def = a.FindAction(node->action);
    return def == nullptr ? nullptr : def->FindParam(*node->param);
  }

  ResolvedTransition ResolveTransition(const ad::ActivityDef& a,
                                       const ad::TransitionStmt& t) {
    ResolvedTransition out;
    out.sources = t.sources;
    out.span = t.span.value;
    for (const auto& src : t.sources) CheckEndpoint(a, src, true);
    auto scope = GuardScope(a, t.sources);
    for (const auto& alt : t.alternatives) {
      CheckEndpoint(a, alt.target, false);
      if (const ad::ParamDecl* to = EndpointParam(a, alt.target)) {
        for (const auto& src : t.sources) {
          const ad::ParamDecl* from = EndpointParam(a, src);
          if (from != nullptr && from->type_name != to->type_name) {
            Error("MW407",
                  "object flow from " + src.ToString() + " (" + from->type_name + ") to " +
                      alt.target.ToString() + " (" + to->type_name + ")",
                  alt.target.span.value);
          }
        }
      }
      ResolvedAlternative r;
      r.target = alt.target;
      if (alt.guard) r.guard = ResolveGuard(*alt.guard, scope);
      out.alternatives.push_back(std::move(r));
    }
    return out;
  }

  std::optional<OperandInfo> ResolveOperand(const ad::Operand& op,
                                            const std::map<std::string, std::string>& scope) {
    OperandInfo info;
    GuardOperand& g = info.operand;
    g.span = op.span.value;
    if (const auto* i = std::get_if<ad::IntLiteral>(&op.value)) {
      g.kind = GuardOperand::Kind::kInt;
      g.int_value = i->value;
      g.type = TypeRef{TypeRef::Kind::kBase, "Number", BaseType::kNumber};
      info.family = Family::kNumber;
      return info;
    }
    if (const auto* s = std::get_if<ad::StringLiteral>(&op.value)) {
      g.kind = GuardOperand::Kind::kString;
      g.text = s->value;
      g.type = TypeRef{TypeRef::Kind::kBase, "MWString", BaseType::kString};
      return info;
    }
    const auto& path = std::get<ad::ParamAttribute>(op.value);
    if (auto it = scope.find(path.param); it != scope.end()) {
      const ClassSymbol* cls = table_.FindClass(it->second);
      if (cls == nullptr) return std::nullopt;  // reported with the parameter
      const AttributeSymbol* attr = cls->FindAttribute(path.attribute);
      if (attr == nullptr) {
        Error("MW404", "class " + cls->name + " has no attribute '" + path.attribute + "'",
              g.span);
        return std::nullopt;
      }
      g.kind = GuardOperand::Kind::kAttribute;
      g.param = path.param;
      g.attribute = path.attribute;
      g.type = attr->type;
      switch (attr->type.kind) {
        case TypeRef::Kind::kEnum: info.family = Family::kEnum; break;
        case TypeRef::Kind::kClass:
          Error("MW409",
                "'" + path.param + "." + path.attribute + "' has class type " +
                    attr->type.name + " and cannot be compared",
                g.span);
          return std::nullopt;
        case TypeRef::Kind::kBase:
          info.family = attr->type.base == BaseType::kNumber ? Family::kNumber
                        : attr->type.base == BaseType::kDate ? Family::kDate
                                                             : Family::kText;
      }
      return info;
    }
    if (const EnumSymbol* e = table_.FindEnum(path.param)) {
      if (!e->HasLiteral(path.attribute)) {
        Error("MW404", "enum " + e->name + " has no literal '" + path.attribute + "'", g.span);
        return std::nullopt;
      }
      g.kind = GuardOperand::Kind::kEnum;
      g.text = path.attribute;
      g.type = TypeRef{TypeRef::Kind::kEnum, e->name, BaseType::kString};
      info.family = Family::kEnum;
      return info;
    }
    Error("MW408", "guard refers to undeclared parameter '" + path.param + "'", g.span);
    return std::nullopt;
  }

  // Fits a string literal to the family of the other side.
  bool AdaptLiteral(OperandInfo& lit, const OperandInfo& other) {
    if (lit.family) return true;
    Family want = other.family.value_or(Family::kText);
    if (want == Family::kText) {
      lit.family = Family::kText;
      return true;
    }
    if (want == Family::kDate) {
      auto date = ParseIsoDate(lit.operand.text);
      if (!date) {
        Error("MW409", "'" + lit.operand.text + "' is not a YYYY-MM-DD date",
              lit.operand.span);
        return false;
      }
      lit.operand.kind = GuardOperand::Kind::kDate;
      lit.operand.date = *date;
      lit.operand.type = TypeRef{TypeRef::Kind::kBase, "MWDate", BaseType::kDate};
      lit.family = Family::kDate;
      return true;
    }
    lit.family = Family::kText;
    return true;
  }

  std::optional<ResolvedGuard> ResolveGuard(const ad::GuardExpr& g,
                                            const std::map<std::string, std::string>& scope) {
    if (const auto* l = std::get_if<ad::Logical>(&g.node)) {
      auto lhs = ResolveGuard(*l->lhs, scope);
      auto rhs = ResolveGuard(*l->rhs, scope);
      if (!lhs || !rhs) return std::nullopt;
      ResolvedGuard out;
      out.kind = l->op == ad::LogicOp::kAnd ? ResolvedGuard::Kind::kAnd
                                            : ResolvedGuard::Kind::kOr;
      out.children.push_back(std::move(*lhs));
      out.children.push_back(std::move(*rhs));
      out.text = ad::PrintGuard(g);
      return out;
    }
    const auto& c = std::get<ad::Compare>(g.node);
    auto lhs = ResolveOperand(c.lhs, scope);
    auto rhs = ResolveOperand(c.rhs, scope);
    if (!lhs || !rhs) return std::nullopt;
    if (!AdaptLiteral(*lhs, *rhs) || !AdaptLiteral(*rhs, *lhs)) return std::nullopt;
    const SourceSpan& span = g.span.value;
    std::string shown = ad::PrintGuard(g);
    if (lhs->family != rhs->family ||
        (lhs->family == Family::kEnum && lhs->operand.type.name != rhs->operand.type.name)) {
      Error("MW409",
            "cannot compare " + lhs->operand.type.name + " with " + rhs->operand.type.name +
                " in '" + shown + "'",
            span);
      return std::nullopt;
    }
    const bool equality = c.op == ad::CompareOp::kEq || c.op == ad::CompareOp::kNe;
    if (!equality && (lhs->family == Family::kText || lhs->family == Family::kEnum)) {
      Error("MW409",
            std::string("operator ") + ad::CompareOpSpelling(c.op) + " is not defined for " +
                lhs->operand.type.name + " in '" + shown + "'",
            span);
      return std::nullopt;
    }
    ResolvedGuard out;
    out.kind = ResolvedGuard::Kind::kCompare;
    out.op = c.op;
    out.lhs = std::move(lhs->operand);
    out.rhs = std::move(rhs->operand);
    out.text = shown;
    return out;
  }

  void CheckStructure(ResolvedActivity& out) {
    const ad::ActivityDef& a = out.def;
    std::vector<std::size_t> initial;
    bool reaches_final = false;
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
      const auto& t = a.transitions[i];
      if (std::any_of(t.sources.begin(), t.sources.end(),
                      [](const ad::Endpoint& e) { return e.is_initial(); })) {
        initial.push_back(i);
      }
      for (const auto& alt : t.alternatives) reaches_final |= alt.target.is_final();
      for (const auto& src : t.sources) {
        const auto* node = src.action();
        if (node == nullptr || a.FindAction(node->action) == nullptr) continue;
        auto [it, inserted] = out.outgoing.emplace(node->action, i);
        if (!inserted && it->second != i) {
          diags_.push_back(
              Diagnostic::Error("MW306",
                                "action " + node->action +
                                    " already has an outgoing transition statement",
                                src.span.value)
                  .AddRelated(a.transitions[it->second].span.value, "first one here"));
        }
      }
    }
    if (initial.empty()) {
      Error("MW304", "activity " + a.name + " has no transition from 'initial'", a.span.value);
    } else {
      out.initial_transition = initial.front();
      for (std::size_t k = 1; k < initial.size(); ++k) {
        diags_.push_back(Diagnostic::Error("MW304",
                                           "activity " + a.name +
                                               " has more than one transition from 'initial'",
                                           a.transitions[initial[k]].span.value)
                             .AddRelated(a.transitions[initial[0]].span.value, "first one here"));
      }
    }
    if (!reaches_final) {
      diags_.push_back(Diagnostic::Warning(
          "MW305", "no transition of activity " + a.name + " reaches 'final'", a.span.value));
    }
    for (const auto& action : a.actions) {
      if (out.outgoing.count(action.name) == 0) {
        diags_.push_back(Diagnostic::Warning(
            "MW307", "action " + action.name + " has no outgoing transition",
            action.span.value));
      }
    }
    // Reachability from initial over the transition graph.
    std::set<std::string> reached;
    std::deque<std::size_t> work(initial.begin(), initial.end());
    std::set<std::size_t> fired(initial.begin(), initial.end());
    while (!work.empty()) {
      const auto& t = a.transitions[work.front()];
      work.pop_front();
      for (const auto& alt : t.alternatives) {
        const auto* node = alt.target.action();
        if (node == nullptr || !reached.insert(node->action).second) continue;
        if (auto it = out.outgoing.find(node->action);
            it != out.outgoing.end() && fired.insert(it->second).second) {
          work.push_back(it->second);
        }
      }
    }
    for (const auto& action : a.actions) {
      if (!initial.empty() && reached.count(action.name) == 0) {
        diags_.push_back(Diagnostic::Warning(
            "MW412", "action " + action.name + " is unreachable from 'initial'",
            action.span.value));
      }
    }
  }

  const SymbolTable& table_;
  Diagnostics& diags_;
};

}  // namespace

const ResolvedActivity* LinkedModel::FindActivity(std::string_view name) const {
  for (const auto& a : activities) {
    if (a.def.name == name) return &a;
  }
  return nullptr;
}

LinkedModel ResolveActivities(std::vector<ad::ActivityDef> activities, SymbolTable table) {
  std::stable_sort(activities.begin(), activities.end(),
                   [](const auto& a, const auto& b) { return a.file < b.file; });
  LinkedModel model;
  model.table = std::move(table);
  std::map<std::string, SourceSpan> seen;
  for (auto& def : activities) {
    if (auto it = seen.find(def.name); it != seen.end()) {
      model.diagnostics.push_back(
          Diagnostic::Error("MW413", "activity " + def.name + " is defined twice",
                            def.span.value)
              .AddRelated(it->second, "first definition"));
      continue;
    }
    seen.emplace(def.name, def.span.value);
    ActivityResolver resolver(model.table, model.diagnostics);
    model.activities.push_back(resolver.Resolve(std::move(def)));
  }
  if (model.activities.empty()) {
    model.diagnostics.push_back(
        Diagnostic::Warning("MW411", "project defines no activities"));
  }
  return model;
}

LinkedModel CheckProject(ProjectAsts asts) {
  SymbolTableResult built = BuildSymbolTable(std::move(asts.class_diagrams));
  Diagnostics diags = std::move(built.diagnostics);
  Diagnostics views = ResolveClassviews(std::move(asts.classviews), built.table);
  diags.insert(diags.end(), views.begin(), views.end());
  LinkedModel model = ResolveActivities(std::move(asts.activities), std::move(built.table));
  diags.insert(diags.end(), model.diagnostics.begin(), model.diagnostics.end());
  SortDiagnostics(diags);
  model.diagnostics = std::move(diags);
  return model;
}

}  // namespace mw::link
