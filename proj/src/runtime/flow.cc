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

#include "mw/runtime/flow.h"

#include <set>

#include "mw/core/text.h"

namespace mw::rt {
namespace {

using link::GuardOperand;
using link::ResolvedGuard;

Diagnostic RuntimeError(std::string code, std::string message) {
  return Diagnostic::Error(std::move(code), std::move(message));
}

Expected<Value> OperandValue(const GuardOperand& op, const Bindings& bindings,
                             const ObjectStore& store) {
  switch (op.kind) {
    case GuardOperand::Kind::kInt: return Value::Num(op.int_value);
    case GuardOperand::Kind::kString: return Value::Str(op.text);
    case GuardOperand::Kind::kDate: return Value::Date(op.date);
    case GuardOperand::Kind::kEnum: return Value::Enum(op.type.name, op.text);
    case GuardOperand::Kind::kAttribute: break;
  }
  std::string path = op.param + "." + op.attribute;
  auto bound = bindings.find(op.param);
  if (bound == bindings.end()) {
    return RuntimeError("MW504", "guard operand " + path + ": parameter '" + op.param +
                                     "' is not bound");
  }
  const Object* obj = store.Find(bound->second);
  if (obj == nullptr) {
    return RuntimeError("MW504", "guard operand " + path + ": object " +
                                     bound->second.ToString() + " no longer exists");
  }
  auto field = obj->fields.find(op.attribute);
  if (field == obj->fields.end() || field->second.is_absent()) {
    return RuntimeError("MW504", "guard operand " + path + " has no value");
  }
  return field->second;
}

Expected<bool> Compare(ad::CompareOp op, const Value& lhs, const Value& rhs) {
  auto ordered = [op](auto ordering) {
    switch (op) {
      case ad::CompareOp::kEq: return ordering == 0;
      case ad::CompareOp::kNe: return ordering != 0;
      case ad::CompareOp::kLt: return ordering < 0;
      case ad::CompareOp::kLe: return ordering <= 0;
      case ad::CompareOp::kGt: return ordering > 0;
      case ad::CompareOp::kGe: return ordering >= 0;
    }
    return false;
  };
  if (lhs.num() && rhs.num()) return ordered(*lhs.num() <=> *rhs.num());
  if (lhs.date() && rhs.date()) return ordered(*lhs.date() <=> *rhs.date());
  bool equality = op == ad::CompareOp::kEq || op == ad::CompareOp::kNe;
  if (equality && lhs.str() && rhs.str()) return ordered(lhs.str()->compare(*rhs.str()));
  if (equality && lhs.enum_value() && rhs.enum_value()) {
    return ordered(*lhs.enum_value() == *rhs.enum_value() ? 0 : 1);
  }
  return RuntimeError("MW504", std::string("cannot compare values with '") +
                                   ad::CompareOpSpelling(op) + "'");
}

// Validation of one composition part: every value attribute of the class, by
// type only, then its own parts.
ObjectSpec ValidatePart(const link::SymbolTable& table, const link::ClassSymbol& cls,
                        const ObjectInput& input, const std::string& prefix,
                        std::vector<ValidationViolation>& violations) {
  ObjectSpec spec;
  for (const auto& attr : cls.attributes) {
    if (attr.type.kind == link::TypeRef::Kind::kClass) continue;
    auto raw = input.fields.find(attr.name);
    FieldResult r = ValidateField(prefix + "." + attr.name, attr.type, {},
                                  raw == input.fields.end() ? "" : raw->second, table);
    if (r.ok()) {
      spec.fields[attr.name] = r.value;
    } else {
      violations.insert(violations.end(), r.violations.begin(), r.violations.end());
    }
  }
  for (const auto& [role_name, role] : cls.roles) {
    if (!role.owns_target) continue;
    auto it = input.children.find(role_name);
    std::size_t count = it == input.children.end() ? 0 : it->second.size();
    std::string path = prefix + "." + role_name;
    if (!role.cardinality.Admits(static_cast<std::int64_t>(count))) {
      ValidationViolation v{path, RuleKind::kCardinality,
                            "needs " + role.cardinality.ToString() + " parts, got " +
                                std::to_string(count),
                            std::to_string(count), {}};
      v.params["min"] = role.cardinality.min;
      if (role.cardinality.max) v.params["max"] = *role.cardinality.max;
      violations.push_back(std::move(v));
      continue;
    }
    if (it == input.children.end()) continue;
    const link::ClassSymbol& part_cls = *table.FindClass(role.target_class);
    for (std::size_t i = 0; i < it->second.size(); ++i) {
      spec.children[role_name].push_back(ValidatePart(
          table, part_cls, it->second[i], path + "[" + std::to_string(i) + "]", violations));
    }
  }
  return spec;
}

}  // namespace

const char* EventKindName(EventKind kind) {
  switch (kind) {
    case EventKind::kEnterAction: return "EnterAction";
    case EventKind::kViewShown: return "ViewShown";
    case EventKind::kObjectCreated: return "ObjectCreated";
    case EventKind::kGuardEvaluated: return "GuardEvaluated";
    case EventKind::kTransitionTaken: return "TransitionTaken";
    case EventKind::kFlowCompleted: return "FlowCompleted";
    case EventKind::kValidationRejected: return "ValidationRejected";
  }
  return "?";
}

const char* SessionStatusName(SessionStatus status) {
  switch (status) {
    case SessionStatus::kRunning: return "Running";
    case SessionStatus::kCompleted: return "Completed";
    case SessionStatus::kFailed: return "Failed";
  }
  return "?";
}

nlohmann::json TraceEvent::ToJson(std::size_t seq) const {
  nlohmann::json out = data.is_object() ? data : nlohmann::json::object();
  out["seq"] = seq;
  out["kind"] = EventKindName(kind);
  return out;
}

Expected<bool> EvalGuard(const ResolvedGuard& guard, const Bindings& bindings,
                         const ObjectStore& store) {
  switch (guard.kind) {
    case ResolvedGuard::Kind::kAnd:
    case ResolvedGuard::Kind::kOr: {
      Expected<bool> lhs = EvalGuard(guard.children.at(0), bindings, store);
      if (!lhs) return lhs;
      bool is_and = guard.kind == ResolvedGuard::Kind::kAnd;
      if (*lhs != is_and) return *lhs;
      return EvalGuard(guard.children.at(1), bindings, store);
    }
    case ResolvedGuard::Kind::kCompare: break;
  }
  Expected<Value> lhs = OperandValue(guard.lhs, bindings, store);
  if (!lhs) return lhs.error();
  Expected<Value> rhs = OperandValue(guard.rhs, bindings, store);
  if (!rhs) return rhs.error();
  return Compare(guard.op, *lhs, *rhs);
}

FlowSession::FlowSession(const link::LinkedModel& model, const link::ResolvedActivity& activity,
                         std::uint64_t seed)
    : model_(&model),
      activity_(&activity),
      seed_(seed),
      store_(std::make_unique<ObjectStore>(model.table)) {
  current_.node = ad::InitialNode{};
}

Expected<FlowSession> FlowSession::Start(const link::LinkedModel& model,
                                         std::string_view activity, std::uint64_t seed) {
  if (model.has_errors()) {
    return RuntimeError("MW502", "cannot run a model that has errors");
  }
  const link::ResolvedActivity* a = model.FindActivity(activity);
  if (a == nullptr) {
    return RuntimeError("MW502", "unknown activity '" + std::string(activity) + "'");
  }
  if (!a->initial_transition) {
    return RuntimeError("MW502", "activity " + a->def.name + " has no initial transition");
  }
  FlowSession session(model, *a, seed);
  // The session still reports a Failed status when the initial transition
  // cannot fire, so callers can inspect its trace.
  (void)session.Fire(a->transitions.at(*a->initial_transition), "initial");
  return session;
}

std::optional<std::string> FlowSession::current_action() const {
  if (const ad::ActionNode* n = current_.action()) return n->action;
  return std::nullopt;
}

const link::ViewSymbol* FlowSession::current_view() const {
  auto name = current_action();
  if (!name) return nullptr;
  const link::ResolvedAction* action = activity_->FindAction(*name);
  if (action == nullptr || !action->view) return nullptr;
  return model_->table.FindView(action->view->first, action->view->second);
}

bool FlowSession::current_view_is_editor() const {
  const link::ViewSymbol* view = current_view();
  return view != nullptr && view->modifier == cv::ViewModifier::kEditor;
}

Diagnostic FlowSession::Fail(Diagnostic error) {
  status_ = SessionStatus::kFailed;
  error_ = error;
  return error;
}

void FlowSession::Emit(EventKind kind, nlohmann::json data) {
  trace_.push_back(TraceEvent{kind, std::move(data)});
}

Expected<Unit> FlowSession::Step(const ObjectInput& input) {
  if (status_ != SessionStatus::kRunning) {
    return RuntimeError("MW502", std::string("session is ") + SessionStatusName(status_));
  }
  std::string action = *current_action();
  const ad::ActionDef* def = activity_->FindActionDef(action);
  const auto* call = std::get_if<ad::ViewCall>(&def->content);
  if (call == nullptr) {
    return Fail(RuntimeError("MW503", "action " + action + " embeds code, which is not executed"));
  }
  const link::ViewSymbol* view = current_view();
  if (view == nullptr) {
    return Fail(RuntimeError("MW502", "unknown view " + call->QualifiedView()));
  }
  Expected<bool> accepted = view->modifier == cv::ViewModifier::kEditor
                               ? StepEditor(action, *call, *view, input)
                               : StepDisplay(action, *call);
  if (!accepted) return accepted.error();
  if (!*accepted) return Unit{};

  auto outgoing = activity_->outgoing.find(action);
  if (outgoing == activity_->outgoing.end()) {
    return Fail(RuntimeError("MW505", "action " + action + " has no outgoing transition"));
  }
  return Fire(activity_->transitions.at(outgoing->second), action);
}

Expected<bool> FlowSession::StepEditor(const std::string& action, const ad::ViewCall& call,
                                       const link::ViewSymbol& view, const ObjectInput& input) {
  const link::SymbolTable& table = model_->table;
  std::vector<ValidationViolation> violations;
  ObjectSpec spec;
  std::map<std::string, std::vector<ObjectId>> links;
  std::set<std::string> seen;

  for (const link::EffectiveElement& el : view.elements) {
    if (el.mode != cv::ViewModifier::kEditor || el.kind == link::EffectiveElement::Kind::kStaticText) {
      continue;
    }
    if (!seen.insert(el.name).second) continue;
    if (el.kind == link::EffectiveElement::Kind::kAttribute) {
      auto raw = input.fields.find(el.name);
      FieldResult r = ValidateField(el.name, *el.type, el.annotations,
                                    raw == input.fields.end() ? "" : raw->second, table);
      if (r.ok()) {
        spec.fields[el.name] = r.value;
      } else {
        violations.insert(violations.end(), r.violations.begin(), r.violations.end());
      }
      continue;
    }
    const link::RoleSymbol& role = *el.role;
    if (role.kind == cd::RelationKind::kComposition && !role.owns_target) continue;
    std::size_t count = 0;
    if (role.owns_target) {
      auto it = input.children.find(el.name);
      if (it != input.children.end()) {
        count = it->second.size();
        const link::ClassSymbol& part_cls = *table.FindClass(role.target_class);
        for (std::size_t i = 0; i < count; ++i) {
          spec.children[el.name].push_back(ValidatePart(
              table, part_cls, it->second[i], el.name + "[" + std::to_string(i) + "]",
              violations));
        }
      }
    } else {
      auto it = input.links.find(el.name);
      if (it != input.links.end()) {
        for (const std::string& label : it->second) {
          std::optional<ObjectId> found;
          for (ObjectId id : store_->Ids()) {
            const Object* obj = store_->Find(id);
            if (obj->class_name == role.target_class &&
                (store_->Label(id) == label || id.ToString() == label)) {
              found = id;
              break;
            }
          }
          if (found) {
            auto& ids = links[el.name];
            if (std::find(ids.begin(), ids.end(), *found) == ids.end()) ids.push_back(*found);
          } else {
            violations.push_back({el.name, RuleKind::kCardinality,
                                  "no " + role.target_class + " object labelled '" + label + "'",
                                  label,
                                  {}});
          }
        }
        count = links[el.name].size();
      }
    }
    if (!role.cardinality.Admits(static_cast<std::int64_t>(count))) {
      ValidationViolation v{el.name, RuleKind::kCardinality,
                            "needs " + role.cardinality.ToString() + " objects, got " +
                                std::to_string(count),
                            std::to_string(count), {}};
      v.params["min"] = role.cardinality.min;
      if (role.cardinality.max) v.params["max"] = *role.cardinality.max;
      violations.push_back(std::move(v));
    }
  }

  if (view.HasAnnotation("Captcha")) {
    auto raw = input.fields.find("captcha");
    std::string_view answer = raw == input.fields.end() ? "" : TrimWhitespace(raw->second);
    if (answer != CaptchaChallenge()) {
      violations.push_back({"captcha", RuleKind::kCaptcha, "captcha answer does not match",
                            raw == input.fields.end() ? "" : raw->second,
                            {}});
    }
  }

  if (!violations.empty()) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& v : violations) list.push_back(v.ToJson());
    Emit(EventKind::kValidationRejected,
         {{"action", action}, {"view", view.QualifiedName()}, {"violations", list}});
    return false;
  }

  ObjectId id;
  if (call.argument) {
    // Editing the argument object in place; its parts are kept as they are.
    auto bound = bindings_.find(*call.argument);
    if (bound == bindings_.end() || store_->Find(bound->second) == nullptr) {
      return Fail(RuntimeError("MW504", "action " + action + ": parameter '" + *call.argument +
                                            "' is not bound to a live object"));
    }
    id = bound->second;
    Expected<Unit> updated = store_->Update(id, spec.fields);
    if (!updated) return Fail(updated.error());
  } else {
    Expected<ObjectId> created = store_->Create(view.owner_class, spec);
    if (!created) return Fail(created.error());
    id = *created;
  }
  for (const auto& [role, targets] : links) {
    for (ObjectId target : targets) {
      Expected<Unit> linked = store_->Link(id, role, target);
      if (!linked) return Fail(linked.error());
    }
  }
  if (call.assign_to) bindings_[*call.assign_to] = id;
  if (!call.argument) {
    Emit(EventKind::kObjectCreated,
         {{"action", action}, {"param", call.assign_to.value_or("")}, {"object", store_->Snapshot(id)}});
  }
  return true;
}

Expected<bool> FlowSession::StepDisplay(const std::string& action, const ad::ViewCall& call) {
  nlohmann::json object = nullptr;
  if (call.argument) {
    auto bound = bindings_.find(*call.argument);
    if (bound == bindings_.end() || store_->Find(bound->second) == nullptr) {
      return Fail(RuntimeError("MW504", "action " + action + ": parameter '" + *call.argument +
                                            "' is not bound to a live object"));
    }
    object = store_->Snapshot(bound->second);
  }
  Emit(EventKind::kViewShown,
       {{"action", action}, {"view", call.QualifiedView()}, {"object", object}});
  return true;
}

Expected<Unit> FlowSession::Fire(const link::ResolvedTransition& transition,
                                 const std::string& from) {
  const link::ResolvedAlternative* chosen = nullptr;
  for (const auto& alt : transition.alternatives) {
    if (!alt.guard) {
      chosen = &alt;
      break;
    }
    Expected<bool> value = EvalGuard(*alt.guard, bindings_, *store_);
    if (!value) return Fail(value.error());
    Emit(EventKind::kGuardEvaluated, {{"guard", alt.guard->text}, {"result", *value}});
    if (*value) {
      chosen = &alt;
      break;
    }
  }
  if (chosen == nullptr) {
    return Fail(RuntimeError("MW505", "NoMatchingGuard: no alternative leaving " + from +
                                          " has a true guard"));
  }

  // Object flow: the target's in-parameter receives the object carried by the
  // source endpoint's parameter, or by a binding of the same name.
  if (const ad::ActionNode* to = chosen->target.action(); to != nullptr && to->param) {
    std::optional<std::string> carried;
    for (const auto& src : transition.sources) {
      const ad::ActionNode* node = src.action();
      if (node != nullptr && node->action == from && node->param) carried = node->param;
    }
    auto bound = bindings_.find(carried.value_or(*to->param));
    if (bound != bindings_.end()) bindings_[*to->param] = bound->second;
  }
  if (from != "initial") {
    Emit(EventKind::kTransitionTaken, {{"from", from}, {"to", chosen->target.ToString()}});
  }
  return Enter(chosen->target);
}

Expected<Unit> FlowSession::Enter(const ad::Endpoint& target) {
  current_ = target;
  if (target.is_final()) {
    status_ = SessionStatus::kCompleted;
    Emit(EventKind::kFlowCompleted, nlohmann::json::object());
    return Unit{};
  }
  Emit(EventKind::kEnterAction, {{"action", target.action()->action}});
  return Unit{};
}

}  // namespace mw::rt
