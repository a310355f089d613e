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

#ifndef MW_RUNTIME_FLOW_H_
#define MW_RUNTIME_FLOW_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mw/core/result.h"
#include "mw/linker/linker.h"
#include "mw/runtime/store.h"
#include "mw/runtime/validate.h"

namespace mw::rt {

enum class EventKind {
  kEnterAction,
  kViewShown,
  kObjectCreated,
  kGuardEvaluated,
  kTransitionTaken,
  kFlowCompleted,
  kValidationRejected,
};

const char* EventKindName(EventKind kind);

struct TraceEvent {
  EventKind kind;
  nlohmann::json data;  // kind-specific payload

  nlohmann::json ToJson(std::size_t seq) const;
};

enum class SessionStatus { kRunning, kCompleted, kFailed };

const char* SessionStatusName(SessionStatus status);

// What a user submits for one editor view, or for one composition part
// nested inside it.
struct ObjectInput {
  std::map<std::string, std::string> fields;                // name -> raw text
  std::map<std::string, std::vector<ObjectInput>> children;  // composition role -> parts
  std::map<std::string, std::vector<std::string>> links;     // association role -> labels

  bool operator==(const ObjectInput&) const = default;
};

using Bindings = std::map<std::string, ObjectId>;

// Evaluates a resolved guard. Operands compare by type: numbers and dates by
// order, text and enum literals by equality. `&&` and `||` short-circuit from
// left to right. MW504 when a parameter is unbound or an operand is Absent.
Expected<bool> EvalGuard(const link::ResolvedGuard& guard, const Bindings& bindings,
                         const ObjectStore& store);

class FlowSession {
 public:
  // Enters the activity through its initial transition. MW502 for an unknown
  // activity or a model with errors.
  static Expected<FlowSession> Start(const link::LinkedModel& model, std::string_view activity,
                                     std::uint64_t seed = 0);

  // Submits input for the current action. Display actions ignore the input.
  // Validation failures are recorded in the trace and leave the session at
  // the same action; they are not errors. Runtime failures (MW503, MW504,
  // MW505) mark the session Failed and are returned. MW502 when the session
  // is not running.
  Expected<Unit> Step(const ObjectInput& input);

  SessionStatus status() const { return status_; }
  const ad::Endpoint& current() const { return current_; }
  // Name of the current action, or nullopt at initial/final.
  std::optional<std::string> current_action() const;
  // The view the current action calls, or nullptr for code actions.
  const link::ViewSymbol* current_view() const;
  bool current_view_is_editor() const;
  const Bindings& bindings() const { return bindings_; }
  const std::vector<TraceEvent>& trace() const { return trace_; }
  const std::optional<Diagnostic>& error() const { return error_; }
  const ObjectStore& store() const { return *store_; }
  const link::ResolvedActivity& activity() const { return *activity_; }
  // Expected value of the `captcha` field for @Captcha views.
  std::string CaptchaChallenge() const { return std::to_string(seed_); }

 private:
  FlowSession(const link::LinkedModel& model, const link::ResolvedActivity& activity,
              std::uint64_t seed);

  Diagnostic Fail(Diagnostic error);
  void Emit(EventKind kind, nlohmann::json data);
  Expected<Unit> Fire(const link::ResolvedTransition& transition, const std::string& from);
  Expected<Unit> Enter(const ad::Endpoint& target);
  // Both return false when the input was rejected and the session stays put.
  Expected<bool> StepEditor(const std::string& action, const ad::ViewCall& call,
                            const link::ViewSymbol& view, const ObjectInput& input);
  Expected<bool> StepDisplay(const std::string& action, const ad::ViewCall& call);

  const link::LinkedModel* model_;
  const link::ResolvedActivity* activity_;
  std::uint64_t seed_;
  std::unique_ptr<ObjectStore> store_;
  ad::Endpoint current_;
  Bindings bindings_;
  std::vector<TraceEvent> trace_;
  SessionStatus status_ = SessionStatus::kRunning;
  std::optional<Diagnostic> error_;
};

}  // namespace mw::rt

#endif  // MW_RUNTIME_FLOW_H_
