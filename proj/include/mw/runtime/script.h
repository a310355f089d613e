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

#ifndef MW_RUNTIME_SCRIPT_H_
#define MW_RUNTIME_SCRIPT_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mw/core/result.h"
#include "mw/linker/linker.h"
#include "mw/runtime/flow.h"

namespace mw::rt {

struct ScriptRecord {
  std::string action;
  ObjectInput input;

  bool operator==(const ScriptRecord&) const = default;
};

// Reads a JSON array of {"action", "fields", "children", "links"} records.
// Field values may be strings or integers. MW508 for any other shape.
Expected<std::vector<ScriptRecord>> ParseScript(std::string_view json_text);

struct RunResult {
  std::string activity;
  SessionStatus status = SessionStatus::kRunning;
  std::optional<Diagnostic> error;
  std::vector<TraceEvent> events;
};

// Drives a session with one record per action visit until it completes or
// fails. MW506 when a record names another action than the current one,
// MW507 when the records run out first. Records left after completion are
// ignored. Start-up failures (MW502) are returned as the error.
Expected<RunResult> RunScript(const link::LinkedModel& model, std::string_view activity,
                              const std::vector<ScriptRecord>& script, std::uint64_t seed = 0);

// Canonical trace document: sorted keys, two-space indent, LF endings.
std::string SerializeTrace(const RunResult& result);

}  // namespace mw::rt

#endif  // MW_RUNTIME_SCRIPT_H_
