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

#include "mw/runtime/script.h"

namespace mw::rt {
namespace {

using nlohmann::json;

struct ScriptShapeError {
  std::string message;
};

std::string RawText(const json& value, const std::string& where) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw ScriptShapeError{where + " must be a string or an integer"};
}

const json& ObjectMember(const json& record, const char* key, const std::string& where) {
  static const json kEmpty = json::object();
  auto it = record.find(key);
  if (it == record.end()) return kEmpty;
  if (!it->is_object()) throw ScriptShapeError{where + "." + key + " must be an object"};
  return *it;
}

ObjectInput ReadInput(const json& record, const std::string& where) {
  ObjectInput input;
  for (const auto& [name, value] : ObjectMember(record, "fields", where).items()) {
    input.fields[name] = RawText(value, where + ".fields." + name);
  }
  for (const auto& [role, parts] : ObjectMember(record, "children", where).items()) {
    std::string at = where + ".children." + role;
    if (!parts.is_array()) throw ScriptShapeError{at + " must be an array"};
    std::vector<ObjectInput>& out = input.children[role];
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::string part_at = at + "[" + std::to_string(i) + "]";
      if (!parts[i].is_object()) throw ScriptShapeError{part_at + " must be an object"};
      // A part given as a bare field map is accepted as well.
      bool bare = !parts[i].contains("fields") && !parts[i].contains("children") &&
                  !parts[i].contains("links");
      if (bare) {
        ObjectInput part;
        for (const auto& [name, value] : parts[i].items()) {
          part.fields[name] = RawText(value, part_at + "." + name);
        }
        out.push_back(std::move(part));
      } else {
        out.push_back(ReadInput(parts[i], part_at));
      }
    }
  }
  for (const auto& [role, labels] : ObjectMember(record, "links", where).items()) {
    std::string at = where + ".links." + role;
    if (!labels.is_array()) throw ScriptShapeError{at + " must be an array"};
    for (const json& label : labels) {
      if (!label.is_string()) throw ScriptShapeError{at + " must hold strings"};
      input.links[role].push_back(label.get<std::string>());
    }
  }
  return input;
}

}  // namespace

Expected<std::vector<ScriptRecord>> ParseScript(std::string_view json_text) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) return Diagnostic::Error("MW508", "script is not valid JSON");
  if (!doc.is_array()) return Diagnostic::Error("MW508", "script must be a JSON array");
  std::vector<ScriptRecord> records;
  try {
    for (std::size_t i = 0; i < doc.size(); ++i) {
      std::string where = "record[" + std::to_string(i) + "]";
      const json& rec = doc[i];
      if (!rec.is_object()) throw ScriptShapeError{where + " must be an object"};
      for (const auto& [key, value] : rec.items()) {
        if (key != "action" && key != "fields" && key != "children" && key != "links") {
          throw ScriptShapeError{where + " has unknown key '" + key + "'"};
        }
      }
      auto action = rec.find("action");
      if (action == rec.end() || !action->is_string()) {
        throw ScriptShapeError{where + ".action must be a string"};
      }
      records.push_back({action->get<std::string>(), ReadInput(rec, where)});
    }
  } catch (const ScriptShapeError& e) {
    return Diagnostic::Error("MW508", e.message);
  }
  return records;
}

Expected<RunResult> RunScript(const link::LinkedModel& model, std::string_view activity,
                              const std::vector<ScriptRecord>& script, std::uint64_t seed) {
  Expected<FlowSession> started = FlowSession::Start(model, activity, seed);
  if (!started) return started.error();
  FlowSession& session = *started;
  RunResult result;
  result.activity = std::string(activity);
  std::size_t next = 0;
  while (session.status() == SessionStatus::kRunning) {
    std::string current = *session.current_action();
    if (next == script.size()) {
      result.error = Diagnostic::Error(
          "MW507", "script ended while the flow waits at action " + current);
      break;
    }
    const ScriptRecord& record = script[next++];
    if (record.action != current) {
      result.error = Diagnostic::Error("MW506", "script record " + std::to_string(next - 1) +
                                                    " is for action " + record.action +
                                                    " but the flow is at " + current);
      break;
    }
    (void)session.Step(record.input);
  }
  result.events = session.trace();
  if (result.error) {
    result.status = SessionStatus::kFailed;
  } else {
    result.status = session.status();
    result.error = session.error();
  }
  return result;
}

std::string SerializeTrace(const RunResult& result) {
  json events = json::array();
  for (std::size_t i = 0; i < result.events.size(); ++i) {
    events.push_back(result.events[i].ToJson(i));
  }
  json error = nullptr;
  if (result.error) {
    error = {{"code", result.error->code}, {"message", result.error->message}};
  }
  json doc = {{"activity", result.activity},
              {"status", SessionStatusName(result.status)},
              {"error", error},
              {"events", events}};
  return doc.dump(2) + "\n";
}

}  // namespace mw::rt
