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

#include "mw/runtime/value.h"

namespace mw::rt {

nlohmann::json Value::ToJson() const {
  using nlohmann::json;
  return std::visit(
      [](const auto& v) -> json {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbsentTag>) {
          return nullptr;
        } else if constexpr (std::is_same_v<T, std::string> ||
                             std::is_same_v<T, std::int64_t>) {
          return v;
        } else if constexpr (std::is_same_v<T, CalendarDate>) {
          return v.ToIso();
        } else if constexpr (std::is_same_v<T, EnumValue>) {
          return v.literal;
        } else if constexpr (std::is_same_v<T, ObjectId>) {
          return json{{"ref", v.value}};
        } else {
          json ids = json::array();
          for (ObjectId id : v) ids.push_back(id.value);
          return json{{"refs", ids}};
        }
      },
      data_);
}

std::string Value::ToDisplayString() const {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, AbsentTag>) {
          return "";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, std::int64_t>) {
          return std::to_string(v);
        } else if constexpr (std::is_same_v<T, CalendarDate>) {
          return v.ToIso();
        } else if constexpr (std::is_same_v<T, EnumValue>) {
          return v.literal;
        } else if constexpr (std::is_same_v<T, ObjectId>) {
          return v.ToString();
        } else {
          std::string out;
          for (std::size_t i = 0; i < v.size(); ++i) {
            if (i > 0) out += ", ";
            out += v[i].ToString();
          }
          return out;
        }
      },
      data_);
}

}  // namespace mw::rt
