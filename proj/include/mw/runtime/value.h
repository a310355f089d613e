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

#ifndef MW_RUNTIME_VALUE_H_
#define MW_RUNTIME_VALUE_H_

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "mw/core/date.h"

namespace mw::rt {

// Never reused within one store.
struct ObjectId {
  std::uint64_t value = 0;
  auto operator<=>(const ObjectId&) const = default;
  std::string ToString() const { return "#" + std::to_string(value); }
};

struct EnumValue {
  std::string enum_name;
  std::string literal;
  bool operator==(const EnumValue&) const = default;
};

class Value {
 public:
  struct AbsentTag {
    bool operator==(const AbsentTag&) const = default;
  };
  using RefList = std::vector<ObjectId>;
  using Data = std::variant<AbsentTag, std::string, std::int64_t, CalendarDate, EnumValue,
                            ObjectId, RefList>;

  Value() = default;
  static Value Absent() { return Value(); }
  static Value Str(std::string s) { return Value(Data(std::move(s))); }
  static Value Num(std::int64_t n) { return Value(Data(n)); }
  static Value Date(CalendarDate d) { return Value(Data(d)); }
  static Value Enum(std::string enum_name, std::string literal) {
    return Value(Data(EnumValue{std::move(enum_name), std::move(literal)}));
  }
  static Value Ref(ObjectId id) { return Value(Data(id)); }
  static Value Refs(RefList ids) { return Value(Data(std::move(ids))); }

  bool is_absent() const { return std::holds_alternative<AbsentTag>(data_); }
  const std::string* str() const { return std::get_if<std::string>(&data_); }
  const std::int64_t* num() const { return std::get_if<std::int64_t>(&data_); }
  const CalendarDate* date() const { return std::get_if<CalendarDate>(&data_); }
  const EnumValue* enum_value() const { return std::get_if<EnumValue>(&data_); }
  const ObjectId* ref() const { return std::get_if<ObjectId>(&data_); }
  const RefList* refs() const { return std::get_if<RefList>(&data_); }
  RefList* mutable_refs() { return std::get_if<RefList>(&data_); }

  const Data& data() const { return data_; }
  bool operator==(const Value&) const = default;

  // Strings, numbers, ISO dates and enum literals as plain JSON values;
  // references as {"ref": n} / {"refs": [...]}; Absent as null.
  nlohmann::json ToJson() const;
  // Human-readable rendering, used by display views and labels.
  std::string ToDisplayString() const;

 private:
  explicit Value(Data d) : data_(std::move(d)) {}
  Data data_;
};

}  // namespace mw::rt

#endif  // MW_RUNTIME_VALUE_H_
