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

#include "mw/runtime/validate.h"

#include <algorithm>
#include <charconv>

#include "mw/core/date.h"
#include "mw/core/text.h"

namespace mw::rt {
namespace {

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

ValidationViolation Violation(std::string_view attribute, RuleKind rule, std::string message,
                              std::string_view input) {
  return ValidationViolation{std::string(attribute), rule, std::move(message),
                             std::string(input), {}};
}

}  // namespace

const char* RuleKindName(RuleKind rule) {
  switch (rule) {
    case RuleKind::kRequired: return "Required";
    case RuleKind::kLength: return "Length";
    case RuleKind::kEmailFormat: return "EmailFormat";
    case RuleKind::kNumberFormat: return "NumberFormat";
    case RuleKind::kDateFormat: return "DateFormat";
    case RuleKind::kEnumLiteral: return "EnumLiteral";
    case RuleKind::kCardinality: return "Cardinality";
    case RuleKind::kCaptcha: return "Captcha";
  }
  return "?";
}

nlohmann::json ValidationViolation::ToJson() const {
  nlohmann::json out = {{"attribute", attribute},
                        {"rule", RuleKindName(rule)},
                        {"message", message},
                        {"input", input}};
  if (!params.empty()) out["params"] = params;
  return out;
}

FieldConstraints FieldConstraints::From(const std::vector<Annotation>& annotations) {
  FieldConstraints c;
  for (const Annotation& a : annotations) {
    if (a.name == "Required") {
      c.required = true;
    } else if (a.name == "Length") {
      if (auto lo = a.IntArg("min")) c.min_length = std::max(c.min_length.value_or(*lo), *lo);
      if (auto hi = a.IntArg("max")) c.max_length = std::min(c.max_length.value_or(*hi), *hi);
    }
  }
  return c;
}

nlohmann::json FieldConstraints::ToJson() const {
  nlohmann::json out = nlohmann::json::object();
  if (required) out["required"] = true;
  if (min_length || max_length) {
    nlohmann::json length = nlohmann::json::object();
    if (min_length) length["min"] = *min_length;
    if (max_length) length["max"] = *max_length;
    out["length"] = std::move(length);
  }
  return out;
}

bool IsEmailAddress(std::string_view text) {
  for (char c : text) {
    if (IsSpace(c)) return false;
  }
  auto at = text.find('@');
  if (at == std::string_view::npos || at == 0 || text.find('@', at + 1) != std::string_view::npos) {
    return false;
  }
  std::string_view domain = text.substr(at + 1);
  auto dot = domain.find('.');
  if (dot == std::string_view::npos) return false;
  // Every dot-separated domain label must be non-empty.
  std::size_t start = 0;
  while (start <= domain.size()) {
    auto next = domain.find('.', start);
    if (next == std::string_view::npos) next = domain.size();
    if (next == start) return false;
    start = next + 1;
  }
  return true;
}

std::optional<std::int64_t> ParseNumber(std::string_view text) {
  std::string_view digits = text;
  bool negative = false;
  if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
    negative = digits.front() == '-';
    digits.remove_prefix(1);
  }
  if (digits.empty()) return std::nullopt;
  for (char c : digits) {
    if (c < '0' || c > '9') return std::nullopt;
  }
  // Parse with the sign attached so INT64_MIN is representable.
  std::string signed_text = (negative ? "-" : "") + std::string(digits);
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(signed_text.data(), signed_text.data() + signed_text.size(),
                                   value);
  if (ec != std::errc() || ptr != signed_text.data() + signed_text.size()) return std::nullopt;
  return value;
}

FieldResult ValidateField(std::string_view attribute, const link::TypeRef& type,
                          const std::vector<Annotation>& annotations, std::string_view raw,
                          const link::SymbolTable& table) {
  FieldResult result;
  FieldConstraints constraints = FieldConstraints::From(annotations);
  std::string_view trimmed = TrimWhitespace(raw);
  if (trimmed.empty()) {
    if (constraints.required) {
      result.violations.push_back(
          Violation(attribute, RuleKind::kRequired, "a value is required", raw));
    }
    return result;
  }

  if (constraints.min_length || constraints.max_length) {
    auto length = static_cast<std::int64_t>(Utf8Length(raw));
    bool short_ok = !constraints.min_length || length >= *constraints.min_length;
    bool long_ok = !constraints.max_length || length <= *constraints.max_length;
    if (!short_ok || !long_ok) {
      std::string bounds = std::to_string(constraints.min_length.value_or(0)) + ".." +
                           (constraints.max_length ? std::to_string(*constraints.max_length)
                                                   : std::string("*"));
      ValidationViolation v =
          Violation(attribute, RuleKind::kLength,
                    "length " + std::to_string(length) + " is outside " + bounds, raw);
      if (constraints.min_length) v.params["min"] = *constraints.min_length;
      if (constraints.max_length) v.params["max"] = *constraints.max_length;
      result.violations.push_back(std::move(v));
    }
  }

  switch (type.kind) {
    case link::TypeRef::Kind::kEnum: {
      const link::EnumSymbol* e = table.FindEnum(type.name);
      if (e == nullptr || !e->HasLiteral(trimmed)) {
        result.violations.push_back(Violation(
            attribute, RuleKind::kEnumLiteral,
            "'" + std::string(trimmed) + "' is not a literal of " + type.name, raw));
      } else {
        result.value = Value::Enum(type.name, std::string(trimmed));
      }
      break;
    }
    case link::TypeRef::Kind::kClass:
      break;
    case link::TypeRef::Kind::kBase:
      switch (type.base) {
        case link::BaseType::kString:
          result.value = Value::Str(std::string(raw));
          break;
        case link::BaseType::kEmail:
          if (IsEmailAddress(raw)) {
            result.value = Value::Str(std::string(raw));
          } else {
            result.violations.push_back(Violation(attribute, RuleKind::kEmailFormat,
                                                  "not an email address", raw));
          }
          break;
        case link::BaseType::kNumber:
          if (auto n = ParseNumber(trimmed)) {
            result.value = Value::Num(*n);
          } else {
            result.violations.push_back(Violation(attribute, RuleKind::kNumberFormat,
                                                  "not a whole number", raw));
          }
          break;
        case link::BaseType::kDate:
          if (auto d = ParseIsoDate(trimmed)) {
            result.value = Value::Date(*d);
          } else {
            result.violations.push_back(Violation(attribute, RuleKind::kDateFormat,
                                                  "not a calendar date (YYYY-MM-DD)", raw));
          }
          break;
      }
      break;
  }
  if (!result.ok()) result.value = Value::Absent();
  return result;
}

}  // namespace mw::rt
