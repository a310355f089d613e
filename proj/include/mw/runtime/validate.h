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

#ifndef MW_RUNTIME_VALIDATE_H_
#define MW_RUNTIME_VALIDATE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mw/core/annotation.h"
#include "mw/linker/symbols.h"
#include "mw/runtime/value.h"

namespace mw::rt {

enum class RuleKind {
  kRequired,
  kLength,
  kEmailFormat,
  kNumberFormat,
  kDateFormat,
  kEnumLiteral,
  kCardinality,
  kCaptcha,
};

const char* RuleKindName(RuleKind rule);

struct ValidationViolation {
  std::string attribute;
  RuleKind rule = RuleKind::kRequired;
  std::string message;
  std::string input;
  std::map<std::string, std::int64_t> params;  // e.g. min/max for Length

  nlohmann::json ToJson() const;
};

// The constraints a field's annotations impose. Repeated @Length bounds
// intersect, so adding an annotation can only reject more input.
struct FieldConstraints {
  bool required = false;
  std::optional<std::int64_t> min_length;
  std::optional<std::int64_t> max_length;

  static FieldConstraints From(const std::vector<Annotation>& annotations);
  // Machine-readable form shared by generated pages and the validator.
  nlohmann::json ToJson() const;
};

struct FieldResult {
  Value value;
  std::vector<ValidationViolation> violations;

  bool ok() const { return violations.empty(); }
};

// Validates one raw form input against the attribute type and the merged
// annotations. Blank input yields Absent unless the field is required.
// MWString and Email inputs are kept verbatim; Number, MWDate and enum inputs
// are trimmed first. Enum types need `table` to look up their literals.
FieldResult ValidateField(std::string_view attribute, const link::TypeRef& type,
                          const std::vector<Annotation>& annotations, std::string_view raw,
                          const link::SymbolTable& table);

bool IsEmailAddress(std::string_view text);
std::optional<std::int64_t> ParseNumber(std::string_view text);

}  // namespace mw::rt

#endif  // MW_RUNTIME_VALIDATE_H_
