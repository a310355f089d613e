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

#ifndef MW_CORE_ANNOTATION_H_
#define MW_CORE_ANNOTATION_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mw/core/parser_base.h"
#include "mw/core/result.h"
#include "mw/core/source.h"

namespace mw {

// Integer, boolean or quoted string; the forms annotations take.
using AnnotationValue = std::variant<std::int64_t, bool, std::string>;

struct AnnotationArg {
  std::string key;
  AnnotationValue value;
  bool operator==(const AnnotationArg&) const = default;
};

// `@Name` or `@Name(key=value, ...)`.
struct Annotation {
  std::string name;
  std::vector<AnnotationArg> args;
  NodeSpan span;

  bool operator==(const Annotation&) const = default;

  const AnnotationValue* Find(std::string_view key) const;
  std::optional<std::int64_t> IntArg(std::string_view key) const;
  std::optional<bool> BoolArg(std::string_view key) const;
};

// Parses one annotation; the cursor must sit on '@'. Malformed argument lists
// raise MW010 via SyntaxError.
Annotation ParseAnnotation(ParserBase& parser);

// Parses annotations while the next token is '@'.
std::vector<Annotation> ParseAnnotations(ParserBase& parser);

ParseResult<Annotation> ParseAnnotationText(std::string_view text,
                                            std::string file = "<annotation>");

std::string PrintAnnotationValue(const AnnotationValue& value);
std::string PrintAnnotation(const Annotation& annotation);

// Double-quoted with \" \\ \n \t escapes; inverse of the lexer's decoding.
std::string QuoteString(std::string_view raw);

}  // namespace mw

#endif  // MW_CORE_ANNOTATION_H_
