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

#ifndef MW_CLASSDIAGRAM_CLASSDIAGRAM_H_
#define MW_CLASSDIAGRAM_CLASSDIAGRAM_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "mw/classdiagram/ast.h"
#include "mw/core/result.h"

namespace mw::cd {

// Parses a `.cd` file. Syntax errors are MW020; duplicate element names in
// one diagram MW101, duplicate attributes MW105, duplicate enum literals
// MW106, inverted cardinality ranges MW102.
ParseResult<ClassDiagram> ParseClassDiagram(std::string_view source,
                                            std::string file);

// `text` is the content between '[' and ']', or nullopt when no bracket was
// written (which means exactly one).
ParseResult<Cardinality> ParseCardinality(std::optional<std::string_view> text);

// Canonical text; 2-space indentation, one declaration per line.
std::string PrintClassDiagram(const ClassDiagram& diagram);
std::string PrintCardinality(const Cardinality& c);  // "" for [1,1]

// Words the class-diagram grammar treats as keywords.
std::span<const std::string_view> ClassDiagramKeywords();

}  // namespace mw::cd

#endif  // MW_CLASSDIAGRAM_CLASSDIAGRAM_H_
