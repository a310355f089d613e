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

#ifndef MW_CLASSVIEWS_AST_H_
#define MW_CLASSVIEWS_AST_H_

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "mw/core/annotation.h"
#include "mw/core/source.h"

namespace mw::cv {

enum class ViewModifier { kEditor, kDisplay, kField };

const char* ModifierKeyword(ViewModifier m);

struct AttributeRule {
  std::vector<Annotation> annotations;
  std::string attribute_name;
  NodeSpan span;
  bool operator==(const AttributeRule&) const = default;
};

// The shared `attributes { ... }` block; rules apply to every view.
struct AttributesBlock {
  std::vector<AttributeRule> entries;
  NodeSpan span;
  bool operator==(const AttributesBlock&) const = default;
};

struct AttributeRef {
  std::vector<Annotation> annotations;
  std::optional<ViewModifier> modifier_override;
  std::string name;
  NodeSpan span;
  bool operator==(const AttributeRef&) const = default;
};

// `text { ... }`; interior kept verbatim apart from outer whitespace.
struct StaticText {
  std::vector<Annotation> annotations;
  std::string text;
  NodeSpan span;
  bool operator==(const StaticText&) const = default;
};

struct Include {
  std::string view_name;
  NodeSpan span;
  bool operator==(const Include&) const = default;
};

using ViewElement = std::variant<AttributeRef, StaticText, Include>;

struct ViewDef {
  std::vector<Annotation> annotations;
  ViewModifier modifier = ViewModifier::kDisplay;
  std::optional<std::string> name;  // nullopt for anonymous views
  std::vector<ViewElement> elements;
  NodeSpan span;
  bool operator==(const ViewDef&) const = default;
};

struct ClassviewsFile {
  std::vector<Annotation> annotations;
  std::string class_name;
  std::optional<AttributesBlock> attributes_block;
  std::vector<ViewDef> views;
  NodeSpan span;
  std::string file;

  bool operator==(const ClassviewsFile& o) const {
    return annotations == o.annotations && class_name == o.class_name &&
           attributes_block == o.attributes_block && views == o.views;
  }
};

const SourceSpan& ElementSpan(const ViewElement& element);

}  // namespace mw::cv

#endif  // MW_CLASSVIEWS_AST_H_
