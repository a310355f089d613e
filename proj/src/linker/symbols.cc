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

#include "mw/linker/symbols.h"

#include <algorithm>

namespace mw::link {

const char* BaseTypeName(BaseType type) {
  switch (type) {
    case BaseType::kString: return "MWString";
    case BaseType::kEmail: return "Email";
    case BaseType::kNumber: return "Number";
    case BaseType::kDate: return "MWDate";
  }
  return "MWString";
}

std::optional<BaseType> LookupBaseType(std::string_view name) {
  for (BaseType t : {BaseType::kString, BaseType::kEmail, BaseType::kNumber,
                     BaseType::kDate}) {
    if (name == BaseTypeName(t)) return t;
  }
  return std::nullopt;
}

const AttributeSymbol* ClassSymbol::FindAttribute(std::string_view attr) const {
  for (const auto& a : attributes) {
    if (a.name == attr) return &a;
  }
  return nullptr;
}

const RoleSymbol* ClassSymbol::FindRole(std::string_view role) const {
  auto it = roles.find(std::string(role));
  return it == roles.end() ? nullptr : &it->second;
}

bool EnumSymbol::HasLiteral(std::string_view literal) const {
  return std::find(literals.begin(), literals.end(), literal) != literals.end();
}

const Annotation* EffectiveElement::FindAnnotation(std::string_view annotation) const {
  // The element's own annotations come last, so they win.
  for (auto it = annotations.rbegin(); it != annotations.rend(); ++it) {
    if (it->name == annotation) return &*it;
  }
  return nullptr;
}

bool EffectiveElement::HasAnnotation(std::string_view annotation) const {
  return FindAnnotation(annotation) != nullptr;
}

std::string ViewSymbol::QualifiedName() const {
  return owner_class + "." + name.value_or("<anonymous>");
}

bool ViewSymbol::HasAnnotation(std::string_view annotation) const {
  return std::any_of(annotations.begin(), annotations.end(),
                     [&](const Annotation& a) { return a.name == annotation; });
}

const ClassSymbol* SymbolTable::FindClass(std::string_view name) const {
  auto it = classes.find(std::string(name));
  return it == classes.end() ? nullptr : &it->second;
}

const EnumSymbol* SymbolTable::FindEnum(std::string_view name) const {
  auto it = enums.find(std::string(name));
  return it == enums.end() ? nullptr : &it->second;
}

const ViewSymbol* SymbolTable::FindView(std::string_view cls,
                                        std::string_view view) const {
  auto it = views.find({std::string(cls), std::string(view)});
  return it == views.end() ? nullptr : &it->second;
}

const ResolvedAction* ResolvedActivity::FindAction(std::string_view name) const {
  for (const auto& a : actions) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

const ad::ActionDef* ResolvedActivity::FindActionDef(std::string_view name) const {
  return def.FindAction(name);
}

}  // namespace mw::link
