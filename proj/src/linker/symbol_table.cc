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

#include <algorithm>
#include <cctype>

#include "json.hpp"
#include "mw/linker/linker.h"

namespace mw::link {
namespace {

std::string LowerFirst(std::string name) {
  if (!name.empty()) {
    name[0] = static_cast<char>(std::tolower(static_cast<unsigned char>(name[0])));
  }
  return name;
}

void AddRole(ClassSymbol& cls, RoleSymbol role, const RelationSymbol& rel,
             Diagnostics& diags) {
  const AttributeSymbol* clash = cls.FindAttribute(role.name);
  bool synthetic_twin = rel.synthetic && clash != nullptr;
  if ((clash != nullptr && !synthetic_twin) || cls.roles.count(role.name) > 0) {
    diags.push_back(Diagnostic::Error(
                        "MW107",
                        "role '" + role.name + "' clashes with another attribute or role of class " +
                            cls.name,
                        rel.span)
                        .AddRelated(cls.span, "class " + cls.name + " declared here"));
    return;
  }
  std::string name = role.name;
  cls.roles.emplace(std::move(name), std::move(role));
}

}  // namespace

SymbolTableResult BuildSymbolTable(std::vector<cd::ClassDiagram> diagrams) {
  std::stable_sort(diagrams.begin(), diagrams.end(),
                   [](const auto& a, const auto& b) { return a.file < b.file; });
  SymbolTableResult result;
  SymbolTable& table = result.table;
  Diagnostics& diags = result.diagnostics;

  auto duplicate = [&](const std::string& name, const SourceSpan& span,
                       const SourceSpan& first) {
    diags.push_back(Diagnostic::Error("MW104",
                                      "'" + name + "' is already defined in another class diagram",
                                      span)
                        .AddRelated(first, "first definition"));
  };

  // Declarations first so attribute types may refer forward.
  std::vector<const cd::ClassDef*> accepted;
  for (const auto& diagram : diagrams) {
    for (const auto& c : diagram.classes) {
      SourceSpan span = c.span.value;
      if (auto it = table.classes.find(c.name); it != table.classes.end()) {
        duplicate(c.name, span, it->second.span);
        continue;
      }
      if (auto it = table.enums.find(c.name); it != table.enums.end()) {
        duplicate(c.name, span, it->second.span);
        continue;
      }
      table.classes[c.name] = ClassSymbol{c.name, span, {}, {}};
      accepted.push_back(&c);
    }
    for (const auto& e : diagram.enums) {
      SourceSpan span = e.span.value;
      if (auto it = table.classes.find(e.name); it != table.classes.end()) {
        duplicate(e.name, span, it->second.span);
        continue;
      }
      if (auto it = table.enums.find(e.name); it != table.enums.end()) {
        duplicate(e.name, span, it->second.span);
        continue;
      }
      table.enums[e.name] = EnumSymbol{e.name, e.literals, span};
    }
  }

  for (const cd::ClassDef* c : accepted) {
    ClassSymbol& cls = table.classes[c->name];
    for (const auto& attr : c->attributes) {
      TypeRef type;
      type.name = attr.type_name;
      if (auto base = LookupBaseType(attr.type_name)) {
        type.kind = TypeRef::Kind::kBase;
        type.base = *base;
      } else if (table.enums.count(attr.type_name) > 0) {
        type.kind = TypeRef::Kind::kEnum;
      } else if (table.classes.count(attr.type_name) > 0) {
        type.kind = TypeRef::Kind::kClass;
        RelationSymbol rel;
        rel.kind = cd::RelationKind::kComposition;
        rel.source_class = c->name;
        rel.target_class = attr.type_name;
        rel.target_role = attr.name;
        rel.target_cardinality = cd::Cardinality::Exactly(1);
        rel.directed = true;
        rel.synthetic = true;
        rel.span = attr.span.value;
        table.relations.push_back(std::move(rel));
      } else {
        diags.push_back(Diagnostic::Error(
            "MW401",
            "unknown type '" + attr.type_name + "' for attribute '" + attr.name +
                "' of class " + c->name,
            attr.span.value));
        continue;
      }
      cls.attributes.push_back({attr.name, std::move(type), attr.span.value});
    }
  }

  for (const auto& diagram : diagrams) {
    for (const auto& r : diagram.relations) {
      bool ok = true;
      for (const std::string* end : {&r.source_class, &r.target_class}) {
        if (table.classes.count(*end) == 0) {
          diags.push_back(Diagnostic::Error(
              "MW401", "unknown class '" + *end + "' in " + cd::RelationKindName(r.kind),
              r.span.value));
          ok = false;
        }
      }
      if (r.kind == cd::RelationKind::kComposition && !r.directed) {
        diags.push_back(Diagnostic::Error(
            "MW103", "a composition needs a direction ('->') from whole to part",
            r.span.value));
        ok = false;
      }
      if (!ok) continue;
      table.relations.push_back(RelationSymbol{r.kind, r.source_class, r.source_role,
                                               r.target_class, r.target_role,
                                               r.target_cardinality, r.directed, false,
                                               r.span.value});
    }
  }

  for (std::size_t i = 0; i < table.relations.size(); ++i) {
    const RelationSymbol& rel = table.relations[i];
    RoleSymbol forward;
    forward.name = rel.target_role.value_or(LowerFirst(rel.target_class));
    forward.relation = i;
    forward.target_class = rel.target_class;
    forward.cardinality = rel.target_cardinality;
    forward.kind = rel.kind;
    forward.owns_target = rel.kind == cd::RelationKind::kComposition;
    AddRole(table.classes[rel.source_class], std::move(forward), rel, diags);
    if (!rel.directed || rel.source_role) {
      RoleSymbol back;
      back.name = rel.source_role.value_or(LowerFirst(rel.source_class));
      back.relation = i;
      back.target_class = rel.source_class;
      back.cardinality = cd::Cardinality::Exactly(1);
      back.kind = rel.kind;
      AddRole(table.classes[rel.target_class], std::move(back), rel, diags);
    }
  }
  return result;
}

std::string SerializeDataSymbols(const SymbolTable& table) {
  using nlohmann::json;
  json classes = json::array();
  for (const auto& [name, cls] : table.classes) {
    json attrs = json::array();
    for (const auto& a : cls.attributes) {
      const char* kind = a.type.kind == TypeRef::Kind::kBase   ? "base"
                         : a.type.kind == TypeRef::Kind::kEnum ? "enum"
                                                               : "class";
      attrs.push_back({{"name", a.name}, {"type", a.type.name}, {"kind", kind}});
    }
    classes.push_back({{"name", name}, {"attributes", std::move(attrs)}});
  }
  json enums = json::array();
  for (const auto& [name, e] : table.enums) {
    enums.push_back({{"name", name}, {"literals", e.literals}});
  }
  json relations = json::array();
  for (const auto& r : table.relations) {
    json entry = {
        {"kind", cd::RelationKindName(r.kind)},
        {"source", r.source_class},
        {"target", r.target_class},
        {"source_role", r.source_role ? json(*r.source_role) : json(nullptr)},
        {"target_role", r.target_role ? json(*r.target_role) : json(nullptr)},
        {"min", r.target_cardinality.min},
        {"max", r.target_cardinality.max ? json(*r.target_cardinality.max)
                                         : json("unbounded")},
        {"directed", r.directed},
        {"synthetic", r.synthetic},
    };
    relations.push_back(std::move(entry));
  }
  json doc = {{"classes", std::move(classes)},
              {"enums", std::move(enums)},
              {"relations", std::move(relations)}};
  return doc.dump(2) + "\n";
}

}  // namespace mw::link
