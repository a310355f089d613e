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
#include <functional>
#include <map>
#include <set>

#include "mw/linker/linker.h"

namespace mw::link {
namespace {

enum class Target { kFile, kView, kAttribute, kRole, kText };

const char* TargetName(Target t) {
  switch (t) {
    case Target::kFile: return "a classviews file";
    case Target::kView: return "a view";
    case Target::kAttribute: return "an attribute";
    case Target::kRole: return "a relation role";
    case Target::kText: return "static text";
  }
  return "this element";
}

class AnnotationChecker {
 public:
  explicit AnnotationChecker(Diagnostics& diags) : diags_(diags) {}

  // `type` is set for attribute targets.
  void Check(const std::vector<Annotation>& annotations, Target target,
             const TypeRef* type = nullptr) {
    for (const Annotation& a : annotations) CheckOne(a, target, type);
  }

 private:
  void Misuse(const Annotation& a, const std::string& why) {
    diags_.push_back(Diagnostic::Error("MW203", "@" + a.name + " " + why, a.span.value));
  }

  bool ArgsWithin(const Annotation& a, std::initializer_list<std::string_view> keys) {
    for (const auto& arg : a.args) {
      if (std::find(keys.begin(), keys.end(), arg.key) == keys.end()) {
        Misuse(a, "does not take an argument named '" + arg.key + "'");
        return false;
      }
    }
    return true;
  }

  void CheckOne(const Annotation& a, Target target, const TypeRef* type) {
    const bool attribute_like = target == Target::kAttribute || target == Target::kRole;
    const bool textual = target == Target::kAttribute && type != nullptr && type->is_textual();
    if (a.name == "Required") {
      if (!attribute_like) return Misuse(a, std::string("cannot be applied to ") + TargetName(target));
      ArgsWithin(a, {});
    } else if (a.name == "Length") {
      if (!textual) {
        return Misuse(a, "applies only to MWString or Email attributes, not " +
                             std::string(TargetName(target)));
      }
      if (!ArgsWithin(a, {"min", "max"})) return;
      for (const auto& arg : a.args) {
        const auto* v = std::get_if<std::int64_t>(&arg.value);
        if (v == nullptr || *v < 0) {
          return Misuse(a, "argument '" + arg.key + "' must be a non-negative integer");
        }
      }
      auto lo = a.IntArg("min");
      auto hi = a.IntArg("max");
      if (lo && hi && *lo > *hi) Misuse(a, "has min greater than max");
    } else if (a.name == "AsImage") {
      if (!textual) {
        return Misuse(a, "applies only to MWString or Email attributes, not " +
                             std::string(TargetName(target)));
      }
      if (!ArgsWithin(a, {"alt"})) return;
      if (a.Find("alt") != nullptr && !a.BoolArg("alt")) {
        Misuse(a, "argument 'alt' must be a boolean");
      }
    } else if (a.name == "Captcha") {
      if (target != Target::kView) return Misuse(a, "applies only to views");
      ArgsWithin(a, {});
    } else if (a.name == "Warning") {
      if (target != Target::kText) return Misuse(a, "applies only to static text");
      ArgsWithin(a, {});
    } else {
      diags_.push_back(Diagnostic::Warning("MW204", "unknown annotation @" + a.name,
                                           a.span.value));
    }
  }

  Diagnostics& diags_;
};

// Binds an element name against a class; roles of class-typed attributes
// win over the attribute so such attributes render as sub-forms.
std::optional<EffectiveElement> Bind(const ClassSymbol& cls, const std::string& name) {
  EffectiveElement e;
  e.name = name;
  if (const RoleSymbol* role = cls.FindRole(name)) {
    e.kind = EffectiveElement::Kind::kRole;
    e.role = *role;
    return e;
  }
  if (const AttributeSymbol* attr = cls.FindAttribute(name)) {
    e.kind = EffectiveElement::Kind::kAttribute;
    e.type = attr->type;
    return e;
  }
  return std::nullopt;
}

class FileResolver {
 public:
  FileResolver(const cv::ClassviewsFile& file, const ClassSymbol& cls,
               SymbolTable& table, Diagnostics& diags)
      : file_(file), cls_(cls), table_(table), diags_(diags), checker_(diags) {}

  void Run() {
    checker_.Check(file_.annotations, Target::kFile);
    if (file_.attributes_block) {
      for (const auto& rule : file_.attributes_block->entries) {
        auto bound = BindOrReport(rule.attribute_name, rule.span.value);
        if (!bound) continue;
        CheckElementAnnotations(rule.annotations, *bound);
        rules_[rule.attribute_name] = &rule.annotations;
      }
    }
    for (const auto& view : file_.views) {
      if (view.name) named_[*view.name] = &view;
    }
    for (const auto& view : file_.views) {
      checker_.Check(view.annotations, Target::kView);
      if (!view.name) {
        diags_.push_back(Diagnostic::Warning(
            "MW202",
            std::string("anonymous ") + cv::ModifierKeyword(view.modifier) + " view of class " +
                cls_.name + " cannot be referenced",
            view.span.value));
      }
      for (const auto& element : view.elements) CheckElement(element);
    }
    DetectCycles();
    for (const auto& view : file_.views) {
      ViewSymbol sym;
      sym.owner_class = cls_.name;
      sym.name = view.name;
      sym.modifier = view.modifier;
      sym.annotations = view.annotations;
      sym.span = view.span.value;
      std::vector<const cv::ViewDef*> stack;
      Expand(view, view.modifier, stack, sym.elements);
      if (view.name) {
        table_.views[{cls_.name, *view.name}] = std::move(sym);
      } else {
        table_.anonymous_views.push_back(std::move(sym));
      }
    }
  }

 private:
  std::optional<EffectiveElement> BindOrReport(const std::string& name,
                                               const SourceSpan& span) {
    auto bound = Bind(cls_, name);
    if (!bound) {
      diags_.push_back(Diagnostic::Error(
          "MW404", "class " + cls_.name + " has no attribute or role '" + name + "'", span));
    }
    return bound;
  }

  void CheckElementAnnotations(const std::vector<Annotation>& annotations,
                               const EffectiveElement& bound) {
    if (bound.kind == EffectiveElement::Kind::kRole) {
      checker_.Check(annotations, Target::kRole);
    } else {
      checker_.Check(annotations, Target::kAttribute, &*bound.type);
    }
  }

  void CheckElement(const cv::ViewElement& element) {
    if (const auto* ref = std::get_if<cv::AttributeRef>(&element)) {
      if (auto bound = BindOrReport(ref->name, ref->span.value)) {
        CheckElementAnnotations(ref->annotations, *bound);
      }
    } else if (const auto* text = std::get_if<cv::StaticText>(&element)) {
      checker_.Check(text->annotations, Target::kText);
    } else {
      const auto& inc = std::get<cv::Include>(element);
      if (named_.count(inc.view_name) == 0) {
        diags_.push_back(Diagnostic::Error(
            "MW405", "included view '" + inc.view_name + "' is not defined for class " +
                         cls_.name,
            inc.span.value));
      }
    }
  }

  void DetectCycles() {
    enum class Color { kWhite, kGray, kBlack };
    std::map<std::string, Color> color;
    std::vector<std::string> path;
    std::vector<SourceSpan> edges;  // edges[i] leads from path[i] to path[i+1]
    std::function<void(const cv::ViewDef&)> visit = [&](const cv::ViewDef& v) {
      color[*v.name] = Color::kGray;
      path.push_back(*v.name);
      for (const auto& element : v.elements) {
        const auto* inc = std::get_if<cv::Include>(&element);
        if (inc == nullptr) continue;
        auto target = named_.find(inc->view_name);
        if (target == named_.end()) continue;
        Color c = color[inc->view_name];
        if (c == Color::kGray) {
          auto start = std::find(path.begin(), path.end(), inc->view_name) - path.begin();
          Diagnostic d = Diagnostic::Error(
              "MW406", "include cycle through view '" + inc->view_name + "' of class " +
                           cls_.name,
              inc->span.value);
          for (std::size_t i = start; i < edges.size(); ++i) {
            d.AddRelated(edges[i], "'" + path[i] + "' includes '" + path[i + 1] + "' here");
          }
          diags_.push_back(std::move(d));
        } else if (c == Color::kWhite) {
          edges.push_back(inc->span.value);
          visit(*target->second);
          edges.pop_back();
        }
      }
      path.pop_back();
      color[*v.name] = Color::kBlack;
    };
    for (const auto& view : file_.views) {
      if (view.name && color[*view.name] == Color::kWhite) visit(view);
    }
  }

  void Expand(const cv::ViewDef& view, cv::ViewModifier mode,
              std::vector<const cv::ViewDef*>& stack,
              std::vector<EffectiveElement>& out) {
    stack.push_back(&view);
    const std::string origin = view.name.value_or("");
    for (const auto& element : view.elements) {
      if (const auto* ref = std::get_if<cv::AttributeRef>(&element)) {
        auto bound = Bind(cls_, ref->name);
        if (!bound) continue;
        bound->mode = ref->modifier_override.value_or(mode);
        if (auto it = rules_.find(ref->name); it != rules_.end()) {
          bound->annotations = *it->second;
        }
        bound->annotations.insert(bound->annotations.end(), ref->annotations.begin(),
                                  ref->annotations.end());
        bound->origin_view = origin;
        bound->span = ref->span.value;
        out.push_back(std::move(*bound));
      } else if (const auto* text = std::get_if<cv::StaticText>(&element)) {
        EffectiveElement e;
        e.kind = EffectiveElement::Kind::kStaticText;
        e.text = text->text;
        e.mode = mode;
        e.annotations = text->annotations;
        e.origin_view = origin;
        e.span = text->span.value;
        out.push_back(std::move(e));
      } else {
        const auto& inc = std::get<cv::Include>(element);
        auto target = named_.find(inc.view_name);
        if (target == named_.end()) continue;
        const cv::ViewDef* included = target->second;
        if (std::find(stack.begin(), stack.end(), included) != stack.end()) continue;
        cv::ViewModifier inner =
            included->modifier == cv::ViewModifier::kField ? mode : included->modifier;
        Expand(*included, inner, stack, out);
      }
    }
    stack.pop_back();
  }

  const cv::ClassviewsFile& file_;
  const ClassSymbol& cls_;
  SymbolTable& table_;
  Diagnostics& diags_;
  AnnotationChecker checker_;
  std::map<std::string, const std::vector<Annotation>*> rules_;
  std::map<std::string, const cv::ViewDef*> named_;
};

}  // namespace

Diagnostics ResolveClassviews(std::vector<cv::ClassviewsFile> files, SymbolTable& table) {
  std::stable_sort(files.begin(), files.end(),
                   [](const auto& a, const auto& b) { return a.file < b.file; });
  Diagnostics diags;
  std::map<std::string, const cv::ClassviewsFile*> by_class;
  for (const auto& file : files) {
    const ClassSymbol* cls = table.FindClass(file.class_name);
    if (cls == nullptr) {
      diags.push_back(Diagnostic::Error(
          "MW403", "classviews for unknown class '" + file.class_name + "'",
          file.span.value));
      continue;
    }
    if (auto it = by_class.find(file.class_name); it != by_class.end()) {
      diags.push_back(Diagnostic::Error("MW205",
                                        "class " + file.class_name +
                                            " already has a classviews file",
                                        file.span.value)
                          .AddRelated(it->second->span.value, "first classviews file"));
      continue;
    }
    by_class[file.class_name] = &file;
    FileResolver(file, *cls, table, diags).Run();
  }
  return diags;
}

}  // namespace mw::link
