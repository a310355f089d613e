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
#include <set>

#include "mw/codegen/codegen.h"
#include "mw/core/text.h"

namespace mw::gen {
namespace {

#include "glyphs.inc"

constexpr int kGlyphScale = 2;

std::string Attr(std::string_view name, std::string_view value) {
  return " " + std::string(name) + "=\"" + HtmlEscape(value) + "\"";
}

std::string ConstraintAttrs(const rt::FieldConstraints& c) {
  if (!c.required && !c.min_length && !c.max_length) return "";
  return Attr("data-mw-constraints", c.ToJson().dump());
}

std::string InputConstraintAttrs(const rt::FieldConstraints& c, bool textual) {
  std::string out;
  if (c.required) out += " required";
  if (textual && c.min_length) out += Attr("minlength", std::to_string(*c.min_length));
  if (textual && c.max_length) out += Attr("maxlength", std::to_string(*c.max_length));
  return out;
}

std::string FieldOpen(WidgetKind widget, std::string_view name,
                      const rt::FieldConstraints& constraints, std::string_view css = "mw-field") {
  return "<div" + Attr("class", css) + Attr("data-mw-widget", WidgetKindName(widget)) +
         Attr("data-mw-name", name) + ConstraintAttrs(constraints) + ">";
}

std::string Label(std::string_view id, std::string_view name) {
  return "<label" + Attr("for", id) + ">" + HtmlEscape(name) + "</label>";
}

const rt::Object* DataObject(const PageData* data) {
  if (data == nullptr || data->store == nullptr) return nullptr;
  return data->store->Find(data->object);
}

const rt::Value* DataValue(const PageData* data, const std::string& name) {
  const rt::Object* obj = DataObject(data);
  if (obj == nullptr) return nullptr;
  auto it = obj->fields.find(name);
  return it == obj->fields.end() ? nullptr : &it->second;
}

// Object labels for references, the way pickers and read-only lists show them.
std::vector<std::string> RefLabels(const PageData* data, const rt::Value& value) {
  std::vector<std::string> out;
  auto add = [&](rt::ObjectId id) { out.push_back(data->store->Label(id)); };
  if (const rt::ObjectId* ref = value.ref()) add(*ref);
  if (const rt::Value::RefList* refs = value.refs()) {
    for (rt::ObjectId id : *refs) add(id);
  }
  return out;
}

std::string EditorInput(const link::SymbolTable& table, const link::TypeRef& type,
                        std::string_view id, std::string_view name,
                        const rt::FieldConstraints& c, const rt::Value* value,
                        WidgetKind* widget) {
  std::string current = value != nullptr ? value->ToDisplayString() : "";
  if (type.kind == link::TypeRef::Kind::kEnum) {
    *widget = WidgetKind::kEnumSelect;
    std::string out = "<select" + (id.empty() ? "" : Attr("id", id)) + Attr("name", name) +
                      InputConstraintAttrs(c, false) + ">";
    if (const link::EnumSymbol* e = table.FindEnum(type.name)) {
      for (const std::string& literal : e->literals) {
        out += "<option" + Attr("value", literal) + (literal == current ? " selected" : "") +
               ">" + HtmlEscape(literal) + "</option>";
      }
    }
    return out + "</select>";
  }
  std::string input_type = "text";
  bool textual = true;
  *widget = WidgetKind::kTextInput;
  if (type.is_base(link::BaseType::kEmail)) {
    input_type = "email";
  } else if (type.is_base(link::BaseType::kNumber)) {
    input_type = "number";
    textual = false;
    *widget = WidgetKind::kNumberInput;
  } else if (type.is_base(link::BaseType::kDate)) {
    input_type = "date";
    textual = false;
    *widget = WidgetKind::kDateInput;
  }
  std::string out = "<input" + Attr("type", input_type) + (id.empty() ? "" : Attr("id", id)) +
                    Attr("name", name);
  if (input_type == "number") out += Attr("step", "1");
  if (!current.empty()) out += Attr("value", current);
  return out + InputConstraintAttrs(c, textual) + ">";
}

// The editable fields of one composition part, used as the SubForm template.
std::string PartTemplate(const link::SymbolTable& table, const link::ClassSymbol& cls,
                         const std::string& prefix, int depth) {
  std::string out;
  for (const auto& attr : cls.attributes) {
    if (attr.type.kind == link::TypeRef::Kind::kClass) continue;
    std::string name = prefix + "." + attr.name;
    WidgetKind widget;
    std::string input = EditorInput(table, attr.type, "", name, {}, nullptr, &widget);
    out += "<div" + Attr("class", "mw-field") + Attr("data-mw-widget", WidgetKindName(widget)) +
           Attr("data-mw-name", name) + "><label>" + HtmlEscape(attr.name) + " " + input +
           "</label></div>";
  }
  if (depth >= 8) return out;
  for (const auto& [role_name, role] : cls.roles) {
    if (!role.owns_target) continue;
    const link::ClassSymbol* part = table.FindClass(role.target_class);
    std::string name = prefix + "." + role_name + "[]";
    out += "<fieldset" + Attr("class", "mw-subform") +
           Attr("data-mw-widget", WidgetKindName(WidgetKind::kSubForm)) +
           Attr("data-mw-name", name) + Attr("data-mw-class", role.target_class) +
           Attr("data-mw-cardinality", role.cardinality.ToString()) + "><legend>" +
           HtmlEscape(role_name) + "</legend><template class=\"mw-part\">" +
           PartTemplate(table, *part, name, depth + 1) +
           "</template><button type=\"button\" class=\"mw-add\" data-mw-action=\"add\">Add</button>"
           "<button type=\"button\" class=\"mw-remove\" data-mw-action=\"remove\">Remove</button>"
           "</fieldset>";
  }
  return out;
}

}  // namespace

const char* WidgetKindName(WidgetKind kind) {
  switch (kind) {
    case WidgetKind::kTextInput: return "TextInput";
    case WidgetKind::kNumberInput: return "NumberInput";
    case WidgetKind::kDateInput: return "DateInput";
    case WidgetKind::kEmailImage: return "EmailImage";
    case WidgetKind::kEnumSelect: return "EnumSelect";
    case WidgetKind::kSubForm: return "SubForm";
    case WidgetKind::kRefPicker: return "RefPicker";
    case WidgetKind::kStaticTextBlock: return "StaticTextBlock";
    case WidgetKind::kCaptchaBox: return "CaptchaBox";
    case WidgetKind::kReadOnlyText: return "ReadOnlyText";
  }
  return "?";
}

std::string RenderTextImage(std::string_view text, const std::optional<std::string>& alt) {
  std::string path;
  int column = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    auto byte = static_cast<unsigned char>(text[i]);
    if ((byte & 0xC0) == 0x80) continue;  // UTF-8 continuation byte
    int glyph = byte >= 32 && byte < 127 ? byte - 32 : '?' - 32;
    for (int y = 0; y < kGlyphHeight; ++y) {
      unsigned bits = kGlyphs[glyph][y];
      int x = 0;
      while (x < kGlyphWidth) {
        if (((bits >> (kGlyphWidth - 1 - x)) & 1U) == 0) {
          ++x;
          continue;
        }
        int start = x;
        while (x < kGlyphWidth && ((bits >> (kGlyphWidth - 1 - x)) & 1U) != 0) ++x;
        int run = x - start;
        path += "M" + std::to_string(column * kGlyphWidth + start) + " " + std::to_string(y) +
                "h" + std::to_string(run) + "v1h-" + std::to_string(run) + "z";
      }
    }
    ++column;
  }
  int width = std::max(1, column) * kGlyphWidth;
  std::string out = "<svg" + Attr("class", "mw-image") + Attr("xmlns", "http://www.w3.org/2000/svg") +
                    Attr("width", std::to_string(width * kGlyphScale)) +
                    Attr("height", std::to_string(kGlyphHeight * kGlyphScale)) +
                    Attr("viewBox", "0 0 " + std::to_string(width) + " " +
                                        std::to_string(kGlyphHeight)) +
                    Attr("role", "img");
  if (alt) out += Attr("aria-label", *alt);
  out += ">";
  if (!path.empty()) out += "<path" + Attr("d", path) + "/>";
  return out + "</svg>";
}

FieldFragment RenderField(const link::SymbolTable& table, const link::EffectiveElement& element,
                          const PageData* data, std::string_view id_suffix) {
  FieldFragment out;
  out.name = element.name;
  std::string id = "mw-" + element.name + std::string(id_suffix);
  bool editor = element.mode == cv::ViewModifier::kEditor;

  if (element.kind == link::EffectiveElement::Kind::kStaticText) {
    out.widget = WidgetKind::kStaticTextBlock;
    std::string body = HtmlEscape(element.text);
    if (element.HasAnnotation("Warning")) {
      out.html = "<div" + Attr("class", "mw-warning") + Attr("role", "alert") +
                 Attr("data-mw-widget", "StaticTextBlock") + "><p>" + body + "</p></div>";
    } else {
      out.html = "<p" + Attr("class", "mw-text") + Attr("data-mw-widget", "StaticTextBlock") +
                 ">" + body + "</p>";
    }
    return out;
  }

  const rt::Value* value = DataValue(data, element.name);

  if (element.kind == link::EffectiveElement::Kind::kAttribute) {
    out.constraints = rt::FieldConstraints::From(element.annotations);
    const link::TypeRef& type = *element.type;
    if (editor) {
      std::string input =
          EditorInput(table, type, id, element.name, out.constraints, value, &out.widget);
      out.html = FieldOpen(out.widget, element.name, out.constraints) + Label(id, element.name) +
                 input + "</div>";
      return out;
    }
    if (const Annotation* image = element.FindAnnotation("AsImage")) {
      out.widget = WidgetKind::kEmailImage;
      std::optional<std::string> alt;
      if (image->BoolArg("alt").value_or(true)) alt = element.name;
      std::string text = value != nullptr ? value->ToDisplayString() : "";
      out.html = FieldOpen(out.widget, element.name, out.constraints) +
                 "<span class=\"mw-label\">" + HtmlEscape(element.name) + "</span> " +
                 RenderTextImage(text, alt) + "</div>";
      return out;
    }
    out.widget = WidgetKind::kReadOnlyText;
    std::string text = value != nullptr ? value->ToDisplayString() : "";
    out.html = FieldOpen(out.widget, element.name, out.constraints) +
               "<span class=\"mw-label\">" + HtmlEscape(element.name) + "</span> " +
               "<span" + Attr("class", "mw-value") + Attr("data-mw-bind", element.name) + ">" +
               HtmlEscape(text) + "</span></div>";
    return out;
  }

  const link::RoleSymbol& role = *element.role;
  std::vector<std::string> labels;
  if (value != nullptr) labels = RefLabels(data, *value);

  if (editor && role.owns_target) {
    out.widget = WidgetKind::kSubForm;
    const link::ClassSymbol* part = table.FindClass(role.target_class);
    std::string name = element.name + "[]";
    out.html = "<fieldset" + Attr("class", "mw-field mw-subform") +
               Attr("data-mw-widget", "SubForm") + Attr("data-mw-name", element.name) +
               Attr("data-mw-class", role.target_class) +
               Attr("data-mw-cardinality", role.cardinality.ToString()) + "><legend>" +
               HtmlEscape(element.name) + "</legend><template class=\"mw-part\">" +
               (part != nullptr ? PartTemplate(table, *part, name, 0) : "") +
               "</template><ol class=\"mw-parts\">";
    for (const std::string& label : labels) out.html += "<li>" + HtmlEscape(label) + "</li>";
    out.html +=
        "</ol><button type=\"button\" class=\"mw-add\" data-mw-action=\"add\">Add</button>"
        "<button type=\"button\" class=\"mw-remove\" data-mw-action=\"remove\">Remove</button>"
        "</fieldset>";
    return out;
  }
  if (editor && role.kind == cd::RelationKind::kAssociation) {
    out.widget = WidgetKind::kRefPicker;
    bool many = role.cardinality.max != 1;
    out.html = FieldOpen(out.widget, element.name, out.constraints) + Label(id, element.name) +
               "<select" + Attr("id", id) + Attr("name", element.name) +
               Attr("data-mw-class", role.target_class) +
               Attr("data-mw-cardinality", role.cardinality.ToString()) +
               (many ? " multiple" : "") + (role.cardinality.min > 0 ? " required" : "") + ">";
    if (data != nullptr && data->store != nullptr) {
      for (rt::ObjectId candidate : data->store->Ids()) {
        const rt::Object* obj = data->store->Find(candidate);
        if (obj->class_name != role.target_class) continue;
        std::string label = data->store->Label(candidate);
        bool selected = std::find(labels.begin(), labels.end(), label) != labels.end();
        out.html += "<option" + Attr("value", label) + (selected ? " selected" : "") + ">" +
                    HtmlEscape(label) + "</option>";
      }
    }
    out.html += "</select></div>";
    return out;
  }
  // Display mode, and the owner side of a composition, which is never edited.
  out.widget = WidgetKind::kReadOnlyText;
  out.html = FieldOpen(out.widget, element.name, out.constraints) +
             "<span class=\"mw-label\">" + HtmlEscape(element.name) + "</span> " +
             "<ul" + Attr("class", "mw-value mw-refs") + Attr("data-mw-bind", element.name) +
             Attr("data-mw-class", role.target_class) + ">";
  for (const std::string& label : labels) out.html += "<li>" + HtmlEscape(label) + "</li>";
  out.html += "</ul></div>";
  return out;
}

std::string RenderViewPage(const link::SymbolTable& table, const link::ViewSymbol& view,
                           const PageData* data) {
  bool editor = view.modifier == cv::ViewModifier::kEditor;
  std::string title = view.QualifiedName();
  std::string out =
      "<!DOCTYPE html>\n<html lang=\"en\">\n<head>\n<meta charset=\"utf-8\">\n<title>" +
      HtmlEscape(title) + "</title>\n<link rel=\"stylesheet\" href=\"../static/mw.css\">\n" +
      "</head>\n<body>\n<main" +
      Attr("class", std::string("mw-view ") + (editor ? "mw-editor" : "mw-display")) +
      Attr("data-mw-view", title) + Attr("data-mw-class", view.owner_class) + ">\n<h1>" +
      HtmlEscape(view.name.value_or(view.owner_class)) + "</h1>\n";
  if (editor) {
    out += "<form" + Attr("class", "mw-form") + Attr("method", "post") +
           Attr("data-mw-view", title) + ">\n";
  }
  std::map<std::string, int> seen;
  for (const link::EffectiveElement& el : view.elements) {
    int n = seen[el.name]++;
    std::string suffix = n == 0 ? "" : "-" + std::to_string(n + 1);
    out += RenderField(table, el, data, suffix).html + "\n";
  }
  if (editor) {
    if (view.HasAnnotation("Captcha")) {
      out += "<div" + Attr("class", "mw-captcha") + Attr("data-mw-widget", "CaptchaBox") +
             "><span" + Attr("class", "mw-challenge") + Attr("data-mw-bind", "captcha") +
             "></span>" + Label("mw-captcha", "captcha") + "<input" + Attr("type", "text") +
             Attr("id", "mw-captcha") + Attr("name", "captcha") + " required></div>\n";
    }
    out += "<button type=\"submit\" class=\"mw-submit\">Submit</button>\n</form>\n";
  }
  out += "</main>\n</body>\n</html>\n";
  return out;
}

const std::string& Stylesheet() {
  static const std::string kCss =
      "body { font-family: sans-serif; margin: 2em; }\n"
      ".mw-view h1 { font-size: 1.4em; }\n"
      ".mw-field { margin: 0.5em 0; }\n"
      ".mw-field label, .mw-label { display: inline-block; min-width: 8em; font-weight: bold; }\n"
      ".mw-subform { border: 1px solid #999; padding: 0.5em; }\n"
      ".mw-refs { display: inline-block; margin: 0; padding-left: 1.2em; }\n"
      ".mw-text { margin: 0.5em 0; }\n"
      ".mw-warning { border: 1px solid #c00; background: #fee; color: #900; padding: 0.5em; }\n"
      ".mw-captcha { margin: 1em 0; padding: 0.5em; border: 1px dashed #666; }\n"
      ".mw-image { vertical-align: middle; }\n"
      ".mw-image path { fill: currentColor; }\n";
  return kCss;
}

}  // namespace mw::gen
