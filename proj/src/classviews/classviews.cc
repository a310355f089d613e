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

#include "mw/classviews/classviews.h"

#include <set>

#include "mw/core/parser_base.h"
#include "mw/core/text.h"

namespace mw::cv {

const char* ModifierKeyword(ViewModifier m) {
  switch (m) {
    case ViewModifier::kEditor: return "editor";
    case ViewModifier::kDisplay: return "display";
    case ViewModifier::kField: return "field";
  }
  return "display";
}

const SourceSpan& ElementSpan(const ViewElement& element) {
  return std::visit([](const auto& e) -> const SourceSpan& { return e.span.value; },
                    element);
}

namespace {

std::optional<ViewModifier> AsModifier(const Token& t) {
  if (t.kind != TokenKind::kIdent) return std::nullopt;
  if (t.text == "editor") return ViewModifier::kEditor;
  if (t.text == "display") return ViewModifier::kDisplay;
  if (t.text == "field") return ViewModifier::kField;
  return std::nullopt;
}

SourceSpan StartOf(const std::vector<Annotation>& annotations, const SourceSpan& fallback) {
  return annotations.empty() ? fallback : annotations.front().span.value;
}

class Parser : public ParserBase {
 public:
  Parser(Lexer& lexer, Diagnostics& diags) : ParserBase(lexer), diags_(diags) {}

  ClassviewsFile ParseFile() {
    ClassviewsFile f;
    f.annotations = ParseAnnotations(*this);
    Token name = ExpectIdent("class name");
    f.class_name = name.text;
    ExpectPunct("{");
    if (Peek().IsIdent("attributes") && Peek(1).IsPunct("{")) {
      f.attributes_block = ParseAttributesBlock();
    }
    std::set<std::string> view_names;
    while (!Peek().IsPunct("}")) {
      ViewDef v = ParseView();
      if (v.name && !view_names.insert(*v.name).second) {
        diags_.push_back(Diagnostic::Error(
            "MW201", "duplicate view '" + *v.name + "' for class " + f.class_name,
            v.span.value));
      }
      f.views.push_back(std::move(v));
    }
    Token close = Next();
    if (Peek().kind != TokenKind::kEof) FailExpected("end of input");
    f.span = SourceSpan::Cover(StartOf(f.annotations, name.span), close.span);
    return f;
  }

 private:
  AttributesBlock ParseAttributesBlock() {
    Token kw = Next();
    ExpectPunct("{");
    AttributesBlock block;
    std::set<std::string> names;
    while (!Peek().IsPunct("}")) {
      AttributeRule rule;
      rule.annotations = ParseAnnotations(*this);
      Token name = ExpectIdent("attribute name");
      Token semi = ExpectPunct(";");
      rule.attribute_name = name.text;
      rule.span = SourceSpan::Cover(StartOf(rule.annotations, name.span), semi.span);
      if (!names.insert(name.text).second) {
        diags_.push_back(Diagnostic::Error(
            "MW206", "attribute '" + name.text + "' appears twice in the attributes block",
            name.span));
      }
      block.entries.push_back(std::move(rule));
    }
    Token close = Next();
    block.span = SourceSpan::Cover(kw.span, close.span);
    return block;
  }

  ViewDef ParseView() {
    ViewDef v;
    v.annotations = ParseAnnotations(*this);
    auto modifier = AsModifier(Peek());
    if (!modifier) FailExpected("'editor', 'display', 'field' or '}'");
    Token kw = Next();
    v.modifier = *modifier;
    if (Peek().kind == TokenKind::kIdent) v.name = Next().text;
    ExpectPunct("{");
    while (!Peek().IsPunct("}")) v.elements.push_back(ParseElement());
    Token close = Next();
    v.span = SourceSpan::Cover(StartOf(v.annotations, kw.span), close.span);
    if (v.elements.empty()) {
      Fail("view '" + v.name.value_or("<anonymous>") +
               "' must contain at least one element",
           v.span.value, "MW021");
    }
    return v;
  }

  ViewElement ParseElement() {
    if (Peek().IsIdent("include") && Peek(1).kind == TokenKind::kIdent) {
      Token kw = Next();
      Token target = Next();
      Token semi = ExpectPunct(";");
      return Include{target.text, SourceSpan::Cover(kw.span, semi.span)};
    }
    std::vector<Annotation> annotations = ParseAnnotations(*this);
    if (Peek().IsIdent("include") && Peek(1).kind == TokenKind::kIdent) {
      Fail("annotations are not allowed on include", Peek().span);
    }
    if (Peek().IsIdent("text") && Peek(1).IsPunct("{")) {
      Token kw = Next();
      Next();
      SourceSpan interior;
      auto body = lexer().ScanBalancedBlock(&interior);
      if (!body) Fail("unterminated text block", kw.span, "MW003");
      StaticText text;
      text.annotations = std::move(annotations);
      text.text = std::string(TrimWhitespace(*body));
      SourceSpan end = interior;
      end.start_line = end.end_line;
      end.start_col = end.end_col;
      end.end_col += 1;
      text.span = SourceSpan::Cover(StartOf(text.annotations, kw.span), end);
      return text;
    }
    AttributeRef ref;
    ref.annotations = std::move(annotations);
    Token first = Peek();
    if (auto m = AsModifier(first); m && Peek(1).kind == TokenKind::kIdent) {
      Next();
      ref.modifier_override = *m;
    }
    Token name = ExpectIdent("attribute name, 'text', 'include' or '}'");
    Token semi = ExpectPunct(";");
    ref.name = name.text;
    ref.span = SourceSpan::Cover(StartOf(ref.annotations, first.span), semi.span);
    return ref;
  }

  Diagnostics& diags_;
};

void PrintAnnotationLines(const std::vector<Annotation>& annotations,
                          const std::string& indent, std::string& out) {
  for (const auto& a : annotations) out += indent + PrintAnnotation(a) + "\n";
}

}  // namespace

ParseResult<ClassviewsFile> ParseClassviews(std::string_view source,
                                            std::string file) {
  Lexer lexer(source, file);
  ParseResult<ClassviewsFile> result;
  Parser parser(lexer, result.diagnostics);
  try {
    ClassviewsFile f = parser.ParseFile();
    f.file = file;
    result.value = std::move(f);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  }
  for (const auto& d : lexer.diagnostics()) result.diagnostics.push_back(d);
  if (HasErrors(result.diagnostics)) result.value.reset();
  return result;
}

std::string PrintClassviews(const ClassviewsFile& f) {
  std::string out;
  PrintAnnotationLines(f.annotations, "", out);
  out += f.class_name + " {\n";
  bool first_section = true;
  auto separate = [&] {
    if (!first_section) out += "\n";
    first_section = false;
  };
  if (f.attributes_block) {
    separate();
    out += "  attributes {\n";
    for (const auto& rule : f.attributes_block->entries) {
      PrintAnnotationLines(rule.annotations, "    ", out);
      out += "    " + rule.attribute_name + ";\n";
    }
    out += "  }\n";
  }
  for (const ViewDef& v : f.views) {
    separate();
    PrintAnnotationLines(v.annotations, "  ", out);
    out += std::string("  ") + ModifierKeyword(v.modifier);
    if (v.name) out += " " + *v.name;
    out += " {\n";
    for (const ViewElement& element : v.elements) {
      if (const auto* ref = std::get_if<AttributeRef>(&element)) {
        PrintAnnotationLines(ref->annotations, "    ", out);
        out += "    ";
        if (ref->modifier_override) {
          out += std::string(ModifierKeyword(*ref->modifier_override)) + " ";
        }
        out += ref->name + ";\n";
      } else if (const auto* text = std::get_if<StaticText>(&element)) {
        PrintAnnotationLines(text->annotations, "    ", out);
        out += "    text {" + text->text + "}\n";
      } else {
        out += "    include " + std::get<Include>(element).view_name + ";\n";
      }
    }
    out += "  }\n";
  }
  out += "}\n";
  return out;
}

}  // namespace mw::cv
