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

#include "mw/classdiagram/classdiagram.h"

#include <array>
#include <set>

#include "mw/core/parser_base.h"

namespace mw::cd {

const char* RelationKindName(RelationKind kind) {
  return kind == RelationKind::kComposition ? "composition" : "association";
}

std::string Cardinality::ToString() const {
  return "[" + std::to_string(min) + ".." +
         (max ? std::to_string(*max) : std::string("*")) + "]";
}

namespace {

constexpr std::array<std::string_view, 5> kKeywords = {
    "classdiagram", "class", "enum", "composition", "association"};

// Reads the inside of a cardinality bracket; the '[' is already consumed and
// the closing ']' is left for the caller.
Cardinality ParseCardinalityBody(ParserBase& p) {
  if (p.AcceptPunct("*")) return Cardinality::Many();
  const Token& t = p.Peek();
  if (t.IsPunct("-")) p.Fail("cardinality must not be negative", t.span);
  if (t.kind != TokenKind::kInt) p.FailExpected("'*' or a cardinality number");
  Token lo = p.Next();
  Cardinality c = Cardinality::Exactly(lo.int_value);
  if (!p.AcceptPunct("..")) return c;
  if (p.AcceptPunct("*")) {
    c.max.reset();
    return c;
  }
  const Token& hi_tok = p.Peek();
  if (hi_tok.IsPunct("-")) p.Fail("cardinality must not be negative", hi_tok.span);
  if (hi_tok.kind != TokenKind::kInt) p.FailExpected("'*' or an upper bound");
  Token hi = p.Next();
  if (hi.int_value < lo.int_value) {
    p.Fail("cardinality upper bound " + hi.text + " is below lower bound " + lo.text,
           SourceSpan::Cover(lo.span, hi.span), "MW102");
  }
  c.max = hi.int_value;
  return c;
}

class Parser : public ParserBase {
 public:
  Parser(Lexer& lexer, Diagnostics& diags) : ParserBase(lexer), diags_(diags) {}

  ClassDiagram ParseFile() {
    ClassDiagram cd;
    Token kw = ExpectKeyword("classdiagram");
    cd.name = ExpectIdent("diagram name").text;
    ExpectPunct("{");
    std::set<std::string> element_names;
    auto note_name = [&](const std::string& name, const SourceSpan& span) {
      if (!element_names.insert(name).second) {
        diags_.push_back(Diagnostic::Error(
            "MW101", "duplicate element '" + name + "' in class diagram " + cd.name,
            span));
      }
    };
    while (!Peek().IsPunct("}")) {
      const Token& t = Peek();
      if (t.IsIdent("class")) {
        cd.classes.push_back(ParseClass());
        note_name(cd.classes.back().name, cd.classes.back().span.value);
        cd.order.push_back({DeclKind::kClass, cd.classes.size() - 1});
      } else if (t.IsIdent("enum")) {
        cd.enums.push_back(ParseEnum());
        note_name(cd.enums.back().name, cd.enums.back().span.value);
        cd.order.push_back({DeclKind::kEnum, cd.enums.size() - 1});
      } else if (t.IsIdent("composition") || t.IsIdent("association")) {
        cd.relations.push_back(ParseRelation());
        cd.order.push_back({DeclKind::kRelation, cd.relations.size() - 1});
      } else {
        FailExpected("'class', 'enum', 'composition', 'association' or '}'");
      }
    }
    Token close = Next();
    if (Peek().kind != TokenKind::kEof) FailExpected("end of input");
    cd.span = SourceSpan::Cover(kw.span, close.span);
    return cd;
  }

 private:
  ClassDef ParseClass() {
    Token kw = Next();
    ClassDef c;
    c.name = ExpectIdent("class name").text;
    ExpectPunct("{");
    std::set<std::string> names;
    try {
      while (!Peek().IsPunct("}")) {
        Token type = ExpectIdent("attribute type or '}'");
        Token name = ExpectIdent("attribute name");
        Token semi = ExpectPunct(";");
        SourceSpan span = SourceSpan::Cover(type.span, semi.span);
        if (!names.insert(name.text).second) {
          diags_.push_back(Diagnostic::Error(
              "MW105", "duplicate attribute '" + name.text + "' in class " + c.name,
              name.span));
        }
        c.attributes.push_back({type.text, name.text, span});
      }
    } catch (const SyntaxError&) {
      if (Peek().kind != TokenKind::kEof) throw;
      Fail("unterminated class '" + c.name + "'", kw.span);
    }
    Token close = Next();
    c.span = SourceSpan::Cover(kw.span, close.span);
    return c;
  }

  EnumDef ParseEnum() {
    Token kw = Next();
    EnumDef e;
    e.name = ExpectIdent("enum name").text;
    ExpectPunct("{");
    std::set<std::string> seen;
    do {
      Token lit = ExpectIdent("enum literal");
      if (!seen.insert(lit.text).second) {
        diags_.push_back(Diagnostic::Error(
            "MW106", "duplicate literal '" + lit.text + "' in enum " + e.name,
            lit.span));
      }
      e.literals.push_back(lit.text);
    } while (AcceptPunct(","));
    AcceptPunct(";");
    Token close = ExpectPunct("}");
    e.span = SourceSpan::Cover(kw.span, close.span);
    return e;
  }

  std::optional<std::string> ParseRole() {
    if (!AcceptPunct("(")) return std::nullopt;
    std::string role = ExpectIdent("role name").text;
    ExpectPunct(")");
    return role;
  }

  void RejectSourceCardinality() {
    if (Peek().IsPunct("[")) {
      Fail("cardinality is only allowed on the target side of a relation",
           Peek().span);
    }
  }

  RelationDef ParseRelation() {
    Token kw = Next();
    RelationDef r;
    r.kind = kw.text == "composition" ? RelationKind::kComposition
                                      : RelationKind::kAssociation;
    r.source_class = ExpectIdent("source class").text;
    RejectSourceCardinality();
    r.source_role = ParseRole();
    RejectSourceCardinality();
    if (AcceptPunct("->")) {
      r.directed = true;
    } else if (AcceptPunct("--")) {
      r.directed = false;
    } else {
      FailExpected("'->' or '--'");
    }
    r.target_role = ParseRole();
    r.target_class = ExpectIdent("target class").text;
    if (AcceptPunct("[")) {
      r.target_cardinality = ParseCardinalityBody(*this);
      ExpectPunct("]");
    }
    Token semi = ExpectPunct(";");
    r.span = SourceSpan::Cover(kw.span, semi.span);
    return r;
  }

  Diagnostics& diags_;
};

void AppendLexDiagnostics(const Lexer& lexer, Diagnostics& out) {
  for (const auto& d : lexer.diagnostics()) out.push_back(d);
}

}  // namespace

ParseResult<ClassDiagram> ParseClassDiagram(std::string_view source,
                                            std::string file) {
  Lexer lexer(source, file);
  ParseResult<ClassDiagram> result;
  Parser parser(lexer, result.diagnostics);
  try {
    ClassDiagram cd = parser.ParseFile();
    cd.file = file;
    result.value = std::move(cd);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  }
  AppendLexDiagnostics(lexer, result.diagnostics);
  if (HasErrors(result.diagnostics)) result.value.reset();
  return result;
}

ParseResult<Cardinality> ParseCardinality(std::optional<std::string_view> text) {
  ParseResult<Cardinality> result;
  if (!text) {
    result.value = Cardinality::Exactly(1);
    return result;
  }
  Lexer lexer(*text, "<cardinality>");
  ParserBase p(lexer);
  try {
    Cardinality c = ParseCardinalityBody(p);
    if (p.Peek().kind != TokenKind::kEof) p.FailExpected("end of cardinality");
    result.value = c;
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  }
  AppendLexDiagnostics(lexer, result.diagnostics);
  if (HasErrors(result.diagnostics)) result.value.reset();
  return result;
}

std::string PrintCardinality(const Cardinality& c) {
  if (c == Cardinality::Exactly(1)) return "";
  if (c == Cardinality::Many()) return "[*]";
  if (c.max == c.min) return "[" + std::to_string(c.min) + "]";
  return "[" + std::to_string(c.min) + ".." +
         (c.max ? std::to_string(*c.max) : std::string("*")) + "]";
}

std::string PrintClassDiagram(const ClassDiagram& cd) {
  std::string out = "classdiagram " + cd.name + " {\n";
  for (const DeclRef& ref : cd.order) {
    switch (ref.kind) {
      case DeclKind::kClass: {
        const ClassDef& c = cd.classes[ref.index];
        out += "  class " + c.name + " {\n";
        for (const auto& a : c.attributes) {
          out += "    " + a.type_name + " " + a.name + ";\n";
        }
        out += "  }\n";
        break;
      }
      case DeclKind::kEnum: {
        const EnumDef& e = cd.enums[ref.index];
        out += "  enum " + e.name + " {";
        for (std::size_t i = 0; i < e.literals.size(); ++i) {
          if (i > 0) out += ", ";
          out += e.literals[i];
        }
        out += ";}\n";
        break;
      }
      case DeclKind::kRelation: {
        const RelationDef& r = cd.relations[ref.index];
        out += std::string("  ") + RelationKindName(r.kind) + " " + r.source_class;
        if (r.source_role) out += " (" + *r.source_role + ")";
        out += r.directed ? " ->" : " --";
        if (r.target_role) out += " (" + *r.target_role + ")";
        out += " " + r.target_class;
        std::string card = PrintCardinality(r.target_cardinality);
        if (!card.empty()) out += " " + card;
        out += ";\n";
        break;
      }
    }
  }
  out += "}\n";
  return out;
}

std::span<const std::string_view> ClassDiagramKeywords() { return kKeywords; }

}  // namespace mw::cd
