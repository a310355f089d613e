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

#include "mw/core/annotation.h"

#include <algorithm>

namespace mw {

const AnnotationValue* Annotation::Find(std::string_view key) const {
  for (const auto& arg : args) {
    if (arg.key == key) return &arg.value;
  }
  return nullptr;
}

std::optional<std::int64_t> Annotation::IntArg(std::string_view key) const {
  const AnnotationValue* v = Find(key);
  if (v == nullptr || !std::holds_alternative<std::int64_t>(*v)) return std::nullopt;
  return std::get<std::int64_t>(*v);
}

std::optional<bool> Annotation::BoolArg(std::string_view key) const {
  const AnnotationValue* v = Find(key);
  if (v == nullptr || !std::holds_alternative<bool>(*v)) return std::nullopt;
  return std::get<bool>(*v);
}

namespace {

[[noreturn]] void Malformed(ParserBase& p, const std::string& what) {
  const Token& t = p.Peek();
  p.Fail("malformed annotation argument list: expected " + what + ", found " +
             t.Describe(),
         t.span, "MW010");
}

AnnotationValue ParseValue(ParserBase& p) {
  const Token& t = p.Peek();
  if (t.kind == TokenKind::kInt) return p.Next().int_value;
  if (t.IsPunct("-") && p.Peek(1).kind == TokenKind::kInt) {
    p.Next();
    return -p.Next().int_value;
  }
  if (t.IsIdent("true") || t.IsIdent("false")) return p.Next().text == "true";
  if (t.kind == TokenKind::kString) return p.Next().text;
  Malformed(p, "an integer, boolean or string value");
}

}  // namespace

Annotation ParseAnnotation(ParserBase& p) {
  Token at = p.ExpectPunct("@");
  if (p.Peek().kind != TokenKind::kIdent) {
    p.Fail("expected annotation name after '@', found " + p.Peek().Describe(),
           p.Peek().span, "MW010");
  }
  Token name = p.Next();
  Annotation out{name.text, {}, SourceSpan::Cover(at.span, name.span)};
  if (!p.Peek().IsPunct("(")) return out;
  p.Next();
  if (!p.Peek().IsPunct(")")) {
    for (;;) {
      if (p.Peek().kind != TokenKind::kIdent) Malformed(p, "an argument name");
      Token key = p.Next();
      if (!p.AcceptPunct("=")) Malformed(p, "'=' after '" + key.text + "'");
      AnnotationValue value = ParseValue(p);
      if (out.Find(key.text) != nullptr) {
        p.Fail("duplicate annotation argument '" + key.text + "'", key.span,
               "MW010");
      }
      out.args.push_back({key.text, std::move(value)});
      if (p.AcceptPunct(",")) continue;
      if (!p.Peek().IsPunct(")")) Malformed(p, "',' or ')'");
      break;
    }
  }
  Token close = p.Next();
  out.span.value = SourceSpan::Cover(out.span.value, close.span);
  return out;
}

std::vector<Annotation> ParseAnnotations(ParserBase& p) {
  std::vector<Annotation> out;
  while (p.Peek().IsPunct("@")) out.push_back(ParseAnnotation(p));
  return out;
}

ParseResult<Annotation> ParseAnnotationText(std::string_view text,
                                            std::string file) {
  Lexer lexer(text, std::move(file));
  ParserBase p(lexer);
  ParseResult<Annotation> result;
  try {
    Annotation a = ParseAnnotation(p);
    if (p.Peek().kind != TokenKind::kEof) p.FailExpected("end of input");
    result.value = std::move(a);
  } catch (const SyntaxError& e) {
    result.diagnostics.push_back(e.diagnostic);
  }
  for (const auto& d : lexer.diagnostics()) result.diagnostics.push_back(d);
  if (HasErrors(result.diagnostics)) result.value.reset();
  return result;
}

std::string QuoteString(std::string_view raw) {
  std::string out = "\"";
  for (char c : raw) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  out += '"';
  return out;
}

std::string PrintAnnotationValue(const AnnotationValue& value) {
  if (const auto* i = std::get_if<std::int64_t>(&value)) return std::to_string(*i);
  if (const auto* b = std::get_if<bool>(&value)) return *b ? "true" : "false";
  return QuoteString(std::get<std::string>(value));
}

std::string PrintAnnotation(const Annotation& a) {
  std::string out = "@" + a.name;
  if (a.args.empty()) return out;
  out += '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i > 0) out += ", ";
    out += a.args[i].key + "=" + PrintAnnotationValue(a.args[i].value);
  }
  out += ')';
  return out;
}

}  // namespace mw
