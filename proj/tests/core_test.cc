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

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "mw/core/annotation.h"
#include "mw/core/date.h"
#include "mw/core/diagnostic.h"
#include "mw/core/lexer.h"
#include "mw/core/text.h"

namespace mw {
namespace {

std::vector<Token> LexAll(std::string_view text, Diagnostics* diags = nullptr) {
  Lexer lexer(text, "t.cd");
  std::vector<Token> out;
  for (Token t = lexer.Next(); t.kind != TokenKind::kEof; t = lexer.Next()) out.push_back(t);
  if (diags != nullptr) *diags = lexer.diagnostics();
  return out;
}

std::vector<std::string> Codes(const Diagnostics& diags) {
  std::vector<std::string> out;
  for (const auto& d : diags) out.push_back(d.code);
  return out;
}

TEST(LexerTest, TokenKindsAndPositions) {
  Diagnostics diags;
  auto tokens = LexAll("class Person {\n  Number age; -> [0..*] \"hi\\n\"\n}", &diags);
  EXPECT_TRUE(diags.empty());
  ASSERT_EQ(tokens.size(), 14u);
  EXPECT_TRUE(tokens[0].IsIdent("class"));
  EXPECT_TRUE(tokens[2].IsPunct("{"));
  EXPECT_EQ(tokens[3].span.start_line, 2);
  EXPECT_EQ(tokens[3].span.start_col, 3);
  EXPECT_TRUE(tokens[6].IsPunct("->"));
  EXPECT_EQ(tokens[8].kind, TokenKind::kInt);
  EXPECT_EQ(tokens[8].int_value, 0);
  EXPECT_TRUE(tokens[9].IsPunct(".."));
  EXPECT_TRUE(tokens[10].IsPunct("*"));
  EXPECT_EQ(tokens[12].kind, TokenKind::kString);
  EXPECT_EQ(tokens[12].text, "hi\n");
}

TEST(LexerTest, CommentsAreIgnored) {
  Diagnostics diags;
  auto tokens = LexAll("a // line comment\n/* block\n comment */ b", &diags);
  EXPECT_TRUE(diags.empty());
  ASSERT_EQ(tokens.size(), 2u);
  EXPECT_TRUE(tokens[1].IsIdent("b"));
  EXPECT_EQ(tokens[1].span.start_line, 3);
}

TEST(LexerTest, MalformedInputYieldsDiagnostics) {
  Diagnostics diags;
  LexAll("a $ b", &diags);
  EXPECT_EQ(Codes(diags), std::vector<std::string>{"MW001"});
  LexAll("\"open", &diags);
  EXPECT_EQ(Codes(diags), std::vector<std::string>{"MW002"});
  LexAll("\"bad \\q escape\"", &diags);
  EXPECT_EQ(Codes(diags), std::vector<std::string>{"MW002"});
  LexAll("/* never closed", &diags);
  EXPECT_EQ(Codes(diags), std::vector<std::string>{"MW003"});
  LexAll("99999999999999999999999", &diags);
  EXPECT_EQ(Codes(diags), std::vector<std::string>{"MW004"});
}

TEST(LexerTest, BalancedBlockIsCapturedVerbatim) {
  Lexer lexer("text { a {b} c } rest", "t.cv");
  EXPECT_TRUE(lexer.Next().IsIdent("text"));
  EXPECT_TRUE(lexer.Next().IsPunct("{"));
  SourceSpan span;
  auto block = lexer.ScanBalancedBlock(&span);
  ASSERT_TRUE(block.has_value());
  EXPECT_EQ(*block, " a {b} c ");
  EXPECT_TRUE(lexer.Next().IsIdent("rest"));
}

TEST(LexerTest, RandomBytesAlwaysTerminate) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> byte(0, 255);
  std::uniform_int_distribution<int> len(0, 200);
  for (int i = 0; i < 2000; ++i) {
    std::string input;
    int n = len(rng);
    for (int j = 0; j < n; ++j) input.push_back(static_cast<char>(byte(rng)));
    Lexer lexer(input, "fuzz");
    std::size_t steps = 0;
    while (lexer.Next().kind != TokenKind::kEof) {
      ASSERT_LE(++steps, input.size() + 1) << "lexer did not make progress";
    }
    for (const auto& d : lexer.diagnostics()) {
      EXPECT_TRUE(d.code.size() == 5 && d.code.rfind("MW00", 0) == 0) << d.code;
    }
  }
}

TEST(AnnotationTest, BareName) {
  auto r = ParseAnnotationText("@Required");
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(r->name, "Required");
  EXPECT_TRUE(r->args.empty());
}

TEST(AnnotationTest, IntegerArgsInOrder) {
  auto r = ParseAnnotationText("@Length(min=3, max=30)");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->args.size(), 2u);
  EXPECT_EQ(r->args[0].key, "min");
  EXPECT_EQ(std::get<std::int64_t>(r->args[0].value), 3);
  EXPECT_EQ(r->args[1].key, "max");
  EXPECT_EQ(r->IntArg("max"), 30);
}

TEST(AnnotationTest, BooleanArg) {
  auto r = ParseAnnotationText("@AsImage(alt=false)");
  ASSERT_TRUE(r.ok());
  ASSERT_EQ(r->args.size(), 1u);
  EXPECT_EQ(r->BoolArg("alt"), false);
}

TEST(AnnotationTest, MalformedArgListIsMW010) {
  for (const char* text : {"@Length(min=)", "@Length(min 3)", "@Length(min=3"}) {
    auto r = ParseAnnotationText(text);
    EXPECT_FALSE(r.ok()) << text;
    ASSERT_FALSE(r.diagnostics.empty()) << text;
    EXPECT_EQ(r.diagnostics[0].code, "MW010") << text;
  }
}

TEST(AnnotationTest, PrintThenParseRoundTrips) {
  Annotation a;
  a.name = "Hint";
  a.args = {{"n", std::int64_t{-42}}, {"on", true}, {"s", std::string("q\"u\\o\nte é")}};
  auto r = ParseAnnotationText(PrintAnnotation(a));
  ASSERT_TRUE(r.ok()) << PrintAnnotation(a);
  EXPECT_EQ(*r, a);
}

Diagnostic At(std::string code, std::string file, int line, int col, int end_col) {
  return Diagnostic::Error(std::move(code), "message for " + file, {file, line, col, line, end_col});
}

TEST(RenderDiagnosticsTest, EmptyListRendersNothing) {
  EXPECT_EQ(RenderDiagnostics({}, SourceMap{}), "");
}

TEST(RenderDiagnosticsTest, SingleDiagnosticGolden) {
  SourceMap sources;
  sources.Add("person.cv", "Person {\n  attributes {\n    @Length(min=) name;\n");
  Diagnostic d = Diagnostic::Error("MW010", "expected an annotation value",
                                   {"person.cv", 3, 17, 3, 18});
  EXPECT_EQ(RenderDiagnostics({d}, sources),
            "person.cv:3:17: error MW010: expected an annotation value\n"
            " 3 |     @Length(min=) name;\n"
            "   |                 ^\n");
}

TEST(RenderDiagnosticsTest, SortedByFileThenPosition) {
  Diagnostics diags = {At("MW401", "b.cd", 1, 1, 2), At("MW020", "a.cd", 9, 1, 2),
                       At("MW104", "a.cd", 2, 5, 6)};
  std::string text = RenderDiagnostics(diags, SourceMap{});
  auto a2 = text.find("a.cd:2:5");
  auto a9 = text.find("a.cd:9:1");
  auto b1 = text.find("b.cd:1:1");
  ASSERT_NE(a2, std::string::npos);
  EXPECT_LT(a2, a9);
  EXPECT_LT(a9, b1);
  std::reverse(diags.begin(), diags.end());
  EXPECT_EQ(RenderDiagnostics(diags, SourceMap{}), text);
}

TEST(RenderDiagnosticsTest, ColorWrapsSeverity) {
  Diagnostic d = Diagnostic::Warning("MW202", "anonymous view", {"p.cv", 1, 1, 1, 2});
  std::string text = RenderDiagnostics({d}, SourceMap{}, RenderOptions{true});
  EXPECT_NE(text.find("\x1b[1;33mwarning MW202\x1b[0m"), std::string::npos);
}

TEST(TextTest, Utf8LengthCountsScalarValues) {
  EXPECT_EQ(Utf8Length(""), 0u);
  EXPECT_EQ(Utf8Length("abc"), 3u);
  EXPECT_EQ(Utf8Length("é€😀"), 3u);
}

TEST(TextTest, TrimAndEscape) {
  EXPECT_EQ(TrimWhitespace("  a b \t\n"), "a b");
  EXPECT_EQ(HtmlEscape("<a href=\"x\">&'</a>"),
            "&lt;a href=&quot;x&quot;&gt;&amp;&#39;&lt;/a&gt;");
}

TEST(DateTest, AcceptsOnlyRealIsoDates) {
  auto d = ParseIsoDate("2008-05-01");
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->ToIso(), "2008-05-01");
  EXPECT_TRUE(ParseIsoDate("2024-02-29").has_value());
  EXPECT_FALSE(ParseIsoDate("2023-02-29").has_value());
  EXPECT_FALSE(ParseIsoDate("2008-5-1").has_value());
  EXPECT_FALSE(ParseIsoDate("2008-13-01").has_value());
  EXPECT_FALSE(ParseIsoDate("yesterday").has_value());
}

}  // namespace
}  // namespace mw
