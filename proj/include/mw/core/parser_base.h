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

#ifndef MW_CORE_PARSER_BASE_H_
#define MW_CORE_PARSER_BASE_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "mw/core/diagnostic.h"
#include "mw/core/lexer.h"

namespace mw {

// Thrown inside a recursive-descent parser to unwind to its entry point.
// Never escapes a public parse function.
struct SyntaxError : std::runtime_error {
  explicit SyntaxError(Diagnostic d)
      : std::runtime_error(d.message), diagnostic(std::move(d)) {}
  Diagnostic diagnostic;
};

// Token cursor with the expect/accept helpers every frontend uses.
class ParserBase {
 public:
  explicit ParserBase(Lexer& lexer) : lexer_(lexer) {}

  Lexer& lexer() { return lexer_; }
  const Token& Peek(std::size_t ahead = 0) { return lexer_.Peek(ahead); }
  Token Next() { return lexer_.Next(); }

  bool AcceptPunct(std::string_view p);
  bool AcceptKeyword(std::string_view kw);
  Token ExpectPunct(std::string_view p);
  Token ExpectKeyword(std::string_view kw);
  Token ExpectIdent(std::string_view what);

  [[noreturn]] void Fail(std::string message, const SourceSpan& span,
                         std::string code = "MW020");
  [[noreturn]] void FailExpected(std::string_view expected);

 private:
  Lexer& lexer_;
};

}  // namespace mw

#endif  // MW_CORE_PARSER_BASE_H_
