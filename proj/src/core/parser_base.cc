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

#include "mw/core/parser_base.h"

namespace mw {

bool ParserBase::AcceptPunct(std::string_view p) {
  if (!Peek().IsPunct(p)) return false;
  Next();
  return true;
}

bool ParserBase::AcceptKeyword(std::string_view kw) {
  if (!Peek().IsIdent(kw)) return false;
  Next();
  return true;
}

Token ParserBase::ExpectPunct(std::string_view p) {
  if (!Peek().IsPunct(p)) FailExpected("'" + std::string(p) + "'");
  return Next();
}

Token ParserBase::ExpectKeyword(std::string_view kw) {
  if (!Peek().IsIdent(kw)) FailExpected("keyword '" + std::string(kw) + "'");
  return Next();
}

Token ParserBase::ExpectIdent(std::string_view what) {
  if (Peek().kind != TokenKind::kIdent) FailExpected(what);
  return Next();
}

void ParserBase::Fail(std::string message, const SourceSpan& span,
                      std::string code) {
  throw SyntaxError(Diagnostic::Error(std::move(code), std::move(message), span));
}

void ParserBase::FailExpected(std::string_view expected) {
  const Token& t = Peek();
  Fail("expected " + std::string(expected) + ", found " + t.Describe(), t.span);
}

}  // namespace mw
