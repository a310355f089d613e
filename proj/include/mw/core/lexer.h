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

#ifndef MW_CORE_LEXER_H_
#define MW_CORE_LEXER_H_

#include <cstdint>
#include <deque>
#include <optional>
#include <string>
#include <string_view>

#include "mw/core/diagnostic.h"
#include "mw/core/source.h"

namespace mw {

enum class TokenKind { kIdent, kInt, kString, kPunct, kEof };

struct Token {
  TokenKind kind = TokenKind::kEof;
  // Identifier name, punctuation spelling, decoded string contents, or the
  // digits of an integer.
  std::string text;
  std::int64_t int_value = 0;
  SourceSpan span;

  bool Is(TokenKind k, std::string_view t) const { return kind == k && text == t; }
  bool IsPunct(std::string_view p) const { return Is(TokenKind::kPunct, p); }
  bool IsIdent(std::string_view id) const { return Is(TokenKind::kIdent, id); }
  std::string Describe() const;
};

// Shared tokenizer for all three languages. Keywords are not distinguished
// here; each frontend treats identifiers contextually.
//
// Lexing is total: malformed input produces MW001..MW004 diagnostics and the
// offending bytes are skipped, so Next() always makes progress and
// eventually returns kEof.
class Lexer {
 public:
  Lexer(std::string_view source, std::string file);

  const Token& Peek(std::size_t ahead = 0);
  Token Next();

  // Captures raw text up to the '}' that balances an already consumed '{'.
  // The lookahead buffer must be empty. Returns nullopt (and records MW003)
  // when the input ends first. `span` receives the interior span.
  std::optional<std::string> ScanBalancedBlock(SourceSpan* span);

  const Diagnostics& diagnostics() const { return diagnostics_; }
  const std::string& file() const { return file_; }

 private:
  Token Lex();
  void SkipTrivia();
  bool AtEnd() const { return pos_ >= src_.size(); }
  char Cur() const { return src_[pos_]; }
  char At(std::size_t off) const {
    return pos_ + off < src_.size() ? src_[pos_ + off] : '\0';
  }
  void Advance();
  SourceSpan SpanFrom(int line, int col) const;

  std::string_view src_;
  std::string file_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  std::deque<Token> lookahead_;
  Diagnostics diagnostics_;
};

}  // namespace mw

#endif  // MW_CORE_LEXER_H_
