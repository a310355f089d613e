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

#include "mw/core/lexer.h"

#include <array>
#include <charconv>
#include <stdexcept>

namespace mw {
namespace {

constexpr std::array<std::string_view, 9> kTwoCharPunct = {
    "->", "..", ">=", "<=", "==", "!=", "&&", "||", "--"};
constexpr std::string_view kOneCharPunct = "{}()[];,.:=|@*<>-+";

bool IsIdentStart(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
}
bool IsDigit(char c) { return c >= '0' && c <= '9'; }

}  // namespace

std::string Token::Describe() const {
  switch (kind) {
    case TokenKind::kEof: return "end of input";
    case TokenKind::kIdent: return "identifier '" + text + "'";
    case TokenKind::kInt: return "integer " + text;
    case TokenKind::kString: return "string literal";
    case TokenKind::kPunct: return "'" + text + "'";
  }
  return "token";
}

Lexer::Lexer(std::string_view source, std::string file)
    : src_(source), file_(std::move(file)) {}

const Token& Lexer::Peek(std::size_t ahead) {
  while (lookahead_.size() <= ahead) lookahead_.push_back(Lex());
  return lookahead_[ahead];
}

Token Lexer::Next() {
  Peek();
  Token t = std::move(lookahead_.front());
  lookahead_.pop_front();
  return t;
}

void Lexer::Advance() {
  char c = src_[pos_++];
  if (c == '\n') {
    ++line_;
    col_ = 1;
  } else if ((static_cast<unsigned char>(c) & 0xC0) != 0x80) {
    ++col_;
  }
}

SourceSpan Lexer::SpanFrom(int line, int col) const {
  return SourceSpan{file_, line, col, line_, col_};
}

void Lexer::SkipTrivia() {
  while (!AtEnd()) {
    char c = Cur();
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
        c == '\v') {
      Advance();
    } else if (c == '/' && At(1) == '/') {
      while (!AtEnd() && Cur() != '\n') Advance();
    } else if (c == '/' && At(1) == '*') {
      int line = line_, col = col_;
      Advance();
      Advance();
      bool closed = false;
      while (!AtEnd()) {
        if (Cur() == '*' && At(1) == '/') {
          Advance();
          Advance();
          closed = true;
          break;
        }
        Advance();
      }
      if (!closed) {
        diagnostics_.push_back(Diagnostic::Error(
            "MW003", "unterminated block comment", SpanFrom(line, col)));
      }
    } else {
      return;
    }
  }
}

Token Lexer::Lex() {
  for (;;) {
    SkipTrivia();
    int line = line_, col = col_;
    if (AtEnd()) return Token{TokenKind::kEof, "", 0, SpanFrom(line, col)};
    char c = Cur();

    if (IsIdentStart(c)) {
      std::size_t start = pos_;
      while (!AtEnd() && (IsIdentStart(Cur()) || IsDigit(Cur()))) Advance();
      return Token{TokenKind::kIdent, std::string(src_.substr(start, pos_ - start)),
                   0, SpanFrom(line, col)};
    }

    if (IsDigit(c)) {
      std::size_t start = pos_;
      while (!AtEnd() && IsDigit(Cur())) Advance();
      std::string digits(src_.substr(start, pos_ - start));
      Token t{TokenKind::kInt, digits, 0, SpanFrom(line, col)};
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(),
                                       t.int_value);
      if (ec != std::errc()) {
        diagnostics_.push_back(Diagnostic::Error(
            "MW004", "integer literal out of range: " + digits, t.span));
        t.int_value = 0;
      }
      return t;
    }

    if (c == '"') {
      Advance();
      std::string value;
      bool closed = false;
      while (!AtEnd() && Cur() != '\n') {
        char ch = Cur();
        if (ch == '"') {
          Advance();
          closed = true;
          break;
        }
        if (ch == '\\') {
          Advance();
          if (AtEnd() || Cur() == '\n') break;
          char esc = Cur();
          switch (esc) {
            case 'n': value += '\n'; break;
            case 't': value += '\t'; break;
            case '"': value += '"'; break;
            case '\\': value += '\\'; break;
            default:
              diagnostics_.push_back(Diagnostic::Error(
                  "MW002", std::string("unknown escape sequence '\\") + esc + "'",
                  SpanFrom(line_, col_ - 1)));
              value += esc;
          }
          Advance();
          continue;
        }
        value += ch;
        Advance();
      }
      if (!closed) {
        diagnostics_.push_back(Diagnostic::Error(
            "MW002", "unterminated string literal", SpanFrom(line, col)));
      }
      return Token{TokenKind::kString, std::move(value), 0, SpanFrom(line, col)};
    }

    for (std::string_view p : kTwoCharPunct) {
      if (c == p[0] && At(1) == p[1]) {
        Advance();
        Advance();
        return Token{TokenKind::kPunct, std::string(p), 0, SpanFrom(line, col)};
      }
    }
    if (kOneCharPunct.find(c) != std::string_view::npos) {
      Advance();
      return Token{TokenKind::kPunct, std::string(1, c), 0, SpanFrom(line, col)};
    }

    // Skip one whole UTF-8 sequence so the column stays meaningful.
    Advance();
    while (!AtEnd() && (static_cast<unsigned char>(Cur()) & 0xC0) == 0x80) {
      Advance();
    }
    std::string shown;
    if (static_cast<unsigned char>(c) >= 0x20 && static_cast<unsigned char>(c) < 0x7F) {
      shown = std::string("'") + c + "'";
    } else {
      shown = "byte 0x" + std::string(1, "0123456789abcdef"[(c >> 4) & 0xF]) +
              std::string(1, "0123456789abcdef"[c & 0xF]);
    }
    diagnostics_.push_back(Diagnostic::Error(
        "MW001", "unexpected character " + shown, SpanFrom(line, col)));
  }
}

std::optional<std::string> Lexer::ScanBalancedBlock(SourceSpan* span) {
  if (!lookahead_.empty()) {
    throw std::logic_error("ScanBalancedBlock called with pending lookahead");
  }
  int line = line_, col = col_;
  std::size_t start = pos_;
  int depth = 1;
  while (!AtEnd()) {
    char c = Cur();
    if (c == '{') {
      ++depth;
    } else if (c == '}') {
      if (--depth == 0) {
        std::string body(src_.substr(start, pos_ - start));
        if (span != nullptr) *span = SpanFrom(line, col);
        Advance();
        return body;
      }
    }
    Advance();
  }
  diagnostics_.push_back(
      Diagnostic::Error("MW003", "unterminated block: missing '}'", SpanFrom(line, col)));
  return std::nullopt;
}

}  // namespace mw
