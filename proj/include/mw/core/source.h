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

#ifndef MW_CORE_SOURCE_H_
#define MW_CORE_SOURCE_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace mw {

// 1-based positions. The end position is exclusive.
struct SourceSpan {
  std::string file;
  int start_line = 1;
  int start_col = 1;
  int end_line = 1;
  int end_col = 1;

  bool operator==(const SourceSpan&) const = default;
  auto operator<=>(const SourceSpan&) const = default;

  // Smallest span covering both.
  static SourceSpan Cover(const SourceSpan& a, const SourceSpan& b);
  std::string ToString() const;  // file:line:col
};

// Span attached to an AST node. Never takes part in structural equality, so
// the defaulted operator== of AST nodes compares structure only.
struct NodeSpan {
  SourceSpan value;

  NodeSpan() = default;
  NodeSpan(SourceSpan s) : value(std::move(s)) {}  // NOLINT: implicit by intent
  bool operator==(const NodeSpan&) const { return true; }
};

// Dotted name such as `Person.registration`.
struct QualifiedName {
  std::vector<std::string> segments;

  bool operator==(const QualifiedName&) const = default;
  std::string ToString() const;
};

bool IsIdentifier(std::string_view text);

// file path -> full source text, used to quote lines in diagnostics.
class SourceMap {
 public:
  void Add(std::string file, std::string text);
  // Returns the 1-based line, without its terminator, or empty if unknown.
  std::string_view Line(const std::string& file, int line) const;
  const std::string* Text(const std::string& file) const;

 private:
  std::map<std::string, std::string> files_;
};

}  // namespace mw

#endif  // MW_CORE_SOURCE_H_
