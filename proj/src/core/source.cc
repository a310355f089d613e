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

#include "mw/core/source.h"

#include <algorithm>

namespace mw {

SourceSpan SourceSpan::Cover(const SourceSpan& a, const SourceSpan& b) {
  SourceSpan out = a;
  if (std::tie(b.start_line, b.start_col) < std::tie(a.start_line, a.start_col)) {
    out.start_line = b.start_line;
    out.start_col = b.start_col;
  }
  if (std::tie(b.end_line, b.end_col) > std::tie(a.end_line, a.end_col)) {
    out.end_line = b.end_line;
    out.end_col = b.end_col;
  }
  return out;
}

std::string SourceSpan::ToString() const {
  return file + ":" + std::to_string(start_line) + ":" + std::to_string(start_col);
}

std::string QualifiedName::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) out += '.';
    out += segments[i];
  }
  return out;
}

bool IsIdentifier(std::string_view text) {
  if (text.empty()) return false;
  auto alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  if (!alpha(text[0])) return false;
  return std::all_of(text.begin() + 1, text.end(), [&](char c) {
    return alpha(c) || (c >= '0' && c <= '9');
  });
}

void SourceMap::Add(std::string file, std::string text) {
  files_[std::move(file)] = std::move(text);
}

const std::string* SourceMap::Text(const std::string& file) const {
  auto it = files_.find(file);
  return it == files_.end() ? nullptr : &it->second;
}

std::string_view SourceMap::Line(const std::string& file, int line) const {
  const std::string* text = Text(file);
  if (text == nullptr || line < 1) return {};
  std::string_view rest = *text;
  for (int i = 1; i < line; ++i) {
    auto nl = rest.find('\n');
    if (nl == std::string_view::npos) return {};
    rest.remove_prefix(nl + 1);
  }
  auto nl = rest.find('\n');
  std::string_view out = rest.substr(0, nl);
  if (!out.empty() && out.back() == '\r') out.remove_suffix(1);
  return out;
}

}  // namespace mw
