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

#include "mw/core/diagnostic.h"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace mw {

Diagnostic Diagnostic::Error(std::string code, std::string message,
                             SourceSpan span) {
  return Diagnostic{Severity::kError, std::move(code), std::move(message),
                    std::move(span), {}};
}

Diagnostic Diagnostic::Warning(std::string code, std::string message,
                               SourceSpan span) {
  return Diagnostic{Severity::kWarning, std::move(code), std::move(message),
                    std::move(span), {}};
}

Diagnostic& Diagnostic::AddRelated(SourceSpan span, std::string note) {
  related.push_back({std::move(span), std::move(note)});
  return *this;
}

bool HasErrors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

int CountErrors(const Diagnostics& diags) {
  return static_cast<int>(std::count_if(
      diags.begin(), diags.end(), [](const Diagnostic& d) { return d.is_error(); }));
}

int CountWarnings(const Diagnostics& diags) {
  return static_cast<int>(diags.size()) - CountErrors(diags);
}

namespace {

auto SortKey(const Diagnostic& d) {
  return std::tie(d.span.file, d.span.start_line, d.span.start_col, d.code,
                  d.message, d.severity, d.span.end_line, d.span.end_col);
}

bool RelatedLess(const std::vector<Diagnostic::Related>& a,
                 const std::vector<Diagnostic::Related>& b) {
  return std::lexicographical_compare(
      a.begin(), a.end(), b.begin(), b.end(),
      [](const Diagnostic::Related& x, const Diagnostic::Related& y) {
        return std::tie(x.span, x.note) < std::tie(y.span, y.note);
      });
}

constexpr const char* kRed = "\x1b[1;31m";
constexpr const char* kYellow = "\x1b[1;33m";
constexpr const char* kBlue = "\x1b[1;34m";
constexpr const char* kReset = "\x1b[0m";

void AppendQuote(std::ostringstream& out, const SourceSpan& span,
                 const SourceMap& sources, const RenderOptions& options) {
  std::string_view line = sources.Line(span.file, span.start_line);
  if (line.empty()) return;
  std::string number = std::to_string(span.start_line);
  std::string gutter(number.size(), ' ');
  out << ' ' << number << " | " << line << '\n';
  int width = 1;
  if (span.end_line == span.start_line && span.end_col > span.start_col) {
    width = span.end_col - span.start_col;
  }
  out << ' ' << gutter << " | " << std::string(span.start_col - 1, ' ');
  if (options.color) out << kRed;
  out << std::string(width, '^');
  if (options.color) out << kReset;
  out << '\n';
}

}  // namespace

bool DiagnosticLess(const Diagnostic& a, const Diagnostic& b) {
  if (SortKey(a) != SortKey(b)) return SortKey(a) < SortKey(b);
  return RelatedLess(a.related, b.related);
}

void SortDiagnostics(Diagnostics& diags) {
  std::stable_sort(diags.begin(), diags.end(), DiagnosticLess);
}

std::string RenderDiagnostics(Diagnostics diags, const SourceMap& sources,
                              RenderOptions options) {
  SortDiagnostics(diags);
  std::ostringstream out;
  for (const Diagnostic& d : diags) {
    const bool error = d.is_error();
    if (!d.span.file.empty()) out << d.span.ToString() << ": ";
    if (options.color) out << (error ? kRed : kYellow);
    out << (error ? "error" : "warning") << ' ' << d.code;
    if (options.color) out << kReset;
    out << ": " << d.message << '\n';
    AppendQuote(out, d.span, sources, options);
    for (const auto& rel : d.related) {
      out << "  " << rel.span.ToString() << ": ";
      if (options.color) out << kBlue;
      out << "note";
      if (options.color) out << kReset;
      out << ": " << rel.note << '\n';
    }
  }
  return out.str();
}

}  // namespace mw
