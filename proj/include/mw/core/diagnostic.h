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

#ifndef MW_CORE_DIAGNOSTIC_H_
#define MW_CORE_DIAGNOSTIC_H_

#include <string>
#include <utility>
#include <vector>

#include "mw/core/source.h"

namespace mw {

enum class Severity { kError, kWarning };

// Codes are grouped by stage:
//   MW0xx lexical/syntactic     MW1xx class diagram     MW2xx classviews
//   MW3xx activity              MW4xx cross-model       MW5xx runtime
//   MW6xx generation
struct Diagnostic {
  struct Related {
    SourceSpan span;
    std::string note;
    bool operator==(const Related&) const = default;
  };

  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  SourceSpan span;
  std::vector<Related> related;

  bool operator==(const Diagnostic&) const = default;

  static Diagnostic Error(std::string code, std::string message,
                          SourceSpan span = {});
  static Diagnostic Warning(std::string code, std::string message,
                            SourceSpan span = {});
  Diagnostic& AddRelated(SourceSpan span, std::string note);

  bool is_error() const { return severity == Severity::kError; }
};

using Diagnostics = std::vector<Diagnostic>;

bool HasErrors(const Diagnostics& diags);
int CountErrors(const Diagnostics& diags);
int CountWarnings(const Diagnostics& diags);

// Total order: file, start line, start column, code, then the remaining
// fields, so sorting is deterministic for any input order.
bool DiagnosticLess(const Diagnostic& a, const Diagnostic& b);
void SortDiagnostics(Diagnostics& diags);

struct RenderOptions {
  bool color = false;
};

// One block per diagnostic, sorted, each quoting its source line with a caret
// marker when the line is available in `sources`.
std::string RenderDiagnostics(Diagnostics diags, const SourceMap& sources,
                              RenderOptions options = {});

}  // namespace mw

#endif  // MW_CORE_DIAGNOSTIC_H_
