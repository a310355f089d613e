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

#ifndef MW_LINKER_LINKER_H_
#define MW_LINKER_LINKER_H_

#include <string>
#include <vector>

#include "mw/activity/ast.h"
#include "mw/classdiagram/ast.h"
#include "mw/classviews/ast.h"
#include "mw/core/diagnostic.h"
#include "mw/core/result.h"
#include "mw/linker/symbols.h"

namespace mw::link {

struct LinkedModel {
  SymbolTable table;
  std::vector<ResolvedActivity> activities;
  Diagnostics diagnostics;

  bool has_errors() const { return HasErrors(diagnostics); }
  const ResolvedActivity* FindActivity(std::string_view name) const;
};

struct SymbolTableResult {
  SymbolTable table;  // best effort when diagnostics hold errors
  Diagnostics diagnostics;
};

// Merges all class diagrams. Reads nothing but class-diagram ASTs.
// Errors: MW104 duplicate class/enum across diagrams, MW401 unknown
// attribute type, MW103 undirected composition, MW107 role clash.
SymbolTableResult BuildSymbolTable(std::vector<cd::ClassDiagram> diagrams);

// Binds view elements, expands includes and checks annotation use. Adds the
// views to `table` and returns the diagnostics.
Diagnostics ResolveClassviews(std::vector<cv::ClassviewsFile> files,
                              SymbolTable& table);

// Binds view calls, parameters, endpoints and guards.
LinkedModel ResolveActivities(std::vector<ad::ActivityDef> activities,
                              SymbolTable table);

struct ProjectAsts {
  std::vector<cd::ClassDiagram> class_diagrams;
  std::vector<cv::ClassviewsFile> classviews;
  std::vector<ad::ActivityDef> activities;
};

// Runs the three stages in dependency order (class diagrams, classviews,
// activities), collecting every diagnostic. Inputs are sorted by file path
// first, so arrival order never matters.
LinkedModel CheckProject(ProjectAsts asts);

// Canonical JSON of the data portion (classes, enums, relations) of a
// table: sorted keys, two-space indentation, LF endings.
std::string SerializeDataSymbols(const SymbolTable& table);

}  // namespace mw::link

#endif  // MW_LINKER_LINKER_H_
