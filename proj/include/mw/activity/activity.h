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

#ifndef MW_ACTIVITY_ACTIVITY_H_
#define MW_ACTIVITY_ACTIVITY_H_

#include <string>
#include <string_view>

#include "mw/activity/ast.h"
#include "mw/core/result.h"

namespace mw::ad {

// Parses an `.ad` file. Syntax errors are MW020, duplicate action names
// MW301, `initial` used as a target or `final` as a source MW302.
ParseResult<ActivityDef> ParseActivity(std::string_view source, std::string file);

// Parses the interior of a `[ ]` guard. `||` binds loosest, then `&&`, then
// comparisons; parentheses group.
ParseResult<GuardExpr> ParseGuard(std::string_view text,
                                  std::string file = "<guard>");

std::string PrintActivity(const ActivityDef& activity);

// Inserts only the parentheses needed to re-parse to the same tree.
std::string PrintGuard(const GuardExpr& guard);
std::string PrintOperand(const Operand& operand);

}  // namespace mw::ad

#endif  // MW_ACTIVITY_ACTIVITY_H_
