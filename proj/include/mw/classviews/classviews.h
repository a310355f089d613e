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

#ifndef MW_CLASSVIEWS_CLASSVIEWS_H_
#define MW_CLASSVIEWS_CLASSVIEWS_H_

#include <string>
#include <string_view>

#include "mw/classviews/ast.h"
#include "mw/core/result.h"

namespace mw::cv {

// Parses a `.cv` file. Names are not resolved here. Syntax errors are MW020,
// empty view bodies MW021, duplicate named views MW201, duplicate rules in
// the attributes block MW206.
ParseResult<ClassviewsFile> ParseClassviews(std::string_view source,
                                            std::string file);

// Annotations go one per line above their target.
std::string PrintClassviews(const ClassviewsFile& file);

}  // namespace mw::cv

#endif  // MW_CLASSVIEWS_CLASSVIEWS_H_
