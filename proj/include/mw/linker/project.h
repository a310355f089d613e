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

#ifndef MW_LINKER_PROJECT_H_
#define MW_LINKER_PROJECT_H_

#include <string>
#include <vector>

#include "mw/core/source.h"
#include "mw/linker/linker.h"

namespace mw::link {

struct SourceFile {
  std::string path;
  std::string text;
};

enum class SourceLanguage { kClassDiagram, kClassviews, kActivity, kUnknown };

// By extension: .cd, .cv, .ad.
SourceLanguage LanguageOf(const std::string& path);

// Parses every file by extension and links whatever parsed. Parse
// diagnostics are merged into the result.
LinkedModel CheckSources(const std::vector<SourceFile>& files);

SourceMap MakeSourceMap(const std::vector<SourceFile>& files);

}  // namespace mw::link

#endif  // MW_LINKER_PROJECT_H_
