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

#include "mw/linker/project.h"

#include <algorithm>
#include <filesystem>

#include "mw/activity/activity.h"
#include "mw/classdiagram/classdiagram.h"
#include "mw/classviews/classviews.h"

namespace mw::link {

SourceLanguage LanguageOf(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  if (ext == ".cd") return SourceLanguage::kClassDiagram;
  if (ext == ".cv") return SourceLanguage::kClassviews;
  if (ext == ".ad") return SourceLanguage::kActivity;
  return SourceLanguage::kUnknown;
}

LinkedModel CheckSources(const std::vector<SourceFile>& files) {
  std::vector<const SourceFile*> sorted;
  for (const auto& f : files) sorted.push_back(&f);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const SourceFile* a, const SourceFile* b) { return a->path < b->path; });

  ProjectAsts asts;
  Diagnostics parse_diags;
  auto take = [&](auto&& result, auto& sink) {
    parse_diags.insert(parse_diags.end(), result.diagnostics.begin(),
                       result.diagnostics.end());
    if (result.ok()) sink.push_back(std::move(*result.value));
  };
  for (const SourceFile* f : sorted) {
    switch (LanguageOf(f->path)) {
      case SourceLanguage::kClassDiagram:
        take(cd::ParseClassDiagram(f->text, f->path), asts.class_diagrams);
        break;
      case SourceLanguage::kClassviews:
        take(cv::ParseClassviews(f->text, f->path), asts.classviews);
        break;
      case SourceLanguage::kActivity:
        take(ad::ParseActivity(f->text, f->path), asts.activities);
        break;
      case SourceLanguage::kUnknown:
        break;
    }
  }
  LinkedModel model = CheckProject(std::move(asts));
  model.diagnostics.insert(model.diagnostics.end(), parse_diags.begin(), parse_diags.end());
  SortDiagnostics(model.diagnostics);
  return model;
}

SourceMap MakeSourceMap(const std::vector<SourceFile>& files) {
  SourceMap map;
  for (const auto& f : files) map.Add(f.path, f.text);
  return map;
}

}  // namespace mw::link
