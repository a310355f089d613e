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

#include <fnmatch.h>

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "json.hpp"
#include "mw/cli/cli.h"

namespace mw::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

Diagnostic ConfigError(std::string message) {
  return Diagnostic::Error("MW701", std::move(message));
}

std::optional<std::string> ReadText(const fs::path& path) {
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) return std::nullopt;
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return buffer.str();
}

// Every regular file below `root`, as sorted generic relative paths. Hidden
// directories are skipped.
std::vector<std::string> ListFiles(const fs::path& root) {
  std::vector<std::string> out;
  std::error_code ec;
  fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
  for (; !ec && it != fs::recursive_directory_iterator(); it.increment(ec)) {
    std::string name = it->path().filename().string();
    if (it->is_directory(ec) && !name.empty() && name.front() == '.') {
      it.disable_recursion_pending();
      continue;
    }
    if (it->is_regular_file(ec)) {
      out.push_back(it->path().lexically_relative(root).generic_string());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool IsPattern(const std::string& entry) {
  return entry.find_first_of("*?[") != std::string::npos;
}

Expected<std::vector<std::string>> StringList(const json& doc, const char* key) {
  std::vector<std::string> out;
  auto it = doc.find(key);
  if (it == doc.end()) return out;
  if (!it->is_array()) return ConfigError(std::string("manifest key '") + key + "' must be a list");
  for (const json& entry : *it) {
    if (!entry.is_string()) {
      return ConfigError(std::string("manifest key '") + key + "' must list strings");
    }
    out.push_back(entry.get<std::string>());
  }
  return out;
}

Expected<ProjectManifest> ReadManifest(const fs::path& file) {
  std::optional<std::string> text = ReadText(file);
  if (!text) return ConfigError("cannot read manifest " + file.string());
  json doc = json::parse(*text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) {
    return ConfigError("manifest " + file.string() + " is not a JSON object");
  }
  static const std::set<std::string> kKeys = {"name",       "classdiagrams", "classviews",
                                              "activities", "out",           "activity"};
  for (const auto& [key, value] : doc.items()) {
    if (kKeys.count(key) == 0) {
      return ConfigError("manifest " + file.string() + " has unknown key '" + key + "'");
    }
  }
  ProjectManifest m;
  m.root = file.parent_path().empty() ? fs::path(".") : file.parent_path();
  m.name = m.root.filename().string();
  m.out_dir = "out";
  for (const char* key : {"name", "out", "activity"}) {
    auto it = doc.find(key);
    if (it == doc.end()) continue;
    if (!it->is_string()) return ConfigError(std::string("manifest key '") + key + "' must be a string");
  }
  if (doc.contains("name")) m.name = doc["name"].get<std::string>();
  if (doc.contains("out")) m.out_dir = doc["out"].get<std::string>();
  if (doc.contains("activity")) m.activity = doc["activity"].get<std::string>();
  auto cds = StringList(doc, "classdiagrams");
  if (!cds) return cds.error();
  auto cvs = StringList(doc, "classviews");
  if (!cvs) return cvs.error();
  auto ads = StringList(doc, "activities");
  if (!ads) return ads.error();
  // A missing list falls back to every file with the language's extension.
  m.classdiagrams = doc.contains("classdiagrams") ? *cds : std::vector<std::string>{"*.cd"};
  m.classviews = doc.contains("classviews") ? *cvs : std::vector<std::string>{"*.cv"};
  m.activities = doc.contains("activities") ? *ads : std::vector<std::string>{"*.ad"};
  return m;
}

Expected<std::vector<std::string>> Resolve(const ProjectManifest& m,
                                           const std::vector<std::string>& entries,
                                           link::SourceLanguage language,
                                           const std::vector<std::string>& all_files) {
  std::set<std::string> out;
  for (const std::string& entry : entries) {
    if (IsPattern(entry)) {
      for (const std::string& f : all_files) {
        if (link::LanguageOf(f) == language && fnmatch(entry.c_str(), f.c_str(), 0) == 0) {
          out.insert(f);
        }
      }
      continue;
    }
    fs::path p = fs::path(entry).lexically_normal();
    std::error_code ec;
    if (!fs::is_regular_file(m.root / p, ec)) {
      return ConfigError("listed source " + (m.root / p).string() + " does not exist");
    }
    if (link::LanguageOf(p.generic_string()) != language) {
      return ConfigError("listed source " + (m.root / p).string() +
                         " has the wrong extension for its list");
    }
    out.insert(p.generic_string());
  }
  return std::vector<std::string>(out.begin(), out.end());
}

}  // namespace

Expected<LoadedProject> LoadProject(const fs::path& path) {
  std::error_code ec;
  if (!fs::exists(path, ec)) return ConfigError("project path " + path.string() + " does not exist");
  ProjectManifest manifest;
  if (fs::is_directory(path, ec)) {
    fs::path file = path / kManifestName;
    if (fs::exists(file, ec)) {
      auto m = ReadManifest(file);
      if (!m) return m.error();
      manifest = *m;
    } else {
      manifest.root = path;
      manifest.name = fs::absolute(path).lexically_normal().filename().string();
      manifest.out_dir = "out";
      manifest.classdiagrams = {"*.cd"};
      manifest.classviews = {"*.cv"};
      manifest.activities = {"*.ad"};
    }
  } else {
    auto m = ReadManifest(path);
    if (!m) return m.error();
    manifest = *m;
  }

  std::vector<std::string> all_files = ListFiles(manifest.root);
  LoadedProject project;
  std::set<std::string> seen;
  bool any_cd = false;
  const std::pair<const std::vector<std::string>*, link::SourceLanguage> lists[] = {
      {&manifest.classdiagrams, link::SourceLanguage::kClassDiagram},
      {&manifest.classviews, link::SourceLanguage::kClassviews},
      {&manifest.activities, link::SourceLanguage::kActivity},
  };
  for (const auto& [list, language] : lists) {
    auto files = Resolve(manifest, *list, language, all_files);
    if (!files) return files.error();
    for (const std::string& rel : *files) {
      if (!seen.insert(rel).second) continue;
      std::optional<std::string> text = ReadText(manifest.root / rel);
      if (!text) return ConfigError("cannot read " + (manifest.root / rel).string());
      if (language == link::SourceLanguage::kClassDiagram) any_cd = true;
      project.sources.push_back({rel, std::move(*text)});
    }
  }
  if (!any_cd) {
    return ConfigError("no class diagram (.cd) files found in " + manifest.root.string());
  }
  std::sort(project.sources.begin(), project.sources.end(),
            [](const link::SourceFile& a, const link::SourceFile& b) { return a.path < b.path; });
  if (manifest.out_dir.is_relative()) manifest.out_dir = manifest.root / manifest.out_dir;
  project.manifest = std::move(manifest);
  return project;
}

}  // namespace mw::cli
