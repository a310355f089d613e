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

#ifndef MW_CLI_CLI_H_
#define MW_CLI_CLI_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mw/core/result.h"
#include "mw/linker/project.h"

namespace mw::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitModelErrors = 1,
  kExitUsage = 2,
  kExitFlowFailure = 3,
};

inline constexpr const char* kManifestName = "montiweb.json";

struct ProjectManifest {
  std::string name;
  std::filesystem::path root;  // directory the relative paths start from
  std::vector<std::string> classdiagrams;
  std::vector<std::string> classviews;
  std::vector<std::string> activities;
  std::filesystem::path out_dir;
  std::optional<std::string> activity;
};

struct LoadedProject {
  ProjectManifest manifest;
  // Paths relative to manifest.root, sorted.
  std::vector<link::SourceFile> sources;
};

// Loads a project from a manifest file, or from a directory holding either a
// manifest or bare .cd/.cv/.ad files. Manifest entries may be file paths or
// glob patterns. MW701 for every problem: unreadable or malformed manifest,
// a listed file that is missing, or no class diagram at all.
Expected<LoadedProject> LoadProject(const std::filesystem::path& path);

struct OutputOptions {
  bool color = false;
};

int CmdCheck(const LoadedProject& project, bool deny_warnings, const OutputOptions& options,
             std::ostream& out);

int CmdGenerate(const LoadedProject& project, const std::optional<std::filesystem::path>& out_dir,
                const OutputOptions& options, std::ostream& out, std::ostream& err);

struct RunOptions {
  std::optional<std::string> activity;
  std::optional<std::filesystem::path> script;
  std::optional<std::filesystem::path> trace_out;
  bool interactive = false;
  std::uint64_t seed = 0;
};

int CmdRun(const LoadedProject& project, const RunOptions& run, const OutputOptions& options,
           std::istream& in, std::ostream& out, std::ostream& err);

// Full command line handling for the mwc tool.
int Main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err, const OutputOptions& options);

}  // namespace mw::cli

#endif  // MW_CLI_CLI_H_
