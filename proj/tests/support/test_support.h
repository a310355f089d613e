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

#ifndef MW_TESTS_SUPPORT_TEST_SUPPORT_H_
#define MW_TESTS_SUPPORT_TEST_SUPPORT_H_

#include <cstdint>
#include <filesystem>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mw/activity/ast.h"
#include "mw/classdiagram/ast.h"
#include "mw/classviews/ast.h"
#include "mw/linker/project.h"
#include "mw/runtime/store.h"

namespace mw::testing {

std::filesystem::path FixtureDir();
std::string ReadFile(const std::filesystem::path& path);
// Every .cd/.cv/.ad file directly inside `dir`, named by file name.
std::vector<link::SourceFile> LoadSources(const std::filesystem::path& dir);
link::LinkedModel LinkFixture(const std::string& name);

using Rng = std::mt19937_64;

cd::ClassDiagram RandomClassDiagram(Rng& rng);
cv::ClassviewsFile RandomClassviews(Rng& rng);
ad::ActivityDef RandomActivity(Rng& rng);
ad::GuardExpr RandomGuard(Rng& rng, int depth);

// A class diagram with three composition levels (Fleet -> Car -> Wheel, plus
// Fleet -> Depot) and associations across them, used by store property tests.
const char* StoreTestModel();

// Objects reachable from `root` through composition roles, found by walking
// the role fields of every object rather than the store's ownership index.
std::set<rt::ObjectId> CompositionClosure(const rt::ObjectStore& store, rt::ObjectId root);

struct StoreRunStats {
  int creates = 0;
  int deletes = 0;
  int links = 0;
  std::string failure;  // empty when every check held
};

// Runs one random sequence of at most `max_ops` store operations, keeping at
// most `max_objects` objects, and checks after every step that no reference
// dangles and that every delete removed exactly the composition closure.
StoreRunStats RunRandomStoreSequence(const link::SymbolTable& table, Rng& rng, int max_ops,
                                     std::size_t max_objects);

}  // namespace mw::testing

#endif  // MW_TESTS_SUPPORT_TEST_SUPPORT_H_
