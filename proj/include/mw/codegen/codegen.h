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

#ifndef MW_CODEGEN_CODEGEN_H_
#define MW_CODEGEN_CODEGEN_H_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mw/core/result.h"
#include "mw/linker/linker.h"
#include "mw/runtime/store.h"
#include "mw/runtime/validate.h"

namespace mw::gen {

enum class WidgetKind {
  kTextInput,
  kNumberInput,
  kDateInput,
  kEmailImage,
  kEnumSelect,
  kSubForm,
  kRefPicker,
  kStaticTextBlock,
  kCaptchaBox,
  kReadOnlyText,
};

const char* WidgetKindName(WidgetKind kind);

// Object values to fill into a page. Without it, display fields are empty
// placeholders bound by name.
struct PageData {
  const rt::ObjectStore* store = nullptr;
  rt::ObjectId object;
};

struct FieldFragment {
  std::string name;  // attribute or role name; empty for static text
  WidgetKind widget = WidgetKind::kReadOnlyText;
  rt::FieldConstraints constraints;
  std::string html;
};

// Renders one element in the mode recorded on it. `id_suffix` keeps element
// ids unique when a page shows the same attribute twice.
FieldFragment RenderField(const link::SymbolTable& table, const link::EffectiveElement& element,
                          const PageData* data = nullptr, std::string_view id_suffix = "");

// Renders `text` as an inline SVG drawn from glyph outlines, so the text
// itself never appears in the markup. `alt` becomes the aria-label when set.
std::string RenderTextImage(std::string_view text, const std::optional<std::string>& alt);

std::string RenderViewPage(const link::SymbolTable& table, const link::ViewSymbol& view,
                           const PageData* data = nullptr);

std::string EmitSchemaDescriptor(const link::SymbolTable& table);
std::string EmitFlowDescriptor(const std::vector<link::ResolvedActivity>& activities);

const std::string& Stylesheet();

std::string Sha256Hex(std::string_view bytes);

struct GeneratedSite {
  // Relative path -> content, for every file except the manifest.
  std::map<std::string, std::string> files;
  std::string manifest;
};

// Builds every output file in memory.
GeneratedSite BuildSite(const link::LinkedModel& model);

// Writes the site below `out_dir` and removes pages no view produces anymore.
// MW601 when the model has errors (nothing is written), MW602 on I/O failure.
Expected<GeneratedSite> GenerateSite(const link::LinkedModel& model,
                                     const std::filesystem::path& out_dir);

}  // namespace mw::gen

#endif  // MW_CODEGEN_CODEGEN_H_
