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

#include <openssl/evp.h>

#include <fstream>
#include <set>
#include <system_error>

#include "mw/codegen/codegen.h"

namespace mw::gen {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json EndpointJson(const ad::Endpoint& e) {
  if (e.is_initial()) return {{"node", "initial"}, {"param", nullptr}};
  if (e.is_final()) return {{"node", "final"}, {"param", nullptr}};
  const ad::ActionNode* n = e.action();
  return {{"node", n->action}, {"param", n->param ? json(*n->param) : json(nullptr)}};
}

json ParamsJson(const std::vector<ad::ParamDecl>& params) {
  json out = json::array();
  for (const auto& p : params) out.push_back({{"name", p.name}, {"class", p.type_name}});
  return out;
}

struct WriteError {
  std::string message;
};

void WriteFile(const fs::path& path, const std::string& content) {
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  if (ec) throw WriteError{"cannot create " + path.parent_path().string() + ": " + ec.message()};
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw WriteError{"cannot write " + path.string()};
  out << content;
  out.close();
  if (!out) throw WriteError{"cannot write " + path.string()};
}

}  // namespace

std::string EmitSchemaDescriptor(const link::SymbolTable& table) {
  return link::SerializeDataSymbols(table);
}

std::string EmitFlowDescriptor(const std::vector<link::ResolvedActivity>& activities) {
  json list = json::array();
  for (const link::ResolvedActivity& a : activities) {
    json actions = json::array();
    for (std::size_t i = 0; i < a.def.actions.size(); ++i) {
      const ad::ActionDef& def = a.def.actions[i];
      const auto* call = std::get_if<ad::ViewCall>(&def.content);
      json entry = {{"name", def.name},
                    {"inputs", ParamsJson(def.inputs)},
                    {"outputs", ParamsJson(def.outputs)},
                    {"view", call != nullptr ? json(call->QualifiedView()) : json(nullptr)},
                    {"code", call == nullptr}};
      if (call != nullptr) {
        entry["assign_to"] = call->assign_to ? json(*call->assign_to) : json(nullptr);
        entry["argument"] = call->argument ? json(*call->argument) : json(nullptr);
      }
      actions.push_back(std::move(entry));
    }
    json transitions = json::array();
    for (const link::ResolvedTransition& t : a.transitions) {
      json sources = json::array();
      for (const auto& s : t.sources) sources.push_back(EndpointJson(s));
      json alternatives = json::array();
      for (const auto& alt : t.alternatives) {
        json target = EndpointJson(alt.target);
        alternatives.push_back({{"guard", alt.guard ? json(alt.guard->text) : json(nullptr)},
                                {"target", target["node"]},
                                {"param", target["param"]}});
      }
      transitions.push_back({{"sources", sources}, {"alternatives", alternatives}});
    }
    list.push_back({{"name", a.def.name}, {"actions", actions}, {"transitions", transitions}});
  }
  return json{{"activities", list}}.dump(2) + "\n";
}

std::string Sha256Hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr);
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xF];
  }
  return out;
}

GeneratedSite BuildSite(const link::LinkedModel& model) {
  GeneratedSite site;
  for (const auto& [key, view] : model.table.views) {
    if (view.modifier == cv::ViewModifier::kField) continue;
    site.files["pages/" + key.first + "." + key.second + ".html"] =
        RenderViewPage(model.table, view);
  }
  site.files["schema.json"] = EmitSchemaDescriptor(model.table);
  site.files["flow.json"] = EmitFlowDescriptor(model.activities);
  site.files["static/mw.css"] = Stylesheet();
  json files = json::array();
  for (const auto& [path, content] : site.files) {
    files.push_back({{"path", path}, {"sha256", Sha256Hex(content)}, {"bytes", content.size()}});
  }
  site.manifest = json{{"files", files}}.dump(2) + "\n";
  return site;
}

Expected<GeneratedSite> GenerateSite(const link::LinkedModel& model, const fs::path& out_dir) {
  if (model.has_errors()) {
    return Diagnostic::Error("MW601", "the model has errors; nothing was generated");
  }
  GeneratedSite site = BuildSite(model);
  try {
    for (const auto& [path, content] : site.files) WriteFile(out_dir / path, content);
    WriteFile(out_dir / "manifest.json", site.manifest);
    std::error_code ec;
    fs::path pages = out_dir / "pages";
    std::vector<fs::path> stale;
    for (const auto& entry : fs::directory_iterator(pages, ec)) {
      std::string rel = "pages/" + entry.path().filename().string();
      if (entry.path().extension() == ".html" && site.files.count(rel) == 0) {
        stale.push_back(entry.path());
      }
    }
    if (ec) throw WriteError{"cannot list " + pages.string() + ": " + ec.message()};
    for (const fs::path& p : stale) {
      if (!fs::remove(p, ec) || ec) throw WriteError{"cannot remove " + p.string()};
    }
  } catch (const WriteError& e) {
    return Diagnostic::Error("MW602", e.message);
  } catch (const fs::filesystem_error& e) {
    return Diagnostic::Error("MW602", e.what());
  }
  return site;
}

}  // namespace mw::gen
