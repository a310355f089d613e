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

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "mw/cli/cli.h"
#include "mw/codegen/codegen.h"
#include "mw/core/text.h"
#include "mw/runtime/script.h"

namespace mw::cli {
namespace {

namespace fs = std::filesystem;

void PrintDiagnostics(const LoadedProject& project, const Diagnostics& diagnostics,
                      const OutputOptions& options, std::ostream& out) {
  RenderOptions render;
  render.color = options.color;
  out << RenderDiagnostics(diagnostics, link::MakeSourceMap(project.sources), render);
}

void PrintSummary(const Diagnostics& diagnostics, std::ostream& out) {
  std::size_t errors = CountErrors(diagnostics);
  std::size_t warnings = CountWarnings(diagnostics);
  out << errors << (errors == 1 ? " error, " : " errors, ") << warnings
      << (warnings == 1 ? " warning" : " warnings") << "\n";
}

void PrintError(const Diagnostic& d, std::ostream& err) {
  err << "error " << d.code << ": " << d.message << "\n";
}

// Links the project and reports errors. Returns nullopt after printing when
// the model cannot be used.
std::optional<link::LinkedModel> LinkOrReport(const LoadedProject& project,
                                              const OutputOptions& options, std::ostream& err) {
  link::LinkedModel model = link::CheckSources(project.sources);
  if (model.has_errors()) {
    PrintDiagnostics(project, model.diagnostics, options, err);
    PrintSummary(model.diagnostics, err);
    return std::nullopt;
  }
  return model;
}

std::optional<std::string> ChooseActivity(const LoadedProject& project,
                                          const link::LinkedModel& model,
                                          const std::optional<std::string>& requested,
                                          std::ostream& err) {
  if (requested) return requested;
  if (project.manifest.activity) return project.manifest.activity;
  if (model.activities.size() == 1) return model.activities.front().def.name;
  err << "error: name the activity to run; the project has " << model.activities.size()
      << " activities and no default\n";
  return std::nullopt;
}

std::string Line(std::istream& in, bool* eof) {
  std::string line;
  if (!std::getline(in, line)) {
    *eof = true;
    return "";
  }
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

void PrintViolations(const rt::TraceEvent& event, std::ostream& out) {
  for (const auto& v : event.data["violations"]) {
    out << "  rejected " << v["attribute"].get<std::string>() << " ("
        << v["rule"].get<std::string>() << "): " << v["message"].get<std::string>() << "\n";
  }
}

void ShowDisplay(const rt::FlowSession& session, const link::ViewSymbol& view,
                 std::ostream& out) {
  const ad::ActionDef* def = session.activity().FindActionDef(*session.current_action());
  const auto& call = std::get<ad::ViewCall>(def->content);
  const rt::Object* obj = nullptr;
  if (call.argument) {
    auto bound = session.bindings().find(*call.argument);
    if (bound != session.bindings().end()) obj = session.store().Find(bound->second);
  }
  for (const link::EffectiveElement& el : view.elements) {
    if (el.kind == link::EffectiveElement::Kind::kStaticText) {
      out << (el.HasAnnotation("Warning") ? "  ! " : "  ") << el.text << "\n";
      continue;
    }
    std::string shown;
    if (obj != nullptr) {
      auto field = obj->fields.find(el.name);
      if (field != obj->fields.end()) {
        if (el.HasAnnotation("AsImage")) {
          shown = "[shown as an image]";
        } else if (field->second.ref() || field->second.refs()) {
          std::vector<rt::ObjectId> ids;
          if (field->second.ref()) ids.push_back(*field->second.ref());
          if (field->second.refs()) ids = *field->second.refs();
          for (std::size_t i = 0; i < ids.size(); ++i) {
            shown += (i > 0 ? ", " : "") + session.store().Label(ids[i]);
          }
        } else {
          shown = field->second.ToDisplayString();
        }
      }
    }
    out << "  " << el.name << ": " << shown << "\n";
  }
}

rt::ObjectInput PromptPart(const link::SymbolTable& table, const link::ClassSymbol& cls,
                           const std::string& prefix, std::istream& in, std::ostream& out,
                           bool* eof) {
  rt::ObjectInput input;
  for (const auto& attr : cls.attributes) {
    if (attr.type.kind == link::TypeRef::Kind::kClass) continue;
    out << prefix << "." << attr.name << ": " << std::flush;
    input.fields[attr.name] = Line(in, eof);
    if (*eof) return input;
  }
  for (const auto& [role_name, role] : cls.roles) {
    if (!role.owns_target) continue;
    out << "number of " << prefix << "." << role_name << " " << role.cardinality.ToString()
        << ": " << std::flush;
    std::string count_text = Line(in, eof);
    if (*eof) return input;
    auto count = rt::ParseNumber(TrimWhitespace(count_text)).value_or(0);
    auto& parts = input.children[role_name];
    for (std::int64_t i = 0; i < count && !*eof; ++i) {
      parts.push_back(PromptPart(table, *table.FindClass(role.target_class),
                                 prefix + "." + role_name + "[" + std::to_string(i) + "]", in,
                                 out, eof));
    }
  }
  return input;
}

rt::ObjectInput PromptEditor(const rt::FlowSession& session, const link::ViewSymbol& view,
                             const link::SymbolTable& table, std::istream& in, std::ostream& out,
                             bool* eof) {
  rt::ObjectInput input;
  std::set<std::string> seen;
  for (const link::EffectiveElement& el : view.elements) {
    if (el.kind == link::EffectiveElement::Kind::kStaticText) {
      out << "  " << el.text << "\n";
      continue;
    }
    if (el.mode != cv::ViewModifier::kEditor || !seen.insert(el.name).second) continue;
    if (el.kind == link::EffectiveElement::Kind::kAttribute) {
      out << el.name << ": " << std::flush;
      input.fields[el.name] = Line(in, eof);
    } else if (el.role->owns_target) {
      out << "number of " << el.name << " " << el.role->cardinality.ToString() << ": "
          << std::flush;
      std::string count_text = Line(in, eof);
      auto count = rt::ParseNumber(TrimWhitespace(count_text)).value_or(0);
      auto& parts = input.children[el.name];
      for (std::int64_t i = 0; i < count && !*eof; ++i) {
        parts.push_back(PromptPart(table, *table.FindClass(el.role->target_class),
                                   el.name + "[" + std::to_string(i) + "]", in, out, eof));
      }
    } else if (el.role->kind == cd::RelationKind::kAssociation) {
      out << el.name << " (labels of " << el.role->target_class << ", comma separated): "
          << std::flush;
      std::string line = Line(in, eof);
      std::stringstream labels(line);
      std::string label;
      input.links[el.name];
      while (std::getline(labels, label, ',')) {
        std::string_view trimmed = TrimWhitespace(label);
        if (!trimmed.empty()) input.links[el.name].emplace_back(trimmed);
      }
    }
    if (*eof) return input;
  }
  if (view.HasAnnotation("Captcha")) {
    out << "captcha challenge: " << session.CaptchaChallenge() << "\ncaptcha: " << std::flush;
    input.fields["captcha"] = Line(in, eof);
  }
  return input;
}

int FinishRun(const rt::RunResult& result, const RunOptions& run, std::ostream& out,
              std::ostream& err, bool trace_to_stdout) {
  std::string trace = rt::SerializeTrace(result);
  if (run.trace_out) {
    std::ofstream file(*run.trace_out, std::ios::binary | std::ios::trunc);
    file << trace;
    file.close();
    if (!file) {
      err << "error MW602: cannot write " << run.trace_out->string() << "\n";
      return kExitUsage;
    }
  } else if (trace_to_stdout) {
    out << trace;
  }
  if (result.status == rt::SessionStatus::kCompleted) return kExitOk;
  if (result.error) PrintError(*result.error, err);
  return kExitFlowFailure;
}

int RunInteractive(const link::LinkedModel& model, const std::string& activity,
                   const RunOptions& run, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  auto started = rt::FlowSession::Start(model, activity, run.seed);
  if (!started) {
    PrintError(started.error(), err);
    return kExitUsage;
  }
  rt::FlowSession& session = *started;
  rt::RunResult result;
  result.activity = activity;
  bool eof = false;
  while (session.status() == rt::SessionStatus::kRunning) {
    std::string action = *session.current_action();
    const link::ViewSymbol* view = session.current_view();
    out << "== " << action;
    if (view != nullptr) out << " (" << view->QualifiedName() << ")";
    out << " ==\n";
    rt::ObjectInput input;
    if (view != nullptr && view->modifier == cv::ViewModifier::kEditor) {
      input = PromptEditor(session, *view, model.table, in, out, &eof);
      if (eof) {
        result.error = Diagnostic::Error("MW507", "input ended while the flow waits at action " +
                                                      action);
        break;
      }
    } else if (view != nullptr) {
      ShowDisplay(session, *view, out);
    }
    std::size_t before = session.trace().size();
    (void)session.Step(input);
    for (std::size_t i = before; i < session.trace().size(); ++i) {
      if (session.trace()[i].kind == rt::EventKind::kValidationRejected) {
        PrintViolations(session.trace()[i], out);
      }
    }
  }
  result.events = session.trace();
  result.status = result.error ? rt::SessionStatus::kFailed : session.status();
  if (!result.error) result.error = session.error();
  if (result.status == rt::SessionStatus::kCompleted) out << "flow completed\n";
  return FinishRun(result, run, out, err, /*trace_to_stdout=*/false);
}

}  // namespace

int CmdCheck(const LoadedProject& project, bool deny_warnings, const OutputOptions& options,
             std::ostream& out) {
  link::LinkedModel model = link::CheckSources(project.sources);
  PrintDiagnostics(project, model.diagnostics, options, out);
  PrintSummary(model.diagnostics, out);
  bool failed = model.has_errors() || (deny_warnings && CountWarnings(model.diagnostics) > 0);
  return failed ? kExitModelErrors : kExitOk;
}

int CmdGenerate(const LoadedProject& project, const std::optional<fs::path>& out_dir,
                const OutputOptions& options, std::ostream& out, std::ostream& err) {
  auto model = LinkOrReport(project, options, err);
  if (!model) return kExitModelErrors;
  fs::path target = out_dir.value_or(project.manifest.out_dir);
  auto site = gen::GenerateSite(*model, target);
  if (!site) {
    PrintError(site.error(), err);
    return site.error().code == "MW601" ? kExitModelErrors : kExitUsage;
  }
  out << site->manifest;
  return kExitOk;
}

int CmdRun(const LoadedProject& project, const RunOptions& run, const OutputOptions& options,
           std::istream& in, std::ostream& out, std::ostream& err) {
  if (run.interactive == run.script.has_value()) {
    err << "error: run needs exactly one of --script or --interactive\n";
    return kExitUsage;
  }
  auto model = LinkOrReport(project, options, err);
  if (!model) return kExitModelErrors;
  auto activity = ChooseActivity(project, *model, run.activity, err);
  if (!activity) return kExitUsage;
  if (model->FindActivity(*activity) == nullptr) {
    err << "error MW502: unknown activity '" << *activity << "'\n";
    return kExitUsage;
  }
  if (run.interactive) return RunInteractive(*model, *activity, run, in, out, err);

  std::ifstream file(*run.script, std::ios::binary);
  if (!file) {
    err << "error: cannot read script " << run.script->string() << "\n";
    return kExitUsage;
  }
  std::stringstream text;
  text << file.rdbuf();
  auto script = rt::ParseScript(text.str());
  if (!script) {
    err << run.script->string() << ": ";
    PrintError(script.error(), err);
    return kExitUsage;
  }
  auto result = rt::RunScript(*model, *activity, *script, run.seed);
  if (!result) {
    PrintError(result.error(), err);
    return kExitUsage;
  }
  return FinishRun(*result, run, out, err, /*trace_to_stdout=*/true);
}

int Main(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
         std::ostream& err, const OutputOptions& options) {
  CLI::App app{"MontiWeb model checker, generator and flow runner", "mwc"};
  app.require_subcommand(1);
  std::string project_path = ".";
  app.add_option("-p,--project", project_path,
                 "Project directory or montiweb.json manifest (default: current directory)");

  bool deny_warnings = false;
  CLI::App* check = app.add_subcommand("check", "Parse and link the project, print diagnostics");
  check->add_flag("--deny-warnings", deny_warnings, "Treat warnings as errors");

  std::string gen_out;
  CLI::App* generate = app.add_subcommand("generate", "Generate the static site");
  generate->add_option("--out", gen_out, "Output directory (default: manifest 'out')");

  RunOptions run;
  std::string activity, script, trace_out;
  CLI::App* run_cmd = app.add_subcommand("run", "Execute an activity");
  run_cmd->add_option("activity", activity, "Activity to run (default: manifest or the only one)");
  auto* script_opt = run_cmd->add_option("--script", script, "JSON script of action inputs");
  auto* trace_opt = run_cmd->add_option("--trace-out", trace_out, "Write the trace to this file");
  auto* interactive_opt =
      run_cmd->add_flag("--interactive", run.interactive, "Prompt for input on the terminal");
  run_cmd->add_option("--seed", run.seed, "Captcha session seed (default 0)");
  script_opt->excludes(interactive_opt);
  (void)trace_opt;

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  auto project = LoadProject(project_path);
  if (!project) {
    PrintError(project.error(), err);
    return kExitUsage;
  }
  if (*check) return CmdCheck(*project, deny_warnings, options, out);
  if (*generate) {
    std::optional<fs::path> target;
    if (!gen_out.empty()) target = gen_out;
    return CmdGenerate(*project, target, options, out, err);
  }
  if (!activity.empty()) run.activity = activity;
  if (!script.empty()) run.script = script;
  if (!trace_out.empty()) run.trace_out = trace_out;
  return CmdRun(*project, run, options, in, out, err);
}

}  // namespace mw::cli
