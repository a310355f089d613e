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

// Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero when any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mw/activity/activity.h"
#include "mw/classdiagram/classdiagram.h"
#include "mw/classviews/classviews.h"
#include "mw/cli/cli.h"
#include "mw/codegen/codegen.h"
#include "mw/linker/project.h"
#include "mw/runtime/flow.h"
#include "mw/runtime/script.h"
#include "mw/runtime/validate.h"
#include "test_support.h"

namespace mw::acceptance {
namespace {

namespace fs = std::filesystem;
using testing::FixtureDir;
using testing::ReadFile;

// Collects the first failed expectation of a criterion.
class Check {
 public:
  bool Expect(bool condition, const std::string& what) {
    if (!condition && failure_.empty()) failure_ = what;
    return condition;
  }
  bool ok() const { return failure_.empty(); }
  const std::string& failure() const { return failure_; }

 private:
  std::string failure_;
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun Cli(const std::vector<std::string>& args) {
  std::istringstream in;
  std::ostringstream out, err;
  int code = cli::Main(args, in, out, err, cli::OutputOptions{});
  return {code, out.str(), err.str()};
}

std::string Fixture(const char* name) { return (FixtureDir() / name).string(); }
std::string Script(const char* name) { return (FixtureDir() / "scripts" / name).string(); }

double SecondsSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::vector<std::string> VisitedActions(const nlohmann::json& trace) {
  std::vector<std::string> out;
  for (const auto& e : trace.at("events")) {
    if (e.at("kind") == "EnterAction") out.push_back(e.at("action"));
  }
  return out;
}

// 1. The three bundled model files parse and have the documented shapes.
void FixtureParsing(Check& c) {
  auto start = std::chrono::steady_clock::now();
  auto cd = cd::ParseClassDiagram(ReadFile(FixtureDir() / "verbatim/carsharing.cd"), "carsharing.cd");
  auto cv = cv::ParseClassviews(ReadFile(FixtureDir() / "verbatim/person.cv"), "person.cv");
  auto ad = ad::ParseActivity(ReadFile(FixtureDir() / "verbatim/user_registration.ad"),
                              "user_registration.ad");
  double elapsed = SecondsSince(start);
  if (!c.Expect(cd.ok() && cv.ok() && ad.ok(), "a fixture failed to parse")) return;

  c.Expect(cd->classes.size() == 2 && cd->classes[0].attributes.size() == 3 &&
               cd->classes[1].attributes.size() == 3,
           "class diagram: expected 2 classes with 3 attributes each");
  c.Expect(cd->enums.size() == 1 && cd->enums[0].literals.size() == 3,
           "class diagram: expected 1 enum with 3 literals");
  c.Expect(cd->relations.size() == 1 &&
               cd->relations[0].kind == cd::RelationKind::kComposition &&
               cd->relations[0].source_role == "keeper" &&
               cd->relations[0].target_role == "cars" &&
               cd->relations[0].target_cardinality == cd::Cardinality::Many() &&
               cd->relations[0].directed,
           "class diagram: expected directed composition keeper/cars [0..*]");

  c.Expect(cv->class_name == "Person" && cv->attributes_block &&
               cv->attributes_block->entries.size() == 2,
           "classviews: expected Person with 2 attribute rules");
  c.Expect(cv->views.size() == 4, "classviews: expected 4 views");
  if (cv->views.size() == 4) {
    const auto& v = cv->views;
    c.Expect(v[0].name == "protectedMail" && v[0].modifier == cv::ViewModifier::kDisplay &&
                 v[0].elements.size() == 3,
             "classviews: protectedMail shape");
    const auto* email = std::get_if<cv::AttributeRef>(&v[0].elements[1]);
    c.Expect(email && email->annotations.size() == 1 && email->annotations[0].name == "AsImage",
             "classviews: email carries @AsImage");
    c.Expect(v[1].name == "welcome" && v[1].elements.size() == 3 &&
                 std::holds_alternative<cv::StaticText>(v[1].elements[0]) &&
                 std::holds_alternative<cv::Include>(v[1].elements[1]),
             "classviews: welcome shape");
    c.Expect(v[2].name == "registration" && v[2].modifier == cv::ViewModifier::kEditor &&
                 v[2].elements.size() == 4 && v[2].annotations.size() == 1 &&
                 v[2].annotations[0].name == "Captcha",
             "classviews: registration shape");
    const auto* warning = v[3].elements.size() == 1
                              ? std::get_if<cv::StaticText>(&v[3].elements[0])
                              : nullptr;
    c.Expect(v[3].name == "error" && warning && warning->annotations.size() == 1 &&
                 warning->annotations[0].name == "Warning",
             "classviews: error shape");
  }

  c.Expect(ad->actions.size() == 3 && ad->transitions.size() == 3,
           "activity: expected 3 actions and 3 transitions");
  if (ad->transitions.size() == 3) {
    const auto& branch = ad->transitions[1];
    bool guards = branch.alternatives.size() == 2 && branch.alternatives[0].guard &&
                  branch.alternatives[1].guard &&
                  ad::PrintGuard(*branch.alternatives[0].guard) == "p.age >= 18" &&
                  ad::PrintGuard(*branch.alternatives[1].guard) == "p.age < 18";
    c.Expect(guards, "activity: expected guards p.age >= 18 and p.age < 18");
    c.Expect(ad->transitions[0].sources[0].is_initial() &&
                 ad->transitions[2].sources.size() == 2 &&
                 ad->transitions[2].alternatives[0].target.is_final(),
             "activity: initial and final transitions");
  }
  c.Expect(elapsed < 1.0, "parsing took " + std::to_string(elapsed) + " s");
}

// 2. The verbatim project has exactly one error: the unresolved error view.
void ViewMismatch(Check& c) {
  link::LinkedModel model = testing::LinkFixture("verbatim");
  std::vector<const Diagnostic*> errors;
  for (const auto& d : model.diagnostics) {
    if (d.is_error()) errors.push_back(&d);
  }
  c.Expect(errors.size() == 1, "expected exactly one error, got " + std::to_string(errors.size()));
  if (errors.size() == 1) {
    c.Expect(errors[0]->code == "MW402", "error code is " + errors[0]->code);
    c.Expect(errors[0]->message.find("Person.registrationError") != std::string::npos,
             "message does not name Person.registrationError");
  }
  CliRun run = Cli({"-p", Fixture("verbatim"), "check"});
  c.Expect(run.code == 1, "check exit code " + std::to_string(run.code));
}

// 3. The corrected project checks clean and its flow follows the guards.
void CorrectedFlow(Check& c) {
  c.Expect(Cli({"-p", Fixture("corrected"), "check"}).code == 0, "check did not exit 0");
  struct Case {
    const char* script;
    std::vector<std::string> actions;
  };
  for (const Case& k : {Case{"age18.json", {"Registration", "Welcome"}},
                        Case{"age17.json", {"Registration", "Error"}}}) {
    std::vector<std::string> args = {"-p", Fixture("corrected"), "run", "UserRegistration",
                                     "--script", Script(k.script)};
    CliRun first = Cli(args);
    CliRun second = Cli(args);
    if (!c.Expect(first.code == 0, std::string(k.script) + ": exit " + std::to_string(first.code)))
      continue;
    auto trace = nlohmann::json::parse(first.out);
    c.Expect(trace.at("status") == "Completed", std::string(k.script) + ": not completed");
    c.Expect(VisitedActions(trace) == k.actions, std::string(k.script) + ": wrong actions");
    c.Expect(trace.at("events").back().at("kind") == "FlowCompleted",
             std::string(k.script) + ": last event is not FlowCompleted");
    c.Expect(first.out == second.out, std::string(k.script) + ": traces differ between runs");
  }
}

// 4. Validation results for the registration rules, and retry after rejection.
void ValidationEngine(Check& c) {
  link::LinkedModel model = testing::LinkFixture("corrected");
  const link::ViewSymbol* reg = model.table.FindView("Person", "registration");
  if (!c.Expect(reg != nullptr, "registration view missing")) return;
  auto field = [&](const std::string& name, std::string_view raw) {
    for (const auto& el : reg->elements) {
      if (el.name == name && el.type) {
        return rt::ValidateField(name, *el.type, el.annotations, raw, model.table);
      }
    }
    return rt::FieldResult{};
  };
  auto rules = [](const rt::FieldResult& r) {
    std::vector<rt::RuleKind> out;
    for (const auto& v : r.violations) out.push_back(v.rule);
    return out;
  };
  using rt::RuleKind;
  c.Expect(rules(field("name", "")) == std::vector<RuleKind>{RuleKind::kRequired},
           "name=\"\" is not Required");
  c.Expect(rules(field("name", "ab")) == std::vector<RuleKind>{RuleKind::kLength},
           "name=\"ab\" is not Length");
  c.Expect(field("name", "abc").ok() && field("name", "abc").value == rt::Value::Str("abc"),
           "name=\"abc\" was not accepted");
  c.Expect(rules(field("age", "x")) == std::vector<RuleKind>{RuleKind::kNumberFormat},
           "age=\"x\" is not NumberFormat");

  auto script = rt::ParseScript(ReadFile(FixtureDir() / "scripts/retry.json"));
  if (!c.Expect(script.ok(), "retry script did not parse")) return;
  auto result = rt::RunScript(model, "UserRegistration", *script);
  if (!c.Expect(result.ok(), "retry run did not start")) return;
  std::vector<std::string> kinds;
  for (const auto& e : result->events) kinds.push_back(rt::EventKindName(e.kind));
  const std::vector<std::string> expected = {"EnterAction",     "ValidationRejected",
                                             "ObjectCreated",   "GuardEvaluated",
                                             "TransitionTaken", "EnterAction",
                                             "ViewShown",       "TransitionTaken",
                                             "FlowCompleted"};
  c.Expect(kinds == expected, "retry trace has an unexpected event sequence");
  c.Expect(result->status == rt::SessionStatus::kCompleted, "retry run did not complete");
}

// 5. Random create/link/delete sequences keep ownership and references sound.
void CompositionLifeCycle(Check& c) {
  link::LinkedModel model = link::CheckSources({{"store.cd", testing::StoreTestModel()}});
  if (!c.Expect(!model.has_errors(), "store test model has errors")) return;
  testing::Rng rng(5);
  auto start = std::chrono::steady_clock::now();
  int deletes = 0;
  for (int i = 0; i < 1000; ++i) {
    auto stats = testing::RunRandomStoreSequence(model.table, rng, 50, 20);
    if (!c.Expect(stats.failure.empty(), "sequence " + std::to_string(i) + ": " + stats.failure))
      return;
    deletes += stats.deletes;
  }
  double elapsed = SecondsSince(start);
  c.Expect(deletes > 0, "no delete was exercised");
  c.Expect(elapsed < 10.0, "1000 sequences took " + std::to_string(elapsed) + " s");
}

// 6. parse, print, parse yields an equal tree for fixtures and random models.
void RoundTrip(Check& c) {
  for (const char* dir : {"verbatim", "corrected", "guard_totality"}) {
    for (const auto& src : testing::LoadSources(FixtureDir() / dir)) {
      std::string where = std::string(dir) + "/" + src.path;
      switch (link::LanguageOf(src.path)) {
        case link::SourceLanguage::kClassDiagram: {
          auto a = cd::ParseClassDiagram(src.text, src.path);
          auto b = cd::ParseClassDiagram(cd::PrintClassDiagram(*a), src.path);
          c.Expect(a.ok() && b.ok() && *a == *b, where);
          break;
        }
        case link::SourceLanguage::kClassviews: {
          auto a = cv::ParseClassviews(src.text, src.path);
          auto b = cv::ParseClassviews(cv::PrintClassviews(*a), src.path);
          c.Expect(a.ok() && b.ok() && *a == *b, where);
          break;
        }
        case link::SourceLanguage::kActivity: {
          auto a = ad::ParseActivity(src.text, src.path);
          auto b = ad::ParseActivity(ad::PrintActivity(*a), src.path);
          c.Expect(a.ok() && b.ok() && *a == *b, where);
          break;
        }
        case link::SourceLanguage::kUnknown:
          break;
      }
    }
  }
  testing::Rng rng(6);
  for (int i = 0; i < 500; ++i) {
    auto cd = testing::RandomClassDiagram(rng);
    auto cd2 = cd::ParseClassDiagram(cd::PrintClassDiagram(cd), "r.cd");
    c.Expect(cd2.ok() && *cd2 == cd, "random class diagram " + std::to_string(i));
    auto cv = testing::RandomClassviews(rng);
    auto cv2 = cv::ParseClassviews(cv::PrintClassviews(cv), "r.cv");
    c.Expect(cv2.ok() && *cv2 == cv, "random classviews " + std::to_string(i));
    auto ad = testing::RandomActivity(rng);
    auto ad2 = ad::ParseActivity(ad::PrintActivity(ad), "r.ad");
    c.Expect(ad2.ok() && *ad2 == ad, "random activity " + std::to_string(i));
  }
}

// 7. The data symbols do not depend on views or activities.
void DependencyDiscipline(Check& c) {
  for (const char* dir : {"verbatim", "corrected"}) {
    std::vector<link::SourceFile> all = testing::LoadSources(FixtureDir() / dir);
    std::vector<link::SourceFile> cd_only;
    for (const auto& f : all) {
      if (link::LanguageOf(f.path) == link::SourceLanguage::kClassDiagram) cd_only.push_back(f);
    }
    std::string with = link::SerializeDataSymbols(link::CheckSources(all).table);
    std::string without = link::SerializeDataSymbols(link::CheckSources(cd_only).table);
    c.Expect(!cd_only.empty() && with == without,
             std::string(dir) + ": data symbols differ with and without .cv/.ad");
  }
}

// 8. Generated site layout, registration widgets, harvest-proof mail page and
// reproducible manifests.
void Generation(Check& c) {
  fs::path out = fs::temp_directory_path() / "mw_acceptance_site";
  fs::remove_all(out);
  CliRun first = Cli({"-p", Fixture("corrected"), "generate", "--out", out.string()});
  if (!c.Expect(first.code == 0, "generate exit " + std::to_string(first.code))) return;

  std::set<std::string> files;
  for (const auto& e : fs::recursive_directory_iterator(out)) {
    if (e.is_regular_file()) files.insert(fs::relative(e.path(), out).generic_string());
  }
  const std::set<std::string> expected = {
      "pages/Person.error.html", "pages/Person.protectedMail.html",
      "pages/Person.registration.html", "pages/Person.welcome.html", "schema.json", "flow.json",
      "manifest.json", "static/mw.css"};
  c.Expect(files == expected, "unexpected set of generated files");

  std::string reg = ReadFile(out / "pages/Person.registration.html");
  for (const char* name : {"name", "email", "age"}) {
    c.Expect(reg.find("data-mw-name=\"" + std::string(name) + "\"") != std::string::npos,
             std::string("registration lacks a widget for ") + name);
  }
  c.Expect(reg.find("data-mw-widget=\"SubForm\" data-mw-name=\"cars\"") != std::string::npos,
           "registration lacks the cars SubForm");
  c.Expect(reg.find("data-mw-widget=\"CaptchaBox\"") != std::string::npos,
           "registration lacks the CaptchaBox");

  // The stored page is a template; fill it with a real registrant to check
  // that the address never reaches the markup.
  link::LinkedModel model = testing::LinkFixture("corrected");
  auto session = rt::FlowSession::Start(model, "UserRegistration");
  rt::ObjectInput in;
  in.fields = {{"name", "Ann"}, {"email", "ann@example.org"}, {"age", "18"}, {"captcha", "0"}};
  if (c.Expect(session.ok() && session->Step(in).ok() && session->bindings().count("p"),
               "could not create a registrant")) {
    gen::PageData data{&session->store(), session->bindings().at("p")};
    std::string mail =
        gen::RenderViewPage(model.table, *model.table.FindView("Person", "protectedMail"), &data);
    c.Expect(mail.find("ann@example.org") == std::string::npos,
             "protectedMail contains the email address");
    c.Expect(mail.find("mw-image") != std::string::npos, "protectedMail lacks the email image");
  }
  c.Expect(ReadFile(out / "pages/Person.protectedMail.html").find("@") == std::string::npos,
           "stored protectedMail page contains an address");

  std::string manifest = ReadFile(out / "manifest.json");
  CliRun second = Cli({"-p", Fixture("corrected"), "generate", "--out", out.string()});
  c.Expect(second.code == 0 && ReadFile(out / "manifest.json") == manifest,
           "manifests differ between runs");
  fs::remove_all(out);
}

// 9. A guard set that does not cover age 18 fails the flow.
void GuardTotality(Check& c) {
  CliRun run = Cli({"-p", Fixture("guard_totality"), "run", "UserRegistration", "--script",
                    Script("age18.json")});
  c.Expect(run.code == 3, "exit code " + std::to_string(run.code));
  auto trace = nlohmann::json::parse(run.out, nullptr, false);
  c.Expect(!trace.is_discarded() && trace.at("status") == "Failed" &&
               trace.at("error").at("code") == "MW505",
           "trace does not end Failed with MW505");
}

}  // namespace
}  // namespace mw::acceptance

int main() {
  using mw::acceptance::Check;
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 fixture parsing", mw::acceptance::FixtureParsing},
      {"2 inconsistency detection", mw::acceptance::ViewMismatch},
      {"3 corrected flow semantics", mw::acceptance::CorrectedFlow},
      {"4 validation engine", mw::acceptance::ValidationEngine},
      {"5 composition life cycle", mw::acceptance::CompositionLifeCycle},
      {"6 round trip", mw::acceptance::RoundTrip},
      {"7 dependency discipline", mw::acceptance::DependencyDiscipline},
      {"8 generation", mw::acceptance::Generation},
      {"9 guard totality", mw::acceptance::GuardTotality},
  };
  int failed = 0;
  for (const auto& criterion : criteria) {
    Check check;
    try {
      criterion.run(check);
    } catch (const std::exception& e) {
      check.Expect(false, std::string("exception: ") + e.what());
    }
    if (check.ok()) {
      std::printf("PASS %s\n", criterion.name);
    } else {
      ++failed;
      std::printf("FAIL %s: %s\n", criterion.name, check.failure().c_str());
    }
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
