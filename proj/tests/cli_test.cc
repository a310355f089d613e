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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mw/cli/cli.h"
#include "test_support.h"

namespace mw::cli {
namespace {

namespace fs = std::filesystem;
using mw::testing::FixtureDir;
using mw::testing::ReadFile;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome Mwc(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  Outcome o;
  o.code = Main(args, in, out, err, OutputOptions{});
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string Fixture(const char* name) { return (FixtureDir() / name).string(); }
std::string Script(const char* name) { return (FixtureDir() / "scripts" / name).string(); }

class TempProject {
 public:
  explicit TempProject(const std::string& name)
      : dir_(fs::temp_directory_path() /
             ("mw_cli_" + name + "_" +
              std::to_string(::testing::UnitTest::GetInstance()->random_seed()))) {
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  ~TempProject() { fs::remove_all(dir_); }

  void CopyFixture(const char* name) {
    for (const auto& entry : fs::directory_iterator(FixtureDir() / name)) {
      fs::copy_file(entry.path(), dir_ / entry.path().filename());
    }
  }
  void Write(const std::string& rel, const std::string& text) {
    fs::create_directories((dir_ / rel).parent_path());
    std::ofstream(dir_ / rel, std::ios::binary) << text;
  }
  std::string path() const { return dir_.string(); }
  const fs::path& dir() const { return dir_; }

 private:
  fs::path dir_;
};

TEST(LoadProjectTest, VerbatimFixtureLoadsOneFileEach) {
  auto p = LoadProject(FixtureDir() / "verbatim");
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p->sources.size(), 3u);
  EXPECT_EQ(p->sources[0].path, "carsharing.cd");
  EXPECT_EQ(p->sources[1].path, "person.cv");
  EXPECT_EQ(p->sources[2].path, "user_registration.ad");
  EXPECT_EQ(p->manifest.activity, "UserRegistration");
}

TEST(LoadProjectTest, BareDirectoryUsesDefaults) {
  TempProject t("bare");
  t.Write("model/a.cd", "classdiagram A { class P {} }");
  t.Write(".hidden/b.cd", "classdiagram B { class Q {} }");
  auto p = LoadProject(t.dir());
  ASSERT_TRUE(p.ok());
  ASSERT_EQ(p->sources.size(), 1u);
  EXPECT_EQ(p->sources[0].path, "model/a.cd");
}

TEST(ExitCodeTest, EmptyDirectoryIsUsageError) {
  TempProject t("empty");
  Outcome o = Mwc({"-p", t.path(), "check"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("MW701"), std::string::npos);
}

TEST(ExitCodeTest, ManifestWithMissingFileNamesThePath) {
  TempProject t("missing");
  t.Write("montiweb.json", R"({"classdiagrams": ["models/absent.cd"]})");
  Outcome o = Mwc({"-p", t.path(), "check"});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("models/absent.cd"), std::string::npos) << o.err;
}

TEST(ExitCodeTest, MalformedManifest) {
  TempProject t("malformed");
  t.Write("montiweb.json", R"({"classdiagrams": "a.cd"})");
  EXPECT_EQ(Mwc({"-p", t.path(), "check"}).code, kExitUsage);
  t.Write("montiweb.json", R"({"colour": "blue"})");
  EXPECT_EQ(Mwc({"-p", t.path(), "check"}).code, kExitUsage);
  t.Write("montiweb.json", "{");
  EXPECT_EQ(Mwc({"-p", t.path(), "check"}).code, kExitUsage);
}

TEST(ExitCodeTest, UsageErrorsAndHelp) {
  EXPECT_EQ(Mwc({}).code, kExitUsage);
  EXPECT_EQ(Mwc({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Mwc({"--help"}).code, kExitOk);
  EXPECT_EQ(Mwc({"-p", Fixture("corrected"), "run", "--script", Script("age18.json"),
                 "--interactive"})
                .code,
            kExitUsage);
}

TEST(CheckCommandTest, VerbatimProjectReportsTheViewMismatch) {
  Outcome o = Mwc({"-p", Fixture("verbatim"), "check"});
  EXPECT_EQ(o.code, kExitModelErrors);
  EXPECT_NE(o.out.find("MW402"), std::string::npos);
  EXPECT_NE(o.out.find("registrationError"), std::string::npos);
  EXPECT_NE(o.out.find("1 error,"), std::string::npos) << o.out;
}

TEST(CheckCommandTest, CorrectedProjectIsClean) {
  Outcome o = Mwc({"-p", Fixture("corrected"), "check"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "0 errors, 0 warnings\n");
}

TEST(CheckCommandTest, DenyWarningsPromotesAnonymousView) {
  TempProject t("deny");
  t.CopyFixture("corrected");
  t.Write("extra.cv", "Car { display { brand; } }");
  t.Write("montiweb.json", R"({"classviews": ["*.cv"], "activity": "UserRegistration"})");
  Outcome relaxed = Mwc({"-p", t.path(), "check"});
  EXPECT_EQ(relaxed.code, kExitOk) << relaxed.out;
  EXPECT_NE(relaxed.out.find("MW202"), std::string::npos);
  Outcome strict = Mwc({"-p", t.path(), "check", "--deny-warnings"});
  EXPECT_EQ(strict.code, kExitModelErrors);
}

TEST(CheckCommandTest, OutputIsStableAcrossRuns) {
  EXPECT_EQ(Mwc({"-p", Fixture("verbatim"), "check"}).out, Mwc({"-p", Fixture("verbatim"), "check"}).out);
}

TEST(GenerateCommandTest, CorrectedProjectWritesSite) {
  TempProject t("gen");
  Outcome o = Mwc({"-p", Fixture("corrected"), "generate", "--out", t.path()});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  for (const char* f : {"pages/Person.error.html", "pages/Person.protectedMail.html",
                        "pages/Person.registration.html", "pages/Person.welcome.html",
                        "schema.json", "flow.json", "manifest.json", "static/mw.css"}) {
    EXPECT_TRUE(fs::exists(t.dir() / f)) << f;
  }
  EXPECT_EQ(o.out, ReadFile(t.dir() / "manifest.json"));
}

TEST(GenerateCommandTest, ModelErrorsWriteNothing) {
  TempProject t("gen_verbatim");
  fs::path out = t.dir() / "site";
  Outcome o = Mwc({"-p", Fixture("verbatim"), "generate", "--out", out.string()});
  EXPECT_EQ(o.code, kExitModelErrors);
  EXPECT_FALSE(fs::exists(out));
}

TEST(GenerateCommandTest, UnwritableOutputIsUsageError) {
  TempProject t("gen_blocked");
  t.Write("file", "x");
  Outcome o = Mwc({"-p", Fixture("corrected"), "generate", "--out", (t.dir() / "file").string()});
  EXPECT_EQ(o.code, kExitUsage);
  EXPECT_NE(o.err.find("MW602"), std::string::npos);
}

TEST(RunCommandTest, ScriptedRuns) {
  Outcome adult = Mwc({"-p", Fixture("corrected"), "run", "UserRegistration", "--script",
                       Script("age18.json")});
  ASSERT_EQ(adult.code, kExitOk) << adult.err;
  EXPECT_NE(adult.out.find("\"action\": \"Welcome\""), std::string::npos);
  EXPECT_EQ(adult.out.find("\"action\": \"Error\""), std::string::npos);

  Outcome minor = Mwc({"-p", Fixture("corrected"), "run", "UserRegistration", "--script",
                       Script("age17.json")});
  ASSERT_EQ(minor.code, kExitOk);
  EXPECT_NE(minor.out.find("\"action\": \"Error\""), std::string::npos);
  EXPECT_EQ(minor.out.find("\"action\": \"Welcome\""), std::string::npos);

  Outcome retry = Mwc({"-p", Fixture("corrected"), "run", "--script", Script("retry.json")});
  ASSERT_EQ(retry.code, kExitOk);
  auto trace = nlohmann::json::parse(retry.out);
  int rejected = 0;
  for (const auto& e : trace.at("events")) {
    if (e.at("kind") == "ValidationRejected") {
      ++rejected;
      EXPECT_EQ(e.at("violations")[0].at("rule"), "Length");
    }
  }
  EXPECT_EQ(rejected, 1);
  EXPECT_EQ(trace.at("status"), "Completed");
}

TEST(RunCommandTest, TracesAreByteIdenticalAndCanGoToAFile) {
  std::vector<std::string> args = {"-p", Fixture("corrected"), "run", "--script",
                                   Script("age18.json")};
  std::string first = Mwc(args).out;
  EXPECT_EQ(Mwc(args).out, first);
  TempProject t("trace");
  std::string trace_file = (t.dir() / "trace.json").string();
  args.insert(args.end(), {"--trace-out", trace_file});
  Outcome o = Mwc(args);
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(ReadFile(trace_file), first);
}

TEST(RunCommandTest, FailureExitCodes) {
  EXPECT_EQ(Mwc({"-p", Fixture("corrected"), "run", "Nope", "--script", Script("age18.json")}).code,
            kExitUsage);
  TempProject t("badscript");
  t.Write("bad.json", R"({"action": "Registration"})");
  Outcome bad = Mwc({"-p", Fixture("corrected"), "run", "--script", (t.dir() / "bad.json").string()});
  EXPECT_EQ(bad.code, kExitUsage);
  EXPECT_NE(bad.err.find("MW508"), std::string::npos);
  EXPECT_EQ(Mwc({"-p", Fixture("corrected"), "run", "--script", (t.dir() / "none.json").string()})
                .code,
            kExitUsage);
  t.Write("short.json", "[]");
  EXPECT_EQ(Mwc({"-p", Fixture("corrected"), "run", "--script", (t.dir() / "short.json").string()})
                .code,
            kExitFlowFailure);
  Outcome totality = Mwc({"-p", Fixture("guard_totality"), "run", "--script", Script("age18.json")});
  EXPECT_EQ(totality.code, kExitFlowFailure);
  EXPECT_NE(totality.out.find("MW505"), std::string::npos);
  EXPECT_EQ(Mwc({"-p", Fixture("verbatim"), "run", "--script", Script("age18.json")}).code,
            kExitModelErrors);
}

TEST(RunCommandTest, InteractiveRetriesAfterRejection) {
  const std::string input =
      "ab\nann@example.org\n18\n0\n0\n"
      "Ann\nann@example.org\n18\n0\n0\n";
  Outcome o = Mwc({"-p", Fixture("corrected"), "run", "--interactive"}, input);
  EXPECT_EQ(o.code, kExitOk) << o.out << o.err;
  EXPECT_NE(o.out.find("rejected name (Length)"), std::string::npos) << o.out;
  EXPECT_NE(o.out.find("Welcome to Carsharing Service"), std::string::npos);
  EXPECT_NE(o.out.find("[shown as an image]"), std::string::npos);
  EXPECT_EQ(o.out.find("ann@example.org"), std::string::npos);
  EXPECT_NE(o.out.find("flow completed"), std::string::npos);

  Outcome eof = Mwc({"-p", Fixture("corrected"), "run", "--interactive"}, "Ann\n");
  EXPECT_EQ(eof.code, kExitFlowFailure);
}

}  // namespace
}  // namespace mw::cli
