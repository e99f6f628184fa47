// Copyright 2026 The Itinera Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "itinera/cli.h"

#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.h"
#include "json.hpp"
#include "turtle_reader.h"

namespace itinera {
namespace {

namespace fs = std::filesystem;
using testing::ScratchDir;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome Extract(ExtractOptions options, const std::string& stdin_text = "") {
  if (options.lexicon_dir.empty()) options.lexicon_dir = testing::LexiconDir();
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  Outcome run;
  run.code = RunExtract(options, in, out, err);
  run.out = out.str();
  run.err = err.str();
  return run;
}

size_t ItineraryCount(const std::string& json) {
  size_t n = 0;
  const auto doc = nlohmann::json::parse(json);
  for (const auto& s : doc.at("sentences")) {
    n += s.at("itinerary_relations").size();
  }
  return n;
}

TEST(RunExtractTest, GoldCorpusDocument) {
  const Outcome run = Extract({.input = testing::CorpusPath("gold").string()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_EQ(nlohmann::json::parse(run.out).at("sentences").size(), 8u);
  EXPECT_EQ(ItineraryCount(run.out), 2u);
  EXPECT_NE(run.err.find("skipped fragment-pau"), std::string::npos);
}

TEST(RunExtractTest, EmptyStdinGivesEmptyDocument) {
  const Outcome run = Extract({});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(nlohmann::json::parse(run.out).at("sentences").empty());
}

TEST(RunExtractTest, StdinMatchesFileInput) {
  const auto path = testing::CorpusPath("extra");
  const Outcome from_file = Extract({.input = path.string()});
  const Outcome from_stdin = Extract({}, testing::ReadFile(path));
  EXPECT_EQ(from_file.out, from_stdin.out);
}

TEST(RunExtractTest, CorruptInputExitsThreeWithoutOutput) {
  ScratchDir dir;
  const fs::path out_dir = dir.path() / "out";
  const Outcome run = Extract({.input = "-",
                           .format = OutputFormat::kBoth,
                           .base_iri = "http://example.org/",
                           .out_dir = out_dir},
                          "1\tPau\tPau\tPROPN\t_\t_\tzero\troot\t_\t_\n");
  EXPECT_EQ(run.code, kExitInput);
  EXPECT_TRUE(run.out.empty());
  EXPECT_NE(run.err.find("line 1"), std::string::npos);
  EXPECT_FALSE(fs::exists(out_dir / "extraction.json"));
  EXPECT_FALSE(fs::exists(out_dir / "extraction.ttl"));
}

TEST(RunExtractTest, CyclicTreeExitsThreeNamingSentence) {
  const Outcome run = Extract({},
                          "# sent_id = bad\n"
                          "1\ta\ta\tX\t_\t_\t2\tdep\t_\t_\n"
                          "2\tb\tb\tX\t_\t_\t1\tdep\t_\t_\n");
  EXPECT_EQ(run.code, kExitInput);
  EXPECT_NE(run.err.find("bad"), std::string::npos);
}

TEST(RunExtractTest, MissingLexiconsExitTwo) {
  ScratchDir dir;
  const Outcome run = Extract({.lexicon_dir = dir.path()});
  EXPECT_EQ(run.code, kExitLexicon);
  EXPECT_NE(run.err.find("motion_verbs.tsv"), std::string::npos);
  EXPECT_TRUE(run.out.empty());
}

TEST(RunExtractTest, TurtleNeedsAbsoluteBase) {
  EXPECT_EQ(Extract({.format = OutputFormat::kTurtle}).code, kExitUsage);
  EXPECT_EQ(Extract({.format = OutputFormat::kTurtle, .base_iri = "x/y"}).code,
            kExitUsage);
  EXPECT_EQ(Extract({.format = OutputFormat::kBoth,
                     .base_iri = "http://example.org/"})
                .code,
            kExitUsage);
}

TEST(RunExtractTest, BothFormatsWrittenToDirectory) {
  ScratchDir dir;
  const Outcome run = Extract({.input = testing::CorpusPath("gold").string(),
                           .format = OutputFormat::kBoth,
                           .base_iri = "http://example.org/run/",
                           .out_dir = dir.path()});
  ASSERT_EQ(run.code, kExitOk) << run.err;
  EXPECT_TRUE(run.out.empty());
  const std::string json = testing::ReadFile(dir.path() / "extraction.json");
  const std::string ttl = testing::ReadFile(dir.path() / "extraction.ttl");
  EXPECT_EQ(ItineraryCount(json), 2u);
  EXPECT_NO_THROW(testing::ReadTurtle(ttl));
  EXPECT_FALSE(fs::exists(dir.path() / "extraction.json.tmp"));
}

TEST(RunExtractTest, LooseToponymsFlagChangesOutput) {
  const auto path = testing::CorpusPath("extra").string();
  const Outcome strict = Extract({.input = path});
  const Outcome loose = Extract({.input = path, .loose_toponyms = true});
  EXPECT_NE(strict.out, loose.out);
  EXPECT_NE(loose.out.find("\"loose_match\": true"), std::string::npos);
  EXPECT_EQ(strict.out.find("\"loose_match\": true"), std::string::npos);
}

TEST(RunLexiconValidateTest, ExitCodes) {
  std::ostringstream out, err;
  EXPECT_EQ(RunLexiconValidate(testing::LexiconDir(), out, err), kExitOk);
  EXPECT_NE(out.str().find("0 errors"), std::string::npos);

  ScratchDir dir;
  std::ostringstream out2, err2;
  EXPECT_EQ(RunLexiconValidate(dir.path(), out2, err2), kExitLexicon);
}

}  // namespace
}  // namespace itinera
