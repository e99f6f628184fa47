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

// Command-line driver: `itinera extract` and `itinera lexicon validate`.

#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "itinera/cli.h"

int main(int argc, char** argv) {
  CLI::App app{"Extract n-ary and itinerary relations from CoNLL-U"};
  app.require_subcommand(1);

  itinera::ExtractOptions extract;
  std::string lexicons;
  std::string out_dir;
  auto* extract_cmd = app.add_subcommand("extract", "Run the extraction pipeline");
  extract_cmd->add_option("input", extract.input, "CoNLL-U file, or - for stdin");
  extract_cmd->add_option("--lexicons", lexicons, "Lexicon directory");
  const std::map<std::string, itinera::OutputFormat> formats = {
      {"json", itinera::OutputFormat::kJson},
      {"turtle", itinera::OutputFormat::kTurtle},
      {"both", itinera::OutputFormat::kBoth}};
  extract_cmd->add_option("--format", extract.format, "json, turtle or both")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  extract_cmd->add_flag("--loose-toponyms", extract.loose_toponyms,
                        "Accept PROPN tokens missing from the gazetteer");
  extract_cmd->add_option("--base-iri", extract.base_iri,
                          "Base IRI for Turtle instance nodes");
  extract_cmd->add_option("--out-dir", out_dir, "Write output files here");

  auto* lexicon_cmd = app.add_subcommand("lexicon", "Lexicon utilities");
  lexicon_cmd->require_subcommand(1);
  std::string validate_dir;
  auto* validate_cmd = lexicon_cmd->add_subcommand("validate", "Check lexicon files");
  validate_cmd->add_option("dir", validate_dir, "Lexicon directory");
  validate_cmd->add_option("--lexicons", validate_dir, "Lexicon directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : itinera::kExitUsage;
  }

  if (*extract_cmd) {
    extract.lexicon_dir = lexicons;
    extract.out_dir = out_dir;
    return itinera::RunExtract(extract, std::cin, std::cout, std::cerr);
  }
  return itinera::RunLexiconValidate(validate_dir, std::cout, std::cerr);
}
