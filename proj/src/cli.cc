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

#include <fstream>
#include <iostream>
#include <optional>

#include "itinera/depgraph.h"
#include "itinera/document.h"
#include "itinera/lexicon.h"

#ifndef ITINERA_DEFAULT_LEXICON_DIR
#define ITINERA_DEFAULT_LEXICON_DIR "data/lexicons"
#endif

namespace itinera {

namespace {

void PrintProblems(const LexiconError& error, std::ostream& err) {
  for (const auto& problem : error.problems()) err << "error: " << problem << '\n';
  err << error.problems().size() << " errors\n";
}

// Writes through a temporary file so that a failed run leaves nothing behind.
bool WriteFile(const std::filesystem::path& path, const std::string& content,
               std::ostream& err) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out || !(out << content)) {
      err << "cannot write " << tmp << '\n';
      return false;
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    err << "cannot write " << path << ": " << ec.message() << '\n';
    return false;
  }
  return true;
}

}  // namespace

std::filesystem::path DefaultLexiconDir() { return ITINERA_DEFAULT_LEXICON_DIR; }

int RunExtract(const ExtractOptions& options, std::istream& stdin_stream,
               std::ostream& out, std::ostream& err) {
  const bool wants_turtle = options.format != OutputFormat::kJson;
  if (wants_turtle && options.base_iri.empty()) {
    err << "--base-iri is required for turtle output\n";
    return kExitUsage;
  }
  if (wants_turtle && !IsAbsoluteIri(options.base_iri)) {
    err << "--base-iri must be an absolute IRI: " << options.base_iri << '\n';
    return kExitUsage;
  }
  if (options.format == OutputFormat::kBoth && options.out_dir.empty()) {
    err << "--format both requires --out-dir\n";
    return kExitUsage;
  }

  const std::filesystem::path lexicon_dir =
      options.lexicon_dir.empty() ? DefaultLexiconDir() : options.lexicon_dir;
  LexiconSet lexicons;
  try {
    lexicons = LoadLexicons(lexicon_dir);
  } catch (const LexiconError& e) {
    PrintProblems(e, err);
    return kExitLexicon;
  }

  std::vector<SentenceGraph> corpus;
  try {
    if (options.input == "-") {
      corpus = ParseConllu(stdin_stream);
    } else {
      std::ifstream in(options.input, std::ios::binary);
      if (!in) {
        err << "cannot read " << options.input << '\n';
        return kExitInput;
      }
      corpus = ParseConllu(in);
    }
  } catch (const ConllParseError& e) {
    err << "CoNLL-U error: " << e.what() << '\n';
    return kExitInput;
  } catch (const StructureError& e) {
    err << "CoNLL-U structure error: " << e.what() << '\n';
    return kExitInput;
  }

  RecognizerOptions recognizer;
  recognizer.loose_toponyms = options.loose_toponyms;
  const ExtractionDocument doc = BuildDocument(
      corpus, lexicons, LexiconFingerprint(lexicon_dir), recognizer);
  for (const auto& sentence : doc.sentences) {
    for (const auto& skip : sentence.skips) {
      err << "skipped " << skip.sent_id << ": " << skip.reason << '\n';
    }
  }

  std::optional<std::string> json;
  std::optional<std::string> turtle;
  if (options.format != OutputFormat::kTurtle) json = ToJson(doc);
  if (wants_turtle) turtle = ToTurtle(doc, options.base_iri);

  if (options.out_dir.empty()) {
    out << (json ? *json : *turtle);
    return kExitOk;
  }
  std::error_code ec;
  std::filesystem::create_directories(options.out_dir, ec);
  if (ec) {
    err << "cannot create " << options.out_dir << ": " << ec.message() << '\n';
    return kExitUsage;
  }
  if (json && !WriteFile(options.out_dir / "extraction.json", *json, err)) {
    return kExitUsage;
  }
  if (turtle && !WriteFile(options.out_dir / "extraction.ttl", *turtle, err)) {
    return kExitUsage;
  }
  return kExitOk;
}

int RunLexiconValidate(const std::filesystem::path& lexicon_dir,
                       std::ostream& out, std::ostream& err) {
  const std::filesystem::path dir =
      lexicon_dir.empty() ? DefaultLexiconDir() : lexicon_dir;
  LexiconSet lexicons;
  try {
    lexicons = LoadLexicons(dir);
  } catch (const LexiconError& e) {
    PrintProblems(e, err);
    return kExitLexicon;
  }
  const ValidationReport report = ValidateLexicons(lexicons);
  out << report.ToText();
  return report.ok() ? kExitOk : kExitLexicon;
}

}  // namespace itinera
