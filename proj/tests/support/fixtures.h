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


// Shared helpers for the test binaries: bundled data locations, cached
// lexicons and corpora, and token lookups by surface form.

#ifndef ITINERA_TESTS_SUPPORT_FIXTURES_H_
#define ITINERA_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "itinera/depgraph.h"
#include "itinera/lexicon.h"

namespace itinera::testing {

std::filesystem::path DataDir();
std::filesystem::path LexiconDir();
std::filesystem::path CorpusPath(std::string_view name);  // "gold", ...

const LexiconSet& BundledLexicons();
const std::vector<SentenceGraph>& Corpus(std::string_view name);
// Every sentence of every bundled corpus file.
std::vector<SentenceGraph> AllBundledSentences();
const SentenceGraph& Sentence(std::string_view sent_id);

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, std::string_view contents);

// First token whose form is `form`; fails the current test if absent.
TokenId TokenByForm(const SentenceGraph& graph, std::string_view form);
// The unique span whose reconstructed surface equals `text`.
TokenSpan SpanOfText(const SentenceGraph& graph, std::string_view text);
std::vector<std::string> Lemmas(const SentenceGraph& graph,
                                const std::vector<TokenId>& ids);
std::vector<std::string> Forms(const SentenceGraph& graph,
                               const std::vector<TokenId>& ids);

// A fresh, empty directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  ScratchDir();
  ~ScratchDir();
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
};

}  // namespace itinera::testing

#endif  // ITINERA_TESTS_SUPPORT_FIXTURES_H_
