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


#include "fixtures.h"

#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>

namespace itinera::testing {

std::filesystem::path DataDir() { return ITINERA_TEST_DATA_DIR; }

std::filesystem::path LexiconDir() { return DataDir() / "lexicons"; }

std::filesystem::path CorpusPath(std::string_view name) {
  return DataDir() / "corpus" / (std::string(name) + ".conllu");
}

const LexiconSet& BundledLexicons() {
  static const LexiconSet lexicons = LoadLexicons(LexiconDir());
  return lexicons;
}

const std::vector<SentenceGraph>& Corpus(std::string_view name) {
  static std::map<std::string, std::vector<SentenceGraph>, std::less<>> cache;
  auto it = cache.find(name);
  if (it == cache.end()) {
    it = cache.emplace(std::string(name),
                       ParseConllu(ReadFile(CorpusPath(name))))
             .first;
  }
  return it->second;
}

std::vector<SentenceGraph> AllBundledSentences() {
  std::vector<SentenceGraph> all;
  for (const char* name : {"gold", "taxonomy", "extra"}) {
    const auto& corpus = Corpus(name);
    all.insert(all.end(), corpus.begin(), corpus.end());
  }
  return all;
}

const SentenceGraph& Sentence(std::string_view sent_id) {
  for (const char* name : {"gold", "taxonomy", "extra"}) {
    for (const SentenceGraph& g : Corpus(name)) {
      if (g.sent_id() == sent_id) return g;
    }
  }
  throw std::out_of_range("no bundled sentence " + std::string(sent_id));
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  out << contents;
}

TokenId TokenByForm(const SentenceGraph& graph, std::string_view form) {
  for (const Token& t : graph.tokens()) {
    if (t.form == form) return t.id;
  }
  throw std::out_of_range("no token '" + std::string(form) + "' in " +
                          graph.sent_id());
}

TokenSpan SpanOfText(const SentenceGraph& graph, std::string_view text) {
  for (TokenId first = 1; first <= graph.size(); ++first) {
    for (TokenId last = first; last <= graph.size(); ++last) {
      if (graph.Surface({first, last}) == text) return {first, last};
    }
  }
  throw std::out_of_range("no span '" + std::string(text) + "' in " +
                          graph.sent_id());
}

std::vector<std::string> Lemmas(const SentenceGraph& graph,
                                const std::vector<TokenId>& ids) {
  std::vector<std::string> out;
  for (TokenId id : ids) out.push_back(graph.token(id).lemma);
  return out;
}

std::vector<std::string> Forms(const SentenceGraph& graph,
                               const std::vector<TokenId>& ids) {
  std::vector<std::string> out;
  for (TokenId id : ids) out.push_back(graph.token(id).form);
  return out;
}

ScratchDir::ScratchDir() {
  std::random_device rd;
  const auto base = std::filesystem::temp_directory_path();
  do {
    path_ = base / ("itinera-test-" + std::to_string(rd()));
  } while (std::filesystem::exists(path_));
  std::filesystem::create_directories(path_);
}

ScratchDir::~ScratchDir() {
  std::error_code ec;
  std::filesystem::remove_all(path_, ec);
}

}  // namespace itinera::testing
