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

#ifndef ITINERA_DEPGRAPH_H_
#define ITINERA_DEPGRAPH_H_

#include <istream>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace itinera {

// 1-based token position within a sentence; 0 denotes the virtual root.
using TokenId = int;

struct Token {
  TokenId id = 0;
  std::string form;
  std::string lemma;
  std::string upos;
  std::string xpos = "_";
  std::string feats = "_";
  TokenId head = 0;
  std::string deprel;
  std::string deps = "_";
  std::string misc = "_";

  // False when MISC carries SpaceAfter=No.
  bool SpaceAfter() const;

  bool operator==(const Token&) const = default;
};

// Inclusive, contiguous range of token ids.
struct TokenSpan {
  TokenId first = 0;
  TokenId last = 0;

  int size() const { return last - first + 1; }
  bool Contains(TokenId id) const { return id >= first && id <= last; }
  bool Contains(const TokenSpan& other) const {
    return other.first >= first && other.last <= last;
  }
  bool Overlaps(const TokenSpan& other) const {
    return first <= other.last && other.first <= last;
  }

  auto operator<=>(const TokenSpan&) const = default;
};

struct SubtreeYield {
  TokenSpan span;
  // Set when the descendants do not form a contiguous range; `span` is then
  // the minimal covering range.
  bool non_projective = false;
};

class ConllParseError : public std::runtime_error {
 public:
  ConllParseError(int line, const std::string& message);
  int line() const { return line_; }

 private:
  int line_;
};

class StructureError : public std::runtime_error {
 public:
  StructureError(std::string sent_id, const std::string& message);
  const std::string& sent_id() const { return sent_id_; }

 private:
  std::string sent_id_;
};

class NoMainVerb : public std::runtime_error {
 public:
  explicit NoMainVerb(const std::string& sent_id);
};

// Immutable dependency tree of one sentence. Tokens are stored in surface
// order with token(i).id == i.
class SentenceGraph {
 public:
  // Validates ids, heads and tree shape; throws StructureError.
  static SentenceGraph Build(std::string sent_id, std::string text,
                             std::vector<Token> tokens,
                             std::vector<std::string> comments = {});

  const std::string& sent_id() const { return sent_id_; }
  const std::string& text() const { return text_; }
  const std::vector<Token>& tokens() const { return tokens_; }
  // Comment lines other than sent_id and text, without the leading '#'.
  const std::vector<std::string>& comments() const { return comments_; }
  int size() const { return static_cast<int>(tokens_.size()); }
  bool Has(TokenId id) const { return id >= 1 && id <= size(); }

  const Token& token(TokenId id) const { return tokens_.at(id - 1); }
  TokenId root() const { return root_; }
  // Direct dependents in surface order.
  const std::vector<TokenId>& children(TokenId id) const {
    return children_.at(id - 1);
  }

  // Direct dependents of `id`, in surface order. A label matches a deprel
  // either exactly or on its universal part ("obl" matches "obl:mod").
  std::vector<TokenId> Dependents(TokenId id) const;
  std::vector<TokenId> Dependents(
      TokenId id, std::span<const std::string_view> labels) const;
  std::vector<TokenId> Dependents(
      TokenId id, std::initializer_list<std::string_view> labels) const {
    return Dependents(id, std::span(labels.begin(), labels.size()));
  }

  // `id` and all its transitive dependents, sorted.
  std::vector<TokenId> Descendants(TokenId id) const;
  SubtreeYield Yield(TokenId id) const;

  bool IsDescendant(TokenId node, TokenId ancestor) const;
  bool IsPunct(TokenId id) const { return token(id).upos == "PUNCT"; }

  // Forms of the span joined with single spaces, honoring SpaceAfter=No.
  std::string Surface(const TokenSpan& span) const;

  // Strips punctuation tokens from both edges; nullopt if nothing remains.
  std::optional<TokenSpan> TrimPunct(const TokenSpan& span) const;

  bool operator==(const SentenceGraph& other) const;

 private:
  SentenceGraph() = default;

  std::string sent_id_;
  std::string text_;
  std::vector<Token> tokens_;
  std::vector<std::string> comments_;
  std::vector<std::vector<TokenId>> children_;
  TokenId root_ = 0;
};

// True if `deprel` is `label` or has `label` as its universal part.
bool DeprelMatches(std::string_view deprel, std::string_view label);

// Reads CoNLL-U. Multiword-token ranges and empty nodes are skipped; a missing
// `# text` is rebuilt from the forms and a missing `# sent_id` becomes "s<n>".
std::vector<SentenceGraph> ParseConllu(std::istream& input);
std::vector<SentenceGraph> ParseConllu(std::string_view input);

std::string WriteConllu(std::span<const SentenceGraph> sentences);

// The main verb: the root when it is a VERB, or the lexical verb under an
// auxiliary root (compound tenses). nullopt when no such verb exists.
std::optional<TokenId> FindRootVerb(const SentenceGraph& graph);
// Same as FindRootVerb but throws NoMainVerb.
TokenId RootVerb(const SentenceGraph& graph);

}  // namespace itinera

#endif  // ITINERA_DEPGRAPH_H_
