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

#include "itinera/depgraph.h"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "itinera/text.h"

namespace itinera {

namespace {

std::vector<std::string_view> SplitTabs(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

std::optional<int> ParseInt(std::string_view text) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

// Returns the value of a "# key = value" comment, if the line is one.
std::optional<std::string> CommentValue(std::string_view comment,
                                        std::string_view key) {
  comment = TrimWhitespace(comment);
  if (comment.substr(0, key.size()) != key) return std::nullopt;
  std::string_view rest = TrimWhitespace(comment.substr(key.size()));
  if (rest.empty() || rest.front() != '=') return std::nullopt;
  return std::string(TrimWhitespace(rest.substr(1)));
}

std::string RebuildText(const std::vector<Token>& tokens) {
  std::string text;
  for (size_t i = 0; i < tokens.size(); ++i) {
    text += tokens[i].form;
    if (i + 1 < tokens.size() && tokens[i].SpaceAfter()) text.push_back(' ');
  }
  return text;
}

}  // namespace

bool Token::SpaceAfter() const {
  std::string_view rest = misc;
  while (!rest.empty()) {
    const size_t bar = rest.find('|');
    if (rest.substr(0, bar) == "SpaceAfter=No") return false;
    if (bar == std::string_view::npos) break;
    rest.remove_prefix(bar + 1);
  }
  return true;
}

ConllParseError::ConllParseError(int line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message),
      line_(line) {}

StructureError::StructureError(std::string sent_id, const std::string& message)
    : std::runtime_error("sentence " + sent_id + ": " + message),
      sent_id_(std::move(sent_id)) {}

NoMainVerb::NoMainVerb(const std::string& sent_id)
    : std::runtime_error("sentence " + sent_id + ": no main verb") {}

bool DeprelMatches(std::string_view deprel, std::string_view label) {
  if (deprel == label) return true;
  const size_t colon = deprel.find(':');
  return colon != std::string_view::npos && deprel.substr(0, colon) == label;
}

SentenceGraph SentenceGraph::Build(std::string sent_id, std::string text,
                                   std::vector<Token> tokens,
                                   std::vector<std::string> comments) {
  SentenceGraph graph;
  const int n = static_cast<int>(tokens.size());
  if (n == 0) throw StructureError(sent_id, "sentence has no tokens");
  for (int i = 0; i < n; ++i) {
    const Token& t = tokens[i];
    if (t.id != i + 1) {
      throw StructureError(sent_id, "token ids must run 1.." +
                                        std::to_string(n) + ", found " +
                                        std::to_string(t.id));
    }
    if (t.head < 0 || t.head > n) {
      throw StructureError(sent_id, "token " + std::to_string(t.id) +
                                        " has dangling head " +
                                        std::to_string(t.head));
    }
    if (t.head == t.id) {
      throw StructureError(sent_id,
                           "token " + std::to_string(t.id) + " heads itself");
    }
  }
  graph.children_.resize(n);
  for (const Token& t : tokens) {
    if (t.head == 0) {
      if (graph.root_ != 0) {
        throw StructureError(sent_id, "multiple roots (" +
                                          std::to_string(graph.root_) + ", " +
                                          std::to_string(t.id) + ")");
      }
      graph.root_ = t.id;
    } else {
      graph.children_[t.head - 1].push_back(t.id);
    }
  }
  if (graph.root_ == 0) throw StructureError(sent_id, "no root token");
  // Every head chain must reach the root within n steps.
  for (const Token& t : tokens) {
    TokenId cur = t.id;
    int steps = 0;
    while (cur != 0) {
      if (++steps > n) {
        throw StructureError(sent_id, "cyclic head links through token " +
                                          std::to_string(t.id));
      }
      cur = tokens[cur - 1].head;
    }
  }
  if (text.empty()) text = RebuildText(tokens);
  graph.sent_id_ = std::move(sent_id);
  graph.text_ = std::move(text);
  graph.tokens_ = std::move(tokens);
  graph.comments_ = std::move(comments);
  return graph;
}

std::vector<TokenId> SentenceGraph::Dependents(TokenId id) const {
  return children(id);
}

std::vector<TokenId> SentenceGraph::Dependents(
    TokenId id, std::span<const std::string_view> labels) const {
  std::vector<TokenId> out;
  for (TokenId child : children(id)) {
    const std::string& rel = token(child).deprel;
    if (std::any_of(labels.begin(), labels.end(), [&](std::string_view l) {
          return DeprelMatches(rel, l);
        })) {
      out.push_back(child);
    }
  }
  return out;
}

std::vector<TokenId> SentenceGraph::Descendants(TokenId id) const {
  std::vector<TokenId> out;
  std::vector<TokenId> stack = {id};
  while (!stack.empty()) {
    const TokenId cur = stack.back();
    stack.pop_back();
    out.push_back(cur);
    for (TokenId child : children(cur)) stack.push_back(child);
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubtreeYield SentenceGraph::Yield(TokenId id) const {
  const std::vector<TokenId> nodes = Descendants(id);
  SubtreeYield result;
  result.span = {nodes.front(), nodes.back()};
  result.non_projective = result.span.size() != static_cast<int>(nodes.size());
  return result;
}

bool SentenceGraph::IsDescendant(TokenId node, TokenId ancestor) const {
  for (TokenId cur = node; cur != 0; cur = token(cur).head) {
    if (cur == ancestor) return true;
  }
  return false;
}

std::string SentenceGraph::Surface(const TokenSpan& span) const {
  std::string out;
  for (TokenId id = span.first; id <= span.last; ++id) {
    out += token(id).form;
    if (id < span.last && token(id).SpaceAfter()) out.push_back(' ');
  }
  return out;
}

std::optional<TokenSpan> SentenceGraph::TrimPunct(const TokenSpan& span) const {
  TokenSpan out = span;
  while (out.first <= out.last && IsPunct(out.first)) ++out.first;
  while (out.last >= out.first && IsPunct(out.last)) --out.last;
  if (out.first > out.last) return std::nullopt;
  return out;
}

bool SentenceGraph::operator==(const SentenceGraph& other) const {
  return sent_id_ == other.sent_id_ && text_ == other.text_ &&
         tokens_ == other.tokens_ && comments_ == other.comments_;
}

std::vector<SentenceGraph> ParseConllu(std::istream& input) {
  std::vector<SentenceGraph> sentences;
  std::vector<Token> tokens;
  std::vector<std::string> comments;
  std::optional<std::string> sent_id;
  std::optional<std::string> text;

  auto flush = [&]() {
    if (!tokens.empty()) {
      std::string id = sent_id.value_or(
          "s" + std::to_string(sentences.size() + 1));
      sentences.push_back(SentenceGraph::Build(
          std::move(id), text.value_or(""), std::move(tokens),
          std::move(comments)));
    }
    tokens.clear();
    comments.clear();
    sent_id.reset();
    text.reset();
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(input, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (TrimWhitespace(line).empty()) {
      flush();
      continue;
    }
    if (line.front() == '#') {
      const std::string_view body = line.substr(1);
      if (auto v = CommentValue(body, "sent_id")) {
        sent_id = *v;
      } else if (auto t = CommentValue(body, "text")) {
        text = *t;
      } else {
        comments.emplace_back(body);
      }
      continue;
    }
    const auto fields = SplitTabs(line);
    if (fields.size() != 10) {
      throw ConllParseError(line_no, "expected 10 tab-separated columns, found " +
                                         std::to_string(fields.size()));
    }
    const std::string_view id_field = fields[0];
    if (id_field.find('-') != std::string_view::npos ||
        id_field.find('.') != std::string_view::npos) {
      continue;
    }
    const auto id = ParseInt(id_field);
    if (!id) {
      throw ConllParseError(line_no,
                            "non-integer token id '" + std::string(id_field) + "'");
    }
    if (*id != static_cast<int>(tokens.size()) + 1) {
      throw ConllParseError(line_no, "token id " + std::to_string(*id) +
                                         " out of sequence");
    }
    const auto head = ParseInt(fields[6]);
    if (!head) {
      throw ConllParseError(line_no,
                            "non-integer head '" + std::string(fields[6]) + "'");
    }
    Token token;
    token.id = *id;
    token.form = fields[1];
    token.lemma = fields[2];
    token.upos = fields[3];
    token.xpos = fields[4];
    token.feats = fields[5];
    token.head = *head;
    token.deprel = fields[7];
    token.deps = fields[8];
    token.misc = fields[9];
    tokens.push_back(std::move(token));
  }
  flush();
  return sentences;
}

std::vector<SentenceGraph> ParseConllu(std::string_view input) {
  std::istringstream stream{std::string(input)};
  return ParseConllu(stream);
}

std::string WriteConllu(std::span<const SentenceGraph> sentences) {
  std::string out;
  for (const SentenceGraph& g : sentences) {
    out += "# sent_id = " + g.sent_id() + "\n";
    out += "# text = " + g.text() + "\n";
    for (const std::string& c : g.comments()) out += "#" + c + "\n";
    for (const Token& t : g.tokens()) {
      out += std::to_string(t.id) + '\t' + t.form + '\t' + t.lemma + '\t' +
             t.upos + '\t' + t.xpos + '\t' + t.feats + '\t' +
             std::to_string(t.head) + '\t' + t.deprel + '\t' + t.deps + '\t' +
             t.misc + '\n';
    }
    out += '\n';
  }
  return out;
}

std::optional<TokenId> FindRootVerb(const SentenceGraph& graph) {
  const TokenId root = graph.root();
  const std::string& upos = graph.token(root).upos;
  if (upos == "VERB") return root;
  if (upos == "AUX") {
    for (TokenId child : graph.children(root)) {
      if (graph.token(child).upos == "VERB") return child;
    }
  }
  return std::nullopt;
}

TokenId RootVerb(const SentenceGraph& graph) {
  if (auto verb = FindRootVerb(graph)) return *verb;
  throw NoMainVerb(graph.sent_id());
}

}  // namespace itinera
