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


#include "oracle.h"

#include <algorithm>

namespace itinera::testing {

namespace {

const Token& At(const std::vector<Token>& tokens, TokenId id) {
  return tokens[static_cast<size_t>(id - 1)];
}

std::string Universal(const std::string& deprel) {
  return deprel.substr(0, deprel.find(':'));
}

// Lowercases ASCII and the two-byte Latin-1 capitals; the corpora need no more.
std::string Lower(std::string s) {
  for (size_t i = 0; i < s.size(); ++i) {
    const unsigned char c = s[i];
    if (c >= 'A' && c <= 'Z') {
      s[i] = static_cast<char>(c + 32);
    } else if (c == 0xC3 && i + 1 < s.size()) {
      const unsigned char d = s[i + 1];
      if (d >= 0x80 && d <= 0x9E && d != 0x97) s[i + 1] = static_cast<char>(d + 32);
      ++i;
    }
  }
  return s;
}

}  // namespace

bool Dominates(const std::vector<Token>& tokens, TokenId ancestor,
               TokenId node) {
  TokenId current = node;
  for (size_t steps = 0; current != 0 && steps <= tokens.size(); ++steps) {
    if (current == ancestor) return true;
    current = At(tokens, current).head;
  }
  return false;
}

std::set<TokenId> BruteSubtree(const std::vector<Token>& tokens, TokenId head) {
  std::set<TokenId> out;
  for (const Token& t : tokens) {
    if (Dominates(tokens, head, t.id)) out.insert(t.id);
  }
  return out;
}

std::optional<TokenId> OracleMainVerb(const std::vector<Token>& tokens) {
  for (const Token& t : tokens) {
    if (t.head != 0) continue;
    if (t.upos == "VERB") return t.id;
    for (const Token& c : tokens) {
      if (c.head == t.id && c.upos == "VERB") return c.id;
    }
    return std::nullopt;
  }
  return std::nullopt;
}

std::multiset<OracleArgument> OracleArguments(
    const std::vector<Token>& tokens) {
  std::multiset<OracleArgument> out;
  const auto verb = OracleMainVerb(tokens);
  if (!verb) return out;
  for (const Token& dep : tokens) {
    if (dep.head != *verb || dep.upos == "VERB") continue;
    const std::string fn = Universal(dep.deprel);
    if (fn != "nsubj" && fn != "obj" && fn != "iobj" && fn != "obl") continue;

    std::set<TokenId> members = BruteSubtree(tokens, dep.id);
    std::vector<TokenId> case_ids;
    for (const Token& c : tokens) {
      if (c.head == dep.id && Universal(c.deprel) == "case") {
        for (TokenId m : BruteSubtree(tokens, c.id)) {
          members.erase(m);
          case_ids.push_back(m);
        }
      }
    }
    std::vector<TokenId> kept(members.begin(), members.end());
    while (!kept.empty() && At(tokens, kept.front()).upos == "PUNCT") {
      kept.erase(kept.begin());
    }
    while (!kept.empty() && At(tokens, kept.back()).upos == "PUNCT") {
      kept.pop_back();
    }
    if (kept.empty()) continue;

    std::string role;
    if (fn == "nsubj") {
      role = "subj";
    } else if (fn == "obj" || fn == "iobj") {
      role = fn;
    } else if (!case_ids.empty()) {
      std::sort(case_ids.begin(), case_ids.end());
      for (TokenId c : case_ids) {
        std::string lemma = Lower(At(tokens, c).lemma);
        std::replace(lemma.begin(), lemma.end(), '\'', ' ');
        if (!role.empty()) role += ' ';
        role += lemma;
      }
    } else {
      role = dep.deprel;
    }
    out.insert({TokenSpan{kept.front(), kept.back()}, role});
  }
  return out;
}

}  // namespace itinera::testing
