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

#ifndef ITINERA_NARY_H_
#define ITINERA_NARY_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "itinera/depgraph.h"
#include "itinera/lexicon.h"

namespace itinera {

// W3C n-ary relation use cases.
enum class UseCaseKind {
  kAdditionalInfo,      // UC1: extra information on a subject-object link
  kObjectDetail,        // UC2: extra information describing the object
  kNoPrimaryArgument,   // UC3: several arguments, none primary
  kOrderedList,         // UC4: ordered list of arguments
};

std::string_view ToString(UseCaseKind kind);
std::optional<UseCaseKind> ParseUseCaseKind(std::string_view name);

struct Argument {
  TokenSpan span;
  std::string text;
  // "subj", "obj", "iobj", the governing preposition ("pour", "près de"), a
  // clause role ("reason", "purpose", "means", "detail") or "item".
  std::string role;
  TokenId pivot = 0;
  std::optional<int> order;  // 1-based position in an ordered list
  // Case-marker tokens stripped from the front of the argument.
  std::optional<TokenSpan> marker_span;
  bool non_projective = false;

  bool operator==(const Argument&) const = default;
  auto operator<=>(const Argument&) const = default;
};

struct NaryRelation {
  UseCaseKind use_case = UseCaseKind::kNoPrimaryArgument;
  std::string predicate_lemma;
  TokenId predicate_token = 0;
  std::vector<Argument> arguments;
  std::string sent_id;

  // Use case, predicate and argument multiset; argument order and sent_id do
  // not take part.
  bool operator==(const NaryRelation& other) const;
};

// Every use case whose pattern matches at the main verb, in enum order.
// Empty when the sentence has no main verb.
std::vector<UseCaseKind> IdentifyUseCases(const SentenceGraph& graph,
                                          const LexiconSet& lexicons);
std::vector<UseCaseKind> IdentifyUseCasesFor(const SentenceGraph& graph,
                                             TokenId verb);

// The main verb, its subject head, its object heads and, for each oblique
// complement, the complement head and its case markers; in surface order.
// Throws NoMainVerb.
std::vector<TokenId> PivotTokens(const SentenceGraph& graph);
std::vector<TokenId> PivotTokensFor(const SentenceGraph& graph, TokenId verb);

// One argument per nominal pivot, plus the ordered items of an enumeration
// hanging off an object.
std::vector<Argument> ExtractArguments(const SentenceGraph& graph,
                                       const std::vector<TokenId>& pivots);

// The root verb followed by the verbs coordinated with it.
std::vector<TokenId> MainVerbs(const SentenceGraph& graph);

std::vector<NaryRelation> ExtractNary(const SentenceGraph& graph,
                                      const LexiconSet& lexicons);

}  // namespace itinera

#endif  // ITINERA_NARY_H_
