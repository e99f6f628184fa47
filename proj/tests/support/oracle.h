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


// Brute-force reference for argument extraction. It works directly on the
// token table: ancestry is decided by climbing head links, never through
// SentenceGraph traversal, so it shares no code path with the library.

#ifndef ITINERA_TESTS_SUPPORT_ORACLE_H_
#define ITINERA_TESTS_SUPPORT_ORACLE_H_

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "itinera/depgraph.h"

namespace itinera::testing {

// True iff `ancestor` is `node` or lies on its head chain.
bool Dominates(const std::vector<Token>& tokens, TokenId ancestor,
               TokenId node);

// All ids dominated by `head`, found by testing every token.
std::set<TokenId> BruteSubtree(const std::vector<Token>& tokens, TokenId head);

// Main verb: a VERB root, or the first VERB dependent of a non-verbal root.
std::optional<TokenId> OracleMainVerb(const std::vector<Token>& tokens);

struct OracleArgument {
  TokenSpan span;
  std::string role;
  auto operator<=>(const OracleArgument&) const = default;
};

// Arguments of the main verb: every nsubj/obj/iobj/obl dependent that is not
// itself a clause, its subtree minus case-marker subtrees, edge punctuation
// removed, role = grammatical function or lowercased case-marker lemmas.
std::multiset<OracleArgument> OracleArguments(const std::vector<Token>& tokens);

}  // namespace itinera::testing

#endif  // ITINERA_TESTS_SUPPORT_ORACLE_H_
