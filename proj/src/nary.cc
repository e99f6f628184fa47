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

#include "itinera/nary.h"

#include <algorithm>
#include <map>
#include <set>

#include "itinera/text.h"

namespace itinera {

namespace {

// Subordinators introducing a UC1 adverbial clause, with the role they give.
const std::map<std::string, std::string>& ClauseMarkers() {
  static const std::map<std::string, std::string> markers = {
      {"parce que", "reason"}, {"puisque", "reason"},   {"car", "reason"},
      {"afin de", "purpose"},  {"afin que", "purpose"}, {"pour que", "purpose"},
      {"pour", "purpose"},     {"en", "means"},
  };
  return markers;
}

// Words that open an enumeration attached to an object (UC4).
const std::set<std::string>& ListMarkers() {
  static const std::set<std::string> markers = {
      "comme", "tel que", "tels que", "telle que", "telles que",
      "notamment", "à savoir"};
  return markers;
}

std::string LemmaWords(const Token& token) {
  const std::string& text =
      (token.lemma.empty() || token.lemma == "_") ? token.form : token.lemma;
  return NormalizePhrase(text);
}

// Lemmas of the given function-word children and their fixed parts.
std::string MarkerPhrase(const SentenceGraph& g,
                         const std::vector<TokenId>& markers) {
  std::vector<std::string> words;
  std::vector<TokenId> ids;
  for (TokenId m : markers) {
    for (TokenId d : g.Descendants(m)) ids.push_back(d);
  }
  std::sort(ids.begin(), ids.end());
  for (TokenId id : ids) {
    const std::string w = LemmaWords(g.token(id));
    if (!w.empty()) words.push_back(w);
  }
  return JoinWords(words);
}

struct Extent {
  TokenSpan span;
  bool non_projective = false;
  std::optional<TokenSpan> marker_span;
};

// Covering span of `head`'s subtree minus the subtrees under `excluded`, with
// punctuation trimmed off both edges.
std::optional<Extent> ExtentOf(const SentenceGraph& g, TokenId head,
                               const std::vector<TokenId>& excluded,
                               const std::vector<TokenId>& markers = {}) {
  std::set<TokenId> removed;
  for (TokenId e : excluded) {
    for (TokenId d : g.Descendants(e)) removed.insert(d);
  }
  std::vector<TokenId> kept;
  for (TokenId d : g.Descendants(head)) {
    if (removed.count(d) == 0) kept.push_back(d);
  }
  while (!kept.empty() && g.IsPunct(kept.front())) kept.erase(kept.begin());
  while (!kept.empty() && g.IsPunct(kept.back())) kept.pop_back();
  if (kept.empty()) return std::nullopt;
  Extent extent;
  extent.span = {kept.front(), kept.back()};
  extent.non_projective = extent.span.size() != static_cast<int>(kept.size());
  std::vector<TokenId> marker_ids;
  for (TokenId m : markers) {
    for (TokenId d : g.Descendants(m)) marker_ids.push_back(d);
  }
  if (!marker_ids.empty()) {
    const auto [lo, hi] =
        std::minmax_element(marker_ids.begin(), marker_ids.end());
    extent.marker_span = TokenSpan{*lo, *hi};
  }
  return extent;
}

std::optional<Argument> MakeArgument(const SentenceGraph& g, TokenId pivot,
                                     std::string role,
                                     const std::vector<TokenId>& excluded,
                                     const std::vector<TokenId>& markers) {
  auto extent = ExtentOf(g, pivot, excluded, markers);
  if (!extent) return std::nullopt;
  Argument arg;
  arg.span = extent->span;
  arg.text = g.Surface(arg.span);
  arg.role = std::move(role);
  arg.pivot = pivot;
  arg.marker_span = extent->marker_span;
  arg.non_projective = extent->non_projective;
  return arg;
}

std::string GrammaticalRole(const SentenceGraph& g, TokenId pivot) {
  const std::string& rel = g.token(pivot).deprel;
  if (DeprelMatches(rel, "nsubj")) return "subj";
  if (DeprelMatches(rel, "obj")) return "obj";
  if (DeprelMatches(rel, "iobj")) return "iobj";
  const auto cases = g.Dependents(pivot, {"case"});
  if (!cases.empty()) return MarkerPhrase(g, cases);
  return rel;
}

// The child of `object` that opens a list ("comme la tour Eiffel, ..."),
// provided the list has at least two items.
std::optional<TokenId> Enumeration(const SentenceGraph& g, TokenId object) {
  for (TokenId child : g.children(object)) {
    const std::string& rel = g.token(child).deprel;
    if (DeprelMatches(rel, "case") || DeprelMatches(rel, "det") ||
        DeprelMatches(rel, "punct")) {
      continue;
    }
    const auto markers = g.Dependents(child, {"case", "mark", "advmod"});
    if (markers.empty()) continue;
    if (ListMarkers().count(MarkerPhrase(g, markers)) == 0) continue;
    if (g.Dependents(child, {"conj"}).empty()) continue;
    return child;
  }
  return std::nullopt;
}

struct Clause {
  TokenId head = 0;
  std::string role;
  std::vector<TokenId> markers;
};

// Causal, purpose or means clause attached to `verb` (UC1).
std::optional<Clause> AdverbialClause(const SentenceGraph& g, TokenId verb) {
  for (TokenId child : g.children(verb)) {
    const Token& token = g.token(child);
    std::vector<TokenId> markers;
    if (DeprelMatches(token.deprel, "advcl")) {
      markers = g.Dependents(child, {"mark"});
    } else if (DeprelMatches(token.deprel, "conj")) {
      for (TokenId cc : g.Dependents(child, {"cc"})) {
        if (LemmaWords(g.token(cc)) == "car") markers.push_back(cc);
      }
    }
    if (markers.empty()) continue;
    const std::string phrase = MarkerPhrase(g, markers);
    const auto it = ClauseMarkers().find(phrase);
    if (it == ClauseMarkers().end()) continue;
    if (phrase == "pour" && token.upos != "VERB") continue;
    return Clause{child, it->second, markers};
  }
  return std::nullopt;
}

bool IsCarClause(const SentenceGraph& g, TokenId conj) {
  for (TokenId cc : g.Dependents(conj, {"cc"})) {
    if (LemmaWords(g.token(cc)) == "car") return true;
  }
  return false;
}

std::optional<TokenId> RelativeClause(const SentenceGraph& g, TokenId object) {
  for (TokenId child : g.children(object)) {
    if (g.token(child).deprel == "acl:relcl") return child;
  }
  return std::nullopt;
}

int CountPrepositionalComplements(const SentenceGraph& g, TokenId verb) {
  int count = 0;
  for (TokenId obl : g.Dependents(verb, {"obl"})) {
    if (!g.Dependents(obl, {"case"}).empty()) ++count;
  }
  return count;
}

std::vector<TokenId> Objects(const SentenceGraph& g, TokenId verb) {
  return g.Dependents(verb, {"obj"});
}

}  // namespace

std::string_view ToString(UseCaseKind kind) {
  switch (kind) {
    case UseCaseKind::kAdditionalInfo:
      return "UC1_AdditionalInfo";
    case UseCaseKind::kObjectDetail:
      return "UC2_ObjectDetail";
    case UseCaseKind::kNoPrimaryArgument:
      return "UC3_NoPrimaryArgument";
    case UseCaseKind::kOrderedList:
      return "UC4_OrderedList";
  }
  return "";
}

std::optional<UseCaseKind> ParseUseCaseKind(std::string_view name) {
  for (auto k : {UseCaseKind::kAdditionalInfo, UseCaseKind::kObjectDetail,
                 UseCaseKind::kNoPrimaryArgument, UseCaseKind::kOrderedList}) {
    if (ToString(k) == name) return k;
  }
  return std::nullopt;
}

bool NaryRelation::operator==(const NaryRelation& other) const {
  if (use_case != other.use_case || predicate_lemma != other.predicate_lemma ||
      predicate_token != other.predicate_token ||
      arguments.size() != other.arguments.size()) {
    return false;
  }
  auto mine = arguments;
  auto theirs = other.arguments;
  std::sort(mine.begin(), mine.end());
  std::sort(theirs.begin(), theirs.end());
  return mine == theirs;
}

std::vector<TokenId> MainVerbs(const SentenceGraph& graph) {
  const auto root = FindRootVerb(graph);
  if (!root) return {};
  std::vector<TokenId> verbs = {*root};
  for (TokenId conj : graph.Dependents(*root, {"conj"})) {
    if (graph.token(conj).upos == "VERB" && !IsCarClause(graph, conj)) {
      verbs.push_back(conj);
    }
  }
  return verbs;
}

std::vector<UseCaseKind> IdentifyUseCasesFor(const SentenceGraph& g,
                                             TokenId verb) {
  std::vector<UseCaseKind> out;
  if (AdverbialClause(g, verb)) out.push_back(UseCaseKind::kAdditionalInfo);
  const auto objects = Objects(g, verb);
  if (std::any_of(objects.begin(), objects.end(), [&](TokenId o) {
        return RelativeClause(g, o).has_value();
      })) {
    out.push_back(UseCaseKind::kObjectDetail);
  }
  if (CountPrepositionalComplements(g, verb) >= 2) {
    out.push_back(UseCaseKind::kNoPrimaryArgument);
  }
  if (std::any_of(objects.begin(), objects.end(), [&](TokenId o) {
        return Enumeration(g, o).has_value();
      })) {
    out.push_back(UseCaseKind::kOrderedList);
  }
  return out;
}

std::vector<UseCaseKind> IdentifyUseCases(const SentenceGraph& graph,
                                          const LexiconSet& /*lexicons*/) {
  const auto verb = FindRootVerb(graph);
  if (!verb) return {};
  return IdentifyUseCasesFor(graph, *verb);
}

std::vector<TokenId> PivotTokensFor(const SentenceGraph& g, TokenId verb) {
  std::set<TokenId> pivots = {verb};
  auto subjects = g.Dependents(verb, {"nsubj"});
  if (subjects.empty() && DeprelMatches(g.token(verb).deprel, "conj")) {
    // Coordinated verbs share the subject of the first conjunct.
    subjects = g.Dependents(g.token(verb).head, {"nsubj"});
  }
  pivots.insert(subjects.begin(), subjects.end());
  for (TokenId o : g.Dependents(verb, {"obj", "iobj"})) pivots.insert(o);
  for (TokenId obl : g.Dependents(verb, {"obl"})) {
    pivots.insert(obl);
    for (TokenId c : g.Dependents(obl, {"case"})) pivots.insert(c);
  }
  return {pivots.begin(), pivots.end()};
}

std::vector<TokenId> PivotTokens(const SentenceGraph& graph) {
  return PivotTokensFor(graph, RootVerb(graph));
}

std::vector<Argument> ExtractArguments(const SentenceGraph& g,
                                       const std::vector<TokenId>& pivots) {
  std::vector<Argument> out;
  for (TokenId pivot : pivots) {
    const Token& token = g.token(pivot);
    if (DeprelMatches(token.deprel, "case") ||
        DeprelMatches(token.deprel, "fixed") || token.upos == "VERB" ||
        token.upos == "AUX") {
      continue;
    }
    const auto cases = g.Dependents(pivot, {"case"});
    std::vector<TokenId> excluded = cases;
    std::optional<TokenId> list;
    if (DeprelMatches(token.deprel, "obj")) list = Enumeration(g, pivot);
    if (list) excluded.push_back(*list);

    auto arg = MakeArgument(g, pivot, GrammaticalRole(g, pivot), excluded, cases);
    if (!arg) continue;
    out.push_back(std::move(*arg));
    if (!list) continue;

    // Ordered items: the first conjunct, then each coordinated one.
    std::vector<TokenId> items = {*list};
    const auto conjuncts = g.Dependents(*list, {"conj"});
    items.insert(items.end(), conjuncts.begin(), conjuncts.end());
    int order = 0;
    for (TokenId item : items) {
      std::vector<TokenId> drop = g.Dependents(item, {"case", "cc", "punct"});
      if (item == *list) {
        drop.insert(drop.end(), conjuncts.begin(), conjuncts.end());
        for (TokenId m : g.Dependents(item, {"mark", "advmod"})) {
          drop.push_back(m);
        }
      }
      auto entry = MakeArgument(g, item, "item", drop, {});
      if (!entry) continue;
      entry->order = ++order;
      out.push_back(std::move(*entry));
    }
  }
  return out;
}

std::vector<NaryRelation> ExtractNary(const SentenceGraph& g,
                                      const LexiconSet& lexicons) {
  (void)lexicons;
  std::vector<NaryRelation> out;
  for (TokenId verb : MainVerbs(g)) {
    const auto use_cases = IdentifyUseCasesFor(g, verb);
    if (use_cases.empty()) continue;
    const auto base = ExtractArguments(g, PivotTokensFor(g, verb));
    for (UseCaseKind use_case : use_cases) {
      NaryRelation relation;
      relation.use_case = use_case;
      relation.predicate_lemma = LemmaWords(g.token(verb));
      relation.predicate_token = verb;
      relation.arguments = base;
      relation.sent_id = g.sent_id();

      if (use_case == UseCaseKind::kAdditionalInfo) {
        const Clause clause = *AdverbialClause(g, verb);
        if (auto arg = MakeArgument(g, clause.head, clause.role,
                                    clause.markers, clause.markers)) {
          relation.arguments.push_back(std::move(*arg));
        }
      } else if (use_case == UseCaseKind::kObjectDetail) {
        for (TokenId object : Objects(g, verb)) {
          const auto relative = RelativeClause(g, object);
          if (!relative) continue;
          for (Argument& arg : relation.arguments) {
            if (arg.pivot != object) continue;
            std::vector<TokenId> excluded = g.Dependents(object, {"case"});
            excluded.push_back(*relative);
            if (auto narrowed = MakeArgument(g, object, arg.role, excluded,
                                             g.Dependents(object, {"case"}))) {
              arg = std::move(*narrowed);
            }
          }
          if (auto detail = MakeArgument(g, *relative, "detail", {}, {})) {
            relation.arguments.push_back(std::move(*detail));
          }
          break;
        }
      } else if (use_case == UseCaseKind::kNoPrimaryArgument &&
                 relation.arguments.size() < 3) {
        continue;
      }

      std::stable_sort(relation.arguments.begin(), relation.arguments.end(),
                       [](const Argument& a, const Argument& b) {
                         return a.span.first < b.span.first;
                       });
      if (std::find(out.begin(), out.end(), relation) == out.end()) {
        out.push_back(std::move(relation));
      }
    }
  }
  return out;
}

}  // namespace itinera
