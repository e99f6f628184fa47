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

#include "itinera/itinerary.h"

#include <set>

#include "itinera/text.h"

namespace itinera {

namespace {

enum class Place { kOrigin, kIntermediate, kDestination };

// Preposition roles, keyed by normalized lemma sequence.
std::optional<Place> PlaceOfRole(const std::string& role) {
  static const std::set<std::string> kOrigin = {"de", "depuis", "à partir de",
                                                "hors de"};
  static const std::set<std::string> kIntermediate = {"par", "via",
                                                      "à travers"};
  static const std::set<std::string> kDestination = {
      "vers", "pour", "à", "jusque à", "jusqu à", "jusque"};
  if (kOrigin.count(role) != 0) return Place::kOrigin;
  if (kIntermediate.count(role) != 0) return Place::kIntermediate;
  if (kDestination.count(role) != 0) return Place::kDestination;
  return std::nullopt;
}

Place PolarityDefault(VerbPolarity polarity) {
  switch (polarity) {
    case VerbPolarity::kInitial:
      return Place::kOrigin;
    case VerbPolarity::kMedian:
      return Place::kIntermediate;
    case VerbPolarity::kFinal:
      return Place::kDestination;
  }
  return Place::kIntermediate;
}

bool IsUnmarked(const std::string& role) {
  return role == "obj" || role == "iobj";
}

}  // namespace

RoleAssignment AssignRoles(VerbPolarity polarity,
                           const std::vector<SpatialArgument>& arguments) {
  RoleAssignment out;
  for (const SpatialArgument& arg : arguments) {
    if (arg.entities.empty()) continue;
    auto place = PlaceOfRole(NormalizePhrase(arg.role));
    if (!place) {
      if (!IsUnmarked(arg.role)) out.unmapped_roles.push_back(arg.role);
      place = PolarityDefault(polarity);
    }
    auto& target = *place == Place::kOrigin         ? out.origin
                   : *place == Place::kIntermediate ? out.intermediate
                                                    : out.destination;
    target.insert(target.end(), arg.entities.begin(), arg.entities.end());
  }
  return out;
}

std::optional<ItineraryRelation> DetectDisplacement(
    const NaryRelation& relation, const SentenceGraph& graph,
    const LexiconSet& lexicons, const RecognizerOptions& options,
    std::size_t index) {
  const auto polarity = MotionPolarity(lexicons, relation.predicate_lemma);
  if (!polarity) return std::nullopt;

  ItineraryRelation out;
  out.verb_lemma = relation.predicate_lemma;
  out.polarity = *polarity;
  out.source_nary = index;
  out.sent_id = relation.sent_id;

  std::vector<SpatialArgument> spatial;
  for (const Argument& arg : relation.arguments) {
    if (arg.role == "subj") {
      if (!out.actor) out.actor = arg;
      continue;
    }
    // Clausal arguments (reason, detail, ...) carry their own predication.
    const std::string& upos = graph.token(arg.pivot).upos;
    if (upos == "VERB" || upos == "AUX") continue;

    TokenSpan window = arg.span;
    if (arg.marker_span) {
      window.first = std::min(window.first, arg.marker_span->first);
    }
    auto entities = RecognizeSpatial(graph, window, lexicons, options);
    if (!entities.empty()) spatial.push_back({arg.role, std::move(entities)});
    auto times = RecognizeTemporal(graph, window, lexicons);
    out.temporal.insert(out.temporal.end(), times.begin(), times.end());
  }
  // Polysemy filter: no spatial entity, no displacement.
  if (spatial.empty()) return std::nullopt;

  RoleAssignment roles = AssignRoles(*polarity, spatial);
  out.origin = std::move(roles.origin);
  out.intermediate = std::move(roles.intermediate);
  out.destination = std::move(roles.destination);
  out.unmapped_roles = std::move(roles.unmapped_roles);
  return out;
}

SentenceAnalysis AnalyzeSentence(const SentenceGraph& graph,
                                 const LexiconSet& lexicons,
                                 const RecognizerOptions& options) {
  SentenceAnalysis analysis;
  analysis.sent_id = graph.sent_id();
  analysis.text = graph.text();
  if (!FindRootVerb(graph)) {
    analysis.skips.push_back({graph.sent_id(), "no main verb"});
    return analysis;
  }
  analysis.nary = ExtractNary(graph, lexicons);
  // One displacement per verb even when several use cases matched it.
  std::set<TokenId> seen;
  for (std::size_t i = 0; i < analysis.nary.size(); ++i) {
    const NaryRelation& relation = analysis.nary[i];
    if (seen.count(relation.predicate_token) != 0) continue;
    if (auto itinerary =
            DetectDisplacement(relation, graph, lexicons, options, i)) {
      seen.insert(relation.predicate_token);
      analysis.itineraries.push_back(std::move(*itinerary));
    }
  }
  return analysis;
}

CorpusItineraries ExtractItineraries(const std::vector<SentenceGraph>& corpus,
                                     const LexiconSet& lexicons,
                                     const RecognizerOptions& options) {
  CorpusItineraries out;
  for (const SentenceGraph& graph : corpus) {
    try {
      SentenceAnalysis analysis = AnalyzeSentence(graph, lexicons, options);
      for (auto& r : analysis.itineraries) out.relations.push_back(std::move(r));
      for (auto& s : analysis.skips) out.skips.push_back(std::move(s));
    } catch (const std::exception& e) {
      out.skips.push_back({graph.sent_id(), e.what()});
    }
  }
  return out;
}

}  // namespace itinera
