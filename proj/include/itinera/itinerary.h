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

#ifndef ITINERA_ITINERARY_H_
#define ITINERA_ITINERARY_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "itinera/depgraph.h"
#include "itinera/entities.h"
#include "itinera/lexicon.h"
#include "itinera/nary.h"

namespace itinera {

// A displacement: motion verb, actor, spatial entities split by their place in
// the trip, and the temporal entities that date it.
struct ItineraryRelation {
  std::string verb_lemma;
  VerbPolarity polarity = VerbPolarity::kInitial;
  std::optional<Argument> actor;
  std::vector<SpatialEntity> origin;
  std::vector<SpatialEntity> intermediate;
  std::vector<SpatialEntity> destination;
  std::vector<TemporalEntity> temporal;
  // Index of the source relation in ExtractNary's output for the sentence.
  std::size_t source_nary = 0;
  std::string sent_id;
  // Roles of ES-bearing arguments placed by the polarity default because the
  // preposition is not a known origin/path/destination marker.
  std::vector<std::string> unmapped_roles;

  bool operator==(const ItineraryRelation&) const = default;
};

// An argument with the spatial entities recognized inside it.
struct SpatialArgument {
  std::string role;
  std::vector<SpatialEntity> entities;
};

struct RoleAssignment {
  std::vector<SpatialEntity> origin;
  std::vector<SpatialEntity> intermediate;
  std::vector<SpatialEntity> destination;
  std::vector<std::string> unmapped_roles;
};

// Prepositions decide first (de/depuis -> origin, par -> intermediate,
// vers/pour/à/jusqu'à -> destination); unmarked arguments and unknown
// prepositions fall back to the verb polarity.
RoleAssignment AssignRoles(VerbPolarity polarity,
                           const std::vector<SpatialArgument>& arguments);

// Present iff the predicate is a motion verb and at least one non-subject
// argument holds a spatial entity. `index` is stored as source_nary.
std::optional<ItineraryRelation> DetectDisplacement(
    const NaryRelation& relation, const SentenceGraph& graph,
    const LexiconSet& lexicons, const RecognizerOptions& options = {},
    std::size_t index = 0);

struct SentenceSkip {
  std::string sent_id;
  std::string reason;

  bool operator==(const SentenceSkip&) const = default;
};

// Per-sentence analysis used by the corpus driver and the document builder.
struct SentenceAnalysis {
  std::string sent_id;
  std::string text;
  std::vector<NaryRelation> nary;
  std::vector<ItineraryRelation> itineraries;
  std::vector<SentenceSkip> skips;
};

SentenceAnalysis AnalyzeSentence(const SentenceGraph& graph,
                                 const LexiconSet& lexicons,
                                 const RecognizerOptions& options = {});

struct CorpusItineraries {
  std::vector<ItineraryRelation> relations;
  std::vector<SentenceSkip> skips;
};

// Sentence by sentence, in input order.
CorpusItineraries ExtractItineraries(const std::vector<SentenceGraph>& corpus,
                                     const LexiconSet& lexicons,
                                     const RecognizerOptions& options = {});

}  // namespace itinera

#endif  // ITINERA_ITINERARY_H_
