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

#ifndef ITINERA_ENTITIES_H_
#define ITINERA_ENTITIES_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "itinera/depgraph.h"
#include "itinera/lexicon.h"

namespace itinera {

struct Magnitude {
  double value = 0;
  std::string unit;  // unit lemma

  bool operator==(const Magnitude&) const = default;
};

// A spatial entity (ES): a toponym, optionally under a spatial relation.
struct SpatialEntity {
  TokenSpan span;
  std::string text;
  SpatialRelationKind kind = SpatialRelationKind::kAbsolute;
  std::string marker;  // matched marker key, empty for kAbsolute
  std::vector<std::string> anchors;
  std::vector<TokenSpan> anchor_spans;
  std::optional<Magnitude> magnitude;  // kMetric
  std::optional<std::string> direction;  // kOrientation
  // Set when an anchor was accepted from its PROPN tag alone.
  bool loose_match = false;

  bool operator==(const SpatialEntity&) const = default;
};

// A temporal entity (ET).
struct TemporalEntity {
  TokenSpan span;
  std::string text;
  TemporalRelationKind kind = TemporalRelationKind::kAbsolute;
  std::string marker;
  std::optional<Magnitude> magnitude;  // kDistance
  // Case-folded surface of the span without the marker tokens.
  std::string anchor_text;

  bool operator==(const TemporalEntity&) const = default;
};

struct RecognizerOptions {
  // Also accept capitalized PROPN tokens missing from the gazetteer.
  bool loose_toponyms = false;
};

class NotAMarker : public std::invalid_argument {
 public:
  explicit NotAMarker(std::string_view marker);
};

// Maximal non-overlapping spatial entities inside `within`, in surface order.
std::vector<SpatialEntity> RecognizeSpatial(const SentenceGraph& graph,
                                            const TokenSpan& within,
                                            const LexiconSet& lexicons,
                                            const RecognizerOptions& options = {});

std::vector<TemporalEntity> RecognizeTemporal(const SentenceGraph& graph,
                                              const TokenSpan& within,
                                              const LexiconSet& lexicons);

// `marker` is normalized before lookup. Throws NotAMarker.
SpatialRelationKind ClassifySpatialMarker(std::string_view marker,
                                          const LexiconSet& lexicons);
TemporalRelationKind ClassifyTemporalMarker(std::string_view marker,
                                            const LexiconSet& lexicons);

}  // namespace itinera

#endif  // ITINERA_ENTITIES_H_
