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

#ifndef ITINERA_LEXICON_H_
#define ITINERA_LEXICON_H_

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace itinera {

// Aspectual polarity of a motion verb.
enum class VerbPolarity { kInitial, kMedian, kFinal };

// Absolute marks a bare toponym carrying no relational marker.
enum class SpatialRelationKind {
  kMetric,
  kOrientation,
  kGeometricFigure,
  kAdjacency,
  kInclusion,
  kAbsolute,
};

// Absolute marks a bare date carrying no relational marker.
enum class TemporalRelationKind { kAdjacency, kInclusion, kDistance, kAbsolute };

enum class UnitDimension { kSpatial, kTemporal };

// Lowercase names as used in the lexicon files and JSON output.
std::string_view ToString(VerbPolarity polarity);
std::string_view ToString(SpatialRelationKind kind);
std::string_view ToString(TemporalRelationKind kind);
std::string_view ToString(UnitDimension dimension);

std::optional<VerbPolarity> ParseVerbPolarity(std::string_view name);
// Accepts "figure" for kGeometricFigure and "absolute".
std::optional<SpatialRelationKind> ParseSpatialKind(std::string_view name);
std::optional<TemporalRelationKind> ParseTemporalKind(std::string_view name);
std::optional<UnitDimension> ParseUnitDimension(std::string_view name);

struct GazetteerEntry {
  std::string name;  // as written in the file
  std::string type;  // optional feature type, may be empty

  bool operator==(const GazetteerEntry&) const = default;
};

// All keys are normalized with NormalizePhrase.
struct LexiconSet {
  std::map<std::string, VerbPolarity> motion_verbs;
  std::map<std::string, SpatialRelationKind> spatial_markers;
  std::map<std::string, TemporalRelationKind> temporal_markers;
  std::map<std::string, GazetteerEntry> gazetteer;
  std::map<std::string, UnitDimension> units;

  bool operator==(const LexiconSet&) const = default;
};

inline constexpr std::string_view kMotionVerbsFile = "motion_verbs.tsv";
inline constexpr std::string_view kSpatialMarkersFile = "spatial_markers.tsv";
inline constexpr std::string_view kTemporalMarkersFile = "temporal_markers.tsv";
inline constexpr std::string_view kGazetteerFile = "gazetteer.tsv";
inline constexpr std::string_view kUnitsFile = "units.tsv";

// The five files in load order.
const std::vector<std::string_view>& LexiconFileNames();

// Carries every problem found while loading, one message per entry.
class LexiconError : public std::runtime_error {
 public:
  explicit LexiconError(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

LexiconSet LoadLexicons(const std::filesystem::path& dir);

// Writes the five files in a canonical sorted form; loading them back yields
// an equal LexiconSet.
void SaveLexicons(const LexiconSet& lexicons, const std::filesystem::path& dir);

std::optional<VerbPolarity> MotionPolarity(const LexiconSet& lexicons,
                                           std::string_view lemma);

struct ValidationIssue {
  enum class Severity { kError, kWarning, kNotice };
  Severity severity = Severity::kNotice;
  std::string message;

  bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  std::map<std::string, size_t> counts;  // entries per file

  size_t CountOf(ValidationIssue::Severity severity) const;
  bool ok() const { return CountOf(ValidationIssue::Severity::kError) == 0; }
  std::string ToText() const;
};

ValidationReport ValidateLexicons(const LexiconSet& lexicons);

}  // namespace itinera

#endif  // ITINERA_LEXICON_H_
