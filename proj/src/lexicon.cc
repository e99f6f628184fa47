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

#include "itinera/lexicon.h"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "itinera/text.h"

namespace itinera {

namespace {

struct Row {
  int line = 0;
  std::string raw_key;
  std::string key;
  std::string value;
};

// Reads non-comment rows of a two-column TSV. The value column may be absent
// when `value_optional` is set.
std::vector<Row> ReadRows(const std::filesystem::path& path,
                          std::string_view file, bool value_optional,
                          std::vector<std::string>* problems) {
  std::vector<Row> rows;
  std::ifstream in(path);
  if (!in) {
    problems->push_back(std::string(file) + ": missing");
    return rows;
  }
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (TrimWhitespace(line).empty() || TrimWhitespace(line).front() == '#') {
      continue;
    }
    const size_t tab = line.find('\t');
    Row row;
    row.line = line_no;
    row.raw_key = TrimWhitespace(line.substr(0, tab));
    row.key = NormalizePhrase(row.raw_key);
    if (tab != std::string_view::npos) {
      row.value = std::string(TrimWhitespace(line.substr(tab + 1)));
    }
    const std::string where = std::string(file) + ":" + std::to_string(line_no);
    if (row.key.empty()) {
      problems->push_back(where + ": empty key");
      continue;
    }
    if (row.value.empty() && !value_optional) {
      problems->push_back(where + ": missing value for '" + row.key + "'");
      continue;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

// Inserts rows through `parse`, reporting unknown values and conflicting
// duplicates with both line numbers.
template <typename Value, typename Parse>
std::map<std::string, Value> BuildMap(const std::vector<Row>& rows,
                                      std::string_view file, Parse parse,
                                      std::vector<std::string>* problems) {
  std::map<std::string, Value> out;
  std::map<std::string, int> first_line;
  for (const Row& row : rows) {
    const std::string where =
        std::string(file) + ":" + std::to_string(row.line);
    const std::optional<Value> value = parse(row.value);
    if (!value) {
      problems->push_back(where + ": unknown value '" + row.value + "' for '" +
                          row.key + "'");
      continue;
    }
    auto [it, inserted] = out.emplace(row.key, *value);
    if (inserted) {
      first_line[row.key] = row.line;
    } else if (!(it->second == *value)) {
      problems->push_back(where + ": '" + row.key +
                          "' conflicts with line " +
                          std::to_string(first_line[row.key]));
    }
  }
  return out;
}

bool ContainsSubsequence(const std::vector<std::string>& haystack,
                         const std::vector<std::string>& needle) {
  if (needle.empty() || needle.size() >= haystack.size()) return false;
  return std::search(haystack.begin(), haystack.end(), needle.begin(),
                     needle.end()) != haystack.end();
}

template <typename Map>
void ReportContainedMarkers(const Map& markers, std::string_view file,
                            ValidationReport* report) {
  for (const auto& [outer, unused_outer] : markers) {
    const auto outer_words = SplitWords(outer);
    for (const auto& [inner, unused_inner] : markers) {
      if (ContainsSubsequence(outer_words, SplitWords(inner))) {
        report->issues.push_back(
            {ValidationIssue::Severity::kNotice,
             std::string(file) + ": marker '" + inner + "' is contained in '" +
                 outer + "'; the longest match wins"});
      }
    }
  }
}

bool IsSlot(std::string_view word) {
  return word == "<num>" || word == "<unit>";
}

}  // namespace

std::string_view ToString(VerbPolarity polarity) {
  switch (polarity) {
    case VerbPolarity::kInitial:
      return "initial";
    case VerbPolarity::kMedian:
      return "median";
    case VerbPolarity::kFinal:
      return "final";
  }
  return "";
}

std::string_view ToString(SpatialRelationKind kind) {
  switch (kind) {
    case SpatialRelationKind::kMetric:
      return "metric";
    case SpatialRelationKind::kOrientation:
      return "orientation";
    case SpatialRelationKind::kGeometricFigure:
      return "figure";
    case SpatialRelationKind::kAdjacency:
      return "adjacency";
    case SpatialRelationKind::kInclusion:
      return "inclusion";
    case SpatialRelationKind::kAbsolute:
      return "absolute";
  }
  return "";
}

std::string_view ToString(TemporalRelationKind kind) {
  switch (kind) {
    case TemporalRelationKind::kAdjacency:
      return "adjacency";
    case TemporalRelationKind::kInclusion:
      return "inclusion";
    case TemporalRelationKind::kDistance:
      return "distance";
    case TemporalRelationKind::kAbsolute:
      return "absolute";
  }
  return "";
}

std::string_view ToString(UnitDimension dimension) {
  return dimension == UnitDimension::kSpatial ? "spatial" : "temporal";
}

std::optional<VerbPolarity> ParseVerbPolarity(std::string_view name) {
  for (auto p : {VerbPolarity::kInitial, VerbPolarity::kMedian,
                 VerbPolarity::kFinal}) {
    if (ToString(p) == name) return p;
  }
  return std::nullopt;
}

std::optional<SpatialRelationKind> ParseSpatialKind(std::string_view name) {
  for (auto k :
       {SpatialRelationKind::kMetric, SpatialRelationKind::kOrientation,
        SpatialRelationKind::kGeometricFigure, SpatialRelationKind::kAdjacency,
        SpatialRelationKind::kInclusion, SpatialRelationKind::kAbsolute}) {
    if (ToString(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<TemporalRelationKind> ParseTemporalKind(std::string_view name) {
  for (auto k :
       {TemporalRelationKind::kAdjacency, TemporalRelationKind::kInclusion,
        TemporalRelationKind::kDistance, TemporalRelationKind::kAbsolute}) {
    if (ToString(k) == name) return k;
  }
  return std::nullopt;
}

std::optional<UnitDimension> ParseUnitDimension(std::string_view name) {
  if (name == "spatial") return UnitDimension::kSpatial;
  if (name == "temporal") return UnitDimension::kTemporal;
  return std::nullopt;
}

const std::vector<std::string_view>& LexiconFileNames() {
  static const std::vector<std::string_view> names = {
      kMotionVerbsFile, kSpatialMarkersFile, kTemporalMarkersFile,
      kGazetteerFile, kUnitsFile};
  return names;
}

LexiconError::LexiconError(std::vector<std::string> problems)
    : std::runtime_error([&] {
        std::string message = "invalid lexicons:";
        for (const auto& p : problems) message += "\n  " + p;
        return message;
      }()),
      problems_(std::move(problems)) {}

LexiconSet LoadLexicons(const std::filesystem::path& dir) {
  std::vector<std::string> problems;
  LexiconSet lex;

  // Marker files only accept the relational kinds, never "absolute".
  auto marker_spatial = [](std::string_view v) {
    auto kind = ParseSpatialKind(v);
    if (kind == SpatialRelationKind::kAbsolute) return decltype(kind){};
    return kind;
  };
  auto marker_temporal = [](std::string_view v) {
    auto kind = ParseTemporalKind(v);
    if (kind == TemporalRelationKind::kAbsolute) return decltype(kind){};
    return kind;
  };

  {
    const auto rows =
        ReadRows(dir / kMotionVerbsFile, kMotionVerbsFile, false, &problems);
    lex.motion_verbs = BuildMap<VerbPolarity>(rows, kMotionVerbsFile,
                                              ParseVerbPolarity, &problems);
  }
  {
    const auto rows = ReadRows(dir / kSpatialMarkersFile, kSpatialMarkersFile,
                               false, &problems);
    lex.spatial_markers = BuildMap<SpatialRelationKind>(
        rows, kSpatialMarkersFile, marker_spatial, &problems);
  }
  {
    const auto rows = ReadRows(dir / kTemporalMarkersFile,
                               kTemporalMarkersFile, false, &problems);
    lex.temporal_markers = BuildMap<TemporalRelationKind>(
        rows, kTemporalMarkersFile, marker_temporal, &problems);
  }
  {
    const auto rows =
        ReadRows(dir / kGazetteerFile, kGazetteerFile, true, &problems);
    std::map<std::string, int> first_line;
    for (const Row& row : rows) {
      GazetteerEntry entry{row.raw_key, row.value};
      auto [it, inserted] = lex.gazetteer.emplace(row.key, entry);
      if (inserted) {
        first_line[row.key] = row.line;
      } else if (it->second.type != entry.type) {
        problems.push_back(std::string(kGazetteerFile) + ":" +
                           std::to_string(row.line) + ": '" + row.key +
                           "' conflicts with line " +
                           std::to_string(first_line[row.key]));
      }
    }
  }
  {
    const auto rows = ReadRows(dir / kUnitsFile, kUnitsFile, false, &problems);
    lex.units = BuildMap<UnitDimension>(rows, kUnitsFile, ParseUnitDimension,
                                        &problems);
  }
  if (!problems.empty()) throw LexiconError(std::move(problems));
  return lex;
}

void SaveLexicons(const LexiconSet& lex, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](std::string_view name) {
    std::ofstream out(dir / name);
    if (!out) {
      throw std::runtime_error("cannot write " + (dir / name).string());
    }
    return out;
  };
  {
    auto out = open(kMotionVerbsFile);
    out << "# lemma\tpolarity\n";
    for (const auto& [k, v] : lex.motion_verbs) out << k << '\t' << ToString(v) << '\n';
  }
  {
    auto out = open(kSpatialMarkersFile);
    out << "# marker\tkind\n";
    for (const auto& [k, v] : lex.spatial_markers) out << k << '\t' << ToString(v) << '\n';
  }
  {
    auto out = open(kTemporalMarkersFile);
    out << "# marker\tkind\n";
    for (const auto& [k, v] : lex.temporal_markers) out << k << '\t' << ToString(v) << '\n';
  }
  {
    auto out = open(kGazetteerFile);
    out << "# toponym\ttype\n";
    for (const auto& [k, v] : lex.gazetteer) {
      out << v.name;
      if (!v.type.empty()) out << '\t' << v.type;
      out << '\n';
    }
  }
  {
    auto out = open(kUnitsFile);
    out << "# lemma\tdimension\n";
    for (const auto& [k, v] : lex.units) out << k << '\t' << ToString(v) << '\n';
  }
}

std::optional<VerbPolarity> MotionPolarity(const LexiconSet& lex,
                                           std::string_view lemma) {
  const auto it = lex.motion_verbs.find(NormalizePhrase(lemma));
  if (it == lex.motion_verbs.end()) return std::nullopt;
  return it->second;
}

size_t ValidationReport::CountOf(ValidationIssue::Severity severity) const {
  return std::count_if(issues.begin(), issues.end(),
                       [&](const auto& i) { return i.severity == severity; });
}

std::string ValidationReport::ToText() const {
  std::ostringstream out;
  for (const auto& issue : issues) {
    switch (issue.severity) {
      case ValidationIssue::Severity::kError:
        out << "error: ";
        break;
      case ValidationIssue::Severity::kWarning:
        out << "warning: ";
        break;
      case ValidationIssue::Severity::kNotice:
        out << "notice: ";
        break;
    }
    out << issue.message << '\n';
  }
  for (const auto& [file, count] : counts) {
    out << file << ": " << count << " entries\n";
  }
  out << CountOf(ValidationIssue::Severity::kError) << " errors, "
      << CountOf(ValidationIssue::Severity::kWarning) << " warnings, "
      << CountOf(ValidationIssue::Severity::kNotice) << " notices\n";
  return out.str();
}

ValidationReport ValidateLexicons(const LexiconSet& lex) {
  using Severity = ValidationIssue::Severity;
  ValidationReport report;
  report.counts[std::string(kMotionVerbsFile)] = lex.motion_verbs.size();
  report.counts[std::string(kSpatialMarkersFile)] = lex.spatial_markers.size();
  report.counts[std::string(kTemporalMarkersFile)] =
      lex.temporal_markers.size();
  report.counts[std::string(kGazetteerFile)] = lex.gazetteer.size();
  report.counts[std::string(kUnitsFile)] = lex.units.size();

  auto check_key = [&](std::string_view file, const std::string& key) {
    if (key.empty() || NormalizePhrase(key) != key) {
      report.issues.push_back({Severity::kError, std::string(file) + ": key '" +
                                                     key +
                                                     "' is not normalized"});
    }
  };
  for (const auto& [k, v] : lex.motion_verbs) check_key(kMotionVerbsFile, k);
  for (const auto& [k, v] : lex.spatial_markers) {
    check_key(kSpatialMarkersFile, k);
    if (v == SpatialRelationKind::kAbsolute) {
      report.issues.push_back(
          {Severity::kError, std::string(kSpatialMarkersFile) + ": marker '" +
                                 k + "' cannot have kind absolute"});
    }
  }
  for (const auto& [k, v] : lex.temporal_markers) {
    check_key(kTemporalMarkersFile, k);
    if (v == TemporalRelationKind::kAbsolute) {
      report.issues.push_back(
          {Severity::kError, std::string(kTemporalMarkersFile) + ": marker '" +
                                 k + "' cannot have kind absolute"});
    }
  }
  for (const auto& [k, v] : lex.gazetteer) check_key(kGazetteerFile, k);
  for (const auto& [k, v] : lex.units) check_key(kUnitsFile, k);

  if (lex.gazetteer.empty()) {
    report.issues.push_back(
        {Severity::kWarning,
         "gazetteer empty: Absolute spatial entities cannot be recognized"});
  }

  // Toponyms that read like marker words or units would be shadowed.
  std::set<std::string> common_words;
  for (const auto& [k, v] : lex.spatial_markers) {
    for (auto& w : SplitWords(k)) {
      if (!IsSlot(w)) common_words.insert(w);
    }
  }
  for (const auto& [k, v] : lex.temporal_markers) {
    for (auto& w : SplitWords(k)) {
      if (!IsSlot(w)) common_words.insert(w);
    }
  }
  for (const auto& [k, v] : lex.units) common_words.insert(k);
  for (const auto& [k, v] : lex.gazetteer) {
    if (common_words.count(k) != 0) {
      report.issues.push_back({Severity::kWarning,
                               std::string(kGazetteerFile) + ": toponym '" +
                                   v.name +
                                   "' collides with a marker word or unit"});
    }
  }

  ReportContainedMarkers(lex.spatial_markers, kSpatialMarkersFile, &report);
  ReportContainedMarkers(lex.temporal_markers, kTemporalMarkersFile, &report);
  for (const auto& [k, spatial] : lex.spatial_markers) {
    const auto it = lex.temporal_markers.find(k);
    if (it == lex.temporal_markers.end()) continue;
    report.issues.push_back(
        {Severity::kNotice,
         "marker '" + k + "' is both spatial (" +
             std::string(ToString(spatial)) + ") and temporal (" +
             std::string(ToString(it->second)) +
             "); resolved by the head noun of the governed phrase"});
  }
  return report;
}

}  // namespace itinera
