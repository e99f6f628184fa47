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

#include "itinera/entities.h"

#include <algorithm>
#include <set>

#include "itinera/text.h"

namespace itinera {

namespace {

enum class Domain { kSpatial, kTemporal, kNone };

struct MarkerMatch {
  std::string key;
  int length = 0;  // tokens consumed
  size_t words = 0;
  std::optional<double> number;
  std::optional<std::string> unit;
};

struct ToponymMatch {
  TokenSpan span;
  std::string name;
  bool loose = false;
};

// Word sequences a token may stand for: its normalized form and lemma.
std::vector<std::vector<std::string>> TokenReadings(const Token& token) {
  std::vector<std::vector<std::string>> readings;
  readings.push_back(SplitWords(NormalizePhrase(token.form)));
  if (token.lemma != "_" && !token.lemma.empty()) {
    auto lemma = SplitWords(NormalizePhrase(token.lemma));
    if (lemma != readings.front()) readings.push_back(std::move(lemma));
  }
  return readings;
}

std::optional<UnitDimension> UnitOf(const LexiconSet& lex, const Token& token) {
  for (const auto* text : {&token.lemma, &token.form}) {
    const auto it = lex.units.find(NormalizePhrase(*text));
    if (it != lex.units.end()) return it->second;
  }
  return std::nullopt;
}

std::string UnitKey(const LexiconSet& lex, const Token& token) {
  const std::string lemma = NormalizePhrase(token.lemma);
  if (lex.units.count(lemma) != 0) return lemma;
  return NormalizePhrase(token.form);
}

// Numbers count only when tagged NUM or written with digits; this keeps the
// article "une" from reading as 1.
std::optional<double> NumberOf(const Token& token) {
  if (token.form.empty()) return std::nullopt;
  const bool digits = token.form.front() >= '0' && token.form.front() <= '9';
  if (!digits && token.upos != "NUM") return std::nullopt;
  return ParseNumber(token.form);
}

std::optional<MarkerMatch> MatchMarkerAt(const SentenceGraph& g, TokenId start,
                                         TokenId last,
                                         const std::string& key,
                                         UnitDimension dimension,
                                         const LexiconSet& lex) {
  const std::vector<std::string> words = SplitWords(key);
  MarkerMatch match;
  TokenId cur = start;
  size_t w = 0;
  while (w < words.size()) {
    if (cur > last || g.IsPunct(cur)) return std::nullopt;
    const Token& token = g.token(cur);
    if (words[w] == "<num>") {
      auto value = ParseNumber(token.form);
      if (!value) return std::nullopt;
      match.number = value;
      ++w;
      ++cur;
      continue;
    }
    if (words[w] == "<unit>") {
      if (UnitOf(lex, token) != dimension) return std::nullopt;
      match.unit = UnitKey(lex, token);
      ++w;
      ++cur;
      continue;
    }
    bool advanced = false;
    for (const auto& reading : TokenReadings(token)) {
      if (reading.empty() || w + reading.size() > words.size()) continue;
      if (std::equal(reading.begin(), reading.end(), words.begin() + w)) {
        w += reading.size();
        ++cur;
        advanced = true;
        break;
      }
    }
    if (!advanced) return std::nullopt;
  }
  match.key = key;
  match.length = cur - start;
  match.words = words.size();
  return match;
}

// Longest match by tokens, then by words; ties keep the first key in map
// order.
template <typename Map>
std::optional<MarkerMatch> LongestMarker(const SentenceGraph& g, TokenId start,
                                         TokenId last, const Map& markers,
                                         UnitDimension dimension,
                                         const LexiconSet& lex) {
  std::optional<MarkerMatch> best;
  for (const auto& [key, kind] : markers) {
    auto m = MatchMarkerAt(g, start, last, key, dimension, lex);
    if (!m) continue;
    if (!best || m->length > best->length ||
        (m->length == best->length && m->words > best->words)) {
      best = std::move(m);
    }
  }
  return best;
}

bool StartsUppercase(const std::string& form) {
  if (form.empty()) return false;
  const std::string folded = FoldCase(form);
  // Folding only ever changes the first character's bytes if it was upper.
  const size_t n = std::min<size_t>(form.size(), 4);
  return folded.compare(0, n, form, 0, n) != 0;
}

class Recognizer {
 public:
  Recognizer(const SentenceGraph& g, const LexiconSet& lex,
             const RecognizerOptions& options)
      : g_(g), lex_(lex), options_(options) {
    for (const auto& [key, entry] : lex_.gazetteer) {
      max_toponym_words_ = std::max(max_toponym_words_, SplitWords(key).size());
    }
  }

  std::optional<ToponymMatch> MatchToponym(TokenId start, TokenId last,
                                           bool allow_loose) const {
    if (start > last || g_.IsPunct(start)) return std::nullopt;
    const int max_len =
        std::min<int>(static_cast<int>(max_toponym_words_), last - start + 1);
    for (int len = max_len; len >= 1; --len) {
      std::string key;
      bool has_punct = false;
      for (TokenId id = start; id < start + len; ++id) {
        if (g_.IsPunct(id)) has_punct = true;
        const std::string word = NormalizePhrase(g_.token(id).form);
        if (!key.empty() && !word.empty()) key.push_back(' ');
        key += word;
      }
      if (has_punct) continue;
      const auto it = lex_.gazetteer.find(key);
      if (it != lex_.gazetteer.end()) {
        return ToponymMatch{{start, start + len - 1}, it->second.name, false};
      }
    }
    if (allow_loose && options_.loose_toponyms && IsLooseName(start)) {
      TokenId end = start;
      while (end + 1 <= last && IsLooseName(end + 1)) ++end;
      return ToponymMatch{{start, end}, g_.Surface({start, end}), true};
    }
    return std::nullopt;
  }

  bool IsFigureNoun(const Token& token) const {
    const auto it = lex_.spatial_markers.find(NormalizePhrase(token.lemma));
    return it != lex_.spatial_markers.end() &&
           it->second == SpatialRelationKind::kGeometricFigure;
  }

  bool IsTemporalContent(const Token& token) const {
    return UnitOf(lex_, token) == UnitDimension::kTemporal ||
           IsMonthName(token.form) || NumberOf(token).has_value();
  }

  // The head of the phrase a marker introduces: the first head to the right of
  // the marker reached from one of its tokens, scanning right to left.
  std::optional<TokenId> GovernedHead(TokenId first, TokenId last) const {
    for (TokenId id = last; id >= first; --id) {
      const TokenId head = g_.token(id).head;
      if (head > last) return head;
    }
    for (TokenId id = last + 1; id <= g_.size(); ++id) {
      if (g_.IsPunct(id)) break;
      if (g_.token(id).upos != "DET") return id;
    }
    return std::nullopt;
  }

  // A marker listed in both marker files is read from the head noun of the
  // phrase it governs.
  Domain ResolveSharedMarker(TokenId first, TokenId last) const {
    const auto head = GovernedHead(first, last);
    if (!head) return Domain::kNone;
    const Token& token = g_.token(*head);
    if (UnitOf(lex_, token) == UnitDimension::kTemporal ||
        IsMonthName(token.form) || NumberOf(token).has_value()) {
      return Domain::kTemporal;
    }
    if (MatchToponym(*head, g_.size(), false) || IsFigureNoun(token)) {
      return Domain::kSpatial;
    }
    return Domain::kNone;
  }

  std::vector<SpatialEntity> Spatial(const TokenSpan& within) const {
    std::vector<SpatialEntity> out;
    TokenId floor = within.first;
    TokenId pos = within.first;
    while (pos <= within.last) {
      if (g_.IsPunct(pos)) {
        ++pos;
        continue;
      }
      if (auto marker = LongestMarker(g_, pos, within.last,
                                      lex_.spatial_markers,
                                      UnitDimension::kSpatial, lex_)) {
        const TokenId marker_end = pos + marker->length - 1;
        bool usable = true;
        if (lex_.temporal_markers.count(marker->key) != 0) {
          usable = ResolveSharedMarker(pos, marker_end) == Domain::kSpatial;
        }
        if (usable) {
          if (auto entity = Relational(pos, marker_end, *marker, within)) {
            ExtendToNominal(&*entity, floor);
            entity->text = g_.Surface(entity->span);
            pos = floor = entity->span.last + 1;
            out.push_back(std::move(*entity));
            continue;
          }
        }
      }
      if (auto topo = MatchToponym(pos, within.last, true)) {
        SpatialEntity entity;
        entity.span = topo->span;
        entity.text = g_.Surface(topo->span);
        entity.kind = SpatialRelationKind::kAbsolute;
        entity.anchors = {topo->name};
        entity.anchor_spans = {topo->span};
        entity.loose_match = topo->loose;
        pos = floor = entity.span.last + 1;
        out.push_back(std::move(entity));
        continue;
      }
      ++pos;
    }
    return out;
  }

  std::vector<TemporalEntity> Temporal(const TokenSpan& within) const {
    std::vector<TemporalEntity> out;
    TokenId pos = within.first;
    while (pos <= within.last) {
      if (g_.IsPunct(pos)) {
        ++pos;
        continue;
      }
      if (auto marker = LongestMarker(g_, pos, within.last,
                                      lex_.temporal_markers,
                                      UnitDimension::kTemporal, lex_)) {
        const TokenId marker_end = pos + marker->length - 1;
        bool usable = true;
        if (lex_.spatial_markers.count(marker->key) != 0) {
          usable = ResolveSharedMarker(pos, marker_end) == Domain::kTemporal;
        }
        if (usable) {
          if (auto entity = TemporalFromMarker(pos, marker_end, *marker,
                                               within)) {
            pos = entity->span.last + 1;
            out.push_back(std::move(*entity));
            continue;
          }
        }
      }
      if (auto entity = Date(pos, within)) {
        pos = entity->span.last + 1;
        out.push_back(std::move(*entity));
        continue;
      }
      ++pos;
    }
    return out;
  }

 private:
  bool IsLooseName(TokenId id) const {
    const Token& token = g_.token(id);
    return token.upos == "PROPN" && StartsUppercase(token.form);
  }

  std::optional<SpatialEntity> Relational(TokenId first, TokenId marker_end,
                                          const MarkerMatch& marker,
                                          const TokenSpan& within) const {
    SpatialEntity entity;
    entity.kind = lex_.spatial_markers.at(marker.key);
    entity.marker = marker.key;
    TokenId cursor = marker_end + 1;
    if (cursor <= within.last && g_.token(cursor).upos == "DET" &&
        !MatchToponym(cursor, within.last, false)) {
      ++cursor;
    }

    if (entity.kind == SpatialRelationKind::kGeometricFigure) {
      while (auto topo = MatchToponym(cursor, within.last, true)) {
        entity.anchors.push_back(topo->name);
        entity.anchor_spans.push_back(topo->span);
        entity.loose_match |= topo->loose;
        cursor = topo->span.last + 1;
        // Coordination: ",", "et", "ou" or ", et" between anchors.
        bool separated = false;
        while (cursor <= within.last &&
               (g_.token(cursor).form == "," ||
                g_.token(cursor).upos == "CCONJ")) {
          ++cursor;
          separated = true;
        }
        if (!separated) break;
      }
      const size_t needed =
          marker.key.find("triangle") != std::string::npos ? 3 : 2;
      if (entity.anchors.size() < needed) return std::nullopt;
      entity.span = {first, entity.anchor_spans.back().last};
      return entity;
    }

    auto topo = MatchToponym(cursor, within.last, true);
    if (!topo) return std::nullopt;
    entity.anchors = {topo->name};
    entity.anchor_spans = {topo->span};
    entity.loose_match = topo->loose;
    entity.span = {first, topo->span.last};

    if (entity.kind == SpatialRelationKind::kMetric) {
      if (!marker.number || !marker.unit) return std::nullopt;
      entity.magnitude = Magnitude{*marker.number, *marker.unit};
    } else if (entity.kind == SpatialRelationKind::kOrientation) {
      static const std::set<std::string> kFunctionWords = {
          "à", "au", "aux", "l", "le", "la", "les", "de", "du", "des", "d"};
      std::vector<std::string> content;
      for (auto& w : SplitWords(marker.key)) {
        if (kFunctionWords.count(w) == 0) content.push_back(w);
      }
      if (content.empty()) return std::nullopt;
      entity.direction = JoinWords(content);
    }
    return entity;
  }

  // Widens a relational entity over the nominal its anchor modifies
  // ("une ville près de Lyon"), stopping at case markers and punctuation.
  void ExtendToNominal(SpatialEntity* entity, TokenId floor) const {
    const TokenSpan& anchor = entity->anchor_spans.front();
    TokenId top = anchor.first;
    for (TokenId id = anchor.first; id <= anchor.last; ++id) {
      if (!anchor.Contains(g_.token(id).head)) {
        top = id;
        break;
      }
    }
    const TokenId head = g_.token(top).head;
    if (head == 0 || head >= entity->span.first || head < floor) return;
    const std::string& upos = g_.token(head).upos;
    if (upos != "NOUN" && upos != "PROPN") return;

    std::set<TokenId> excluded;
    for (TokenId c : g_.Dependents(head, {"case"})) {
      for (TokenId d : g_.Descendants(c)) excluded.insert(d);
    }
    TokenId first = entity->span.first;
    while (first - 1 >= floor && g_.IsDescendant(first - 1, head) &&
           excluded.count(first - 1) == 0 && !g_.IsPunct(first - 1)) {
      --first;
    }
    entity->span.first = first;
  }

  std::optional<TemporalEntity> TemporalFromMarker(
      TokenId first, TokenId marker_end, const MarkerMatch& marker,
      const TokenSpan& within) const {
    TokenId end = marker_end;
    if (auto head = GovernedHead(first, marker_end)) {
      while (end + 1 <= within.last && g_.IsDescendant(end + 1, *head)) ++end;
    }
    while (end > marker_end && g_.IsPunct(end)) --end;

    bool content = marker.unit.has_value();
    for (TokenId id = marker_end + 1; id <= end && !content; ++id) {
      content = IsTemporalContent(g_.token(id));
    }
    if (!content) return std::nullopt;

    TemporalEntity entity;
    entity.span = {first, end};
    entity.text = g_.Surface(entity.span);
    entity.kind = lex_.temporal_markers.at(marker.key);
    entity.marker = marker.key;
    if (marker.number && marker.unit) {
      entity.magnitude = Magnitude{*marker.number, *marker.unit};
    } else {
      entity.magnitude = FindMagnitude({marker_end + 1, end});
    }
    if (entity.kind == TemporalRelationKind::kDistance && !entity.magnitude) {
      // "depuis le 10 juillet" anchors on a date rather than measuring.
      entity.kind = TemporalRelationKind::kAbsolute;
    }
    if (end > marker_end) {
      entity.anchor_text = FoldCase(g_.Surface({marker_end + 1, end}));
    }
    return entity;
  }

  std::optional<Magnitude> FindMagnitude(const TokenSpan& span) const {
    for (TokenId id = span.first; id < span.last; ++id) {
      const auto value = NumberOf(g_.token(id));
      if (value &&
          UnitOf(lex_, g_.token(id + 1)) == UnitDimension::kTemporal) {
        return Magnitude{*value, UnitKey(lex_, g_.token(id + 1))};
      }
    }
    return std::nullopt;
  }

  // Bare dates: [day] month [year], or a four-digit year.
  std::optional<TemporalEntity> Date(TokenId pos,
                                     const TokenSpan& within) const {
    TokenId first = pos;
    TokenId month = pos;
    if (NumberOf(g_.token(pos)) && pos + 1 <= within.last &&
        IsMonthName(g_.token(pos + 1).form)) {
      month = pos + 1;
    }
    TokenId last = 0;
    if (IsMonthName(g_.token(month).form)) {
      last = month;
      if (month + 1 <= within.last && NumberOf(g_.token(month + 1))) {
        last = month + 1;
      }
    } else {
      const Token& token = g_.token(pos);
      const auto value = NumberOf(token);
      const bool four_digits =
          token.form.size() == 4 &&
          std::all_of(token.form.begin(), token.form.end(),
                      [](char c) { return c >= '0' && c <= '9'; });
      const bool before_unit =
          pos + 1 <= g_.size() && UnitOf(lex_, g_.token(pos + 1)).has_value();
      if (!value || !four_digits || before_unit) return std::nullopt;
      last = pos;
    }
    TemporalEntity entity;
    entity.span = {first, last};
    entity.text = g_.Surface(entity.span);
    entity.kind = TemporalRelationKind::kAbsolute;
    entity.anchor_text = FoldCase(entity.text);
    return entity;
  }

  const SentenceGraph& g_;
  const LexiconSet& lex_;
  const RecognizerOptions& options_;
  size_t max_toponym_words_ = 0;
};

}  // namespace

NotAMarker::NotAMarker(std::string_view marker)
    : std::invalid_argument("not a marker: '" + std::string(marker) + "'") {}

std::vector<SpatialEntity> RecognizeSpatial(const SentenceGraph& graph,
                                            const TokenSpan& within,
                                            const LexiconSet& lexicons,
                                            const RecognizerOptions& options) {
  return Recognizer(graph, lexicons, options).Spatial(within);
}

std::vector<TemporalEntity> RecognizeTemporal(const SentenceGraph& graph,
                                              const TokenSpan& within,
                                              const LexiconSet& lexicons) {
  const RecognizerOptions options;
  return Recognizer(graph, lexicons, options).Temporal(within);
}

SpatialRelationKind ClassifySpatialMarker(std::string_view marker,
                                          const LexiconSet& lexicons) {
  const auto it = lexicons.spatial_markers.find(NormalizePhrase(marker));
  if (it == lexicons.spatial_markers.end()) throw NotAMarker(marker);
  return it->second;
}

TemporalRelationKind ClassifyTemporalMarker(std::string_view marker,
                                            const LexiconSet& lexicons) {
  const auto it = lexicons.temporal_markers.find(NormalizePhrase(marker));
  if (it == lexicons.temporal_markers.end()) throw NotAMarker(marker);
  return it->second;
}

}  // namespace itinera
