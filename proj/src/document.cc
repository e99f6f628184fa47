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

#include "itinera/document.h"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <memory>
#include <regex>
#include <sstream>

#include "itinera/text.h"
#include "nlohmann/json.hpp"

namespace itinera {

using namespace std::string_literals;

namespace {

using Json = nlohmann::ordered_json;

// --- JSON encoding --------------------------------------------------------

Json SpanJson(const TokenSpan& span) {
  return Json{{"first", span.first}, {"last", span.last}};
}

TokenSpan SpanFrom(const Json& j) {
  return {j.at("first").get<int>(), j.at("last").get<int>()};
}

Json MagnitudeJson(const std::optional<Magnitude>& m) {
  if (!m) return nullptr;
  return Json{{"value", m->value}, {"unit", m->unit}};
}

std::optional<Magnitude> MagnitudeFrom(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return Magnitude{j.at("value").get<double>(), j.at("unit").get<std::string>()};
}

Json ArgumentJson(const Argument& a) {
  Json j;
  j["role"] = a.role;
  j["text"] = a.text;
  j["span"] = SpanJson(a.span);
  j["pivot"] = a.pivot;
  j["order"] = a.order ? Json(*a.order) : Json(nullptr);
  j["marker_span"] = a.marker_span ? SpanJson(*a.marker_span) : Json(nullptr);
  j["non_projective"] = a.non_projective;
  return j;
}

Argument ArgumentFrom(const Json& j) {
  Argument a;
  a.role = j.at("role").get<std::string>();
  a.text = j.at("text").get<std::string>();
  a.span = SpanFrom(j.at("span"));
  a.pivot = j.at("pivot").get<int>();
  if (!j.at("order").is_null()) a.order = j.at("order").get<int>();
  if (!j.at("marker_span").is_null()) a.marker_span = SpanFrom(j.at("marker_span"));
  a.non_projective = j.at("non_projective").get<bool>();
  return a;
}

Json SpatialJson(const SpatialEntity& e) {
  Json j;
  j["span"] = SpanJson(e.span);
  j["text"] = e.text;
  j["kind"] = ToString(e.kind);
  j["marker"] = e.marker;
  j["anchors"] = e.anchors;
  Json spans = Json::array();
  for (const auto& s : e.anchor_spans) spans.push_back(SpanJson(s));
  j["anchor_spans"] = spans;
  j["magnitude"] = MagnitudeJson(e.magnitude);
  j["direction"] = e.direction ? Json(*e.direction) : Json(nullptr);
  j["loose_match"] = e.loose_match;
  return j;
}

template <typename Parsed>
Parsed Require(std::optional<Parsed> value, const Json& j) {
  if (!value) throw std::runtime_error("unknown enumeration value " + j.dump());
  return *value;
}

SpatialEntity SpatialFrom(const Json& j) {
  SpatialEntity e;
  e.span = SpanFrom(j.at("span"));
  e.text = j.at("text").get<std::string>();
  e.kind = Require(ParseSpatialKind(j.at("kind").get<std::string>()), j.at("kind"));
  e.marker = j.at("marker").get<std::string>();
  e.anchors = j.at("anchors").get<std::vector<std::string>>();
  for (const auto& s : j.at("anchor_spans")) e.anchor_spans.push_back(SpanFrom(s));
  e.magnitude = MagnitudeFrom(j.at("magnitude"));
  if (!j.at("direction").is_null()) e.direction = j.at("direction").get<std::string>();
  e.loose_match = j.at("loose_match").get<bool>();
  return e;
}

Json TemporalJson(const TemporalEntity& e) {
  Json j;
  j["span"] = SpanJson(e.span);
  j["text"] = e.text;
  j["kind"] = ToString(e.kind);
  j["marker"] = e.marker;
  j["magnitude"] = MagnitudeJson(e.magnitude);
  j["anchor_text"] = e.anchor_text;
  return j;
}

TemporalEntity TemporalFrom(const Json& j) {
  TemporalEntity e;
  e.span = SpanFrom(j.at("span"));
  e.text = j.at("text").get<std::string>();
  e.kind = Require(ParseTemporalKind(j.at("kind").get<std::string>()), j.at("kind"));
  e.marker = j.at("marker").get<std::string>();
  e.magnitude = MagnitudeFrom(j.at("magnitude"));
  e.anchor_text = j.at("anchor_text").get<std::string>();
  return e;
}

Json NaryJson(const NaryRelation& r) {
  Json j;
  j["use_case"] = ToString(r.use_case);
  j["predicate_lemma"] = r.predicate_lemma;
  j["predicate_token"] = r.predicate_token;
  j["sent_id"] = r.sent_id;
  Json args = Json::array();
  for (const auto& a : r.arguments) args.push_back(ArgumentJson(a));
  j["arguments"] = args;
  return j;
}

NaryRelation NaryFrom(const Json& j) {
  NaryRelation r;
  r.use_case = Require(ParseUseCaseKind(j.at("use_case").get<std::string>()),
                       j.at("use_case"));
  r.predicate_lemma = j.at("predicate_lemma").get<std::string>();
  r.predicate_token = j.at("predicate_token").get<int>();
  r.sent_id = j.at("sent_id").get<std::string>();
  for (const auto& a : j.at("arguments")) r.arguments.push_back(ArgumentFrom(a));
  return r;
}

template <typename T, typename F>
Json ArrayOf(const std::vector<T>& items, F encode) {
  Json out = Json::array();
  for (const auto& item : items) out.push_back(encode(item));
  return out;
}

Json ItineraryJson(const ItineraryRelation& r) {
  Json j;
  j["verb"] = r.verb_lemma;
  j["polarity"] = ToString(r.polarity);
  j["actor"] = r.actor ? ArgumentJson(*r.actor) : Json(nullptr);
  j["origin"] = ArrayOf(r.origin, SpatialJson);
  j["intermediate"] = ArrayOf(r.intermediate, SpatialJson);
  j["destination"] = ArrayOf(r.destination, SpatialJson);
  j["temporal"] = ArrayOf(r.temporal, TemporalJson);
  j["source_nary"] = r.source_nary;
  j["sent_id"] = r.sent_id;
  j["unmapped_roles"] = r.unmapped_roles;
  return j;
}

ItineraryRelation ItineraryFrom(const Json& j) {
  ItineraryRelation r;
  r.verb_lemma = j.at("verb").get<std::string>();
  r.polarity = Require(ParseVerbPolarity(j.at("polarity").get<std::string>()),
                       j.at("polarity"));
  if (!j.at("actor").is_null()) r.actor = ArgumentFrom(j.at("actor"));
  for (const auto& e : j.at("origin")) r.origin.push_back(SpatialFrom(e));
  for (const auto& e : j.at("intermediate")) r.intermediate.push_back(SpatialFrom(e));
  for (const auto& e : j.at("destination")) r.destination.push_back(SpatialFrom(e));
  for (const auto& e : j.at("temporal")) r.temporal.push_back(TemporalFrom(e));
  r.source_nary = j.at("source_nary").get<std::size_t>();
  r.sent_id = j.at("sent_id").get<std::string>();
  r.unmapped_roles = j.at("unmapped_roles").get<std::vector<std::string>>();
  return r;
}

// --- Turtle ---------------------------------------------------------------

std::string TurtleString(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\r':
        out += "\\r";
        break;
      case '\t':
        out += "\\t";
        break;
      default:
        out.push_back(c);
    }
  }
  out.push_back('"');
  return out;
}

// Percent-encodes everything outside the RFC 3986 unreserved set.
std::string IriSegment(std::string_view text) {
  static const char* kHex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : text) {
    const bool unreserved = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
                            (c >= '0' && c <= '9') || c == '-' || c == '.' ||
                            c == '_' || c == '~';
    if (unreserved) {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(kHex[c >> 4]);
      out.push_back(kHex[c & 0xF]);
    }
  }
  return out;
}

// Class name for a verb lemma: "quitter" -> it:Quitter. Lemmas outside
// [a-z0-9_-] (accents included) fall back to a percent-encoded full IRI.
std::string VerbClass(const std::string& lemma) {
  const bool simple =
      !lemma.empty() && std::all_of(lemma.begin(), lemma.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' ||
               c == '-';
      }) && lemma.front() >= 'a' && lemma.front() <= 'z' && lemma.back() != '-';
  if (simple) {
    std::string name = lemma;
    name.front() = static_cast<char>(name.front() - 'a' + 'A');
    return "it:" + name;
  }
  return "<" + std::string(kVocabularyIri) + "verb-" + IriSegment(lemma) + ">";
}

std::string KindName(std::string_view kind) {
  std::string name(kind);
  if (!name.empty()) name.front() = static_cast<char>(name.front() - 'a' + 'A');
  return "it:" + name;
}

void WriteSpatial(std::ostream& out, const SpatialEntity& e) {
  out << "[ a it:SpatialEntity ; it:kind " << KindName(ToString(e.kind))
      << " ; it:text " << TurtleString(e.text);
  for (const auto& anchor : e.anchors) out << " ; it:anchor " << TurtleString(anchor);
  if (e.magnitude) {
    out << " ; it:magnitude " << TurtleString(FormatNumber(e.magnitude->value))
        << "^^xsd:decimal ; it:unit " << TurtleString(e.magnitude->unit);
  }
  if (e.direction) out << " ; it:direction " << TurtleString(*e.direction);
  if (e.loose_match) out << " ; it:looseMatch true";
  out << " ; it:firstToken " << e.span.first << " ; it:lastToken " << e.span.last
      << " ]";
}

void WriteTemporal(std::ostream& out, const TemporalEntity& e) {
  out << "[ a it:TemporalEntity ; it:kind " << KindName(ToString(e.kind))
      << " ; it:text " << TurtleString(e.text);
  if (e.magnitude) {
    out << " ; it:magnitude " << TurtleString(FormatNumber(e.magnitude->value))
        << "^^xsd:decimal ; it:unit " << TurtleString(e.magnitude->unit);
  }
  out << " ; it:firstToken " << e.span.first << " ; it:lastToken " << e.span.last
      << " ]";
}

}  // namespace

ExtractionDocument BuildDocument(const std::vector<SentenceGraph>& corpus,
                                 const LexiconSet& lexicons,
                                 std::string lexicon_fingerprint,
                                 const RecognizerOptions& options) {
  ExtractionDocument doc;
  doc.tool_version = std::string(kToolVersion);
  doc.lexicon_fingerprint = std::move(lexicon_fingerprint);
  for (const SentenceGraph& graph : corpus) {
    try {
      doc.sentences.push_back(AnalyzeSentence(graph, lexicons, options));
    } catch (const std::exception& e) {
      SentenceAnalysis failed;
      failed.sent_id = graph.sent_id();
      failed.text = graph.text();
      failed.skips.push_back({graph.sent_id(), e.what()});
      doc.sentences.push_back(std::move(failed));
    }
  }
  return doc;
}

std::string LexiconFingerprint(const std::filesystem::path& dir) {
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(),
                                                              EVP_MD_CTX_free);
  if (!ctx || EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 unavailable");
  }
  for (std::string_view name : LexiconFileNames()) {
    std::ifstream in(dir / name, std::ios::binary);
    std::string frame(name);
    if (!in) {
      frame += "\0missing\0"s;
    } else {
      std::ostringstream bytes;
      bytes << in.rdbuf();
      const std::string content = bytes.str();
      frame += '\0' + std::to_string(content.size()) + '\0' + content;
    }
    EVP_DigestUpdate(ctx.get(), frame.data(), frame.size());
  }
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest, &length);
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) {
    hex << std::hex << std::setw(2) << std::setfill('0')
        << static_cast<int>(digest[i]);
  }
  return hex.str();
}

std::string ToJson(const ExtractionDocument& doc) {
  Json j;
  j["tool_version"] = doc.tool_version;
  j["lexicon_fingerprint"] = doc.lexicon_fingerprint;
  Json sentences = Json::array();
  for (const auto& s : doc.sentences) {
    Json sj;
    sj["sent_id"] = s.sent_id;
    sj["text"] = s.text;
    sj["nary_relations"] = ArrayOf(s.nary, NaryJson);
    sj["itinerary_relations"] = ArrayOf(s.itineraries, ItineraryJson);
    Json skips = Json::array();
    for (const auto& skip : s.skips) {
      skips.push_back(Json{{"sent_id", skip.sent_id}, {"reason", skip.reason}});
    }
    sj["skips"] = skips;
    sentences.push_back(sj);
  }
  j["sentences"] = sentences;
  return j.dump(2) + "\n";
}

ExtractionDocument FromJson(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ExtractionDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.lexicon_fingerprint = j.at("lexicon_fingerprint").get<std::string>();
    for (const auto& sj : j.at("sentences")) {
      SentenceAnalysis s;
      s.sent_id = sj.at("sent_id").get<std::string>();
      s.text = sj.at("text").get<std::string>();
      for (const auto& r : sj.at("nary_relations")) s.nary.push_back(NaryFrom(r));
      for (const auto& r : sj.at("itinerary_relations")) {
        s.itineraries.push_back(ItineraryFrom(r));
      }
      for (const auto& k : sj.at("skips")) {
        s.skips.push_back({k.at("sent_id").get<std::string>(),
                           k.at("reason").get<std::string>()});
      }
      doc.sentences.push_back(std::move(s));
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("invalid extraction document: ") +
                             e.what());
  }
}

bool IsAbsoluteIri(std::string_view iri) {
  static const std::regex kIri(R"(^[A-Za-z][A-Za-z0-9+.\-]*:[^\s<>"{}|\\^`]+$)");
  return std::regex_match(iri.begin(), iri.end(), kIri);
}

std::string ToTurtle(const ExtractionDocument& doc, std::string_view base_iri) {
  if (!IsAbsoluteIri(base_iri)) {
    throw std::invalid_argument("base IRI must be absolute: '" +
                                std::string(base_iri) + "'");
  }
  std::string base(base_iri);
  if (base.back() != '/' && base.back() != '#') base.push_back('/');

  std::ostringstream out;
  out << "# Itinerary relations, one reified node per relation.\n"
      << "# Role properties: it:actor it:origin it:intermediate "
         "it:destination it:temporal it:sourceSentence\n"
      << "@prefix rdf: <http://www.w3.org/1999/02/22-rdf-syntax-ns#> .\n"
      << "@prefix xsd: <http://www.w3.org/2001/XMLSchema#> .\n"
      << "@prefix it: <" << kVocabularyIri << "> .\n";

  // Nodes are keyed by document position: sentence ids need not be unique.
  for (std::size_t k = 0; k < doc.sentences.size(); ++k) {
    const SentenceAnalysis& s = doc.sentences[k];
    if (s.itineraries.empty()) continue;
    const std::string position = std::to_string(k + 1);
    const std::string sentence_iri = "<" + base + "sentence/" + position + ">";
    for (std::size_t i = 0; i < s.itineraries.size(); ++i) {
      const ItineraryRelation& r = s.itineraries[i];
      out << "\n<" << base << "itinerary/" << position << "-" << (i + 1)
          << "> a it:ItineraryRelation , " << VerbClass(r.verb_lemma)
          << " ;\n    it:verb " << TurtleString(r.verb_lemma)
          << " ;\n    it:polarity " << KindName(ToString(r.polarity));
      if (r.actor) {
        out << " ;\n    it:actor [ a it:Actor ; it:text "
            << TurtleString(r.actor->text) << " ]";
      }
      for (const auto& e : r.origin) {
        out << " ;\n    it:origin ";
        WriteSpatial(out, e);
      }
      for (const auto& e : r.intermediate) {
        out << " ;\n    it:intermediate ";
        WriteSpatial(out, e);
      }
      for (const auto& e : r.destination) {
        out << " ;\n    it:destination ";
        WriteSpatial(out, e);
      }
      for (const auto& e : r.temporal) {
        out << " ;\n    it:temporal ";
        WriteTemporal(out, e);
      }
      out << " ;\n    it:sourceSentence " << sentence_iri << " .\n";
    }
    out << "\n" << sentence_iri << " a it:Sentence ;\n    it:sentenceId "
        << TurtleString(s.sent_id) << " ;\n    it:text " << TurtleString(s.text)
        << " .\n";
  }
  return out.str();
}

}  // namespace itinera
