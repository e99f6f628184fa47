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

#ifndef ITINERA_DOCUMENT_H_
#define ITINERA_DOCUMENT_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "itinera/depgraph.h"
#include "itinera/entities.h"
#include "itinera/itinerary.h"
#include "itinera/lexicon.h"

namespace itinera {

inline constexpr std::string_view kToolVersion = "0.1.0";

// Vocabulary namespace for the Turtle projection.
inline constexpr std::string_view kVocabularyIri = "https://w3id.org/itinera/vocab#";

struct ExtractionDocument {
  std::string tool_version;
  std::string lexicon_fingerprint;
  std::vector<SentenceAnalysis> sentences;
};

ExtractionDocument BuildDocument(const std::vector<SentenceGraph>& corpus,
                                 const LexiconSet& lexicons,
                                 std::string lexicon_fingerprint,
                                 const RecognizerOptions& options = {});

// SHA-256 (hex) over the five lexicon files, each framed by its name and
// byte length. Missing files hash as empty with a distinct frame.
std::string LexiconFingerprint(const std::filesystem::path& dir);

// Canonical JSON, two-space indented, fixed field order.
std::string ToJson(const ExtractionDocument& document);
// Inverse of ToJson. Throws std::runtime_error on schema mismatch.
ExtractionDocument FromJson(std::string_view json);

bool IsAbsoluteIri(std::string_view iri);

// Reified n-ary pattern: one node per itinerary relation with one property per
// role. Throws std::invalid_argument for a non-absolute base IRI.
std::string ToTurtle(const ExtractionDocument& document,
                     std::string_view base_iri);

}  // namespace itinera

#endif  // ITINERA_DOCUMENT_H_
