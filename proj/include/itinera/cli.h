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

#ifndef ITINERA_CLI_H_
#define ITINERA_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <string>

namespace itinera {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitLexicon = 2;
inline constexpr int kExitInput = 3;

enum class OutputFormat { kJson, kTurtle, kBoth };

struct ExtractOptions {
  std::string input = "-";  // path, or "-" for stdin
  std::filesystem::path lexicon_dir;
  OutputFormat format = OutputFormat::kJson;
  bool loose_toponyms = false;
  std::string base_iri;
  std::filesystem::path out_dir;  // required for kBoth
};

// Lexicons shipped with the source tree.
std::filesystem::path DefaultLexiconDir();

// Runs the pipeline. Output goes to `out` or to files under out_dir, and only
// once the whole input has been processed; diagnostics go to `err`.
int RunExtract(const ExtractOptions& options, std::istream& stdin_stream,
               std::ostream& out, std::ostream& err);

int RunLexiconValidate(const std::filesystem::path& lexicon_dir,
                       std::ostream& out, std::ostream& err);

}  // namespace itinera

#endif  // ITINERA_CLI_H_
