/*
 * Copyright 2026 The ngramspell Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <map>
#include <string>

#include "ngramspell/candidates.hpp"
#include "ngramspell/detector.hpp"
#include "ngramspell/ngram_model.hpp"

namespace ngramspell {

/// Describes a model on disk: where its Web 1T files live and the defaults
/// a correction run should use. Serialized as a small JSON file next to the
/// data files; relative paths are relative to the manifest's directory.
struct ModelManifest {
    std::string vocabulary;              // path to the unigram file
    std::map<int, std::string> ngrams;   // order (2..5) -> path
    CasePolicy case_policy = CasePolicy::Exact;
    bool fallback = true;
    int candidate_limit = kDefaultCandidateLimit;
};

/// Reads and validates a manifest file. Relative data paths are resolved
/// against the manifest's directory, so the returned paths open directly.
/// Throws ParseError on malformed JSON or invalid fields.
ModelManifest read_manifest(const std::string& path);

/// Writes the manifest as pretty-printed JSON (stable key order).
void write_manifest(const ModelManifest& manifest, const std::string& path);

/// Loads every file the manifest references into a model.
NGramModel load_model(const ModelManifest& manifest);

}  // namespace ngramspell
