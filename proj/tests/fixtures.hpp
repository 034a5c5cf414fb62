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

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "ngramspell/ngram_model.hpp"

// Shared test fixtures.
//
// Two kinds live here. The document fixtures are byte-exact transcriptions
// of a published OCR-correction experiment's worked texts: an English
// passage about Intel's early history and a French dictionary entry, each
// as (raw OCR output, the corrected output that experiment reported, ground
// truth). The ranking fixtures are the same experiment's worked example of
// candidate generation for the error word "sangle", with frequency counts
// assigned here so every expected ordering is unique and assertable.

namespace ngramspell::testing {

extern const std::string_view kEnglishOcr;
extern const std::string_view kEnglishReferenceCorrection;
extern const std::string_view kEnglishGroundTruth;

extern const std::string_view kFrenchOcr;
extern const std::string_view kFrenchReferenceCorrection;
extern const std::string_view kFrenchGroundTruth;

/// Valid words that appear (correctly spelled) in the OCR passages but in
/// neither ground truth: real-word errors and case variants the detector
/// must not flag.
extern const std::vector<std::string_view> kDocumentExtraVocabulary;

/// Vocabulary for detector runs over the document fixtures: every word-kind
/// token of both ground truths plus kDocumentExtraVocabulary.
UnigramTable document_fixture_vocabulary();

/// The non-word errors the detector is expected to flag in the document
/// fixtures, in document order.
extern const std::vector<std::string_view> kEnglishExpectedNonWords;
extern const std::vector<std::string_view> kFrenchExpectedNonWords;

/// The 19-word vocabulary behind the "sangle" ranking example, with counts
/// chosen so the top-ten cut inside the score-2 tier is deterministic.
const std::vector<std::pair<std::string_view, std::uint64_t>>& ranking_vocabulary();

/// Expected top ten candidates for "sangle": (word, shared-bigram score),
/// in expected output order.
const std::vector<std::pair<std::string_view, int>>& expected_sangle_top_ten();

/// Context 5-grams "case where only one <candidate>", one per expected
/// candidate, with counts making "single" the strict maximum.
const std::vector<std::pair<std::string_view, std::uint64_t>>& context_sentence_counts();

/// Model bundling ranking_vocabulary(), the context-sentence words, and the
/// 5-gram table from context_sentence_counts().
NGramModel ranking_fixture_model();

}  // namespace ngramspell::testing
