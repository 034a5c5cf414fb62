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

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ngramspell/candidates.hpp"
#include "ngramspell/detector.hpp"
#include "ngramspell/ngram_model.hpp"
#include "ngramspell/tokenizer.hpp"

namespace ngramspell {

/// Why an error was (or was not) replaced.
///  - Corrected: context evidence found; replacement won the count ranking.
///  - Fallback: no context evidence at any order; best-scored candidate used.
///  - Uncorrected: nothing to do (see reason).
enum class Decision {
    Corrected,
    Fallback,
    Uncorrected,
};

std::string_view to_string(Decision decision);

inline constexpr std::string_view kReasonNoCandidates = "no-candidates";
inline constexpr std::string_view kReasonNoContextEvidence = "no-context-evidence";
inline constexpr std::string_view kReasonNoContextEvidenceFallbackDisabled =
    "no-context-evidence-and-fallback-disabled";

struct CorrectionOutcome {
    std::size_t token_index = 0;
    std::string original;
    Decision decision = Decision::Uncorrected;
    std::string replacement;          // empty iff uncorrected
    std::uint64_t context_count = 0;  // >= 1 iff corrected
    int order_used = 0;               // 2..5 iff corrected, else 0
    std::string reason;               // set for fallback and uncorrected

    bool replaced() const noexcept { return decision != Decision::Uncorrected; }
};

struct CorrectionReport {
    std::size_t total_words = 0;  // countable (word + numeric) tokens
    std::size_t error_count = 0;
    std::size_t corrected = 0;
    std::size_t fallback = 0;
    std::size_t uncorrected = 0;
    std::vector<CorrectionOutcome> outcomes;
};

struct CorrectorOptions {
    CasePolicy case_policy = CasePolicy::Exact;
    int candidate_limit = kDefaultCandidateLimit;
    bool fallback = true;
};

/// Ranks `candidates` by the count of the n-gram (prefix tail + candidate),
/// starting at order prefix.size() + 1 and shortening the prefix from the
/// left down to order 2. The first order with any nonzero count decides: the
/// max-count candidate wins, ties going to the earlier list entry. With no
/// evidence anywhere, the first candidate wins as a fallback (when enabled).
/// token_index/original are left for the caller to fill.
CorrectionOutcome select_correction(std::span<const std::string_view> prefix,
                                    const CandidateList& candidates, const NGramModel& model,
                                    const CorrectorOptions& options = {});

struct CorrectionResult {
    std::string corrected_text;
    CorrectionReport report;
};

/// Runs the full pipeline over one document: detect, generate candidates,
/// select, apply. Errors are processed left to right, and each error's
/// prefix is the nearest preceding countable tokens with earlier corrections
/// already applied.
CorrectionResult correct_document(const TokenizedDocument& doc, const NGramModel& model,
                                  const CorrectorOptions& options = {});

/// Convenience overload: tokenizes `text` first.
CorrectionResult correct_text(std::string_view text, const NGramModel& model,
                              const CorrectorOptions& options = {});

}  // namespace ngramspell
