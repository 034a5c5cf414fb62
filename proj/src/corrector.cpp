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

#include "ngramspell/corrector.hpp"

#include <algorithm>
#include <unordered_map>

namespace ngramspell {

std::string_view to_string(Decision decision) {
    switch (decision) {
        case Decision::Corrected:
            return "corrected";
        case Decision::Fallback:
            return "fallback";
        case Decision::Uncorrected:
            return "uncorrected";
    }
    return "uncorrected";
}

CorrectionOutcome select_correction(std::span<const std::string_view> prefix,
                                    const CandidateList& candidates, const NGramModel& model,
                                    const CorrectorOptions& options) {
    CorrectionOutcome outcome;
    outcome.original = candidates.error_word;

    if (candidates.empty()) {
        outcome.decision = Decision::Uncorrected;
        outcome.reason = kReasonNoCandidates;
        return outcome;
    }

    const int max_prefix =
        static_cast<int>(std::min<std::size_t>(prefix.size(), kMaxOrder - 1));
    std::vector<std::string_view> query;
    for (int used = max_prefix; used >= 1; --used) {
        // The `used` nearest prefix tokens, then the candidate slot.
        query.assign(prefix.end() - used, prefix.end());
        query.push_back({});

        const Candidate* best = nullptr;
        std::uint64_t best_count = 0;
        for (const Candidate& candidate : candidates.candidates) {
            query.back() = candidate.word;
            const std::uint64_t count = model.lookup_ngram(query);
            if (count > best_count) {  // strict: ties keep the earlier entry
                best_count = count;
                best = &candidate;
            }
        }
        if (best != nullptr) {
            outcome.decision = Decision::Corrected;
            outcome.replacement = best->word;
            outcome.context_count = best_count;
            outcome.order_used = used + 1;
            return outcome;
        }
    }

    if (options.fallback) {
        outcome.decision = Decision::Fallback;
        outcome.replacement = candidates.candidates.front().word;
        outcome.reason = kReasonNoContextEvidence;
    } else {
        outcome.decision = Decision::Uncorrected;
        outcome.reason = kReasonNoContextEvidenceFallbackDisabled;
    }
    return outcome;
}

CorrectionResult correct_document(const TokenizedDocument& doc, const NGramModel& model,
                                  const CorrectorOptions& options) {
    const std::vector<DetectedError> errors = detect_errors(doc, model, options.case_policy);

    // Working surfaces: corrections feed later errors' prefixes.
    std::vector<std::string> surfaces;
    surfaces.reserve(doc.tokens.size());
    for (const Token& token : doc.tokens) surfaces.push_back(token.surface);

    CorrectionResult result;
    result.report.total_words = doc.word_count();
    result.report.error_count = errors.size();

    std::unordered_map<std::size_t, std::string> replacements;
    std::vector<std::string_view> prefix;
    for (const DetectedError& error : errors) {
        prefix.clear();
        for (std::size_t i = error.token_index;
             i > 0 && prefix.size() < static_cast<std::size_t>(kMaxOrder) - 1;) {
            --i;
            if (!doc.tokens[i].is_punctuation()) prefix.push_back(surfaces[i]);
        }
        std::reverse(prefix.begin(), prefix.end());

        const CandidateList candidates =
            generate_candidates(error.surface, model, options.candidate_limit);
        CorrectionOutcome outcome = select_correction(prefix, candidates, model, options);
        outcome.token_index = error.token_index;
        outcome.original = error.surface;

        switch (outcome.decision) {
            case Decision::Corrected:
                ++result.report.corrected;
                break;
            case Decision::Fallback:
                ++result.report.fallback;
                break;
            case Decision::Uncorrected:
                ++result.report.uncorrected;
                break;
        }
        if (outcome.replaced()) {
            surfaces[error.token_index] = outcome.replacement;
            replacements[error.token_index] = outcome.replacement;
        }
        result.report.outcomes.push_back(std::move(outcome));
    }

    result.corrected_text = detokenize(doc, replacements);
    return result;
}

CorrectionResult correct_text(std::string_view text, const NGramModel& model,
                              const CorrectorOptions& options) {
    return correct_document(tokenize(text), model, options);
}

}  // namespace ngramspell
