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
#include <string>
#include <string_view>

namespace ngramspell {

/// Positional word-token comparison of two aligned texts.
struct TokenErrorCount {
    std::size_t mismatches = 0;
    std::size_t total_words = 0;

    bool operator==(const TokenErrorCount&) const = default;
};

/// Compares countable (word + numeric) tokens position by position; both
/// texts must yield the same count of them. Throws AlignmentError (carrying
/// both counts) otherwise — no fuzzy alignment is attempted, because a
/// positional error rate over drifted positions would be meaningless.
TokenErrorCount count_token_errors(std::string_view text, std::string_view ground_truth);

/// Error rates before/after correction and the improvement between them.
///
/// Rates are kept exact (errors/q as double) and also carried in the form
/// they are displayed: per-mille truncated toward zero, so 30/141 displays
/// as 0.212 / 21.2%. The displayed improvement divides the truncated rates
/// and truncates to two decimals (212/42 -> 5.04); the exact improvement is
/// errors_before/errors_after. Truncation, not rounding, is what makes the
/// displayed chain self-consistent: each printed figure is derivable from
/// the previously printed one.
struct EvaluationReport {
    std::size_t total_words = 0;  // q
    std::size_t errors_before = 0;
    std::size_t errors_after = 0;

    double rate_before = 0.0;  // exact errors_before / q (0 when q = 0)
    double rate_after = 0.0;

    std::uint64_t rate_before_milli = 0;  // trunc(errors_before * 1000 / q)
    std::uint64_t rate_after_milli = 0;

    bool all_corrected = false;       // errors_after == 0: improvement undefined
    double improvement_exact = 0.0;   // errors_before / errors_after, when defined
    std::uint64_t improvement_centi = 0;  // trunc(before_milli * 100 / after_milli)
};

/// Computes the report from raw counts. errors_* must be <= q.
EvaluationReport evaluate_counts(std::size_t errors_before, std::size_t errors_after,
                                 std::size_t q);

/// Computes the report from the three texts. All three must be token-aligned
/// (same countable-token count); AlignmentError otherwise.
EvaluationReport evaluate(std::string_view ocr_text, std::string_view corrected_text,
                          std::string_view ground_truth);

/// "0.212" from 212; the 3-decimal display form of a per-mille rate.
std::string format_rate(std::uint64_t milli);
/// "21.2%" from 212.
std::string format_percent(std::uint64_t milli);
/// "5.04" from 504; the 2-decimal display form of a per-cent ratio.
std::string format_ratio(std::uint64_t centi);

/// Plain-text summary block (counts, both rates, both improvement forms).
std::string render_report(const EvaluationReport& report);

}  // namespace ngramspell
