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

#include "ngramspell/evaluator.hpp"

#include <sstream>
#include <stdexcept>
#include <vector>

#include "ngramspell/errors.hpp"
#include "ngramspell/tokenizer.hpp"

namespace ngramspell {

namespace {

std::vector<std::string_view> countable_tokens(const TokenizedDocument& doc) {
    std::vector<std::string_view> words;
    words.reserve(doc.tokens.size());
    for (const Token& token : doc.tokens) {
        if (!token.is_punctuation()) words.push_back(token.surface);
    }
    return words;
}

}  // namespace

TokenErrorCount count_token_errors(std::string_view text, std::string_view ground_truth) {
    const TokenizedDocument left_doc = tokenize(text);
    const TokenizedDocument right_doc = tokenize(ground_truth);
    const auto left = countable_tokens(left_doc);
    const auto right = countable_tokens(right_doc);
    if (left.size() != right.size()) {
        throw AlignmentError(left.size(), right.size());
    }
    TokenErrorCount result;
    result.total_words = right.size();
    for (std::size_t i = 0; i < left.size(); ++i) {
        if (left[i] != right[i]) ++result.mismatches;
    }
    return result;
}

EvaluationReport evaluate_counts(std::size_t errors_before, std::size_t errors_after,
                                 std::size_t q) {
    if (errors_before > q || errors_after > q) {
        throw std::invalid_argument("error counts cannot exceed the word count");
    }
    EvaluationReport report;
    report.total_words = q;
    report.errors_before = errors_before;
    report.errors_after = errors_after;
    if (q > 0) {
        report.rate_before = static_cast<double>(errors_before) / static_cast<double>(q);
        report.rate_after = static_cast<double>(errors_after) / static_cast<double>(q);
        report.rate_before_milli = static_cast<std::uint64_t>(errors_before) * 1000 / q;
        report.rate_after_milli = static_cast<std::uint64_t>(errors_after) * 1000 / q;
    }
    report.all_corrected = errors_after == 0;
    if (!report.all_corrected) {
        report.improvement_exact =
            static_cast<double>(errors_before) / static_cast<double>(errors_after);
        if (report.rate_after_milli > 0) {
            report.improvement_centi = report.rate_before_milli * 100 / report.rate_after_milli;
        }
    }
    return report;
}

EvaluationReport evaluate(std::string_view ocr_text, std::string_view corrected_text,
                          std::string_view ground_truth) {
    const TokenErrorCount before = count_token_errors(ocr_text, ground_truth);
    const TokenErrorCount after = count_token_errors(corrected_text, ground_truth);
    return evaluate_counts(before.mismatches, after.mismatches, before.total_words);
}

std::string format_rate(std::uint64_t milli) {
    std::string fraction = std::to_string(milli % 1000);
    fraction.insert(0, 3 - fraction.size(), '0');
    return std::to_string(milli / 1000) + "." + fraction;
}

std::string format_percent(std::uint64_t milli) {
    return std::to_string(milli / 10) + "." + std::to_string(milli % 10) + "%";
}

std::string format_ratio(std::uint64_t centi) {
    std::string fraction = std::to_string(centi % 100);
    fraction.insert(0, 2 - fraction.size(), '0');
    return std::to_string(centi / 100) + "." + fraction;
}

std::string render_report(const EvaluationReport& report) {
    std::ostringstream out;
    out << "words:            " << report.total_words << "\n";
    out << "errors before:    " << report.errors_before << "\n";
    out << "errors after:     " << report.errors_after << "\n";
    out << "error rate before: " << format_rate(report.rate_before_milli) << " ("
        << format_percent(report.rate_before_milli) << ")\n";
    out << "error rate after:  " << format_rate(report.rate_after_milli) << " ("
        << format_percent(report.rate_after_milli) << ")\n";
    if (report.all_corrected) {
        out << "improvement:       all errors corrected\n";
    } else {
        std::ostringstream exact;
        exact.precision(6);
        exact << report.improvement_exact;
        if (report.rate_after_milli > 0) {
            out << "improvement:       " << format_ratio(report.improvement_centi)
                << " (from displayed rates), " << exact.str() << " (exact)\n";
        } else {
            // The displayed after-rate truncates to 0.000; only the exact
            // ratio is meaningful.
            out << "improvement:       " << exact.str() << " (exact)\n";
        }
    }
    return std::move(out).str();
}

}  // namespace ngramspell
