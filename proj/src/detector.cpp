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

#include "ngramspell/detector.hpp"

#include <cctype>

#include "ngramspell/errors.hpp"

namespace ngramspell {

namespace {

std::string ascii_lower(std::string_view word) {
    std::string out(word);
    for (char& c : out) {
        c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::string ascii_initial_capital(std::string_view word) {
    std::string out = ascii_lower(word);
    if (!out.empty()) {
        out[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(out[0])));
    }
    return out;
}

}  // namespace

std::string_view to_string(CasePolicy policy) {
    switch (policy) {
        case CasePolicy::Exact:
            return "exact";
        case CasePolicy::FoldIfAbsent:
            return "fold-if-absent";
    }
    return "exact";
}

CasePolicy parse_case_policy(std::string_view name) {
    if (name == "exact") return CasePolicy::Exact;
    if (name == "fold-if-absent") return CasePolicy::FoldIfAbsent;
    throw ParseError("unknown case policy \"" + std::string(name) +
                     "\" (expected \"exact\" or \"fold-if-absent\")");
}

std::uint64_t lookup_with_policy(const NGramModel& model, std::string_view word,
                                 CasePolicy policy) {
    const std::uint64_t exact = model.lookup_unigram(word);
    if (exact != 0 || policy == CasePolicy::Exact) return exact;

    // Case folding is ASCII-only; non-ASCII bytes pass through untouched, so
    // accented words fold predictably rather than half-heartedly.
    const std::string lower = ascii_lower(word);
    if (lower != word) {
        if (const auto count = model.lookup_unigram(lower); count != 0) return count;
    }
    const std::string capital = ascii_initial_capital(word);
    if (capital != word && capital != lower) {
        if (const auto count = model.lookup_unigram(capital); count != 0) return count;
    }
    return 0;
}

std::vector<DetectedError> detect_errors(const TokenizedDocument& doc, const NGramModel& model,
                                         CasePolicy policy) {
    std::vector<DetectedError> errors;
    for (std::size_t i = 0; i < doc.tokens.size(); ++i) {
        const Token& token = doc.tokens[i];
        if (token.kind != TokenKind::Word) continue;
        if (lookup_with_policy(model, token.surface, policy) == 0) {
            errors.push_back(DetectedError{i, token.surface});
        }
    }
    return errors;
}

}  // namespace ngramspell
