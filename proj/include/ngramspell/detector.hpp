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
#include <vector>

#include "ngramspell/ngram_model.hpp"
#include "ngramspell/tokenizer.hpp"

namespace ngramspell {

/// How a word is matched against the vocabulary.
///  - Exact: the stored surface form only.
///  - FoldIfAbsent: exact first, then the ASCII-lowercased form, then the
///    initial-capital form; found under any of them counts as known. Keeps
///    sentence-initial capitals from being flagged against a lowercase-heavy
///    vocabulary.
enum class CasePolicy {
    Exact,
    FoldIfAbsent,
};

std::string_view to_string(CasePolicy policy);
CasePolicy parse_case_policy(std::string_view name);  // throws ParseError on unknown name

/// Vocabulary count of `word` under the policy (0 = unknown).
std::uint64_t lookup_with_policy(const NGramModel& model, std::string_view word,
                                 CasePolicy policy);

/// A word token absent from the vocabulary.
struct DetectedError {
    std::size_t token_index = 0;  // position in TokenizedDocument.tokens
    std::string surface;

    bool operator==(const DetectedError&) const = default;
};

/// Flags exactly the word-kind tokens whose lookup count is 0 under the
/// policy, in document order. Numeric and punctuation tokens are never
/// flagged.
std::vector<DetectedError> detect_errors(const TokenizedDocument& doc, const NGramModel& model,
                                         CasePolicy policy = CasePolicy::Exact);

}  // namespace ngramspell
