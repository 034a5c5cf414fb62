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
#include <string>
#include <string_view>
#include <vector>

#include "ngramspell/ngram_model.hpp"

namespace ngramspell {

inline constexpr int kDefaultCandidateLimit = 10;

/// A vocabulary word proposed as a correction.
struct Candidate {
    std::string word;
    int shared_bigrams = 0;          // distinct error-word bigram types found in word
    std::uint64_t unigram_count = 0;

    bool operator==(const Candidate&) const = default;
};

/// Ranked candidates for one error word, best first, at most k entries.
struct CandidateList {
    std::string error_word;
    std::vector<Candidate> candidates;

    bool empty() const noexcept { return candidates.empty(); }
    std::size_t size() const noexcept { return candidates.size(); }
};

/// All contiguous 2-character (code point) windows of `word`, in order,
/// duplicates preserved. An empty or 1-character word has none.
std::vector<std::string> char_bigrams(std::string_view word);

/// Vocabulary words sharing at least one distinct bigram type with
/// `error_word`, scored by the number of distinct shared types, ordered by
/// score desc, then unigram count desc, then smaller length difference from
/// the error word, then lexicographic — and truncated to k. An error word
/// shorter than 2 characters yields an empty list (nothing to index on).
CandidateList generate_candidates(std::string_view error_word, const NGramModel& model,
                                  int k = kDefaultCandidateLimit);

}  // namespace ngramspell
