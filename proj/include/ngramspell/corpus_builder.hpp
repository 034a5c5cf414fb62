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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string_view>

#include "ngramspell/ngram_model.hpp"

namespace ngramspell {

/// Counters gathered while counting a corpus. Indexed by order (1..5);
/// index 0 is unused.
struct CorpusStats {
    std::uint64_t token_count = 0;  // countable (word + numeric) tokens seen
    std::array<std::uint64_t, kMaxOrder + 1> distinct_ngrams{};          // before thresholding
    std::array<std::uint64_t, kMaxOrder + 1> dropped_below_threshold{};  // removed by min_count

    bool operator==(const CorpusStats&) const = default;
};

struct BuildOptions {
    int max_order = kMaxOrder;     // 1..5
    std::uint64_t min_count = 1;   // records with count < min_count are dropped
    bool sentence_split = false;   // if set, windows do not cross . ! ? tokens
};

/// N-gram counts per order plus the gathered stats. by_order[n] holds the
/// order-n counts (keys joined with single spaces); order 1 keys are words.
struct CorpusCounts {
    std::array<CountMap, kMaxOrder + 1> by_order{};
    CorpusStats stats;
};

/// Counts every window of n consecutive countable tokens for n = 1..max_order.
/// Countable = word and numeric tokens; punctuation tokens are invisible to
/// windows (they neither appear in n-grams nor break them, unless
/// sentence_split is set and the token contains a sentence terminator).
/// Thresholding by min_count happens after counting; stats record what was
/// dropped.
CorpusCounts count_ngrams(std::string_view corpus, const BuildOptions& options = {});

/// Stream variant; reads the whole stream. Throws IoError on read failure.
CorpusCounts count_ngrams(std::istream& corpus, const BuildOptions& options = {});

}  // namespace ngramspell
