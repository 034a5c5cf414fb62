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

#include "ngramspell/candidates.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "ngramspell/utf8.hpp"

namespace ngramspell {

std::vector<std::string> char_bigrams(std::string_view word) {
    std::vector<std::string> bigrams;
    std::size_t prev_begin = 0;
    bool have_prev = false;
    for (std::size_t pos = 0; pos < word.size();) {
        const std::size_t begin = pos;
        utf8::decode_next(word, pos);
        if (have_prev) {
            bigrams.emplace_back(word.substr(prev_begin, pos - prev_begin));
        }
        prev_begin = begin;
        have_prev = true;
    }
    return bigrams;
}

CandidateList generate_candidates(std::string_view error_word, const NGramModel& model, int k) {
    if (k < 1) throw std::invalid_argument("candidate limit must be >= 1");

    CandidateList list;
    list.error_word = std::string(error_word);

    // Distinct bigram types of the error word, first occurrence order.
    std::vector<std::string> distinct;
    {
        std::unordered_set<std::string> seen;
        for (const auto& bigram : char_bigrams(error_word)) {
            if (seen.insert(bigram).second) distinct.push_back(bigram);
        }
    }
    if (distinct.empty()) return list;  // <2 characters: uncorrectable

    const CharBigramIndex& index = model.bigram_index();
    // Index buckets list each word at most once per bigram, so summing bucket
    // hits over distinct error bigrams counts distinct shared types.
    std::unordered_map<std::uint32_t, int> scores;
    for (const auto& bigram : distinct) {
        for (const std::uint32_t id : index.bucket(bigram)) {
            ++scores[id];
        }
    }
    if (scores.empty()) return list;

    const std::size_t error_length = utf8::length(error_word);
    std::vector<Candidate> pool;
    pool.reserve(scores.size());
    for (const auto& [id, score] : scores) {
        const std::string& word = index.word(id);
        pool.push_back(Candidate{word, score, model.lookup_unigram(word)});
    }

    const auto length_gap = [error_length](const Candidate& c) {
        const std::size_t len = utf8::length(c.word);
        return len > error_length ? len - error_length : error_length - len;
    };
    std::sort(pool.begin(), pool.end(), [&](const Candidate& a, const Candidate& b) {
        if (a.shared_bigrams != b.shared_bigrams) return a.shared_bigrams > b.shared_bigrams;
        if (a.unigram_count != b.unigram_count) return a.unigram_count > b.unigram_count;
        const auto gap_a = length_gap(a);
        const auto gap_b = length_gap(b);
        if (gap_a != gap_b) return gap_a < gap_b;
        return a.word < b.word;
    });
    if (pool.size() > static_cast<std::size_t>(k)) {
        pool.resize(static_cast<std::size_t>(k));
    }
    list.candidates = std::move(pool);
    return list;
}

}  // namespace ngramspell
