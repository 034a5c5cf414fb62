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

#include "ngramspell/corpus_builder.hpp"

#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ngramspell/errors.hpp"
#include "ngramspell/tokenizer.hpp"

namespace ngramspell {

namespace {

bool is_sentence_terminator(const Token& token) {
    return token.is_punctuation() &&
           token.surface.find_first_of(".!?") != std::string::npos;
}

}  // namespace

CorpusCounts count_ngrams(std::string_view corpus, const BuildOptions& options) {
    if (options.max_order < 1 || options.max_order > kMaxOrder) {
        throw std::invalid_argument("max_order must be in 1.." + std::to_string(kMaxOrder));
    }
    if (options.min_count < 1) {
        throw std::invalid_argument("min_count must be >= 1");
    }

    CorpusCounts result;
    const TokenizedDocument doc = tokenize(corpus);

    // Ring of the most recent window-eligible tokens, oldest first.
    std::vector<std::string_view> window;
    window.reserve(options.max_order);

    std::string key;
    for (const Token& token : doc.tokens) {
        if (token.is_punctuation()) {
            if (options.sentence_split && is_sentence_terminator(token)) window.clear();
            continue;
        }
        ++result.stats.token_count;
        if (static_cast<int>(window.size()) == options.max_order) {
            window.erase(window.begin());
        }
        window.push_back(token.surface);

        // Every order-n window ending at this token.
        for (int n = 1; n <= static_cast<int>(window.size()); ++n) {
            key.clear();
            for (std::size_t i = window.size() - n; i < window.size(); ++i) {
                if (!key.empty()) key.push_back(' ');
                key.append(window[i]);
            }
            auto& bucket = result.by_order[n];
            const auto it = bucket.find(std::string_view(key));
            if (it == bucket.end()) {
                bucket.emplace(key, 1);
            } else {
                ++it->second;
            }
        }
    }

    for (int n = 1; n <= options.max_order; ++n) {
        auto& bucket = result.by_order[n];
        result.stats.distinct_ngrams[n] = bucket.size();
        if (options.min_count > 1) {
            for (auto it = bucket.begin(); it != bucket.end();) {
                if (it->second < options.min_count) {
                    it = bucket.erase(it);
                    ++result.stats.dropped_below_threshold[n];
                } else {
                    ++it;
                }
            }
        }
    }
    return result;
}

CorpusCounts count_ngrams(std::istream& corpus, const BuildOptions& options) {
    std::ostringstream buffer;
    buffer << corpus.rdbuf();
    if (corpus.bad()) throw IoError("corpus stream read failure");
    const std::string text = std::move(buffer).str();
    return count_ngrams(std::string_view(text), options);
}

}  // namespace ngramspell
