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

#include "ngramspell/ngram_model.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <stdexcept>

#include "ngramspell/utf8.hpp"

namespace ngramspell {

namespace {

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; });
}

// Counts saturate instead of wrapping when merged shards overflow 64 bits.
std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) return std::numeric_limits<std::uint64_t>::max();
    return r;
}

void check_token(std::string_view token) {
    if (token.empty()) throw std::invalid_argument("n-gram token must be non-empty");
    if (has_whitespace(token)) {
        throw std::invalid_argument("n-gram token \"" + std::string(token) +
                                    "\" contains whitespace");
    }
}

}  // namespace

std::string join_tokens(std::span<const std::string_view> tokens) {
    std::string key;
    std::size_t total = tokens.empty() ? 0 : tokens.size() - 1;
    for (const auto& t : tokens) total += t.size();
    key.reserve(total);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (i > 0) key.push_back(' ');
        key.append(tokens[i]);
    }
    return key;
}

void UnigramTable::add(std::string_view word, std::uint64_t count) {
    check_token(word);
    if (count == 0) throw std::invalid_argument("unigram count must be >= 1");
    auto it = entries_.find(word);
    if (it == entries_.end()) {
        entries_.emplace(std::string(word), count);
    } else {
        it->second = saturating_add(it->second, count);
    }
}

std::uint64_t UnigramTable::count(std::string_view word) const {
    auto it = entries_.find(word);
    return it == entries_.end() ? 0 : it->second;
}

std::vector<std::string_view> UnigramTable::sorted_words() const {
    std::vector<std::string_view> words;
    words.reserve(entries_.size());
    for (const auto& [word, _] : entries_) words.push_back(word);
    std::sort(words.begin(), words.end());
    return words;
}

ContextTable::ContextTable(int order) : order_(order) {
    if (order < 2 || order > kMaxOrder) {
        throw std::invalid_argument("context table order must be in 2.." +
                                    std::to_string(kMaxOrder));
    }
}

void ContextTable::add(std::span<const std::string_view> tokens, std::uint64_t count) {
    if (static_cast<int>(tokens.size()) != order_) {
        throw std::invalid_argument("expected " + std::to_string(order_) + " tokens, got " +
                                    std::to_string(tokens.size()));
    }
    for (const auto& t : tokens) check_token(t);
    add_joined(join_tokens(tokens), count);
}

void ContextTable::add_joined(std::string_view key, std::uint64_t count) {
    if (count == 0) throw std::invalid_argument("n-gram count must be >= 1");
    // The joined form must still be a well-formed sequence of exactly
    // order() tokens, or count(span) and count_joined would disagree.
    int tokens = 1;
    std::size_t begin = 0;
    for (std::size_t i = 0; i <= key.size(); ++i) {
        if (i == key.size() || key[i] == ' ') {
            check_token(key.substr(begin, i - begin));
            begin = i + 1;
            if (i < key.size()) ++tokens;
        }
    }
    if (tokens != order_) {
        throw std::invalid_argument("expected " + std::to_string(order_) + " tokens, got " +
                                    std::to_string(tokens));
    }
    auto it = entries_.find(key);
    if (it == entries_.end()) {
        entries_.emplace(std::string(key), count);
    } else {
        it->second = saturating_add(it->second, count);
    }
}

std::uint64_t ContextTable::count(std::span<const std::string_view> tokens) const {
    if (static_cast<int>(tokens.size()) != order_) return 0;
    return count_joined(join_tokens(tokens));
}

std::uint64_t ContextTable::count_joined(std::string_view key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? 0 : it->second;
}

CharBigramIndex CharBigramIndex::build(const UnigramTable& vocab) {
    CharBigramIndex index;
    index.words_.reserve(vocab.size());
    for (auto word : vocab.sorted_words()) index.words_.emplace_back(word);

    for (std::uint32_t id = 0; id < index.words_.size(); ++id) {
        const std::string& w = index.words_[id];
        std::size_t prev = 0;
        std::size_t pos = 0;
        if (pos < w.size()) utf8::decode_next(w, pos);
        while (pos < w.size()) {
            std::size_t next = pos;
            utf8::decode_next(w, next);
            std::string bigram = w.substr(prev, next - prev);
            auto& bucket = index.buckets_[bigram];
            // A repeated bigram inside one word is indexed once.
            if (bucket.empty() || bucket.back() != id) bucket.push_back(id);
            prev = pos;
            pos = next;
        }
    }
    return index;
}

std::span<const std::uint32_t> CharBigramIndex::bucket(std::string_view bigram) const {
    auto it = buckets_.find(bigram);
    if (it == buckets_.end()) return {};
    return it->second;
}

NGramModel::NGramModel(UnigramTable unigrams, std::vector<ContextTable> contexts)
    : unigrams_(std::move(unigrams)) {
    for (auto& table : contexts) {
        const int order = table.order();
        if (order < 2 || order > kMaxOrder) {
            throw std::invalid_argument("model context order must be in 2..5");
        }
        if (contexts_[order].order() != 0) {
            throw std::invalid_argument("duplicate context table for order " +
                                        std::to_string(order));
        }
        contexts_[order] = std::move(table);
    }
    index_ = CharBigramIndex::build(unigrams_);
}

const ContextTable& NGramModel::context(int order) const {
    if (order < 2 || order > kMaxOrder) {
        throw std::invalid_argument("context order must be in 2..5");
    }
    return contexts_[order];
}

std::uint64_t NGramModel::lookup_ngram(std::span<const std::string_view> tokens) const {
    const auto n = static_cast<int>(tokens.size());
    if (n < 2 || n > kMaxOrder) {
        throw std::invalid_argument("lookup_ngram requires 2..5 tokens, got " +
                                    std::to_string(tokens.size()));
    }
    return contexts_[n].count(tokens);
}

std::uint64_t NGramModel::lookup_ngram(const std::vector<std::string>& tokens) const {
    std::vector<std::string_view> views(tokens.begin(), tokens.end());
    return lookup_ngram(std::span<const std::string_view>(views));
}

}  // namespace ngramspell
