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
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace ngramspell {

inline constexpr int kMaxOrder = 5;

// Transparent hashing so tables can be probed with string_view keys.
struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
        return std::hash<std::string_view>{}(s);
    }
};

using CountMap = std::unordered_map<std::string, std::uint64_t, StringHash, std::equal_to<>>;

/// Word -> occurrence count. Doubles as the spelling dictionary: a word is
/// "known" iff its count is nonzero. Surface forms are matched exactly;
/// case policy is the detector's business.
class UnigramTable {
public:
    /// Adds `count` to the word's entry (duplicate loads are merged).
    /// Word must be non-empty and whitespace-free; count must be >= 1.
    void add(std::string_view word, std::uint64_t count);

    /// Occurrence count, 0 if the word is absent.
    std::uint64_t count(std::string_view word) const;
    bool contains(std::string_view word) const { return count(word) != 0; }

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }

    const CountMap& entries() const noexcept { return entries_; }
    /// All words in lexicographic order.
    std::vector<std::string_view> sorted_words() const;

    bool operator==(const UnigramTable&) const = default;

private:
    CountMap entries_;
};

/// Fixed-order table of token sequences -> count. Keys are stored joined
/// with single spaces; absent sequences count 0.
class ContextTable {
public:
    ContextTable() = default;
    explicit ContextTable(int order);

    int order() const noexcept { return order_; }

    /// Adds `count` for the sequence (duplicates merged). tokens.size() must
    /// equal order(); tokens must be non-empty and whitespace-free.
    void add(std::span<const std::string_view> tokens, std::uint64_t count);
    /// Same, for a pre-joined single-space key.
    void add_joined(std::string_view key, std::uint64_t count);

    std::uint64_t count(std::span<const std::string_view> tokens) const;
    std::uint64_t count_joined(std::string_view key) const;

    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    const CountMap& entries() const noexcept { return entries_; }

    bool operator==(const ContextTable&) const = default;

private:
    int order_ = 0;
    CountMap entries_;
};

/// Inverted index: 2-character (code point) sequence -> the vocabulary words
/// containing it as a substring. Built once from a UnigramTable; words of
/// length < 2 appear in no bucket and are unreachable through the index.
class CharBigramIndex {
public:
    CharBigramIndex() = default;

    static CharBigramIndex build(const UnigramTable& vocab);

    /// Word ids sharing the given bigram, ascending. Empty if no bucket.
    std::span<const std::uint32_t> bucket(std::string_view bigram) const;

    const std::string& word(std::uint32_t id) const { return words_[id]; }
    const std::vector<std::string>& words() const noexcept { return words_; }
    std::size_t bucket_count() const noexcept { return buckets_.size(); }

    bool operator==(const CharBigramIndex&) const = default;

private:
    // words_ is sorted, so ids (and therefore the whole index) are identical
    // across rebuilds from an equal table.
    std::vector<std::string> words_;
    std::unordered_map<std::string, std::vector<std::uint32_t>, StringHash, std::equal_to<>>
        buckets_;
};

/// The full count model: vocabulary, context tables for orders 2..5, and the
/// character-bigram index. Immutable after construction; safe for any number
/// of concurrent readers.
class NGramModel {
public:
    NGramModel() : NGramModel(UnigramTable{}, {}) {}
    NGramModel(UnigramTable unigrams, std::vector<ContextTable> contexts);

    const UnigramTable& unigrams() const noexcept { return unigrams_; }
    const CharBigramIndex& bigram_index() const noexcept { return index_; }

    /// Context table for the given order (2..5); empty table if none loaded.
    const ContextTable& context(int order) const;

    /// Exact-match vocabulary count; 0 means "not a known word".
    std::uint64_t lookup_unigram(std::string_view word) const { return unigrams_.count(word); }

    /// Count of the token sequence in the matching-order table.
    /// tokens.size() must be in 2..5.
    std::uint64_t lookup_ngram(std::span<const std::string_view> tokens) const;
    std::uint64_t lookup_ngram(const std::vector<std::string>& tokens) const;

private:
    UnigramTable unigrams_;
    std::array<ContextTable, kMaxOrder + 1> contexts_;  // indexed by order, 2..5 used
    CharBigramIndex index_;
};

/// Joins tokens with single spaces (the context-table key form).
std::string join_tokens(std::span<const std::string_view> tokens);

}  // namespace ngramspell
