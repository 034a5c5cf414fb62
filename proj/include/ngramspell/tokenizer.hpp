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
#include <string>
#include <unordered_map>
#include <vector>

namespace ngramspell {

enum class TokenKind {
    Word,         // at least one non-digit, non-punctuation code point
    Numeric,      // ASCII digits only; never spell-checked
    Punctuation,  // edge punctuation shed from a word, or a bare punctuation run
};

/// One token of the source text. byte_begin/byte_end slice the source to
/// exactly `surface`.
struct Token {
    std::string surface;
    std::size_t byte_begin = 0;
    std::size_t byte_end = 0;
    TokenKind kind = TokenKind::Word;

    bool is_word() const noexcept { return kind == TokenKind::Word; }
    bool is_punctuation() const noexcept { return kind == TokenKind::Punctuation; }
};

/// The tokenized text. Tokens are in source order and non-overlapping;
/// everything between consecutive tokens is whitespace.
struct TokenizedDocument {
    std::string source;
    std::vector<Token> tokens;

    std::size_t size() const noexcept { return tokens.size(); }
    /// Tokens that count as words for n-gram purposes (Word + Numeric).
    std::size_t word_count() const noexcept;
};

/// Splits on whitespace, then sheds leading/trailing punctuation (quotes,
/// brackets, commas, periods, semicolons, colons, guillemets) into separate
/// punctuation tokens. Interior apostrophes and hyphens stay inside the word.
TokenizedDocument tokenize(std::string_view text);

/// Rebuilds the source text with the given tokens replaced. Indices are
/// positions in doc.tokens; replacements must not contain whitespace.
std::string detokenize(const TokenizedDocument& doc,
                       const std::unordered_map<std::size_t, std::string>& replacements);

/// True if the code point belongs to the shed-punctuation set.
bool is_shed_punctuation(char32_t cp);

}  // namespace ngramspell
