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

#include "ngramspell/tokenizer.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

#include "ngramspell/utf8.hpp"

namespace ngramspell {

namespace {

bool is_space_byte(char c) {
    return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Punctuation-only check used for classifying a whole surface, not for
// shedding: also covers dashes and ellipses so "--" is not a Word token.
bool is_punctuation_cp(char32_t cp) {
    if (cp < 0x80) {
        return cp != 0 && !utf8::is_ascii_digit(cp) && !utf8::is_ascii_alpha(cp);
    }
    switch (cp) {
        case 0x00AB: case 0x00BB:              // guillemets
        case 0x2018: case 0x2019:              // single curly quotes
        case 0x201C: case 0x201D:              // double curly quotes
        case 0x2013: case 0x2014:              // en/em dash
        case 0x2026:                           // ellipsis
            return true;
        default:
            return false;
    }
}

TokenKind classify(std::string_view surface) {
    bool all_digits = true;
    bool all_punct = true;
    for (std::size_t i = 0; i < surface.size();) {
        const char32_t cp = utf8::decode_next(surface, i);
        if (!utf8::is_ascii_digit(cp)) all_digits = false;
        if (!is_punctuation_cp(cp)) all_punct = false;
    }
    if (surface.empty()) return TokenKind::Punctuation;
    if (all_digits) return TokenKind::Numeric;
    if (all_punct) return TokenKind::Punctuation;
    return TokenKind::Word;
}

void push_token(TokenizedDocument& doc, std::string_view source, std::size_t begin,
                std::size_t end, TokenKind kind) {
    doc.tokens.push_back(Token{std::string(source.substr(begin, end - begin)), begin, end, kind});
}

}  // namespace

bool is_shed_punctuation(char32_t cp) {
    switch (cp) {
        case U'.': case U',': case U';': case U':':
        case U'"': case U'\'':
        case U'(': case U')': case U'[': case U']': case U'{': case U'}':
        case 0x00AB: case 0x00BB:
        case 0x2018: case 0x2019:
        case 0x201C: case 0x201D:
            return true;
        default:
            return false;
    }
}

std::size_t TokenizedDocument::word_count() const noexcept {
    return static_cast<std::size_t>(
        std::count_if(tokens.begin(), tokens.end(),
                      [](const Token& t) { return !t.is_punctuation(); }));
}

TokenizedDocument tokenize(std::string_view text) {
    TokenizedDocument doc;
    doc.source.assign(text);

    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && is_space_byte(text[i])) ++i;
        if (i >= text.size()) break;
        const std::size_t run_begin = i;
        while (i < text.size() && !is_space_byte(text[i])) ++i;
        const std::size_t run_end = i;

        // Shed punctuation off both edges of the whitespace-delimited run.
        std::vector<std::size_t> starts;
        std::vector<char32_t> cps;
        for (std::size_t p = run_begin; p < run_end;) {
            starts.push_back(p);
            cps.push_back(utf8::decode_next(text, p));
        }
        starts.push_back(run_end);

        std::size_t lead = 0;
        while (lead < cps.size() && is_shed_punctuation(cps[lead])) ++lead;
        std::size_t trail = cps.size();
        while (trail > lead && is_shed_punctuation(cps[trail - 1])) --trail;

        if (lead > 0) {
            push_token(doc, text, run_begin, starts[lead], TokenKind::Punctuation);
        }
        if (lead < trail) {
            push_token(doc, text, starts[lead], starts[trail],
                       classify(text.substr(starts[lead], starts[trail] - starts[lead])));
        }
        if (trail < cps.size()) {
            push_token(doc, text, starts[trail], run_end, TokenKind::Punctuation);
        }
    }
    return doc;
}

std::string detokenize(const TokenizedDocument& doc,
                       const std::unordered_map<std::size_t, std::string>& replacements) {
    std::map<std::size_t, const std::string*> ordered;
    for (const auto& [index, surface] : replacements) {
        if (index >= doc.tokens.size()) {
            throw std::out_of_range("detokenize: token index " + std::to_string(index) +
                                    " out of range (document has " +
                                    std::to_string(doc.tokens.size()) + " tokens)");
        }
        if (std::any_of(surface.begin(), surface.end(), is_space_byte)) {
            throw std::invalid_argument("detokenize: replacement \"" + surface +
                                        "\" contains whitespace");
        }
        ordered.emplace(index, &surface);
    }

    std::string out;
    out.reserve(doc.source.size());
    std::size_t cursor = 0;
    for (const auto& [index, surface] : ordered) {
        const Token& tok = doc.tokens[index];
        out.append(doc.source, cursor, tok.byte_begin - cursor);
        out.append(*surface);
        cursor = tok.byte_end;
    }
    out.append(doc.source, cursor, doc.source.size() - cursor);
    return out;
}

}  // namespace ngramspell
