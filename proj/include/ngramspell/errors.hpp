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
#include <stdexcept>
#include <string>

namespace ngramspell {

/// Malformed input data (bad n-gram line, bad manifest field, ...).
/// `line()` is 1-based; 0 means "not tied to a specific line".
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : std::move(message)),
          line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// File could not be read or written.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Two texts that must be compared position by position tokenize to
/// different word counts.
class AlignmentError : public std::runtime_error {
public:
    AlignmentError(std::size_t left_words, std::size_t right_words)
        : std::runtime_error("texts are not token-aligned: " + std::to_string(left_words) +
                             " vs " + std::to_string(right_words) + " word tokens"),
          left_words_(left_words),
          right_words_(right_words) {}

    std::size_t left_words() const noexcept { return left_words_; }
    std::size_t right_words() const noexcept { return right_words_; }

private:
    std::size_t left_words_;
    std::size_t right_words_;
};

}  // namespace ngramspell
