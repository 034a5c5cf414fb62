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

// Web 1T text format: one record per line, tokens joined by a single space
// (0x20), a single tab (0x09) before the count, count as ASCII decimal,
// LF line terminator. The vocabulary file is the order-1 case. Files may be
// gzip-compressed; readers sniff the magic bytes.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ngramspell/ngram_model.hpp"

namespace ngramspell {

/// One n-gram record: 1..5 whitespace-free tokens and a count >= 1.
struct NGramRecord {
    std::vector<std::string> tokens;
    std::uint64_t count = 0;

    bool operator==(const NGramRecord&) const = default;
};

/// Reads a vocabulary stream (`word<TAB>count` lines). Duplicate words are
/// merged by summing counts; empty lines are skipped; an empty stream is a
/// valid empty table. Throws ParseError with the 1-based line number on a
/// malformed line.
UnigramTable load_vocabulary(std::istream& in);

/// Reads an n-gram stream of the given order (2..5). Every line must carry
/// exactly `order` space-separated tokens before the tab.
ContextTable load_ngrams(std::istream& in, int order);

/// File variants; transparently decompress gzip input (sniffed by magic
/// bytes, not by file name).
UnigramTable load_vocabulary_file(const std::string& path);
ContextTable load_ngrams_file(const std::string& path, int order);

/// Writes records in canonical form: lexicographically sorted by token
/// sequence, one per line. All records must have the same order and satisfy
/// the NGramRecord invariants. Returns the number of bytes written.
std::size_t write_web1t(std::vector<NGramRecord> records, std::ostream& out);

/// Conversion helpers for writing whole tables.
std::vector<NGramRecord> to_records(const UnigramTable& table);
std::vector<NGramRecord> to_records(const ContextTable& table);
std::vector<NGramRecord> to_records(const CountMap& counts, int order);

/// Reads a whole file into memory, gunzipping if the content starts with the
/// gzip magic bytes.
std::string read_file_auto(const std::string& path);

/// In-memory gzip compress/decompress (testing and tooling).
std::string gzip_compress(std::string_view data);
std::string gzip_decompress(std::string_view data);

}  // namespace ngramspell
