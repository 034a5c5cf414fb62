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

#include "ngramspell/web1t.hpp"

#include <zlib.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "ngramspell/errors.hpp"

namespace ngramspell {

namespace {

std::uint64_t parse_count(std::string_view field, std::size_t line_no) {
    if (field.empty()) throw ParseError("missing count", line_no);
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec == std::errc::result_out_of_range) {
        throw ParseError("count \"" + std::string(field) + "\" does not fit in 64 bits", line_no);
    }
    if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw ParseError("count \"" + std::string(field) + "\" is not a decimal integer",
                         line_no);
    }
    if (value == 0) throw ParseError("count must be >= 1", line_no);
    return value;
}

// Splits `line` at the single tab; returns {token field, count}.
std::pair<std::string_view, std::uint64_t> split_record(std::string_view line,
                                                        std::size_t line_no) {
    const auto tab = line.find('\t');
    if (tab == std::string_view::npos) {
        throw ParseError("missing tab separator", line_no);
    }
    return {line.substr(0, tab), parse_count(line.substr(tab + 1), line_no)};
}

std::vector<std::string_view> split_tokens(std::string_view field, std::size_t line_no) {
    std::vector<std::string_view> tokens;
    std::size_t begin = 0;
    while (true) {
        const auto space = field.find(' ', begin);
        const auto token = field.substr(begin, space - begin);
        if (token.empty()) throw ParseError("empty token (check spacing)", line_no);
        tokens.push_back(token);
        if (space == std::string_view::npos) break;
        begin = space + 1;
    }
    return tokens;
}

template <typename Fn>
void for_each_line(std::istream& in, Fn&& fn) {
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        fn(std::string_view(line), line_no);
    }
    if (in.bad()) throw IoError("stream read failure");
}

bool is_gzip(std::string_view data) {
    return data.size() >= 2 && static_cast<unsigned char>(data[0]) == 0x1f &&
           static_cast<unsigned char>(data[1]) == 0x8b;
}

}  // namespace

UnigramTable load_vocabulary(std::istream& in) {
    UnigramTable table;
    for_each_line(in, [&](std::string_view line, std::size_t line_no) {
        const auto [field, count] = split_record(line, line_no);
        if (field.empty()) throw ParseError("missing word before tab", line_no);
        if (field.find(' ') != std::string_view::npos) {
            throw ParseError("expected 1 token, got " +
                                 std::to_string(split_tokens(field, line_no).size()),
                             line_no);
        }
        table.add(field, count);
    });
    return table;
}

ContextTable load_ngrams(std::istream& in, int order) {
    ContextTable table(order);
    for_each_line(in, [&](std::string_view line, std::size_t line_no) {
        const auto [field, count] = split_record(line, line_no);
        const auto tokens = split_tokens(field, line_no);
        if (static_cast<int>(tokens.size()) != order) {
            throw ParseError("expected " + std::to_string(order) + " tokens, got " +
                                 std::to_string(tokens.size()),
                             line_no);
        }
        table.add(std::span<const std::string_view>(tokens), count);
    });
    return table;
}

UnigramTable load_vocabulary_file(const std::string& path) {
    try {
        std::istringstream in(read_file_auto(path));
        return load_vocabulary(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

ContextTable load_ngrams_file(const std::string& path, int order) {
    try {
        std::istringstream in(read_file_auto(path));
        return load_ngrams(in, order);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }
}

std::vector<NGramRecord> to_records(const UnigramTable& table) {
    std::vector<NGramRecord> records;
    records.reserve(table.size());
    for (const auto& [word, count] : table.entries()) {
        records.push_back(NGramRecord{{word}, count});
    }
    return records;
}

std::vector<NGramRecord> to_records(const ContextTable& table) {
    return to_records(table.entries(), table.order());
}

std::vector<NGramRecord> to_records(const CountMap& counts, int order) {
    std::vector<NGramRecord> records;
    records.reserve(counts.size());
    for (const auto& [key, count] : counts) {
        NGramRecord record;
        record.count = count;
        std::size_t begin = 0;
        while (true) {
            const auto space = key.find(' ', begin);
            record.tokens.emplace_back(key.substr(begin, space - begin));
            if (space == std::string::npos) break;
            begin = space + 1;
        }
        if (static_cast<int>(record.tokens.size()) != order) {
            throw std::invalid_argument("key \"" + key + "\" does not have order " +
                                        std::to_string(order));
        }
        records.push_back(std::move(record));
    }
    return records;
}

std::size_t write_web1t(std::vector<NGramRecord> records, std::ostream& out) {
    std::size_t order = 0;
    for (const auto& record : records) {
        if (record.tokens.empty() || record.tokens.size() > kMaxOrder) {
            throw std::invalid_argument("record must have 1..5 tokens");
        }
        if (order == 0) order = record.tokens.size();
        if (record.tokens.size() != order) {
            throw std::invalid_argument("records of mixed order in one write");
        }
        if (record.count == 0) throw std::invalid_argument("record count must be >= 1");
        for (const auto& t : record.tokens) {
            if (t.empty() || t.find_first_of(" \t\n\r") != std::string::npos) {
                throw std::invalid_argument("record token \"" + t + "\" is not writable");
            }
        }
    }
    std::sort(records.begin(), records.end(),
              [](const NGramRecord& a, const NGramRecord& b) { return a.tokens < b.tokens; });

    std::size_t bytes = 0;
    for (const auto& record : records) {
        std::string line;
        for (std::size_t i = 0; i < record.tokens.size(); ++i) {
            if (i > 0) line.push_back(' ');
            line.append(record.tokens[i]);
        }
        line.push_back('\t');
        line.append(std::to_string(record.count));
        line.push_back('\n');
        out.write(line.data(), static_cast<std::streamsize>(line.size()));
        bytes += line.size();
    }
    if (!out) throw IoError("write failure");
    return bytes;
}

std::string read_file_auto(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) throw IoError("cannot read " + path);
    std::string data = std::move(buffer).str();
    if (is_gzip(data)) return gzip_decompress(data);
    return data;
}

std::string gzip_compress(std::string_view data) {
    z_stream zs{};
    // windowBits 15+16 selects the gzip container.
    if (deflateInit2(&zs, Z_DEFAULT_COMPRESSION, Z_DEFLATED, 15 + 16, 8,
                     Z_DEFAULT_STRATEGY) != Z_OK) {
        throw IoError("deflateInit2 failed");
    }
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());

    std::string out;
    char chunk[16384];
    int ret = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(chunk);
        zs.avail_out = sizeof(chunk);
        ret = deflate(&zs, Z_FINISH);
        if (ret != Z_OK && ret != Z_STREAM_END) {
            deflateEnd(&zs);
            throw IoError("gzip compression failed");
        }
        out.append(chunk, sizeof(chunk) - zs.avail_out);
    } while (ret != Z_STREAM_END);
    deflateEnd(&zs);
    return out;
}

std::string gzip_decompress(std::string_view data) {
    z_stream zs{};
    // windowBits 15+32 accepts both gzip and zlib wrappers.
    if (inflateInit2(&zs, 15 + 32) != Z_OK) throw IoError("inflateInit2 failed");
    zs.next_in = reinterpret_cast<Bytef*>(const_cast<char*>(data.data()));
    zs.avail_in = static_cast<uInt>(data.size());

    std::string out;
    char chunk[16384];
    int ret = Z_OK;
    do {
        zs.next_out = reinterpret_cast<Bytef*>(chunk);
        zs.avail_out = sizeof(chunk);
        ret = inflate(&zs, Z_NO_FLUSH);
        if (ret != Z_OK && ret != Z_STREAM_END) {
            inflateEnd(&zs);
            throw IoError("gzip decompression failed (corrupt input?)");
        }
        out.append(chunk, sizeof(chunk) - zs.avail_out);
    } while (ret != Z_STREAM_END);
    inflateEnd(&zs);
    return out;
}

}  // namespace ngramspell
