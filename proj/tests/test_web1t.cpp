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

#include <doctest.h>

#include <random>
#include <sstream>
#include <string>

#include "cli_runner.hpp"
#include "ngramspell/errors.hpp"

using namespace ngramspell;

namespace {

UnigramTable vocab_from(const std::string& text) {
    std::istringstream in(text);
    return load_vocabulary(in);
}

ContextTable ngrams_from(const std::string& text, int order) {
    std::istringstream in(text);
    return load_ngrams(in, order);
}

}  // namespace

TEST_CASE("vocabulary lines parse to entries") {
    const auto table = vocab_from("the\t23135851162\n");
    CHECK(table.size() == 1);
    CHECK(table.count("the") == 23135851162ULL);  // counts are 64-bit
}

TEST_CASE("empty input is a valid empty table") {
    CHECK(vocab_from("").size() == 0);
    CHECK(vocab_from("\n\n").size() == 0);
}

TEST_CASE("duplicate words merge by summation") {
    const auto table = vocab_from("x\t3\nx\t4\n");
    CHECK(table.size() == 1);
    CHECK(table.count("x") == 7);
}

TEST_CASE("zero count is rejected with the line number") {
    try {
        vocab_from("single\t343\nsangle\t0\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("malformed vocabulary lines are rejected") {
    CHECK_THROWS_AS(vocab_from("no-tab-here\n"), ParseError);
    CHECK_THROWS_AS(vocab_from("w\t\n"), ParseError);          // missing count
    CHECK_THROWS_AS(vocab_from("w\t12x\n"), ParseError);       // trailing garbage
    CHECK_THROWS_AS(vocab_from("w\t-3\n"), ParseError);        // sign
    CHECK_THROWS_AS(vocab_from("w\t99999999999999999999999\n"), ParseError);  // > 64 bits
    CHECK_THROWS_AS(vocab_from("a b\t3\n"), ParseError);       // two tokens
}

TEST_CASE("line numbers skip nothing: blank lines still count") {
    try {
        vocab_from("a\t1\n\nbad\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("n-gram lines must match the declared order") {
    const auto table = ngrams_from("case where only one single\t97\n", 5);
    CHECK(table.size() == 1);
    CHECK(table.count_joined("case where only one single") == 97);

    CHECK_THROWS_WITH_AS(ngrams_from("a b c\t5\n", 5),
                         doctest::Contains("expected 5 tokens, got 3"), ParseError);
    CHECK_THROWS_AS(ngrams_from("a  b\t1\n", 2), ParseError);  // double space = empty token
}

TEST_CASE("duplicate n-grams merge by summation") {
    const auto table = ngrams_from("x y\t3\nx y\t4\n", 2);
    CHECK(table.size() == 1);
    CHECK(table.count_joined("x y") == 7);
}

TEST_CASE("writer emits sorted canonical lines and returns the byte count") {
    std::ostringstream out;
    const auto bytes = write_web1t({{{"b"}, 1}, {{"a"}, 2}}, out);
    CHECK(out.str() == "a\t2\nb\t1\n");
    CHECK(bytes == out.str().size());
}

TEST_CASE("writer on an empty set writes nothing") {
    std::ostringstream out;
    CHECK(write_web1t({}, out) == 0);
    CHECK(out.str().empty());
}

TEST_CASE("writer rejects invalid record sets") {
    std::ostringstream out;
    CHECK_THROWS_AS(write_web1t({{{"a", "b"}, 1}, {{"c"}, 1}}, out),
                    std::invalid_argument);  // mixed order
    CHECK_THROWS_AS(write_web1t({{{"a"}, 0}}, out), std::invalid_argument);
    CHECK_THROWS_AS(write_web1t({{{"a b"}, 1}}, out), std::invalid_argument);
    CHECK_THROWS_AS(write_web1t({{{}, 1}}, out), std::invalid_argument);
}

TEST_CASE("write then load is the identity on tables") {
    std::mt19937_64 rng(20260822);
    const auto random_word = [&rng] {
        std::string w;
        const std::size_t len = 1 + rng() % 8;
        for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<char>('a' + rng() % 26));
        return w;
    };

    for (int round = 0; round < 120; ++round) {
        const int order = 1 + static_cast<int>(rng() % 5);
        const std::size_t records = rng() % 40;

        if (order == 1) {
            UnigramTable table;
            for (std::size_t i = 0; i < records; ++i) table.add(random_word(), 1 + rng() % 1000);
            std::ostringstream out;
            write_web1t(to_records(table), out);
            CHECK(vocab_from(out.str()) == table);
        } else {
            ContextTable table(order);
            for (std::size_t i = 0; i < records; ++i) {
                std::vector<std::string> tokens;
                for (int t = 0; t < order; ++t) tokens.push_back(random_word());
                std::vector<std::string_view> views(tokens.begin(), tokens.end());
                table.add(std::span<const std::string_view>(views), 1 + rng() % 1000);
            }
            std::ostringstream out;
            write_web1t(to_records(table), out);
            CHECK(ngrams_from(out.str(), order) == table);
        }
    }
}

TEST_CASE("loading concatenated streams equals merging the tables") {
    const std::string first = "a\t1\nb\t2\n";
    const std::string second = "b\t5\nc\t7\n";
    const auto merged = vocab_from(first + second);
    CHECK(merged.count("a") == 1);
    CHECK(merged.count("b") == 7);
    CHECK(merged.count("c") == 7);
    CHECK(merged.size() == 3);
}

TEST_CASE("gzip round-trips and is sniffed by magic bytes, not file name") {
    const std::string payload = "tangle\t580\nangle\t560\n";
    const std::string packed = gzip_compress(payload);
    REQUIRE(packed.size() >= 2);
    CHECK(static_cast<unsigned char>(packed[0]) == 0x1f);
    CHECK(static_cast<unsigned char>(packed[1]) == 0x8b);
    CHECK(gzip_decompress(packed) == payload);

    const auto dir = testing::fresh_scratch_dir("web1t_gzip");
    // Deliberately no .gz extension: content, not name, decides.
    testing::spit_file(dir / "packed.txt", packed);
    testing::spit_file(dir / "plain.txt", payload);
    const auto from_packed = load_vocabulary_file((dir / "packed.txt").string());
    const auto from_plain = load_vocabulary_file((dir / "plain.txt").string());
    CHECK(from_packed == from_plain);
    CHECK(from_packed.count("tangle") == 580);
}

TEST_CASE("corrupt gzip input reports an I/O error") {
    std::string broken = gzip_compress("w\t1\n");
    broken.resize(broken.size() / 2);
    CHECK_THROWS_AS(gzip_decompress(broken), IoError);
}

TEST_CASE("file loader errors name the file") {
    const auto dir = testing::fresh_scratch_dir("web1t_errors");
    testing::spit_file(dir / "bad.txt", "oops\n");
    try {
        load_vocabulary_file((dir / "bad.txt").string());
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad.txt") != std::string::npos);
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
    CHECK_THROWS_AS(load_vocabulary_file((dir / "missing.txt").string()), IoError);
}
