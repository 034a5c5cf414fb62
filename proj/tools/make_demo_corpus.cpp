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

// Generates the bundled demo corpus: deterministic pseudo-English, one
// sentence per line, a little over 10^5 words. The text itself is nonsense;
// what matters is a fixed vocabulary, a Zipf-ish frequency profile, and
// enough distinct 4-word contexts for the correction property tests.
//
// Sampling uses plain modulo on a fixed-seed mt19937_64 — std::uniform_int_
// distribution is not bit-stable across standard libraries, and this file's
// whole point is that rerunning it reproduces data/demo_corpus.txt exactly.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

namespace {

// Three frequency tiers: glue words, common words, and the long tail.
const char* const kGlueWords[] = {
    "the", "of", "and", "a", "to", "in", "is", "was", "it", "for",
    "on", "are", "as", "with", "his", "they", "at", "be", "this", "have",
    "from", "or", "one", "had", "by", "word", "but", "not", "what", "all",
};

const char* const kCommonWords[] = {
    "were", "when", "your", "said", "there", "each", "which", "their", "time", "will",
    "about", "many", "then", "them", "write", "would", "like", "these", "long", "make",
    "thing", "see", "him", "two", "has", "look", "more", "day", "could", "come",
    "did", "number", "sound", "most", "people", "over", "know", "water", "than", "call",
    "first", "who", "may", "down", "side", "been", "now", "find", "any", "new",
    "work", "part", "take", "get", "place", "made", "live", "where", "after", "back",
    "little", "only", "round", "man", "year", "came", "show", "every", "good", "give",
    "our", "under", "name", "very", "through", "just", "form", "sentence", "great", "think",
    "say", "help", "low", "line", "differ", "turn", "cause", "much", "mean", "before",
    "move", "right", "boy", "old", "too", "same", "tell", "does", "set", "three",
};

const char* const kTailWords[] = {
    "want", "air", "well", "also", "play", "small", "end", "put", "home", "read",
    "hand", "port", "large", "spell", "add", "even", "land", "here", "must", "big",
    "high", "such", "follow", "act", "why", "ask", "men", "change", "went", "light",
    "kind", "off", "need", "house", "picture", "try", "again", "animal", "point", "mother",
    "world", "near", "build", "self", "earth", "father", "head", "stand", "own", "page",
    "should", "country", "found", "answer", "school", "grow", "study", "still", "learn",
    "plant", "cover", "food", "sun", "four", "between", "state", "keep", "eye", "never",
    "last", "let", "thought", "city", "tree", "cross", "farm", "hard", "start", "might",
    "story", "saw", "far", "sea", "draw", "left", "late", "run", "while", "press",
    "close", "night", "real", "life", "few", "north", "open", "seem", "together", "next",
    "white", "children", "begin", "got", "walk", "example", "ease", "paper", "group",
    "always", "music", "those", "both", "mark", "often", "letter", "until", "mile",
    "river", "car", "feet", "care", "second", "book", "carry", "took", "science", "eat",
    "room", "friend", "began", "idea", "fish", "mountain", "stop", "once", "base", "hear",
    "horse", "cut", "sure", "watch", "color", "face", "wood", "main", "enough", "plain",
    "girl", "usual", "young", "ready", "above", "ever", "red", "list", "though", "feel",
    "talk", "bird", "soon", "body", "dog", "family", "direct", "pose", "leave", "song",
    "measure", "door", "product", "black", "short", "numeral", "class", "wind", "question",
    "happen", "complete", "ship", "area", "half", "rock", "order", "fire", "south",
    "problem", "piece", "told", "knew", "pass", "since", "top", "whole", "king", "space",
    "heard", "best", "hour", "better", "true", "during", "hundred", "five", "remember",
    "step", "early", "hold", "west", "ground", "interest", "reach", "fast", "verb",
    "sing", "listen", "six", "table", "travel", "less", "morning", "ten", "simple",
    "several", "vowel", "toward", "war", "lay", "against", "pattern", "slow", "center",
    "love", "person", "money", "serve", "appear", "road", "map", "rain", "rule",
    "govern", "pull", "cold", "notice", "voice", "unit", "power", "town", "fine",
    "certain", "fly", "fall", "lead", "cry", "dark", "machine", "note", "wait", "plan",
    "figure", "star", "box", "noun", "field", "rest", "correct", "able", "pound",
    "done", "beauty", "drive", "stood", "contain", "front", "teach", "week", "final",
    "gave", "green", "quick", "develop", "ocean", "warm", "free", "minute", "strong",
    "special", "mind", "behind", "clear", "tail", "produce", "fact", "street", "inch",
    "multiply", "nothing", "course", "stay", "wheel", "full", "force", "blue", "object",
    "decide", "surface", "deep", "moon", "island", "foot", "system", "busy", "test",
    "record", "boat", "common", "gold", "possible", "plane", "stead", "dry", "wonder",
    "laugh", "thousand", "ago", "ran", "check", "game", "shape", "equate", "hot",
    "miss", "brought", "heat", "snow", "tire", "bring", "yes", "distant", "fill",
    "east", "paint", "language", "among", "grand", "ball", "yet", "wave", "drop",
    "heart", "present", "heavy", "dance", "engine", "position", "arm", "wide", "sail",
    "material", "size", "vary", "settle", "speak", "weight", "general", "ice", "matter",
    "circle", "pair", "include", "divide", "syllable", "felt", "perhaps", "pick",
    "sudden", "count", "square", "reason", "length", "represent", "art", "subject",
    "region", "energy", "hunt", "probable", "bed", "brother", "egg", "ride", "cell",
    "believe", "fraction", "forest", "sit", "race", "window", "store", "summer",
    "train", "sleep", "prove", "lone", "leg", "exercise", "wall", "catch", "mount",
    "wish", "sky", "board", "joy", "winter", "written", "wild", "instrument", "kept",
    "glass", "grass", "cow", "job", "edge", "sign", "visit", "past", "soft", "bright",
    "gas", "weather", "month", "million", "bear", "finish", "happy", "hope", "flower",
    "clothe", "strange", "gone", "jump", "baby", "eight", "village", "meet", "root",
    "buy", "raise", "solve", "metal", "whether", "push", "seven", "paragraph",
};

constexpr std::uint64_t kSeed = 0x5eed1234abcd9876ULL;
constexpr std::uint64_t kTargetTokens = 104000;

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_demo_corpus OUTPUT_PATH\n";
        return 2;
    }

    // Weighted sampling table: glue words dominate, tail words trickle in.
    std::vector<const char*> table;
    for (const char* word : kGlueWords) {
        for (int i = 0; i < 24; ++i) table.push_back(word);
    }
    for (const char* word : kCommonWords) {
        for (int i = 0; i < 5; ++i) table.push_back(word);
    }
    for (const char* word : kTailWords) {
        table.push_back(word);
    }

    std::mt19937_64 rng(kSeed);
    std::ofstream out(argv[1], std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot open " << argv[1] << " for writing\n";
        return 1;
    }

    std::uint64_t tokens = 0;
    while (tokens < kTargetTokens) {
        const std::size_t sentence_length = 6 + rng() % 12;
        std::string line;
        for (std::size_t i = 0; i < sentence_length; ++i) {
            if (i > 0) line.push_back(' ');
            line += table[rng() % table.size()];
        }
        line += ".\n";
        out << line;
        tokens += sentence_length;
    }

    out.flush();
    if (!out) {
        std::cerr << "error: write failure on " << argv[1] << "\n";
        return 1;
    }
    std::cout << "wrote " << tokens << " words to " << argv[1] << "\n";
    return 0;
}
