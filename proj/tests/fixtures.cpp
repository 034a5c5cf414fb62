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

#include "fixtures.hpp"

#include "ngramspell/tokenizer.hpp"

namespace ngramspell::testing {

// ---------------------------------------------------------------------------
// Document fixtures. Byte-exact transcriptions; do not "fix" anything here,
// including the ground truths' own oddities (e.g. "INtegrated ELectronics"),
// because every expected count downstream is frozen against these bytes.
// ---------------------------------------------------------------------------

const std::string_view kEnglishOcr =
    R"fix(In 1968, Bob Noyce and Gordon Noore leit Fairchild Semiconductor ro start their own comparly focused on builnop products from integrated cieeuts. They named their company Lntelo (from INTgrated Electronics). In 1969, Tntel began shioing the first commercial integrated circuit using MOSRETs, a 256-bit mimory ehip called the L101. The 1101 memory chip did not rell well, but Intel was able to rapidly shrink the size of the rew sileon gate MOSFETs and add more transistors to their designs. One year later Intel orrered the 1103 with 1024 pits of memory, and ths rapioly became a standard component in the coraputerg of the day. In April 1970, Intel hired Raggin the inventor of the silicon gate MOSFET, away from Fairhifd. On Faggint second day at Intel, Magatosh Shima, the engineering representative from Bnsicom, arrived from Japan to review the desigin.)fix";

const std::string_view kEnglishGroundTruth =
    R"fix(In 1968, Bob Noyce and Gordon Moore left Fairchild Semiconductor to start their own company focused on building products from integrated circuits. They named their company Intel (from INtegrated ELectronics). In 1969, Intel began shipping the first commercial integrated circuit using MOSFETs, a 256-bit memory chip called the 1101. The 1101 memory chip did not sell well, but Intel was able to rapidly shrink the size of the new silicon gate MOSFETs and add more transistors to their designs. One year later Intel offered the 1103 with 1024 bits of memory, and this rapidly became a standard component in the computers of the day.

In April 1970, Intel hired Faggin, the inventor of the silicon gate MOSFET, away from Fairchild. On Faggin's second day at Intel, Masatoshi Shima, the engineering representative from Busicom, arrived from Japan to review the design.)fix";

const std::string_view kEnglishReferenceCorrection =
    R"fix(In 1968, Bob Noyce and Gordon Moore leit Fairchild Semiconductor ro start their own company focused on building products from integrated circuits. They named their company Lintelo (from INTEgrated Electronics). In 1969, Intel began shipping the first commercial integrated circuit using MOSFETs, a 256-bit memory chip called the L101. The 1101 memory chip did not sell well, but Intel was able to rapidly shrink the size of the new silicon gate MOSFETs and add more transistors to their designs. One year later Intel offered the 1103 with 1024 bits of memory, and this rapidly became a standard component in the computers of the day. In April 1970, Intel hired Raggin, the inventor of the silicon gate MOSFET, away from Fairchild. On Faggint second day at Intel, Masatoslu Shima, the engineering representative from Busicom, arrived from Japan to review the design.)fix";

const std::string_view kFrenchOcr =
    R"fix(pédopsychlatrie, spécialité médicale ayant pour objet le dépistage eu le traitement des maladies mentales chez P'enfant et chez l'aoloescent. La pédopsychiatrie, en tatl que discipline autonome, est d'origine récente. En France, elle est apparue dans Penseignement du certificat d'études spéciales de psychiatrie en 1972. Parmi les précurseurs de cette « science-art » figurent des médecins (E Seguini, T. Sirmon), des psychologues (A. Bineit) et des pédagogues J. H. Pestalozzij. La pédopsy-chiatrie s'appuie largement sur les travaux des psychanalystes (S. et A. Freud, R. Sp1tz).)fix";

const std::string_view kFrenchReferenceCorrection =
    R"fix(pédopsychiatrie, spécialité médicale ayant pour objet le dépistage eu le traitement des maladies mentales chez l'enfant et chez l'adolescent. La pédopsychiatrie, en tatl que discipline autonome, est d'origine récente. En France, elle est apparue dans l'enseignement du certificat d'études spéciales de psychiatrie en 1972. Parmi les précurseurs de cette « science-art » figurent des médecins (E Seguin, T. Simon), des psychologues (A. Binet) et des pédagogues J. H. Pestalozzi. La pédopsy-chiatrie s'appuie largement sur les travaux des psychanalystes (S. et A. Freud, R. Sp1tz).)fix";

const std::string_view kFrenchGroundTruth =
    R"fix(pédopsychiatrie, spécialité médicale ayant pour objet le dépistage et le traitement des maladies mentales chez l'enfant et chez l'adolescent. La pédopsychiatrie, en tant que discipline autonome, est d'origine récente. En France, elle est apparue dans l'enseignement du certificat d'études spéciales de psychiatrie en 1972. Parmi les précurseurs de cette « science-art » figurent des médecins (E Seguin, T. Simon), des psychologues (A. Binet) et des pédagogues J. H. Pestalozzi. La pédopsy-chiatrie s'appuie largement sur les travaux des psychanalystes (S. et A. Freud, R. Spitz).)fix";

// "pits" is a real-word error (truth: "bits"), "Electronics" a case variant
// of the truth's "ELectronics", "eu" a valid French word standing where the
// truth has "et".
const std::vector<std::string_view> kDocumentExtraVocabulary = {"pits", "Electronics", "eu"};

const std::vector<std::string_view> kEnglishExpectedNonWords = {
    "Noore",   "leit",    "ro",      "comparly", "builnop",    "cieeuts",  "Lntelo",
    "INTgrated", "Tntel", "shioing", "MOSRETs",  "mimory",     "ehip",     "L101",
    "rell",    "rew",     "sileon",  "orrered",  "ths",        "rapioly",  "coraputerg",
    "Raggin",  "Fairhifd", "Faggint", "Magatosh", "Bnsicom",   "desigin",
};

const std::vector<std::string_view> kFrenchExpectedNonWords = {
    "pédopsychlatrie", "P'enfant", "l'aoloescent", "tatl",        "Penseignement",
    "Seguini",         "Sirmon",   "Bineit",       "Pestalozzij", "Sp1tz",
};

UnigramTable document_fixture_vocabulary() {
    UnigramTable vocab;
    for (const auto text : {kEnglishGroundTruth, kFrenchGroundTruth}) {
        for (const Token& token : tokenize(text).tokens) {
            if (token.kind == TokenKind::Word) vocab.add(token.surface, 1);
        }
    }
    for (const auto word : kDocumentExtraVocabulary) vocab.add(word, 1);
    return vocab;
}

// ---------------------------------------------------------------------------
// Ranking fixtures. The counts are this test suite's choice — the published
// example gives only the words and their shared-bigram scores. Within the
// equal-score tier the generator breaks ties by unigram count, so the counts
// below are graded to force exactly the documented ten words, in the
// documented order, past the other score-2 vocabulary words (sale, singly,
// disable).
// ---------------------------------------------------------------------------

const std::vector<std::pair<std::string_view, std::uint64_t>>& ranking_vocabulary() {
    static const std::vector<std::pair<std::string_view, std::uint64_t>> words = {
        {"tangle", 580},  {"angle", 560},    {"single", 540},  {"tingle", 520},
        {"beagle", 500},  {"sand", 480},     {"sandbox", 460}, {"English", 440},
        {"sanitary", 420}, {"sandwich", 400}, {"salute", 90},   {"sale", 85},
        {"salt", 80},     {"man", 75},       {"fringe", 70},   {"ring", 65},
        {"singly", 60},   {"unable", 55},    {"disable", 50},
    };
    return words;
}

const std::vector<std::pair<std::string_view, int>>& expected_sangle_top_ten() {
    static const std::vector<std::pair<std::string_view, int>> expected = {
        {"tangle", 4}, {"angle", 4},   {"single", 3},  {"tingle", 3},   {"beagle", 2},
        {"sand", 2},   {"sandbox", 2}, {"English", 2}, {"sanitary", 2}, {"sandwich", 2},
    };
    return expected;
}

const std::vector<std::pair<std::string_view, std::uint64_t>>& context_sentence_counts() {
    static const std::vector<std::pair<std::string_view, std::uint64_t>> sentences = {
        {"case where only one tangle", 11},  {"case where only one angle", 13},
        {"case where only one single", 97},  {"case where only one tingle", 5},
        {"case where only one beagle", 2},   {"case where only one sand", 8},
        {"case where only one sandbox", 3},  {"case where only one English", 7},
        {"case where only one sanitary", 2}, {"case where only one sandwich", 4},
    };
    return sentences;
}

NGramModel ranking_fixture_model() {
    UnigramTable vocab;
    for (const auto& [word, count] : ranking_vocabulary()) vocab.add(word, count);
    // The carrier sentence's own words, so documents built around "sangle"
    // detect only the planted error.
    for (const auto word :
         {"case", "where", "only", "one", "element", "is", "allowed", "to", "be", "stored"}) {
        vocab.add(word, 300);
    }

    ContextTable five_grams(5);
    for (const auto& [sentence, count] : context_sentence_counts()) {
        five_grams.add_joined(sentence, count);
    }
    return NGramModel(std::move(vocab), {std::move(five_grams)});
}

}  // namespace ngramspell::testing
