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

#include "ngramspell/manifest.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "ngramspell/errors.hpp"
#include "ngramspell/web1t.hpp"

namespace ngramspell {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string resolve(const fs::path& base_dir, const std::string& path) {
    fs::path p(path);
    if (p.is_absolute()) return p.string();
    return (base_dir / p).string();
}

}  // namespace

ModelManifest read_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open manifest " + path);

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }

    ModelManifest manifest;
    try {
        if (!doc.is_object()) throw ParseError("manifest root must be an object");
        manifest.vocabulary = doc.at("vocabulary").get<std::string>();
        if (doc.contains("ngrams")) {
            for (const auto& [key, value] : doc.at("ngrams").items()) {
                int order = 0;
                try {
                    order = std::stoi(key);
                } catch (const std::exception&) {
                    throw ParseError("ngram order \"" + key + "\" is not a number");
                }
                if (order < 2 || order > kMaxOrder) {
                    throw ParseError("ngram order " + key + " outside 2.." +
                                     std::to_string(kMaxOrder));
                }
                manifest.ngrams[order] = value.get<std::string>();
            }
        }
        if (doc.contains("case_policy")) {
            manifest.case_policy = parse_case_policy(doc.at("case_policy").get<std::string>());
        }
        if (doc.contains("fallback")) manifest.fallback = doc.at("fallback").get<bool>();
        if (doc.contains("k")) {
            manifest.candidate_limit = doc.at("k").get<int>();
            if (manifest.candidate_limit < 1) throw ParseError("k must be >= 1");
        }
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    }

    const fs::path base_dir = fs::path(path).parent_path();
    manifest.vocabulary = resolve(base_dir, manifest.vocabulary);
    for (auto& [order, file] : manifest.ngrams) file = resolve(base_dir, file);
    return manifest;
}

void write_manifest(const ModelManifest& manifest, const std::string& path) {
    json doc;
    doc["vocabulary"] = manifest.vocabulary;
    json ngrams = json::object();
    for (const auto& [order, file] : manifest.ngrams) {
        ngrams[std::to_string(order)] = file;
    }
    doc["ngrams"] = ngrams;
    doc["case_policy"] = std::string(to_string(manifest.case_policy));
    doc["fallback"] = manifest.fallback;
    doc["k"] = manifest.candidate_limit;

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open manifest for writing: " + path);
    out << doc.dump(2) << "\n";
    if (!out) throw IoError("manifest write failure: " + path);
}

NGramModel load_model(const ModelManifest& manifest) {
    UnigramTable unigrams = load_vocabulary_file(manifest.vocabulary);
    std::vector<ContextTable> contexts;
    contexts.reserve(manifest.ngrams.size());
    for (const auto& [order, file] : manifest.ngrams) {
        contexts.push_back(load_ngrams_file(file, order));
    }
    return NGramModel(std::move(unigrams), std::move(contexts));
}

}  // namespace ngramspell
