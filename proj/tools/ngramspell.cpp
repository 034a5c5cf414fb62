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

// ngramspell — n-gram spelling correction for OCR output.
//
//   ngramspell build CORPUS... -o DIR    build model files + manifest
//   ngramspell correct INPUT -m MANIFEST correct a document to stdout
//   ngramspell candidates WORD -m MANIFEST  show ranked candidates
//   ngramspell evaluate OCR CORRECTED TRUTH error rates + improvement

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ngramspell/candidates.hpp"
#include "ngramspell/corpus_builder.hpp"
#include "ngramspell/corrector.hpp"
#include "ngramspell/errors.hpp"
#include "ngramspell/evaluator.hpp"
#include "ngramspell/manifest.hpp"
#include "ngramspell/utf8.hpp"
#include "ngramspell/web1t.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace ngramspell;

namespace {

struct BuildArgs {
    std::vector<std::string> corpora;
    std::string output_dir;
    int max_order = kMaxOrder;
    std::uint64_t min_count = 1;
    bool sentence_split = false;
    bool gzip = false;
    std::string case_policy = "exact";
    bool fallback = true;
    int k = kDefaultCandidateLimit;
};

struct CorrectArgs {
    std::string input;
    std::string manifest;
    std::string report_path;
    std::string output_path;
    bool fallback = true;
    int k = kDefaultCandidateLimit;
    std::string case_policy;
    CLI::Option* fallback_opt = nullptr;
    CLI::Option* k_opt = nullptr;
    CLI::Option* case_opt = nullptr;
};

struct CandidatesArgs {
    std::string word;
    std::string manifest;
    int k = kDefaultCandidateLimit;
    CLI::Option* k_opt = nullptr;
};

struct EvaluateArgs {
    std::string ocr;
    std::string corrected;
    std::string truth;
};

void write_data_file(const fs::path& path, std::vector<NGramRecord> records, bool gzip) {
    std::ostringstream text;
    write_web1t(std::move(records), text);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    if (gzip) {
        const std::string packed = gzip_compress(text.view());
        out.write(packed.data(), static_cast<std::streamsize>(packed.size()));
    } else {
        const std::string plain = std::move(text).str();
        out.write(plain.data(), static_cast<std::streamsize>(plain.size()));
    }
    if (!out) throw IoError("write failure on " + path.string());
}

int run_build(const BuildArgs& args) {
    std::string corpus;
    for (const auto& path : args.corpora) {
        corpus += read_file_auto(path);
        // Without a separator the last word of one file and the first word
        // of the next would fuse into a single token.
        corpus.push_back('\n');
    }

    BuildOptions options;
    options.max_order = args.max_order;
    options.min_count = args.min_count;
    options.sentence_split = args.sentence_split;
    const CorpusCounts counts = count_ngrams(std::string_view(corpus), options);

    if (counts.stats.token_count == 0) {
        std::cerr << "warning: corpus contains no countable tokens; writing an empty model\n";
    }

    fs::create_directories(args.output_dir);
    const fs::path dir(args.output_dir);
    const std::string suffix = args.gzip ? ".gz" : "";

    ModelManifest manifest;
    manifest.case_policy = parse_case_policy(args.case_policy);
    manifest.fallback = args.fallback;
    manifest.candidate_limit = args.k;

    const std::string vocab_name = "vocab.txt" + suffix;
    write_data_file(dir / vocab_name, to_records(counts.by_order[1], 1), args.gzip);
    manifest.vocabulary = vocab_name;

    std::cout << "tokens: " << counts.stats.token_count << "\n";
    std::cout << "order 1: " << counts.by_order[1].size() << " records ("
              << counts.stats.distinct_ngrams[1] << " distinct, "
              << counts.stats.dropped_below_threshold[1] << " dropped) -> " << vocab_name
              << "\n";
    for (int order = 2; order <= args.max_order; ++order) {
        const std::string name = std::to_string(order) + "gms.txt" + suffix;
        write_data_file(dir / name, to_records(counts.by_order[order], order), args.gzip);
        manifest.ngrams[order] = name;
        std::cout << "order " << order << ": " << counts.by_order[order].size()
                  << " records (" << counts.stats.distinct_ngrams[order] << " distinct, "
                  << counts.stats.dropped_below_threshold[order] << " dropped) -> " << name
                  << "\n";
    }

    const fs::path manifest_path = dir / "manifest.json";
    write_manifest(manifest, manifest_path.string());
    std::cout << "manifest: " << manifest_path.string() << "\n";
    return 0;
}

json outcome_to_json(const CorrectionOutcome& outcome) {
    json record;
    record["token_index"] = outcome.token_index;
    record["original"] = outcome.original;
    record["decision"] = std::string(to_string(outcome.decision));
    if (outcome.replaced()) record["replacement"] = outcome.replacement;
    if (outcome.decision == Decision::Corrected) {
        record["context_count"] = outcome.context_count;
        record["order_used"] = outcome.order_used;
    }
    if (!outcome.reason.empty()) record["reason"] = outcome.reason;
    return record;
}

void write_report(const CorrectionReport& report, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open report file " + path);
    for (const auto& outcome : report.outcomes) {
        out << outcome_to_json(outcome).dump() << "\n";
    }
    json summary;
    summary["summary"] = {{"total_words", report.total_words},
                          {"errors", report.error_count},
                          {"corrected", report.corrected},
                          {"fallback", report.fallback},
                          {"uncorrected", report.uncorrected}};
    out << summary.dump() << "\n";
    if (!out) throw IoError("report write failure: " + path);
}

int run_correct(const CorrectArgs& args) {
    ModelManifest manifest = read_manifest(args.manifest);
    CorrectorOptions options;
    options.case_policy = manifest.case_policy;
    options.candidate_limit = manifest.candidate_limit;
    options.fallback = manifest.fallback;
    if (args.fallback_opt->count() > 0) options.fallback = args.fallback;
    if (args.k_opt->count() > 0) options.candidate_limit = args.k;
    if (args.case_opt->count() > 0) options.case_policy = parse_case_policy(args.case_policy);

    const NGramModel model = load_model(manifest);
    const std::string text = read_file_auto(args.input);
    const CorrectionResult result = correct_text(text, model, options);

    if (!args.report_path.empty()) write_report(result.report, args.report_path);

    if (args.output_path.empty()) {
        std::cout.write(result.corrected_text.data(),
                        static_cast<std::streamsize>(result.corrected_text.size()));
        std::cout.flush();
    } else {
        std::ofstream out(args.output_path, std::ios::binary);
        if (!out) throw IoError("cannot open " + args.output_path + " for writing");
        out.write(result.corrected_text.data(),
                  static_cast<std::streamsize>(result.corrected_text.size()));
        if (!out) throw IoError("write failure on " + args.output_path);
    }
    return 0;
}

int run_candidates(const CandidatesArgs& args) {
    ModelManifest manifest = read_manifest(args.manifest);
    const int k = args.k_opt->count() > 0 ? args.k : manifest.candidate_limit;

    if (utf8::length(args.word) < 2) {
        std::cout << "no candidates possible\n";
        return 0;
    }
    const NGramModel model = load_model(manifest);
    const CandidateList list = generate_candidates(args.word, model, k);
    for (const Candidate& candidate : list.candidates) {
        std::cout << candidate.word << "\t" << candidate.shared_bigrams << "\t"
                  << candidate.unigram_count << "\n";
    }
    return 0;
}

int run_evaluate(const EvaluateArgs& args) {
    const std::string ocr = read_file_auto(args.ocr);
    const std::string corrected = read_file_auto(args.corrected);
    const std::string truth = read_file_auto(args.truth);
    const EvaluationReport report = evaluate(ocr, corrected, truth);
    std::cout << render_report(report);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"n-gram spelling correction for OCR output"};
    app.require_subcommand(1);

    BuildArgs build_args;
    auto* build = app.add_subcommand("build", "count a corpus into model files + manifest");
    build->add_option("corpus", build_args.corpora, "corpus text file(s), plain or gzip")
        ->required()
        ->check(CLI::ExistingFile);
    build->add_option("-o,--output-dir", build_args.output_dir, "directory for model files")
        ->required();
    build->add_option("--max-order", build_args.max_order, "highest n-gram order (1..5)")
        ->check(CLI::Range(1, kMaxOrder));
    build->add_option("--min-count", build_args.min_count,
                      "drop n-grams occurring fewer times");
    build->add_flag("--sentence-split", build_args.sentence_split,
                    "n-gram windows stop at . ! ?");
    build->add_flag("--gzip", build_args.gzip, "gzip-compress the model files");
    build->add_option("--case-policy", build_args.case_policy,
                      "manifest default: exact | fold-if-absent");
    build->add_flag("--fallback,!--no-fallback", build_args.fallback,
                    "manifest default for zero-evidence fallback");
    build->add_option("--k", build_args.k, "manifest default candidate limit")
        ->check(CLI::PositiveNumber);

    CorrectArgs correct_args;
    auto* correct = app.add_subcommand("correct", "correct a document");
    correct->add_option("input", correct_args.input, "document to correct")
        ->required()
        ->check(CLI::ExistingFile);
    correct->add_option("-m,--model", correct_args.manifest, "model manifest path")
        ->required()
        ->check(CLI::ExistingFile);
    correct->add_option("--report", correct_args.report_path,
                        "write per-error outcomes as JSON lines");
    correct->add_option("-o,--output", correct_args.output_path,
                        "write corrected text here instead of stdout");
    correct_args.fallback_opt =
        correct->add_flag("--fallback,!--no-fallback", correct_args.fallback,
                          "override the manifest's fallback setting");
    correct_args.k_opt = correct->add_option("--k", correct_args.k, "candidate limit override")
                             ->check(CLI::PositiveNumber);
    correct_args.case_opt = correct->add_option("--case-policy", correct_args.case_policy,
                                                "case policy override");

    CandidatesArgs candidates_args;
    auto* candidates =
        app.add_subcommand("candidates", "show ranked candidates for one word");
    candidates->add_option("word", candidates_args.word, "the (error) word")->required();
    candidates->add_option("-m,--model", candidates_args.manifest, "model manifest path")
        ->required()
        ->check(CLI::ExistingFile);
    candidates_args.k_opt =
        candidates->add_option("--k", candidates_args.k, "candidate limit override")
            ->check(CLI::PositiveNumber);

    EvaluateArgs evaluate_args;
    auto* evaluate = app.add_subcommand("evaluate", "compare OCR, corrected, and truth texts");
    evaluate->add_option("ocr", evaluate_args.ocr, "uncorrected OCR text")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("corrected", evaluate_args.corrected, "corrected text")
        ->required()
        ->check(CLI::ExistingFile);
    evaluate->add_option("truth", evaluate_args.truth, "ground-truth text")
        ->required()
        ->check(CLI::ExistingFile);

    CLI11_PARSE(app, argc, argv);

    try {
        if (build->parsed()) return run_build(build_args);
        if (correct->parsed()) return run_correct(correct_args);
        if (candidates->parsed()) return run_candidates(candidates_args);
        if (evaluate->parsed()) return run_evaluate(evaluate_args);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
