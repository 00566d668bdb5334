#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "newsbias/classifier/cnn.hpp"
#include "newsbias/corpus/ingest.hpp"
#include "newsbias/corpus/tweet.hpp"
#include "newsbias/embeddings/word2vec.hpp"

namespace newsbias::pipeline {

struct EventConfig {
    std::string tweets_path;
    UtcSeconds window_start = 0;
    double window_days = 0.0;
    std::vector<std::string> exclude_terms;
};

struct PipelineConfig {
    std::uint64_t master_seed = 0;
    std::string output_dir;
    std::string accounts_path;
    std::string worker_labels_path;
    std::string gold_items_path;
    corpus::SchemaMap schema;
    std::map<corpus::Event, EventConfig> events;

    double dedup_threshold = 0.1;
    double language_min_confidence = 0.95;
    double trust_cutoff = 0.7;
    std::size_t sample_target = 1000;

    embeddings::Word2VecConfig embedding;
    classifier::CnnConfig cnn;
    std::size_t cv_folds = 10;
    std::size_t min_labeled_per_language = 40;
    std::size_t min_embed_tweets_per_language = 50;
    std::size_t ground_truth_substitution_below = 10;
    std::size_t downsample_runs = 1000;

    // Raw JSON of the file, used for the config hash in the manifest.
    std::string raw_json;
    std::uint64_t config_hash() const;
};

// Parses the declarative JSON config; env NEWSBIAS_OUTPUT_DIR and the
// output_dir argument (when non-empty) override the configured directory.
PipelineConfig load_config(const std::string& path, const std::string& output_dir_override = "");

// Validation beyond parsing: referenced input paths must exist, thresholds
// must sit in their documented ranges. Returns human-readable problems.
std::vector<std::string> validate_config(const PipelineConfig& config);

}  // namespace newsbias::pipeline
