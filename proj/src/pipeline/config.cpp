#include "newsbias/pipeline/config.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "newsbias/util/hash.hpp"

namespace newsbias::pipeline {

using nlohmann::json;
namespace fs = std::filesystem;

std::uint64_t PipelineConfig::config_hash() const { return fnv1a64(raw_json); }

PipelineConfig load_config(const std::string& path, const std::string& output_dir_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();

    PipelineConfig cfg;
    cfg.raw_json = ss.str();
    const json j = json::parse(cfg.raw_json);

    cfg.master_seed = j.value("master_seed", std::uint64_t{0});
    cfg.output_dir = j.value("output_dir", std::string{"out"});

    const fs::path base = fs::path(path).parent_path();
    const auto resolve = [&](const std::string& p) {
        if (p.empty() || fs::path(p).is_absolute()) return p;
        return (base / p).string();
    };

    const auto& inputs = j.at("inputs");
    cfg.accounts_path = resolve(inputs.at("accounts").get<std::string>());
    cfg.worker_labels_path = resolve(inputs.at("worker_labels").get<std::string>());
    cfg.gold_items_path = resolve(inputs.at("gold_items").get<std::string>());
    if (inputs.contains("schema_map")) {
        const auto& sm = inputs.at("schema_map");
        cfg.schema.id = sm.value("id", cfg.schema.id);
        cfg.schema.created_at = sm.value("created_at", cfg.schema.created_at);
        cfg.schema.text = sm.value("text", cfg.schema.text);
        cfg.schema.user_id = sm.value("user_id", cfg.schema.user_id);
        cfg.schema.user_followers = sm.value("user_followers", cfg.schema.user_followers);
        cfg.schema.retweet_count = sm.value("retweet_count", cfg.schema.retweet_count);
        cfg.schema.is_retweet = sm.value("is_retweet", cfg.schema.is_retweet);
        cfg.schema.hashtags = sm.value("hashtags", cfg.schema.hashtags);
        cfg.schema.lang = sm.value("lang", cfg.schema.lang);
    }

    for (const auto& [name, je] : j.at("events").items()) {
        const auto event = corpus::event_from_string(name);
        if (!event) throw std::runtime_error("config: unknown event '" + name + "'");
        EventConfig ec;
        ec.tweets_path = resolve(je.at("tweets").get<std::string>());
        const auto start = parse_timestamp(je.at("window_start").get<std::string>());
        if (!start) throw std::runtime_error("config: bad window_start for event '" + name + "'");
        ec.window_start = *start;
        ec.window_days = je.at("window_days").get<double>();
        if (je.contains("exclude_terms")) {
            ec.exclude_terms = je.at("exclude_terms").get<std::vector<std::string>>();
        }
        cfg.events[*event] = std::move(ec);
    }

    if (j.contains("thresholds")) {
        const auto& t = j.at("thresholds");
        cfg.dedup_threshold = t.value("dedup", cfg.dedup_threshold);
        cfg.language_min_confidence = t.value("language_confidence", cfg.language_min_confidence);
        cfg.trust_cutoff = t.value("trust", cfg.trust_cutoff);
    }
    if (j.contains("sampling")) {
        cfg.sample_target = j.at("sampling").value("target", cfg.sample_target);
    }
    if (j.contains("embedding")) {
        const auto& e = j.at("embedding");
        cfg.embedding.dim = e.value("dim", cfg.embedding.dim);
        cfg.embedding.window = e.value("window", cfg.embedding.window);
        cfg.embedding.negatives = e.value("negatives", cfg.embedding.negatives);
        cfg.embedding.epochs = e.value("epochs", cfg.embedding.epochs);
        cfg.embedding.min_count = e.value("min_count", cfg.embedding.min_count);
        cfg.embedding.subsample_frequent = e.value("subsample_frequent", false);
        cfg.min_embed_tweets_per_language =
            e.value("min_tweets_per_language", cfg.min_embed_tweets_per_language);
    }
    if (j.contains("classifier")) {
        const auto& c = j.at("classifier");
        if (c.contains("filter_widths")) {
            cfg.cnn.filter_widths = c.at("filter_widths").get<std::vector<std::size_t>>();
        }
        cfg.cnn.filters_per_width = c.value("filters_per_width", cfg.cnn.filters_per_width);
        cfg.cnn.dropout_rate = c.value("dropout", cfg.cnn.dropout_rate);
        cfg.cnn.epochs = c.value("epochs", cfg.cnn.epochs);
        cfg.cnn.batch_size = c.value("batch_size", cfg.cnn.batch_size);
        cfg.cv_folds = c.value("cv_folds", cfg.cv_folds);
        cfg.min_labeled_per_language =
            c.value("min_labeled_per_language", cfg.min_labeled_per_language);
    }
    cfg.cnn.embedding_dim = cfg.embedding.dim;
    if (j.contains("stats")) {
        cfg.downsample_runs = j.at("stats").value("downsample_runs", cfg.downsample_runs);
    }
    if (j.contains("report")) {
        cfg.ground_truth_substitution_below =
            j.at("report").value("ground_truth_substitution_below",
                                 cfg.ground_truth_substitution_below);
    }

    if (const char* env = std::getenv("NEWSBIAS_OUTPUT_DIR"); env && *env) cfg.output_dir = env;
    if (!output_dir_override.empty()) cfg.output_dir = output_dir_override;
    return cfg;
}

std::vector<std::string> validate_config(const PipelineConfig& cfg) {
    std::vector<std::string> problems;
    const auto need_file = [&](const std::string& p, const char* what) {
        if (p.empty() || !fs::exists(p)) {
            problems.push_back(std::string(what) + " missing: '" + p + "'");
        }
    };
    need_file(cfg.accounts_path, "accounts file");
    need_file(cfg.worker_labels_path, "worker labels file");
    need_file(cfg.gold_items_path, "gold items file");
    if (cfg.events.empty()) problems.push_back("no events configured");
    for (const auto& [event, ec] : cfg.events) {
        need_file(ec.tweets_path, "tweets file");
        if (!(ec.window_days > 0)) {
            problems.push_back(std::string("event ") + corpus::to_string(event) +
                               ": window_days must be positive");
        }
    }
    if (!(cfg.dedup_threshold > 0.0) || !(cfg.dedup_threshold < 1.0)) {
        problems.push_back("thresholds.dedup must be in (0,1)");
    }
    if (!(cfg.language_min_confidence > 0.0) || !(cfg.language_min_confidence <= 1.0)) {
        problems.push_back("thresholds.language_confidence must be in (0,1]");
    }
    if (!(cfg.trust_cutoff > 0.0) || !(cfg.trust_cutoff <= 1.0)) {
        problems.push_back("thresholds.trust must be in (0,1]");
    }
    if (cfg.sample_target == 0) problems.push_back("sampling.target must be positive");
    if (cfg.cv_folds < 2) problems.push_back("classifier.cv_folds must be >= 2");
    try {
        cfg.cnn.validate();
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
    return problems;
}

}  // namespace newsbias::pipeline
