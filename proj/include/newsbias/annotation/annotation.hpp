#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "newsbias/stats/logistic.hpp"  // Sentiment

namespace newsbias::annotation {

enum class Sympathy : std::uint8_t { Unsympathetic = 0, Sympathetic = 1 };

using stats::Sentiment;

struct WorkerLabel {
    std::string tweet_id;
    std::string worker_id;
    Sympathy sympathy = Sympathy::Unsympathetic;
    Sentiment sentiment = Sentiment::Neutral;
    bool not_applicable = false;
};

struct GoldItem {
    std::string tweet_id;
    Sympathy sympathy = Sympathy::Unsympathetic;
    Sentiment sentiment = Sentiment::Neutral;
};

struct AggregatedLabel {
    std::string tweet_id;
    Sympathy sympathy = Sympathy::Unsympathetic;
    Sentiment sentiment = Sentiment::Neutral;
    std::size_t n_workers = 0;
    double agreement_fraction = 0.0;  // plurality size / n_workers (min over dimensions)
    bool unresolved = false;          // sentiment tie or NA majority; excluded from analyses
};

struct TrustFilterResult {
    std::set<std::string> trusted;
    std::vector<std::string> warnings;  // workers skipped for zero gold answers
};

// A worker is trusted iff the fraction of gold items answered with an exact
// (sympathy, sentiment) match is >= cutoff. Workers with zero gold answers are
// excluded with a warning.
TrustFilterResult trust_filter(const std::vector<WorkerLabel>& labels,
                               const std::vector<GoldItem>& gold, double cutoff = 0.7);

// Majority vote over >= 3 labels for a single tweet. Strict-plurality winner
// per dimension; a three-way sentiment tie or a not-applicable majority marks
// the tweet unresolved. Throws on fewer than 3 labels or mixed tweet ids.
AggregatedLabel majority_vote(const std::vector<WorkerLabel>& labels);

// Groups labels by tweet, keeps only trusted workers, aggregates tweets with
// >= 3 trusted labels. Tweets failing the minimum are skipped (counted).
struct AggregationResult {
    std::vector<AggregatedLabel> labels;   // sorted by tweet_id
    std::size_t skipped_under_three = 0;
};
AggregationResult aggregate_labels(const std::vector<WorkerLabel>& labels,
                                   const std::set<std::string>& trusted_workers);

// Fleiss' kappa over an item x category count matrix; every row must sum to
// the same number of ratings n >= 2. Returns NaN when expected agreement is 1.
double fleiss_kappa(const std::vector<std::vector<std::size_t>>& counts);

enum class KappaWeighting { Unweighted, Linear };

struct CohenKappaResult {
    double kappa = 0.0;
    double se = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::size_t n = 0;
    bool defined = true;  // false when both raters use a single category
};

// Cohen's kappa between two equal-length label vectors (category codes).
// Linear weighting treats the codes as an ordered scale. The 95% CI uses the
// large-sample standard error with the expected agreement treated as fixed.
CohenKappaResult cohen_kappa(std::span<const int> r1, std::span<const int> r2,
                             KappaWeighting weighting = KappaWeighting::Unweighted);

// CSV I/O: worker labels as (tweet_id, worker_id, sympathy, sentiment, na),
// gold as (tweet_id, sympathy, sentiment); aggregated labels emitted as
// (tweet_id, sympathy, sentiment, n_workers, agreement, unresolved).
std::vector<WorkerLabel> read_worker_labels_csv(const std::string& path);
std::vector<GoldItem> read_gold_csv(const std::string& path);
void write_aggregated_csv(const std::string& path, const std::vector<AggregatedLabel>& labels);
std::vector<AggregatedLabel> read_aggregated_csv(const std::string& path);

const char* to_string(Sympathy s);
const char* to_string(Sentiment s);
std::optional<Sympathy> sympathy_from_string(const std::string& s);
std::optional<Sentiment> sentiment_from_string(const std::string& s);

}  // namespace newsbias::annotation
