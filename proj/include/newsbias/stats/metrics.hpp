#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace newsbias::stats {

struct ClassMetrics {
    int label = 0;
    std::size_t support = 0;           // truth count
    std::optional<double> precision;   // empty when no predictions for the class
    std::optional<double> recall;      // empty when support == 0
    std::optional<double> f1;          // empty when precision+recall degenerate
};

struct EvalMetrics {
    double accuracy = 0.0;
    double balanced_accuracy = 0.0;  // mean of the defined per-class recalls
    bool balanced_accuracy_complete = true;  // false when a class was excluded
    std::vector<ClassMetrics> per_class;     // sorted by label
    std::size_t n = 0;
};

// Classification metrics over integer-coded labels. Classes are the union of
// values seen in either vector; division-by-zero cells are reported as empty
// optionals and excluded from the balanced-accuracy mean with the flag set.
EvalMetrics evaluate_predictions(std::span<const int> pred, std::span<const int> truth);

// k disjoint folds partitioning 0..n-1, sizes differing by at most one,
// deterministic for a fixed seed. Throws when k > n or k == 0.
std::vector<std::vector<std::size_t>> kfold_split(std::size_t n, std::size_t k,
                                                  std::uint64_t seed);

// Stratified variant: each fold's class histogram differs from proportional by
// at most one per class.
std::vector<std::vector<std::size_t>> stratified_kfold_split(std::span<const int> labels,
                                                             std::size_t k, std::uint64_t seed);

struct HoldoutSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

// Disjoint, exhaustive, deterministic; train size = round-half-up(n * fraction),
// kept within [1, n-1] when n >= 2.
HoldoutSplit holdout_split(std::size_t n, double train_fraction, std::uint64_t seed);

}  // namespace newsbias::stats
