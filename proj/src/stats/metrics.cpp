#include "newsbias/stats/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "newsbias/util/rng.hpp"

namespace newsbias::stats {

EvalMetrics evaluate_predictions(std::span<const int> pred, std::span<const int> truth) {
    if (pred.size() != truth.size()) throw std::invalid_argument("evaluate_predictions: length mismatch");
    EvalMetrics out;
    out.n = truth.size();
    if (truth.empty()) return out;

    std::map<int, std::size_t> support, predicted, correct;
    std::size_t hits = 0;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        ++support[truth[i]];
        ++predicted[pred[i]];
        if (pred[i] == truth[i]) {
            ++correct[truth[i]];
            ++hits;
        }
    }
    std::map<int, bool> classes;
    for (const auto& [c, _] : support) classes[c] = true;
    for (const auto& [c, _] : predicted) classes[c] = true;

    out.accuracy = static_cast<double>(hits) / static_cast<double>(truth.size());
    double recall_sum = 0.0;
    std::size_t recall_count = 0;
    for (const auto& [c, _] : classes) {
        ClassMetrics m;
        m.label = c;
        m.support = support.count(c) ? support[c] : 0;
        const std::size_t tp = correct.count(c) ? correct[c] : 0;
        const std::size_t pc = predicted.count(c) ? predicted[c] : 0;
        if (pc > 0) m.precision = static_cast<double>(tp) / static_cast<double>(pc);
        if (m.support > 0) {
            m.recall = static_cast<double>(tp) / static_cast<double>(m.support);
            recall_sum += *m.recall;
            ++recall_count;
        } else {
            out.balanced_accuracy_complete = false;
        }
        if (m.precision && m.recall && (*m.precision + *m.recall) > 0.0) {
            m.f1 = 2.0 * *m.precision * *m.recall / (*m.precision + *m.recall);
        }
        out.per_class.push_back(m);
    }
    out.balanced_accuracy = recall_count ? recall_sum / static_cast<double>(recall_count) : 0.0;
    return out;
}

std::vector<std::vector<std::size_t>> kfold_split(std::size_t n, std::size_t k,
                                                  std::uint64_t seed) {
    if (k == 0 || k > n) throw std::invalid_argument("kfold_split: need 0 < k <= n");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    rng.shuffle(idx);
    std::vector<std::vector<std::size_t>> folds(k);
    for (std::size_t i = 0; i < n; ++i) folds[i % k].push_back(idx[i]);
    return folds;
}

std::vector<std::vector<std::size_t>> stratified_kfold_split(std::span<const int> labels,
                                                             std::size_t k, std::uint64_t seed) {
    const std::size_t n = labels.size();
    if (k == 0 || k > n) throw std::invalid_argument("stratified_kfold_split: need 0 < k <= n");
    std::map<int, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < n; ++i) by_class[labels[i]].push_back(i);

    std::vector<std::vector<std::size_t>> folds(k);
    std::size_t cursor = 0;  // rotates across classes so fold sizes stay even
    std::uint64_t stream = 0;
    for (auto& [label, members] : by_class) {
        (void)label;
        Rng rng(derive_seed(seed, stream++));
        rng.shuffle(members);
        for (std::size_t i = 0; i < members.size(); ++i) {
            folds[cursor % k].push_back(members[i]);
            ++cursor;
        }
    }
    return folds;
}

HoldoutSplit holdout_split(std::size_t n, double train_fraction, std::uint64_t seed) {
    if (!(train_fraction > 0.0) || !(train_fraction < 1.0)) {
        throw std::invalid_argument("holdout_split: fraction must be in (0,1)");
    }
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    rng.shuffle(idx);
    // Round half up.
    std::size_t train_count = static_cast<std::size_t>(
        std::floor(static_cast<double>(n) * train_fraction + 0.5));
    if (n >= 2) train_count = std::clamp<std::size_t>(train_count, 1, n - 1);
    HoldoutSplit split;
    split.train.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(train_count));
    split.test.assign(idx.begin() + static_cast<std::ptrdiff_t>(train_count), idx.end());
    return split;
}

}  // namespace newsbias::stats
