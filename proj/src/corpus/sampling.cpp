#include "newsbias/corpus/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "newsbias/util/rng.hpp"

namespace newsbias::corpus {

std::vector<std::size_t> day_sample_draws(const std::vector<std::size_t>& bucket_sizes,
                                          std::size_t target_n) {
    std::size_t total = 0;
    for (std::size_t b : bucket_sizes) total += b;
    const std::size_t want = std::min(target_n, total);
    if (total == 0) return std::vector<std::size_t>(bucket_sizes.size(), 0);

    const double c = static_cast<double>(target_n) / static_cast<double>(total);
    std::vector<std::size_t> draws(bucket_sizes.size());
    std::size_t drawn = 0;
    for (std::size_t i = 0; i < bucket_sizes.size(); ++i) {
        const double exact = static_cast<double>(bucket_sizes[i]) * c;
        draws[i] = std::min(bucket_sizes[i],
                            static_cast<std::size_t>(std::floor(exact + 0.5)));  // round half up
        drawn += draws[i];
    }
    // Rounding repair: walk buckets from largest (ties by index) adjusting
    // each within [0, n_b] until the total hits the target.
    std::vector<std::size_t> order(bucket_sizes.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bucket_sizes[a] > bucket_sizes[b];
    });
    for (std::size_t k = 0; drawn != want; k = (k + 1) % order.size()) {
        const std::size_t i = order[k];
        if (drawn < want && draws[i] < bucket_sizes[i]) {
            ++draws[i];
            ++drawn;
        } else if (drawn > want && draws[i] > 0) {
            --draws[i];
            --drawn;
        }
    }
    return draws;
}

CorpusSlice stratified_day_sample(const CorpusSlice& corpus, std::size_t target_n,
                                  std::uint64_t seed) {
    if (target_n == 0) throw std::invalid_argument("stratified_day_sample: target_n must be positive");
    if (corpus.empty()) throw std::invalid_argument("stratified_day_sample: corpus is empty");

    CorpusSlice out;
    out.event = corpus.event;
    out.media_region = corpus.media_region;
    out.provenance = corpus.provenance;

    if (target_n >= corpus.size()) {
        out.tweets = corpus.tweets;
        out.record("stratified_day_sample",
                   "target=" + std::to_string(target_n) + " seed=" + std::to_string(seed) +
                       " (target >= corpus, kept all)",
                   corpus.size());
        return out;
    }

    const UtcSeconds origin = corpus.tweets.front().created_at;  // tweets are sorted
    std::vector<std::vector<std::size_t>> buckets;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const auto b = static_cast<std::size_t>((corpus.tweets[i].created_at - origin) / 86400);
        if (b >= buckets.size()) buckets.resize(b + 1);
        buckets[b].push_back(i);
    }
    std::vector<std::size_t> sizes(buckets.size());
    for (std::size_t b = 0; b < buckets.size(); ++b) sizes[b] = buckets[b].size();
    const auto draws = day_sample_draws(sizes, target_n);

    for (std::size_t b = 0; b < buckets.size(); ++b) {
        if (draws[b] == 0) continue;
        Rng rng(derive_seed(seed, b));
        for (const std::size_t pick : rng.sample_without_replacement(buckets[b].size(), draws[b])) {
            out.tweets.push_back(corpus.tweets[buckets[b][pick]]);
        }
    }
    out.normalize();
    out.record("stratified_day_sample",
               "target=" + std::to_string(target_n) + " seed=" + std::to_string(seed) +
                   " buckets=" + std::to_string(buckets.size()),
               corpus.size());
    return out;
}

std::vector<HourlyPoint> hourly_volume(const CorpusSlice& corpus, bool normalize) {
    std::vector<HourlyPoint> out;
    if (corpus.empty()) return out;
    const auto hour_of = [](UtcSeconds t) {
        UtcSeconds h = t / 3600;
        if (t < 0 && t % 3600 != 0) --h;  // floor for pre-epoch times
        return h;
    };
    const UtcSeconds first = hour_of(corpus.tweets.front().created_at);
    const UtcSeconds last = hour_of(corpus.tweets.back().created_at);
    out.resize(static_cast<std::size_t>(last - first + 1));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i].hour_start = (first + static_cast<UtcSeconds>(i)) * 3600;
    }
    for (const auto& t : corpus.tweets) {
        out[static_cast<std::size_t>(hour_of(t.created_at) - first)].value += 1.0;
    }
    if (normalize) {
        const double total = static_cast<double>(corpus.size());
        for (auto& p : out) p.value /= total;
    }
    return out;
}

}  // namespace newsbias::corpus
