#pragma once

#include <cstdint>
#include <vector>

#include "newsbias/corpus/tweet.hpp"

namespace newsbias::corpus {

// Splits the corpus into consecutive 24-hour buckets from the earliest tweet
// and draws round(n_b * target_n/|corpus|) tweets per bucket uniformly without
// replacement; after rounding, the largest buckets are adjusted so the total
// equals min(target_n, |corpus|). Deterministic for a fixed seed.
CorpusSlice stratified_day_sample(const CorpusSlice& corpus, std::size_t target_n,
                                  std::uint64_t seed);

// The per-bucket draw arithmetic, exposed for verification: bucket sizes in,
// draws out (sum == min(target_n, total)).
std::vector<std::size_t> day_sample_draws(const std::vector<std::size_t>& bucket_sizes,
                                          std::size_t target_n);

struct HourlyPoint {
    UtcSeconds hour_start = 0;
    double value = 0.0;
};

// Tweet counts per UTC hour over the slice's occupied hour span (interior
// zero hours included); normalized values are count/total and sum to 1.
std::vector<HourlyPoint> hourly_volume(const CorpusSlice& corpus, bool normalize);

}  // namespace newsbias::corpus
