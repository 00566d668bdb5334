#pragma once

#include <cstdint>
#include <string_view>

#include "newsbias/corpus/tweet.hpp"

namespace newsbias::corpus {

// Unit-cost edit distance over unicode scalar values.
std::size_t levenshtein(std::string_view a, std::string_view b);

// Tweets a, b are near-duplicates iff levenshtein(a,b) / max(|a|,|b|) <= threshold
// (codepoint lengths; two empty texts are duplicates). Clusters are the
// transitive closure of the pairwise relation; the earliest tweet of each
// cluster is kept (ties broken by id). The pruned scan is exact: pairs are
// skipped only when the length difference alone exceeds threshold * max length.
CorpusSlice near_dedup(const CorpusSlice& corpus, double threshold = 0.1);

// Reference implementation used by the equivalence tests: full pairwise
// levenshtein with no pruning or banding.
CorpusSlice near_dedup_exhaustive(const CorpusSlice& corpus, double threshold = 0.1);

}  // namespace newsbias::corpus
