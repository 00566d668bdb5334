#pragma once

#include <string>
#include <vector>

#include "newsbias/corpus/tweet.hpp"

namespace newsbias::corpus {

// Keeps only tweets authored by one of the given accounts; provenance records
// a hash of the account list. An empty account list is an error (distinct from
// "no matches").
CorpusSlice filter_by_accounts(const CorpusSlice& corpus, const std::vector<NewsAccount>& accounts);

// Removes a tweet iff any exclusion term matches case-insensitively as a
// token (multi-word terms match as a token sequence) or as a substring of a
// hashtag. Text and terms are NFC-normalized so Arabic terms match.
CorpusSlice filter_by_terms(const CorpusSlice& corpus, const std::vector<std::string>& exclude_terms);

CorpusSlice remove_retweets(const CorpusSlice& corpus);

// Retains tweets with start <= created_at < start + duration.
CorpusSlice temporal_slice(const CorpusSlice& corpus, const TimeWindow& window);

// Match tokens of a text under the term-filter rules (exposed for tests).
struct MatchToken {
    std::string token;
    bool is_hashtag = false;
};
std::vector<MatchToken> match_tokens(const std::string& text);

}  // namespace newsbias::corpus
