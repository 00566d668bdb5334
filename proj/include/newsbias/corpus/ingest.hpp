#pragma once

#include <map>
#include <string>

#include "newsbias/corpus/tweet.hpp"

namespace newsbias::corpus {

// Maps TweetRecord fields to JSON paths (dots descend into objects, a trailing
// "[].name" collects from an array). Unmapped optional fields stay default.
struct SchemaMap {
    std::string id = "id_str";
    std::string created_at = "created_at";
    std::string text = "text";
    std::string user_id = "user.id_str";
    std::string user_followers = "user.followers_count";
    std::string retweet_count = "retweet_count";
    // A boolean field, or an object field whose presence marks a retweet.
    std::string is_retweet = "retweeted_status";
    std::string hashtags = "entities.hashtags[].text";
    std::string lang = "lang";
};

struct IngestStats {
    std::size_t lines = 0;
    std::size_t malformed = 0;       // skipped: bad JSON or missing/bad required fields
    std::size_t duplicate_ids = 0;   // dropped, earliest timestamp kept
};

// Reads one JSON object per line. Malformed lines are counted and skipped;
// the file being unreadable or >50% of lines malformed is fatal
// (std::runtime_error). Output is UTC-normalized, id-deduplicated, sorted.
CorpusSlice ingest_jsonl(const std::string& path, const SchemaMap& schema, Event event,
                         MediaRegion region, IngestStats* stats = nullptr);

}  // namespace newsbias::corpus
