#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "newsbias/util/time.hpp"

namespace newsbias::corpus {

enum class Event : std::uint8_t { Beirut = 0, Paris = 1 };
enum class MediaRegion : std::uint8_t { Western = 0, Arab = 1 };

const char* to_string(Event e);
const char* to_string(MediaRegion r);
std::optional<Event> event_from_string(const std::string& s);
std::optional<MediaRegion> region_from_string(const std::string& s);

struct TweetRecord {
    std::string id;
    UtcSeconds created_at = 0;
    std::string text;
    std::string user_id;
    std::int64_t user_followers = 0;
    std::int64_t retweet_count = 0;
    bool is_retweet = false;
    std::vector<std::string> hashtags;  // lowercase, no '#'
    std::optional<std::string> lang;    // ISO-639-1
    std::optional<double> lang_confidence;  // present iff lang was machine-assigned
};

struct NewsAccount {
    std::string username;
    std::string user_id;
    MediaRegion region = MediaRegion::Western;
    std::string country;
    std::int64_t follower_count = 0;
};

struct ProvenanceEntry {
    std::string filter;
    std::string detail;
    std::size_t input_count = 0;
    std::size_t output_count = 0;
};

struct TimeWindow {
    UtcSeconds start = 0;
    double duration_days = 0.0;  // > 0

    UtcSeconds end() const {
        return start + static_cast<UtcSeconds>(duration_days * 86400.0 + 0.5);
    }
};

// A tagged tweet collection. Tweets are kept sorted by (created_at, id) and
// unique by id; every filter appends exactly one provenance entry.
struct CorpusSlice {
    Event event = Event::Beirut;
    MediaRegion media_region = MediaRegion::Western;
    std::vector<TweetRecord> tweets;
    std::vector<ProvenanceEntry> provenance;

    std::size_t size() const { return tweets.size(); }
    bool empty() const { return tweets.empty(); }

    // Restores the sort order and checks the id-uniqueness invariant.
    void normalize();
    void record(std::string filter, std::string detail, std::size_t input_count);
};

// CSV account list: username,user_id,region,country,follower_count.
std::vector<NewsAccount> read_accounts_csv(const std::string& path);

// JSON-lines slice persistence with a sidecar "<path>.provenance.json".
void write_slice_jsonl(const CorpusSlice& slice, const std::string& path);
CorpusSlice read_slice_jsonl(const std::string& path, Event event, MediaRegion region);

}  // namespace newsbias::corpus
