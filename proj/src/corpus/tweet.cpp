#include "newsbias/corpus/tweet.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "newsbias/util/csv.hpp"

namespace newsbias::corpus {

using nlohmann::json;

const char* to_string(Event e) { return e == Event::Beirut ? "beirut" : "paris"; }

const char* to_string(MediaRegion r) { return r == MediaRegion::Western ? "western" : "arab"; }

std::optional<Event> event_from_string(const std::string& s) {
    if (s == "beirut" || s == "Beirut") return Event::Beirut;
    if (s == "paris" || s == "Paris") return Event::Paris;
    return std::nullopt;
}

std::optional<MediaRegion> region_from_string(const std::string& s) {
    if (s == "western" || s == "Western") return MediaRegion::Western;
    if (s == "arab" || s == "Arab") return MediaRegion::Arab;
    return std::nullopt;
}

void CorpusSlice::normalize() {
    std::sort(tweets.begin(), tweets.end(), [](const TweetRecord& a, const TweetRecord& b) {
        if (a.created_at != b.created_at) return a.created_at < b.created_at;
        return a.id < b.id;
    });
    std::set<std::string> seen;
    for (const auto& t : tweets) {
        if (!seen.insert(t.id).second) {
            throw std::runtime_error("CorpusSlice: duplicate tweet id " + t.id);
        }
    }
}

void CorpusSlice::record(std::string filter, std::string detail, std::size_t input_count) {
    provenance.push_back({std::move(filter), std::move(detail), input_count, tweets.size()});
}

std::vector<NewsAccount> read_accounts_csv(const std::string& path) {
    const auto rows = csv::parse_file(path);
    std::vector<NewsAccount> out;
    std::set<std::string> usernames;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty()) continue;
        if (r == 0 && row[0] == "username") continue;
        if (row.size() < 5) {
            throw std::runtime_error("accounts csv: short row " + std::to_string(r + 1) + " in " + path);
        }
        NewsAccount acc;
        acc.username = row[0];
        acc.user_id = row[1];
        const auto region = region_from_string(row[2]);
        if (!region) {
            throw std::runtime_error("accounts csv: unknown region '" + row[2] + "' at row " +
                                     std::to_string(r + 1));
        }
        acc.region = *region;
        acc.country = row[3];
        acc.follower_count = std::stoll(row[4]);
        if (acc.follower_count < 0) {
            throw std::runtime_error("accounts csv: negative follower count at row " +
                                     std::to_string(r + 1));
        }
        if (!usernames.insert(acc.username).second) {
            throw std::runtime_error("accounts csv: duplicate username '" + acc.username + "'");
        }
        out.push_back(std::move(acc));
    }
    return out;
}

namespace {

json tweet_to_json(const TweetRecord& t) {
    json j;
    j["id"] = t.id;
    j["created_at"] = format_timestamp(t.created_at);
    j["text"] = t.text;
    j["user_id"] = t.user_id;
    j["user_followers"] = t.user_followers;
    j["retweet_count"] = t.retweet_count;
    j["is_retweet"] = t.is_retweet;
    j["hashtags"] = t.hashtags;
    if (t.lang) j["lang"] = *t.lang;
    if (t.lang_confidence) j["lang_confidence"] = *t.lang_confidence;
    return j;
}

TweetRecord tweet_from_json(const json& j) {
    TweetRecord t;
    t.id = j.at("id").get<std::string>();
    const auto ts = parse_timestamp(j.at("created_at").get<std::string>());
    if (!ts) throw std::runtime_error("slice jsonl: bad created_at for tweet " + t.id);
    t.created_at = *ts;
    t.text = j.at("text").get<std::string>();
    t.user_id = j.value("user_id", std::string{});
    t.user_followers = j.value("user_followers", std::int64_t{0});
    t.retweet_count = j.value("retweet_count", std::int64_t{0});
    t.is_retweet = j.value("is_retweet", false);
    if (j.contains("hashtags")) t.hashtags = j.at("hashtags").get<std::vector<std::string>>();
    if (j.contains("lang")) t.lang = j.at("lang").get<std::string>();
    if (j.contains("lang_confidence")) t.lang_confidence = j.at("lang_confidence").get<double>();
    return t;
}

}  // namespace

void write_slice_jsonl(const CorpusSlice& slice, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    for (const auto& t : slice.tweets) {
        os << tweet_to_json(t).dump() << '\n';
    }
    json prov = json::array();
    for (const auto& p : slice.provenance) {
        prov.push_back({{"filter", p.filter},
                        {"detail", p.detail},
                        {"input_count", p.input_count},
                        {"output_count", p.output_count}});
    }
    json side{{"event", to_string(slice.event)},
              {"media_region", to_string(slice.media_region)},
              {"tweet_count", slice.tweets.size()},
              {"provenance", prov}};
    std::ofstream ps(path + ".provenance.json", std::ios::binary);
    if (!ps) throw std::runtime_error("cannot write " + path + ".provenance.json");
    ps << side.dump(2) << '\n';
}

CorpusSlice read_slice_jsonl(const std::string& path, Event event, MediaRegion region) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    CorpusSlice slice;
    slice.event = event;
    slice.media_region = region;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        slice.tweets.push_back(tweet_from_json(json::parse(line)));
    }
    std::ifstream ps(path + ".provenance.json", std::ios::binary);
    if (ps) {
        const json side = json::parse(ps);
        for (const auto& p : side.value("provenance", json::array())) {
            slice.provenance.push_back({p.value("filter", std::string{}),
                                        p.value("detail", std::string{}),
                                        p.value("input_count", std::size_t{0}),
                                        p.value("output_count", std::size_t{0})});
        }
    }
    slice.normalize();
    return slice;
}

}  // namespace newsbias::corpus
