#include "newsbias/corpus/ingest.hpp"

#include <fstream>
#include <map>
#include <stdexcept>

#include <json.hpp>

#include "newsbias/util/utf8.hpp"

namespace newsbias::corpus {

using nlohmann::json;

namespace {

// Resolves "a.b.c" against nested objects; nullptr when absent.
const json* lookup(const json& root, const std::string& path) {
    const json* cur = &root;
    std::size_t pos = 0;
    while (pos < path.size()) {
        const std::size_t dot = path.find('.', pos);
        const std::string key = path.substr(pos, dot == std::string::npos ? dot : dot - pos);
        if (!cur->is_object() || !cur->contains(key)) return nullptr;
        cur = &(*cur)[key];
        if (dot == std::string::npos) break;
        pos = dot + 1;
    }
    return cur;
}

// "entities.hashtags[].text": array at the prefix, field gathered per element.
std::vector<std::string> lookup_array_field(const json& root, const std::string& path) {
    const std::size_t marker = path.find("[].");
    std::vector<std::string> out;
    if (marker == std::string::npos) {
        if (const json* v = lookup(root, path); v && v->is_array()) {
            for (const auto& e : *v) {
                if (e.is_string()) out.push_back(e.get<std::string>());
            }
        }
        return out;
    }
    const json* arr = lookup(root, path.substr(0, marker));
    if (!arr || !arr->is_array()) return out;
    const std::string field = path.substr(marker + 3);
    for (const auto& e : *arr) {
        if (const json* v = lookup(e, field); v && v->is_string()) {
            out.push_back(v->get<std::string>());
        }
    }
    return out;
}

std::optional<std::string> get_string(const json& root, const std::string& path) {
    const json* v = lookup(root, path);
    if (!v) return std::nullopt;
    if (v->is_string()) return v->get<std::string>();
    if (v->is_number_integer()) return std::to_string(v->get<std::int64_t>());
    if (v->is_number_unsigned()) return std::to_string(v->get<std::uint64_t>());
    return std::nullopt;
}

std::optional<std::int64_t> get_int(const json& root, const std::string& path) {
    const json* v = lookup(root, path);
    if (!v) return std::nullopt;
    if (v->is_number_integer()) return v->get<std::int64_t>();
    if (v->is_number_unsigned()) return static_cast<std::int64_t>(v->get<std::uint64_t>());
    if (v->is_string()) {
        try {
            return std::stoll(v->get<std::string>());
        } catch (...) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<TweetRecord> parse_tweet(const json& j, const SchemaMap& schema) {
    TweetRecord t;
    const auto id = get_string(j, schema.id);
    const auto created = get_string(j, schema.created_at);
    const auto text = get_string(j, schema.text);
    if (!id || id->empty() || !created || !text) return std::nullopt;
    const auto ts = parse_timestamp(*created);
    if (!ts) return std::nullopt;
    t.id = *id;
    t.created_at = *ts;
    t.text = *text;
    t.user_id = get_string(j, schema.user_id).value_or("");
    t.user_followers = std::max<std::int64_t>(0, get_int(j, schema.user_followers).value_or(0));
    t.retweet_count = std::max<std::int64_t>(0, get_int(j, schema.retweet_count).value_or(0));
    if (const json* rt = lookup(j, schema.is_retweet)) {
        t.is_retweet = rt->is_boolean() ? rt->get<bool>() : !rt->is_null();
    }
    for (const auto& tag : lookup_array_field(j, schema.hashtags)) {
        t.hashtags.push_back(utf8::lower_latin(utf8::nfc(tag)));
    }
    if (auto lang = get_string(j, schema.lang); lang && !lang->empty() && *lang != "und") {
        t.lang = *lang;
    }
    return t;
}

}  // namespace

CorpusSlice ingest_jsonl(const std::string& path, const SchemaMap& schema, Event event,
                         MediaRegion region, IngestStats* stats) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("ingest_jsonl: cannot open " + path);

    IngestStats local;
    std::map<std::string, TweetRecord> by_id;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        ++local.lines;
        json j = json::parse(line, nullptr, /*allow_exceptions=*/false);
        if (j.is_discarded() || !j.is_object()) {
            ++local.malformed;
            continue;
        }
        auto tweet = parse_tweet(j, schema);
        if (!tweet) {
            ++local.malformed;
            continue;
        }
        auto [it, inserted] = by_id.try_emplace(tweet->id, *tweet);
        if (!inserted) {
            ++local.duplicate_ids;
            if (tweet->created_at < it->second.created_at) it->second = *tweet;
        }
    }
    if (local.lines > 0 && 2 * local.malformed > local.lines) {
        throw std::runtime_error("ingest_jsonl: " + std::to_string(local.malformed) + " of " +
                                 std::to_string(local.lines) + " lines malformed in " + path);
    }

    CorpusSlice slice;
    slice.event = event;
    slice.media_region = region;
    slice.tweets.reserve(by_id.size());
    for (auto& [id, tweet] : by_id) {
        (void)id;
        slice.tweets.push_back(std::move(tweet));
    }
    slice.normalize();
    slice.record("ingest",
                 "file=" + path + " malformed=" + std::to_string(local.malformed) +
                     " duplicate_ids=" + std::to_string(local.duplicate_ids),
                 local.lines);
    if (stats) *stats = local;
    return slice;
}

}  // namespace newsbias::corpus
