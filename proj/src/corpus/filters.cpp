#include "newsbias/corpus/filters.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "newsbias/util/hash.hpp"
#include "newsbias/util/utf8.hpp"

namespace newsbias::corpus {

CorpusSlice filter_by_accounts(const CorpusSlice& corpus, const std::vector<NewsAccount>& accounts) {
    if (accounts.empty()) {
        throw std::invalid_argument("filter_by_accounts: account list is empty");
    }
    std::set<std::string> ids;
    std::uint64_t list_hash = 0xcbf29ce484222325ULL;
    std::vector<std::string> lines;
    lines.reserve(accounts.size());
    for (const auto& acc : accounts) {
        ids.insert(acc.user_id);
        lines.push_back(acc.username + ":" + acc.user_id + ":" + to_string(acc.region));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) list_hash = fnv1a64(l + "\n", list_hash);

    CorpusSlice out;
    out.event = corpus.event;
    out.media_region = corpus.media_region;
    out.provenance = corpus.provenance;
    for (const auto& t : corpus.tweets) {
        if (ids.count(t.user_id)) out.tweets.push_back(t);
    }
    out.record("filter_by_accounts",
               "accounts=" + std::to_string(accounts.size()) + " list_hash=" + to_hex(list_hash),
               corpus.size());
    return out;
}

std::vector<MatchToken> match_tokens(const std::string& text) {
    const auto cps = utf8::nfc(utf8::decode(text));
    std::vector<MatchToken> out;
    std::size_t i = 0;
    while (i < cps.size()) {
        bool hashtag = false;
        if (cps[i] == U'#') {
            hashtag = true;
            ++i;
        }
        std::string token;
        while (i < cps.size() &&
               (utf8::is_letter(cps[i]) || utf8::is_digit(cps[i]) || utf8::is_combining_mark(cps[i]) ||
                cps[i] == U'_')) {
            utf8::append(token, utf8::to_lower_latin(cps[i]));
            ++i;
        }
        if (!token.empty()) {
            out.push_back({std::move(token), hashtag});
        } else if (!hashtag) {
            ++i;  // plain delimiter
        }
    }
    return out;
}

CorpusSlice filter_by_terms(const CorpusSlice& corpus, const std::vector<std::string>& exclude_terms) {
    // Terms are expected normalized; normalize again so the contract is robust.
    std::vector<std::vector<std::string>> term_tokens;  // multi-word terms as token sequences
    std::vector<std::string> single_terms;
    for (const auto& raw : exclude_terms) {
        const auto toks = match_tokens(utf8::lower_latin(utf8::nfc(raw)));
        if (toks.empty()) continue;
        std::vector<std::string> seq;
        seq.reserve(toks.size());
        for (const auto& t : toks) seq.push_back(t.token);
        if (seq.size() == 1) single_terms.push_back(seq[0]);
        term_tokens.push_back(std::move(seq));
    }

    const auto hits = [&](const TweetRecord& tweet) {
        auto tokens = match_tokens(tweet.text);
        for (const auto& tag : tweet.hashtags) {
            tokens.push_back({utf8::lower_latin(utf8::nfc(tag)), true});
        }
        // Token-sequence match.
        for (const auto& seq : term_tokens) {
            if (seq.size() > tokens.size()) continue;
            for (std::size_t i = 0; i + seq.size() <= tokens.size(); ++i) {
                bool all = true;
                for (std::size_t j = 0; j < seq.size(); ++j) {
                    if (tokens[i + j].token != seq[j]) {
                        all = false;
                        break;
                    }
                }
                if (all) return true;
            }
        }
        // Substring match inside hashtags.
        for (const auto& tok : tokens) {
            if (!tok.is_hashtag) continue;
            for (const auto& term : single_terms) {
                if (tok.token.find(term) != std::string::npos) return true;
            }
        }
        return false;
    };

    CorpusSlice out;
    out.event = corpus.event;
    out.media_region = corpus.media_region;
    out.provenance = corpus.provenance;
    for (const auto& t : corpus.tweets) {
        if (!hits(t)) out.tweets.push_back(t);
    }
    out.record("filter_by_terms", "terms=" + std::to_string(exclude_terms.size()), corpus.size());
    return out;
}

CorpusSlice remove_retweets(const CorpusSlice& corpus) {
    CorpusSlice out;
    out.event = corpus.event;
    out.media_region = corpus.media_region;
    out.provenance = corpus.provenance;
    for (const auto& t : corpus.tweets) {
        if (!t.is_retweet) out.tweets.push_back(t);
    }
    out.record("remove_retweets", "", corpus.size());
    return out;
}

CorpusSlice temporal_slice(const CorpusSlice& corpus, const TimeWindow& window) {
    if (!(window.duration_days > 0.0)) {
        throw std::invalid_argument("temporal_slice: duration must be positive");
    }
    CorpusSlice out;
    out.event = corpus.event;
    out.media_region = corpus.media_region;
    out.provenance = corpus.provenance;
    const UtcSeconds end = window.end();
    for (const auto& t : corpus.tweets) {
        if (t.created_at >= window.start && t.created_at < end) out.tweets.push_back(t);
    }
    out.record("temporal_slice",
               "start=" + format_timestamp(window.start) + " days=" + std::to_string(window.duration_days),
               corpus.size());
    return out;
}

}  // namespace newsbias::corpus
