#include "newsbias/corpus/langid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "newsbias/util/utf8.hpp"

namespace newsbias::corpus {

using nlohmann::json;

namespace {

// Codepoint trigrams over NFC-normalized, Latin-lowercased text with
// whitespace collapsed and a space sentinel on both ends.
std::vector<std::string> trigrams(const std::string& text) {
    auto cps = utf8::nfc(utf8::decode(text));
    std::vector<char32_t> norm;
    norm.reserve(cps.size() + 2);
    norm.push_back(U' ');
    for (char32_t cp : cps) {
        if (cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U' ') {
            if (norm.back() != U' ') norm.push_back(U' ');
        } else {
            norm.push_back(utf8::to_lower_latin(cp));
        }
    }
    if (norm.back() != U' ') norm.push_back(U' ');
    std::vector<std::string> grams;
    if (norm.size() < 3) return grams;
    grams.reserve(norm.size() - 2);
    for (std::size_t i = 0; i + 3 <= norm.size(); ++i) {
        std::string g;
        utf8::append(g, norm[i]);
        utf8::append(g, norm[i + 1]);
        utf8::append(g, norm[i + 2]);
        grams.push_back(std::move(g));
    }
    return grams;
}

}  // namespace

CharNgramLangId CharNgramLangId::train(const std::map<std::string, std::string>& seed_texts) {
    if (seed_texts.size() < 2) {
        throw std::invalid_argument("CharNgramLangId::train: need at least 2 languages");
    }
    CharNgramLangId id;
    for (const auto& [lang, text] : seed_texts) {
        if (utf8::decode(text).size() < 1000) {
            throw std::invalid_argument("CharNgramLangId::train: seed text for '" + lang +
                                        "' is shorter than 1000 characters");
        }
        id.model_.langs.push_back(lang);
    }
    const std::size_t k = id.model_.langs.size();
    id.model_.totals.assign(k, 0.0);
    for (std::size_t li = 0; li < k; ++li) {
        const auto& text = seed_texts.at(id.model_.langs[li]);
        for (auto& gram : trigrams(text)) {
            auto [it, inserted] = id.model_.gram_counts.try_emplace(std::move(gram));
            if (inserted) it->second.assign(k, 0.0);
            it->second[li] += 1.0;
            id.model_.totals[li] += 1.0;
        }
    }
    id.model_.vocabulary_size = static_cast<double>(id.model_.gram_counts.size());
    return id;
}

LangPrediction CharNgramLangId::classify(const std::string& text) const {
    const auto grams = trigrams(text);
    if (grams.empty() || model_.langs.empty()) return {"und", 0.0};

    const std::size_t k = model_.langs.size();
    std::vector<double> log_post(k, 0.0);  // uniform prior
    for (const auto& gram : grams) {
        const auto it = model_.gram_counts.find(gram);
        for (std::size_t li = 0; li < k; ++li) {
            const double count = it == model_.gram_counts.end() ? 0.0 : it->second[li];
            log_post[li] += std::log((count + 1.0) / (model_.totals[li] + model_.vocabulary_size));
        }
    }
    const double max_lp = *std::max_element(log_post.begin(), log_post.end());
    double denom = 0.0;
    for (double lp : log_post) denom += std::exp(lp - max_lp);
    std::size_t best = 0;
    for (std::size_t li = 1; li < k; ++li) {
        if (log_post[li] > log_post[best]) best = li;
    }
    return {model_.langs[best], std::exp(log_post[best] - max_lp) / denom};
}

void CharNgramLangId::save(const std::string& path) const {
    json j;
    j["langs"] = model_.langs;
    j["totals"] = model_.totals;
    j["vocabulary_size"] = model_.vocabulary_size;
    json grams = json::object();
    for (const auto& [gram, counts] : model_.gram_counts) grams[gram] = counts;
    j["gram_counts"] = std::move(grams);
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << j.dump() << '\n';
}

CharNgramLangId CharNgramLangId::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    const json j = json::parse(in);
    CharNgramLangId id;
    id.model_.langs = j.at("langs").get<std::vector<std::string>>();
    id.model_.totals = j.at("totals").get<std::vector<double>>();
    id.model_.vocabulary_size = j.at("vocabulary_size").get<double>();
    for (const auto& [gram, counts] : j.at("gram_counts").items()) {
        id.model_.gram_counts[gram] = counts.get<std::vector<double>>();
    }
    return id;
}

CharNgramLangId builtin_langid() { return CharNgramLangId::train(builtin_langid_seed_texts()); }

LanguageGateResult language_gate(const CorpusSlice& corpus, const LanguageIdentifier& identifier,
                                 double min_conf) {
    if (!(min_conf > 0.0) || !(min_conf <= 1.0)) {
        throw std::invalid_argument("language_gate: min_conf must be in (0,1]");
    }
    LanguageGateResult out;
    out.accepted.event = out.review_queue.event = corpus.event;
    out.accepted.media_region = out.review_queue.media_region = corpus.media_region;
    out.accepted.provenance = out.review_queue.provenance = corpus.provenance;

    for (const auto& tweet : corpus.tweets) {
        LangPrediction pred;
        try {
            pred = identifier.classify(tweet.text);
        } catch (const std::exception&) {
            pred = {"und", 0.0};
        }
        TweetRecord t = tweet;
        if (pred.confidence >= min_conf) {
            if (pred.lang == "es") {
                ++out.spanish_dropped;
                continue;
            }
            t.lang = pred.lang;
            t.lang_confidence = pred.confidence;
            out.accepted.tweets.push_back(std::move(t));
        } else {
            t.lang = std::nullopt;
            t.lang_confidence = std::nullopt;
            out.review_queue.tweets.push_back(std::move(t));
        }
    }
    char conf[32];
    std::snprintf(conf, sizeof conf, "%.4f", min_conf);
    out.accepted.record("language_gate",
                        std::string("min_conf=") + conf +
                            " spanish_dropped=" + std::to_string(out.spanish_dropped),
                        corpus.size());
    out.review_queue.record("language_gate_review", std::string("min_conf=") + conf, corpus.size());
    return out;
}

}  // namespace newsbias::corpus
