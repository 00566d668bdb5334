#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>

#include "newsbias/corpus/tweet.hpp"

namespace newsbias::corpus {

struct LangPrediction {
    std::string lang;        // ISO-639-1, "und" when no evidence
    double confidence = 0.0; // normalized posterior of the winning language
};

class LanguageIdentifier {
public:
    virtual ~LanguageIdentifier() = default;
    virtual LangPrediction classify(const std::string& text) const = 0;
};

// Character 3-gram Naive Bayes over the languages given at training time.
// Confidence is the posterior of the winning class normalized across classes.
class CharNgramLangId final : public LanguageIdentifier {
public:
    LangPrediction classify(const std::string& text) const override;

    // Per-language seed text, each >= 1000 characters; >= 2 languages required.
    static CharNgramLangId train(const std::map<std::string, std::string>& seed_texts);

    void save(const std::string& path) const;
    static CharNgramLangId load(const std::string& path);

private:
    struct Model {
        std::vector<std::string> langs;
        // gram -> per-language counts; grams are 3 codepoints re-encoded as UTF-8.
        std::map<std::string, std::vector<double>> gram_counts;
        std::vector<double> totals;      // total gram count per language
        double vocabulary_size = 0.0;    // distinct grams, for add-one smoothing
    };
    Model model_;
};

// Seed texts bundled with the artifact for {en, ar, fr, de, es}.
const std::map<std::string, std::string>& builtin_langid_seed_texts();

// The identifier the pipeline uses when no external one is plugged in.
CharNgramLangId builtin_langid();

struct LanguageGateResult {
    CorpusSlice accepted;       // confidence >= min_conf, Spanish excluded
    CorpusSlice review_queue;   // low confidence or identifier failure
    std::size_t spanish_dropped = 0;
};

// Tweets at or above min_conf are accepted with lang/lang_confidence set;
// the rest go to the review queue (identifier failures with confidence 0).
// Spanish-identified tweets are dropped from the accepted output.
LanguageGateResult language_gate(const CorpusSlice& corpus, const LanguageIdentifier& identifier,
                                 double min_conf = 0.95);

}  // namespace newsbias::corpus
