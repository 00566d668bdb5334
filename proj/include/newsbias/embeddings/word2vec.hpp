#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace newsbias::embeddings {

// Token index map with reserved PAD (0) and UNK (1) entries. Indices are
// assigned by descending frequency, ties by token text, so a fixed corpus
// always yields the same indexing.
class Vocabulary {
public:
    static constexpr std::size_t kPad = 0;
    static constexpr std::size_t kUnk = 1;

    static Vocabulary build(const std::vector<std::vector<std::string>>& corpus,
                            std::size_t min_count);
    static Vocabulary from_tokens(const std::vector<std::string>& tokens_in_index_order,
                                  const std::vector<std::int64_t>& frequencies);

    std::size_t size() const { return tokens_.size(); }
    std::size_t index_of(const std::string& token) const;  // kUnk when absent
    bool contains(const std::string& token) const;
    const std::string& token_at(std::size_t index) const { return tokens_.at(index); }
    std::int64_t frequency_at(std::size_t index) const { return frequencies_.at(index); }
    const std::vector<std::string>& tokens() const { return tokens_; }
    const std::vector<std::int64_t>& frequencies() const { return frequencies_; }

    std::uint64_t hash() const;  // content fingerprint over tokens in index order

private:
    std::vector<std::string> tokens_;
    std::vector<std::int64_t> frequencies_;
    std::map<std::string, std::size_t> index_;
};

struct EmbeddingMatrix {
    Vocabulary vocab;
    std::size_t dim = 0;
    std::vector<double> vectors;  // row-major |V| x dim; PAD row stays zero

    std::span<const double> row(std::size_t index) const {
        return {vectors.data() + index * dim, dim};
    }
    std::span<double> row(std::size_t index) {
        return {vectors.data() + index * dim, dim};
    }
};

struct Word2VecConfig {
    std::size_t dim = 100;
    std::size_t window = 5;
    std::size_t negatives = 5;
    std::size_t epochs = 5;
    std::size_t min_count = 2;
    double learning_rate = 0.025;  // linearly decayed
    bool subsample_frequent = false;
    double subsample_threshold = 1e-3;
    std::uint64_t seed = 0;
};

struct Word2VecReport {
    std::vector<double> epoch_mean_loss;
    std::size_t total_tokens = 0;
    std::size_t vocab_size = 0;
};

// Skip-gram with negative sampling (unigram^0.75 noise distribution),
// deterministic for a fixed seed under sequential training. Tokens below
// min_count train through the UNK slot. Throws when the corpus has fewer
// than 100 tokens or the vocabulary is empty after min_count.
EmbeddingMatrix train_word2vec(const std::vector<std::vector<std::string>>& corpus,
                               const Word2VecConfig& config, Word2VecReport* report = nullptr);

// One SGNS (center, context, negatives) step on the two weight tables.
// lr > 0 applies the canonical in-place update; grad_syn0/grad_syn1 (same
// shapes as the tables), when given, accumulate analytic gradients of the pair
// loss instead of updating. Returns the pair loss.
double sgns_pair_step(std::vector<double>& syn0, std::vector<double>& syn1, std::size_t dim,
                      std::size_t center, std::size_t context,
                      std::span<const std::size_t> negatives, double lr,
                      std::vector<double>* grad_syn0 = nullptr,
                      std::vector<double>* grad_syn1 = nullptr);

struct Neighbor {
    std::string token;
    double cosine = 0.0;
};

// Ranked by cosine similarity, self excluded, ties broken by vocabulary
// index. Throws std::invalid_argument on an out-of-vocabulary query.
std::vector<Neighbor> nearest_neighbors(const EmbeddingMatrix& matrix, const std::string& token,
                                        std::size_t k);

// Plain-text vector format: header "|V| dim", then "token v1 ... v_dim" rows.
void save_embeddings(const EmbeddingMatrix& matrix, const std::string& path);
EmbeddingMatrix load_embeddings(const std::string& path);

}  // namespace newsbias::embeddings
