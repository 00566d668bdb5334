#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "newsbias/embeddings/word2vec.hpp"
#include "newsbias/stats/metrics.hpp"
#include "newsbias/util/rng.hpp"

namespace newsbias::classifier {

struct CnnConfig {
    std::vector<std::size_t> filter_widths{3, 4, 5};
    std::size_t filters_per_width = 128;
    double dropout_rate = 0.5;
    std::size_t epochs = 100;
    std::size_t batch_size = 64;
    std::size_t embedding_dim = 100;
    std::size_t num_classes = 2;
    std::uint64_t seed = 0;

    std::size_t total_filters() const { return filter_widths.size() * filters_per_width; }
    void validate() const;  // throws std::invalid_argument on bad values
};

// Single-convolutional-layer sentence classifier over frozen word vectors:
// per-width convolutions, max-over-time pooling, dropout, softmax output.
struct CnnModel {
    CnnConfig config;
    embeddings::EmbeddingMatrix embeddings;  // frozen copy
    std::uint64_t vocab_hash = 0;
    // kernels[w]: filter_widths[w] x dim x filters, laid out (k*dim + d)*filters + f.
    std::vector<std::vector<double>> kernels;
    std::vector<std::vector<double>> conv_bias;  // per width: filters
    std::vector<double> dense_w;                 // total_filters x num_classes
    std::vector<double> dense_b;                 // num_classes

    std::size_t parameter_count() const;
    // Flat view over all trainable parameters, kernels first, dense last.
    double get_parameter(std::size_t flat_index) const;
    void set_parameter(std::size_t flat_index, double value);
};

struct LabeledExample {
    std::vector<std::string> tokens;
    int label = 0;  // 0 = unsympathetic, 1 = sympathetic
};

struct TrainReport {
    std::vector<double> epoch_mean_loss;
    double final_train_accuracy = 0.0;
    double wall_clock_seconds = 0.0;
    std::uint64_t seed = 0;
};

struct Gradients {
    std::vector<std::vector<double>> kernels;
    std::vector<std::vector<double>> conv_bias;
    std::vector<double> dense_w;
    std::vector<double> dense_b;

    double get(std::size_t flat_index) const;
};

// Conv and dense weights initialized U(-0.05, 0.05) from the seed; embeddings
// copied and frozen. A zero UNK row is seeded U(-0.25, 0.25) so out-of-
// vocabulary tokens carry signal. Throws on a dim mismatch.
CnnModel build_model(const CnnConfig& config, const embeddings::EmbeddingMatrix& embeddings,
                     std::uint64_t seed);

// Class probabilities for one token sequence. Dropout (inverted scaling) is
// applied only when train_mode is set, drawing the mask from *rng.
std::vector<double> forward(const CnnModel& model, const std::vector<std::string>& tokens,
                            bool train_mode = false, Rng* rng = nullptr);

// Mean cross-entropy over a batch, dropout disabled (used by the gradient check).
double batch_loss(const CnnModel& model, const std::vector<LabeledExample>& batch);

// Analytic gradients of batch_loss with respect to every trainable parameter.
Gradients batch_gradients(const CnnModel& model, const std::vector<LabeledExample>& batch);

// Adadelta (rho = 0.95, eps = 1e-6) over shuffled mini-batches; deterministic
// for a fixed seed. Throws when fewer than 2 examples or only one class.
TrainReport train(CnnModel& model, const std::vector<LabeledExample>& data,
                  const CnnConfig& config);

struct CrossValidationReport {
    std::vector<stats::EvalMetrics> fold_metrics;
    stats::EvalMetrics pooled;  // all held-out predictions pooled
};

// Stratified k-fold cross-validation; every class needs >= 2 examples so each
// training fold sees both classes.
CrossValidationReport cross_validate(const std::vector<LabeledExample>& data, std::size_t k,
                                     const CnnConfig& config,
                                     const embeddings::EmbeddingMatrix& embeddings);

struct CorpusPrediction {
    std::vector<int> labels;       // argmax class per tweet, corpus order
    double sympathetic_ratio = 0;  // class-1 count / total
    std::size_t n = 0;
};

// Argmax prediction over tokenized tweet texts. Throws on an empty corpus.
CorpusPrediction predict_texts(const CnnModel& model, const std::vector<std::string>& texts);

// Self-describing JSON checkpoint (config + vocabulary + tensors). Loading
// verifies the stored vocabulary hash and refuses mismatched files.
void save_model(const CnnModel& model, const std::string& path);
CnnModel load_model(const std::string& path);

}  // namespace newsbias::classifier
