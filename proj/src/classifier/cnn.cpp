#include "newsbias/classifier/cnn.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

#include "newsbias/embeddings/tokenize.hpp"

namespace newsbias::classifier {

using embeddings::Vocabulary;
using nlohmann::json;

namespace {

constexpr double kAdadeltaRho = 0.95;
constexpr double kAdadeltaEps = 1e-6;

struct ForwardCache {
    std::vector<std::size_t> indices;        // padded token indices
    std::vector<std::vector<double>> pooled_pre;   // per width: max pre-activation per filter
    std::vector<std::vector<std::size_t>> argmax;  // per width: winning position per filter
    std::vector<double> features;            // post-ReLU, post-dropout concat
    std::vector<double> dropout_scale;       // per feature: 0 or 1/(1-rate); empty => no dropout
    std::vector<double> probs;
};

std::vector<std::size_t> pad_indices(const CnnModel& model, const std::vector<std::string>& tokens) {
    std::size_t max_width = 0;
    for (std::size_t w : model.config.filter_widths) max_width = std::max(max_width, w);
    const std::size_t len = std::max(tokens.size(), max_width);
    std::vector<std::size_t> idx(len, Vocabulary::kPad);
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        idx[i] = model.embeddings.vocab.index_of(tokens[i]);
    }
    return idx;
}

void forward_cached(const CnnModel& model, const std::vector<std::string>& tokens, bool train_mode,
                    Rng* rng, ForwardCache& cache) {
    const auto& cfg = model.config;
    const std::size_t dim = cfg.embedding_dim;
    const std::size_t filters = cfg.filters_per_width;
    cache.indices = pad_indices(model, tokens);
    const std::size_t len = cache.indices.size();

    cache.pooled_pre.assign(cfg.filter_widths.size(), {});
    cache.argmax.assign(cfg.filter_widths.size(), {});
    cache.features.assign(cfg.total_filters(), 0.0);
    cache.dropout_scale.clear();

    std::size_t feature_base = 0;
    for (std::size_t wi = 0; wi < cfg.filter_widths.size(); ++wi) {
        const std::size_t width = cfg.filter_widths[wi];
        const auto& kernel = model.kernels[wi];
        const auto& bias = model.conv_bias[wi];
        auto& pooled = cache.pooled_pre[wi];
        auto& argmax = cache.argmax[wi];
        pooled.assign(filters, -std::numeric_limits<double>::infinity());
        argmax.assign(filters, 0);

        std::vector<double> pre(filters);
        for (std::size_t p = 0; p + width <= len; ++p) {
            for (std::size_t f = 0; f < filters; ++f) pre[f] = bias[f];
            for (std::size_t k = 0; k < width; ++k) {
                const auto emb = model.embeddings.row(cache.indices[p + k]);
                const double* kr = kernel.data() + k * dim * filters;
                for (std::size_t d = 0; d < dim; ++d) {
                    const double x = emb[d];
                    if (x == 0.0) continue;  // PAD rows and sparse dims skip work
                    const double* kf = kr + d * filters;
                    for (std::size_t f = 0; f < filters; ++f) pre[f] += x * kf[f];
                }
            }
            for (std::size_t f = 0; f < filters; ++f) {
                if (pre[f] > pooled[f]) {
                    pooled[f] = pre[f];
                    argmax[f] = p;
                }
            }
        }
        for (std::size_t f = 0; f < filters; ++f) {
            cache.features[feature_base + f] = std::max(0.0, pooled[f]);
        }
        feature_base += filters;
    }

    if (train_mode && cfg.dropout_rate > 0.0) {
        if (!rng) throw std::invalid_argument("forward: train_mode dropout needs an Rng");
        const double keep = 1.0 - cfg.dropout_rate;
        cache.dropout_scale.assign(cache.features.size(), 0.0);
        for (std::size_t f = 0; f < cache.features.size(); ++f) {
            if (rng->uniform() < keep) cache.dropout_scale[f] = 1.0 / keep;
            cache.features[f] *= cache.dropout_scale[f];
        }
    }

    cache.probs.assign(cfg.num_classes, 0.0);
    std::vector<double> logits(cfg.num_classes, 0.0);
    for (std::size_t c = 0; c < cfg.num_classes; ++c) logits[c] = model.dense_b[c];
    for (std::size_t f = 0; f < cache.features.size(); ++f) {
        const double x = cache.features[f];
        if (x == 0.0) continue;
        const double* wr = model.dense_w.data() + f * cfg.num_classes;
        for (std::size_t c = 0; c < cfg.num_classes; ++c) logits[c] += x * wr[c];
    }
    const double max_logit = *std::max_element(logits.begin(), logits.end());
    double denom = 0.0;
    for (std::size_t c = 0; c < cfg.num_classes; ++c) {
        cache.probs[c] = std::exp(logits[c] - max_logit);
        denom += cache.probs[c];
    }
    for (auto& p : cache.probs) p /= denom;
}

// Accumulates gradients of -log p[label] into grads (scaled by `scale`).
void backward_cached(const CnnModel& model, const ForwardCache& cache, int label, double scale,
                     Gradients& grads) {
    const auto& cfg = model.config;
    const std::size_t dim = cfg.embedding_dim;
    const std::size_t filters = cfg.filters_per_width;

    std::vector<double> dlogits(cache.probs);
    dlogits[static_cast<std::size_t>(label)] -= 1.0;
    for (auto& g : dlogits) g *= scale;

    std::vector<double> dfeatures(cache.features.size(), 0.0);
    for (std::size_t f = 0; f < cache.features.size(); ++f) {
        const double x = cache.features[f];
        double acc = 0.0;
        const double* wr = model.dense_w.data() + f * cfg.num_classes;
        double* gw = grads.dense_w.data() + f * cfg.num_classes;
        for (std::size_t c = 0; c < cfg.num_classes; ++c) {
            gw[c] += x * dlogits[c];
            acc += wr[c] * dlogits[c];
        }
        dfeatures[f] = acc;
    }
    for (std::size_t c = 0; c < cfg.num_classes; ++c) grads.dense_b[c] += dlogits[c];

    std::size_t feature_base = 0;
    for (std::size_t wi = 0; wi < cfg.filter_widths.size(); ++wi) {
        const std::size_t width = cfg.filter_widths[wi];
        auto& gk = grads.kernels[wi];
        auto& gb = grads.conv_bias[wi];
        for (std::size_t f = 0; f < filters; ++f) {
            double g = dfeatures[feature_base + f];
            if (g == 0.0) continue;
            if (!cache.dropout_scale.empty()) g *= cache.dropout_scale[feature_base + f];
            if (cache.pooled_pre[wi][f] <= 0.0) continue;  // ReLU gate
            const std::size_t p = cache.argmax[wi][f];
            gb[f] += g;
            for (std::size_t k = 0; k < width; ++k) {
                const auto emb = model.embeddings.row(cache.indices[p + k]);
                double* gr = gk.data() + k * dim * filters;
                for (std::size_t d = 0; d < dim; ++d) {
                    if (emb[d] != 0.0) gr[d * filters + f] += g * emb[d];
                }
            }
        }
        feature_base += filters;
    }
}

Gradients zero_gradients(const CnnModel& model) {
    Gradients g;
    g.kernels.resize(model.kernels.size());
    g.conv_bias.resize(model.conv_bias.size());
    for (std::size_t wi = 0; wi < model.kernels.size(); ++wi) {
        g.kernels[wi].assign(model.kernels[wi].size(), 0.0);
        g.conv_bias[wi].assign(model.conv_bias[wi].size(), 0.0);
    }
    g.dense_w.assign(model.dense_w.size(), 0.0);
    g.dense_b.assign(model.dense_b.size(), 0.0);
    return g;
}

// Adadelta accumulator pair for one tensor.
struct AdaState {
    std::vector<double> grad_sq;
    std::vector<double> update_sq;
    explicit AdaState(std::size_t n) : grad_sq(n, 0.0), update_sq(n, 0.0) {}
};

void adadelta_apply(std::vector<double>& param, const std::vector<double>& grad, AdaState& state) {
    for (std::size_t i = 0; i < param.size(); ++i) {
        const double g = grad[i];
        state.grad_sq[i] = kAdadeltaRho * state.grad_sq[i] + (1.0 - kAdadeltaRho) * g * g;
        const double step = -std::sqrt(state.update_sq[i] + kAdadeltaEps) /
                            std::sqrt(state.grad_sq[i] + kAdadeltaEps) * g;
        state.update_sq[i] = kAdadeltaRho * state.update_sq[i] + (1.0 - kAdadeltaRho) * step * step;
        param[i] += step;
    }
}

}  // namespace

void CnnConfig::validate() const {
    if (filter_widths.empty()) throw std::invalid_argument("CnnConfig: no filter widths");
    for (std::size_t w : filter_widths) {
        if (w == 0) throw std::invalid_argument("CnnConfig: zero filter width");
    }
    if (filters_per_width == 0 || embedding_dim == 0 || num_classes < 2 || batch_size == 0 ||
        epochs == 0) {
        throw std::invalid_argument("CnnConfig: sizes must be positive");
    }
    if (!(dropout_rate >= 0.0) || !(dropout_rate < 1.0)) {
        throw std::invalid_argument("CnnConfig: dropout must be in [0,1)");
    }
}

std::size_t CnnModel::parameter_count() const {
    std::size_t count = 0;
    for (std::size_t wi = 0; wi < kernels.size(); ++wi) {
        count += kernels[wi].size() + conv_bias[wi].size();
    }
    return count + dense_w.size() + dense_b.size();
}

double CnnModel::get_parameter(std::size_t flat_index) const {
    for (std::size_t wi = 0; wi < kernels.size(); ++wi) {
        if (flat_index < kernels[wi].size()) return kernels[wi][flat_index];
        flat_index -= kernels[wi].size();
        if (flat_index < conv_bias[wi].size()) return conv_bias[wi][flat_index];
        flat_index -= conv_bias[wi].size();
    }
    if (flat_index < dense_w.size()) return dense_w[flat_index];
    flat_index -= dense_w.size();
    return dense_b.at(flat_index);
}

void CnnModel::set_parameter(std::size_t flat_index, double value) {
    for (std::size_t wi = 0; wi < kernels.size(); ++wi) {
        if (flat_index < kernels[wi].size()) {
            kernels[wi][flat_index] = value;
            return;
        }
        flat_index -= kernels[wi].size();
        if (flat_index < conv_bias[wi].size()) {
            conv_bias[wi][flat_index] = value;
            return;
        }
        flat_index -= conv_bias[wi].size();
    }
    if (flat_index < dense_w.size()) {
        dense_w[flat_index] = value;
        return;
    }
    flat_index -= dense_w.size();
    dense_b.at(flat_index) = value;
}

double Gradients::get(std::size_t flat_index) const {
    for (std::size_t wi = 0; wi < kernels.size(); ++wi) {
        if (flat_index < kernels[wi].size()) return kernels[wi][flat_index];
        flat_index -= kernels[wi].size();
        if (flat_index < conv_bias[wi].size()) return conv_bias[wi][flat_index];
        flat_index -= conv_bias[wi].size();
    }
    if (flat_index < dense_w.size()) return dense_w[flat_index];
    flat_index -= dense_w.size();
    return dense_b.at(flat_index);
}

CnnModel build_model(const CnnConfig& config, const embeddings::EmbeddingMatrix& embeddings,
                     std::uint64_t seed) {
    config.validate();
    if (embeddings.dim != config.embedding_dim) {
        throw std::invalid_argument("build_model: embedding dim " + std::to_string(embeddings.dim) +
                                    " does not match config dim " +
                                    std::to_string(config.embedding_dim));
    }
    CnnModel model;
    model.config = config;
    model.embeddings = embeddings;
    model.vocab_hash = embeddings.vocab.hash();

    Rng rng(seed);
    const std::size_t dim = config.embedding_dim;
    const std::size_t filters = config.filters_per_width;
    for (std::size_t width : config.filter_widths) {
        std::vector<double> kernel(width * dim * filters);
        for (auto& x : kernel) x = rng.uniform(-0.05, 0.05);
        model.kernels.push_back(std::move(kernel));
        std::vector<double> bias(filters);
        for (auto& x : bias) x = rng.uniform(-0.05, 0.05);
        model.conv_bias.push_back(std::move(bias));
    }
    model.dense_w.resize(config.total_filters() * config.num_classes);
    for (auto& x : model.dense_w) x = rng.uniform(-0.05, 0.05);
    model.dense_b.resize(config.num_classes);
    for (auto& x : model.dense_b) x = rng.uniform(-0.05, 0.05);

    // Untrained UNK rows get a wider init so unseen tokens are not silent.
    auto unk = model.embeddings.row(Vocabulary::kUnk);
    if (std::all_of(unk.begin(), unk.end(), [](double x) { return x == 0.0; })) {
        for (auto& x : unk) x = rng.uniform(-0.25, 0.25);
    }
    return model;
}

std::vector<double> forward(const CnnModel& model, const std::vector<std::string>& tokens,
                            bool train_mode, Rng* rng) {
    ForwardCache cache;
    forward_cached(model, tokens, train_mode, rng, cache);
    return cache.probs;
}

double batch_loss(const CnnModel& model, const std::vector<LabeledExample>& batch) {
    if (batch.empty()) throw std::invalid_argument("batch_loss: empty batch");
    double loss = 0.0;
    ForwardCache cache;
    for (const auto& ex : batch) {
        forward_cached(model, ex.tokens, false, nullptr, cache);
        loss += -std::log(std::max(cache.probs[static_cast<std::size_t>(ex.label)], 1e-300));
    }
    return loss / static_cast<double>(batch.size());
}

Gradients batch_gradients(const CnnModel& model, const std::vector<LabeledExample>& batch) {
    if (batch.empty()) throw std::invalid_argument("batch_gradients: empty batch");
    Gradients grads = zero_gradients(model);
    const double scale = 1.0 / static_cast<double>(batch.size());
    ForwardCache cache;
    for (const auto& ex : batch) {
        forward_cached(model, ex.tokens, false, nullptr, cache);
        backward_cached(model, cache, ex.label, scale, grads);
    }
    return grads;
}

TrainReport train(CnnModel& model, const std::vector<LabeledExample>& data,
                  const CnnConfig& config) {
    if (data.size() < 2) throw std::invalid_argument("train: need at least 2 examples");
    std::set<int> classes;
    for (const auto& ex : data) {
        if (ex.label < 0 || static_cast<std::size_t>(ex.label) >= config.num_classes) {
            throw std::invalid_argument("train: label out of range");
        }
        classes.insert(ex.label);
    }
    if (classes.size() < 2) throw std::invalid_argument("train: single-class data");

    const auto t0 = std::chrono::steady_clock::now();
    TrainReport report;
    report.seed = config.seed;

    std::vector<AdaState> kernel_state;
    std::vector<AdaState> bias_state;
    for (std::size_t wi = 0; wi < model.kernels.size(); ++wi) {
        kernel_state.emplace_back(model.kernels[wi].size());
        bias_state.emplace_back(model.conv_bias[wi].size());
    }
    AdaState dense_w_state(model.dense_w.size());
    AdaState dense_b_state(model.dense_b.size());

    std::vector<std::size_t> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    ForwardCache cache;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        Rng shuffle_rng(derive_seed(config.seed, 2 * epoch));
        Rng dropout_rng(derive_seed(config.seed, 2 * epoch + 1));
        shuffle_rng.shuffle(order);

        double epoch_loss = 0.0;
        for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
            const std::size_t end = std::min(order.size(), start + config.batch_size);
            const double scale = 1.0 / static_cast<double>(end - start);
            Gradients grads = zero_gradients(model);
            for (std::size_t i = start; i < end; ++i) {
                const auto& ex = data[order[i]];
                forward_cached(model, ex.tokens, true, &dropout_rng, cache);
                epoch_loss +=
                    -std::log(std::max(cache.probs[static_cast<std::size_t>(ex.label)], 1e-300));
                backward_cached(model, cache, ex.label, scale, grads);
            }
            for (std::size_t wi = 0; wi < model.kernels.size(); ++wi) {
                adadelta_apply(model.kernels[wi], grads.kernels[wi], kernel_state[wi]);
                adadelta_apply(model.conv_bias[wi], grads.conv_bias[wi], bias_state[wi]);
            }
            adadelta_apply(model.dense_w, grads.dense_w, dense_w_state);
            adadelta_apply(model.dense_b, grads.dense_b, dense_b_state);
        }
        report.epoch_mean_loss.push_back(epoch_loss / static_cast<double>(data.size()));
    }

    std::size_t hits = 0;
    for (const auto& ex : data) {
        forward_cached(model, ex.tokens, false, nullptr, cache);
        const auto pred = static_cast<int>(
            std::max_element(cache.probs.begin(), cache.probs.end()) - cache.probs.begin());
        if (pred == ex.label) ++hits;
    }
    report.final_train_accuracy = static_cast<double>(hits) / static_cast<double>(data.size());
    report.wall_clock_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

CrossValidationReport cross_validate(const std::vector<LabeledExample>& data, std::size_t k,
                                     const CnnConfig& config,
                                     const embeddings::EmbeddingMatrix& embeddings) {
    std::vector<int> labels;
    labels.reserve(data.size());
    std::map<int, std::size_t> class_count;
    for (const auto& ex : data) {
        labels.push_back(ex.label);
        ++class_count[ex.label];
    }
    if (class_count.size() < 2) throw std::invalid_argument("cross_validate: single-class data");
    for (const auto& [cls, count] : class_count) {
        if (count < 2) {
            throw std::invalid_argument("cross_validate: class " + std::to_string(cls) +
                                        " has fewer than 2 examples; stratification impossible");
        }
    }
    const auto folds = stats::stratified_kfold_split(labels, k, config.seed);

    CrossValidationReport report;
    std::vector<int> pooled_pred, pooled_truth;
    for (std::size_t fi = 0; fi < folds.size(); ++fi) {
        std::vector<LabeledExample> train_set;
        std::vector<const LabeledExample*> test_set;
        std::set<std::size_t> held(folds[fi].begin(), folds[fi].end());
        for (std::size_t i = 0; i < data.size(); ++i) {
            if (held.count(i)) test_set.push_back(&data[i]);
            else train_set.push_back(data[i]);
        }
        std::set<int> train_classes;
        for (const auto& ex : train_set) train_classes.insert(ex.label);
        if (train_classes.size() < 2) {
            throw std::runtime_error("cross_validate: a training fold lost a class");
        }

        CnnConfig fold_config = config;
        fold_config.seed = derive_seed(config.seed, 1000 + fi);
        CnnModel model = build_model(fold_config, embeddings, fold_config.seed);
        train(model, train_set, fold_config);

        std::vector<int> pred, truth;
        for (const auto* ex : test_set) {
            const auto probs = forward(model, ex->tokens);
            pred.push_back(static_cast<int>(std::max_element(probs.begin(), probs.end()) -
                                            probs.begin()));
            truth.push_back(ex->label);
            pooled_pred.push_back(pred.back());
            pooled_truth.push_back(truth.back());
        }
        report.fold_metrics.push_back(stats::evaluate_predictions(pred, truth));
    }
    report.pooled = stats::evaluate_predictions(pooled_pred, pooled_truth);
    return report;
}

CorpusPrediction predict_texts(const CnnModel& model, const std::vector<std::string>& texts) {
    if (texts.empty()) throw std::invalid_argument("predict_texts: empty corpus");
    CorpusPrediction out;
    out.n = texts.size();
    std::size_t sympathetic = 0;
    for (const auto& text : texts) {
        const auto probs = forward(model, embeddings::tokenize(text));
        const auto label =
            static_cast<int>(std::max_element(probs.begin(), probs.end()) - probs.begin());
        out.labels.push_back(label);
        if (label == 1) ++sympathetic;
    }
    out.sympathetic_ratio = static_cast<double>(sympathetic) / static_cast<double>(texts.size());
    return out;
}

void save_model(const CnnModel& model, const std::string& path) {
    json j;
    j["config"] = {{"filter_widths", model.config.filter_widths},
                   {"filters_per_width", model.config.filters_per_width},
                   {"dropout_rate", model.config.dropout_rate},
                   {"epochs", model.config.epochs},
                   {"batch_size", model.config.batch_size},
                   {"embedding_dim", model.config.embedding_dim},
                   {"num_classes", model.config.num_classes},
                   {"seed", model.config.seed}};
    j["vocab_hash"] = model.vocab_hash;
    j["vocab_tokens"] = model.embeddings.vocab.tokens();
    j["vocab_frequencies"] = model.embeddings.vocab.frequencies();
    j["embedding_vectors"] = model.embeddings.vectors;
    j["kernels"] = model.kernels;
    j["conv_bias"] = model.conv_bias;
    j["dense_w"] = model.dense_w;
    j["dense_b"] = model.dense_b;
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << j.dump() << '\n';
}

CnnModel load_model(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    const json j = json::parse(in);

    CnnModel model;
    const auto& jc = j.at("config");
    model.config.filter_widths = jc.at("filter_widths").get<std::vector<std::size_t>>();
    model.config.filters_per_width = jc.at("filters_per_width").get<std::size_t>();
    model.config.dropout_rate = jc.at("dropout_rate").get<double>();
    model.config.epochs = jc.at("epochs").get<std::size_t>();
    model.config.batch_size = jc.at("batch_size").get<std::size_t>();
    model.config.embedding_dim = jc.at("embedding_dim").get<std::size_t>();
    model.config.num_classes = jc.at("num_classes").get<std::size_t>();
    model.config.seed = jc.at("seed").get<std::uint64_t>();

    model.embeddings.vocab = Vocabulary::from_tokens(
        j.at("vocab_tokens").get<std::vector<std::string>>(),
        j.at("vocab_frequencies").get<std::vector<std::int64_t>>());
    model.embeddings.dim = model.config.embedding_dim;
    model.embeddings.vectors = j.at("embedding_vectors").get<std::vector<double>>();
    model.vocab_hash = j.at("vocab_hash").get<std::uint64_t>();
    if (model.embeddings.vocab.hash() != model.vocab_hash) {
        throw std::runtime_error("load_model: vocabulary hash mismatch in " + path);
    }
    model.kernels = j.at("kernels").get<std::vector<std::vector<double>>>();
    model.conv_bias = j.at("conv_bias").get<std::vector<std::vector<double>>>();
    model.dense_w = j.at("dense_w").get<std::vector<double>>();
    model.dense_b = j.at("dense_b").get<std::vector<double>>();
    return model;
}

}  // namespace newsbias::classifier
