#include "newsbias/embeddings/word2vec.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "newsbias/embeddings/tokenize.hpp"
#include "newsbias/util/hash.hpp"
#include "newsbias/util/rng.hpp"

namespace newsbias::embeddings {

namespace {

double sigmoid(double z) {
    if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
    const double e = std::exp(z);
    return e / (1.0 + e);
}

}  // namespace

Vocabulary Vocabulary::build(const std::vector<std::vector<std::string>>& corpus,
                             std::size_t min_count) {
    std::map<std::string, std::int64_t> counts;
    std::int64_t unk_count = 0;
    for (const auto& sentence : corpus) {
        for (const auto& token : sentence) ++counts[token];
    }
    std::vector<std::pair<std::string, std::int64_t>> kept;
    for (const auto& [token, count] : counts) {
        if (token == kPadToken || token == kUnkToken) continue;
        if (count >= static_cast<std::int64_t>(min_count)) {
            kept.emplace_back(token, count);
        } else {
            unk_count += count;  // absorbed by UNK
        }
    }
    std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });

    Vocabulary v;
    v.tokens_ = {kPadToken, kUnkToken};
    v.frequencies_ = {0, unk_count};
    for (auto& [token, count] : kept) {
        v.index_[token] = v.tokens_.size();
        v.tokens_.push_back(std::move(token));
        v.frequencies_.push_back(count);
    }
    return v;
}

Vocabulary Vocabulary::from_tokens(const std::vector<std::string>& tokens,
                                   const std::vector<std::int64_t>& frequencies) {
    if (tokens.size() != frequencies.size()) {
        throw std::invalid_argument("Vocabulary::from_tokens: length mismatch");
    }
    if (tokens.size() < 2 || tokens[kPad] != kPadToken || tokens[kUnk] != kUnkToken) {
        throw std::invalid_argument("Vocabulary::from_tokens: PAD/UNK rows missing");
    }
    Vocabulary v;
    v.tokens_ = tokens;
    v.frequencies_ = frequencies;
    for (std::size_t i = 2; i < tokens.size(); ++i) v.index_[tokens[i]] = i;
    return v;
}

std::size_t Vocabulary::index_of(const std::string& token) const {
    const auto it = index_.find(token);
    return it == index_.end() ? kUnk : it->second;
}

bool Vocabulary::contains(const std::string& token) const { return index_.count(token) > 0; }

std::uint64_t Vocabulary::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& t : tokens_) h = fnv1a64(t + "\n", h);
    return h;
}

double sgns_pair_step(std::vector<double>& syn0, std::vector<double>& syn1, std::size_t dim,
                      std::size_t center, std::size_t context,
                      std::span<const std::size_t> negatives, double lr,
                      std::vector<double>* grad_syn0, std::vector<double>* grad_syn1) {
    double* v = syn0.data() + center * dim;
    double loss = 0.0;
    // Accumulated update for the input vector, applied after the output rows.
    static thread_local std::vector<double> v_acc;
    v_acc.assign(dim, 0.0);

    const auto process = [&](std::size_t target, double label) {
        double* u = syn1.data() + target * dim;
        double dot = 0.0;
        for (std::size_t d = 0; d < dim; ++d) dot += u[d] * v[d];
        const double s = sigmoid(dot);
        loss += label > 0.5 ? -std::log(std::max(s, 1e-300))
                            : -std::log(std::max(1.0 - s, 1e-300));
        const double g = label - s;  // d(-loss)/d(dot)
        if (grad_syn0 || grad_syn1) {
            // Gradients of the loss (not the ascent direction).
            for (std::size_t d = 0; d < dim; ++d) {
                if (grad_syn0) (*grad_syn0)[center * dim + d] += -g * u[d];
                if (grad_syn1) (*grad_syn1)[target * dim + d] += -g * v[d];
            }
        } else {
            for (std::size_t d = 0; d < dim; ++d) {
                v_acc[d] += g * u[d];
                u[d] += lr * g * v[d];
            }
        }
    };

    process(context, 1.0);
    for (std::size_t n : negatives) process(n, 0.0);
    if (!grad_syn0 && !grad_syn1) {
        for (std::size_t d = 0; d < dim; ++d) v[d] += lr * v_acc[d];
    }
    return loss;
}

EmbeddingMatrix train_word2vec(const std::vector<std::vector<std::string>>& corpus,
                               const Word2VecConfig& config, Word2VecReport* report) {
    std::size_t total_tokens = 0;
    for (const auto& s : corpus) total_tokens += s.size();
    if (total_tokens < 100) {
        throw std::invalid_argument("train_word2vec: corpus must contain at least 100 tokens");
    }
    Vocabulary vocab = Vocabulary::build(corpus, config.min_count);
    if (vocab.size() <= 2) {
        throw std::invalid_argument("train_word2vec: vocabulary is empty after min_count");
    }

    const std::size_t v_size = vocab.size();
    const std::size_t dim = config.dim;

    // Index the corpus once; rare tokens train through UNK.
    std::vector<std::vector<std::size_t>> indexed;
    indexed.reserve(corpus.size());
    for (const auto& sentence : corpus) {
        std::vector<std::size_t> ids;
        ids.reserve(sentence.size());
        for (const auto& token : sentence) ids.push_back(vocab.index_of(token));
        indexed.push_back(std::move(ids));
    }

    Rng rng(derive_seed(config.seed, 0));

    // Input vectors ~ U(-0.5/dim, 0.5/dim); output vectors zero; PAD all-zero.
    std::vector<double> syn0(v_size * dim, 0.0);
    std::vector<double> syn1(v_size * dim, 0.0);
    for (std::size_t i = Vocabulary::kUnk; i < v_size; ++i) {
        for (std::size_t d = 0; d < dim; ++d) {
            syn0[i * dim + d] = (rng.uniform() - 0.5) / static_cast<double>(dim);
        }
    }

    // Negative sampling table over unigram^0.75 (PAD excluded).
    constexpr std::size_t kTableSize = 1 << 20;
    std::vector<std::uint32_t> neg_table(kTableSize);
    {
        double norm = 0.0;
        for (std::size_t i = Vocabulary::kUnk; i < v_size; ++i) {
            norm += std::pow(static_cast<double>(std::max<std::int64_t>(vocab.frequency_at(i), 0)), 0.75);
        }
        std::size_t i = Vocabulary::kUnk;
        double cumulative =
            std::pow(static_cast<double>(std::max<std::int64_t>(vocab.frequency_at(i), 0)), 0.75) / norm;
        for (std::size_t t = 0; t < kTableSize; ++t) {
            neg_table[t] = static_cast<std::uint32_t>(i);
            if (static_cast<double>(t) / kTableSize > cumulative && i + 1 < v_size) {
                ++i;
                cumulative +=
                    std::pow(static_cast<double>(std::max<std::int64_t>(vocab.frequency_at(i), 0)), 0.75) /
                    norm;
            }
        }
    }

    const double total_steps =
        static_cast<double>(config.epochs) * static_cast<double>(total_tokens) + 1.0;
    double processed = 0.0;
    std::vector<std::size_t> negatives(config.negatives);
    Word2VecReport rep;
    rep.total_tokens = total_tokens;
    rep.vocab_size = v_size;

    for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
        double epoch_loss = 0.0;
        std::size_t epoch_pairs = 0;
        for (const auto& sentence : indexed) {
            // Optional subsampling of very frequent tokens (off by default).
            std::vector<std::size_t> sent;
            if (config.subsample_frequent) {
                sent.reserve(sentence.size());
                for (std::size_t id : sentence) {
                    const double f = static_cast<double>(vocab.frequency_at(id)) /
                                     static_cast<double>(total_tokens);
                    const double keep =
                        f > 0 ? std::sqrt(config.subsample_threshold / f) +
                                    config.subsample_threshold / f
                              : 1.0;
                    if (keep >= 1.0 || rng.uniform() < keep) sent.push_back(id);
                }
            } else {
                sent = sentence;
            }
            for (std::size_t pos = 0; pos < sent.size(); ++pos) {
                processed += 1.0;
                const double lr = std::max(config.learning_rate * (1.0 - processed / total_steps),
                                           config.learning_rate * 1e-4);
                const std::size_t span = 1 + static_cast<std::size_t>(rng.below(config.window));
                const std::size_t lo = pos >= span ? pos - span : 0;
                const std::size_t hi = std::min(sent.size() - 1, pos + span);
                for (std::size_t ctx = lo; ctx <= hi; ++ctx) {
                    if (ctx == pos) continue;
                    const std::size_t center = sent[pos];
                    const std::size_t context = sent[ctx];
                    for (std::size_t n = 0; n < config.negatives; ++n) {
                        std::size_t neg;
                        do {
                            neg = neg_table[rng.below(kTableSize)];
                        } while (neg == context);
                        negatives[n] = neg;
                    }
                    epoch_loss += sgns_pair_step(syn0, syn1, dim, center, context, negatives, lr);
                    ++epoch_pairs;
                }
            }
        }
        rep.epoch_mean_loss.push_back(epoch_pairs ? epoch_loss / static_cast<double>(epoch_pairs)
                                                  : 0.0);
    }

    EmbeddingMatrix out;
    out.vocab = std::move(vocab);
    out.dim = dim;
    out.vectors = std::move(syn0);
    // PAD row stays exactly zero.
    for (std::size_t d = 0; d < dim; ++d) out.vectors[Vocabulary::kPad * dim + d] = 0.0;
    if (report) *report = std::move(rep);
    return out;
}

std::vector<Neighbor> nearest_neighbors(const EmbeddingMatrix& matrix, const std::string& token,
                                        std::size_t k) {
    if (!matrix.vocab.contains(token) && token != kUnkToken) {
        throw std::invalid_argument("nearest_neighbors: token not in vocabulary: " + token);
    }
    const std::size_t query = matrix.vocab.index_of(token);
    const auto q = matrix.row(query);
    double qn = 0.0;
    for (double x : q) qn += x * x;
    qn = std::sqrt(qn);

    std::vector<std::pair<double, std::size_t>> scored;
    for (std::size_t i = 0; i < matrix.vocab.size(); ++i) {
        if (i == query) continue;
        const auto r = matrix.row(i);
        double rn = 0.0, dot = 0.0;
        for (std::size_t d = 0; d < matrix.dim; ++d) {
            rn += r[d] * r[d];
            dot += r[d] * q[d];
        }
        const double denom = qn * std::sqrt(rn);
        const double cosine = denom > 0.0 ? dot / denom : -2.0;  // zero rows rank last
        scored.emplace_back(cosine, i);
    }
    std::stable_sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first > b.first;
        return a.second < b.second;
    });
    std::vector<Neighbor> out;
    for (std::size_t i = 0; i < std::min(k, scored.size()); ++i) {
        out.push_back({matrix.vocab.token_at(scored[i].second), scored[i].first});
    }
    return out;
}

void save_embeddings(const EmbeddingMatrix& matrix, const std::string& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << matrix.vocab.size() << ' ' << matrix.dim << '\n';
    char buf[32];
    for (std::size_t i = 0; i < matrix.vocab.size(); ++i) {
        os << matrix.vocab.token_at(i);
        for (double x : matrix.row(i)) {
            std::snprintf(buf, sizeof buf, " %.17g", x);
            os << buf;
        }
        os << '\n';
    }
}

EmbeddingMatrix load_embeddings(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::size_t v_size = 0, dim = 0;
    in >> v_size >> dim;
    if (!in || v_size < 2) throw std::runtime_error("bad embedding file header: " + path);
    std::vector<std::string> tokens(v_size);
    std::vector<std::int64_t> freqs(v_size, 0);  // frequencies are a training-time detail
    std::vector<double> vectors(v_size * dim);
    for (std::size_t i = 0; i < v_size; ++i) {
        in >> tokens[i];
        for (std::size_t d = 0; d < dim; ++d) in >> vectors[i * dim + d];
    }
    if (!in) throw std::runtime_error("truncated embedding file: " + path);
    EmbeddingMatrix out;
    out.vocab = Vocabulary::from_tokens(tokens, freqs);
    out.dim = dim;
    out.vectors = std::move(vectors);
    return out;
}

}  // namespace newsbias::embeddings
