#include "newsbias/annotation/annotation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "newsbias/util/csv.hpp"

namespace newsbias::annotation {

namespace {

std::string lower_ascii(std::string s) {
    for (char& c : s) {
        if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
    }
    return s;
}

}  // namespace

const char* to_string(Sympathy s) {
    return s == Sympathy::Sympathetic ? "sympathetic" : "unsympathetic";
}

const char* to_string(Sentiment s) {
    switch (s) {
        case Sentiment::Negative: return "negative";
        case Sentiment::Neutral: return "neutral";
        case Sentiment::Positive: return "positive";
    }
    return "?";
}

std::optional<Sympathy> sympathy_from_string(const std::string& s) {
    const std::string v = lower_ascii(s);
    if (v == "sympathetic" || v == "symp" || v == "1") return Sympathy::Sympathetic;
    if (v == "unsympathetic" || v == "unsymp" || v == "0") return Sympathy::Unsympathetic;
    return std::nullopt;
}

std::optional<Sentiment> sentiment_from_string(const std::string& s) {
    const std::string v = lower_ascii(s);
    if (v == "negative" || v == "neg" || v == "-1") return Sentiment::Negative;
    if (v == "neutral" || v == "neu" || v == "0") return Sentiment::Neutral;
    if (v == "positive" || v == "pos" || v == "1") return Sentiment::Positive;
    return std::nullopt;
}

TrustFilterResult trust_filter(const std::vector<WorkerLabel>& labels,
                               const std::vector<GoldItem>& gold, double cutoff) {
    std::map<std::string, const GoldItem*> gold_by_tweet;
    for (const auto& g : gold) gold_by_tweet[g.tweet_id] = &g;

    std::map<std::string, std::pair<std::size_t, std::size_t>> scores;  // worker -> (hits, total)
    std::set<std::string> all_workers;
    for (const auto& label : labels) {
        all_workers.insert(label.worker_id);
        const auto it = gold_by_tweet.find(label.tweet_id);
        if (it == gold_by_tweet.end()) continue;
        auto& [hits, total] = scores[label.worker_id];
        ++total;
        // Exact match on both dimensions jointly; an NA answer never matches gold.
        if (!label.not_applicable && label.sympathy == it->second->sympathy &&
            label.sentiment == it->second->sentiment) {
            ++hits;
        }
    }

    TrustFilterResult out;
    for (const auto& worker : all_workers) {
        const auto it = scores.find(worker);
        if (it == scores.end() || it->second.second == 0) {
            out.warnings.push_back("worker '" + worker + "' answered no gold items; excluded");
            continue;
        }
        const double frac = static_cast<double>(it->second.first) /
                            static_cast<double>(it->second.second);
        if (frac >= cutoff) out.trusted.insert(worker);
    }
    return out;
}

AggregatedLabel majority_vote(const std::vector<WorkerLabel>& labels) {
    if (labels.size() < 3) {
        throw std::invalid_argument("majority_vote: need at least 3 labels per tweet");
    }
    const std::string& tweet_id = labels.front().tweet_id;
    for (const auto& l : labels) {
        if (l.tweet_id != tweet_id) throw std::invalid_argument("majority_vote: mixed tweet ids");
    }

    AggregatedLabel out;
    out.tweet_id = tweet_id;
    out.n_workers = labels.size();

    std::size_t na_count = 0;
    std::array<std::size_t, 2> symp_counts{};
    std::array<std::size_t, 3> sent_counts{};
    for (const auto& l : labels) {
        if (l.not_applicable) {
            ++na_count;
            continue;
        }
        ++symp_counts[static_cast<std::size_t>(l.sympathy)];
        ++sent_counts[static_cast<std::size_t>(l.sentiment)];
    }
    if (2 * na_count > labels.size()) {
        out.unresolved = true;
        out.agreement_fraction = static_cast<double>(na_count) / static_cast<double>(labels.size());
        return out;
    }

    // Sympathy: binary, strict plurality; an exact tie stays unresolved.
    if (symp_counts[0] == symp_counts[1]) {
        out.unresolved = true;
    } else {
        out.sympathy = symp_counts[1] > symp_counts[0] ? Sympathy::Sympathetic
                                                       : Sympathy::Unsympathetic;
    }

    // Sentiment: strict plurality over three categories.
    const std::size_t best = std::max({sent_counts[0], sent_counts[1], sent_counts[2]});
    std::size_t winners = 0;
    for (std::size_t c = 0; c < 3; ++c) {
        if (sent_counts[c] == best) ++winners;
    }
    if (winners != 1) {
        out.unresolved = true;
    } else {
        for (std::size_t c = 0; c < 3; ++c) {
            if (sent_counts[c] == best) out.sentiment = static_cast<Sentiment>(c);
        }
    }

    const std::size_t symp_best = std::max(symp_counts[0], symp_counts[1]);
    out.agreement_fraction = static_cast<double>(std::min(symp_best, best)) /
                             static_cast<double>(labels.size());
    return out;
}

AggregationResult aggregate_labels(const std::vector<WorkerLabel>& labels,
                                   const std::set<std::string>& trusted_workers) {
    std::map<std::string, std::vector<WorkerLabel>> by_tweet;
    for (const auto& l : labels) {
        if (trusted_workers.count(l.worker_id)) by_tweet[l.tweet_id].push_back(l);
    }
    AggregationResult out;
    for (const auto& [tweet_id, group] : by_tweet) {
        (void)tweet_id;
        if (group.size() < 3) {
            ++out.skipped_under_three;
            continue;
        }
        out.labels.push_back(majority_vote(group));
    }
    return out;
}

double fleiss_kappa(const std::vector<std::vector<std::size_t>>& counts) {
    if (counts.empty()) throw std::invalid_argument("fleiss_kappa: empty matrix");
    const std::size_t items = counts.size();
    const std::size_t categories = counts[0].size();
    if (categories < 2) throw std::invalid_argument("fleiss_kappa: need >= 2 categories");

    std::size_t raters = 0;
    for (std::size_t c = 0; c < categories; ++c) raters += counts[0][c];
    if (raters < 2) throw std::invalid_argument("fleiss_kappa: need >= 2 ratings per item");

    double p_bar = 0.0;
    std::vector<double> category_share(categories, 0.0);
    for (const auto& row : counts) {
        if (row.size() != categories) throw std::invalid_argument("fleiss_kappa: ragged matrix");
        std::size_t row_total = 0;
        double agree = 0.0;
        for (std::size_t c = 0; c < categories; ++c) {
            row_total += row[c];
            agree += static_cast<double>(row[c]) * (static_cast<double>(row[c]) - 1.0);
            category_share[c] += static_cast<double>(row[c]);
        }
        if (row_total != raters) {
            throw std::invalid_argument("fleiss_kappa: ragged matrix (unequal rating counts)");
        }
        p_bar += agree / (static_cast<double>(raters) * (static_cast<double>(raters) - 1.0));
    }
    p_bar /= static_cast<double>(items);

    double p_e = 0.0;
    const double total = static_cast<double>(items) * static_cast<double>(raters);
    for (double share : category_share) {
        const double p = share / total;
        p_e += p * p;
    }
    if (p_e >= 1.0) return std::numeric_limits<double>::quiet_NaN();
    return (p_bar - p_e) / (1.0 - p_e);
}

CohenKappaResult cohen_kappa(std::span<const int> r1, std::span<const int> r2,
                             KappaWeighting weighting) {
    if (r1.size() != r2.size()) throw std::invalid_argument("cohen_kappa: length mismatch");
    if (r1.size() < 2) throw std::invalid_argument("cohen_kappa: need >= 2 items");

    std::map<int, std::size_t> category_index;
    for (int v : r1) category_index.emplace(v, 0);
    for (int v : r2) category_index.emplace(v, 0);
    std::size_t k = 0;
    for (auto& [cat, idx] : category_index) {
        (void)cat;
        idx = k++;
    }

    CohenKappaResult out;
    out.n = r1.size();
    if (k < 2) {
        out.defined = false;
        out.kappa = out.se = out.ci_low = out.ci_high = std::numeric_limits<double>::quiet_NaN();
        return out;
    }

    std::vector<std::vector<double>> freq(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < r1.size(); ++i) {
        ++freq[category_index[r1[i]]][category_index[r2[i]]];
    }
    const double n = static_cast<double>(r1.size());
    std::vector<double> row(k, 0.0), col(k, 0.0);
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            row[i] += freq[i][j];
            col[j] += freq[i][j];
        }
    }

    // Category codes are ordinal for the linear weighting (the scale order is
    // the numeric order of the codes).
    const auto weight = [&](std::size_t i, std::size_t j) {
        if (weighting == KappaWeighting::Unweighted) return i == j ? 1.0 : 0.0;
        const double dist = std::fabs(static_cast<double>(i) - static_cast<double>(j));
        return 1.0 - dist / static_cast<double>(k - 1);
    };

    double po = 0.0, pe = 0.0, po_sq = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            const double w = weight(i, j);
            po += w * freq[i][j] / n;
            po_sq += w * w * freq[i][j] / n;
            pe += w * (row[i] / n) * (col[j] / n);
        }
    }
    if (pe >= 1.0) {
        out.defined = false;
        out.kappa = out.se = out.ci_low = out.ci_high = std::numeric_limits<double>::quiet_NaN();
        return out;
    }
    out.kappa = (po - pe) / (1.0 - pe);
    // Large-sample SE of the (weighted) observed agreement, expected agreement fixed.
    const double var_po = (po_sq - po * po) / n;
    out.se = std::sqrt(std::max(0.0, var_po)) / (1.0 - pe);
    const double z95 = 1.959963984540054;
    out.ci_low = out.kappa - z95 * out.se;
    out.ci_high = out.kappa + z95 * out.se;
    return out;
}

std::vector<WorkerLabel> read_worker_labels_csv(const std::string& path) {
    const auto rows = csv::parse_file(path);
    std::vector<WorkerLabel> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty() || (r == 0 && !row.empty() && lower_ascii(row[0]) == "tweet_id")) continue;
        if (row.size() < 5) {
            throw std::runtime_error("worker labels: row " + std::to_string(r + 1) +
                                     " has fewer than 5 fields in " + path);
        }
        WorkerLabel label;
        label.tweet_id = row[0];
        label.worker_id = row[1];
        label.not_applicable = lower_ascii(row[4]) == "1" || lower_ascii(row[4]) == "true" ||
                               lower_ascii(row[4]) == "na";
        const auto symp = sympathy_from_string(row[2]);
        const auto sent = sentiment_from_string(row[3]);
        if (!label.not_applicable && (!symp || !sent)) {
            throw std::runtime_error("worker labels: bad label values at row " +
                                     std::to_string(r + 1) + " in " + path);
        }
        if (symp) label.sympathy = *symp;
        if (sent) label.sentiment = *sent;
        out.push_back(std::move(label));
    }
    return out;
}

std::vector<GoldItem> read_gold_csv(const std::string& path) {
    const auto rows = csv::parse_file(path);
    std::vector<GoldItem> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty() || (r == 0 && lower_ascii(row[0]) == "tweet_id")) continue;
        if (row.size() < 3) {
            throw std::runtime_error("gold items: short row " + std::to_string(r + 1) + " in " + path);
        }
        GoldItem g;
        g.tweet_id = row[0];
        const auto symp = sympathy_from_string(row[1]);
        const auto sent = sentiment_from_string(row[2]);
        if (!symp || !sent) {
            throw std::runtime_error("gold items: bad labels at row " + std::to_string(r + 1) +
                                     " in " + path);
        }
        g.sympathy = *symp;
        g.sentiment = *sent;
        out.push_back(std::move(g));
    }
    return out;
}

void write_aggregated_csv(const std::string& path, const std::vector<AggregatedLabel>& labels) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot write " + path);
    csv::write_row(os, {"tweet_id", "sympathy", "sentiment", "n_workers", "agreement", "unresolved"});
    for (const auto& l : labels) {
        char agreement[32];
        std::snprintf(agreement, sizeof agreement, "%.6f", l.agreement_fraction);
        csv::write_row(os, {l.tweet_id, to_string(l.sympathy), to_string(l.sentiment),
                            std::to_string(l.n_workers), agreement, l.unresolved ? "1" : "0"});
    }
}

std::vector<AggregatedLabel> read_aggregated_csv(const std::string& path) {
    const auto rows = csv::parse_file(path);
    std::vector<AggregatedLabel> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.empty() || (r == 0 && lower_ascii(row[0]) == "tweet_id")) continue;
        if (row.size() < 6) {
            throw std::runtime_error("aggregated labels: short row in " + path);
        }
        AggregatedLabel l;
        l.tweet_id = row[0];
        const auto symp = sympathy_from_string(row[1]);
        const auto sent = sentiment_from_string(row[2]);
        if (!symp || !sent) throw std::runtime_error("aggregated labels: bad labels in " + path);
        l.sympathy = *symp;
        l.sentiment = *sent;
        l.n_workers = static_cast<std::size_t>(std::stoul(row[3]));
        l.agreement_fraction = std::stod(row[4]);
        l.unresolved = row[5] == "1";
        out.push_back(std::move(l));
    }
    return out;
}

}  // namespace newsbias::annotation
