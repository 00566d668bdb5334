#include "newsbias/corpus/dedup.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "newsbias/util/utf8.hpp"

namespace newsbias::corpus {

namespace {

std::size_t levenshtein_cp(const std::vector<char32_t>& a, const std::vector<char32_t>& b) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    if (m == 0) return n;
    if (n == 0) return m;
    std::vector<std::size_t> prev(n + 1), cur(n + 1);
    std::iota(prev.begin(), prev.end(), std::size_t{0});
    for (std::size_t i = 1; i <= m; ++i) {
        cur[0] = i;
        for (std::size_t j = 1; j <= n; ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[n];
}

// Banded DP: returns the exact distance if it is <= limit, otherwise any
// value > limit. O((2*limit+1) * len).
std::size_t bounded_levenshtein_cp(const std::vector<char32_t>& a, const std::vector<char32_t>& b,
                                   std::size_t limit) {
    const std::size_t m = a.size();
    const std::size_t n = b.size();
    const std::size_t big = limit + 1;
    if (m > n) return bounded_levenshtein_cp(b, a, limit);
    if (n - m > limit) return big;
    if (m == 0) return n;

    std::vector<std::size_t> prev(n + 1, big), cur(n + 1, big);
    for (std::size_t j = 0; j <= std::min(n, limit); ++j) prev[j] = j;
    for (std::size_t i = 1; i <= m; ++i) {
        const std::size_t lo = i > limit ? i - limit : 1;
        const std::size_t hi = std::min(n, i + limit);
        cur[lo - 1] = big;
        if (lo == 1) cur[0] = i <= limit ? i : big;
        std::size_t row_min = big;
        for (std::size_t j = lo; j <= hi; ++j) {
            const std::size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            const std::size_t del = prev[j] + 1;
            const std::size_t ins = cur[j - 1] + 1;
            cur[j] = std::min({sub, del, ins, big});
            row_min = std::min(row_min, cur[j]);
        }
        if (hi < n) cur[hi + 1] = big;
        if (row_min > limit) return big;
        std::swap(prev, cur);
    }
    return prev[n];
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void merge(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

CorpusSlice cluster_and_keep(const CorpusSlice& corpus, UnionFind& uf, double threshold,
                             const char* filter_name) {
    const std::size_t n = corpus.size();
    // Earliest (created_at, id) per cluster wins.
    std::vector<std::size_t> representative(n);
    std::iota(representative.begin(), representative.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t root = uf.find(i);
        std::size_t& rep = representative[root];
        const auto& cand = corpus.tweets[i];
        const auto& cur = corpus.tweets[rep];
        if (cand.created_at < cur.created_at ||
            (cand.created_at == cur.created_at && cand.id < cur.id)) {
            rep = i;
        }
    }
    CorpusSlice out;
    out.event = corpus.event;
    out.media_region = corpus.media_region;
    out.provenance = corpus.provenance;
    for (std::size_t i = 0; i < n; ++i) {
        if (representative[uf.find(i)] == i) out.tweets.push_back(corpus.tweets[i]);
    }
    out.normalize();
    out.record(filter_name, "threshold=" + std::to_string(threshold), corpus.size());
    return out;
}

}  // namespace

std::size_t levenshtein(std::string_view a, std::string_view b) {
    return levenshtein_cp(utf8::decode(a), utf8::decode(b));
}

CorpusSlice near_dedup(const CorpusSlice& corpus, double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0)) {
        throw std::invalid_argument("near_dedup: threshold must be in (0,1)");
    }
    const std::size_t n = corpus.size();
    std::vector<std::vector<char32_t>> texts(n);
    for (std::size_t i = 0; i < n; ++i) texts[i] = utf8::decode(corpus.tweets[i].text);

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t max_len = std::max(texts[i].size(), texts[j].size());
            if (max_len == 0) {
                uf.merge(i, j);
                continue;
            }
            // Any qualifying distance satisfies d <= threshold*max <= limit, so
            // pruning at limit never discards a near-duplicate; the final
            // ratio predicate is the same one the exhaustive scan uses.
            const auto limit = static_cast<std::size_t>(
                std::ceil(threshold * static_cast<double>(max_len)));
            const std::size_t len_diff = texts[i].size() > texts[j].size()
                                             ? texts[i].size() - texts[j].size()
                                             : texts[j].size() - texts[i].size();
            if (len_diff > limit) continue;  // distance >= len_diff > limit
            const std::size_t d = bounded_levenshtein_cp(texts[i], texts[j], limit);
            if (d <= limit &&
                static_cast<double>(d) / static_cast<double>(max_len) <= threshold) {
                uf.merge(i, j);
            }
        }
    }
    return cluster_and_keep(corpus, uf, threshold, "near_dedup");
}

CorpusSlice near_dedup_exhaustive(const CorpusSlice& corpus, double threshold) {
    if (!(threshold > 0.0) || !(threshold < 1.0)) {
        throw std::invalid_argument("near_dedup: threshold must be in (0,1)");
    }
    const std::size_t n = corpus.size();
    std::vector<std::vector<char32_t>> texts(n);
    for (std::size_t i = 0; i < n; ++i) texts[i] = utf8::decode(corpus.tweets[i].text);

    UnionFind uf(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const std::size_t max_len = std::max(texts[i].size(), texts[j].size());
            if (max_len == 0) {
                uf.merge(i, j);
                continue;
            }
            const double ratio = static_cast<double>(levenshtein_cp(texts[i], texts[j])) /
                                 static_cast<double>(max_len);
            if (ratio <= threshold) uf.merge(i, j);
        }
    }
    return cluster_and_keep(corpus, uf, threshold, "near_dedup_exhaustive");
}

}  // namespace newsbias::corpus
