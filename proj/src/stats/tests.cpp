#include "newsbias/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "newsbias/stats/special.hpp"
#include "newsbias/util/rng.hpp"

namespace newsbias::stats {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

double pearson(std::span<const double> x, std::span<const double> y, bool& defined) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - mx;
        const double dy = y[i] - my;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx <= 0.0 || syy <= 0.0) {
        defined = false;
        return kNan;
    }
    defined = true;
    return sxy / std::sqrt(sxx * syy);
}

// Exact permutation distribution of the doubled rank-sum of the first sample,
// by subset-sum counting over the pooled doubled ranks. Independent of the
// rank-sum route used for the asymptotic statistic.
double mann_whitney_exact_p(const std::vector<double>& pooled_ranks, std::size_t n_x,
                            double u_obs) {
    const std::size_t n = pooled_ranks.size();
    std::vector<std::size_t> ranks2(n);  // doubled ranks are integers
    std::size_t total2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ranks2[i] = static_cast<std::size_t>(std::llround(2.0 * pooled_ranks[i]));
        total2 += ranks2[i];
    }
    // ways[k][s]: subsets of size k with doubled rank sum s.
    std::vector<std::vector<double>> ways(n_x + 1, std::vector<double>(total2 + 1, 0.0));
    ways[0][0] = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = ranks2[i];
        for (std::size_t k = std::min(i + 1, n_x); k >= 1; --k) {
            for (std::size_t s = total2; s >= r; --s) {
                ways[k][s] += ways[k - 1][s - r];
            }
        }
    }
    const std::size_t n_y = n - n_x;
    const double mu2 = static_cast<double>(n_x) * static_cast<double>(n_y);  // doubled n_x*n_y/2
    const double dev_obs = std::fabs(2.0 * u_obs - mu2);
    double hits = 0.0, total = 0.0;
    const double min_sum2 = static_cast<double>(n_x) * (static_cast<double>(n_x) + 1.0);
    for (std::size_t s = 0; s <= total2; ++s) {
        const double count = ways[n_x][s];
        if (count == 0.0) continue;
        total += count;
        const double u2 = static_cast<double>(s) - min_sum2;  // doubled U
        if (std::fabs(u2 - mu2) >= dev_obs - 1e-9) hits += count;
    }
    return hits / total;
}

}  // namespace

std::int64_t ContingencyTable::total() const {
    std::int64_t t = 0;
    for (const auto& row : counts) {
        for (std::int64_t v : row) t += v;
    }
    return t;
}

std::int64_t ContingencyTable::row_sum(std::size_t r) const {
    return std::accumulate(counts[r].begin(), counts[r].end(), std::int64_t{0});
}

std::int64_t ContingencyTable::col_sum(std::size_t c) const {
    std::int64_t t = 0;
    for (const auto& row : counts) t += row[c];
    return t;
}

std::vector<double> average_ranks(std::span<const double> values) {
    const std::size_t n = values.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
    std::vector<double> ranks(n);
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
        const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = avg;
        i = j + 1;
    }
    return ranks;
}

ChiSquareResult chi_square_yates(const ContingencyTable& table) {
    if (table.rows() != 2 || table.cols() != 2) {
        throw std::invalid_argument("chi_square_yates: table must be 2x2");
    }
    for (const auto& row : table.counts) {
        for (std::int64_t v : row) {
            if (v < 0) throw std::invalid_argument("chi_square_yates: negative count");
        }
    }
    const double n = static_cast<double>(table.total());
    const double r0 = static_cast<double>(table.row_sum(0));
    const double r1 = static_cast<double>(table.row_sum(1));
    const double c0 = static_cast<double>(table.col_sum(0));
    const double c1 = static_cast<double>(table.col_sum(1));
    if (r0 == 0 || r1 == 0 || c0 == 0 || c1 == 0) {
        throw std::invalid_argument("chi_square_yates: zero margin");
    }
    double chi2 = 0.0;
    const double rows[2] = {r0, r1};
    const double cols[2] = {c0, c1};
    for (std::size_t i = 0; i < 2; ++i) {
        for (std::size_t j = 0; j < 2; ++j) {
            const double expected = rows[i] * cols[j] / n;
            const double dev = std::max(0.0, std::fabs(static_cast<double>(table.counts[i][j]) - expected) - 0.5);
            chi2 += dev * dev / expected;
        }
    }
    ChiSquareResult res;
    res.statistic = chi2;
    res.df = 1.0;
    res.n = static_cast<std::size_t>(table.total());
    res.p_value = chi2_sf(chi2, 1.0);
    res.phi = std::sqrt(chi2 / n);
    res.effect_size = res.phi;
    const double a = static_cast<double>(table.counts[0][0]);
    const double b = static_cast<double>(table.counts[0][1]);
    const double c = static_cast<double>(table.counts[1][0]);
    const double d = static_cast<double>(table.counts[1][1]);
    if (a > 0 && b > 0 && c > 0 && d > 0) {
        res.odds_ratio = (a * d) / (b * c);
    }
    return res;
}

TestResult spearman(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("spearman: length mismatch");
    if (x.size() < 3) throw std::invalid_argument("spearman: need at least 3 observations");
    const auto rx = average_ranks(x);
    const auto ry = average_ranks(y);
    TestResult res;
    res.n = x.size();
    bool defined = true;
    const double rho = pearson(rx, ry, defined);
    if (!defined) {
        res.defined = false;
        res.statistic = res.effect_size = res.p_value = kNan;
        return res;
    }
    res.statistic = rho;
    res.effect_size = rho;
    res.df = static_cast<double>(x.size() - 2);
    if (std::fabs(rho) >= 1.0) {
        res.p_value = 0.0;
    } else {
        const double t = rho * std::sqrt(res.df / (1.0 - rho * rho));
        res.p_value = t_sf_twosided(t, res.df);
    }
    return res;
}

double cramers_v(const ContingencyTable& table) {
    const std::size_t r = table.rows();
    const std::size_t c = table.cols();
    if (r < 2 || c < 2) throw std::invalid_argument("cramers_v: need at least a 2x2 table");
    const double n = static_cast<double>(table.total());
    if (n <= 0) throw std::invalid_argument("cramers_v: empty table");
    double chi2 = 0.0;
    for (std::size_t i = 0; i < r; ++i) {
        const double rs = static_cast<double>(table.row_sum(i));
        if (rs == 0) continue;
        for (std::size_t j = 0; j < c; ++j) {
            const double cs = static_cast<double>(table.col_sum(j));
            if (cs == 0) continue;
            const double expected = rs * cs / n;
            const double dev = static_cast<double>(table.counts[i][j]) - expected;
            chi2 += dev * dev / expected;
        }
    }
    const double k = static_cast<double>(std::min(r, c)) - 1.0;
    return std::sqrt(chi2 / (n * k));
}

MannWhitneyResult mann_whitney(std::span<const double> x, std::span<const double> y,
                               bool continuity_correction) {
    if (x.empty() || y.empty()) throw std::invalid_argument("mann_whitney: empty sample");
    const std::size_t n_x = x.size();
    const std::size_t n_y = y.size();
    const std::size_t n = n_x + n_y;
    std::vector<double> pooled(x.begin(), x.end());
    pooled.insert(pooled.end(), y.begin(), y.end());
    const auto ranks = average_ranks(pooled);

    double rank_sum_x = 0.0;
    for (std::size_t i = 0; i < n_x; ++i) rank_sum_x += ranks[i];
    const double u = rank_sum_x - static_cast<double>(n_x) * (static_cast<double>(n_x) + 1.0) / 2.0;

    // Tie correction: sum over tie groups of (t^3 - t).
    std::vector<double> sorted(pooled);
    std::sort(sorted.begin(), sorted.end());
    double tie_term = 0.0;
    std::size_t i = 0;
    while (i < n) {
        std::size_t j = i;
        while (j + 1 < n && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
    }
    const double nd = static_cast<double>(n);
    const double mu = static_cast<double>(n_x) * static_cast<double>(n_y) / 2.0;
    const double var =
        (static_cast<double>(n_x) * static_cast<double>(n_y) / 12.0) *
        ((nd + 1.0) - tie_term / (nd * (nd - 1.0)));

    MannWhitneyResult res;
    res.u = u;
    res.n_x = n_x;
    res.n_y = n_y;
    if (var <= 0.0) {
        // All pooled values identical: no evidence either way.
        res.z = 0.0;
        res.p_value = 1.0;
    } else {
        double dev = u - mu;
        if (continuity_correction) {
            if (dev > 0.5) dev -= 0.5;
            else if (dev < -0.5) dev += 0.5;
            else dev = 0.0;
        }
        res.z = dev / std::sqrt(var);
        res.p_value = std::min(1.0, 2.0 * normal_sf(std::fabs(res.z)));
    }
    res.r = res.z / std::sqrt(nd);
    if (n <= 10) {
        res.p_exact = mann_whitney_exact_p(ranks, n_x, u);
    }
    return res;
}

FisherCombination fisher_combine(std::span<const double> pvalues) {
    if (pvalues.empty()) throw std::invalid_argument("fisher_combine: no p-values");
    double stat = 0.0;
    for (double p : pvalues) {
        if (!(p > 0.0)) throw std::invalid_argument("fisher_combine: p-value must be > 0");
        if (p > 1.0) throw std::invalid_argument("fisher_combine: p-value must be <= 1");
        stat += std::log(p);
    }
    stat *= -2.0;
    FisherCombination out;
    out.k = pvalues.size();
    out.df = 2 * pvalues.size();
    out.statistic = stat;
    out.p_value = chi2_sf(stat, static_cast<double>(out.df));
    return out;
}

DownsampleFisherResult downsample_fisher(std::span<const double> a, std::span<const double> b,
                                         std::size_t runs, std::uint64_t seed) {
    if (a.empty() || b.empty()) throw std::invalid_argument("downsample_fisher: empty slice");
    if (runs == 0) throw std::invalid_argument("downsample_fisher: runs must be positive");
    DownsampleFisherResult out;
    out.runs = runs;
    out.common_size = std::min(a.size(), b.size());
    out.low_run_warning = runs < 220;
    out.run_pvalues.reserve(runs);

    std::vector<double> sub_a(out.common_size), sub_b(out.common_size);
    for (std::size_t run = 0; run < runs; ++run) {
        Rng rng(derive_seed(seed, run));
        const auto idx_a = rng.sample_without_replacement(a.size(), out.common_size);
        const auto idx_b = rng.sample_without_replacement(b.size(), out.common_size);
        for (std::size_t i = 0; i < out.common_size; ++i) {
            sub_a[i] = a[idx_a[i]];
            sub_b[i] = b[idx_b[i]];
        }
        out.run_pvalues.push_back(mann_whitney(sub_a, sub_b).p_value);
    }
    out.combined = fisher_combine(out.run_pvalues);
    return out;
}

}  // namespace newsbias::stats
