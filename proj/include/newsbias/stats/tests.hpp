#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace newsbias::stats {

struct ContingencyTable {
    std::vector<std::string> row_names;
    std::vector<std::string> col_names;
    std::vector<std::vector<std::int64_t>> counts;  // counts[row][col] >= 0

    std::size_t rows() const { return counts.size(); }
    std::size_t cols() const { return counts.empty() ? 0 : counts[0].size(); }
    std::int64_t total() const;
    std::int64_t row_sum(std::size_t r) const;
    std::int64_t col_sum(std::size_t c) const;
};

struct TestResult {
    double statistic = 0.0;
    double p_value = 1.0;
    double effect_size = 0.0;
    double df = 0.0;
    std::size_t n = 0;
    bool defined = true;  // false => undefined-signal (constant input etc.)
};

struct ChiSquareResult : TestResult {
    double phi = 0.0;
    std::optional<double> odds_ratio;  // empty when a cell is zero
};

struct MannWhitneyResult {
    double u = 0.0;  // U statistic of the first sample
    double z = 0.0;  // tie-corrected normal approximation
    double p_value = 1.0;          // two-sided, normal approximation
    std::optional<double> p_exact; // permutation p, computed when n_x+n_y <= 10
    double r = 0.0;                // effect size z / sqrt(n_x + n_y)
    std::size_t n_x = 0;
    std::size_t n_y = 0;
};

struct FisherCombination {
    double statistic = 0.0;
    std::size_t df = 0;  // 2k
    double p_value = 1.0;
    std::size_t k = 0;
};

struct DownsampleFisherResult {
    FisherCombination combined;
    std::vector<double> run_pvalues;
    std::size_t common_size = 0;
    std::size_t runs = 0;
    bool low_run_warning = false;  // runs below the power-analysis minimum of 220
};

// Average ranks (1-based, ties share the mean rank).
std::vector<double> average_ranks(std::span<const double> values);

// 2x2 chi-square with Yates' continuity correction; phi = sqrt(chi2/N),
// odds ratio a*d/(b*c). Throws on non-2x2 input or a zero margin.
ChiSquareResult chi_square_yates(const ContingencyTable& table);

// Spearman rank correlation; p via the t approximation with n-2 df.
// Constant input yields defined == false.
TestResult spearman(std::span<const double> x, std::span<const double> y);

// Cramer's V from the uncorrected chi-square. Throws on degenerate tables.
double cramers_v(const ContingencyTable& table);

// Mann-Whitney U with average ranks, tie-corrected variance and (optional)
// continuity correction; exact permutation p for pooled size <= 10.
MannWhitneyResult mann_whitney(std::span<const double> x, std::span<const double> y,
                               bool continuity_correction = true);

// Fisher's method: -2 sum log p_i ~ chi2(2k). Throws if any p is outside (0,1].
FisherCombination fisher_combine(std::span<const double> pvalues);

// Repeated seeded downsampling of both label vectors to the smaller size,
// Mann-Whitney per run, Fisher combination over the per-run p-values.
DownsampleFisherResult downsample_fisher(std::span<const double> a, std::span<const double> b,
                                         std::size_t runs, std::uint64_t seed);

}  // namespace newsbias::stats
