#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace newsbias::stats {

enum class Sentiment : std::uint8_t { Negative = 0, Neutral = 1, Positive = 2 };

// Binomial logit of sympathy on dummy-coded sentiment (Negative is the
// reference level): logit(p) = b0 + b_neutral*[S=Neutral] + b_positive*[S=Positive].
struct LogisticModel {
    double intercept = 0.0;
    double beta_neutral = 0.0;
    double beta_positive = 0.0;
    double se_intercept = 0.0;
    double se_neutral = 0.0;
    double se_positive = 0.0;
    double deviance = 0.0;
    double null_deviance = 0.0;
    double aic = 0.0;
    double mcfadden_r2 = 0.0;
    double lr_chi2 = 0.0;    // null vs model likelihood-ratio statistic
    double lr_p_value = 1.0; // df = 2
    std::size_t n = 0;
    std::size_t iterations = 0;
    bool converged = false;

    double predict_probability(Sentiment s) const;
};

// Maximum-likelihood fit via iteratively reweighted least squares, converged
// at gradient max-norm < 1e-8 or 100 iterations. Throws std::invalid_argument
// on mismatched lengths, a single sympathy class, an absent sentiment level
// (constant dummy column), or complete separation (a sentiment level whose
// sympathy outcome is constant), naming the offending level.
LogisticModel logistic_fit(std::span<const Sentiment> sentiment, std::span<const int> sympathy);

}  // namespace newsbias::stats
