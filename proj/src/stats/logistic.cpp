#include "newsbias/stats/logistic.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "newsbias/stats/special.hpp"

namespace newsbias::stats {

namespace {

constexpr std::size_t kParams = 3;
constexpr double kGradTol = 1e-8;
constexpr std::size_t kMaxIter = 100;

using Mat3 = std::array<std::array<double, kParams>, kParams>;
using Vec3 = std::array<double, kParams>;

// Solves A x = b by Gaussian elimination with partial pivoting.
Vec3 solve3(Mat3 a, Vec3 b) {
    for (std::size_t col = 0; col < kParams; ++col) {
        std::size_t pivot = col;
        for (std::size_t r = col + 1; r < kParams; ++r) {
            if (std::fabs(a[r][col]) > std::fabs(a[pivot][col])) pivot = r;
        }
        if (std::fabs(a[pivot][col]) < 1e-12) {
            throw std::runtime_error("logistic_fit: singular information matrix");
        }
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (std::size_t r = col + 1; r < kParams; ++r) {
            const double f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < kParams; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    Vec3 x{};
    for (std::size_t ri = kParams; ri-- > 0;) {
        double s = b[ri];
        for (std::size_t c = ri + 1; c < kParams; ++c) s -= a[ri][c] * x[c];
        x[ri] = s / a[ri][ri];
    }
    return x;
}

Mat3 invert3(const Mat3& a) {
    Mat3 inv{};
    for (std::size_t col = 0; col < kParams; ++col) {
        Vec3 e{};
        e[col] = 1.0;
        const Vec3 x = solve3(a, e);
        for (std::size_t r = 0; r < kParams; ++r) inv[r][col] = x[r];
    }
    return inv;
}

double sigmoid(double z) {
    if (z >= 0) {
        return 1.0 / (1.0 + std::exp(-z));
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

double bernoulli_loglik(double p, int y) {
    // Guarded in callers: p in (0,1) at any finite coefficients.
    return y ? std::log(p) : std::log1p(-p);
}

const char* level_name(Sentiment s) {
    switch (s) {
        case Sentiment::Negative: return "Negative";
        case Sentiment::Neutral: return "Neutral";
        case Sentiment::Positive: return "Positive";
    }
    return "?";
}

}  // namespace

double LogisticModel::predict_probability(Sentiment s) const {
    double z = intercept;
    if (s == Sentiment::Neutral) z += beta_neutral;
    if (s == Sentiment::Positive) z += beta_positive;
    return sigmoid(z);
}

LogisticModel logistic_fit(std::span<const Sentiment> sentiment, std::span<const int> sympathy) {
    const std::size_t n = sentiment.size();
    if (n != sympathy.size()) throw std::invalid_argument("logistic_fit: length mismatch");
    if (n < kParams) throw std::invalid_argument("logistic_fit: too few observations");

    std::array<std::size_t, 3> level_count{};
    std::array<std::size_t, 3> level_pos{};
    std::size_t total_pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const auto s = static_cast<std::size_t>(sentiment[i]);
        if (s > 2) throw std::invalid_argument("logistic_fit: bad sentiment code");
        if (sympathy[i] != 0 && sympathy[i] != 1) {
            throw std::invalid_argument("logistic_fit: sympathy must be binary 0/1");
        }
        ++level_count[s];
        level_pos[s] += static_cast<std::size_t>(sympathy[i]);
        total_pos += static_cast<std::size_t>(sympathy[i]);
    }
    if (total_pos == 0 || total_pos == n) {
        throw std::invalid_argument("logistic_fit: both sympathy classes must be present");
    }
    for (std::size_t s = 0; s < 3; ++s) {
        if (level_count[s] == 0) {
            throw std::invalid_argument(std::string("logistic_fit: degenerate design, sentiment level '") +
                                        level_name(static_cast<Sentiment>(s)) + "' is absent");
        }
        if (level_pos[s] == 0 || level_pos[s] == level_count[s]) {
            throw std::invalid_argument(std::string("logistic_fit: complete separation at sentiment level '") +
                                        level_name(static_cast<Sentiment>(s)) + "'");
        }
    }

    // Row of the design matrix for observation i: (1, [S=Neutral], [S=Positive]).
    const auto design = [&](std::size_t i) -> Vec3 {
        Vec3 x{1.0, 0.0, 0.0};
        if (sentiment[i] == Sentiment::Neutral) x[1] = 1.0;
        if (sentiment[i] == Sentiment::Positive) x[2] = 1.0;
        return x;
    };

    Vec3 beta{0.0, 0.0, 0.0};
    std::size_t iter = 0;
    bool converged = false;
    Mat3 info{};
    for (; iter < kMaxIter; ++iter) {
        Vec3 grad{};
        info = Mat3{};
        for (std::size_t i = 0; i < n; ++i) {
            const Vec3 x = design(i);
            const double z = beta[0] * x[0] + beta[1] * x[1] + beta[2] * x[2];
            const double p = sigmoid(z);
            const double w = p * (1.0 - p);
            const double resid = static_cast<double>(sympathy[i]) - p;
            for (std::size_t r = 0; r < kParams; ++r) {
                grad[r] += x[r] * resid;
                for (std::size_t c = 0; c < kParams; ++c) info[r][c] += w * x[r] * x[c];
            }
        }
        double grad_norm = 0.0;
        for (double g : grad) grad_norm = std::max(grad_norm, std::fabs(g));
        if (grad_norm < kGradTol) {
            converged = true;
            break;
        }
        const Vec3 step = solve3(info, grad);
        for (std::size_t r = 0; r < kParams; ++r) beta[r] += step[r];
    }

    // Information at the final coefficients (also refreshes after last step).
    info = Mat3{};
    double loglik = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 x = design(i);
        const double z = beta[0] * x[0] + beta[1] * x[1] + beta[2] * x[2];
        const double p = sigmoid(z);
        const double w = p * (1.0 - p);
        for (std::size_t r = 0; r < kParams; ++r) {
            for (std::size_t c = 0; c < kParams; ++c) info[r][c] += w * x[r] * x[c];
        }
        loglik += bernoulli_loglik(p, sympathy[i]);
    }
    const Mat3 cov = invert3(info);

    const double p_null = static_cast<double>(total_pos) / static_cast<double>(n);
    const double loglik_null = static_cast<double>(total_pos) * std::log(p_null) +
                               static_cast<double>(n - total_pos) * std::log1p(-p_null);

    LogisticModel model;
    model.intercept = beta[0];
    model.beta_neutral = beta[1];
    model.beta_positive = beta[2];
    model.se_intercept = std::sqrt(cov[0][0]);
    model.se_neutral = std::sqrt(cov[1][1]);
    model.se_positive = std::sqrt(cov[2][2]);
    model.deviance = -2.0 * loglik;
    model.null_deviance = -2.0 * loglik_null;
    model.aic = model.deviance + 2.0 * static_cast<double>(kParams);
    model.mcfadden_r2 = 1.0 - loglik / loglik_null;
    model.lr_chi2 = model.null_deviance - model.deviance;
    model.lr_p_value = chi2_sf(model.lr_chi2, 2.0);
    model.n = n;
    model.iterations = iter;
    model.converged = converged;
    return model;
}

}  // namespace newsbias::stats
