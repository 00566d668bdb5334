#pragma once

namespace newsbias::stats {

// Log-gamma via the Lanczos approximation (g=7, 9 terms), x > 0.
double log_gamma(double x);

// Regularized incomplete gamma P(a,x) (lower) and Q(a,x) = 1 - P(a,x),
// a > 0, x >= 0. Series expansion for x < a+1, continued fraction otherwise;
// relative error < 1e-10 over the tested range.
double gamma_p(double a, double x);
double gamma_q(double a, double x);

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi2_sf(double x, double df);

// Regularized incomplete beta I_x(a,b), 0 <= x <= 1.
double inc_beta(double a, double b, double x);

// Two-sided p-value of a Student-t statistic with df degrees of freedom.
double t_sf_twosided(double t, double df);

// Standard normal CDF and survival function.
double normal_cdf(double z);
double normal_sf(double z);

}  // namespace newsbias::stats
