#pragma once

namespace xg::stats {

/// Regularized upper incomplete gamma Q(a, x): series for x < a + 1,
/// Lentz continued fraction otherwise.
double regularized_gamma_q(double a, double x);

/// Regularized lower incomplete gamma P(a, x) = 1 - Q(a, x), computed on
/// the side that keeps small values accurate.
double regularized_gamma_p(double a, double x);

/// Upper-tail chi-square probability Q(dof/2, stat/2).
/// Throws std::invalid_argument for dof == 0 or stat < 0.
double chi_square_pvalue(double stat, unsigned dof);

/// Upper tail of the standard normal: 0.5 * erfc(z / sqrt(2)).
double normal_pvalue(double z);

/// P(X >= k) for X ~ Poisson(lambda); equals P(k, lambda) for k >= 1.
double poisson_upper_tail(unsigned long k, double lambda);

} // namespace xg::stats
