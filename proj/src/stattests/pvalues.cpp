#include "xg/stattests/pvalues.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace xg::stats {

namespace {

// Series expansion of P(a, x); converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < 10000; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17)
            break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Modified Lentz continued fraction for Q(a, x); converges for x >= a + 1.
double gamma_q_cf(double a, double x) {
    constexpr double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 10000; ++i) {
        double an = -static_cast<double>(i) * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-17)
            break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace

double regularized_gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw std::invalid_argument("gamma_p requires a > 0, x >= 0");
    if (x == 0.0)
        return 0.0;
    return x < a + 1.0 ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double regularized_gamma_q(double a, double x) {
    if (a <= 0.0 || x < 0.0)
        throw std::invalid_argument("gamma_q requires a > 0, x >= 0");
    if (x == 0.0)
        return 1.0;
    return x < a + 1.0 ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_pvalue(double stat, unsigned dof) {
    if (dof == 0)
        throw std::invalid_argument("chi-square needs dof >= 1");
    if (stat < 0.0)
        throw std::invalid_argument("chi-square statistic must be nonnegative");
    return regularized_gamma_q(dof / 2.0, stat / 2.0);
}

double normal_pvalue(double z) { return 0.5 * std::erfc(z / std::sqrt(2.0)); }

double poisson_upper_tail(unsigned long k, double lambda) {
    if (lambda < 0.0)
        throw std::invalid_argument("Poisson mean must be nonnegative");
    if (k == 0)
        return 1.0;
    return regularized_gamma_p(static_cast<double>(k), lambda);
}

} // namespace xg::stats
