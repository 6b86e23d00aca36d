#include "interference/stats.hpp"

#include <cmath>
#include <limits>

#include "interference/errors.hpp"

namespace interference {

namespace {

// series expansion, reliable for x < a + 1
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= x / (a + k);
        sum += term;
        if (std::abs(term) < std::abs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Lentz continued fraction for Q(a, x), reliable for x >= a + 1
double gamma_q_contfrac(double a, double x) {
    const double tiny = std::numeric_limits<double>::min() / 1e-30;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (a <= 0.0 || x < 0.0) throw domain_error("regularized_gamma_p: bad arguments");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double chi_squared_pvalue(double statistic, int dof) {
    if (dof < 1) throw domain_error("chi_squared_pvalue: dof must be positive");
    if (statistic <= 0.0) return 1.0;
    return 1.0 - regularized_gamma_p(0.5 * dof, 0.5 * statistic);
}

ChiSquaredResult chi_squared_gof(const std::vector<std::uint64_t>& counts,
                                 const std::vector<double>& probabilities,
                                 std::uint64_t total) {
    if (counts.size() != probabilities.size())
        throw domain_error("chi_squared_gof: size mismatch");
    double stat = 0.0;
    int bins = 0;
    double pooled_expected = 0.0;
    std::uint64_t pooled_count = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        const double expected = probabilities[i] * static_cast<double>(total);
        if (expected < 5.0) {
            pooled_expected += expected;
            pooled_count += counts[i];
            continue;
        }
        const double diff = static_cast<double>(counts[i]) - expected;
        stat += diff * diff / expected;
        ++bins;
    }
    if (pooled_expected > 0.0) {
        const double diff = static_cast<double>(pooled_count) - pooled_expected;
        stat += diff * diff / pooled_expected;
        ++bins;
    }
    if (bins < 2) throw input_error("chi_squared_gof: not enough populated bins");
    return {stat, bins - 1, chi_squared_pvalue(stat, bins - 1)};
}

}  // namespace interference
