#pragma once

#include <cstdint>
#include <vector>

namespace interference {

/// Regularized lower incomplete gamma P(a, x).
double regularized_gamma_p(double a, double x);

/// Upper tail of the chi-squared distribution with `dof` degrees of freedom.
double chi_squared_pvalue(double statistic, int dof);

struct ChiSquaredResult {
    double statistic;
    int dof;
    double pvalue;
};

/// Pearson goodness-of-fit of observed counts against expected probabilities.
/// Bins with expected count below 5 are pooled into a single tail bin before
/// the statistic is formed; dof = bins - 1.
ChiSquaredResult chi_squared_gof(const std::vector<std::uint64_t>& counts,
                                 const std::vector<double>& probabilities,
                                 std::uint64_t total);

}  // namespace interference
