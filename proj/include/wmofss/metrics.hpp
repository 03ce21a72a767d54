#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <wmofss/problems.hpp>

namespace wmofss {

using FrontSet = std::vector<ObjectiveVector>;

/// Minimization Pareto dominance: a <= b everywhere and a != b somewhere.
bool pareto_dominates(std::span<const double> a, std::span<const double> b) noexcept;

/// Mean over reference points of the distance to the nearest obtained point.
/// @throws std::invalid_argument if either set is empty or dimensions differ
double igd(const FrontSet &reference, const FrontSet &obtained);

/// Indices of points not dominated by any other point, in input order.
/// Equal points do not dominate each other, so duplicates survive together.
std::vector<std::size_t> pareto_filter_indices(const FrontSet &set);

FrontSet pareto_filter(const FrontSet &set);

struct StatSummary {
    double median = 0.0;
    double maximum = 0.0;
    double minimum = 0.0;
    double mean = 0.0;
    double standard_deviation = 0.0;
    std::size_t n_runs = 0;

    bool operator==(const StatSummary &) const = default;
};

/// Order statistics plus mean and sample standard deviation (n - 1 divisor,
/// zero for a single value).
/// @throws std::invalid_argument on empty input
StatSummary summarize(std::span<const double> values);

/// Upper tail of the chi-square distribution, P(X > x) for `df` degrees of freedom.
double chi_square_sf(double x, double df);

struct KruskalWallis {
    double h = 0.0;
    double p_value = 1.0;
    std::size_t df = 0;
};

/// Rank test on mid-ranks with tie correction. When every observation is tied
/// the statistic is defined as 0 and p as 1.
/// @throws std::invalid_argument with fewer than two groups or an empty group
KruskalWallis kruskal_wallis(const std::vector<std::vector<double>> &groups);

/// '+' when `a` is significantly lower (better) than `b`, '-' when
/// significantly higher, '=' otherwise.
char pairwise_verdict(std::span<const double> a, std::span<const double> b, double alpha = 0.05);

} // namespace wmofss
