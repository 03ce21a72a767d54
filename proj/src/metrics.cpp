#include <wmofss/metrics.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

namespace wmofss {

bool pareto_dominates(std::span<const double> a, std::span<const double> b) noexcept
{
    bool strictly = false;
    for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j] > b[j]) {
            return false;
        }
        if (a[j] < b[j]) {
            strictly = true;
        }
    }
    return strictly;
}

double igd(const FrontSet &reference, const FrontSet &obtained)
{
    if (reference.empty() || obtained.empty()) {
        throw std::invalid_argument("igd: reference and obtained sets must be nonempty");
    }
    const std::size_t m = reference.front().size();
    auto check = [m](const FrontSet &s, const char *name) {
        for (const auto &p : s) {
            if (p.size() != m) {
                throw std::invalid_argument(std::string("igd: ") + name + " set has mixed dimensions");
            }
        }
    };
    check(reference, "reference");
    check(obtained, "obtained");

    double total = 0.0;
    for (const auto &r : reference) {
        double best = std::numeric_limits<double>::infinity();
        for (const auto &o : obtained) {
            double sq = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                const double d = r[j] - o[j];
                sq += d * d;
            }
            best = std::min(best, sq);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

std::vector<std::size_t> pareto_filter_indices(const FrontSet &set)
{
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < set.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < set.size() && !dominated; ++j) {
            dominated = j != i && pareto_dominates(set[j], set[i]);
        }
        if (!dominated) {
            keep.push_back(i);
        }
    }
    return keep;
}

FrontSet pareto_filter(const FrontSet &set)
{
    FrontSet out;
    for (auto i : pareto_filter_indices(set)) {
        out.push_back(set[i]);
    }
    return out;
}

StatSummary summarize(std::span<const double> values)
{
    if (values.empty()) {
        throw std::invalid_argument("summarize: no values");
    }
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());
    const std::size_t n = sorted.size();

    StatSummary s;
    s.n_runs = n;
    s.minimum = sorted.front();
    s.maximum = sorted.back();
    s.median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    s.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    if (n > 1) {
        double ss = 0.0;
        for (double v : values) {
            ss += (v - s.mean) * (v - s.mean);
        }
        s.standard_deviation = std::sqrt(ss / static_cast<double>(n - 1));
    }
    return s;
}

double chi_square_sf(double x, double df)
{
    if (!(df > 0.0)) {
        throw std::invalid_argument("chi_square_sf: degrees of freedom must be positive");
    }
    if (x <= 0.0) {
        return 1.0;
    }
    return boost::math::gamma_q(0.5 * df, 0.5 * x);
}

KruskalWallis kruskal_wallis(const std::vector<std::vector<double>> &groups)
{
    if (groups.size() < 2) {
        throw std::invalid_argument("kruskal_wallis: need at least two groups");
    }
    struct Obs {
        double value;
        std::size_t group;
    };
    std::vector<Obs> all;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        if (groups[g].empty()) {
            throw std::invalid_argument("kruskal_wallis: group " + std::to_string(g) + " is empty");
        }
        for (double v : groups[g]) {
            all.push_back({v, g});
        }
    }
    std::sort(all.begin(), all.end(), [](const Obs &a, const Obs &b) { return a.value < b.value; });

    const auto n = static_cast<double>(all.size());
    std::vector<double> rank_sum(groups.size(), 0.0);
    double tie_term = 0.0; // sum of t^3 - t over tie blocks
    for (std::size_t i = 0; i < all.size();) {
        std::size_t j = i;
        while (j < all.size() && all[j].value == all[i].value) {
            ++j;
        }
        const double mid_rank = 0.5 * static_cast<double>(i + 1 + j);
        for (std::size_t k = i; k < j; ++k) {
            rank_sum[all[k].group] += mid_rank;
        }
        const auto t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        i = j;
    }

    KruskalWallis result;
    result.df = groups.size() - 1;
    const double correction = 1.0 - tie_term / (n * n * n - n);
    if (correction <= 0.0) {
        result.h = 0.0;
        result.p_value = 1.0;
        return result;
    }
    double h = 0.0;
    for (std::size_t g = 0; g < groups.size(); ++g) {
        h += rank_sum[g] * rank_sum[g] / static_cast<double>(groups[g].size());
    }
    h = 12.0 / (n * (n + 1.0)) * h - 3.0 * (n + 1.0);
    result.h = std::max(0.0, h / correction);
    result.p_value = chi_square_sf(result.h, static_cast<double>(result.df));
    return result;
}

char pairwise_verdict(std::span<const double> a, std::span<const double> b, double alpha)
{
    const std::vector<std::vector<double>> groups{{a.begin(), a.end()}, {b.begin(), b.end()}};
    const auto kw = kruskal_wallis(groups);
    if (kw.p_value >= alpha) {
        return '=';
    }
    // Compare mean ranks: the group with lower ranks has lower IGD.
    double below = 0.0;
    for (double x : a) {
        for (double y : b) {
            below += x < y ? 1.0 : (x == y ? 0.5 : 0.0);
        }
    }
    const double half = 0.5 * static_cast<double>(a.size() * b.size());
    if (below > half) {
        return '+';
    }
    if (below < half) {
        return '-';
    }
    return '=';
}

} // namespace wmofss
